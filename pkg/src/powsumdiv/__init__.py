"""powsumdiv: exact counts, heuristics and limiting densities for the
primes dividing the sequence a^k + b^k."""

from .arith import (
    Factorization,
    NotInvertibleError,
    euler_phi,
    factorize,
    legendre_symbol,
    log_integral,
    mod_inverse,
    mod_pow,
    moebius,
    p_adic_valuation,
    squarefree_kernel,
)
from .census import (
    CountAccumulator,
    InternalInconsistencyError,
    PrimeClassification,
    SweepPoint,
    SweepSeries,
    character_count,
    classify_prime,
    count_exact,
    formula_count,
    heuristic_counts,
    local_factor_k1,
    local_factor_k2,
    prime_stream,
    ramanujan_count,
    sweep,
    tail_sum,
)
from .cyclic import (
    CharacterTable,
    brute_force_valuation_count,
    character_order_sum,
    find_primitive_root,
    multiplicative_order,
    order_valuation_count,
    power_subgroup_size,
)
from .density import (
    DensityReport,
    cyclotomic_degree,
    delta_naive,
    delta_refined,
    delta_sign_difference,
    delta_table,
    density_report,
)
from .profile import (
    BaseProfile,
    DegenerateRatioError,
    ZeroInputError,
    decompose,
    special_prime_divides,
)
from .ramanujan import divisor_indicator, ramanujan_c, ramanujan_c_2pow

__version__ = "0.1.0"
