"""Suite dispatch and reduced-bound runs of each checker."""

import pytest

from powsumdiv import verify


def test_run_suite_dispatch(monkeypatch):
    fakes = {"group": lambda: (1, []), "densities": lambda: (2, ["bad"])}
    monkeypatch.setattr(verify, "SUITES", fakes)
    out = verify.run_suite("all")
    assert out == {"group": (1, []), "densities": (2, ["bad"])}
    assert verify.run_suite("group") == {"group": (1, [])}
    with pytest.raises(KeyError):
        verify.run_suite("nosuch")


def test_reduced_bounds_all_pass():
    checked, failures = verify.check_group(n_max=60, h_max=10, w_max=4)
    assert checked == 600 and failures == []
    checked, failures = verify.check_densities(bound=8)
    assert failures == []
    checked, failures = verify.check_oracle(p_limit=100, coeff_bound=4)
    assert failures == []
    checked, failures = verify.check_characters(p_max=30, x_char=100)
    assert failures == []
    checked, failures = verify.check_local_factors(
        p_limit=500, checkpoints=(100, 500))
    assert failures == []
