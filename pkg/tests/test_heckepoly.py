import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke_zeros.errors import BadNormalization, SpecError
from hecke_zeros.hecke import EigenvalueSource
from hecke_zeros.heckepoly import (
    WeakEigenformSpec,
    builtin_R_spec,
    endpoint_report,
    expected_degree,
    expected_interior_zeros,
    hecke_polynomial,
    hn_lower_part,
    load_spec,
    predicted_endpoint_zeros,
)
from hecke_zeros.modforms import b_exp
from hecke_zeros.qseries import bernoulli
from hecke_zeros.rpoly import RPoly


def poincare_spec(k):
    # the constant term of the weight 2-k Poincare series with principal part q^-1 is 2k/B_k
    return WeakEigenformSpec(k, 1, (1,), 2 * k / bernoulli(k), EigenvalueSource.builtin(k))


def test_R_constant(R):
    assert R.constant == Fraction(-65520, 691)
    assert poincare_spec(12) == R


def test_P2_golden(R):
    lower = hn_lower_part(R, 2)
    assert lower.terms() == {-2: 1, -1: -240, 0: -338328}
    assert hecke_polynomial(R, 2).poly == RPoly((0, -1728, 1))


def test_P3_factors(R):
    assert hecke_polynomial(R, 3).poly == RPoly.from_roots([0, 768, 1728])


@given(st.integers(2, 25))
@settings(max_examples=10, deadline=None)
def test_R_degree_and_monic(n):
    res = hecke_polynomial(builtin_R_spec(), n)
    assert res.degree == n
    assert res.poly.is_monic()
    assert res.zero_at_0 and res.zero_at_1728


def test_result_json(R):
    doc = hecke_polynomial(R, 2).to_json()
    assert doc == {"n": 2, "degree": 2, "coeffs": ["0", "-1728", "1"], "zero_at_0": True, "zero_at_1728": True}


def test_precision_does_not_change_answer(R):
    assert hecke_polynomial(R, 5).poly == hecke_polynomial(R, 5, N=60).poly


def test_spec_json_roundtrip(R):
    doc = R.to_json()
    assert doc == {
        "k": 12,
        "m": 1,
        "principal": ["1"],
        "constant": "-65520/691",
        "eigenvalues": {"kind": "builtin-dim1", "k": 12},
    }
    assert WeakEigenformSpec.from_json(json.dumps(doc)) == R
    assert load_spec(doc) == R
    assert load_spec("R") == R


def test_spec_from_file(tmp_path, R):
    p = tmp_path / "spec.json"
    p.write_text(json.dumps(R.to_json()))
    assert load_spec(str(p)) == R
    with pytest.raises(SpecError):
        load_spec(str(tmp_path / "missing.json"))


def test_list_eigenvalues_match_builtin(R):
    from hecke_zeros.modforms import delta

    D = delta(10)
    spec = WeakEigenformSpec(12, 1, (1,), R.constant, EigenvalueSource.from_values({n: D[n] for n in range(1, 11)}))
    for n in (2, 3, 7):
        assert hecke_polynomial(spec, n).poly == hecke_polynomial(R, n).poly


@pytest.mark.parametrize(
    "bad",
    [
        "not json",
        "[]",
        {"k": 12},
        {"k": 11, "m": 1, "principal": ["1"], "constant": "0", "eigenvalues": {"kind": "builtin-dim1", "k": 12}},
        {"k": 12, "m": 2, "principal": ["1"], "constant": "0", "eigenvalues": {"kind": "builtin-dim1", "k": 12}},
        {"k": 12, "m": 1, "principal": ["x"], "constant": "0", "eigenvalues": {"kind": "builtin-dim1", "k": 12}},
        {"k": 16, "m": 1, "principal": ["1"], "constant": "0", "eigenvalues": {"kind": "builtin-dim1", "k": 12}},
        {"k": 12, "m": 1, "principal": ["1"], "constant": "0", "eigenvalues": {"kind": "nope"}},
    ],
)
def test_bad_specs(bad):
    with pytest.raises(SpecError):
        WeakEigenformSpec.from_json(bad if isinstance(bad, str) else json.dumps(bad))


def test_bad_normalization():
    with pytest.raises(BadNormalization):
        WeakEigenformSpec(12, 1, (2,), 0, EigenvalueSource.builtin(12))


def test_m2_spec_degree():
    spec = WeakEigenformSpec(12, 2, (1, 5), 3, EigenvalueSource.builtin(12))
    for n in (2, 3):
        assert hecke_polynomial(spec, n).degree == 2 * n


@pytest.mark.parametrize("k", [12, 16, 18, 20, 22, 26])
def test_other_weights_build(k):
    spec = WeakEigenformSpec(k, 1, (1,), 0, EigenvalueSource.builtin(k))
    for n in (2, 3, 4):
        res = hecke_polynomial(spec, n)
        assert res.degree == expected_degree(spec, n) == n - b_exp(k - 2)


def test_endpoint_table():
    assert predicted_endpoint_zeros(12) == {"pi/3", "pi/2"}
    assert predicted_endpoint_zeros(14) == set()
    assert predicted_endpoint_zeros(18) == {"pi/3"}
    assert predicted_endpoint_zeros(20) == {"pi/2"}


@pytest.mark.parametrize("k", [12, 16, 18, 20, 22, 26])
def test_endpoint_zeros_match_table(k):
    spec = poincare_spec(k)
    rep = endpoint_report(spec, 5)
    assert rep["actual_zero_at_0"] == rep["predicted_zero_at_0"]
    assert rep["actual_zero_at_1728"] == rep["predicted_zero_at_1728"]


@pytest.mark.parametrize("k", [12, 16, 18, 20, 22, 26])
def test_zero_count_bookkeeping(k):
    spec = poincare_spec(k)
    for n in (11, 20):
        total = expected_interior_zeros(spec, n) + len(predicted_endpoint_zeros(k))
        assert total == expected_degree(spec, n)
