"""Hilbert data: f-vector route vs brute-force monomial counting, binomial fits."""

import pytest

from bcres.complexes import bc_complex, f_h_vectors
from bcres.errors import InputError
from bcres.hilbert import (
    binomial_form_fit,
    h_binomial_fit,
    hilbert_function,
    ideal_monomial_count,
    linear_value_criterion,
    standard_monomial_count,
)
from bcres.ideals import Monomial, MonomialIdeal, stanley_reisner_ideal
from bcres.matroid import uniform_matroid
from bcres.util import binom

V4 = tuple("x%d" % i for i in range(1, 5))


def ideal(names, *exp_tuples):
    return MonomialIdeal(names, [Monomial(e) for e in exp_tuples])


@pytest.fixture
def u24_ideal(u24):
    return stanley_reisner_ideal(bc_complex(u24))


def test_u24_hilbert(u24_ideal):
    hd = hilbert_function(u24_ideal)
    assert hd.values[:5] == (1, 4, 7, 10, 13)
    assert hd.numerator == (1, 2)
    assert hd.dim == 2 and hd.codim == 2
    assert hd.coefficients == (3, -2)
    assert hd.width == 2


def test_zero_ideal_full_ring():
    z = MonomialIdeal(("x1", "x2", "x3"), [])
    hd = hilbert_function(z)
    assert hd.dim == 3 and hd.codim == 0
    for s, v in enumerate(hd.values):
        assert v == binom(s + 2, s)


def test_maximal_ideal():
    m = ideal(("x1", "x2"), (1, 0), (0, 1))
    hd = hilbert_function(m)
    assert hd.values[:4] == (1, 0, 0, 0)
    assert hd.dim == 0 and hd.codim == 2
    assert hd.numerator == (1,)


def test_values_match_bruteforce(golden, u24_ideal):
    golden_ideal = stanley_reisner_ideal(bc_complex(golden))
    for i in (u24_ideal, golden_ideal, stanley_reisner_ideal(bc_complex(uniform_matroid(3, 6)))):
        hd = hilbert_function(i, horizon=10)
        for s in range(11):
            assert hd.values[s] == standard_monomial_count(i, s)


def test_binomial_form_fit_u24(u24_ideal):
    fit = binomial_form_fit(hilbert_function(u24_ideal))
    assert fit["c"] == (3, -2)
    assert fit["d"] == 2
    assert fit["within_codim"] and fit["values_reproduce"]


def test_binomial_form_fit_trivial():
    m = ideal(("x1", "x2"), (1, 0), (0, 1))
    fit = binomial_form_fit(hilbert_function(m))
    # series 1 over (1-t)^2: numerator (1-t)^2, coefficients (0, 0, 1)
    assert fit["values_reproduce"]
    # numerator 1 at any denominator exponent >= dim: the 1/(1-t)^q shape
    one = hilbert_function(MonomialIdeal(("x1",), []))
    for q in (1, 2, 5):
        fit2 = binomial_form_fit(one, q=q)
        assert fit2["c_normalized"] == (1,) and fit2["values_reproduce"]


def test_binomial_form_fit_pole_error(golden):
    # golden: dim 4, codim 2; the series cannot be written over (1-t)^2
    gi = stanley_reisner_ideal(bc_complex(golden))
    hd = hilbert_function(gi)
    assert hd.coefficients is None
    with pytest.raises(InputError):
        binomial_form_fit(hd)


def test_linear_value_criterion(u24_ideal):
    assert linear_value_criterion(u24_ideal) is True
    assert ideal_monomial_count(u24_ideal, 2) == 3 == binom(3, 2)
    cross = ideal(V4, (1, 1, 0, 0), (0, 0, 1, 1))
    assert ideal_monomial_count(cross, 2) == 2
    assert linear_value_criterion(cross) is False


def test_linear_value_criterion_power_of_max():
    # m^s in n variables: dim I_s = C(s+n-1, s), q = n
    names = ("x1", "x2", "x3")
    from bcres.ideals import power_ideal

    m = ideal(names, (1, 0, 0), (0, 1, 0), (0, 0, 1))
    for s in (1, 2, 3):
        p = power_ideal(m, s)
        assert linear_value_criterion(p) is True


def test_h_binomial_fit_slinear_pattern(u24):
    fh = f_h_vectors(bc_complex(u24))
    fit = h_binomial_fit(fh.h, q=2)
    assert fit["c"] == (1,) and fit["cutoff"] == 2 and fit["fits"]


def test_h_binomial_fit_boolean():
    fit = h_binomial_fit((1, 0, 0), q=3)
    assert fit["c"] == (1,) and fit["cutoff"] == 1 and fit["fits"]


def test_h_binomial_fit_full_length():
    fit = h_binomial_fit((1, 2, 3), q=2)
    assert fit["c"] == (1,) and fit["cutoff"] == 3 and fit["fits"]


def test_h_binomial_fit_failure():
    # h of In(U_{2,3} + U_{4,5}) is (1,2,3,3,3,2,1): not a width-<=2 pattern
    fit = h_binomial_fit((1, 2, 3, 3, 3, 2, 1), q=2)
    assert fit["fits"] is False


def test_h_binomial_fit_reproduces_values():
    # whenever a fit exists it must reproduce every pre-cutoff value exactly
    for h, q in [((1, 2, 0), 2), ((1, 3, 6), 3), ((1, 1, 1, 1), 1)]:
        fit = h_binomial_fit(h, q)
        if not fit["fits"]:
            continue
        for k in range(fit["cutoff"]):
            val = sum(c * binom(k + q - l - 1, k) for l, c in enumerate(fit["c"]))
            assert val == h[k]


def test_hilbert_betti_euler_consistency(golden, u24_ideal):
    # numerator over (1-t)^n equals 1 - sum (-1)^i beta_{ij} t^j
    from bcres.resolutions import betti_hochster
    from bcres.util import poly_mul, poly_trim

    for i in (u24_ideal, stanley_reisner_ideal(bc_complex(golden))):
        hd = hilbert_function(i)
        full = poly_trim(
            poly_mul(list(hd.numerator), _one_minus_t_pow(i.nvars - hd.dim))
        )
        alt = betti_hochster(i).alternating_sum_poly()
        expected = [-v for v in alt]
        expected[0] += 1
        assert full == poly_trim(expected)


def _one_minus_t_pow(k):
    from bcres.util import poly_mul

    out = [1]
    for _ in range(k):
        out = poly_mul(out, [1, -1])
    return out
