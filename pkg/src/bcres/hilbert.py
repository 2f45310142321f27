"""Hilbert functions and series of Stanley-Reisner quotients, and the
binomial-coefficient normal forms behind the linearity value criteria.

The Hilbert function of A/I for squarefree I comes from the f-vector of
the associated complex; a brute-force standard-monomial count provides the
cross-check.  The series numerator lives over (1-t)^dim; rewriting it over
(1-t)^codim, when possible, yields the integer coefficient vector that
plays the role of the Hilbert coefficients.
"""

from fractions import Fraction

from .complexes import f_h_vectors
from .errors import InputError
from .ideals import Monomial, complex_of_ideal
from .linalg import rref
from .util import binom, poly_mul, poly_shift_basis, poly_trim


class HilbertData:
    """Values, numerator over (1-t)^dim, and the (1-t)-basis coefficient vector."""

    __slots__ = ("values", "dim", "codim", "numerator", "coefficients", "width")

    def __init__(self, values, dim, codim, numerator, coefficients, width):
        object.__setattr__(self, "values", tuple(values))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "codim", codim)
        object.__setattr__(self, "numerator", tuple(numerator))
        object.__setattr__(
            self, "coefficients", tuple(coefficients) if coefficients is not None else None
        )
        object.__setattr__(self, "width", width)

    def __setattr__(self, name, value):
        raise AttributeError("HilbertData is immutable")

    def __repr__(self):
        return "HilbertData(dim=%d, codim=%d, numerator=%s, c=%s)" % (
            self.dim,
            self.codim,
            list(self.numerator),
            list(self.coefficients) if self.coefficients is not None else None,
        )


def standard_monomial_count(ideal, degree):
    """Number of degree-d monomials outside the ideal (brute force)."""
    from .ideals import _compositions

    return sum(
        1 for exps in _compositions(degree, ideal.nvars) if not ideal.contains(Monomial(exps))
    )


def ideal_monomial_count(ideal, degree):
    """dim_k of the ideal's degree-d graded piece, by enumeration."""
    return binom(degree + ideal.nvars - 1, degree) - standard_monomial_count(ideal, degree)


def series_values_from_numerator(numerator, dim, horizon):
    """Power-series coefficients of numerator / (1-t)^dim up to the horizon."""
    out = []
    for s in range(horizon + 1):
        total = 0
        for i, a in enumerate(numerator):
            if i > s:
                break
            total += a * binom(s - i + dim - 1, s - i)
        out.append(total)
    return out


def hilbert_function(ideal, horizon=None):
    """HilbertData of A/I for a squarefree monomial ideal.

    Values come from the f-vector of the Stanley-Reisner complex; the
    numerator N(t) satisfies series = N(t) / (1-t)^dim and is certified by
    the series identity, not by sampling.
    """
    if not ideal.squarefree:
        raise InputError("hilbert_function needs a squarefree ideal")
    if ideal.is_unit:
        raise InputError("unit ideal has no Stanley-Reisner quotient")
    n = ideal.nvars
    complex_ = complex_of_ideal(ideal)
    dim = complex_.dim + 1  # Krull dimension of the quotient
    codim = n - dim
    if horizon is None:
        horizon = n + (ideal.maxdeg() or 0) + 2
    if dim == 0:
        # only the empty face: the quotient is the base field
        numerator = [1]
        values = [1] + [0] * horizon
    else:
        f = f_h_vectors(complex_).f
        numerator = [0]
        for i, fi in enumerate(f):
            term = poly_mul([0] * i + [fi], _one_minus_t_power(dim - i))
            numerator = _poly_add(numerator, term)
        numerator = poly_trim(numerator)
        values = series_values_from_numerator(numerator, dim, horizon)
    coefficients = None
    width = None
    try:
        coefficients, width = _basis_coefficients(numerator, dim, codim)
    except InputError:
        pass
    return HilbertData(values, dim, codim, numerator, coefficients, width)


def _poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _one_minus_t_power(k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, [1, -1])
    return out


def _basis_coefficients(numerator, dim, q):
    """Coefficients c with series = sum c_i / (1-t)^(q-i), i.e. the numerator
    rewritten over (1-t)^q and expanded in the (1-t)-power basis."""
    if q >= dim:
        over_q = poly_mul(list(numerator), _one_minus_t_power(q - dim))
    else:
        # series has a pole of order dim; rewriting over (1-t)^q needs exact division
        over_q, rem = _poly_divmod_unit(list(numerator), _one_minus_t_power(dim - q))
        if any(rem):
            raise InputError("series denominator exponent exceeds q")
    c = poly_shift_basis(over_q)
    width = len(poly_trim(c))
    return poly_trim(c), width


def _poly_divmod_unit(p, q):
    from .util import poly_divmod

    return poly_divmod(p, q)


def binomial_form_fit(hdata, q=None):
    """Expansion of the Hilbert series in the basis 1/(1-t)^(q-i).

    Returns the integer coefficient list c, its width d, and verdict flags:
    whether d stays within q and whether sampled values reproduce.  Raises
    when the series cannot be written over (1-t)^q at all.
    """
    if q is None:
        q = hdata.codim
    c, width = _basis_coefficients(hdata.numerator, hdata.dim, q)
    checks = []
    for s in range(min(len(hdata.values), 6)):
        predicted = sum(ci * binom(s + q - i - 1, s) for i, ci in enumerate(c))
        checks.append(predicted == hdata.values[s])
    normalized = list(c)
    while normalized and normalized[0] == 0:
        normalized.pop(0)  # a leading zero is one less power of 1/(1-t)
    return {
        "c": tuple(c),
        "c_normalized": tuple(normalized),
        "d": width,
        "within_codim": width <= q,
        "values_reproduce": all(checks),
    }


def linear_value_criterion(ideal):
    """Single-value criterion at s = indeg: dim_k I_s == C(s + q - 1, s).

    q is the codimension (height) of the ideal, read from the complex of
    its radical.
    """
    if ideal.is_zero:
        return False
    if ideal.is_unit:
        return True
    s = ideal.indeg()
    radical = _radical(ideal)
    complex_ = complex_of_ideal(radical)
    dim = (complex_.dim + 1) if not complex_.is_void else 0
    q = ideal.nvars - dim
    return ideal_monomial_count(ideal, s) == binom(s + q - 1, s)


def _radical(ideal):
    from .ideals import MonomialIdeal

    gens = [Monomial(tuple(1 if e else 0 for e in g.exps)) for g in ideal.gens]
    return MonomialIdeal(ideal.names, gens)


def h_binomial_fit(h, q):
    """Least-width fit h_k = sum_l c_l * C(k + q - l - 1, k) below the zero tail.

    The cutoff is where the trailing zeros of h begin; the fit must be
    exact on every earlier value with width d <= q.  Returns the rational
    coefficient vector (integral in all verified cases), the cutoff, and
    the fit verdict.
    """
    h = list(h)
    cutoff = 0
    for k, v in enumerate(h):
        if v:
            cutoff = k + 1
    if cutoff == 0:
        return {"c": (), "cutoff": 0, "fits": True, "d": 0}
    target = h[:cutoff]
    for d in range(1, q + 1):
        rows = [[Fraction(binom(k + q - l - 1, k)) for l in range(d)] for k in range(cutoff)]
        solution = _solve_exact(rows, target)
        if solution is not None:
            return {
                "c": tuple(solution),
                "cutoff": cutoff,
                "fits": True,
                "d": d,
            }
    return {"c": None, "cutoff": cutoff, "fits": False, "d": None}


def _solve_exact(rows, rhs):
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    ncols = len(rows[0])
    for row in m:
        if all(v == 0 for v in row[:ncols]) and row[ncols] != 0:
            return None
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    out = []
    for v in x:
        out.append(int(v) if v.denominator == 1 else v)
    return out
