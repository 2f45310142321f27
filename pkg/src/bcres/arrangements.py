"""Hyperplane arrangement front-end: associated matroids, coning, product
detection, circuit-boundary generator emission, and the Koszul-style
characterization reports driven by matroid decomposition.

An arrangement is a rational matrix of normal columns; everything
downstream (independence, circuits, dependency coefficients) is exact
linear algebra over the rationals.
"""

from fractions import Fraction

from .decomposition import stratify, two_term_decomposition
from .errors import BoundError, InputError
from .linalg import column_rank, integer_primitive, nullspace, solve
from .matroid import Matroid, linear_matroid


class Arrangement:
    """Central arrangement: one rational normal column per hyperplane."""

    __slots__ = ("normals", "labels")

    def __init__(self, normals, labels=None):
        cols = [tuple(Fraction(v) for v in col) for col in normals]
        if not cols:
            raise InputError("arrangement needs at least one hyperplane")
        height = len(cols[0])
        if any(len(c) != height for c in cols):
            raise InputError("non-rectangular normal matrix")
        if any(all(v == 0 for v in c) for c in cols):
            raise InputError("zero normal column")
        if labels is None:
            labels = tuple(range(1, len(cols) + 1))
        labels = tuple(labels)
        if len(labels) != len(cols) or len(set(labels)) != len(labels):
            raise InputError("hyperplane labels must be unique, one per column")
        object.__setattr__(self, "normals", tuple(cols))
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("Arrangement is immutable")

    @property
    def dimension(self):
        return len(self.normals[0])

    @property
    def size(self):
        return len(self.normals)

    @property
    def is_essential(self):
        return column_rank(list(self.normals)) == self.dimension

    def __repr__(self):
        return "Arrangement(n=%d, dim=%d)" % (self.size, self.dimension)


def matroid_of_arrangement(arrangement):
    """Linear matroid of the normal columns."""
    m = linear_matroid(arrangement.normals, labels=arrangement.labels)
    return Matroid(m.ground, m.circuits, origin="arrangement", validate=False)


def cone_arrangement(arrangement):
    """Cone: pad every normal with a zero coordinate and append the new axis."""
    dim = arrangement.dimension
    cols = [col + (Fraction(0),) for col in arrangement.normals]
    cols.append(tuple(Fraction(0) for _ in range(dim)) + (Fraction(1),))
    labels = arrangement.labels + (_next_label(arrangement.labels),)
    return Arrangement(cols, labels)


def _next_label(labels):
    ints = [lab for lab in labels if isinstance(lab, int)]
    nxt = (max(ints) + 1) if ints else 1
    while nxt in labels:
        nxt += 1
    return nxt


def detect_product(arrangement):
    """Factor the arrangement along the connected components of its matroid.

    Each factor is re-expressed in a rational basis of its own span, so
    factors are genuine lower-dimensional arrangements whose matroid
    direct sum reproduces the whole.
    """
    if not arrangement.is_essential:
        raise InputError("product detection needs an essential arrangement")
    matroid = matroid_of_arrangement(arrangement)
    components, _ = matroid.components_and_coloops()
    by_label = dict(zip(arrangement.labels, arrangement.normals))
    factors = []
    for comp in components:
        labels = tuple(lab for lab in arrangement.labels if lab in comp)
        cols = [by_label[lab] for lab in labels]
        basis = _column_space_basis(cols)
        coords = []
        for col in cols:
            x = solve([[b[i] for b in basis] for i in range(len(col))], list(col))
            assert x is not None
            coords.append(tuple(x))
        factors.append(Arrangement(coords, labels))
    return factors


def _column_space_basis(cols):
    basis = []
    for col in cols:
        if column_rank(basis + [col]) > len(basis):
            basis.append(col)
    return basis


def os_ot_generators(arrangement, order=None):
    """Orlik-Solomon and Orlik-Terao generators per circuit of the matroid.

    The OS generator of a circuit is its alternating boundary; the OT
    generator weights the boundary with the (unique up to scale) rational
    dependency of the normals, normalized to coprime integers whose
    leading coefficient (at the order-minimal element) is positive.
    """
    matroid = matroid_of_arrangement(arrangement)
    by_label = dict(zip(arrangement.labels, arrangement.normals))
    rank_in_order = {lab: i for i, lab in enumerate(order or arrangement.labels)}
    os_gens = []
    ot_gens = []
    for circuit in matroid.circuits:
        elems = sorted(circuit, key=rank_in_order.get)
        cols = [by_label[lab] for lab in elems]
        kernel = nullspace([[col[i] for col in cols] for i in range(len(cols[0]))])
        if len(kernel) != 1:
            raise AssertionError("circuit dependency space must be one-dimensional")
        coeffs = integer_primitive(kernel[0])
        os_terms = []
        ot_terms = []
        for j, lab in enumerate(elems):
            rest = tuple(e for e in elems if e != lab)
            sign = (-1) ** j
            os_terms.append({"sign": sign, "monomial": rest})
            ot_terms.append({"coefficient": sign * coeffs[j], "monomial": rest})
        os_gens.append({"circuit": tuple(elems), "terms": os_terms})
        ot_gens.append(
            {"circuit": tuple(elems), "dependency": tuple(coeffs), "terms": ot_terms}
        )
    return {"orlik_solomon": os_gens, "orlik_terao": ot_gens}


def koszul_report(arrangement, order=None):
    """Koszul and graded-Koszul characterization verdicts for the arrangement.

    Reports (a) the complete-intersection proxy (pairwise-disjoint minimal
    broken circuits), (b) the two-term decomposition with s = 2, and
    (c) the stratified decomposition; the final verdict quotes whichever
    characterization applies.  Koszulness itself is never computed.
    """
    if not arrangement.is_essential:
        raise InputError("Koszul report needs an essential arrangement")
    matroid = matroid_of_arrangement(arrangement)
    report = {
        "n": arrangement.size,
        "dimension": arrangement.dimension,
        "simple": matroid.is_simple,
    }
    if not matroid.is_loopless:
        report["verdict"] = "not applicable: matroid has loops"
        return report
    bcs = matroid.broken_circuits(order)
    ci_broken = all(
        a.isdisjoint(b) for i, a in enumerate(bcs) for b in bcs[i + 1 :]
    )
    report["ci_broken_circuits"] = ci_broken
    cert = two_term_decomposition(matroid)
    two_term_s2 = cert is not None and cert.s == 2
    report["two_term_s2"] = two_term_s2
    report["two_term"] = cert.as_dict() if cert else None
    try:
        strat = stratify(matroid)
        report["stratification"] = strat.as_dict(matroid) if strat else None
        strat_found = strat is not None
    except BoundError as exc:
        report["stratification"] = "inconclusive: %s" % exc
        strat_found = None
    # the broken-circuit CI test is a labeled proxy, reported alongside the
    # verdict rather than gating it
    if not matroid.circuits:
        report["verdict"] = "Koszul (zero ideals)"
    elif two_term_s2:
        report["verdict"] = "Koszul (s=2 uniform decomposition)"
    elif strat_found:
        report["verdict"] = "graded-Koszul (stratified decomposition)"
    elif strat_found is None:
        report["verdict"] = "inconclusive: stratification bound"
    else:
        report["verdict"] = "criteria not met / precondition unverified"
    return report
