"""Kernel backends: exact rank routines and homology against a Fraction oracle.

Every importable backend (pure Python, compiled when built) must agree
with plain Gaussian elimination over Fractions on random matrices, and
with each other on homology and Hochster summations.
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from bcres._kernel import backends

BACKENDS = backends()


def fraction_rank(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    pr = 0
    for pc in range(nc):
        piv = next((i for i in range(pr, nr) if m[i][pc]), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        for i in range(pr + 1, nr):
            if m[i][pc]:
                f = m[i][pc] / m[pr][pc]
                m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
        rank += 1
        pr += 1
        if pr == nr:
            break
    return rank


def fraction_rank_mod_p(rows, p):
    m = [[v % p for v in r] for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    pr = 0
    for pc in range(nc):
        piv = next((i for i in range(pr, nr) if m[i][pc]), None)
        if piv is None:
            continue
        m[pr], m[piv] = m[piv], m[pr]
        inv = pow(m[pr][pc], p - 2, p)
        m[pr] = [v * inv % p for v in m[pr]]
        for i in range(pr + 1, nr):
            if m[i][pc]:
                f = m[i][pc]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[pr])]
        rank += 1
        pr += 1
        if pr == nr:
            break
    return rank


def random_matrix(rng, nr, nc, lo=-3, hi=3):
    return [[rng.randint(lo, hi) for _ in range(nc)] for _ in range(nr)]


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_rank_int_random(impl):
    rng = random.Random(1)
    for _ in range(60):
        nr, nc = rng.randint(1, 8), rng.randint(1, 8)
        m = random_matrix(rng, nr, nc)
        assert impl.rank_int(m) == fraction_rank(m)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_rank_int_singular_structured(impl):
    m = [[1, 2, 3], [2, 4, 6], [1, 1, 1]]
    assert impl.rank_int(m) == 2
    assert impl.rank_int([[0, 0], [0, 0]]) == 0
    assert impl.rank_int([[5]]) == 1


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_rank_int_big_values(impl):
    # entries beyond the int64 fast-path guard must still be exact
    big = 10**25
    m = [[big, 2 * big], [big, big]]
    assert impl.rank_int(m) == 2
    m2 = [[big, 2 * big], [2 * big, 4 * big]]
    assert impl.rank_int(m2) == 1


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
@pytest.mark.parametrize("p", [2, 3, 5, 32003])
def test_rank_mod_p_random(impl, p):
    rng = random.Random(p)
    for _ in range(40):
        nr, nc = rng.randint(1, 7), rng.randint(1, 7)
        m = random_matrix(rng, nr, nc, -6, 6)
        assert impl.rank_mod_p(m, p) == fraction_rank_mod_p(m, p)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_rank_characteristic_difference(impl):
    # rank drops mod 2 on a matrix whose determinant is even
    m = [[1, 1], [1, -1]]
    assert impl.rank_int(m) == 2
    assert impl.rank_mod_p(m, 2) == 1


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
def test_rank_sparse_matches_dense(impl):
    rng = random.Random(9)
    for _ in range(40):
        nr, nc = rng.randint(1, 12), rng.randint(1, 12)
        m = [[rng.choice([0, 0, 0, 1, -1, 2]) for _ in range(nc)] for _ in range(nr)]
        entries = {(r, c): m[r][c] for r in range(nr) for c in range(nc) if m[r][c]}
        assert impl.rank_sparse(entries, 0) == fraction_rank(m)
        assert impl.rank_sparse(entries, 3) == fraction_rank_mod_p(m, 3)


def simplex_faces(vertices, facets):
    levels = {}
    for facet in facets:
        for k in range(len(facet) + 1):
            for sub in combinations(sorted(facet), k):
                mask = 0
                for v in sub:
                    mask |= 1 << v
                levels.setdefault(k, set()).add(mask)
    top = max(levels) + 1 if levels else 0
    return [sorted(levels.get(k, ())) for k in range(top)]


HOMOLOGY_CASES = [
    # (facets over integer vertices, expected reduced ranks by level)
    ([(0,), (1,), (2,)], [0, 2]),
    ([(0, 1), (0, 2), (1, 2)], [0, 0, 1]),
    ([(0, 1, 2)], [0, 0, 0, 0]),
    ([()], [1]),
    ([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)], [0, 0, 0, 1]),
    # two hollow triangles sharing a vertex: H~_1 rank 2
    ([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)], [0, 0, 2]),
]


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda b: b.BACKEND)
@pytest.mark.parametrize("facets,expected", HOMOLOGY_CASES)
def test_homology_known(impl, facets, expected):
    faces = simplex_faces(set().union(*[set(f) for f in facets]) or {0}, facets)
    assert impl.homology_ranks(faces, 0) == expected
    assert impl.homology_ranks(faces, 2) == expected


def test_backends_agree_on_random_complexes():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernel not built")
    rng = random.Random(3)
    for _ in range(15):
        nverts = rng.randint(3, 7)
        nfacets = rng.randint(1, 6)
        facets = [
            tuple(sorted(rng.sample(range(nverts), rng.randint(1, nverts))))
            for _ in range(nfacets)
        ]
        faces = simplex_faces(range(nverts), facets)
        sigmas = list(range(1, 1 << nverts))
        results = []
        for impl in BACKENDS:
            hr = [impl.homology_ranks(faces, p) for p in (0, 2, 5)]
            hb = impl.hochster_betti(nverts, faces, sigmas, 0)
            results.append((hr, hb))
        assert all(r == results[0] for r in results[1:])


def test_projective_plane_characteristic_dependence():
    # minimal RP^2 triangulation: H~_1 has 2-torsion, so GF(2) ranks differ from Q
    facets = [
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
        (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5),
    ]
    faces = simplex_faces(range(6), facets)
    for impl in BACKENDS:
        assert impl.homology_ranks(faces, 0) == [0, 0, 0, 0]
        assert impl.homology_ranks(faces, 2) == [0, 0, 1, 1]
