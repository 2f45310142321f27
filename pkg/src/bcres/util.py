"""Shared combinatorics helpers: binomials, bitmask subsets, polynomial arithmetic."""

from itertools import combinations


def binom(a, b):
    """Combinatorial binomial: 1 for b == 0 (any a, including negative), else 0 outside 0 <= b <= a."""
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    num = 1
    for i in range(b):
        num = num * (a - i) // (i + 1)
    return num


def popcount(x):
    return bin(x).count("1")


def mask_of(items, pos):
    """Bitmask of a collection of labels under a label -> bit position map."""
    m = 0
    for it in items:
        m |= 1 << pos[it]
    return m


def bits(mask):
    """Ascending bit positions set in mask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def subsets_of(seq, size):
    return combinations(seq, size)


def antichain_minimal(sets):
    """Minimal elements (by inclusion) of a collection of frozensets, deduplicated."""
    uniq = sorted(set(sets), key=len)
    keep = []
    for s in uniq:
        if not any(t <= s for t in keep):
            keep.append(s)
    return keep


def antichain_maximal(sets):
    """Maximal elements (by inclusion) of a collection of frozensets, deduplicated."""
    uniq = sorted(set(sets), key=len, reverse=True)
    keep = []
    for s in uniq:
        if not any(s <= t for t in keep):
            keep.append(s)
    return keep


def sorted_sets(sets):
    """Canonical deterministic ordering for a family of element sets."""
    return tuple(sorted(sets, key=lambda s: (len(s), tuple(sorted(s, key=repr)))))


def minimal_transversals(sets, universe):
    """Inclusion-minimal subsets of the universe meeting every set in the family.

    Berge expansion: fold the family in, extending each partial transversal
    that misses the new set by each of its elements and re-minimalizing.
    Exponential in the worst case; inputs here are small.
    """
    pos = {e: i for i, e in enumerate(universe)}
    trans = [frozenset()]
    for s in sets:
        s = frozenset(s)
        new = []
        for t in trans:
            if t & s:
                new.append(t)
            else:
                for x in sorted(s, key=pos.get):
                    new.append(t | {x})
        trans = antichain_minimal(new)
    return sorted_sets(trans)


# -- dense integer polynomials in one variable, lowest degree first ------------

def poly_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return list(p)


def poly_add(p, q):
    n = max(len(p), len(q))
    return poly_trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_pow(p, k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def poly_divmod(p, q):
    """Exact polynomial division with remainder over the integers (monic-up-to-sign divisors only)."""
    p = list(p)
    q = poly_trim(q)
    lead = q[-1]
    if abs(lead) != 1:
        raise ValueError("divisor must have unit leading coefficient")
    dq = len(q) - 1
    quot = [0] * max(1, len(p) - dq)
    while len(poly_trim(p)) - 1 >= dq and any(p):
        p = poly_trim(p)
        if len(p) - 1 < dq:
            break
        c = p[-1] // lead
        k = len(p) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            p[k + i] -= c * b
    return poly_trim(quot), poly_trim(p)


def poly_shift_basis(p):
    """Rewrite sum(p[i] * t^i) as coefficients in the (1-t)-power basis.

    Returns c with sum(c[i] * (1-t)^i) == p(t).
    """
    # substitute t = 1 - u and read off coefficients of u
    out = [0] * max(1, len(p))
    pow_u = [1]  # (1-u)^i
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(pow_u):
                out[j] += a * b
        pow_u = poly_mul(pow_u, [1, -1])
    return poly_trim(out)
