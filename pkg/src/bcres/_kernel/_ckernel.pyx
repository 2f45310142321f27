# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact linear-algebra kernel.

Same contract as pykernel: exact integer rank via fraction-free Bareiss
elimination, GF(p) rank, reduced homology ranks from bitmask face lists,
and the Hochster summation.  The GF(p) path and the Bareiss fast path run
on C int64 arrays; Bareiss restarts on Python ints for the rare matrices
whose minors outgrow the int64 guard (intermediate values are exact
minors, so the guard is a hard correctness requirement).
"""

from libc.stdlib cimport malloc, free

BACKEND = "c"

# |a*b - c*d| stays below 2**61 while all entries stay below 2**30
DEF STEP_GUARD = 1073741823


def rank_int(rows):
    """Rank over the rationals of an integer matrix (list of equal-length rows)."""
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    if nr == 0 or nc == 0:
        return 0
    cdef long long *m = <long long *> malloc(nr * nc * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, pr, pc, piv
    cdef long long pivot, f, v
    cdef long long prev = 1
    cdef int rank = 0
    cdef bint overflow = False
    cdef object val
    try:
        for i in range(nr):
            row = rows[i]
            for j in range(nc):
                val = row[j]
                if val > STEP_GUARD or val < -STEP_GUARD:
                    overflow = True
                    break
                m[i * nc + j] = val
            if overflow:
                break
        if not overflow:
            pr = 0
            for pc in range(nc):
                # entries are exact minors; bound them before they enter products
                for i in range(pr, nr):
                    for j in range(pc, nc):
                        v = m[i * nc + j]
                        if v > STEP_GUARD or v < -STEP_GUARD:
                            overflow = True
                            break
                    if overflow:
                        break
                if overflow:
                    break
                piv = -1
                for i in range(pr, nr):
                    if m[i * nc + pc] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != pr:
                    for j in range(nc):
                        v = m[pr * nc + j]
                        m[pr * nc + j] = m[piv * nc + j]
                        m[piv * nc + j] = v
                pivot = m[pr * nc + pc]
                for i in range(pr + 1, nr):
                    f = m[i * nc + pc]
                    for j in range(pc, nc):
                        m[i * nc + j] = (m[i * nc + j] * pivot - f * m[pr * nc + j]) / prev
                prev = pivot
                rank += 1
                pr += 1
                if pr == nr:
                    break
    finally:
        free(m)
    if overflow:
        return _rank_int_object(rows)
    return rank


def _rank_int_object(rows):
    # exact fallback on Python ints; same elimination, no magnitude limits
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    cdef Py_ssize_t i, j, pr, pc, piv
    cdef int rank = 0
    m = [list(r) for r in rows]
    prev = 1
    pr = 0
    for pc in range(nc):
        piv = -1
        for i in range(pr, nr):
            if m[i][pc]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != pr:
            m[pr], m[piv] = m[piv], m[pr]
        pivot = m[pr][pc]
        mp = m[pr]
        for i in range(pr + 1, nr):
            mi = m[i]
            f = mi[pc]
            for j in range(pc, nc):
                mi[j] = (mi[j] * pivot - f * mp[j]) // prev
        prev = pivot
        rank += 1
        pr += 1
        if pr == nr:
            break
    return rank


def rank_mod_p(rows, p):
    """Rank of an integer matrix over GF(p), p a prime below 2**31."""
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    if nr == 0 or nc == 0:
        return 0
    cdef long long cp = p
    if cp < 2 or cp > 2147483647:
        raise ValueError("characteristic must be a prime below 2**31")
    cdef long long *m = <long long *> malloc(nr * nc * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, pr, pc, piv
    cdef long long inv, f, v
    cdef int rank = 0
    try:
        for i in range(nr):
            row = rows[i]
            for j in range(nc):
                m[i * nc + j] = row[j] % cp
        pr = 0
        for pc in range(nc):
            piv = -1
            for i in range(pr, nr):
                if m[i * nc + pc] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != pr:
                for j in range(nc):
                    v = m[pr * nc + j]
                    m[pr * nc + j] = m[piv * nc + j]
                    m[piv * nc + j] = v
            inv = _inv_mod(m[pr * nc + pc], cp)
            for j in range(pc, nc):
                m[pr * nc + j] = m[pr * nc + j] * inv % cp
            for i in range(pr + 1, nr):
                f = m[i * nc + pc]
                if f != 0:
                    for j in range(pc, nc):
                        v = (m[i * nc + j] - f * m[pr * nc + j]) % cp
                        if v < 0:
                            v += cp
                        m[i * nc + j] = v
            rank += 1
            pr += 1
            if pr == nr:
                break
    finally:
        free(m)
    return rank


cdef long long _inv_mod(long long a, long long p):
    # Fermat; p prime, a != 0 mod p; products stay below 2**62 for p < 2**31
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rank_sparse(entries, characteristic):
    """Exact rank of a sparse integer matrix {(row, col): value}; unit pivots first."""
    cdef long long p = characteristic
    cdef long long v, f, piv, inv, cur
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t rlen
    rows = {}
    cols = {}
    for (r, c), val in entries.items():
        v = val
        if p:
            v = v % p
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
    cdef long long best_score, score
    while rows:
        best = None
        best_score = -1
        for r, row in rows.items():
            rlen = len(row) - 1
            for c, val in row.items():
                v = val
                if p == 0 and v != 1 and v != -1:
                    continue
                score = rlen * (len(cols[c]) - 1)
                if best_score < 0 or score < best_score:
                    best = (r, c)
                    best_score = score
                    if score == 0:
                        break
            if best_score == 0:
                break
        if best is None:
            live_rows = sorted(rows)
            live_cols = sorted({c for row in rows.values() for c in row})
            cix = {c: i for i, c in enumerate(live_cols)}
            dense = [[0] * len(live_cols) for _ in live_rows]
            for i, r in enumerate(live_rows):
                for c, val in rows[r].items():
                    dense[i][cix[c]] = val
            return rank + rank_int(dense)
        r0, c0 = best
        piv_row = rows.pop(r0)
        piv = piv_row[c0]
        if p:
            inv = _inv_mod(piv, p)
        else:
            inv = piv  # unit pivot
        for c in piv_row:
            cols[c].discard(r0)
        for r in list(cols.get(c0, ())):
            row = rows[r]
            f = row[c0] * inv
            if p:
                f = f % p
            for c, val in piv_row.items():
                v = val
                cur = row.get(c, 0) - f * v
                if p:
                    cur = cur % p
                if cur:
                    row[c] = cur
                    cols.setdefault(c, set()).add(r)
                elif c in row:
                    del row[c]
                    cols[c].discard(r)
            if not row:
                del rows[r]
        cols.pop(c0, None)
        rank += 1
    return rank


DEF DENSE_BOUNDARY_LIMIT = 64


def _boundary_rank(lower, upper, characteristic):
    if not lower or not upper:
        return 0
    index = {f: i for i, f in enumerate(lower)}
    cdef Py_ssize_t ncols = len(upper)
    cdef Py_ssize_t col
    cdef int sign
    cdef unsigned long long rest, low, face
    if len(lower) > DENSE_BOUNDARY_LIMIT or ncols > DENSE_BOUNDARY_LIMIT:
        entries = {}
        for col in range(ncols):
            face = upper[col]
            rest = face
            sign = 1
            while rest:
                low = rest & (~rest + 1)
                entries[(index[face ^ low], col)] = sign
                sign = -sign
                rest ^= low
        return rank_sparse(entries, characteristic)
    rows = [[0] * ncols for _ in lower]
    for col in range(ncols):
        face = upper[col]
        rest = face
        sign = 1
        while rest:
            low = rest & (~rest + 1)
            rows[index[face ^ low]][col] = sign
            sign = -sign
            rest ^= low
    if characteristic:
        return rank_mod_p(rows, characteristic)
    return rank_int(rows)


def _collapse(faces_by_size):
    """Free-face collapse preprocessing; preserves the homotopy type."""
    cdef Py_ssize_t top = len(faces_by_size)
    cdef Py_ssize_t c, level, b
    cdef int nbits = 0
    cdef unsigned long long g, f, rest, low, sub, bit, face
    present = [set(lv) for lv in faces_by_size]
    counts = [dict.fromkeys(lv, 0) for lv in faces_by_size]
    for lv in faces_by_size:
        for obj in lv:
            f = obj
            if f.bit_length() > nbits:
                nbits = f.bit_length()
    for c in range(1, top):
        cnt = counts[c - 1]
        for obj in present[c]:
            g = obj
            rest = g
            while rest:
                low = rest & (~rest + 1)
                cnt[g ^ low] = cnt[g ^ low] + 1
                rest ^= low
    queue = [(c, f) for c in range(top) for f in sorted(present[c]) if counts[c][f] == 1]
    while queue:
        c, fobj = queue.pop()
        if fobj not in present[c] or counts[c][fobj] != 1:
            continue
        f = fobj
        gobj = None
        if c + 1 < top:
            nxt = present[c + 1]
            for b in range(nbits):
                bit = (<unsigned long long> 1) << b
                if not f & bit and (f | bit) in nxt:
                    gobj = f | bit
                    break
        if gobj is None or counts[c + 1][gobj] != 0:
            continue
        present[c].remove(fobj)
        present[c + 1].remove(gobj)
        for level, faceobj in ((c, fobj), (c + 1, gobj)):
            if level == 0:
                continue
            face = faceobj
            below = present[level - 1]
            cnt = counts[level - 1]
            rest = face
            while rest:
                low = rest & (~rest + 1)
                sub = face ^ low
                if sub in below:
                    cnt[sub] = cnt[sub] - 1
                    if cnt[sub] == 1:
                        queue.append((level - 1, sub))
                rest ^= low
    return [sorted(lv) for lv in present]


def homology_ranks(faces_by_size, characteristic):
    """Reduced homology ranks; entry c is the rank in dimension c - 1."""
    cdef Py_ssize_t top = len(faces_by_size)
    if top == 0:
        return []
    cdef Py_ssize_t c
    core = _collapse(faces_by_size)
    ranks = [0] * (top + 1)
    for c in range(1, top):
        ranks[c] = _boundary_rank(core[c - 1], core[c], characteristic)
    out = []
    for c in range(top):
        out.append(len(core[c]) - ranks[c] - ranks[c + 1])
    return out


def hochster_betti(nvars, faces_by_size, sigmas, characteristic):
    """Graded Betti numbers of a squarefree monomial ideal via induced-subcomplex homology.

    sigmas lists the vertex-subset masks to visit; callers restrict it to
    the lcm lattice (unions of generator supports), where all nonzero
    multigraded Betti numbers live.
    """
    cdef Py_ssize_t top = len(faces_by_size)
    cdef unsigned long long sigma, notsigma, fv
    cdef Py_ssize_t size, c, i, stop
    cdef long long rk
    betti = {}
    nonvoid = top > 0 and len(faces_by_size[0]) > 0
    for sigma_obj in sigmas:
        sigma = sigma_obj
        size = _popcount(sigma)
        if size == 0:
            continue
        if size == 1:
            if nonvoid and (top <= 1 or sigma_obj not in faces_by_size[1]):
                betti[(0, 1)] = betti.get((0, 1), 0) + 1
            continue
        stop = size + 1 if size + 1 < top else top
        notsigma = ~sigma
        induced = []
        for c in range(stop):
            level = []
            for obj in faces_by_size[c]:
                fv = obj
                if fv & notsigma == 0:
                    level.append(obj)
            induced.append(level)
        while induced and not induced[len(induced) - 1]:
            induced.pop()
        if not induced:
            continue
        hr = homology_ranks(induced, characteristic)
        for c in range(len(hr)):
            rk = hr[c]
            if rk:
                i = size - c - 1
                if i >= 0:
                    key = (i, size)
                    betti[key] = betti.get(key, 0) + rk
    return betti


cdef inline int _popcount(unsigned long long x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c
