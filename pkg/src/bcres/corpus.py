"""Deterministic corpus of small simple loopless matroids for sweep checks:
uniform matroids and their sums, cycle matroids of all small connected
graphs, and seeded random rational linear matroids.
"""

import random
from itertools import combinations

from .matroid import direct_sum, graphic_matroid, linear_matroid, uniform_matroid

GRAPH_VERTEX_LIMIT = 5
MAX_GROUND = 8


def uniform_family(max_size=MAX_GROUND):
    out = []
    for n in range(1, max_size + 1):
        for p in range(2, n + 1):
            out.append(("U_%d_%d" % (p, n), uniform_matroid(p, n)))
    return out


def uniform_sum_family(max_size=MAX_GROUND):
    out = []
    # uniform plus free: the shape the linearity theorem characterizes
    for s in range(2, max_size):
        for m in range(s + 1, max_size):
            for f in range(1, max_size - m + 1):
                out.append(
                    (
                        "U_%d_%d+U_%d_%d" % (s, m, f, f),
                        direct_sum([uniform_matroid(s, m), uniform_matroid(f, f)]),
                    )
                )
    # sums of two non-free uniforms, including mixed-degree rows
    pairs = []
    for a in range(2, max_size):
        for b in range(a + 1, max_size + 1):
            pairs.append((a, b))
    for (a, b) in pairs:
        for (c, d) in pairs:
            if (a, b) <= (c, d) and b + d <= max_size:
                out.append(
                    (
                        "U_%d_%d+U_%d_%d" % (a, b, c, d),
                        direct_sum([uniform_matroid(a, b), uniform_matroid(c, d)]),
                    )
                )
    return out


def connected_graphs(nverts, max_edges=MAX_GROUND):
    """All connected labeled simple graphs on the given vertex count."""
    verts = list(range(1, nverts + 1))
    all_edges = list(combinations(verts, 2))
    out = []
    for mask in range(1, 1 << len(all_edges)):
        edges = [all_edges[i] for i in range(len(all_edges)) if mask >> i & 1]
        if len(edges) > max_edges or len(edges) < nverts - 1:
            continue
        parent = {v: v for v in verts}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in edges:
            parent[find(u)] = find(v)
        if len({find(v) for v in verts}) == 1:
            out.append(edges)
    out.sort(key=lambda es: (len(es), es))
    return out


def graphic_family(max_size=MAX_GROUND, cap=160):
    out = []
    for nverts in (3, 4):
        for edges in connected_graphs(nverts, max_size):
            out.append(("G%d_%s" % (nverts, _edge_tag(edges)), graphic_matroid(edges)))
    five = connected_graphs(5, max_size)
    room = max(cap - len(out), 0)
    if room and five:
        stride = max(len(five) // room, 1)
        for edges in five[::stride][:room]:
            out.append(("G5_%s" % _edge_tag(edges), graphic_matroid(edges)))
    return out


def _edge_tag(edges):
    return "-".join("%d%d" % (u, v) for u, v in edges)


def random_linear_family(seed=0, count=25, max_size=MAX_GROUND):
    rng = random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < count * 40:
        attempts += 1
        r = rng.randint(2, 4)
        n = rng.randint(r + 1, max_size)
        cols = [tuple(rng.randint(-3, 3) for _ in range(r)) for _ in range(n)]
        if any(all(v == 0 for v in col) for col in cols):
            continue
        m = linear_matroid(cols)
        if not m.is_simple or m.rank < 2:
            continue
        out.append(("L%d_%d_%d" % (r, n, attempts), m))
    return out


def standard_corpus(seed=0, max_size=MAX_GROUND):
    """The full deterministic corpus: (name, matroid) pairs, all simple and loopless."""
    corpus = []
    corpus.extend(uniform_family(max_size))
    corpus.extend(uniform_sum_family(max_size))
    corpus.extend(graphic_family(max_size))
    corpus.extend(random_linear_family(seed=seed, max_size=max_size))
    return [(name, m) for name, m in corpus if m.is_simple and m.is_loopless]
