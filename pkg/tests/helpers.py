"""Independent oracles and randomized transforms used across the test suite.

Everything here is deliberately written against the definitions, not
against the library internals, so that the main code paths are checked
by a second route: brute-force subset scans for primitive collections,
an angular-sort hull for 2D facets, and elementary-matrix products for
random unimodular maps.
"""

from functools import cmp_to_key
from itertools import combinations

from fanorank import FanoPolytope
from fanorank.lattice import mat_vec


def brute_force_primitive_collections(fan):
    """Scan every vertex subset against the minimal-non-face definition."""
    m = len(fan.generators)
    face_set = fan.face_set
    out = []
    for size in range(2, m + 1):
        for subset in combinations(range(m), size):
            fs = frozenset(subset)
            if fs in face_set:
                continue
            if all(fs - {x} in face_set for x in subset):
                out.append(subset)
    return tuple(sorted(out, key=lambda s: (len(s), s)))


def hull_edges_by_angle(vertices):
    """2D hull edges via exact angular sort; independent of the facet search."""

    def cmp(ia, ib):
        a, b = vertices[ia], vertices[ib]
        ha = 0 if a[1] > 0 or (a[1] == 0 and a[0] > 0) else 1
        hb = 0 if b[1] > 0 or (b[1] == 0 and b[0] > 0) else 1
        if ha != hb:
            return -1 if ha < hb else 1
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    order = sorted(range(len(vertices)), key=cmp_to_key(cmp))
    m = len(order)
    return tuple(
        sorted(tuple(sorted((order[i], order[(i + 1) % m]))) for i in range(m))
    )


def random_unimodular(n, rng, steps=25):
    """Random product of elementary shears, swaps, and sign flips."""
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            q = rng.choice((-2, -1, 1, 2))
            for k in range(n):
                mat[i][k] += q * mat[j][k]
        elif kind == 1 and i != j:
            mat[i], mat[j] = mat[j], mat[i]
        elif kind == 2:
            mat[i] = [-x for x in mat[i]]
    return tuple(tuple(row) for row in mat)


def transformed_copy(p, umatrix, rng=None):
    """Apply a unimodular map to every vertex, optionally shuffling their order."""
    verts = [mat_vec(umatrix, v) for v in p.vertices]
    if rng is not None:
        rng.shuffle(verts)
    return FanoPolytope(p.dim, tuple(verts), p.name + "~")
