"""Exhaustive enumeration of smooth Fano polygons from a coordinate box.

Serves as a ground-truth oracle at desk scale: every subset of the
primitive vectors in the box is tested, survivors are deduplicated by
canonical form, and the result is the classification of smooth toric
del Pezzo surfaces when the box is large enough (radius 1 already is).

A candidate subset is screened with an exact angular sweep first, which
decides the full smooth Fano condition in 2D (see ``_smooth_fano_2d``);
survivors are then re-checked with the general validator before being
counted, so the screen only buys speed, never trust.
"""

from __future__ import annotations

import math
from functools import cmp_to_key
from itertools import combinations

from .lattice import Vector
from .polytope import FanoPolytope, validate_smooth_fano


def primitive_vectors_in_box(box_radius: int) -> tuple[Vector, ...]:
    """All primitive integer vectors with both coordinates in [-B, B], sorted."""
    if box_radius < 1:
        raise ValueError("box radius must be at least 1")
    out = []
    for x in range(-box_radius, box_radius + 1):
        for y in range(-box_radius, box_radius + 1):
            if math.gcd(x, y) == 1:
                out.append((x, y))
    return tuple(sorted(out))


def _angle_compare(a: Vector, b: Vector) -> int:
    """Exact counterclockwise comparison of nonzero vectors from angle 0."""
    ha = 0 if a[1] > 0 or (a[1] == 0 and a[0] > 0) else 1
    hb = 0 if b[1] > 0 or (b[1] == 0 and b[0] > 0) else 1
    if ha != hb:
        return -1 if ha < hb else 1
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _smooth_fano_2d(vectors: tuple[Vector, ...]) -> bool:
    """Exact smooth Fano test for a set of distinct primitive plane vectors.

    After sorting counterclockwise, the set is a smooth Fano polygon iff
    every cyclically consecutive pair has cross product exactly 1 (the
    angular gap is then under a half turn, so the origin is interior,
    and the edge is unimodular) and the turn at every vertex is strictly
    convex (so each point really is a hull vertex).
    """
    m = len(vectors)
    if m < 3:
        return False
    ring = sorted(vectors, key=cmp_to_key(_angle_compare))
    for i in range(m):
        a = ring[i]
        b = ring[(i + 1) % m]
        if a[0] * b[1] - a[1] * b[0] != 1:
            return False
    for i in range(m):
        p = ring[i - 1]
        v = ring[i]
        nx = ring[(i + 1) % m]
        ex, ey = v[0] - p[0], v[1] - p[1]
        fx, fy = nx[0] - v[0], nx[1] - v[1]
        if ex * fy - ey * fx <= 0:
            return False
    return True


def enumerate_2d(box_radius: int = 1) -> tuple[FanoPolytope, ...]:
    """Distinct smooth Fano polygons on primitive vectors from the box.

    Tests all subsets of size 3..8, deduplicates by normal form, and
    returns canonical representatives ordered by (vertex count, normal
    form).  Radius 1 yields the five toric del Pezzo classes; larger
    boxes must reproduce the same list.
    """
    vectors = primitive_vectors_in_box(box_radius)
    by_form: dict[tuple[Vector, ...], None] = {}
    for size in range(3, 9):
        for subset in combinations(vectors, size):
            if not _smooth_fano_2d(subset):
                continue
            candidate = FanoPolytope(2, subset)
            if not validate_smooth_fano(candidate).passed:
                continue
            by_form.setdefault(candidate.normal_form())
    forms = sorted(by_form, key=lambda f: (len(f), f))
    out = []
    seen_counts: dict[int, int] = {}
    for form in forms:
        count = len(form)
        seen_counts[count] = seen_counts.get(count, 0) + 1
        suffix = chr(ord("a") + seen_counts[count] - 1)
        dup = sum(1 for f in forms if len(f) == count) > 1
        name = f"delpezzo_{count}v" + (f"_{suffix}" if dup else "")
        out.append(FanoPolytope(2, form, name))
    return tuple(out)
