"""Fano polytopes: exact face enumeration, smoothness checks, canonical forms.

A Fano polytope is a full-dimensional lattice polytope with primitive
vertices and the origin as its only interior lattice point.  The smooth
ones (every facet's vertex set a lattice basis) encode nonsingular toric
Fano varieties through their face fans.  This module owns the polytope
side of that dictionary: facet enumeration by exhaustive hyperplane
search, validation of the smooth Fano conditions, a canonical form for
unimodular-equivalence tests, and the standard constructions (simplices,
the hexagon, free sums).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .lattice import (
    ShapeMismatchError,
    Vector,
    content,
    determinant,
    mat_vec,
    matrix_rank,
    primitive_part,
    unimodular_inverse,
)


class NotFanoShapeError(ValueError):
    """The vertex set does not bound a full-dimensional body around the origin."""


class BadIndexError(IndexError):
    """A vertex index is out of range."""


def _affine_normal(pts: Sequence[Vector]) -> Vector | None:
    """Primitive integer normal of the affine hull of ``n`` points in Z^n.

    Returns None when the points do not span a hyperplane.
    """
    n = len(pts[0])
    if n == 1:
        return (1,)
    base = pts[0]
    rows = [[q[k] - base[k] for k in range(n)] for q in pts[1:]]
    nrows = n - 1
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        sel = None
        for i in range(r, nrows):
            if rows[i][c]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, nrows):
            if rows[i][c]:
                q = rows[i][c]
                new = [p * rows[i][k] - q * prow[k] for k in range(n)]
                g = content(new)
                rows[i] = [x // g for x in new] if g > 1 else new
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    if r < nrows:
        return None
    free = next(c for c in range(n) if c not in piv_cols)
    x: list[Fraction] = [Fraction(0)] * n
    x[free] = Fraction(1)
    for i in reversed(range(nrows)):
        c = piv_cols[i]
        s = sum((rows[i][k] * x[k] for k in range(c + 1, n) if x[k]), Fraction(0))
        x[c] = -s / rows[i][c]
    scale = 1
    for xi in x:
        scale = scale * xi.denominator // math.gcd(scale, xi.denominator)
    return primitive_part(tuple(int(xi * scale) for xi in x))


@dataclass(frozen=True)
class FaceLattice:
    """Facets of a simplicial polytope plus membership queries for all faces."""

    dim: int
    facets: tuple[tuple[int, ...], ...]

    @cached_property
    def face_set(self) -> frozenset[frozenset[int]]:
        faces: set[frozenset[int]] = {frozenset()}
        for facet in self.facets:
            for size in range(1, len(facet) + 1):
                for sub in combinations(facet, size):
                    faces.add(frozenset(sub))
        return frozenset(faces)

    @cached_property
    def all_faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            sorted((tuple(sorted(f)) for f in self.face_set), key=lambda f: (len(f), f))
        )

    def is_face(self, indices: Iterable[int]) -> bool:
        return frozenset(indices) in self.face_set


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Pass/fail record for every smooth Fano condition, not just the first."""

    polytope_name: str
    conditions: tuple[ConditionResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.conditions if not c.passed)

    def condition(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class FanoPolytope:
    """A candidate Fano polytope: ordered vertex list in its input order.

    Construction only enforces structural sanity (consistent coordinate
    lengths); the geometric conditions are checked by ``validate`` so that
    bad input files produce diagnostics instead of exceptions.  Instances
    are immutable and hashable.
    """

    dim: int
    vertices: tuple[Vector, ...]
    name: str = ""

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        for v in verts:
            if len(v) != self.dim:
                raise ShapeMismatchError(
                    f"vertex {v} has length {len(v)}, expected {self.dim}"
                )
        if not verts:
            raise ValueError("a polytope needs at least one vertex")
        object.__setattr__(self, "vertices", verts)

    # -- hull ------------------------------------------------------------

    @cached_property
    def _hull_scan(self):
        """Brute-force supporting-hyperplane search over all n-subsets.

        Returns (facets, evidence) where facets is a list of
        (indices, outward normal, offset) triples with every other vertex
        strictly below the hyperplane, and evidence lists one-sided
        hyperplanes that contain extra vertices (witnesses against
        simpliciality).  Offsets are oriented so the polytope lies on the
        side ``<= c``.
        """
        verts = self.vertices
        n = self.dim
        m = len(verts)
        facets = []
        evidence = []
        allidx = range(m)
        for subset in combinations(allidx, n):
            pts = [verts[i] for i in subset]
            u = _affine_normal(pts)
            if u is None:
                continue
            c = sum(a * b for a, b in zip(u, pts[0]))
            chosen = set(subset)
            above = below = False
            on: list[int] = []
            for w in allidx:
                if w in chosen:
                    continue
                t = sum(a * b for a, b in zip(u, verts[w]))
                if t > c:
                    above = True
                    if below:
                        break
                elif t < c:
                    below = True
                    if above:
                        break
                else:
                    on.append(w)
            if above and below:
                continue
            if above:
                u = tuple(-x for x in u)
                c = -c
            if on:
                evidence.append((subset, tuple(on), c))
            else:
                facets.append((subset, u, c))
        return facets, evidence

    @cached_property
    def _affine_rank(self) -> int:
        base = self.vertices[0]
        diffs = [
            [v[k] - base[k] for k in range(self.dim)] for v in self.vertices[1:]
        ]
        return matrix_rank(diffs) if diffs else 0

    @cached_property
    def face_lattice(self) -> FaceLattice:
        """Facets as sorted index sets; requires genuine Fano shape.

        Raises NotFanoShapeError when the hull is not full-dimensional,
        the origin is not interior, or the hull is not simplicial (the
        last goes beyond the strict precondition but prevents silently
        wrong face data downstream).
        """
        if self._affine_rank < self.dim:
            raise NotFanoShapeError("polytope is not full-dimensional")
        facets, evidence = self._hull_scan
        if any(c <= 0 for _, _, c in facets) or any(c <= 0 for _, _, c in evidence):
            raise NotFanoShapeError("origin is not an interior point")
        if evidence:
            raise NotFanoShapeError("polytope is not simplicial")
        incident = set()
        for subset, _, _ in facets:
            incident.update(subset)
        if len(incident) != len(self.vertices):
            raise NotFanoShapeError("some input point is not a vertex of the hull")
        return FaceLattice(self.dim, tuple(sorted(f for f, _, _ in facets)))

    def is_face(self, indices: Iterable[int]) -> bool:
        """True iff the index set is contained in some facet."""
        idx = tuple(indices)
        m = len(self.vertices)
        for i in idx:
            if not 0 <= i < m:
                raise BadIndexError(f"vertex index {i} out of range 0..{m - 1}")
        return self.face_lattice.is_face(idx)

    # -- validation --------------------------------------------------------

    def validate(self) -> ValidationReport:
        return validate_smooth_fano(self)

    # -- canonical form ----------------------------------------------------

    def normal_form(self) -> tuple[Vector, ...]:
        """Canonical vertex matrix under lattice maps and vertex reorderings.

        Two validated polytopes have equal normal forms exactly when one
        is the image of the other under a unimodular map composed with a
        permutation of the vertices.  Every facet basis is mapped to the
        standard basis (in every ordering) and the lexicographically
        least sorted vertex matrix over all those coordinates wins; the
        cost is (number of facets) * dim! * vertices, fine at desk scale.
        """
        verts = self.vertices
        n = self.dim
        best = None
        for facet in self.face_lattice.facets:
            cols = tuple(zip(*(verts[i] for i in facet)))
            binv = unimodular_inverse(cols)
            images = [mat_vec(binv, v) for v in verts]
            for perm in permutations(range(n)):
                key = tuple(sorted(tuple(w[p] for p in perm) for w in images))
                if best is None or key < best:
                    best = key
        assert best is not None
        return best


def validate_smooth_fano(p: FanoPolytope) -> ValidationReport:
    """Check every smooth Fano polytope condition and report all failures.

    Conditions, in evaluation order: distinct vertices, primitive
    vertices, full dimension, origin strictly interior, simplicial hull,
    every input point a hull vertex, unimodular facets.  Unimodular
    facets sit on lattice-distance-1 hyperplanes, which already forces
    the origin to be the only interior lattice point, so that part of the
    Fano definition needs no lattice-point enumeration.
    """
    verts = p.vertices
    n = p.dim
    m = len(verts)
    conditions: list[ConditionResult] = []

    dup = sorted({v for v in verts if verts.count(v) > 1})
    conditions.append(
        ConditionResult(
            "vertices_distinct",
            not dup,
            "" if not dup else f"repeated vertices: {dup}",
        )
    )

    bad_prim = [v for v in verts if content(v) != 1]
    conditions.append(
        ConditionResult(
            "vertices_primitive",
            not bad_prim,
            "" if not bad_prim else f"non-primitive vertices: {bad_prim}",
        )
    )

    full = m >= n + 1 and p._affine_rank == n
    conditions.append(
        ConditionResult(
            "full_dimensional",
            full,
            "" if full else f"affine rank {p._affine_rank} < {n}",
        )
    )

    if not full:
        skipped = "not evaluated: polytope is not full-dimensional"
        for name in ("origin_interior", "simplicial", "vertices_extremal", "facets_unimodular"):
            conditions.append(ConditionResult(name, False, skipped))
        return ValidationReport(p.name, tuple(conditions))

    facets, evidence = p._hull_scan
    min_offset = min(
        [c for _, _, c in facets] + [c for _, _, c in evidence], default=0
    )
    conditions.append(
        ConditionResult(
            "origin_interior",
            min_offset > 0,
            "" if min_offset > 0 else f"supporting hyperplane at offset {min_offset}",
        )
    )

    conditions.append(
        ConditionResult(
            "simplicial",
            not evidence,
            ""
            if not evidence
            else f"facet hyperplane with extra vertices, e.g. {evidence[0][0]} + {evidence[0][1]}",
        )
    )

    incident: set[int] = set()
    for subset, _, _ in facets:
        incident.update(subset)
    for subset, on, _ in evidence:
        incident.update(subset)
        incident.update(on)
    loose = sorted(set(range(m)) - incident)
    conditions.append(
        ConditionResult(
            "vertices_extremal",
            not loose,
            "" if not loose else f"points inside the hull: {[verts[i] for i in loose]}",
        )
    )

    bad_facets = [
        subset
        for subset, _, _ in facets
        if abs(determinant([verts[i] for i in subset])) != 1
    ]
    conditions.append(
        ConditionResult(
            "facets_unimodular",
            not bad_facets,
            "" if not bad_facets else f"non-unimodular facets: {bad_facets}",
        )
    )

    return ValidationReport(p.name, tuple(conditions))


def facets(p: FanoPolytope) -> FaceLattice:
    """Face lattice of a validated polytope (alias for the cached property)."""
    return p.face_lattice


def normal_form(p: FanoPolytope) -> tuple[Vector, ...]:
    return p.normal_form()


# -- constructors -----------------------------------------------------------


def simplex(n: int) -> FanoPolytope:
    """The polytope of n-dimensional projective space: e_1..e_n and -(e_1+..+e_n)."""
    if n < 1:
        raise ValueError("simplex dimension must be at least 1")
    verts = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    verts.append(tuple(-1 for _ in range(n)))
    return FanoPolytope(n, tuple(verts), f"simplex:{n}")


def hexagon() -> FanoPolytope:
    """The hexagon of the degree 6 del Pezzo surface."""
    verts = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))
    return FanoPolytope(2, verts, "hexagon")


def free_sum(p: FanoPolytope, q: FanoPolytope) -> FanoPolytope:
    """Convex hull of P x {0} and {0} x Q; the polytope of the product variety."""
    zp = (0,) * p.dim
    zq = (0,) * q.dim
    verts = tuple(v + zq for v in p.vertices) + tuple(zp + w for w in q.vertices)
    return FanoPolytope(p.dim + q.dim, verts, f"product({p.name},{q.name})")
