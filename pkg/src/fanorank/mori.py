"""Primitive collections, primitive relations, and curve classes.

A primitive collection is a minimal non-face of the fan: a set of rays
spanning no cone, every proper subset of which does.  Writing the sum of
its generators in the minimal cone containing it produces the primitive
relation, an integer relation among ray generators and hence a curve
class (numerical classes of curves are exactly the relations among the
generators).  Degree here always means anticanonical degree: the sum of
the relation's coefficients.  Collections summing to zero play a special
role, corresponding to families of minimal rational curves; we call
their records minimal components and grade them by codegree
``dim + 1 - degree``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from typing import Iterable, Sequence

from .fan import Fan, NotAConeError
from .lattice import Vector


class InternalInconsistencyError(RuntimeError):
    """A smooth-fan guarantee failed; this signals a bug, not bad input."""


class NotACurveClassError(ValueError):
    """The coefficient vector is not a relation among the ray generators."""


class NotCertifiedExtremalError(ValueError):
    """The relation has not been certified extremal (degree is not 1)."""


@dataclass(frozen=True)
class PrimitiveRelation:
    """The relation sum(collection) = sum(coeff * generator) over the rhs cone.

    ``degree`` is the collection size minus the sum of the right-hand
    coefficients; on a Fano fan it is always at least 1.
    """

    collection: tuple[int, ...]
    rhs: tuple[tuple[int, int], ...]
    degree: int


@dataclass(frozen=True)
class MinimalComponent:
    """A zero-sum primitive collection with its degree and codegree."""

    collection: tuple[int, ...]
    degree: int
    codegree: int


@dataclass(frozen=True)
class ZeroSumLift:
    """Result of lifting a zero-sum collection out of a star quotient.

    ``lifted`` holds original generator indices for the collection minus
    ``dropped``; ``forms_cone`` records whether they span a cone together
    with the quotient center, as the divisor-intersection argument
    predicts.  A False value is a diagnostic worth investigating.
    """

    collection: tuple[int, ...]
    dropped: int
    lifted: tuple[int, ...]
    forms_cone: bool


def primitive_collections(fan: Fan) -> tuple[tuple[int, ...], ...]:
    """All minimal non-faces, by increasing size then lexicographically.

    Level-wise search with pruning: a set can only be a collection or a
    face if the subset missing its largest element is already a face, so
    each level extends the previous level's faces by one larger index.
    Sizes are capped at dim + 1 since proper subsets span simplicial
    cones.
    """
    m = len(fan.generators)
    face_set = fan.face_set
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for f in fan.all_faces:
        by_size.setdefault(len(f), []).append(f)

    found: list[tuple[int, ...]] = []
    for i in range(m):
        for j in range(i + 1, m):
            if frozenset((i, j)) not in face_set:
                found.append((i, j))
    for size in range(3, fan.dim + 2):
        for f in by_size.get(size - 1, ()):
            top = f[-1]
            fs = frozenset(f)
            for j in range(top + 1, m):
                s = fs | {j}
                if s in face_set:
                    continue
                if all(s - {x} in face_set for x in f):
                    found.append(f + (j,))
    found.sort(key=lambda s: (len(s), s))
    return tuple(found)


def primitive_relation(fan: Fan, pc: Sequence[int]) -> PrimitiveRelation:
    """Primitive relation of a collection: locate its generator sum exactly."""
    idx = tuple(sorted(pc))
    total = tuple(
        sum(fan.generators[i][k] for i in idx) for k in range(fan.dim)
    )
    loc = fan.minimal_cone_containing(total)
    if set(loc.support) & set(idx):
        raise InternalInconsistencyError(
            f"collection {idx} meets its own relation cone {loc.support}"
        )
    rhs = tuple(zip(loc.support, loc.coefficients))
    degree = len(idx) - sum(loc.coefficients)
    return PrimitiveRelation(idx, rhs, degree)


def minimal_components(fan: Fan) -> tuple[MinimalComponent, ...]:
    """Primitive collections with zero generator sum, graded by codegree."""
    out = []
    for pc in primitive_collections(fan):
        total = [0] * fan.dim
        for i in pc:
            g = fan.generators[i]
            for k in range(fan.dim):
                total[k] += g[k]
        if not any(total):
            k = len(pc)
            out.append(MinimalComponent(pc, k, fan.dim + 1 - k))
    return tuple(out)


def curve_class_of(fan: Fan, rel: PrimitiveRelation) -> Vector:
    """Coefficient vector over all generators: +1 on the collection, -a on the rhs."""
    coeffs = [0] * len(fan.generators)
    for i in rel.collection:
        coeffs[i] += 1
    for j, a in rel.rhs:
        coeffs[j] -= a
    cls = tuple(coeffs)
    _require_curve_class(fan, cls)
    return cls


def _require_curve_class(fan: Fan, coefficients: Sequence[int]) -> None:
    if len(coefficients) != len(fan.generators):
        raise NotACurveClassError(
            f"expected {len(fan.generators)} coefficients, got {len(coefficients)}"
        )
    for k in range(fan.dim):
        if sum(c * fan.generators[i][k] for i, c in enumerate(coefficients)):
            raise NotACurveClassError(
                "coefficients are not a relation among the generators"
            )


def anticanonical_degree(fan: Fan, coefficients: Sequence[int]) -> int:
    """Sum of the coefficients of a relation among the generators."""
    _require_curve_class(fan, coefficients)
    return sum(coefficients)


def is_effective_relation(fan: Fan, coefficients: Sequence[int]) -> bool:
    """True iff the support of the negative part spans a cone."""
    _require_curve_class(fan, coefficients)
    negative = tuple(i for i, c in enumerate(coefficients) if c < 0)
    return fan.is_cone(negative)


def is_extremal_degree_one(fan: Fan, rel: PrimitiveRelation) -> bool:
    """Degree-1 sufficient criterion: such classes span extremal rays on Fanos."""
    return anticanonical_degree(fan, curve_class_of(fan, rel)) == 1


def verify_reid_cones(
    fan: Fan, rel: PrimitiveRelation, *, require_degree_one: bool = True
) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Check the cone structure an extremal relation forces near its collection.

    For every cone extending the relation's right-hand side by rays
    disjoint from both sides, dropping any one collection member and
    adjoining the extension must again give a cone.  Returns the list of
    (dropped index, extension) pairs that fail; on valid input it is
    empty.  By default the relation must carry the degree-1 extremality
    certificate; pass ``require_degree_one=False`` only for relations
    whose extremality is known some other way.
    """
    if require_degree_one and rel.degree != 1:
        raise NotCertifiedExtremalError(
            f"relation of degree {rel.degree} is not certified extremal"
        )
    lhs = frozenset(rel.collection)
    rhs = frozenset(i for i, _ in rel.rhs)
    face_set = fan.face_set
    violations = []
    for face in fan.all_faces:
        fs = frozenset(face)
        if not rhs <= fs:
            continue
        z = fs - rhs
        if z & lhs:
            continue
        for i in rel.collection:
            if (lhs - {i}) | fs not in face_set:
                violations.append((i, tuple(sorted(z))))
    return tuple(violations)


def count_pc_extensions(fan: Fan, cone_indices: Iterable[int]) -> int:
    """Number of primitive collections equal to the cone plus one extra ray."""
    cone = tuple(sorted(set(cone_indices)))
    if not fan.is_cone(cone):
        raise NotAConeError(f"{cone} is not a cone of the fan")
    face_set = fan.face_set
    cs = frozenset(cone)
    count = 0
    for w in range(len(fan.generators)):
        if w in cs:
            continue
        s = cs | {w}
        if s in face_set:
            continue
        if all(s - {x} in face_set for x in cone):
            count += 1
    return count


def picard_rank(fan: Fan) -> int:
    """Number of rays minus the dimension."""
    return len(fan.generators) - fan.dim


def lift_zero_sum_collections(
    fan: Fan, sigma: Iterable[int]
) -> tuple[ZeroSumLift, ...]:
    """Find zero-sum collections in the star quotient along ``sigma`` and lift them.

    Each quotient collection of size t+1 should, after dropping one ray
    and lifting the remaining t (preferring the lowest-index preimages),
    span a cone together with ``sigma``.  When the default lifts fail,
    the full preimage lists are searched before reporting a failure.
    """
    sig = tuple(sorted(set(sigma)))
    qfan, lift = fan.star_quotient(sig)
    results = []
    for pc in primitive_collections(qfan):
        total = [0] * qfan.dim
        for r in pc:
            g = qfan.generators[r]
            for k in range(qfan.dim):
                total[k] += g[k]
        if any(total):
            continue
        best: tuple[int, tuple[int, ...], bool] | None = None
        for dropped in pc:
            rest = tuple(r for r in pc if r != dropped)
            default = tuple(sorted(lift.ray_lift[r] for r in rest))
            if fan.is_cone(sig + default):
                best = (dropped, default, True)
                break
        if best is None:
            for dropped in pc:
                rest = tuple(r for r in pc if r != dropped)
                for combo in iter_product(*(lift.ray_preimages[r] for r in rest)):
                    cand = tuple(sorted(combo))
                    if len(set(cand)) == len(cand) and fan.is_cone(sig + cand):
                        best = (dropped, cand, True)
                        break
                if best is not None:
                    break
        if best is None:
            first = pc[0]
            rest = tuple(r for r in pc if r != first)
            best = (first, tuple(sorted(lift.ray_lift[r] for r in rest)), False)
        results.append(ZeroSumLift(pc, best[0], best[1], best[2]))
    return tuple(results)
