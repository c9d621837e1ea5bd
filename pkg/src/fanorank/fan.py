"""Complete smooth fans: exact point location and star quotients.

The face fan of a validated Fano polytope has the polytope's vertices as
primitive ray generators and its facets as maximal cones.  Because every
maximal cone is unimodular, locating a lattice point means solving one
integer-inverse system per cone, with no rounding anywhere.  The star
quotient construction collapses a cone to produce the fan of the
corresponding intersection of toric divisors, keeping enough lifting
data to pull quotient rays back to original generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .lattice import (
    Matrix,
    QuotientProjection,
    ShapeMismatchError,
    Vector,
    mat_vec,
    primitive_part,
    quotient_projection,
    unimodular_inverse,
)
from .polytope import BadIndexError, FanoPolytope


class FanNotCompleteError(RuntimeError):
    """No maximal cone contains the queried point; the fan data is broken."""


class NotAConeError(ValueError):
    """The given index set does not span a cone of the fan."""


@dataclass(frozen=True)
class ConeLocation:
    """Minimal cone containing a point, with its positive coordinates.

    On a smooth fan the coordinates of a lattice point in a unimodular
    cone basis are integers, so ``coefficients`` never needs rationals.
    """

    support: tuple[int, ...]
    coefficients: tuple[int, ...]


@dataclass(frozen=True)
class StarQuotientLift:
    """Lifting data attached to a star quotient fan.

    ``ray_preimages[i]`` lists every original generator projecting onto
    quotient ray ``i`` (ascending); ``ray_lift[i]`` is the lowest-index
    one, the deterministic default lift.
    """

    center: tuple[int, ...]
    projection: QuotientProjection
    ray_preimages: tuple[tuple[int, ...], ...]
    ray_lift: tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """A complete simplicial smooth fan given by ray generators and maximal cones."""

    dim: int
    generators: tuple[Vector, ...]
    max_cones: tuple[tuple[int, ...], ...]

    @classmethod
    def from_polytope(cls, p: FanoPolytope) -> "Fan":
        """Face fan of a validated polytope: rays are vertices, cones are facets."""
        return cls(p.dim, p.vertices, p.face_lattice.facets)

    @cached_property
    def face_set(self) -> frozenset[frozenset[int]]:
        faces: set[frozenset[int]] = {frozenset()}
        for cone in self.max_cones:
            for size in range(1, len(cone) + 1):
                for sub in combinations(cone, size):
                    faces.add(frozenset(sub))
        return frozenset(faces)

    @cached_property
    def all_faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            sorted((tuple(sorted(f)) for f in self.face_set), key=lambda f: (len(f), f))
        )

    @cached_property
    def _inverse_cache(self) -> dict[int, Matrix]:
        return {}

    def _check_indices(self, indices: Iterable[int]) -> tuple[int, ...]:
        idx = tuple(indices)
        m = len(self.generators)
        for i in idx:
            if not 0 <= i < m:
                raise BadIndexError(f"ray index {i} out of range 0..{m - 1}")
        return idx

    def is_cone(self, indices: Iterable[int]) -> bool:
        """True iff the rays span a cone, i.e. the set is a face of a maximal cone."""
        return frozenset(self._check_indices(indices)) in self.face_set

    def _cone_inverse(self, ci: int) -> Matrix:
        cache = self._inverse_cache
        inv = cache.get(ci)
        if inv is None:
            cone = self.max_cones[ci]
            cols = tuple(zip(*(self.generators[i] for i in cone)))
            inv = unimodular_inverse(cols)
            cache[ci] = inv
        return inv

    def minimal_cone_containing(self, point: Sequence[int]) -> ConeLocation:
        """Locate a lattice point in its unique minimal cone.

        Scans maximal cones in order and solves each unimodular system
        exactly; for a complete simplicial fan the strictly positive
        support is the same whichever containing cone is found first.
        The zero vector sits in the trivial cone with empty support.
        """
        pt = tuple(int(x) for x in point)
        if len(pt) != self.dim:
            raise ShapeMismatchError(
                f"point has length {len(pt)}, fan has dimension {self.dim}"
            )
        if not any(pt):
            return ConeLocation((), ())
        for ci in range(len(self.max_cones)):
            coords = mat_vec(self._cone_inverse(ci), pt)
            if all(x >= 0 for x in coords):
                cone = self.max_cones[ci]
                support = tuple(i for i, x in zip(cone, coords) if x > 0)
                coeffs = tuple(x for x in coords if x > 0)
                return ConeLocation(support, coeffs)
        raise FanNotCompleteError(
            f"no maximal cone contains {pt}; upstream hull data must be wrong"
        )

    def star_quotient(self, sigma: Iterable[int]) -> tuple["Fan", StarQuotientLift]:
        """Fan of the quotient lattice along a cone, with lifting data.

        Rays of the result are the primitivized projections of every
        generator that spans a cone together with ``sigma``; maximal
        cones are the images of the maximal cones containing ``sigma``.
        Several generators may project to one quotient ray, so the full
        preimage lists are kept and the lowest index is the default lift.
        """
        sig = tuple(sorted(set(self._check_indices(sigma))))
        if not self.is_cone(sig):
            raise NotAConeError(f"{sig} is not a cone of the fan")
        proj = quotient_projection(
            [self.generators[i] for i in sig], ambient_rank=self.dim
        )
        sigset = frozenset(sig)

        ray_index: dict[Vector, int] = {}
        preimages: list[list[int]] = []
        for w in range(len(self.generators)):
            if w in sigset:
                continue
            if frozenset(sigset | {w}) not in self.face_set:
                continue
            u = primitive_part(proj.apply(self.generators[w]))
            i = ray_index.get(u)
            if i is None:
                ray_index[u] = len(preimages)
                preimages.append([w])
            else:
                preimages[i].append(w)

        quotient_cones: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        for cone in self.max_cones:
            if not sigset <= frozenset(cone):
                continue
            image = tuple(
                sorted(
                    ray_index[primitive_part(proj.apply(self.generators[w]))]
                    for w in cone
                    if w not in sigset
                )
            )
            if image not in seen:
                seen.add(image)
                quotient_cones.append(image)
        quotient_cones.sort()

        gens = tuple(sorted(ray_index, key=ray_index.get))
        qfan = Fan(self.dim - len(sig), gens, tuple(quotient_cones))
        lift = StarQuotientLift(
            center=sig,
            projection=proj,
            ray_preimages=tuple(tuple(p) for p in preimages),
            ray_lift=tuple(p[0] for p in preimages),
        )
        return qfan, lift


def fan_from_polytope(p: FanoPolytope) -> Fan:
    return Fan.from_polytope(p)
