import random

import pytest

from fanorank.fan import Fan, FanNotCompleteError, NotAConeError
from fanorank.lattice import determinant, mat_vec
from fanorank.polytope import BadIndexError, FanoPolytope, free_sum, hexagon, simplex


def fan_of(p):
    return Fan.from_polytope(p)


class TestConstruction:
    def test_simplex2_cone_count(self):
        assert len(fan_of(simplex(2)).max_cones) == 3

    def test_hexagon_cone_count(self):
        assert len(fan_of(hexagon()).max_cones) == 6

    def test_product_cone_count(self):
        f = fan_of(free_sum(simplex(1), hexagon()))
        assert len(f.max_cones) == 12

    def test_generators_keep_vertex_order(self):
        h = hexagon()
        assert fan_of(h).generators == h.vertices


class TestIsCone:
    def test_adjacent(self):
        assert fan_of(hexagon()).is_cone((0, 1))

    def test_antipodal(self):
        assert not fan_of(hexagon()).is_cone((0, 3))

    def test_empty(self):
        assert fan_of(hexagon()).is_cone(())

    def test_bad_index(self):
        with pytest.raises(BadIndexError):
            fan_of(hexagon()).is_cone((9,))


class TestPointLocation:
    def test_origin_has_empty_support(self):
        loc = fan_of(hexagon()).minimal_cone_containing((0, 0))
        assert loc.support == () and loc.coefficients == ()

    def test_interior_of_two_cone(self):
        loc = fan_of(hexagon()).minimal_cone_containing((2, 1))
        assert loc.support == (0, 1)
        assert loc.coefficients == (1, 1)

    def test_ray_generator_itself(self):
        loc = fan_of(hexagon()).minimal_cone_containing((1, 1))
        assert loc.support == (1,)
        assert loc.coefficients == (1,)

    def test_reconstruction_and_completeness(self, corpus_fans):
        rng = random.Random(99)
        for name, p, fan in corpus_fans:
            for _ in range(1000):
                pt = tuple(rng.randint(-9, 9) for _ in range(fan.dim))
                loc = fan.minimal_cone_containing(pt)
                rebuilt = [0] * fan.dim
                for i, a in zip(loc.support, loc.coefficients):
                    g = fan.generators[i]
                    for k in range(fan.dim):
                        rebuilt[k] += a * g[k]
                assert tuple(rebuilt) == pt, name
                assert all(a > 0 for a in loc.coefficients)
                assert fan.is_cone(loc.support)

    def test_incomplete_fan_detected(self):
        # drop one maximal cone from the hexagon fan
        h = fan_of(hexagon())
        broken = Fan(h.dim, h.generators, h.max_cones[:-1])
        with pytest.raises(FanNotCompleteError):
            broken.minimal_cone_containing((-1, -2))


class TestSmoothness:
    def test_all_corpus_cones_unimodular(self, corpus_fans):
        for name, p, fan in corpus_fans:
            for cone in fan.max_cones:
                assert len(cone) == fan.dim
                det = determinant([fan.generators[i] for i in cone])
                assert abs(det) == 1, name


class TestStarQuotient:
    def test_product_quotient_is_plane_fan(self):
        f = fan_of(free_sum(simplex(2), simplex(1)))
        qfan, lift = f.star_quotient((3,))
        assert qfan.dim == 2
        assert qfan.generators == ((1, 0), (0, 1), (-1, -1))
        assert qfan.max_cones == ((0, 1), (0, 2), (1, 2))
        assert lift.ray_lift == (0, 1, 2)

    def test_hexagon_quotient_is_line_fan(self):
        qfan, lift = fan_of(hexagon()).star_quotient((0,))
        assert qfan.dim == 1
        assert set(qfan.generators) == {(1,), (-1,)}
        assert sorted(qfan.max_cones) == [(0,), (1,)]
        # neighbours v2 and v6 are the only generators sharing a cone with v1
        assert set(sum(lift.ray_preimages, ())) == {1, 5}

    def test_empty_center_returns_same_fan(self):
        f = fan_of(hexagon())
        qfan, lift = f.star_quotient(())
        assert qfan == f
        assert lift.ray_lift == tuple(range(6))
        assert lift.projection.matrix == ((1, 0), (0, 1))

    def test_not_a_cone_rejected(self):
        with pytest.raises(NotAConeError):
            fan_of(hexagon()).star_quotient((0, 3))

    def test_quotient_fans_are_smooth_and_complete(self, corpus_fans):
        rng = random.Random(5)
        for name, p, fan in corpus_fans:
            if fan.dim < 2 or len(fan.generators) > 12:
                continue
            for ray in range(0, len(fan.generators), 3):
                qfan, _ = fan.star_quotient((ray,))
                for cone in qfan.max_cones:
                    det = determinant([qfan.generators[i] for i in cone])
                    assert abs(det) == 1, name
                for _ in range(50):
                    pt = tuple(rng.randint(-5, 5) for _ in range(qfan.dim))
                    qfan.minimal_cone_containing(pt)

    def test_preimage_lists_kept_when_rays_merge(self):
        # quotient of (P^1)^2 by a ray folds the two transverse rays together
        f = fan_of(free_sum(simplex(1), simplex(1)))
        qfan, lift = f.star_quotient((0,))
        assert qfan.generators == ((1,), (-1,))
        merged = [p for p in lift.ray_preimages if len(p) > 1]
        assert not merged or all(p[0] == min(p) for p in merged)
