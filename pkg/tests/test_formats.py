import io
import json

import pytest

from fanorank.bounds import analyze
from fanorank.formats import (
    FamilySpecError,
    ParseError,
    ShapeError,
    batch_exit_code,
    batch_to_dict,
    construct,
    parse_polytopes,
    polytope_to_text,
    polytopes_to_text,
    report_to_dict,
    write_report,
)
from fanorank.polytope import FanoPolytope, hexagon, simplex


class TestParse:
    def test_single_block(self):
        text = "polytope P2\ndim 2\nv 1 0\nv 0 1\nv -1 -1\nend\n"
        (p,) = parse_polytopes(text)
        assert p.name == "P2"
        assert p.vertices == simplex(2).vertices

    def test_two_blocks_in_order(self):
        text = (
            "polytope a\ndim 1\nv 1\nv -1\nend\n"
            "polytope b\ndim 2\nv 1 0\nv 0 1\nv -1 -1\nend\n"
        )
        ps = parse_polytopes(text)
        assert [p.name for p in ps] == ["a", "b"]

    def test_comments_and_blank_lines(self):
        text = "# header\n\npolytope x # trailing\ndim 1\n v 1\nv -1\nend\n"
        (p,) = parse_polytopes(text)
        assert p.name == "x"

    def test_dimension_mismatch_is_shape_error(self):
        text = "polytope bad\ndim 2\nv 1\nend\n"
        with pytest.raises(ShapeError) as err:
            parse_polytopes(text)
        assert err.value.line == 3

    def test_unknown_keyword(self):
        with pytest.raises(ParseError):
            parse_polytopes("polytope p\ndim 1\nw 1\nend\n")

    def test_duplicate_names_rejected(self):
        text = "polytope p\ndim 1\nv 1\nv -1\nend\npolytope p\ndim 1\nv 1\nv -1\nend\n"
        with pytest.raises(ParseError):
            parse_polytopes(text)

    def test_unterminated_block(self):
        with pytest.raises(ParseError):
            parse_polytopes("polytope p\ndim 1\nv 1\n")

    def test_round_trip_identity(self):
        for p in (simplex(3), hexagon(), construct("product(simplex:1,hexagon)")):
            (again,) = parse_polytopes(polytope_to_text(p))
            assert again.vertices == p.vertices
            assert again.dim == p.dim
            assert again.name == p.name

    def test_multi_round_trip(self):
        ps = [simplex(1), hexagon()]
        again = parse_polytopes(polytopes_to_text(ps))
        assert [q.vertices for q in again] == [p.vertices for p in ps]


class TestConstruct:
    def test_sharp_example(self):
        p = construct("product(simplex:2,hexagon)")
        assert p.dim == 4 and len(p.vertices) == 9
        assert p.name == "product(simplex:2,hexagon)"

    def test_simplex(self):
        assert construct("simplex:5").vertices == simplex(5).vertices

    def test_triple_product(self):
        p = construct("product(simplex:1,simplex:1,simplex:1)")
        assert p.dim == 3 and len(p.vertices) == 6

    def test_nested_products(self):
        p = construct("product(product(simplex:1,simplex:1),hexagon)")
        assert p.dim == 4 and len(p.vertices) == 10

    def test_whitespace_tolerated(self):
        p = construct(" product( simplex:2 , hexagon ) ")
        assert p.name == "product(simplex:2,hexagon)"

    @pytest.mark.parametrize(
        "bad",
        [
            "simplex",
            "simplex:",
            "simplex:0",
            "cube:3",
            "product(simplex:1)",
            "product(simplex:1,simplex:1",
            "hexagon extra",
        ],
    )
    def test_malformed_specs(self, bad):
        with pytest.raises(FamilySpecError):
            construct(bad)


class TestReports:
    def test_hexagon_casagrande_entry(self):
        data = report_to_dict(analyze(hexagon()))
        entry = next(c for c in data["checks"] if c["name"] == "casagrande")
        assert entry["bound"] == 4
        assert entry["rho"] == 4
        assert entry["satisfied"] is True

    def test_simplex_minimal_component_entry(self):
        data = report_to_dict(analyze(simplex(2)))
        assert data["minimal_components"] == [
            {"indices": [0, 1, 2], "degree": 3, "codegree": 0}
        ]

    def test_invalid_input_record(self):
        data = report_to_dict(analyze(FanoPolytope(2, ((2, 0), (0, 1), (-1, -1)), "bad")))
        assert data["valid"] is False
        assert data["primitive_relations"] == []
        assert data["minimal_components"] == []
        assert data["checks"] == []

    def test_write_report_round_trips_through_json(self):
        sink = io.StringIO()
        text = write_report(analyze(simplex(2)), sink)
        assert sink.getvalue() == text
        assert json.loads(text)["picard_rank"] == 1

    def test_serialization_is_stable(self):
        a = json.dumps(report_to_dict(analyze(hexagon())), sort_keys=True)
        b = json.dumps(report_to_dict(analyze(hexagon())), sort_keys=True)
        assert a == b


class TestBatchAggregation:
    def test_exit_codes(self):
        good = [analyze(simplex(2)), analyze(hexagon())]
        assert batch_exit_code(good) == 0
        bad = good + [analyze(FanoPolytope(2, ((2, 0), (0, 1), (-1, -1)), "bad"))]
        assert batch_exit_code(bad) == 1

    def test_summary_counts(self):
        reports = [
            analyze(simplex(2)),
            analyze(hexagon()),
            analyze(FanoPolytope(2, ((2, 0), (0, 1), (-1, -1)), "bad")),
        ]
        summary = batch_to_dict(reports)["summary"]
        assert summary["polytopes"] == 3
        assert summary["validation_failures"] == 1
        assert summary["theorem_violations"] == 0
        assert summary["conjecture_violations"] == 0
        # the hexagon's literal cfh and codegree-1 failures land here
        assert summary["out_of_range_failures"] == 6
