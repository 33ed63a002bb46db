import json

import pytest

import codedim.dimensions as dimensions_module
from codedim.betti import hochster_table
from codedim.complexes import (
    SimplicialComplex,
    VertexSet,
    complex_of_code,
    is_clique_complex,
    restrict,
)
from codedim.dimensions import (
    full_report,
    helly_dimension,
    helly_dimension_direct,
    hom_dimension_betti,
    hom_dimension_unreduced,
    leray_dimension,
    leray_dimension_direct,
    report_to_json,
)
from codedim.errors import ConsistencyError, InputError
from codedim.generators import (
    cone_of_cross_polytope,
    cross_polytope,
    full_simplex,
    hollow_simplex,
    code_l26,
    random_complex,
)
from codedim.linalg import PrimeField

GF2 = PrimeField(2)


def table(d, p=2):
    return hochster_table(d, PrimeField(p))


class TestLerayDimension:
    def test_octahedron_with_witness(self):
        value, witness = leray_dimension(table(cross_polytope(2)))
        assert value == 3
        assert (witness.i, witness.sigma.binary()) == (3, "111111")

    def test_cone_over_square_with_witness(self):
        value, witness = leray_dimension(table(cone_of_cross_polytope(1)))
        assert value == 2
        assert (witness.i, witness.sigma.binary()) == (2, "11110")

    def test_full_simplex_empty_maximum(self):
        value, witness = leray_dimension(table(full_simplex(3)))
        assert value == 0
        assert witness is None

    def test_direct_cone_over_octahedron(self):
        assert leray_dimension_direct(cone_of_cross_polytope(2), GF2) == 3

    def test_direct_l26(self):
        assert leray_dimension_direct(complex_of_code(code_l26()), GF2) == 2

    def test_direct_single_vertex(self):
        assert leray_dimension_direct(full_simplex(1), GF2) == 0

    def test_witness_tie_break_prefers_small_step_then_pattern(self):
        # two disjoint hollow triangles: the maximum R=2 is achieved at
        # (1, {1,2,3}) and (1, {4,5,6}); the smaller bit pattern wins
        edges = [0b000011, 0b000101, 0b000110, 0b011000, 0b101000, 0b110000]
        d = SimplicialComplex.from_faces(6, edges)
        value, witness = leray_dimension(table(d))
        assert value == 2
        assert (witness.i, witness.sigma.binary()) == (1, "111000")


class TestHellyDimension:
    def test_l26_with_witness(self):
        value, witness = helly_dimension(table(complex_of_code(code_l26())))
        assert value == 2
        assert witness.sigma.binary() == "1101"

    def test_cross_polytopes_are_all_one(self):
        for i in range(4):
            value, _ = helly_dimension(table(cross_polytope(i)))
            assert value == 1

    def test_full_simplex(self):
        value, witness = helly_dimension(table(full_simplex(3)))
        assert value == 0 and witness is None

    def test_direct_octahedron(self):
        assert helly_dimension_direct(cross_polytope(2)) == 1

    def test_direct_hollow_simplices(self):
        for m in (2, 3, 4, 5):
            assert helly_dimension_direct(hollow_simplex(m)) == m - 1

    def test_direct_cone(self):
        assert helly_dimension_direct(cone_of_cross_polytope(3)) == 1


class TestHomologicalDimension:
    def test_octahedron_betti_route(self):
        value, witness = hom_dimension_betti(table(cross_polytope(2)))
        assert value == 3
        assert (witness.i, witness.sigma.binary()) == (3, "111111")

    def test_cone_over_square_betti_route_is_zero(self):
        value, witness = hom_dimension_betti(table(cone_of_cross_polytope(1)))
        assert value == 0 and witness is None

    def test_square_betti_route(self):
        value, witness = hom_dimension_betti(table(cross_polytope(1)))
        assert value == 2
        assert (witness.i, witness.sigma.binary()) == (2, "1111")

    def test_unreduced_l26_is_contractible(self):
        assert hom_dimension_unreduced(complex_of_code(code_l26()), GF2) == 1

    def test_unreduced_cones(self):
        for i in range(3):
            assert hom_dimension_unreduced(cone_of_cross_polytope(i), GF2) == 1

    def test_unreduced_orthoplex(self):
        assert hom_dimension_unreduced(cross_polytope(3), GF2) == 4

    def test_unreduced_requires_vertices(self):
        with pytest.raises(InputError):
            hom_dimension_unreduced(SimplicialComplex.irrelevant(3), GF2)


class TestFullReport:
    def test_octahedron(self):
        report = full_report(cross_polytope(2), GF2)
        assert report.as_tuple() == (3, 1, 3)
        assert report.homological_unreduced == 3
        assert report.oracle_agreement == {"leray": True, "helly": True}

    def test_bipartite_four(self):
        from codedim.generators import complete_bipartite_clique

        assert full_report(complete_bipartite_clique(4), GF2).as_tuple() == (2, 1, 2)

    def test_cone_over_square(self):
        report = full_report(cone_of_cross_polytope(1), GF2)
        assert report.as_tuple() == (2, 1, 0)
        assert report.homological_unreduced == 1

    def test_full_simplex_all_zero_but_unreduced(self):
        report = full_report(full_simplex(3), GF2)
        assert report.as_tuple() == (0, 0, 0)
        assert report.homological_unreduced == 1
        assert report.witnesses == {}

    def test_irrelevant_complex_has_all_bounds_zero(self):
        # every vertex is a degree-1 generator, but all values are 0
        report = full_report(SimplicialComplex.irrelevant(3), GF2)
        assert report.as_tuple() == (0, 0, 0)
        assert report.homological_unreduced == 0
        assert report.witnesses["helly"].sigma.binary() == "100"

    def test_disagreeing_oracle_is_fatal(self, monkeypatch):
        monkeypatch.setattr(
            dimensions_module, "helly_dimension_direct", lambda d: 99
        )
        with pytest.raises(ConsistencyError):
            full_report(cross_polytope(1), GF2)

    def test_json_is_canonical(self):
        report = full_report(cross_polytope(2), GF2)
        text = report_to_json(report)
        assert json.dumps(json.loads(text), indent=2, sort_keys=True) == text
        parsed = json.loads(text)
        assert parsed["leray"] == 3
        assert parsed["witnesses"]["leray"] == {"i": 3, "sigma": "111111"}


class TestBoundLaws:
    @pytest.mark.parametrize("seed", range(25))
    def test_bound_ordering_and_oracle_agreement(self, seed):
        d = random_complex(6, 0.4 + 0.02 * (seed % 10), seed)
        t = table(d)
        leray, _ = leray_dimension(t)
        helly, _ = helly_dimension(t)
        hom, _ = hom_dimension_betti(t)
        assert leray >= helly
        assert leray >= hom
        assert helly == helly_dimension_direct(d)
        assert leray == leray_dimension_direct(d, GF2)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_helly_agreement_at_several_primes(self, p):
        for seed in range(10):
            d = random_complex(6, 0.5, seed)
            value, _ = helly_dimension(table(d, p))
            assert value == helly_dimension_direct(d)

    @pytest.mark.parametrize("seed", range(10))
    def test_leray_monotone_under_restriction(self, seed):
        d = random_complex(5, 0.5, seed)
        bound, _ = leray_dimension(table(d))
        for bits in range(1, 32):
            r = restrict(d, VertexSet(bits, 5))
            if r.facets:
                value, _ = leray_dimension(table(r))
                assert value <= bound

    @pytest.mark.parametrize("seed", range(15))
    def test_clique_complexes_are_exactly_helly_at_most_one(self, seed):
        d = random_complex(6, 0.45, seed)
        value, _ = helly_dimension(table(d))
        assert is_clique_complex(d) == (value <= 1)

    def test_gap_witnesses_grow_without_bound(self):
        for i in range(5):
            report = full_report(cone_of_cross_polytope(i), GF2)
            assert report.leray - report.helly == i
            assert report.leray - report.homological_betti == i + 1

    def test_hollow_simplex_five(self):
        report = full_report(hollow_simplex(5), GF2)
        assert report.leray == 4
        assert report.helly == 4
