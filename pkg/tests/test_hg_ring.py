import pytest
from hypothesis import given, settings, strategies as st

from strategies import hg_polys, unit_divisors
from trigonal5.hg_ring import (
    BM,
    COHOM,
    AmbiguousSolveError,
    CancellationPattern,
    CountPoly,
    DivisionRemainderError,
    HGPoly,
    KindMismatchError,
    SolveError,
    alexander_dual,
    alexander_dual_inverse,
    bm_to_cohomology,
    cohomology_to_bm,
    enumerate_fibration_solutions,
    euler_specialize,
    exact_div,
    solve_degenerate_fibration,
    wang_pattern,
    wang_solve_cstar,
)


def P(s, kind=BM):
    return HGPoly.parse(s, kind)


class TestBasics:
    def test_tate_product_adds_exponents(self):
        assert HGPoly.tate(1, 2) * HGPoly.tate(2, 4) == HGPoly.tate(3, 6)

    def test_parse_and_pretty_roundtrip(self):
        for s in ["L^-4 t^8 + L^-3 t^6", "L^11 t^12 + L^3 t^5 + L t^2 + 1", "2 L^-14 t^29 - L^2 t^3"]:
            kind = COHOM if "L^11" in s else BM
            assert P(s, kind).pretty() == s

    def test_parse_braces(self):
        assert P("L^{12}t^{13}+1", COHOM) == P("L^12 t^13 + 1", COHOM)

    def test_zero_pretty(self):
        assert HGPoly.zero().pretty() == "0"

    def test_kinds_do_not_mix(self):
        with pytest.raises(KindMismatchError):
            HGPoly.one(BM) + HGPoly.one(COHOM)

    def test_json_order_and_roundtrip(self):
        p = P("L^11 t^12 + L^3 t^5 + L t^2 + 1", COHOM)
        js = p.to_json()
        assert [(t["weight"], t["degree"]) for t in js["terms"]] == [(0, 0), (-1, 2), (-3, 5), (-11, 12)]
        assert HGPoly.from_json(js) == p

    def test_rank_counts_multiplicity(self):
        assert P("2 L^-3 t^6 + L^-1 t^2").rank() == 3


class TestDualities:
    def test_poincare_on_p1(self):
        # H(P^1) = 1 + L t^2 ; BM(P^1) = Q(1)@2 + Q@0
        assert cohomology_to_bm(P("1 + L t^2", COHOM), 1) == P("L^-1 t^2 + 1")

    def test_alexander_adds_unit(self):
        assert alexander_dual(HGPoly.zero(), 3) == HGPoly.one(COHOM)

    def test_alexander_of_top_class(self):
        # BM class Q(17) in degree 34 in C^18 goes to Q(-1) in degree 1
        assert alexander_dual(HGPoly.tate(17, 34), 18) == P("1 + L t", COHOM)

    def test_alexander_rejects_degree_zero(self):
        with pytest.raises(ValueError):
            alexander_dual(HGPoly.tate(5, 35), 18)

    @given(hg_polys(COHOM), st.integers(1, 12))
    def test_poincare_involution(self, p, n):
        assert bm_to_cohomology(cohomology_to_bm(p, n), n) == p

    @given(hg_polys(BM), st.integers(6, 12))
    def test_alexander_involution(self, p, n):
        assert alexander_dual_inverse(alexander_dual(p, n), n) == p


class TestRing:
    @given(hg_polys(), hg_polys())
    def test_commutative(self, a, b):
        assert a * b == b * a and a + b == b + a

    @given(hg_polys(), hg_polys(), hg_polys())
    def test_associative_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(hg_polys(), hg_polys())
    def test_euler_is_multiplicative(self, a, b):
        assert euler_specialize(a * b) == euler_specialize(a) * euler_specialize(b)
        assert euler_specialize(a + b) == euler_specialize(a) + euler_specialize(b)

    @settings(max_examples=200)
    @given(hg_polys(), unit_divisors())
    def test_division_roundtrip(self, a, d):
        assert exact_div(a * d, d) == a

    def test_division_remainder(self):
        with pytest.raises(DivisionRemainderError):
            exact_div(P("1 + L^-1 t^2"), P("1 + L^-1 t"))

    def test_division_needs_unit_lead(self):
        with pytest.raises(ValueError):
            exact_div(P("L^-1 t^2"), P("L^-1 t^2"))


class TestCountPoly:
    def test_str(self):
        assert str(CountPoly.from_dict({11: 1, 10: 1, 8: -1, 0: 1})) == "q^11 + q^10 - q^8 + 1"

    def test_evaluation(self):
        assert CountPoly.from_dict({11: 1, 10: 1, 8: -1, 0: 1})(2) == 2817

    def test_odd_degrees_count_negatively(self):
        assert euler_specialize(P("L^-2 t^4 + 4 L^-1 t^3 + 3")) == CountPoly.from_dict({2: 1, 1: -4, 0: 3})


class TestFibrationSolver:
    def test_wang_on_trivial_bundle(self):
        base = P("1 + L^2 t^3", COHOM)
        total = base * P("1 + L t", COHOM)
        got, killed = wang_solve_cstar(total)
        assert got == base and killed == []

    def test_wang_single_pair(self):
        # base 1 + L t^2 with d2 killing (0,1) against (2,0)
        base = P("1 + L t^2", COHOM)
        total = base * P("1 + L t", COHOM) - P("L t + L t^2", COHOM)
        got, killed = wang_solve_cstar(total)
        assert got == base and killed == [((0, 1), (2, 0))]

    def test_minimal_level_is_unique_for_the_gl2_quotient(self):
        x = P("1 + L^2 t^3 + L^3 t^5 + L^4 t^6 + L^11 t^12 + L^12 t^13", COHOM)
        sols = enumerate_fibration_solutions(x, wang_pattern(), max_pairs=4)
        levels = sorted({len(s.pairs) for s in sols})
        assert levels[0] == 1
        assert sum(len(s.pairs) == 1 for s in sols) == 1

    def test_non_minimal_alternative_exists(self):
        x = P("1 + L^2 t^3 + L^3 t^5 + L^4 t^6 + L^11 t^12 + L^12 t^13", COHOM)
        sols = enumerate_fibration_solutions(x, wang_pattern(), exact_pairs=3)
        assert P("1 + L t^2 + L^2 t^3 + L^2 t^4 + L^3 t^5 + L^11 t^12", COHOM) in [s.unknown for s in sols]

    def test_no_solution(self):
        with pytest.raises(SolveError):
            solve_degenerate_fibration(P("L t", COHOM), wang_pattern(), max_pairs=1)

    def test_ambiguity_is_reported(self):
        # pair sources t^2 and t^6 both leave a quotient by 1 + t^2
        pat = CancellationPattern(P("1 + t^2"), P("t"), (("src", (0, 2)), ("tgt", (0, 0))), False)
        with pytest.raises(AmbiguousSolveError):
            solve_degenerate_fibration(P("t^9 + t^7 + t^6 + t^5 + t^4 + t^2"), pat, max_pairs=2)

    def test_pattern_rejects_unit_source(self):
        with pytest.raises(ValueError):
            CancellationPattern(P("1 + L t"), P("t"), (("src", (0, 0)),), False)
