import pytest

from trigonal5 import spectral as sp
from trigonal5.hg_ring import COHOM, HGPoly
from trigonal5.spectral_page import PageError, SSPage


class TestPage:
    def test_add_checks_degree(self):
        page = SSPage()
        with pytest.raises(PageError):
            page.add(1, 1, HGPoly.tate(0, 3))

    def test_homological_differential(self):
        page = SSPage()
        page.add(3, 0, HGPoly.tate(1, 3))
        page.add(1, 1, HGPoly.tate(1, 2))
        page.differential(2, (3, 0), weight=1)
        assert not page.cells and page.differentials[0].target == (1, 1)

    def test_cohomological_direction(self):
        page = SSPage(cohomological=True, kind=COHOM)
        assert page.target_of(2, (0, 1)) == (2, 0)

    def test_differential_needs_classes(self):
        page = SSPage()
        page.add(3, 0, HGPoly.tate(1, 3))
        with pytest.raises(PageError):
            page.differential(2, (3, 0), weight=1)

    def test_place_and_total(self):
        page = SSPage()
        p = HGPoly.parse("L^-2 t^5 + L^-1 t^3")
        page.place(2, p)
        assert page.total() == p and page.column(2) == p
        assert page.entries() == [(2, 1, 1, 1), (2, 3, 2, 1)]

    def test_render_is_deterministic(self):
        assert sp.render_table3() == sp.render_table3()


class TestMainTable:
    def test_table3(self):
        assert sp.main_page().entries() == sp.table3_entries()

    def test_table3_cell_count(self):
        # 22 printed cells, one of which holds two classes
        assert len(sp.TABLE3) == 22 and sum(m for *_, m in sp.TABLE3) == 23

    def test_dim_v(self):
        assert sp.DIM_V == sp.N == 18

    def test_weight_bound(self):
        _, sigma = sp.assemble_main_table()
        assert sp.weight_bound_violations(sigma) == []
        assert sp.weight_bound_violations(HGPoly.tate(3, 4)) == [(3, 4)]


@pytest.fixture(scope="module")
def result():
    return sp.run_pipeline()


class TestPipeline:
    def test_ok(self, result):
        assert result.ok

    def test_t5(self, result):
        assert result.T5 == sp.T5_POLY

    def test_t5_h5(self, result):
        assert result.T5_H5 == sp.T5_H5_POLY

    def test_quotient(self, result):
        assert result.X_mod_GL2 == sp.X_MOD_GL2

    def test_single_killed_pair(self, result):
        assert result.killed == [((0, 1), (2, 0))]

    def test_derivation_replays(self, result):
        assert result.derivation.replay()

    def test_json_keys(self, result):
        assert set(result.to_json()) == {"Sigma", "X", "X/GL2", "T5", "T5+H5", "killed"}

    def test_wennink(self, result):
        w = sp.wennink_check(result.T5)
        assert w.ok and w.count(2) == 2817
        assert str(w.count) == "q^11 + q^10 - q^8 + 1"


@pytest.mark.parametrize("tid", sorted(sp.TABLES))
def test_tables_render(tid):
    assert sp.TABLES[tid]().strip()


def test_table4_layout():
    page = sp.table4_page()
    assert page.cohomological and set(q for _, q in page.cells) == {0, 1}
