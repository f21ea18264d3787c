"""Column polynomials of the discriminant resolution and the appendix triviality checks.

Column ``p`` of the main page is a ``C^d x (open m-simplex)``-bundle over a
configuration space ``X_p``; its BM polynomial is that of ``X_p`` (with sign
coefficients where the configuration is unordered) shifted by ``(d, 2d + m)``.
Table coordinates: a class of total degree ``n`` in column ``p`` sits in row
``n - p`` with ``A = 1, ..., H = 8, L = 9, M = 10``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from . import config_blocks as cb
from .derivation import Derivation, DerivationError
from .group_rep import VirtualCharacter, isotypic_multiplicity, sign_local_system
from .hg_ring import CancellationPattern, HGPoly, hg_mul, hg_shift, solve_degenerate_fibration
from .spectral_page import SSPage

tate = cb.tate

COLUMN_INDEX = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 5, "F": 6, "G": 7, "H": 8, "L": 9, "M": 10}
COLUMN_IDS = ("A", "B", "C", "D", "E", "F", "G", "H", "I+J", "L", "M")


@dataclass(frozen=True)
class Factor:
    name: str
    twisted: bool
    build: Callable[[], HGPoly]


FACTORS = {
    "P1": Factor("P1", False, lambda: cb.bm_proj(1)),
    "P2-pt": Factor("P2-pt", False, lambda: cb.bm_cells(cb.P2_MINUS_PT)),
    "B(P1,2)": Factor("B(P1,2)", True, lambda: cb.bm_B_proj_twisted(1, 2)),
    "B(P2-pt,2)": Factor("B(P2-pt,2)", True, lambda: cb.generic_twisted_config(2)),
}


@dataclass(frozen=True)
class ColumnSpec:
    id: str
    factors: tuple[str, ...]
    d: int
    m: int

    def __post_init__(self):
        if self.d < 0 or self.m < 0:
            raise ValueError("fiber and simplex dimensions are nonnegative")

    @property
    def index(self) -> int:
        return COLUMN_INDEX[self.id]

    @property
    def twisted(self) -> tuple[bool, ...]:
        return tuple(FACTORS[f].twisted for f in self.factors)

    def to_json(self) -> dict:
        return {"id": self.id, "base": " x ".join(self.factors), "d": self.d, "m": self.m,
                "twisted": list(self.twisted)}


SIMPLE_COLUMNS: dict[str, ColumnSpec] = {
    s.id: s
    for s in (
        ColumnSpec("A", ("P1",), 15, 0),
        ColumnSpec("B", ("P2-pt",), 15, 0),
        ColumnSpec("C", ("B(P1,2)",), 13, 1),
        ColumnSpec("D", ("P1", "P2-pt"), 12, 1),
        ColumnSpec("E", ("B(P2-pt,2)",), 12, 1),
        ColumnSpec("F", ("P2-pt", "B(P1,2)"), 10, 2),
        ColumnSpec("G", ("B(P2-pt,2)", "P1"), 9, 2),
        ColumnSpec("H", ("B(P2-pt,2)", "B(P1,2)"), 7, 3),
    )
}
COLUMN_L_DIMS = (1, 7)  # F_L is a C x (open 7-simplex)-bundle over X_L

# ---------------------------------------------------------------------------
# columns A-H


def column_simple_derivation(cid: str) -> Derivation:
    if cid not in SIMPLE_COLUMNS:
        raise KeyError(f"unknown simple column {cid!r}; known: {sorted(SIMPLE_COLUMNS)}")
    spec = SIMPLE_COLUMNS[cid]
    der = Derivation(f"column {cid}")
    der.data("spec", spec)
    base = HGPoly.one()
    for name in spec.factors:
        f = FACTORS[name]
        poly = der.compute(f"{'twisted ' if f.twisted else ''}BM of {name}", f.build)
        base = der.compute("multiply", hg_mul, base, poly)
    fibre = der.compute(f"C^{spec.d} bundle", hg_shift, base, spec.d, 2 * spec.d)
    der.compute(f"open {spec.m}-simplex", hg_shift, fibre, 0, spec.m)
    return der


def column_simple(cid: str) -> HGPoly:
    return column_simple_derivation(cid).result


# ---------------------------------------------------------------------------
# column I+J


CONE_DATA = tate(2, 4)  # the quadric cone of collinear triples, a cone over a conic


def column_IJ_derivation() -> Derivation:
    der = Derivation("column I+J")
    const_row, local_row = der.include(cb.ztilde_fiber_derivation(), "fiber")

    # constant coefficients on the ordered cover: fibre C^3 minus a quadric cone
    fibre = der.compute("C^3 minus the cone", cb.bm_strata_subtract, tate(3, 6), CONE_DATA)
    reps = der.data(
        "S3 action on constant-coefficient classes",
        {f"{d}": VirtualCharacter.of("S3", triv=m) for (_, d), m in sorted(fibre.terms.items())},
        note="invariant under u <-> v, hence under all of S3",
    )
    const_anti = der.compute(
        "S3-anti-invariant multiplicity (constant)",
        lambda rs: sum(isotypic_multiplicity(v, "sign") for v in rs.values()),
        reps,
    )
    der.check("no anti-invariant constant classes", const_anti == 0)

    # J-coefficients: Gysin sequence for the open type-J and closed type-I parts
    bj = der.data("type J part, J-coefficients", tate(1, 2), note="one class, S3-invariant")
    bi = der.data("type I part, J-coefficients", HGPoly.zero(), note="normalisation has the homology of Y_I")
    glued = der.compute("Gysin sequence", cb.bm_strata_glue, bj, bi)
    local_reps = der.data(
        "S3 action on J-coefficient classes",
        {f"{d}": VirtualCharacter.of("S3", triv=m) for (_, d), m in sorted(glued.terms.items())},
    )
    local_anti = der.compute(
        "S3-anti-invariant multiplicity (J)",
        lambda rs: sum(isotypic_multiplicity(v, "sign") for v in rs.values()),
        local_reps,
    )
    der.check("no anti-invariant J-classes", local_anti == 0)

    base_const = HGPoly.zero() if const_anti == 0 else None
    base_local = HGPoly.zero() if local_anti == 0 else None
    rows = der.compute("row 3 (constant) + row 2 (J)", lambda a, b, c, d: a * c + b * d,
                       base_const, base_local, const_row, local_row)
    der.check("F_{I+J} vanishes", not rows)
    return der


def column_IJ() -> HGPoly:
    return column_IJ_derivation().result


# ---------------------------------------------------------------------------
# column L

LCAL_QUOTED = HGPoly.parse("L^-8 t^18 + L^-6 t^15 + L^-5 t^13 + L^-3 t^10")


def p2_fibration_pattern() -> CancellationPattern:
    """BM page of a bundle over ``P^2``: ``d^2`` from column ``2j`` to ``2j - 2``, one row up."""
    return CancellationPattern(
        factor=cb.bm_proj(2),
        step=tate(1, 1),
        kills=(("src", (1, 2)), ("tgt", (0, 0)), ("src", (2, 4)), ("tgt", (1, 2))),
        cohomological=False,
    )


def _fibration_page(base: HGPoly, fibre: HGPoly) -> SSPage:
    page = SSPage()
    for (wb, db), mb in base.terms.items():
        for (wf, df), mf in fibre.terms.items():
            page.add(db, df, tate(wb + wf, db + df, mb * mf))
    return page


def column_L_derivation() -> Derivation:
    der = Derivation("column L")
    reps = der.compute("M_{0,5} classes as D4 representations", cb.bm_M05_as_D4)
    w = der.compute("sign local system of the figure action", sign_local_system, cb.FIGURE_ACTION)
    der.check("local system is psi2", w == "psi2")
    mults = der.compute(
        "psi2-multiplicities by degree",
        lambda rs, irr: [(d, isotypic_multiplicity(v, irr)) for d, v, _ in rs],
        reps, w,
    )
    der.check("only degree 2 survives", all(m == 0 for d, m in mults if d != 2))
    y = der.compute(
        "BM of Y with coefficients in W",
        lambda rs, ms: sum((tate(wt, d, m) for (d, _, wt), (_, m) in zip(rs, ms)), HGPoly.zero()),
        reps, mults,
    )
    pgl = der.compute("BM of PGL(3)", cb.bm_PGL3)
    lcal = der.compute("BM of the space with P free", hg_mul, y, pgl)
    der.check("agrees with the quoted classes", lcal == LCAL_QUOTED)

    sol = der.compute("solve the P2-fibration", solve_degenerate_fibration, lcal, p2_fibration_pattern())
    xl = sol.unknown
    der.data("X_L", xl)
    page = _fibration_page(cb.bm_proj(2), xl)
    named = []
    for (_, x) in sol.pairs:
        for p in (2, 4):
            w_src = next(iter(page[(p, x)].terms))[0]
            page.differential(2, (p, x), w_src)
            named.append(f"d2_{p},{x}")
    der.data("page after the forced differentials", page.copy())
    der.check("forced differentials are d2_{2,10}, d2_{4,10}, d2_{2,13}, d2_{4,13}",
              sorted(named) == sorted(["d2_2,10", "d2_4,10", "d2_2,13", "d2_4,13"]))
    der.check("limit equals the total space", page.total() == lcal)
    d, m = COLUMN_L_DIMS
    fl = der.compute("C bundle", hg_shift, xl, d, 2 * d)
    der.compute("open 7-simplex", hg_shift, fl, 0, m)
    return der


def column_L() -> HGPoly:
    return column_L_derivation().result


def column_L_page() -> SSPage:
    return _fibration_page(cb.bm_proj(2), column_L_X())


def column_L_X() -> HGPoly:
    d, m = COLUMN_L_DIMS
    return hg_shift(column_L(), -d, -2 * d - m)


# ---------------------------------------------------------------------------
# column M

# (column, row, weight, multiplicity) of the cone page before any differential
TABLE2 = (
    ("A", 1, 1, 1), ("A", -1, 0, 1),
    ("B", 2, 2, 1), ("B", 0, 1, 1),
    ("C", 0, 1, 1),
    ("D", 3, 3, 1), ("D", 1, 2, 2), ("D", -1, 1, 1),
    ("E", 2, 3, 1),
    ("F", 2, 3, 1), ("F", 0, 2, 1),
    ("G", 3, 4, 1), ("G", 1, 3, 1),
    ("H", 3, 4, 1),
    ("L", 12, 6, 1), ("L", 11, 5, 1), ("L", 9, 4, 1), ("L", 8, 3, 1),
)


def column_dims(cid: str) -> tuple[int, int]:
    if cid == "L":
        return COLUMN_L_DIMS
    s = SIMPLE_COLUMNS[cid]
    return s.d, s.m


@lru_cache(maxsize=None)
def all_columns() -> dict[str, HGPoly]:
    out = {c: column_simple(c) for c in SIMPLE_COLUMNS}
    out["I+J"] = column_IJ()
    out["L"] = column_L()
    return out


def cone_page() -> SSPage:
    cols = all_columns()
    page = SSPage()
    for cid in ("A", "B", "C", "D", "E", "F", "G", "H", "L"):
        d, _ = column_dims(cid)
        page.place(COLUMN_INDEX[cid], hg_shift(cols[cid], -d, -2 * d))
    return page


def table2_entries() -> list[tuple[int, int, int, int]]:
    return sorted((COLUMN_INDEX[c], q, w, m) for c, q, w, m in TABLE2)


def page2_matchings(page: SSPage, columns: range) -> list[tuple[tuple, ...]]:
    """All ways to pair every class in ``columns`` by ``d^2: (p, q) -> (p - 2, q + 1)``.

    Classes with equal cell and weight are interchangeable, so a matching is
    a multiset of ``(source, target, weight)`` triples.
    """
    pool = Counter()
    for (p, q), poly in page.cells.items():
        if p in columns:
            for (w, _), m in poly.terms.items():
                pool[(p, q, w)] += m
    found: set[tuple] = set()

    def go(pool: Counter, acc: list):
        live = sorted(k for k, v in pool.items() if v > 0)
        if not live:
            found.add(tuple(sorted(acc)))
            return
        p, q, w = live[0]
        for partner, pair in (
            ((p - 2, q + 1, w), ((p, q), (p - 2, q + 1), w)),
            ((p + 2, q - 1, w), ((p + 2, q - 1), (p, q), w)),
        ):
            if pool.get(partner, 0) > 0:
                pool[(p, q, w)] -= 1
                pool[partner] -= 1
                go(pool, acc + [pair])
                pool[(p, q, w)] += 1
                pool[partner] += 1

    go(pool, [])
    return sorted(found)


def column_M_derivation() -> Derivation:
    der = Derivation("column M")
    page = der.compute("cone page: columns un-shifted by their vector bundles", cone_page)
    der.check("matches the tabulated cone page", page.entries() == table2_entries(), ref="table 2")
    page = page.copy()
    page.differential(1, (COLUMN_INDEX["H"], 3), 4)
    der.data("d1 from H to G", page.differentials[-1], ref="table 2")

    # the cone point: one class Q in degree 0 is the augmentation
    if page[(1, -1)][(0, 0)] < 1:
        raise DerivationError("column M: no class Q(0) in degree 0 to remove")
    page.add(1, -1, tate(0, 0, -1))
    der.data("remove the cone point class", tate(0, 0))

    matchings = der.compute("page-2 matchings among A-G", page2_matchings, page.copy(), range(1, 8))
    der.check("a unique perfect matching exists", len(matchings) == 1,
              note=f"{len(matchings)} matchings found")
    for src, _, w in matchings[0]:
        page.differential(2, src, w)
    der.data("page after all differentials", page.copy())
    survivors = der.compute("survivors", SSPage.total, page.copy())
    der.check("only column L survives", set(p for p, _ in page.cells) == {COLUMN_INDEX["L"]})
    der.compute("open cone shifts degrees by one", hg_shift, survivors, 0, 1)
    return der


def column_M() -> HGPoly:
    return column_M_derivation().result


COLUMN_BUILDERS: dict[str, Callable[[], Derivation]] = {
    **{c: (lambda c=c: column_simple_derivation(c)) for c in SIMPLE_COLUMNS},
    "I+J": column_IJ_derivation,
    "L": column_L_derivation,
    "M": column_M_derivation,
}


def column(cid: str) -> HGPoly:
    return COLUMN_BUILDERS[cid]().result


# ---------------------------------------------------------------------------
# appendix configurations 42-59


def _fibre_vanishes(title: str, fibre: str, cells: tuple[int, ...], k: int, base: str) -> Derivation:
    der = Derivation(title)
    der.data("base", base)
    f = der.compute(f"twisted BM of the fibre {fibre}", cb.bm_cell_config, cb.CellComplexSpec(cells), k, ref="lemma 2.1")
    der.check("fibre has no twisted homology", not f, ref="lemma 2.1")
    der.compute("total space", lambda x: x * 0, f)
    return der


def _product_fibre(title: str, factors: list[tuple[str, Callable[[], HGPoly]]], note: str = "") -> Derivation:
    der = Derivation(title)
    total = HGPoly.one()
    for name, fn in factors:
        part = der.compute(f"BM of {name}", fn)
        total = der.compute("multiply", hg_mul, total, part)
    der.check("fibre has no twisted homology", not total, note=note)
    der.compute("total space", lambda x: x * 0, total)
    return der


def _b_cells(n: int, k: int) -> Callable[[], HGPoly]:
    return lambda: cb.bm_cell_config(cb.CellComplexSpec.of(n), k)


def _b_cstar(k: int) -> Callable[[], HGPoly]:
    return lambda: cb.total_of(cb.bm_B_Cstar_twisted(k))


def _config49() -> Derivation:
    der = Derivation("configuration 49")
    z = der.data("twisted BM of the conic fibre C - {0,1}", tate(0, 1), note="class T1 - T2")
    lz = der.data("BM of the line space with coefficients in H_1 of the fibre", tate(0, 0))
    y = der.compute("BM of the fibre Y", hg_mul, lz, z)
    base = der.compute("twisted BM of generic 4-point configurations", cb.generic_twisted_config, 4, ref="lemma 2.3")
    der.data("generic configurations used beyond the verified range", sorted(cb.GENERIC_VERIFIED),
             note="k = 4 relies on the full-space value")
    der.check("base has no twisted homology", not base, ref="lemma 2.3")
    der.compute("total space", hg_mul, base, y)
    return der


def _p1_minus_three_points() -> dict[str, HGPoly]:
    total = {"S3": cb.bm_proj(1)}
    removed = {"S3": tate(0, 0), "S21": tate(0, 0)}  # permutation representation on 3 points
    return cb.equivariant_subtract("S3", total, removed)


def _config52() -> Derivation:
    der = Derivation("configuration 52")
    der.data("fibre B(C,2), constant coefficients", tate(2, 4))
    f1 = der.compute("twisted BM of generic triples", cb.generic_twisted_config, 3, ref="lemma 2.3")
    der.check("first base factor has no anti-invariant classes", not f1, ref="lemma 2.3")
    f2 = der.compute("P1 minus three points as S3-representations", _p1_minus_three_points)
    der.check("second base factor is S3 in degree 2 and S21 in degree 1",
              f2 == {"S3": tate(1, 2), "S21": tate(0, 1)})
    der.check("second base factor has no anti-invariant classes", "S111" not in f2)
    der.compute("total space", lambda: HGPoly.zero())
    return der


# untwisted and twisted BM of the base, indexed by the S2-parity of the fibre class
B2_UNTWISTED_QUOTED = tate(4, 8)


def _two_row_page(title: str, fibre: list[tuple[HGPoly, int]], bases: dict[int, HGPoly],
                  forced: list[tuple[tuple[int, int], int]]) -> Derivation:
    der = Derivation(title)
    page = SSPage()
    for cls, parity in fibre:
        (wf, df), = cls.terms
        for (wb, db), mb in bases[parity].terms.items():
            page.add(db, df, tate(wb + wf, db + df, mb))
    der.data("E2 page", page.copy())
    for src, w in forced:
        page.differential(2, src, w)
    der.data("forced isomorphisms", list(page.differentials))
    der.check("page is empty after the forced differentials", not page.cells)
    der.compute("total space", SSPage.total, page)
    return der


def _config53(title: str) -> Derivation:
    der = Derivation(title)
    untw = der.data("BM of B(P2 - P, 2)", B2_UNTWISTED_QUOTED)
    tw = der.compute("twisted BM of B(P2 - P, 2)", cb.generic_twisted_config, 2, ref="lemma 2.3")
    fibre = [(tate(0, 5), 1), (tate(1, 6), 1), (tate(1, 6), -1), (tate(2, 7), -1)]
    der.data("fibre Y with S2 parities", [(c, s) for c, s in fibre])
    sub = _two_row_page(title, fibre, {1: untw, -1: tw}, [((8, 5), 4), ((8, 6), 5)])
    return _merge(der, sub)


def _config56() -> Derivation:
    der = Derivation("configuration 56")
    gen = der.compute("generic ordered pairs", lambda: cb.generic_pairs_derivation().result, ref="lemma 2.4")
    tw = der.compute("twisted generic pairs", cb.generic_twisted_config, 2, ref="lemma 2.6")
    untw = der.compute("invariant part", HGPoly.__sub__, gen, tw)
    fibre = [(tate(0, 4), 1), (tate(1, 5), -1)]
    der.data("fibre with S2 parities", [(c, s) for c, s in fibre], ref="lemma 2.2")
    sub = _two_row_page("configuration 56", fibre, {1: untw, -1: tw}, [((8, 4), 4)])
    return _merge(der, sub)


def _merge(head: Derivation, tail: Derivation) -> Derivation:
    for s in tail.steps:
        head.steps.append(s)
    return head


def _config47_48(n: int) -> Derivation:
    der = Derivation(f"configuration {n}")
    der.data("coincides with", "column I+J")
    der.include(column_IJ_derivation(), "column I+J")
    return der


def _config55() -> Derivation:
    der = Derivation("configuration 55")
    der.data("coincides with", "column L", note="contributes a nonzero column, not a trivial configuration")
    der.include(column_L_derivation(), "column L")
    return der


APPENDIX: dict[int, Callable[[], Derivation]] = {
    42: lambda: _fibre_vanishes("configuration 42", "B(C,5)", (1,), 5, "conics through P"),
    43: lambda: _fibre_vanishes("configuration 43", "B(C,4)", (1,), 4, "conics through P"),
    44: lambda: _product_fibre("configuration 44", [("B(C*,2)", _b_cstar(2)), ("B(C,3)", _b_cells(1, 3))],
                               "quotient by the line swap of a zero group"),
    45: lambda: _product_fibre("configuration 45", [("B(C,3)", _b_cells(1, 3)), ("B(C,3)", _b_cells(1, 3))]),
    46: lambda: _product_fibre("configuration 46", [("B(C,3)", _b_cells(1, 3)), ("B(C,3)", _b_cells(1, 3))]),
    47: lambda: _config47_48(47),
    48: lambda: _config47_48(48),
    49: _config49,
    50: lambda: _product_fibre("configuration 50", [("B(C,2)", _b_cells(1, 2)), ("B(C,2)", _b_cells(1, 2))]),
    51: lambda: _product_fibre("configuration 51", [("C*", cb.bm_cstar), ("B(C,3)", _b_cells(1, 3))]),
    52: _config52,
    53: lambda: _config53("configuration 53"),
    54: lambda: _config53("configuration 54"),
    55: _config55,
    56: _config56,
    57: lambda: _product_fibre("configuration 57", [("B(C,2)", _b_cells(1, 2)), ("B(C,2)", _b_cells(1, 2)),
                                                   ("C", lambda: tate(1, 2))]),
    58: lambda: _fibre_vanishes("configuration 58", "B(C^2,3)", (2,), 3, "B(P1,2)"),
    59: lambda: _fibre_vanishes("configuration 59", "B(C^2,2)", (2,), 2, "B(P1,3)"),
}


def appendix_check(config: int) -> Derivation:
    if config not in APPENDIX:
        raise KeyError(f"unknown configuration {config}; known: {sorted(APPENDIX)}")
    return APPENDIX[config]()
