"""Bigraded spectral sequence pages with recorded differentials."""

from __future__ import annotations

from dataclasses import dataclass, field

from .hg_ring import BM, HGPoly

Cell = tuple[int, int]


class PageError(ValueError):
    """A differential does not connect existing classes correctly."""


@dataclass(frozen=True)
class Differential:
    r: int
    source: Cell
    target: Cell
    weight: int
    mult: int = 1

    def to_json(self) -> dict:
        return {"r": self.r, "source": list(self.source), "target": list(self.target),
                "weight": self.weight, "mult": self.mult}


@dataclass
class SSPage:
    """Mapping ``(p, q) -> HGPoly``; a class in cell ``(p, q)`` has total degree ``p + q``.

    Homological pages send ``d^r: (p, q) -> (p - r, q + r - 1)``; cohomological
    pages send ``(p, q) -> (p + r, q - r + 1)``.  Entries store the classes with
    their total degree, so a differential must keep the weight and change the
    stored degree by exactly one.
    """

    cells: dict[Cell, HGPoly] = field(default_factory=dict)
    cohomological: bool = False
    kind: str = BM
    differentials: list[Differential] = field(default_factory=list)

    def add(self, p: int, q: int, poly: HGPoly) -> None:
        for (_, d) in poly.terms:
            if d != p + q:
                raise PageError(f"class in degree {d} does not belong to cell ({p}, {q})")
        cur = self.cells.get((p, q), HGPoly.zero(poly.kind)) + poly
        if cur:
            self.cells[(p, q)] = cur
        else:
            self.cells.pop((p, q), None)

    def place(self, p: int, poly: HGPoly) -> None:
        """Add a column polynomial at index ``p``, each class in row ``degree - p``."""
        for (w, d), m in sorted(poly.terms.items()):
            self.add(p, d - p, HGPoly.tate(w, d, m, poly.kind))

    def __getitem__(self, cell: Cell) -> HGPoly:
        return self.cells.get(cell, HGPoly.zero(self.kind))

    def target_of(self, r: int, source: Cell) -> Cell:
        p, q = source
        return (p + r, q - r + 1) if self.cohomological else (p - r, q + r - 1)

    def differential(self, r: int, source: Cell, weight: int, mult: int = 1) -> Differential:
        """Record an isomorphism between ``mult`` classes of ``weight`` and remove them."""
        target = self.target_of(r, source)
        src_d = sum(source)
        tgt_d = sum(target)
        step = 1 if self.cohomological else -1
        if tgt_d - src_d != step:
            raise PageError("differential must change the total degree by one")
        if self[source][(weight, src_d)] < mult or self[target][(weight, tgt_d)] < mult:
            raise PageError(f"d{r} {source} -> {target} on Q({weight}) needs classes at both ends")
        self.add(*source, HGPoly.tate(weight, src_d, -mult, self.kind))
        self.add(*target, HGPoly.tate(weight, tgt_d, -mult, self.kind))
        dd = Differential(r, source, target, weight, mult)
        self.differentials.append(dd)
        return dd

    def total(self) -> HGPoly:
        out = HGPoly.zero(self.kind)
        for poly in self.cells.values():
            out = out + poly
        return out

    def column(self, p: int) -> HGPoly:
        out = HGPoly.zero(self.kind)
        for (pp, _), poly in self.cells.items():
            if pp == p:
                out = out + poly
        return out

    def copy(self) -> "SSPage":
        return SSPage(dict(self.cells), self.cohomological, self.kind, list(self.differentials))

    def entries(self) -> list[tuple[int, int, int, int]]:
        """``(p, q, weight, mult)`` rows sorted for golden comparisons."""
        out = []
        for (p, q), poly in self.cells.items():
            for (w, _), m in poly.terms.items():
                out.append((p, q, w, m))
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "cohomological": self.cohomological,
            "cells": [{"p": p, "q": q, "weight": w, "mult": m} for p, q, w, m in self.entries()],
            "differentials": [d.to_json() for d in self.differentials],
        }

    def pretty(self) -> str:
        return "; ".join(f"({p},{q}) {self[(p, q)].pretty()}" for p, q in sorted(self.cells))

    def render(self, col_labels: dict[int, str] | None = None) -> str:
        """Plain-text grid with rows descending, classes written ``Q(w)`` and ``^m`` for multiplicity."""
        if not self.cells:
            return "(empty page)\n"
        ps = sorted({p for p, _ in self.cells})
        qs = sorted({q for _, q in self.cells}, reverse=True)
        if col_labels:
            ps = sorted(set(ps) | set(col_labels))
        else:
            ps = list(range(ps[0], ps[-1] + 1))
        labels = [col_labels.get(p, str(p)) if col_labels else str(p) for p in ps]

        def cell(p, q):
            poly = self[(p, q)]
            parts = []
            for (w, _), m in sorted(poly.terms.items()):
                s = f"Q({w})" if w else "Q"
                parts.append(s + (f"^{m}" if m != 1 else ""))
            return " ".join(parts)

        rows = [[str(q)] + [cell(p, q) for p in ps] for q in range(qs[0], qs[-1] - 1, -1)]
        head = [""] + labels
        widths = [max(len(r[i]) for r in rows + [head]) for i in range(len(head))]
        fmt = lambda r: " | ".join(x.rjust(wd) for x, wd in zip(r, widths)).rstrip()
        out = [fmt(r) for r in rows]
        out.append("-+-".join("-" * wd for wd in widths))
        out.append(fmt(head))
        return "\n".join(out) + "\n"
