"""Graded Hodge-Grothendieck polynomials over pure Tate classes.

A polynomial is a finite sum of terms ``m * Q(w)`` placed in degree ``d``.
Every class in this package is pure Tate, so the pair (weight index, degree)
identifies a class up to multiplicity.  ``w`` is the Tate twist index: ``Q(w)``
is the one-dimensional structure of Hodge weight ``-2w`` and ``L = [Q(-1)]``.

Two gradings are tracked explicitly: Borel-Moore homological degrees (``BM``)
and cohomological degrees (``COHOM``).  Mixing them is always a bug, so every
binary operation checks the kind.  Both kinds render a class ``Q(w)`` as
``L^{-w}``, so ``Q(3)`` in BM degree 6 prints as ``L^-3 t^6`` and ``Q(-11)``
in cohomological degree 12 prints as ``L^11 t^12``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

BM = "BM"
COHOM = "COHOM"
KINDS = (BM, COHOM)

Key = tuple[int, int]  # (weight, degree)


class KindMismatchError(ValueError):
    """Borel-Moore and cohomological polynomials were combined."""


class DivisionRemainderError(ArithmeticError):
    """Exact division left a nonzero remainder."""


class SolveError(ValueError):
    """A fibration solve has no admissible solution."""


class AmbiguousSolveError(SolveError):
    """A fibration solve has several equally minimal solutions."""


class HGPoly:
    """Immutable integer combination of Tate classes in integer degrees."""

    __slots__ = ("_terms", "_kind", "_hash")

    def __init__(self, terms: Mapping[Key, int] | Iterable[tuple[Key, int]] = (), kind: str = BM):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        acc: dict[Key, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (w, d), m in items:
            key = (int(w), int(d))
            acc[key] = acc.get(key, 0) + int(m)
        self._terms = {k: v for k, v in sorted(acc.items(), key=_order) if v != 0}
        self._kind = kind
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, kind: str = BM) -> "HGPoly":
        return cls({}, kind)

    @classmethod
    def one(cls, kind: str = BM) -> "HGPoly":
        return cls({(0, 0): 1}, kind)

    @classmethod
    def tate(cls, w: int, d: int, m: int = 1, kind: str = BM) -> "HGPoly":
        return cls({(w, d): m}, kind)

    @classmethod
    def parse(cls, text: str, kind: str = BM) -> "HGPoly":
        """Read notation such as ``"L^-4 t^8 + 2 L^-3 t^6"``.

        Braces and ``*`` are accepted, so ``"L^{12}t^{13}+1"`` parses too.
        """
        s = text.replace("{", "").replace("}", "").replace("*", " ").replace("·", " ")
        s = s.replace("−", "-").strip()
        if s in ("", "0"):
            return cls.zero(kind)
        terms: dict[Key, int] = {}
        for sign, body in _split_terms(s):
            body = body.strip()
            m = _TERM_RE.fullmatch(body)
            if not m:
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            coeff, lexp, has_l, texp, has_t = m.group("c"), m.group("le"), m.group("l"), m.group("te"), m.group("t")
            mult = int(coeff) if coeff else 1
            if sign == "-":
                mult = -mult
            a = int(lexp) if lexp is not None else (1 if has_l else 0)
            d = int(texp) if texp is not None else (1 if has_t else 0)
            key = (-a, d)
            terms[key] = terms.get(key, 0) + mult
        return cls(terms, kind)

    # basic protocol

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        for (w, d), m in self._terms.items():
            yield w, d, m

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, key: Key) -> int:
        return self._terms.get(key, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HGPoly):
            return NotImplemented
        return self._kind == other._kind and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._kind, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"HGPoly({self.pretty()!r}, kind={self._kind})"

    def __str__(self) -> str:
        return self.pretty()

    # arithmetic

    def _check(self, other: "HGPoly") -> None:
        if not isinstance(other, HGPoly):
            raise TypeError(f"expected HGPoly, got {type(other).__name__}")
        if other._kind != self._kind:
            raise KindMismatchError(
                f"cannot combine a {self._kind} polynomial with a {other._kind} one"
            )

    def __add__(self, other: "HGPoly") -> "HGPoly":
        self._check(other)
        return HGPoly(itertools.chain(self._terms.items(), other._terms.items()), self._kind)

    def __neg__(self) -> "HGPoly":
        return HGPoly({k: -v for k, v in self._terms.items()}, self._kind)

    def __sub__(self, other: "HGPoly") -> "HGPoly":
        self._check(other)
        return self + (-other)

    def __mul__(self, other: "HGPoly | int") -> "HGPoly":
        if isinstance(other, int):
            return HGPoly({k: v * other for k, v in self._terms.items()}, self._kind)
        self._check(other)
        acc: dict[Key, int] = {}
        for (w1, d1), m1 in self._terms.items():
            for (w2, d2), m2 in other._terms.items():
                key = (w1 + w2, d1 + d2)
                acc[key] = acc.get(key, 0) + m1 * m2
        return HGPoly(acc, self._kind)

    __rmul__ = __mul__

    def shift(self, dw: int, dd: int) -> "HGPoly":
        return HGPoly({(w + dw, d + dd): m for (w, d), m in self._terms.items()}, self._kind)

    def rank(self) -> int:
        """Total multiplicity; the dimension when all multiplicities are nonnegative."""
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def degrees(self) -> list[int]:
        return sorted({d for (_, d) in self._terms})

    def weights(self) -> list[int]:
        return sorted({w for (w, _) in self._terms})

    def in_degree(self, d: int) -> "HGPoly":
        return HGPoly({k: v for k, v in self._terms.items() if k[1] == d}, self._kind)

    def expand(self) -> list[Key]:
        """One ``(w, d)`` entry per class; requires nonnegative multiplicities."""
        if not self.is_nonnegative():
            raise ValueError(f"cannot expand a virtual polynomial {self.pretty()}")
        return [k for k, m in self._terms.items() for _ in range(m)]

    # rendering

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (w, d), m in sorted(self._terms.items(), key=lambda kv: (kv[0][1], -kv[0][0]), reverse=True):
            mono = _monomial(-w, d)
            if mono == "1":
                body = str(abs(m))
            elif abs(m) == 1:
                body = mono
            else:
                body = f"{abs(m)} {mono}"
            parts.append(("- " if m < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def to_json(self) -> dict:
        return {
            "kind": self._kind,
            "terms": [{"weight": w, "degree": d, "mult": m} for (w, d), m in self._terms.items()],
            "pretty": self.pretty(),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "HGPoly":
        return cls({(t["weight"], t["degree"]): t["mult"] for t in data["terms"]}, data["kind"])


def _order(item: tuple[Key, int]) -> tuple[int, int]:
    (w, d), _ = item
    return (d, w)


def _monomial(a: int, d: int) -> str:
    parts = []
    if a:
        parts.append("L" if a == 1 else f"L^{a}")
    if d:
        parts.append("t" if d == 1 else f"t^{d}")
    return " ".join(parts) if parts else "1"


_TERM_RE = re.compile(
    r"(?P<c>\d+)?\s*(?P<l>L(?:\^(?P<le>-?\d+))?)?\s*(?P<t>t(?:\^(?P<te>-?\d+))?)?"
)


def _split_terms(s: str) -> list[tuple[str, str]]:
    """Split on top-level signs, leaving exponent signs (``^-3``) alone."""
    out: list[tuple[str, str]] = []
    sign, buf, prev = "+", "", ""
    for ch in s:
        if ch in "+-" and prev != "^":
            if buf.strip():
                out.append((sign, buf))
            sign, buf = ch, ""
        else:
            buf += ch
        if not ch.isspace():
            prev = ch
    if buf.strip():
        out.append((sign, buf))
    return out


# ---------------------------------------------------------------------------
# functional interface


def hg_add(a: HGPoly, b: HGPoly) -> HGPoly:
    return a + b


def hg_mul(a: HGPoly, b: HGPoly) -> HGPoly:
    return a * b


def hg_shift(p: HGPoly, dw: int, dd: int) -> HGPoly:
    """Move every class by ``dw`` in weight and ``dd`` in degree.

    A ``C^n``-bundle shifts BM classes by ``(n, 2n)``; an open ``m``-simplex
    factor shifts degrees by ``m`` only.
    """
    return p.shift(dw, dd)


def cohomology_to_bm(p: HGPoly, n: int) -> HGPoly:
    """Poincare duality on a smooth space of complex dimension ``n``.

    ``H^i`` class ``Q(-a)`` goes to the BM class ``Q(n-a)`` in degree ``2n-i``.
    """
    if p.kind != COHOM:
        raise KindMismatchError("cohomology_to_bm expects a COHOM polynomial")
    return HGPoly({(n + w, 2 * n - d): m for w, d, m in p}, BM)


def bm_to_cohomology(p: HGPoly, n: int) -> HGPoly:
    if p.kind != BM:
        raise KindMismatchError("bm_to_cohomology expects a BM polynomial")
    return HGPoly({(w - n, 2 * n - d): m for w, d, m in p}, COHOM)


def alexander_dual(p: HGPoly, N: int) -> HGPoly:
    """Cohomology of the complement of a discriminant in ``C^N``.

    The BM class ``Q(w)`` of the discriminant in degree ``d`` becomes the
    reduced cohomology class ``Q(w-N)`` in degree ``2N-1-d``; the constant
    class is added back to give unreduced cohomology.
    """
    if p.kind != BM:
        raise KindMismatchError("alexander_dual expects the BM polynomial of the discriminant")
    terms = {(w - N, 2 * N - 1 - d): m for w, d, m in p}
    bad = sorted(d for (_, d) in terms if d < 1)
    if bad:
        raise ValueError(f"discriminant class lands in reduced cohomological degree {bad[0]} < 1")
    return HGPoly(terms, COHOM) + HGPoly.one(COHOM)


def alexander_dual_inverse(p: HGPoly, N: int) -> HGPoly:
    """Undo :func:`alexander_dual`: strip the unit class and dualise back."""
    if p.kind != COHOM:
        raise KindMismatchError("alexander_dual_inverse expects a COHOM polynomial")
    if p[(0, 0)] < 1:
        raise ValueError("complement cohomology must contain the unit class")
    reduced = p - HGPoly.one(COHOM)
    return HGPoly({(w + N, 2 * N - 1 - d): m for w, d, m in reduced}, BM)


def exact_div(p: HGPoly, d: HGPoly) -> HGPoly:
    """Quotient ``q`` with ``q * d == p``, by leading-term elimination.

    Terms are ordered by (degree, weight).  The smallest term of ``d`` must be
    the unit class.  The quotient is confined to the box forced by the extreme
    degrees and weights of ``p`` and ``d``; stepping outside that box, or
    finishing with a nonzero remainder, raises :class:`DivisionRemainderError`.
    """
    p._check(d)
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_key = min(d.terms, key=lambda k: (k[1], k[0]))
    if lead_key != (0, 0) or d[lead_key] != 1:
        raise ValueError(f"divisor {d.pretty()} does not start with the unit class")
    if not p:
        return HGPoly.zero(p.kind)
    deg_lo = min(p.degrees()) - min(d.degrees())
    deg_hi = max(p.degrees()) - max(d.degrees())
    w_lo = min(p.weights()) - min(d.weights())
    w_hi = max(p.weights()) - max(d.weights())

    rem = dict(p.terms)
    quot: dict[Key, int] = {}
    dterms = list(d.terms.items())
    while rem:
        w, deg = min(rem, key=lambda k: (k[1], k[0]))
        c = rem[(w, deg)]
        if not (deg_lo <= deg <= deg_hi and w_lo <= w <= w_hi):
            raise DivisionRemainderError(
                f"{p.pretty()} is not divisible by {d.pretty()}: "
                f"remainder term {HGPoly.tate(w, deg, c, p.kind).pretty()}"
            )
        quot[(w, deg)] = c
        for (dw, dd), dm in dterms:
            key = (w + dw, deg + dd)
            v = rem.get(key, 0) - c * dm
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return HGPoly(quot, p.kind)


@dataclass(frozen=True)
class CountPoly:
    """Integer Laurent polynomial in ``q``; exponent -> coefficient."""

    coeffs: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "CountPoly":
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @classmethod
    def from_list(cls, coeffs: list[int]) -> "CountPoly":
        """Coefficients in increasing degree, ``[c0, c1, ...]``."""
        return cls.from_dict(dict(enumerate(coeffs)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __add__(self, other: "CountPoly") -> "CountPoly":
        acc = self.as_dict()
        for e, c in other.coeffs:
            acc[e] = acc.get(e, 0) + c
        return CountPoly.from_dict(acc)

    def __mul__(self, other: "CountPoly") -> "CountPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return CountPoly.from_dict(acc)

    def __call__(self, q: int):
        if any(e < 0 for e, _ in self.coeffs):
            from fractions import Fraction

            return sum(c * Fraction(q) ** e for e, c in self.coeffs)
        return sum(c * q**e for e, c in self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs, reverse=True):
            mono = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
            body = str(abs(c)) if mono == "1" else (mono if abs(c) == 1 else f"{abs(c)}{mono}")
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def to_json(self) -> dict:
        return {"coeffs": {str(e): c for e, c in self.coeffs}, "pretty": str(self)}


def euler_specialize(p: HGPoly) -> CountPoly:
    """Virtual point count ``sum m (-1)^d q^w`` of a BM polynomial."""
    if p.kind != BM:
        raise KindMismatchError("euler_specialize expects a BM polynomial")
    acc: dict[int, int] = {}
    for w, d, m in p:
        acc[w] = acc.get(w, 0) + (-1 if d % 2 else 1) * m
    return CountPoly.from_dict(acc)


# ---------------------------------------------------------------------------
# degenerate two-row fibrations


@dataclass(frozen=True)
class CancellationPattern:
    """Shape of the nontrivial differentials in a product-type spectral sequence.

    ``factor`` is the polynomial of the known space (fibre or base) whose
    classes index the columns of the page.  A cancelling pair starts at an
    unknown class ``x`` and ends at ``x * step``; ``kills`` lists which cells
    disappear, as ``("src" | "tgt", factor_class)``.
    """

    factor: HGPoly
    step: HGPoly
    kills: tuple[tuple[str, Key], ...]
    cohomological: bool

    def __post_init__(self):
        unit = (0, 0)
        if any(role == "src" and g == unit for role, g in self.kills):
            raise ValueError("the unit column may only receive differentials")
        if len(self.step) != 1 or not self.step.is_nonnegative() or self.step.rank() != 1:
            raise ValueError("step must be a single class")

    def kill_poly(self) -> HGPoly:
        """Classes removed from the page per cancelling pair, as a multiple of ``x``."""
        out = HGPoly.zero(self.factor.kind)
        for role, (w, d) in self.kills:
            g = HGPoly.tate(w, d, kind=self.factor.kind)
            out = out + (g if role == "src" else g * self.step)
        return out

    def differentials(self, x: Key) -> list[tuple[Key, Key]]:
        """Cells ``(column class, fibre-side class)`` joined by the pair started at ``x``.

        Returns ``(source_cell, target_cell)`` entries where each cell is
        ``(factor_key, unknown_key)``.
        """
        (sw, sd), = self.step.terms
        y = (x[0] + sw, x[1] + sd)
        src = [g for role, g in self.kills if role == "src"]
        tgt = [g for role, g in self.kills if role == "tgt"]
        return [((gs, x), (gt, y)) for gs, gt in zip(src, tgt)]


@dataclass
class FibrationSolution:
    unknown: HGPoly
    pairs: list[Key] = field(default_factory=list)


def solve_degenerate_fibration(
    total: HGPoly, pattern: CancellationPattern, max_pairs: int = 4
) -> FibrationSolution:
    """Recover the unknown factor of a page ``E = unknown * factor`` from its limit.

    Solutions are searched by increasing number of cancelling pairs; the first
    level with any nonnegative solution wins, and it must have exactly one.
    Minimality matters: longer cancellation chains can reproduce the same
    limit with a larger unknown factor.
    """
    sols = enumerate_fibration_solutions(total, pattern, max_pairs=max_pairs, stop_at_first_level=True)
    if not sols:
        raise SolveError(f"no nonnegative solution with at most {max_pairs} cancelling pairs for {total.pretty()}")
    if len(sols) > 1:
        clashes = sorted({k for s in sols for k in s.pairs} - set.intersection(*(set(s.pairs) for s in sols)))
        raise AmbiguousSolveError(
            f"{len(sols)} minimal solutions for {total.pretty()}; differing pair sources {clashes}"
        )
    return sols[0]


def enumerate_fibration_solutions(
    total: HGPoly,
    pattern: CancellationPattern,
    max_pairs: int = 4,
    stop_at_first_level: bool = False,
    exact_pairs: int | None = None,
) -> list[FibrationSolution]:
    """All nonnegative ``(unknown, pairs)`` reproducing ``total``.

    Pair sources are drawn from ``{t * step^j}`` for classes ``t`` of the
    total: the unit column only ever receives differentials, so a pair source
    survives in the limit unless it is itself the end of an earlier pair.
    """
    pattern.factor._check(total)
    kill = pattern.kill_poly()
    nk = len(pattern.kills)
    rank_f = pattern.factor.rank()
    levels = [exact_pairs] if exact_pairs is not None else range(max_pairs + 1)
    found: list[FibrationSolution] = []
    for k in levels:
        if (total.rank() + k * nk) % rank_f:
            continue
        cands = sorted({
            (w + j * sw, d + j * sd)
            for (w, d) in total.terms
            for j in range(max(k, 1))
            for (sw, sd) in [next(iter(pattern.step.terms))]
        }, key=lambda x: (x[1], x[0]))
        seen: set[tuple] = set()
        for combo in itertools.combinations_with_replacement(cands, k):
            target = total
            for x in combo:
                target = target + kill.shift(*x)
            try:
                unknown = exact_div(target, pattern.factor)
            except DivisionRemainderError:
                continue
            if not unknown.is_nonnegative() or not _pairs_admissible(unknown, combo, pattern):
                continue
            key = (unknown, combo)
            if key not in seen:
                seen.add(key)
                found.append(FibrationSolution(unknown, list(combo)))
        if found and stop_at_first_level:
            return found
    return found


def _pairs_admissible(unknown: HGPoly, sources: tuple[Key, ...], pattern: CancellationPattern) -> bool:
    used: dict[tuple[Key, Key], int] = {}
    for x in sources:
        for s_cell, t_cell in pattern.differentials(x):
            for cell in (s_cell, t_cell):
                used[cell] = used.get(cell, 0) + 1
    for (g, u), n in used.items():
        if pattern.factor[g] * unknown[u] < n:
            return False
    return True


def wang_pattern() -> CancellationPattern:
    """Two-row page of an orbifold ``C*``-bundle; ``d_2`` goes from row 1 to row 0."""
    return CancellationPattern(
        factor=HGPoly.parse("1 + L t", COHOM),
        step=HGPoly.parse("L t^2", COHOM),
        kills=(("src", (-1, 1)), ("tgt", (0, 0))),
        cohomological=True,
    )


def wang_solve_cstar(total: HGPoly) -> tuple[HGPoly, list[tuple[tuple[int, int], tuple[int, int]]]]:
    """Base cohomology of an orbifold ``C*``-bundle from that of its total space.

    Returns the base polynomial and the cancelled differentials as
    ``((p, 1), (p + 2, 0))`` positions on the ``E_2`` page.
    """
    if total.kind != COHOM:
        raise KindMismatchError("wang_solve_cstar expects a COHOM polynomial")
    sol = solve_degenerate_fibration(total, wang_pattern())
    killed = [((d, 1), (d + 2, 0)) for (_, d) in sol.pairs]
    return sol.unknown, killed
