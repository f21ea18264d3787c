"""Brute-force point counts over small prime fields.

Each space is enumerated directly from its definition and compared with the
Euler specialization of the polynomial the symbolic side produces for it.
Only untwisted spaces have a naive point count, so twisted blocks are not
covered here.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from . import config_blocks as cb
from .hg_ring import HGPoly, euler_specialize

PRIMES = (2, 3, 5, 7)


class OracleError(ValueError):
    """Unsupported field size or space."""


@dataclass(frozen=True)
class Fq:
    q: int
    value: int = 0

    def __post_init__(self):
        if self.q not in PRIMES:
            raise OracleError(f"q must be one of {PRIMES}, got {self.q}")
        object.__setattr__(self, "value", self.value % self.q)

    @classmethod
    def elements(cls, q: int) -> list["Fq"]:
        return [cls(q, v) for v in range(q)]

    def _other(self, o) -> int:
        if isinstance(o, Fq):
            if o.q != self.q:
                raise OracleError("elements of different fields")
            return o.value
        return o

    def __add__(self, o):
        return Fq(self.q, self.value + self._other(o))

    __radd__ = __add__

    def __sub__(self, o):
        return Fq(self.q, self.value - self._other(o))

    def __rsub__(self, o):
        return Fq(self.q, self._other(o) - self.value)

    def __neg__(self):
        return Fq(self.q, -self.value)

    def __mul__(self, o):
        return Fq(self.q, self.value * self._other(o))

    __rmul__ = __mul__

    def inverse(self) -> "Fq":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return Fq(self.q, pow(self.value, self.q - 2, self.q))

    def __truediv__(self, o):
        return self * Fq(self.q, self._other(o)).inverse()

    def __eq__(self, o):
        if isinstance(o, Fq):
            return (self.q, self.value) == (o.q, o.value)
        if isinstance(o, int):
            return self.value == o % self.q
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.q}"


# ---------------------------------------------------------------------------
# projective geometry helpers


@lru_cache(maxsize=None)
def projective_points(q: int, n: int = 2) -> tuple[tuple[int, ...], ...]:
    """Points of ``P^n(F_q)`` as vectors whose first nonzero entry is 1."""
    pts = []
    for v in itertools.product(range(q), repeat=n + 1):
        nz = next((x for x in v if x), 0)
        if nz == 1:
            pts.append(v)
    return tuple(pts)


def normalize(v: Sequence[int], q: int) -> tuple[int, ...]:
    nz = next(x for x in v if x % q)
    inv = pow(nz, q - 2, q)
    return tuple((x * inv) % q for x in v)


def cross(u: Sequence[int], v: Sequence[int], q: int) -> tuple[int, int, int]:
    return ((u[1] * v[2] - u[2] * v[1]) % q, (u[2] * v[0] - u[0] * v[2]) % q, (u[0] * v[1] - u[1] * v[0]) % q)


def det3(a, b, c, q: int) -> int:
    return sum(x * y for x, y in zip(a, cross(b, c, q))) % q


# ---------------------------------------------------------------------------
# the spaces

P_FIXED = (0, 0, 1)


def _line_through_P(x: tuple[int, ...], q: int) -> tuple[int, int]:
    return normalize(x[:2], q)


def count_ftilde2(q: int) -> int:
    """Ordered pairs in ``P^2 \\ P`` on distinct lines through ``P``."""
    pts = [x for x in projective_points(q) if x != P_FIXED]
    lines = [_line_through_P(x, q) for x in pts]
    n = 0
    for i, j in itertools.product(range(len(pts)), repeat=2):
        if i != j and lines[i] != lines[j]:
            n += 1
    return n


def count_ftilde3(q: int) -> int:
    """Ordered non-collinear triples in ``P^2 \\ P``, pairwise on distinct lines through ``P``."""
    pts = [x for x in projective_points(q) if x != P_FIXED]
    lines = [_line_through_P(x, q) for x in pts]
    n = 0
    for i, x in enumerate(pts):
        for j, y in enumerate(pts):
            if lines[j] == lines[i]:
                continue
            c = cross(x, y, q)
            for k, z in enumerate(pts):
                if lines[k] == lines[i] or lines[k] == lines[j]:
                    continue
                if (c[0] * z[0] + c[1] * z[1] + c[2] * z[2]) % q:
                    n += 1
    return n


def count_m05(q: int) -> int:
    """``(t1, t2)`` with ``t_i`` not in ``{0, 1, infinity}`` and ``t1 != t2``."""
    allowed = [t for t in Fq.elements(q) if t != 0 and t != 1]
    return sum(1 for a, b in itertools.product(allowed, repeat=2) if a != b)


FRAME = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))


def count_yl(q: int) -> int:
    """``P^2`` minus the six lines through pairs of the standard frame."""
    lines = [cross(a, b, q) for a, b in itertools.combinations(FRAME, 2)]
    return sum(
        1 for x in projective_points(q)
        if all((l[0] * x[0] + l[1] * x[1] + l[2] * x[2]) % q for l in lines)
    )


def count_pgl3(q: int) -> int:
    """Invertible 3x3 matrices over ``F_q`` up to scalars, by enumerating every matrix."""
    r = np.arange(q, dtype=np.int64)
    d, e, f, g, h, i = (a.ravel() for a in np.meshgrid(r, r, r, r, r, r, indexing="ij"))
    m1 = (e * i - f * h) % q
    m2 = (d * i - f * g) % q
    m3 = (d * h - e * g) % q
    invertible = 0
    for a, b, c in itertools.product(range(q), repeat=3):
        det = (a * m1 - b * m2 + c * m3) % q
        invertible += int(np.count_nonzero(det))
    if invertible % (q - 1):
        raise OracleError("GL(3) count is not divisible by the scalars")
    return invertible // (q - 1)


def count_ztilde(q: int) -> int:
    """``(t, s)`` with ``t, s`` nonzero and ``s != t, s != -t``."""
    if q % 2 == 0:
        raise OracleError("Z-tilde needs odd q: in characteristic 2 the lines s = t and s = -t coincide")
    els = Fq.elements(q)
    return sum(1 for t, s in itertools.product(els, repeat=2) if t and s and s != t and s != -t)


def _rref(rows: list[list[int]], q: int) -> tuple[tuple[int, ...], ...] | None:
    """Reduced row echelon form over ``F_q``; ``None`` when rank-deficient."""
    m = [r[:] for r in rows]
    k, n = len(m), len(m[0])
    piv_row = 0
    for col in range(n):
        pr = next((r for r in range(piv_row, k) if m[r][col] % q), None)
        if pr is None:
            continue
        m[piv_row], m[pr] = m[pr], m[piv_row]
        inv = pow(m[piv_row][col], q - 2, q)
        m[piv_row] = [(x * inv) % q for x in m[piv_row]]
        for r in range(k):
            if r != piv_row and m[r][col] % q:
                c = m[r][col]
                m[r] = [(x - c * y) % q for x, y in zip(m[r], m[piv_row])]
        piv_row += 1
        if piv_row == k:
            break
    if piv_row < k:
        return None
    return tuple(tuple(r) for r in m)


def count_grassmannian(k: int, n: int, q: int) -> int:
    """Distinct row spaces of full-rank ``k x n`` matrices."""
    if not 0 <= k <= n:
        raise OracleError("need 0 <= k <= n")
    if q ** (k * n) > 2_000_000:
        raise OracleError(f"Grass({k},{n}) over F_{q} is too large to enumerate")
    if k == 0:
        return 1
    seen = set()
    for entries in itertools.product(range(q), repeat=k * n):
        rows = [list(entries[i * n:(i + 1) * n]) for i in range(k)]
        r = _rref(rows, q)
        if r is not None:
            seen.add(r)
    return len(seen)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Space:
    name: str
    count: Callable[[int], int]
    polynomial: Callable[[], HGPoly]
    odd_only: bool = False


def _generic_pairs() -> HGPoly:
    return cb.generic_pairs_derivation().result


def _generic_triples() -> HGPoly:
    return cb.generic_triples_derivation().result


SPACES: dict[str, Space] = {
    s.name: s
    for s in (
        Space("Ftilde2", count_ftilde2, _generic_pairs),
        Space("Ftilde3", count_ftilde3, _generic_triples),
        Space("M05", count_m05, cb.bm_M05_untwisted),
        Space("YL", count_yl, cb.bm_M05_untwisted),
        Space("PGL3", count_pgl3, cb.bm_PGL3),
        Space("Ztilde", count_ztilde, cb.bm_Ztilde, odd_only=True),
    )
}

_GRASS = re.compile(r"^Grass\((\d+),\s*(\d+)\)$")
DEFAULT_SPACES = ("Ftilde2", "Ftilde3", "M05", "YL", "PGL3", "Ztilde", "Grass(1,3)", "Grass(2,3)")


def resolve_space(name: str) -> Space:
    if name in SPACES:
        return SPACES[name]
    m = _GRASS.match(name)
    if m:
        k, n = int(m.group(1)), int(m.group(2))
        return Space(f"Grass({k},{n})", lambda q: count_grassmannian(k, n, q), lambda: cb.bm_grassmannian(k, n))
    raise OracleError(f"unknown space {name!r}; known: {sorted(SPACES)} and Grass(k,n)")


def admissible(name: str, q: int) -> bool:
    return q in PRIMES and not (resolve_space(name).odd_only and q % 2 == 0)


@dataclass(frozen=True)
class CountResult:
    space: str
    q: int
    count: int
    predicted: int
    polynomial: str

    @property
    def match(self) -> bool:
        return self.count == self.predicted

    def to_json(self) -> dict:
        return {"space": self.space, "q": self.q, "count": self.count, "predicted": self.predicted,
                "polynomial": self.polynomial, "verdict": "match" if self.match else "mismatch"}


def count_space(name: str, q: int) -> CountResult:
    space = resolve_space(name)
    if q not in PRIMES:
        raise OracleError(f"q must be one of {PRIMES}, got {q}")
    count = space.count(q)
    poly = euler_specialize(space.polynomial())
    return CountResult(space.name, q, count, poly(q), str(poly))


def compare_euler(names: Iterable[str], qs: Iterable[int]) -> list[CountResult]:
    qs = list(qs)
    return [count_space(n, q) for n in names for q in qs]


def default_sweep(qs: Sequence[int] = PRIMES) -> list[CountResult]:
    """Every default space at every admissible ``q``."""
    return [count_space(n, q) for n in DEFAULT_SPACES for q in qs if admissible(n, q)]
