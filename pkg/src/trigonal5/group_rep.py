"""Character tables of S2, S3, S4, S5 (partial) and D4, realised as permutation groups.

Groups are concrete: elements are permutation tuples on ``range(n)``, and
conjugacy classes are computed by brute force.  Character values are stored
per class, keyed by a representative written in 1-based cycle notation.
Restriction pulls values back along an explicit embedding and re-expands them
with the class-size-weighted inner product, so every multiplicity is checked
to be an integer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

Perm = tuple[int, ...]


class CharacterError(ValueError):
    """Inconsistent table, unknown irrep or non-integral expansion."""


# ---------------------------------------------------------------------------
# permutations


def compose(a: Perm, b: Perm) -> Perm:
    """``a`` after ``b``."""
    return tuple(a[b[i]] for i in range(len(b)))


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def identity(n: int) -> Perm:
    return tuple(range(n))


def from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    """Permutation of ``range(n)`` from 1-based cycles, e.g. ``from_cycles(4, (1, 3, 2, 4))``."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + type(cyc)(cyc[:1])):
            img[a - 1] = b - 1
    return tuple(img)


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen, lengths = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        n, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def sign(p: Perm) -> int:
    return -1 if sum(c - 1 for c in cycle_type(p)) % 2 else 1


def cycle_notation(p: Perm) -> str:
    seen, parts = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(parts) or "e"


def generate(gens: Sequence[Perm]) -> frozenset[Perm]:
    n = len(gens[0])
    elems = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(s, g)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(elems)


# ---------------------------------------------------------------------------
# groups and tables


@dataclass(frozen=True)
class CharacterTable:
    group: str
    degree: int  # size of the permuted set
    generators: tuple[Perm, ...]
    classes: tuple[Perm, ...]  # representatives in display order
    irreps: Mapping[str, tuple[int, ...]]
    complete: bool = True
    aliases: Mapping[str, str] = field(default_factory=dict)

    @property
    def elements(self) -> frozenset[Perm]:
        return _elements(self.generators)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self._class_sets())

    def _class_sets(self) -> tuple[frozenset[Perm], ...]:
        return _classes(self.generators, self.classes)

    def class_of(self, g: Perm) -> int:
        for i, c in enumerate(self._class_sets()):
            if g in c:
                return i
        raise CharacterError(f"{cycle_notation(g)} is not an element of {self.group}")

    def resolve(self, name: str) -> str:
        name = self.aliases.get(name, name)
        if name not in self.irreps:
            raise CharacterError(f"{self.group} has no irrep {name!r}; known: {sorted(self.irreps)}")
        return name

    def values(self, name: str) -> tuple[int, ...]:
        return self.irreps[self.resolve(name)]

    def dim(self, name: str) -> int:
        return self.values(name)[0]

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        total = sum(n * x * y for n, x, y in zip(self.class_sizes, a, b))
        return Fraction(total, self.order)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "classes": [cycle_notation(c) for c in self.classes],
            "class_sizes": list(self.class_sizes),
            "irreps": {k: list(v) for k, v in self.irreps.items()},
            "aliases": dict(self.aliases),
            "complete": self.complete,
        }


@lru_cache(maxsize=None)
def _elements(gens: tuple[Perm, ...]) -> frozenset[Perm]:
    return generate(gens)


@lru_cache(maxsize=None)
def _classes(gens: tuple[Perm, ...], reps: tuple[Perm, ...]) -> tuple[frozenset[Perm], ...]:
    elems = _elements(gens)
    return tuple(frozenset(compose(compose(h, r), inverse(h)) for h in elems) for r in reps)


def _sym_gens(n: int) -> tuple[Perm, ...]:
    if n == 2:
        return (from_cycles(2, (1, 2)),)
    return (from_cycles(n, (1, 2)), from_cycles(n, tuple(range(1, n + 1))))


S2 = CharacterTable(
    "S2", 2, _sym_gens(2),
    classes=(identity(2), from_cycles(2, (1, 2))),
    irreps={"triv": (1, 1), "sign": (1, -1)},
)

S3 = CharacterTable(
    "S3", 3, _sym_gens(3),
    classes=(identity(3), from_cycles(3, (1, 2)), from_cycles(3, (1, 2, 3))),
    irreps={"S3": (1, 1, 1), "S21": (2, 0, -1), "S111": (1, -1, 1)},
    aliases={"triv": "S3", "sign": "S111"},
)

S4 = CharacterTable(
    "S4", 4, _sym_gens(4),
    classes=(
        identity(4),
        from_cycles(4, (1, 2)),
        from_cycles(4, (1, 2), (3, 4)),
        from_cycles(4, (1, 2, 3)),
        from_cycles(4, (1, 2, 3, 4)),
    ),
    irreps={
        "S4": (1, 1, 1, 1, 1),
        "S31": (3, 1, -1, 0, -1),
        "S22": (2, 0, 2, -1, 0),
        "S211": (3, -1, -1, 0, 1),
        "S1111": (1, -1, 1, 1, -1),
    },
    aliases={"triv": "S4", "sign": "S1111"},
)

# only the irreducibles that occur in the equivariant BM homology of M_{0,5}
S5 = CharacterTable(
    "S5", 5, _sym_gens(5),
    classes=(
        identity(5),
        from_cycles(5, (1, 2)),
        from_cycles(5, (1, 2), (3, 4)),
        from_cycles(5, (1, 2, 3)),
        from_cycles(5, (1, 2, 3), (4, 5)),
        from_cycles(5, (1, 2, 3, 4)),
        from_cycles(5, (1, 2, 3, 4, 5)),
    ),
    irreps={
        "S5": (1, 1, 1, 1, 1, 1, 1),
        "S32": (5, 1, 1, -1, 1, -1, 0),
        "S311": (6, 0, -2, 0, 0, 0, 1),
    },
    complete=False,
    aliases={"triv": "S5"},
)

# symmetries of the square with vertices 1, 3, 2, 4 in cyclic order
D4 = CharacterTable(
    "D4", 4, (from_cycles(4, (1, 3, 2, 4)), from_cycles(4, (1, 2))),
    classes=(
        identity(4),
        from_cycles(4, (1, 2), (3, 4)),
        from_cycles(4, (1, 3, 2, 4)),
        from_cycles(4, (1, 2)),
        from_cycles(4, (1, 3), (2, 4)),
    ),
    irreps={
        "psi1": (1, 1, 1, 1, 1),
        "psi2": (1, 1, 1, -1, -1),
        "psi3": (1, 1, -1, 1, -1),
        "psi4": (1, 1, -1, -1, 1),
        "chi": (2, -2, 0, 0, 0),
    },
    aliases={"triv": "psi1", "rho1": "psi2", "rho2": "psi3", "rho3": "psi4"},
)

TABLES: dict[str, CharacterTable] = {t.group: t for t in (S2, S3, S4, S5, D4)}


def _extend(n: int) -> Callable[[Perm], Perm]:
    def f(p: Perm) -> Perm:
        return p + tuple(range(len(p), n))

    return f


# (subgroup, supergroup) -> element map
EMBEDDINGS: dict[tuple[str, str], Callable[[Perm], Perm]] = {
    ("S2", "S3"): _extend(3),
    ("S3", "S4"): _extend(4),
    ("S4", "S5"): _extend(5),
    ("D4", "S4"): lambda p: p,
    ("D4", "S5"): _extend(5),
}


def check_orthogonality(table: CharacterTable) -> None:
    """Row orthogonality always; column orthogonality when the table is complete."""
    if sum(table.class_sizes) != table.order:
        raise CharacterError(f"{table.group}: class sizes do not sum to the group order")
    names = list(table.irreps)
    for a in names:
        for b in names:
            ip = table.inner(table.irreps[a], table.irreps[b])
            if ip != (1 if a == b else 0):
                raise CharacterError(f"{table.group}: <{a}, {b}> = {ip}")
    if table.complete:
        for i, ni in enumerate(table.class_sizes):
            for j in range(len(table.classes)):
                s = sum(v[i] * v[j] for v in table.irreps.values())
                want = Fraction(table.order, ni) if i == j else 0
                if s != want:
                    raise CharacterError(f"{table.group}: column orthogonality fails at {i},{j}")


# ---------------------------------------------------------------------------
# virtual characters


@dataclass(frozen=True)
class VirtualCharacter:
    group: str
    mults: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, group: str, mults: Mapping[str, int] | None = None, **kw: int) -> "VirtualCharacter":
        table = TABLES[group]
        acc: dict[str, int] = {}
        for name, m in {**(mults or {}), **kw}.items():
            key = table.resolve(name)
            acc[key] = acc.get(key, 0) + m
        order = list(table.irreps)
        return cls(group, tuple((k, acc[k]) for k in order if acc.get(k)))

    @property
    def table(self) -> CharacterTable:
        return TABLES[self.group]

    def as_dict(self) -> dict[str, int]:
        return dict(self.mults)

    def values(self) -> tuple[int, ...]:
        t = self.table
        out = [0] * len(t.classes)
        for name, m in self.mults:
            for i, v in enumerate(t.irreps[name]):
                out[i] += m * v
        return tuple(out)

    @property
    def dim(self) -> int:
        return self.values()[0]

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        if other.group != self.group:
            raise CharacterError(f"cannot add characters of {self.group} and {other.group}")
        acc = self.as_dict()
        for k, m in other.mults:
            acc[k] = acc.get(k, 0) + m
        return VirtualCharacter.of(self.group, acc)

    def __str__(self) -> str:
        if not self.mults:
            return "0"
        return " + ".join(k if m == 1 else f"{m}{k}" for k, m in self.mults)

    def to_json(self) -> dict:
        return {"group": self.group, "mults": self.as_dict(), "values": list(self.values())}


def decompose(group: str, values: Sequence[int]) -> VirtualCharacter:
    """Expand a class function into irreducibles, insisting on integer multiplicities."""
    table = TABLES[group]
    mults = {}
    for name, chi in table.irreps.items():
        ip = table.inner(values, chi)
        if ip.denominator != 1:
            raise CharacterError(f"<v, {name}> = {ip} is not an integer in {group}")
        if ip:
            mults[name] = int(ip)
    vc = VirtualCharacter.of(group, mults)
    if vc.values() != tuple(values):
        raise CharacterError(f"class function {tuple(values)} is not spanned by the tabulated irreps of {group}")
    return vc


def restrict_character(v: VirtualCharacter, subgroup: str) -> VirtualCharacter:
    """Restrict ``v`` along the registered embedding ``subgroup -> v.group``."""
    try:
        embed = EMBEDDINGS[(subgroup, v.group)]
    except KeyError:
        raise CharacterError(f"no registered embedding {subgroup} -> {v.group}") from None
    sub, sup = TABLES[subgroup], v.table
    vals = v.values()
    pulled = [vals[sup.class_of(embed(rep))] for rep in sub.classes]
    return decompose(subgroup, pulled)


def isotypic_multiplicity(v: VirtualCharacter, irrep: str) -> int:
    table = v.table
    ip = table.inner(v.values(), table.values(irrep))
    if ip.denominator != 1:
        raise CharacterError(f"<v, {irrep}> = {ip} is not an integer")
    return int(ip)


# ---------------------------------------------------------------------------
# sign local systems on configurations


def sign_local_system(action: Mapping[Perm, Perm], group: str = "D4") -> str:
    """Identify the sign character of a permutation action as a 1-dimensional irrep.

    ``action`` maps each generator of ``group`` (as a permutation in its
    defining representation) to its image permutation of the labelled
    configuration points.  The assignment is extended to a homomorphism by
    breadth-first search; inconsistent extensions are rejected.
    """
    table = TABLES[group]
    n_pts = len(next(iter(action.values())))
    image: dict[Perm, Perm] = {identity(table.degree): identity(n_pts)}
    frontier = list(image)
    while frontier:
        nxt = []
        for g in frontier:
            for s, s_img in action.items():
                h, h_img = compose(s, g), compose(s_img, image[g])
                if h in image:
                    if image[h] != h_img:
                        raise CharacterError(f"action is not a homomorphism at {cycle_notation(h)}")
                else:
                    image[h] = h_img
                    nxt.append(h)
        frontier = nxt
    if set(image) != table.elements:
        raise CharacterError(f"the given generators do not generate {group}")

    chars = []
    for cls in table._class_sets():
        signs = {sign(image[g]) for g in cls}
        if len(signs) != 1:
            raise CharacterError("sign is not a class function for this action")
        chars.append(signs.pop())
    for name, vals in table.irreps.items():
        if tuple(chars) == vals:
            return name
    raise CharacterError(f"sign character {tuple(chars)} matches no irrep of {group}")


def dump_tables() -> str:
    return json.dumps({k: t.to_json() for k, t in TABLES.items()}, indent=2)
