"""Young tableaux, tabloids and polytabloids.

A tableau stores its rows directly; a tabloid is the canonical key obtained
by sorting each row.  Tabloids of a fixed shape are enumerated once, in
lexicographic order on their sorted rows, and module vectors index into
that enumeration.  Polytabloids are alternating sums over the column
stabilizer; the induced variant applies the column stabilizer of a smaller
tableau sitting inside one extra node.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .fields import FieldSpec
from .partitions import Partition, conjugate, removable_nodes
from .perms import Perm

TabloidKey = tuple[tuple[int, ...], ...]


class Tableau(tuple):
    """A bijective filling of a partition shape, stored as row tuples."""

    def __new__(cls, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        return super().__new__(cls, rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self)

    def validate(self) -> "Tableau":
        self.shape  # raises unless weakly decreasing
        seen = sorted(x for row in self for x in row)
        if seen != list(range(1, self.size + 1)):
            raise ValueError(f"entries must be 1..{self.size}, got {self}")
        return self

    def entry(self, r: int, c: int) -> int:
        return self[r - 1][c - 1]

    def act(self, pi: Perm) -> "Tableau":
        """Replace every entry x by its image under pi."""
        return Tableau(tuple(pi[x - 1] for x in row) for row in self)

    def columns(self) -> list[tuple[int, ...]]:
        ncols = len(self[0]) if self else 0
        return [tuple(row[c] for row in self if len(row) > c) for c in range(ncols)]

    def is_standard(self) -> bool:
        for row in self:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for col in self.columns():
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                return False
        return True

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in row) for row in self)


def canonical_tableau(lam: Partition) -> Tableau:
    """The row-filling tableau: 1..lam_1 in row one, and so on."""
    rows = []
    next_sym = 1
    for part in lam:
        rows.append(tuple(range(next_sym, next_sym + part)))
        next_sym += part
    return Tableau(rows)


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of the given shape, in a fixed growth order."""
    n = lam.size
    out = []
    rows: list[list[int]] = [[] for _ in lam]

    def place(k: int):
        if k > n:
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(lam)):
            c = len(rows[r])
            if c >= lam[r]:
                continue
            if r > 0 and len(rows[r - 1]) <= c:
                continue
            rows[r].append(k)
            place(k + 1)
            rows[r].pop()

    place(1)
    return tuple(out)


def tabloid(t: Tableau) -> TabloidKey:
    """The canonical key of the row-equivalence class of t."""
    return tuple(tuple(sorted(row)) for row in t)


@lru_cache(maxsize=None)
def enumerate_tabloids(shape: Partition) -> tuple[TabloidKey, ...]:
    """All tabloids of a shape, lexicographic on their sorted rows."""
    symbols = tuple(range(1, shape.size + 1))

    def fill(avail: tuple[int, ...], parts: tuple[int, ...]):
        if not parts:
            yield ()
            return
        for head in itertools.combinations(avail, parts[0]):
            chosen = set(head)
            rest = tuple(x for x in avail if x not in chosen)
            for tail in fill(rest, parts[1:]):
                yield (head,) + tail

    return tuple(fill(symbols, tuple(shape)))


@lru_cache(maxsize=None)
def tabloid_index(shape: Partition) -> dict:
    return {key: i for i, key in enumerate(enumerate_tabloids(shape))}


def act_key(key: TabloidKey, pi: Perm) -> TabloidKey:
    return tuple(tuple(sorted(pi[x - 1] for x in row)) for row in key)


@dataclass
class ModuleVector:
    """A vector in the tabloid module of a shape: index -> scalar."""

    shape: Partition
    field: FieldSpec
    coords: dict

    def __post_init__(self):
        self.coords = {i: c for i, c in self.coords.items() if c != 0}

    @classmethod
    def zero(cls, shape: Partition, field: FieldSpec) -> "ModuleVector":
        return cls(shape, field, {})

    def is_zero(self) -> bool:
        return not self.coords

    def coefficient(self, key):
        """Coefficient at a tabloid key or at an index."""
        if isinstance(key, int):
            return self.coords.get(key, 0)
        return self.coords.get(tabloid_index(self.shape)[key], 0)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.coords)
        for i, c in other.coords.items():
            out[i] = self.field.scalar(out.get(i, 0) + c)
        return ModuleVector(self.shape, self.field, out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scale(-1)

    def scale(self, c) -> "ModuleVector":
        c = self.field.scalar(c)
        return ModuleVector(self.shape, self.field,
                            {i: self.field.scalar(a * c) for i, a in self.coords.items()})

    def act(self, pi: Perm) -> "ModuleVector":
        if len(pi) != self.shape.size:
            raise ValueError(f"permutation degree {len(pi)} != {self.shape.size}")
        keys = enumerate_tabloids(self.shape)
        index = tabloid_index(self.shape)
        out: dict = {}
        for i, c in self.coords.items():
            j = index[act_key(keys[i], pi)]
            out[j] = self.field.scalar(out.get(j, 0) + c)
        return ModuleVector(self.shape, self.field, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (self.shape, self.field) == (other.shape, other.field) and self.coords == other.coords

    def dump(self) -> str:
        """Plain-text dump, one term per line, sorted by tabloid index."""
        keys = enumerate_tabloids(self.shape)
        lines = []
        for i in sorted(self.coords):
            rows = " | ".join(",".join(str(x) for x in row) for row in keys[i])
            lines.append(f"{self.field.render(self.coords[i])} : ({rows})")
        return "\n".join(lines)


def column_signed_maps(t: Tableau):
    """All (symbol map, sign) pairs from the column stabilizer of t."""
    per_column = []
    for col in t.columns():
        if len(col) == 1:
            per_column.append([((col[0],), 1)])
            continue
        options = []
        for assigned in itertools.permutations(col):
            pos = {x: i for i, x in enumerate(col)}
            order = [pos[x] for x in assigned]
            sign = 1
            for i in range(len(order)):
                for j in range(i + 1, len(order)):
                    if order[i] > order[j]:
                        sign = -sign
            options.append((assigned, sign))
        per_column.append(options)
    cols = t.columns()
    for combo in itertools.product(*per_column):
        mapping = {}
        sign = 1
        for col, (assigned, s) in zip(cols, combo):
            sign *= s
            for src, dst in zip(col, assigned):
                mapping[src] = dst
        yield mapping, sign


def polytabloid(t: Tableau, field: FieldSpec) -> ModuleVector:
    """Alternating sum of tabloids over the column stabilizer of t."""
    shape = t.shape
    index = tabloid_index(shape)
    coords: dict = {}
    for mapping, sign in column_signed_maps(t):
        key = tuple(tuple(sorted(mapping.get(x, x) for x in row)) for row in t)
        i = index[key]
        coords[i] = field.scalar(coords.get(i, 0) + sign)
    return ModuleVector(shape, field, coords)


def extension(t: Tableau) -> Tableau:
    """Append the next symbol in a new one-node row at the bottom."""
    return Tableau(tuple(t) + ((t.size + 1,),))


def induced_polytabloid(T: Tableau, lam: Partition, field: FieldSpec) -> ModuleVector:
    """Signed tabloid sum over the column stabilizer of T's restriction to lam.

    T must have shape lam plus one extra node in a new bottom row; the extra
    entry is untouched by the column stabilizer of the restriction.
    """
    if T.shape != Partition(tuple(lam) + (1,)):
        raise ValueError(f"shape of {T} is not {lam} plus a bottom node")
    t = Tableau(tuple(T)[:-1])
    shape = T.shape
    index = tabloid_index(shape)
    coords: dict = {}
    for mapping, sign in column_signed_maps(t):
        key = tuple(tuple(sorted(mapping.get(x, x) for x in row)) for row in T)
        i = index[key]
        coords[i] = field.scalar(coords.get(i, 0) + sign)
    return ModuleVector(shape, field, coords)


def region_H(t: Tableau, u: int) -> frozenset:
    """Symbols in the top r_u rows of t (empty when u = 0)."""
    rem = removable_nodes(t.shape)
    if not 0 <= u <= len(rem):
        raise ValueError(f"u out of range: {u} not in 0..{len(rem)}")
    top = rem[u - 1][0] if u else 0
    return frozenset(x for row in tuple(t)[:top] for x in row)


def region_V(t: Tableau, u: int) -> frozenset:
    """Symbols of t in columns c_{u+1}+1 .. c_u."""
    rem = removable_nodes(t.shape)
    if not 1 <= u <= len(rem):
        raise ValueError(f"u out of range: {u} not in 1..{len(rem)}")
    hi = rem[u - 1][1]
    lo = rem[u][1] if u < len(rem) else 0
    return frozenset(x for row in t for c, x in enumerate(row, start=1) if lo < c <= hi)


def extended_tableaux(lam: Partition):
    """Spanning enumeration for induction: tableaux of shape lam plus a
    bottom node whose restriction to lam has increasing columns.

    Signed duplicates (column re-orderings of the restriction) are omitted,
    which leaves one representative per polytabloid up to sign.  Order: the
    extra entry ascending, then column fillings lexicographically.
    """
    n = lam.size
    cols = conjugate(lam)

    def fill(avail: tuple[int, ...], remaining: tuple[int, ...]):
        if not remaining:
            yield ()
            return
        for head in itertools.combinations(avail, remaining[0]):
            chosen = set(head)
            rest = tuple(x for x in avail if x not in chosen)
            for tail in fill(rest, remaining[1:]):
                yield (head,) + tail

    for a in range(1, n + 2):
        others = tuple(x for x in range(1, n + 2) if x != a)
        for columns in fill(others, tuple(cols)):
            rows = tuple(tuple(columns[c][r] for c in range(lam[r]))
                         for r in range(len(lam)))
            yield Tableau(rows + ((a,),))
