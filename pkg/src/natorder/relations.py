"""Binary relations on a finite ground set {1..n}.

A :class:`Relation` is stored as ``n`` packed bit rows.  Row ``i`` holds the
successors of ``i``; column ``j`` is bit ``n-1-j`` of the row, so the
concatenation of the rows read as one binary numeral is the relation's
*code*, and ascending codes give the canonical enumeration of B_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionMismatch, ParseError

__all__ = [
    "Relation",
    "constant",
    "identity",
    "universal",
    "empty",
    "compose",
    "converse",
    "complement",
    "is_subset",
    "union",
    "intersect",
    "max_right_solution",
    "max_left_solution",
    "divides_right",
    "divides_left",
    "is_preorder",
    "is_idempotent",
    "is_partial_injection",
    "is_permutation",
    "parse_relation",
    "format_relation",
    "all_relations",
]


@dataclass(frozen=True)
class Relation:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("ground set size must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r > full:
                raise ValueError(f"row {r:#x} does not fit in {self.n} columns")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Relation:
        """Build from 1-based pairs ``(i, j)``."""
        rows = [0] * n
        for i, j in pairs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"pair {(i, j)} outside 1..{n}")
            rows[i - 1] |= 1 << (n - j)
        return cls(n, tuple(rows))

    @classmethod
    def from_code(cls, n: int, code: int) -> Relation:
        mask = (1 << n) - 1
        return cls(n, tuple((code >> (n * (n - 1 - i))) & mask for i in range(n)))

    @classmethod
    def from_matrix(cls, matrix: Iterable[Iterable[int | bool]]) -> Relation:
        m = [list(r) for r in matrix]
        n = len(m)
        rows = []
        for r in m:
            if len(r) != n:
                raise ValueError("matrix is not square")
            v = 0
            for bit in r:
                v = (v << 1) | (1 if bit else 0)
            rows.append(v)
        return cls(n, tuple(rows))

    @property
    def code(self) -> int:
        c = 0
        for r in self.rows:
            c = (c << self.n) | r
        return c

    def __contains__(self, pair: tuple[int, int]) -> bool:
        i, j = pair
        return bool((self.rows[i - 1] >> (self.n - j)) & 1)

    def pairs(self) -> list[tuple[int, int]]:
        n = self.n
        return [(i + 1, j + 1) for i in range(n) for j in range(n) if (self.rows[i] >> (n - 1 - j)) & 1]

    def to_matrix(self) -> list[list[int]]:
        n = self.n
        return [[(r >> (n - 1 - j)) & 1 for j in range(n)] for r in self.rows]

    def __len__(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def __str__(self) -> str:
        return "/".join(format(r, f"0{self.n}b") for r in self.rows) if self.n else "()"

    def __repr__(self) -> str:
        return f"Relation({self.n}, {self})"

    def __mul__(self, other: Relation) -> Relation:
        return compose(self, other)

    def __or__(self, other: Relation) -> Relation:
        return union(self, other)

    def __and__(self, other: Relation) -> Relation:
        return intersect(self, other)

    def __invert__(self) -> Relation:
        return complement(self)


def _check(a: Relation, b: Relation) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"relations on {a.n} and {b.n} points")


def constant(kind: str, n: int) -> Relation:
    """``identity``, ``universal`` or ``empty`` relation on ``n`` points."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind == "identity":
        return Relation(n, tuple(1 << (n - 1 - i) for i in range(n)))
    if kind == "universal":
        return Relation(n, ((1 << n) - 1,) * n)
    if kind == "empty":
        return Relation(n, (0,) * n)
    raise ValueError(f"unknown constant {kind!r}")


def identity(n: int) -> Relation:
    return constant("identity", n)


def universal(n: int) -> Relation:
    return constant("universal", n)


def empty(n: int) -> Relation:
    return constant("empty", n)


def compose(a: Relation, b: Relation) -> Relation:
    """Relational product: ``(x, z)`` iff some ``y`` has ``x a y`` and ``y b z``."""
    _check(a, b)
    n = a.n
    brows = b.rows
    out = []
    for r in a.rows:
        acc = 0
        while r:
            low = r & -r
            acc |= brows[n - low.bit_length()]
            r ^= low
        out.append(acc)
    return Relation(n, tuple(out))


def converse(a: Relation) -> Relation:
    n = a.n
    out = [0] * n
    for i, r in enumerate(a.rows):
        bit = 1 << (n - 1 - i)
        while r:
            low = r & -r
            out[n - low.bit_length()] |= bit
            r ^= low
    return Relation(n, tuple(out))


def complement(a: Relation) -> Relation:
    full = (1 << a.n) - 1
    return Relation(a.n, tuple(r ^ full for r in a.rows))


def is_subset(a: Relation, b: Relation) -> bool:
    _check(a, b)
    return all(x & ~y == 0 for x, y in zip(a.rows, b.rows))


def union(a: Relation, b: Relation) -> Relation:
    _check(a, b)
    return Relation(a.n, tuple(x | y for x, y in zip(a.rows, b.rows)))


def intersect(a: Relation, b: Relation) -> Relation:
    _check(a, b)
    return Relation(a.n, tuple(x & y for x, y in zip(a.rows, b.rows)))


def max_right_solution(b: Relation, a: Relation) -> Relation:
    """Largest ``x`` (under inclusion) with ``b * x`` contained in ``a``.

    Equal to the complement of ``converse(b) * complement(a)``.  When
    ``b * x == a`` has any solution, this one is the greatest.
    """
    _check(a, b)
    return complement(compose(converse(b), complement(a)))


def max_left_solution(b: Relation, a: Relation) -> Relation:
    """Largest ``x`` with ``x * b`` contained in ``a``."""
    _check(a, b)
    return complement(compose(complement(a), converse(b)))


def divides_right(b: Relation, a: Relation) -> bool:
    """True iff ``a == b * x`` for some relation ``x``."""
    return compose(b, max_right_solution(b, a)) == a


def divides_left(b: Relation, a: Relation) -> bool:
    """True iff ``a == x * b`` for some relation ``x``."""
    return compose(max_left_solution(b, a), b) == a


def is_preorder(a: Relation) -> bool:
    return is_subset(identity(a.n), a) and is_subset(compose(a, a), a)


def is_idempotent(a: Relation) -> bool:
    return compose(a, a) == a


def _column_union_and_overlap(a: Relation) -> tuple[int, bool]:
    seen = 0
    clash = False
    for r in a.rows:
        if seen & r:
            clash = True
        seen |= r
    return seen, clash


def is_partial_injection(a: Relation) -> bool:
    if any(r & (r - 1) for r in a.rows):
        return False
    _, clash = _column_union_and_overlap(a)
    return not clash


def is_permutation(a: Relation) -> bool:
    if not is_partial_injection(a):
        return False
    seen, _ = _column_union_and_overlap(a)
    return all(a.rows) and seen == (1 << a.n) - 1


def parse_relation(text: str) -> Relation:
    """Parse the line-oriented format: ``n`` then ``n`` rows of 0/1 characters."""
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if not lines or not lines[0]:
        raise ParseError("missing size line")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"size line {lines[0]!r} is not an integer") from None
    if n < 0:
        raise ParseError("negative size")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} rows, found {len(body)}")
    rows = []
    for k, line in enumerate(body, start=1):
        if len(line) != n:
            raise ParseError(f"row {k} has {len(line)} entries, expected {n}")
        if set(line) - {"0", "1"}:
            raise ParseError(f"row {k} contains characters other than 0/1")
        rows.append(int(line, 2) if n else 0)
    return Relation(n, tuple(rows))


def format_relation(a: Relation) -> str:
    lines = [str(a.n)] + [format(r, f"0{a.n}b") for r in a.rows]
    return "\n".join(lines) + "\n"


def all_relations(n: int) -> Iterator[Relation]:
    """All of B_n in canonical (ascending code) order."""
    for code in range(1 << (n * n)):
        yield Relation.from_code(n, code)
