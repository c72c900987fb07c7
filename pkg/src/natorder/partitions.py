"""Partition diagrams: set partitions of a top row {1..n} and a bottom row {1'..n'}.

Vertices are numbered ``0..n-1`` for the top row and ``n..2n-1`` for the
bottom row, which makes the canonical block order (least vertex first, all
unprimed before primed) the ordinary integer order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, ParseError

__all__ = [
    "Partition",
    "constant",
    "trivial",
    "universal",
    "identity",
    "compose",
    "star",
    "refinement_le",
    "has_transversal",
    "is_block_bijection",
    "is_partial_injection_diagram",
    "is_idempotent",
    "parse_partition",
    "format_partition",
    "all_partitions",
    "restricted_growth_strings",
]


def _canonical(blocks: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


@dataclass(frozen=True)
class Partition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        canon = _canonical(self.blocks)
        flat = [v for b in canon for v in b]
        if any(len(b) == 0 for b in canon):
            raise ValueError("empty block")
        if sorted(flat) != list(range(2 * self.n)):
            raise ValueError(f"blocks do not partition the {2 * self.n} vertices")
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def from_labels(cls, n: int, labels: Sequence[int]) -> Partition:
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls(n, tuple(tuple(g) for g in groups.values()))

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """Block index of every vertex."""
        out = [0] * (2 * self.n)
        for k, b in enumerate(self.blocks):
            for v in b:
                out[v] = k
        return tuple(out)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({self.n}, {format_partition(self)!r})"

    def __mul__(self, other: Partition) -> Partition:
        return compose(self, other)


def _check(a: Partition, b: Partition) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"partitions over {a.n} and {b.n} points")


def constant(kind: str, n: int) -> Partition:
    """``trivial_d`` (all singletons), ``universal_k`` (one block) or ``identity``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind == "trivial_d":
        return Partition(n, tuple((v,) for v in range(2 * n)))
    if kind == "universal_k":
        return Partition(n, (tuple(range(2 * n)),) if n else ())
    if kind == "identity":
        return Partition(n, tuple((i, i + n) for i in range(n)))
    raise ValueError(f"unknown constant {kind!r}")


def trivial(n: int) -> Partition:
    return constant("trivial_d", n)


def universal(n: int) -> Partition:
    return constant("universal_k", n)


def identity(n: int) -> Partition:
    return constant("identity", n)


def _find(parent: list[int], v: int) -> int:
    root = v
    while parent[root] != root:
        root = parent[root]
    while parent[v] != root:
        parent[v], v = root, parent[v]
    return root


def _union(parent: list[int], u: int, v: int) -> None:
    ru, rv = _find(parent, u), _find(parent, v)
    if ru != rv:
        if ru < rv:
            parent[rv] = ru
        else:
            parent[ru] = rv


def compose(a: Partition, b: Partition) -> Partition:
    """Product ``ab``: connect ``a`` on rows 0/1 and ``b`` on rows 1/2, keep rows 0/2."""
    _check(a, b)
    n = a.n
    parent = list(range(3 * n))
    for blk in a.blocks:
        for v in blk[1:]:
            _union(parent, blk[0], v)
    for blk in b.blocks:
        first = blk[0] + n
        for v in blk[1:]:
            _union(parent, first, v + n)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(_find(parent, v), []).append(v)
    for v in range(2 * n, 3 * n):
        groups.setdefault(_find(parent, v), []).append(v - n)
    return Partition(n, tuple(tuple(g) for g in groups.values()))


def star(a: Partition) -> Partition:
    """Swap the top and bottom rows."""
    n = a.n
    return Partition(n, tuple(tuple(v + n if v < n else v - n for v in b) for b in a.blocks))


def refinement_le(a: Partition, b: Partition) -> bool:
    """True iff every block of ``a`` lies inside a block of ``b``."""
    _check(a, b)
    lab = b.labels
    return all(all(lab[v] == lab[blk[0]] for v in blk) for blk in a.blocks)


def _is_transversal(blk: tuple[int, ...], n: int) -> bool:
    # blocks are sorted, so the first vertex is the least and the last the greatest
    return blk[0] < n <= blk[-1]


def has_transversal(a: Partition) -> bool:
    return any(_is_transversal(b, a.n) for b in a.blocks)


def is_block_bijection(a: Partition) -> bool:
    return all(_is_transversal(b, a.n) for b in a.blocks)


def is_partial_injection_diagram(a: Partition) -> bool:
    return all(len(b) == 1 or (len(b) == 2 and _is_transversal(b, a.n)) for b in a.blocks)


def is_idempotent(a: Partition) -> bool:
    return compose(a, a) == a


def _vertex_name(v: int, n: int) -> str:
    return str(v + 1) if v < n else f"{v - n + 1}'"


def format_partition(a: Partition) -> str:
    """Canonical one-line text, e.g. ``1 2 1' | 2'``."""
    return " | ".join(" ".join(_vertex_name(v, a.n) for v in b) for b in a.blocks)


def parse_partition(text: str, n: int | None = None) -> Partition:
    """Parse ``|``-separated blocks of space-separated vertices, primes for the bottom row.

    Block and vertex order on input are free.  ``n`` is inferred from the
    largest label unless given.
    """
    text = text.strip()
    raw: list[list[tuple[int, bool]]] = []
    if text:
        for chunk in text.split("|"):
            toks = chunk.split()
            if not toks:
                raise ParseError("empty block")
            blk = []
            for tok in toks:
                primed = tok.endswith("'")
                digits = tok[:-1] if primed else tok
                if not digits.isdigit() or int(digits) < 1:
                    raise ParseError(f"bad vertex {tok!r}")
                blk.append((int(digits), primed))
            raw.append(blk)
    size = max((i for blk in raw for i, _ in blk), default=0)
    if n is None:
        n = size
    elif size > n:
        raise ParseError(f"vertex label {size} exceeds n={n}")
    blocks = [[i - 1 + (n if p else 0) for i, p in blk] for blk in raw]
    flat = [v for b in blocks for v in b]
    if len(flat) != len(set(flat)):
        raise ParseError("vertex repeated")
    if len(flat) != 2 * n:
        raise ParseError(f"blocks cover {len(flat)} of {2 * n} vertices")
    return Partition(n, tuple(tuple(b) for b in blocks))


def restricted_growth_strings(m: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``m`` in lexicographic order."""
    if m == 0:
        yield ()
        return
    s = [0] * m

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            yield tuple(s)
            return
        for v in range(top + 2):
            s[i] = v
            yield from rec(i + 1, max(top, v))

    s[0] = 0
    yield from rec(1, 0)


def all_partitions(n: int) -> Iterator[Partition]:
    """All of P_n, in restricted-growth-string order over the vertex list 1..n, 1'..n'."""
    for rgs in restricted_growth_strings(2 * n):
        yield Partition.from_labels(n, rgs)
