"""Whole-universe tables for B_n and P_n, and the definitional natural order.

A :class:`UniverseTable` fixes the canonical index of every element and
lazily caches the multiplication table and the idempotents, which the
exhaustive sweeps reuse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any

import numpy as np

from . import partitions as pt
from . import relations as rel
from .errors import UniverseTooLarge

__all__ = [
    "UniverseTable",
    "enumerate_universe",
    "MAX_N",
    "natural_order_holds",
    "natural_order_matrix",
]

KINDS = ("relations", "partitions")
MAX_N = 3


@dataclass(frozen=True, eq=False)
class UniverseTable:
    kind: str
    n: int
    elements: tuple[Any, ...]
    index: dict[Any, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def same_as(self, other: UniverseTable) -> bool:
        return self.kind == other.kind and self.n == other.n

    @cached_property
    def cayley(self) -> np.ndarray:
        """``cayley[i, j]`` is the index of ``elements[i] * elements[j]``."""
        if self.kind == "relations":
            return _relation_cayley(self.n)
        size = len(self.elements)
        table = np.empty((size, size), dtype=np.int32)
        idx = self.index
        for i, a in enumerate(self.elements):
            table[i] = [idx[pt.compose(a, b)] for b in self.elements]
        return table

    @cached_property
    def idempotents(self) -> np.ndarray:
        t = self.cayley
        diag = t[np.arange(len(self)), np.arange(len(self))]
        return np.flatnonzero(diag == np.arange(len(self)))


def _relation_cayley(n: int) -> np.ndarray:
    # Row-wise boolean product on whole-universe arrays; independent of
    # relations.compose, which the tests cross-check against it.
    size = 1 << (n * n)
    codes = np.arange(size, dtype=np.int64)
    mask = (1 << n) - 1
    rows = [(codes >> (n * (n - 1 - i))) & mask for i in range(n)]
    out = np.zeros((size, size), dtype=np.int64)
    for i in range(n):
        acc = np.zeros((size, size), dtype=np.int64)
        for j in range(n):
            has = ((rows[i] >> (n - 1 - j)) & 1).astype(bool)
            acc |= np.where(has[:, None], rows[j][None, :], 0)
        out |= acc << (n * (n - 1 - i))
    return out.astype(np.int32)


@lru_cache(maxsize=None)
def _build(kind: str, n: int) -> UniverseTable:
    if kind == "relations":
        elems = tuple(rel.all_relations(n))
    else:
        elems = tuple(pt.all_partitions(n))
    return UniverseTable(kind, n, elems, {e: i for i, e in enumerate(elems)})


def enumerate_universe(kind: str, n: int, *, force_large: bool = False) -> UniverseTable:
    """The full canonically ordered universe ``B_n`` or ``P_n`` (cached)."""
    if kind not in KINDS:
        raise ValueError(f"unknown universe kind {kind!r}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_N and not force_large:
        raise UniverseTooLarge(f"{kind} universe with n={n} exceeds the n<={MAX_N} guard")
    return _build(kind, n)


def natural_order_holds(table: np.ndarray, i: int, j: int) -> bool:
    """Definitional test of ``a <= b`` on a finite semigroup given by its table.

    ``a <= b`` iff ``a == b`` or there are ``x`` with ``a == a x == b x`` and
    ``y`` with ``a == y b``.  The two searches are independent.
    """
    if i == j:
        return True
    has_x = bool(np.any((table[i] == i) & (table[j] == i)))
    return has_x and bool(np.any(table[:, j] == i))


def natural_order_matrix(table: np.ndarray) -> np.ndarray:
    """``m[i, j] = natural_order_holds(table, i, j)`` for all pairs at once."""
    size = table.shape[0]
    out = np.zeros((size, size), dtype=bool)
    for i in range(size):
        hit = table == i
        xs = hit[i]
        row = hit[:, xs].any(axis=1) & hit.any(axis=0)
        row[i] = True
        out[i] = row
    return out
