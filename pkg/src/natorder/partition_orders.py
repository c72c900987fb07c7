"""Mitsch's order on P_n and the composite preorders with refinement."""

from __future__ import annotations

import numpy as np

from . import partitions as pt
from .errors import DimensionMismatch, UniverseTooLarge
from .partitions import Partition
from .universe import MAX_N, enumerate_universe, natural_order_holds

__all__ = [
    "mitsch_le_oracle",
    "mitsch_le_fast",
    "comp_supset_then_le",
    "comp_subset_then_le",
]


def _check(a: Partition, b: Partition) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"partitions over {a.n} and {b.n} points")


def _guard(n: int, force_large: bool) -> None:
    if n > MAX_N and not force_large:
        raise UniverseTooLarge(f"search over P_{n} exceeds the n<={MAX_N} guard")


def mitsch_le_oracle(a: Partition, b: Partition, *, force_large: bool = False) -> bool:
    """``a == b``, or ``a == a x == b x`` and ``a == y b`` for some ``x, y`` in P_n."""
    _check(a, b)
    _guard(a.n, force_large)
    if a == b:
        return True
    if a.n <= MAX_N:
        u = enumerate_universe("partitions", a.n)
        return natural_order_holds(u.cayley, u.index[a], u.index[b])
    elems = list(pt.all_partitions(a.n))
    if not any(pt.compose(a, x) == a and pt.compose(b, x) == a for x in elems):
        return False
    return any(pt.compose(y, b) == a for y in elems)


def mitsch_le_fast(a: Partition, b: Partition, *, force_large: bool = False) -> bool:
    """Idempotent-witness form: ``a == e b`` and ``a == b f`` for idempotents ``e, f``.

    Only trusted where it has been checked against :func:`mitsch_le_oracle`.
    """
    _check(a, b)
    _guard(a.n, force_large)
    if a == b:
        return True
    if a.n <= MAX_N:
        u = enumerate_universe("partitions", a.n)
        t = u.cayley
        ia, ib = u.index[a], u.index[b]
        idem = u.idempotents
        return bool(np.any(t[idem, ib] == ia)) and bool(np.any(t[ib, idem] == ia))
    idem_list = [e for e in pt.all_partitions(a.n) if pt.is_idempotent(e)]
    return any(pt.compose(e, b) == a for e in idem_list) and any(pt.compose(b, f) == a for f in idem_list)


def _sandwich(a: Partition, mid: Partition) -> Partition:
    return pt.compose(pt.compose(a, mid), a)


def comp_supset_then_le(a: Partition, b: Partition) -> bool:
    """``a ⊇ c <= b`` for some ``c``; decided by ``a d a ⊇ b d b``."""
    _check(a, b)
    d = pt.trivial(a.n)
    return pt.refinement_le(_sandwich(b, d), _sandwich(a, d))


def comp_subset_then_le(a: Partition, b: Partition) -> bool:
    """``a ⊆ c <= b`` for some ``c``; decided by ``a k a ⊆ b k b``."""
    _check(a, b)
    k = pt.universal(a.n)
    return pt.refinement_le(_sandwich(a, k), _sandwich(b, k))
