"""Orders and preorders on B_n: Mitsch's natural order, its meets with inclusion,
and the composite preorders with inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import relations as rel
from .errors import DimensionMismatch, PreconditionError, UniverseTooLarge
from .relations import Relation
from .universe import MAX_N, enumerate_universe, natural_order_holds

__all__ = [
    "MeetWitness",
    "mitsch_le",
    "mitsch_le_oracle",
    "mitsch_le_scan",
    "meet_with_inclusion",
    "meet_with_reverse_inclusion",
    "meet_rev_witnesses",
    "in_F",
    "comp_subset_then_le",
    "comp_supset_then_le",
]


def _check(a: Relation, b: Relation) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"relations on {a.n} and {b.n} points")


@dataclass(frozen=True)
class MeetWitness:
    """Idempotents ``epsilon`` (reflexive) and ``phi`` with ``a == b*epsilon == phi*b``."""

    epsilon: Relation
    phi: Relation

    def __post_init__(self) -> None:
        e, f = self.epsilon, self.phi
        if not rel.is_idempotent(e) or not rel.is_idempotent(f):
            raise AssertionError("witness relations must be idempotent")
        if not rel.is_subset(rel.identity(e.n), e):
            raise AssertionError("epsilon must contain the identity")


def mitsch_le(a: Relation, b: Relation) -> bool:
    """Natural order ``a <= b`` on B_n by the residual equations.

    With ``r`` the greatest right solution and ``l`` the greatest left
    solution, ``a <= b`` iff ``a == a*r == b*r == l*b``.  Polynomial in ``n``.
    """
    _check(a, b)
    if a == b:
        return True
    r = rel.max_right_solution(b, a)
    if rel.compose(b, r) != a or rel.compose(a, r) != a:
        return False
    return rel.compose(rel.max_left_solution(b, a), b) == a


def mitsch_le_scan(a: Relation, b: Relation) -> bool:
    """Definitional test by linear scans over all of B_n, no table needed."""
    _check(a, b)
    if a == b:
        return True
    universe = list(rel.all_relations(a.n))
    if not any(rel.compose(a, x) == a and rel.compose(b, x) == a for x in universe):
        return False
    return any(rel.compose(y, b) == a for y in universe)


def mitsch_le_oracle(a: Relation, b: Relation, *, force_large: bool = False) -> bool:
    """Definitional test: ``a == b`` or ``a == a x == b x`` and ``a == y b`` for some ``x, y``.

    Uses the cached multiplication table of B_n for ``n <= 3``; beyond that
    it refuses unless ``force_large``, in which case it scans.
    """
    _check(a, b)
    if a.n > MAX_N:
        if not force_large:
            raise UniverseTooLarge(f"oracle over B_{a.n} has 2^{a.n * a.n} elements")
        return mitsch_le_scan(a, b)
    u = enumerate_universe("relations", a.n)
    return natural_order_holds(u.cayley, u.index[a], u.index[b])


def meet_with_inclusion(a: Relation, b: Relation) -> bool:
    return mitsch_le(a, b) and rel.is_subset(a, b)


def meet_with_reverse_inclusion(a: Relation, b: Relation) -> bool:
    return mitsch_le(a, b) and rel.is_subset(b, a)


def meet_rev_witnesses(a: Relation, b: Relation) -> Optional[MeetWitness]:
    """The greatest residual witnesses for ``a`` below ``b`` in both orders, or ``None``."""
    if not meet_with_reverse_inclusion(a, b):
        return None
    eps = rel.max_right_solution(b, a)
    phi = rel.max_left_solution(b, a)
    w = MeetWitness(eps, phi)
    if rel.compose(b, eps) != a or rel.compose(phi, b) != a:
        raise AssertionError(f"residual witnesses fail to reproduce {a!r} from {b!r}")
    return w


def in_F(alpha: Relation, beta: Relation) -> bool:
    """Membership of ``beta`` in ``{x : alpha*x == alpha == x*alpha}`` for a preorder ``alpha``."""
    _check(alpha, beta)
    if not rel.is_preorder(alpha):
        raise PreconditionError(f"{alpha!r} is not a preorder")
    return rel.compose(alpha, beta) == alpha == rel.compose(beta, alpha)


def _sandwich(a: Relation) -> Relation:
    return rel.compose(rel.compose(a, rel.universal(a.n)), a)


def comp_subset_then_le(a: Relation, b: Relation) -> bool:
    """``a ⊆ c <= b`` for some ``c``; decided by ``a ω a ⊆ b ω b``."""
    _check(a, b)
    return rel.is_subset(_sandwich(a), _sandwich(b))


def comp_supset_then_le(a: Relation, b: Relation) -> bool:
    """``a ⊇ c <= b`` for some ``c``: always true, the empty relation works."""
    _check(a, b)
    return True
