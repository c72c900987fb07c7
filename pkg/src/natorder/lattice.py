"""Preorders on a whole universe as boolean matrices, and the sublattice they generate.

Named predicates are materialised as |U| x |U| matrices; meets are
intersections, joins are reflexive-transitive closures of unions, and
composites are boolean matrix products (``(p ∘ q)[i, j]`` iff
``p[i, k]`` and ``q[k, j]`` for some ``k``).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import partition_orders as po
from . import partitions as pt
from . import relation_orders as ro
from . import relations as rel
from .universe import UniverseTable, enumerate_universe, natural_order_matrix

__all__ = [
    "PreorderMatrix",
    "Sublattice",
    "NAMES",
    "ALIASES",
    "enumerate_universe",
    "materialise",
    "compose_preorders",
    "intersect_preorders",
    "closure_join",
    "is_preorder_matrix",
    "is_order_matrix",
    "generate_sublattice",
    "find_separating_witness",
    "to_dot",
]

# Canonical node names, in the order used to break label ties.
NAMES = (
    "eq",
    "mitsch_and_incl",
    "mitsch_and_rincl",
    "mitsch",
    "incl",
    "rincl",
    "incl_then_mitsch",
    "rincl_then_mitsch",
)

ALIASES = {
    "=": "eq",
    "le": "mitsch",
    "subset": "incl",
    "supset": "rincl",
    "le-and-incl": "mitsch_and_incl",
    "le-and-supset": "mitsch_and_rincl",
    "incl-then-le": "incl_then_mitsch",
    "subset-then-le": "incl_then_mitsch",
    "supset-then-le": "rincl_then_mitsch",
    "rincl-then-le": "rincl_then_mitsch",
}


@dataclass(frozen=True, eq=False)
class PreorderMatrix:
    universe: UniverseTable
    bits: np.ndarray = field(repr=False)
    name: str = ""

    def __post_init__(self) -> None:
        size = len(self.universe)
        if self.bits.shape != (size, size):
            raise ValueError(f"matrix shape {self.bits.shape} does not match universe of size {size}")
        b = np.ascontiguousarray(self.bits, dtype=bool)
        b.setflags(write=False)
        object.__setattr__(self, "bits", b)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PreorderMatrix):
            return NotImplemented
        return self.universe.same_as(other.universe) and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.universe.kind, self.universe.n, self.bits.tobytes()))

    def __le__(self, other: PreorderMatrix) -> bool:
        """Containment of the underlying pair sets."""
        _same(self, other)
        return not np.any(self.bits & ~other.bits)

    def __lt__(self, other: PreorderMatrix) -> bool:
        return self <= other and self != other

    def digest(self) -> str:
        return hashlib.sha1(self.bits.tobytes()).hexdigest()[:8]

    def renamed(self, name: str) -> PreorderMatrix:
        return PreorderMatrix(self.universe, self.bits, name)

    @property
    def pair_count(self) -> int:
        return int(self.bits.sum())


def _same(p: PreorderMatrix, q: PreorderMatrix) -> None:
    if not p.universe.same_as(q.universe):
        raise ValueError("preorders live on different universes")


def _pairwise(u: UniverseTable, pred: Callable[[object, object], bool]) -> np.ndarray:
    el = u.elements
    return np.array([[pred(a, b) for b in el] for a in el], dtype=bool)


def _mitsch_bits(u: UniverseTable) -> np.ndarray:
    if u.kind == "relations":
        return _pairwise(u, ro.mitsch_le)
    return natural_order_matrix(u.cayley)


def _incl_bits(u: UniverseTable) -> np.ndarray:
    return _pairwise(u, rel.is_subset if u.kind == "relations" else pt.refinement_le)


def _named_bits(u: UniverseTable, name: str) -> np.ndarray:
    size = len(u)
    if name == "eq":
        return np.eye(size, dtype=bool)
    if name == "mitsch":
        return _mitsch_bits(u)
    if name == "incl":
        return _incl_bits(u)
    if name == "rincl":
        return _incl_bits(u).T.copy()
    if name == "mitsch_and_incl":
        return _mitsch_bits(u) & _incl_bits(u)
    if name == "mitsch_and_rincl":
        return _mitsch_bits(u) & _incl_bits(u).T
    mod = ro if u.kind == "relations" else po
    if name == "incl_then_mitsch":
        return _pairwise(u, mod.comp_subset_then_le)
    if name == "rincl_then_mitsch":
        return _pairwise(u, mod.comp_supset_then_le)
    raise KeyError(name)


_CACHE: dict[tuple[str, int, str], np.ndarray] = {}


def materialise(u: UniverseTable, pred: str) -> PreorderMatrix:
    """Matrix of a named predicate; ``bits[i, j] = pred(elements[i], elements[j])``.

    Composite names are evaluated through their closed-form criteria.
    """
    name = ALIASES.get(pred, pred)
    if name not in NAMES:
        raise KeyError(f"unknown predicate {pred!r}")
    key = (u.kind, u.n, name)
    if key not in _CACHE:
        _CACHE[key] = _named_bits(u, name)
    return PreorderMatrix(u, _CACHE[key], name)


def _bool_product(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return (x.astype(np.int32) @ y.astype(np.int32)) > 0


def compose_preorders(p: PreorderMatrix, q: PreorderMatrix) -> PreorderMatrix:
    _same(p, q)
    name = f"{p.name}∘{q.name}" if p.name and q.name else ""
    return PreorderMatrix(p.universe, _bool_product(p.bits, q.bits), name)


def intersect_preorders(p: PreorderMatrix, q: PreorderMatrix) -> PreorderMatrix:
    _same(p, q)
    return PreorderMatrix(p.universe, p.bits & q.bits)


def _reflexive_transitive_closure(m: np.ndarray) -> np.ndarray:
    cur = m | np.eye(m.shape[0], dtype=bool)
    while True:
        nxt = _bool_product(cur, cur)
        if np.array_equal(nxt, cur):
            return cur
        cur = nxt


def closure_join(p: PreorderMatrix, q: PreorderMatrix) -> PreorderMatrix:
    """Least preorder containing both: closure of the union by repeated squaring."""
    _same(p, q)
    return PreorderMatrix(p.universe, _reflexive_transitive_closure(p.bits | q.bits))


def is_preorder_matrix(p: PreorderMatrix) -> bool:
    b = p.bits
    if not b.diagonal().all():
        return False
    return not np.any(_bool_product(b, b) & ~b)


def is_order_matrix(p: PreorderMatrix) -> bool:
    b = p.bits
    off = b & b.T
    np.fill_diagonal(off, False)
    return is_preorder_matrix(p) and not off.any()


@dataclass
class Sublattice:
    universe: UniverseTable
    nodes: list[PreorderMatrix]
    edges: list[tuple[str, str]]  # (lower, upper) covering pairs
    orders: dict[str, bool]
    aliases: dict[str, list[str]]

    def node(self, label: str) -> PreorderMatrix:
        for p in self.nodes:
            if p.name == label:
                return p
        raise KeyError(label)

    @property
    def top(self) -> PreorderMatrix:
        return next(p for p in self.nodes if all(q <= p for q in self.nodes))

    @property
    def bottom(self) -> PreorderMatrix:
        return next(p for p in self.nodes if all(p <= q for q in self.nodes))


def _label_nodes(u: UniverseTable, nodes: list[PreorderMatrix]) -> tuple[list[PreorderMatrix], dict[str, list[str]]]:
    named = [materialise(u, nm) for nm in NAMES]
    out = []
    aliases: dict[str, list[str]] = {}
    for p in nodes:
        matches = [m.name for m in named if m == p]
        if matches:
            label = matches[0]
            if len(matches) > 1:
                aliases[label] = matches[1:]
        else:
            label = f"p_{p.digest()}"
        out.append(p.renamed(label))
    return out, aliases


def generate_sublattice(u: UniverseTable, generators: list[PreorderMatrix]) -> Sublattice:
    """Close ``generators`` and equality under meet and join; Hasse edges by containment."""
    for g in generators:
        if not g.universe.same_as(u):
            raise ValueError("generator on a different universe")
    found: list[PreorderMatrix] = []
    seen: set[PreorderMatrix] = set()
    for p in [materialise(u, "eq"), *generators]:
        if p not in seen:
            seen.add(p)
            found.append(p)
    frontier = list(found)
    while frontier:
        fresh: list[PreorderMatrix] = []
        for p in frontier:
            for q in list(found):
                for r in (intersect_preorders(p, q), closure_join(p, q)):
                    if r not in seen:
                        seen.add(r)
                        fresh.append(r)
        found.extend(fresh)
        frontier = fresh

    nodes, aliases = _label_nodes(u, found)
    nodes.sort(key=lambda p: p.name)
    edges = []
    for lo in nodes:
        for hi in nodes:
            if lo < hi and not any(lo < mid < hi for mid in nodes):
                edges.append((lo.name, hi.name))
    edges.sort()
    orders = {p.name: is_order_matrix(p) for p in nodes}
    return Sublattice(u, nodes, edges, orders, aliases)


def find_separating_witness(
    p: PreorderMatrix,
    q: PreorderMatrix,
    where: Optional[Callable[[object, object], bool]] = None,
) -> Optional[tuple[object, object]]:
    """Least-index pair related by ``q`` but not by ``p``, or ``None`` if ``p`` contains ``q``.

    ``where`` restricts the search to pairs satisfying it.
    """
    _same(p, q)
    el = p.universe.elements
    for i, j in np.argwhere(q.bits & ~p.bits):
        a, b = el[int(i)], el[int(j)]
        if where is None or where(a, b):
            return a, b
    return None


def to_dot(lat: Sublattice) -> str:
    """Graphviz source for the Hasse diagram, edges pointing from lower to upper."""
    u = lat.universe
    lines = [f'digraph "{u.kind}_{u.n}" {{', "  rankdir=BT;"]
    for p in lat.nodes:
        style = "shape=circle, style=filled" if lat.orders[p.name] else "style=solid"
        extra = ""
        if p.name in lat.aliases:
            extra = f', tooltip="also: {" ".join(lat.aliases[p.name])}"'
        lines.append(f'  "{p.name}" [{style}{extra}];')
    for lo, hi in lat.edges:
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
