"""Named verification sweeps over B_n and P_n.

Each suite returns a :class:`CheckReport`.  Relations at ``n <= 2`` and
partitions at ``n <= 3`` are swept exhaustively; relations at ``n == 3``
are sampled with a seeded generator (``sample`` pairs, default 10⁴).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Optional

import numpy as np

from . import lattice as lab
from . import partition_orders as po
from . import partitions as pt
from . import relation_orders as ro
from . import relations as rel
from .errors import UniverseTooLarge
from .universe import UniverseTable, enumerate_universe, natural_order_matrix

__all__ = ["CheckReport", "SUITES", "run_suite", "DEFAULT_SAMPLE"]

DEFAULT_SAMPLE = 10_000
EXHAUSTIVE_N = {"relations": 2, "partitions": 3}
SAMPLED_N = {"relations": 3, "partitions": 3}


def encode(x: Any) -> str:
    if isinstance(x, rel.Relation):
        return str(x)
    if isinstance(x, pt.Partition):
        return pt.format_partition(x) or "()"
    return str(x)


@dataclass
class CheckReport:
    suite: str
    kind: str
    n: int
    examined: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, tuple[str, ...]]] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)
    mode: str = "exhaustive"
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, what: str, k: int = 1) -> None:
        self.examined[what] = self.examined.get(what, 0) + k

    def fail(self, check: str, *witness: Any) -> None:
        self.failures.append((check, tuple(encode(w) for w in witness)))

    def expect(self, ok: bool, check: str, *witness: Any) -> None:
        if not ok:
            self.fail(check, *witness)

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        d = {
            "suite": self.suite,
            "universe": self.kind,
            "n": self.n,
            "mode": self.mode,
            "examined": dict(sorted(self.examined.items())),
            "failure_count": len(self.failures),
            "failures": [{"check": c, "witness": list(w)} for c, w in sorted(self.failures)],
            "notes": self.notes,
            "passed": self.passed,
        }
        if timing:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d

    def to_text(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def summary(self) -> str:
        verdict = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        counts = ", ".join(f"{v} {k}" for k, v in sorted(self.examined.items()))
        return f"{self.suite} [{self.kind} n={self.n}, {self.mode}]: {verdict}; {counts}"


# ---------------------------------------------------------------- helpers

@dataclass
class Context:
    kind: str
    n: int
    sample: Optional[int]
    rng: random.Random

    @property
    def sampled(self) -> bool:
        return self.sample is not None

    @property
    def universe(self) -> UniverseTable:
        return enumerate_universe(self.kind, self.n)

    def pairs(self, elems: Optional[list] = None) -> Iterator[tuple[Any, Any]]:
        """All pairs, or ``sample`` seeded pairs drawn from ``elems``."""
        elems = list(self.universe.elements) if elems is None else elems
        if not self.sampled:
            yield from product(elems, repeat=2)
            return
        for _ in range(self.sample):
            yield self.rng.choice(elems), self.rng.choice(elems)

    def triples(self, elems: Optional[list] = None) -> Iterator[tuple[Any, Any, Any]]:
        elems = list(self.universe.elements) if elems is None else elems
        if not self.sampled:
            yield from product(elems, repeat=3)
            return
        for _ in range(self.sample):
            yield self.rng.choice(elems), self.rng.choice(elems), self.rng.choice(elems)


def _oracle_matrix(u: UniverseTable) -> np.ndarray:
    return natural_order_matrix(u.cayley)


def _incl_matrix(u: UniverseTable) -> np.ndarray:
    return lab.materialise(u, "incl").bits


# ------------------------------------------------------- relation suites

def _thm_equational(ctx: Context, rep: CheckReport) -> None:
    for a, b in ctx.pairs():
        rep.count("pairs")
        rep.expect(ro.mitsch_le(a, b) == ro.mitsch_le_oracle(a, b), "criterion-vs-definition", a, b)


def _residuation(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    for a, b, x in ctx.triples():
        rep.count("triples")
        bx_in_a = rel.is_subset(rel.compose(b, x), a)
        r = rel.max_right_solution(b, a)
        rep.expect(bx_in_a == rel.is_subset(x, r), "right-residual", a, b, x)
        alt = rel.complement(rel.compose(rel.complement(a), rel.converse(x)))
        rep.expect(bx_in_a == rel.is_subset(b, alt), "third-form", a, b, x)
        xb_in_a = rel.is_subset(rel.compose(x, b), a)
        rep.expect(xb_in_a == rel.is_subset(x, rel.max_left_solution(b, a)), "left-residual", a, b, x)
        if rel.compose(b, x) == a:
            rep.expect(rel.divides_right(b, a) and rel.is_subset(x, r), "right-maximality", a, b, x)
        if rel.compose(x, b) == a:
            rep.expect(
                rel.divides_left(b, a) and rel.is_subset(x, rel.max_left_solution(b, a)),
                "left-maximality",
                a,
                b,
                x,
            )
    # divisibility against brute force over the whole universe
    t = u.cayley
    for a, b in ctx.pairs():
        rep.count("divisibility pairs")
        ia, ib = u.index[a], u.index[b]
        rep.expect(rel.divides_right(b, a) == bool(np.any(t[ib] == ia)), "divides-right", a, b)
        rep.expect(rel.divides_left(b, a) == bool(np.any(t[:, ib] == ia)), "divides-left", a, b)


def _partial_order(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    if ctx.kind == "partitions":
        m = _oracle_matrix(u)
        elems = list(u.elements)
        rep.notes["order"] = "definitional oracle"
    elif not ctx.sampled:
        elems = list(u.elements)
        m = np.array([[ro.mitsch_le(a, b) for b in elems] for a in elems], dtype=bool)
        rep.notes["order"] = "equational criterion"
    else:
        # exhaustive over a seeded subset, so that pairs and triples close up
        k = max(2, int(round(ctx.sample ** 0.5)))
        idx = sorted(ctx.rng.sample(range(len(u)), min(k, len(u))))
        elems = [u.elements[i] for i in idx]
        m = np.array([[ro.mitsch_le(a, b) for b in elems] for a in elems], dtype=bool)
        rep.notes["order"] = "equational criterion"
        rep.notes["subset_size"] = len(elems)
        for a, b in ctx.pairs():
            rep.count("sampled pairs")
            if a != b and ro.mitsch_le(a, b) and ro.mitsch_le(b, a):
                rep.fail("antisymmetry", a, b)
    size = len(elems)
    rep.count("elements", size)
    rep.count("pairs", size * size)
    rep.count("triples", size ** 3)
    for i in np.flatnonzero(~m.diagonal()):
        rep.fail("reflexivity", elems[i])
    sym = m & m.T
    np.fill_diagonal(sym, False)
    for i, j in np.argwhere(np.triu(sym)):
        rep.fail("antisymmetry", elems[i], elems[j])
    two_step = (m.astype(np.int32) @ m.astype(np.int32)) > 0
    for i, k in np.argwhere(two_step & ~m)[:50]:
        j = int(np.flatnonzero(m[i] & m[:, k])[0])
        rep.fail("transitivity", elems[i], elems[j], elems[k])


def _subsemigroup_ix(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    inj = [a for a in u.elements if rel.is_partial_injection(a)]
    rep.notes["partial_injections"] = len(inj)
    for a, b in product(inj, repeat=2):
        rep.count("pairs in I_n")
        le = ro.mitsch_le(a, b)
        rep.expect(le == rel.is_subset(a, b), "le-iff-subset", a, b)
        # order computed inside I_n only
        inside = a == b or (
            any(rel.compose(a, x) == a and rel.compose(b, x) == a for x in inj)
            and any(rel.compose(y, b) == a for y in inj)
        )
        rep.expect(inside == le, "restriction-coherence", a, b)
    for b in inj:
        for a in u.elements:
            if rel.is_subset(a, b):
                rep.count("subsets of I_n elements")
                rep.expect(ro.mitsch_le(a, b), "subset-implies-le", a, b)


def _prop_f_alpha(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    pre = [a for a in u.elements if rel.is_preorder(a)]
    rep.notes["preorders"] = len(pre)
    for alpha in pre:
        for beta in u.elements:
            if not ro.in_F(alpha, beta):
                continue
            rep.count("pairs with beta in F(alpha)")
            le = ro.mitsch_le(alpha, beta)
            rep.expect(le, "alpha-below-beta", alpha, beta)
            rep.expect(le == rel.is_subset(beta, alpha), "le-iff-reverse-subset", alpha, beta)


def _prop_meet_witness(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    elems = list(u.elements)
    for a, b in ctx.pairs():
        rep.count("pairs")
        try:
            w = ro.meet_rev_witnesses(a, b)
        except AssertionError:
            rep.fail("witness-laws", a, b)
            continue
        rep.expect((w is not None) == ro.meet_with_reverse_inclusion(a, b), "witness-iff-meet", a, b)
    idem = [e for e in elems if rel.is_idempotent(e)]
    reflexive = [e for e in idem if rel.is_subset(rel.identity(ctx.n), e)]
    rep.notes["idempotents"] = len(idem)
    rep.notes["reflexive_idempotents"] = len(reflexive)
    bs = elems if not ctx.sampled else [ctx.rng.choice(elems) for _ in range(max(1, ctx.sample // 100))]
    for b in bs:
        right = {rel.compose(b, e) for e in reflexive}
        left = {rel.compose(f, b) for f in idem}
        for a in right & left:
            rep.count("constructed pairs")
            rep.expect(ro.meet_with_reverse_inclusion(a, b), "construction-implies-meet", a, b)
        for a in elems if not ctx.sampled else []:
            if ro.meet_with_reverse_inclusion(a, b):
                rep.expect(a in right and a in left, "meet-implies-construction", a, b)


def _prop_incl_then_le(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    incl = _incl_matrix(u)
    oracle = _oracle_matrix(u)
    exists = (incl.astype(np.int32) @ oracle.astype(np.int32)) > 0
    rep.notes["gamma_scan"] = "full universe, definitional order"
    for a, b in ctx.pairs():
        rep.count("pairs")
        ia, ib = u.index[a], u.index[b]
        rep.expect(ro.comp_subset_then_le(a, b) == bool(exists[ia, ib]), "criterion-vs-exists", a, b)


def _witnesses(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    le = lab.materialise(u, "mitsch")
    inc = lab.materialise(u, "incl")
    rinc = lab.materialise(u, "rincl")
    forward = lab.compose_preorders(inc, le)
    reverse = lab.compose_preorders(le, inc)
    rep.count("composites", 4)
    perm_pair = lab.find_separating_witness(
        reverse, forward, where=lambda a, b: a != b and rel.is_permutation(a) and rel.is_permutation(b)
    )
    least = lab.find_separating_witness(reverse, forward)
    rep.notes["incl_least_witness"] = [encode(x) for x in least] if least else None
    rep.notes["incl_permutation_witness"] = [encode(x) for x in perm_pair] if perm_pair else None
    big = lab.compose_preorders(rinc, le)
    small = lab.compose_preorders(le, rinc)
    least_r = lab.find_separating_witness(small, big)
    rep.notes["rincl_least_witness"] = [encode(x) for x in least_r] if least_r else None
    iota, omega = rel.identity(ctx.n), rel.universal(ctx.n)
    io_sep = bool(big.bits[u.index[iota], u.index[omega]] and not small.bits[u.index[iota], u.index[omega]])
    rep.notes["iota_omega_separates"] = io_sep
    if ctx.n >= 2:
        rep.expect(perm_pair is not None, "distinct-permutations-separate")
        rep.expect(io_sep, "iota-omega-separates", iota, omega)
        rep.expect(not lab.is_preorder_matrix(reverse), "reverse-incl-composite-not-preorder")
        rep.expect(not lab.is_preorder_matrix(small), "reverse-rincl-composite-not-preorder")


def _atoms(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    elems = list(u.elements)
    empty = rel.empty(ctx.n)
    below = {b: [a for a in elems if a != b and ro.mitsch_le(a, b)] for b in elems}
    rep.count("pairs", len(elems) ** 2)
    mitsch_atoms = [b for b in elems if b != empty and all(a == empty for a in below[b])]
    rep.notes["mitsch_atoms"] = sorted(encode(a) for a in mitsch_atoms)
    singles = [s for s in elems if len(s) == 1]
    for s in singles:
        rep.count("inclusion atoms")
        rep.expect(s in mitsch_atoms, "inclusion-atom-is-mitsch-atom", s)
    outside = []
    for a in elems:
        if a == empty:
            continue
        lo = any(rel.is_subset(s, a) for s in mitsch_atoms)
        hi = any(rel.is_subset(a, t) for t in mitsch_atoms)
        if not (lo and hi):
            outside.append(a)
    rep.notes["interval_claim_holds"] = not outside
    rep.notes["interval_claim_exceptions"] = sorted(encode(a) for a in outside)
    for a in outside:
        rep.fail("nonempty-between-mitsch-atoms", a)


# ------------------------------------------------------ partition suites

def _assoc(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    t = u.cayley
    size = len(u)
    if ctx.sampled:
        for a, b, c in ctx.triples():
            rep.count("triples")
            rep.expect(pt.compose(pt.compose(a, b), c) == pt.compose(a, pt.compose(b, c)), "associativity", a, b, c)
        return
    # table rows agree with direct composition, then associativity on the table
    for a, b in product(u.elements, repeat=2):
        rep.expect(u.elements[t[u.index[a], u.index[b]]] == pt.compose(a, b), "table", a, b)
    rep.count("triples", size ** 3)
    for i in range(size):
        left = t[t[i]]  # (a b) c indexed [b, c]
        right = t[i][t]  # a (b c)
        for j, k in np.argwhere(left != right)[:5]:
            rep.fail("associativity", u.elements[i], u.elements[j], u.elements[k])


def _refinement_matrix(u: UniverseTable) -> np.ndarray:
    return _incl_matrix(u)


def _lemma_compat(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    t = u.cayley
    r = _refinement_matrix(u)
    for ia, ib in np.argwhere(r):
        rep.count("refinement pairs")
        rep.count("triples", len(u))
        bad_r = np.flatnonzero(~r[t[ia], t[ib]])
        bad_l = np.flatnonzero(~r[t[:, ia], t[:, ib]])
        for c in bad_r[:3]:
            rep.fail("right-compatibility", u.elements[ia], u.elements[ib], u.elements[c])
        for c in bad_l[:3]:
            rep.fail("left-compatibility", u.elements[ia], u.elements[ib], u.elements[c])


def _lemma_dk(ctx: Context, rep: CheckReport) -> None:
    d, k = pt.trivial(ctx.n), pt.universal(ctx.n)
    for a in ctx.universe.elements:
        rep.count("elements")
        rep.expect(d * a * d == d, "dad=d", a)
        if pt.has_transversal(a):
            rep.expect(k * a * k == k, "kak=k", a)
        else:
            rep.expect(a * k * a == a, "aka=a", a)


def _cor_idempotents(ctx: Context, rep: CheckReport) -> None:
    d, k = pt.trivial(ctx.n), pt.universal(ctx.n)
    for a in ctx.universe.elements:
        rep.count("elements")
        for label, p in (("ad", a * d), ("da", d * a), ("ak", a * k), ("ka", k * a)):
            rep.expect(pt.is_idempotent(p), f"{label}-idempotent", a)


def _star_laws(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    t = u.cayley
    st = np.array([u.index[pt.star(a)] for a in u.elements])
    for i, a in enumerate(u.elements):
        rep.count("elements")
        rep.expect(st[st[i]] == i, "involution", a)
        rep.expect(t[t[i, st[i]], i] == i, "regularity", a)
    pairs = list(ctx.pairs())
    for a, b in pairs:
        i, j = u.index[a], u.index[b]
        rep.count("pairs")
        rep.expect(st[t[i, j]] == t[st[j], st[i]], "antihomomorphism", a, b)


def _partition_composite(ctx: Context, rep: CheckReport, *, reverse: bool) -> None:
    u = ctx.universe
    r = _refinement_matrix(u).astype(np.int32)
    m = _oracle_matrix(u).astype(np.int32)
    # exists c with (a ⊇ c or a ⊆ c) and c <= b
    exists = ((r.T if reverse else r) @ m) > 0
    crit = po.comp_supset_then_le if reverse else po.comp_subset_then_le
    rep.notes["c_scan"] = "full universe, definitional order"
    for a, b in ctx.pairs():
        rep.count("pairs")
        rep.expect(crit(a, b) == bool(exists[u.index[a], u.index[b]]), "criterion-vs-exists", a, b)


def _prop_pda(ctx: Context, rep: CheckReport) -> None:
    _partition_composite(ctx, rep, reverse=True)


def _prop_pka(ctx: Context, rep: CheckReport) -> None:
    _partition_composite(ctx, rep, reverse=False)


def _canonical_subsemigroups(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    m = _oracle_matrix(u)
    r = _refinement_matrix(u)
    bb = [i for i, a in enumerate(u.elements) if pt.is_block_bijection(a)]
    pi = [i for i, a in enumerate(u.elements) if pt.is_partial_injection_diagram(a)]
    rep.notes["block_bijections"] = len(bb)
    rep.notes["partial_injection_diagrams"] = len(pi)
    for i, j in product(bb, repeat=2):
        rep.count("block-bijection pairs")
        rep.expect(m[i, j] == r[j, i], "le-iff-reverse-refinement", u.elements[i], u.elements[j])
    for i, j in product(pi, repeat=2):
        rep.count("partial-injection pairs")
        rep.expect(m[i, j] == r[i, j], "le-iff-refinement", u.elements[i], u.elements[j])


def _fast_vs_oracle(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    m = _oracle_matrix(u)
    for a, b in ctx.pairs():
        rep.count("pairs")
        rep.expect(po.mitsch_le_fast(a, b) == bool(m[u.index[a], u.index[b]]), "fast-vs-oracle", a, b)


# ---------------------------------------------------------- both kinds

def _trivial_conjunction(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    both = lab.intersect_preorders(lab.materialise(u, "mitsch_and_incl"), lab.materialise(u, "mitsch_and_rincl"))
    rep.count("pairs", len(u) ** 2)
    rep.expect(both == lab.materialise(u, "eq"), "double-conjunction-is-equality")
    for name in ("mitsch_and_incl", "mitsch_and_rincl"):
        rep.notes[f"{name}_nontrivial"] = lab.materialise(u, name) != lab.materialise(u, "eq")


def _join_closure(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    le = lab.materialise(u, "mitsch")
    inc = lab.materialise(u, "incl")
    rinc = lab.materialise(u, "rincl")
    for gen, crit_name in ((inc, "incl_then_mitsch"), (rinc, "rincl_then_mitsch")):
        crit = lab.materialise(u, crit_name)
        raw = lab.compose_preorders(gen, le)
        rep.count("matrices", 2)
        rep.expect(crit == raw, f"{crit_name}-criterion-vs-composite")
        rep.expect(lab.is_preorder_matrix(raw), f"{crit_name}-is-preorder")
        rep.expect(lab.closure_join(gen, le) == raw, f"{crit_name}-is-join")
        rep.expect(lab.compose_preorders(le, gen) <= raw, f"{crit_name}-contains-reverse")
    top = lab.materialise(u, "rincl_then_mitsch")
    rep.notes["rincl_then_mitsch_universal"] = bool(top.bits.all())
    if ctx.kind == "relations":
        rep.expect(bool(top.bits.all()), "rincl-composite-universal")


def _lattice(ctx: Context, rep: CheckReport) -> None:
    u = ctx.universe
    gens = [lab.materialise(u, x) for x in ("mitsch", "incl", "rincl")]
    lat = lab.generate_sublattice(u, gens)
    rep.count("nodes", len(lat.nodes))
    rep.count("edges", len(lat.edges))
    labels = {p.name for p in lat.nodes}
    for name in lab.NAMES:
        rep.expect(name in labels or any(name in v for v in lat.aliases.values()), f"contains-{name}")
    for p in lat.nodes:
        for q in lat.nodes:
            rep.expect(lab.intersect_preorders(p, q) in lat.nodes, "closed-under-meet", p.name, q.name)
            rep.expect(lab.closure_join(p, q) in lat.nodes, "closed-under-join", p.name, q.name)
        rep.expect(lab.is_preorder_matrix(p), "node-is-preorder", p.name)
    expected_orders = {"eq", "mitsch", "incl", "rincl", "mitsch_and_incl", "mitsch_and_rincl"}
    for name in lab.NAMES:
        if name in lat.orders:
            rep.expect(lat.orders[name] == (name in expected_orders), f"order-flag-{name}")
    rep.expect(lat.bottom.name == "eq", "bottom-is-equality")
    rep.expect(lab.to_dot(lat) == lab.to_dot(lab.generate_sublattice(u, gens)), "deterministic-dot")
    rep.notes["nodes"] = {p.name: {"order": lat.orders[p.name], "pairs": p.pair_count} for p in lat.nodes}
    rep.notes["aliases"] = lat.aliases
    rep.notes["top"] = lat.top.name


# --------------------------------------------------------------- registry

@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[Context, CheckReport], None]
    kinds: tuple[str, ...]
    samplable: bool = True
    description: str = ""
    # exhaustive over a small sub-universe, so allowed where full sweeps are not
    small_carrier: bool = False


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("thm-equational-criterion", _thm_equational, ("relations",),
              description="residual equations agree with the existential definition"),
        Suite("mitsch-partial-order", _partial_order, ("relations", "partitions"),
              description="natural order is reflexive, antisymmetric, transitive"),
        Suite("residuation", _residuation, ("relations",),
              description="greatest solutions of b x ⊆ a and x b ⊆ a, divisibility"),
        Suite("subsemigroup-ix", _subsemigroup_ix, ("relations",), samplable=False, small_carrier=True,
              description="on partial injections the natural order is inclusion"),
        Suite("prop-f-alpha", _prop_f_alpha, ("relations",), samplable=False, small_carrier=True,
              description="on F(alpha) the natural order is reverse inclusion"),
        Suite("prop-meet-witness", _prop_meet_witness, ("relations",),
              description="≤∩⊇ via idempotent witnesses"),
        Suite("prop-incl-then-le", _prop_incl_then_le, ("relations",),
              description="a ω a ⊆ b ω b decides ⊆∘≤"),
        Suite("witnesses", _witnesses, ("relations",), samplable=False,
              description="reverse composites are strictly smaller"),
        Suite("atoms", _atoms, ("relations",), samplable=False,
              description="inclusion atoms are Mitsch atoms; interval claim"),
        Suite("associativity", _assoc, ("partitions",), description="partition product is associative"),
        Suite("lemma-compat", _lemma_compat, ("partitions",), samplable=False,
              description="refinement is compatible with the product"),
        Suite("lemma-dk", _lemma_dk, ("partitions",), samplable=False, description="d a d, k a k, a k a"),
        Suite("cor-idempotents", _cor_idempotents, ("partitions",), samplable=False,
              description="a d, d a, a k, k a are idempotent"),
        Suite("star-laws", _star_laws, ("partitions",), description="involution, antihomomorphism, regularity"),
        Suite("prop-pda", _prop_pda, ("partitions",), description="a d a ⊇ b d b decides ⊇∘≤"),
        Suite("prop-pka", _prop_pka, ("partitions",), description="a k a ⊆ b k b decides ⊆∘≤"),
        Suite("canonical-subsemigroups", _canonical_subsemigroups, ("partitions",), samplable=False,
              description="≤ is ⊇ on block bijections and ⊆ on partial injections"),
        Suite("fast-vs-oracle", _fast_vs_oracle, ("partitions",),
              description="idempotent-witness test agrees with the definition"),
        Suite("trivial-conjunction", _trivial_conjunction, ("relations", "partitions"), samplable=False,
              description="(≤∩⊆)∩(≤∩⊇) is equality"),
        Suite("join-closure", _join_closure, ("relations", "partitions"), samplable=False,
              description="composites are the joins and match their criteria"),
        Suite("lattice", _lattice, ("relations", "partitions"), samplable=False,
              description="sublattice generated by ≤, ⊆, ⊇"),
    ]
}


def run_suite(
    name: str,
    kind: str,
    n: int,
    sample: Optional[int] = None,
    seed: int = 0,
) -> CheckReport:
    """Run one suite.  Raises ``KeyError`` for an unknown suite and
    ``ValueError``/``UniverseTooLarge`` when the universe is not supported."""
    suite = SUITES[name]
    if kind not in suite.kinds:
        raise ValueError(f"suite {name!r} does not apply to {kind}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > SAMPLED_N[kind]:
        raise UniverseTooLarge(f"{kind} with n={n} exceeds the n<={SAMPLED_N[kind]} guard")
    if n > EXHAUSTIVE_N[kind]:
        if suite.samplable:
            sample = DEFAULT_SAMPLE if sample is None else sample
        elif not suite.small_carrier:
            raise UniverseTooLarge(f"suite {name!r} is exhaustive-only; {kind} n<={EXHAUSTIVE_N[kind]}")
    if not suite.samplable:
        sample = None
    ctx = Context(kind, n, sample, random.Random(seed))
    rep = CheckReport(name, kind, n, mode="sampled" if sample is not None else "exhaustive")
    if sample is not None:
        rep.notes["seed"] = seed
        rep.notes["sample"] = sample
    start = time.perf_counter()
    suite.run(ctx, rep)
    rep.elapsed = time.perf_counter() - start
    return rep


def run_all(kind: str, n: int, sample: Optional[int] = None, seed: int = 0) -> Iterable[CheckReport]:
    for name, suite in SUITES.items():
        if kind in suite.kinds:
            try:
                yield run_suite(name, kind, n, sample, seed)
            except UniverseTooLarge:
                continue
