"""Exit criteria.  Each test prints one ``ACCEPTANCE`` line with its verdict.

Run alone with ``pytest tests/test_acceptance.py -s`` to see timings.
"""

import random
import time

import pytest

from natorder import lattice as lab
from natorder import relation_orders as ro
from natorder import relations as rel
from natorder.suites import run_suite
from natorder.universe import enumerate_universe


@pytest.fixture
def verdict(capsys):
    def emit(criterion: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")

    return emit


def _timed(name, kind, n, **kw):
    start = time.perf_counter()
    rep = run_suite(name, kind, n, **kw)
    return rep, time.perf_counter() - start


def test_c1_equational_criterion_matches_definition(verdict):
    small, t_small = _timed("thm-equational-criterion", "relations", 2)
    big, t_big = _timed("thm-equational-criterion", "relations", 3, sample=10_000, seed=0)
    ok = (
        small.passed
        and small.examined["pairs"] == 256
        and t_small < 1.0
        and big.passed
        and big.examined["pairs"] >= 10_000
        and t_big < 30.0
    )
    verdict(
        "1 criterion == definition",
        ok,
        f"B_2 {small.examined['pairs']} pairs {len(small.failures)} diffs {t_small:.2f}s (<1s); "
        f"B_3 {big.examined['pairs']} pairs {len(big.failures)} diffs {t_big:.2f}s (<30s)",
    )
    assert ok


def test_c2_mitsch_is_partial_order(verdict):
    b2, _ = _timed("mitsch-partial-order", "relations", 2)
    p2, _ = _timed("mitsch-partial-order", "partitions", 2)
    p3, t3 = _timed("mitsch-partial-order", "partitions", 3)
    ok = (
        b2.passed
        and b2.examined["triples"] == 4096
        and p2.passed
        and p2.examined["triples"] == 15**3
        and p3.passed
        and p3.examined["pairs"] == 203**2
        and t3 < 300.0
    )
    verdict(
        "2 partial order",
        ok,
        f"B_2 {b2.examined['triples']} triples, P_2 {p2.examined['triples']} triples, "
        f"P_3 {p3.examined['pairs']} pairs via oracle in {t3:.2f}s (<300s)",
    )
    assert ok


def test_c3_residuation(verdict):
    rep, t = _timed("residuation", "relations", 2)
    ok = rep.passed and rep.examined["triples"] == 16**3 and t < 5.0
    verdict("3 residuation", ok, f"{rep.examined['triples']} triples, {len(rep.failures)} failures, {t:.2f}s (<5s)")
    assert ok


def test_c4_inclusion_connexions(verdict):
    reps = [run_suite(name, "relations", 2) for name in ("subsemigroup-ix", "prop-f-alpha", "prop-meet-witness")]
    ok = all(r.passed for r in reps)
    verdict("4 partial injections / F(alpha) / meet witnesses", ok, "; ".join(r.summary() for r in reps))
    assert ok


def test_c5_composites_on_relations(verdict):
    crit = run_suite("prop-incl-then-le", "relations", 2)
    joins = run_suite("join-closure", "relations", 2)
    wit = run_suite("witnesses", "relations", 2)
    atoms = run_suite("atoms", "relations", 2)
    ok = (
        crit.passed
        and joins.passed
        and joins.notes["rincl_then_mitsch_universal"]
        and wit.passed
        and wit.notes["incl_permutation_witness"] is not None
        and wit.notes["iota_omega_separates"]
        and atoms.passed
    )
    verdict(
        "5 composites on B_2",
        ok,
        f"criterion {crit.examined['pairs']} pairs; ⊇∘≤ universal={joins.notes['rincl_then_mitsch_universal']}; "
        f"permutation witness {wit.notes['incl_permutation_witness']}; "
        f"(ι, ω) separates={wit.notes['iota_omega_separates']}; "
        f"Mitsch atoms {atoms.notes['mitsch_atoms']}; interval claim holds={atoms.notes['interval_claim_holds']}",
    )
    assert ok


def test_c6_partition_laws(verdict):
    start = time.perf_counter()
    reps = [
        run_suite(name, "partitions", n)
        for n in (2, 3)
        for name in ("associativity", "lemma-compat", "lemma-dk", "cor-idempotents", "star-laws")
    ]
    t_laws = time.perf_counter() - start
    composites = [run_suite(name, "partitions", n) for n in (2, 3) for name in ("prop-pda", "prop-pka")]
    ok = (
        all(r.passed for r in reps + composites)
        and t_laws < 120.0
        and all(r.examined["pairs"] >= (225 if r.n == 2 else 1000) for r in composites)
    )
    verdict(
        "6 partition laws",
        ok,
        f"{len(reps)} law sweeps on P_2, P_3 in {t_laws:.2f}s (<120s); composite criteria: "
        + ", ".join(f"{r.suite} P_{r.n} {r.examined['pairs']} pairs" for r in composites),
    )
    assert ok


def test_c7_canonical_subsemigroups(verdict):
    rep = run_suite("canonical-subsemigroups", "partitions", 2)
    verdict("7 canonical subsemigroups", rep.passed, rep.summary())
    assert rep.passed


@pytest.mark.parametrize("kind", ["relations", "partitions"])
def test_c8_lattice_reconstruction(verdict, kind):
    rep = run_suite("lattice", kind, 2)
    u = enumerate_universe(kind, 2)
    gens = [lab.materialise(u, x) for x in ("mitsch", "incl", "rincl")]
    lat = lab.generate_sublattice(u, gens)
    named_orders = {name for name in lab.NAMES if lat.orders[name]}
    expected = {"eq", "mitsch", "incl", "rincl", "mitsch_and_incl", "mitsch_and_rincl"}
    dot_stable = lab.to_dot(lat) == lab.to_dot(lab.generate_sublattice(u, gens))
    extra = {p.name: lat.orders[p.name] for p in lat.nodes if p.name not in lab.NAMES}
    ok = rep.passed and named_orders == expected and dot_stable
    verdict(
        f"8 lattice on {kind} n=2",
        ok,
        f"{len(lat.nodes)} nodes, {len(lat.edges)} edges, named orders {sorted(named_orders)}, "
        f"extra nodes {extra or 'none'}, coincident names {lat.aliases or 'none'}, deterministic DOT={dot_stable}",
    )
    assert ok


def test_c9_performance_b64(verdict):
    rng = random.Random(64)
    n = 64

    def random_relation(p):
        return rel.Relation(n, tuple(sum(1 << j for j in range(n) if rng.random() < p) for _ in range(n)))

    cases = [(random_relation(p), random_relation(p)) for p in (0.01, 0.05, 0.3, 0.7, 0.95) for _ in range(4)]
    b = random_relation(0.5)
    cases.append((rel.compose(rel.compose(b, rel.universal(n)), b), b))  # a true instance
    cases.append((rel.empty(n), b))
    worst = 0.0
    for a, b in cases:
        start = time.perf_counter()
        ro.mitsch_le(a, b)
        worst = max(worst, time.perf_counter() - start)
    assert ro.mitsch_le(*cases[-2])
    ok = worst < 0.010
    verdict("9 performance", ok, f"worst mitsch_le on B_64 over {len(cases)} pairs: {worst * 1000:.2f} ms (<10 ms)")
    assert ok


def test_supplementary_sweeps(verdict):
    reps = [
        run_suite("fast-vs-oracle", "partitions", 2),
        run_suite("fast-vs-oracle", "partitions", 3),
        run_suite("trivial-conjunction", "partitions", 2),
        run_suite("trivial-conjunction", "relations", 2),
        run_suite("join-closure", "partitions", 2),
        run_suite("mitsch-partial-order", "relations", 3, sample=10_000, seed=0),
    ]
    ok = all(r.passed for r in reps)
    verdict("supplementary invariants", ok, "; ".join(r.summary() for r in reps))
    assert ok
