from itertools import product

import pytest

from natorder import partitions as pt
from natorder import relations as rel
from natorder.universe import enumerate_universe


def R(text: str) -> rel.Relation:
    """Shorthand: ``"10/01"`` is the identity on two points."""
    rows = text.split("/")
    return rel.Relation.from_matrix([[int(c) for c in r] for r in rows])


def P(text: str, n: int | None = None) -> pt.Partition:
    return pt.parse_partition(text, n)


# Pair-set reference semantics, independent of the packed-bit kernels.

def pairs(a: rel.Relation) -> frozenset:
    return frozenset(a.pairs())


def set_compose(a: frozenset, b: frozenset) -> frozenset:
    return frozenset((x, z) for (x, y) in a for (y2, z) in b if y == y2)


def set_converse(a: frozenset) -> frozenset:
    return frozenset((y, x) for x, y in a)


def set_universe(n: int) -> frozenset:
    return frozenset(product(range(1, n + 1), repeat=2))


@pytest.fixture(scope="session")
def B1():
    return enumerate_universe("relations", 1)


@pytest.fixture(scope="session")
def B2():
    return enumerate_universe("relations", 2)


@pytest.fixture(scope="session")
def B3():
    return enumerate_universe("relations", 3)


@pytest.fixture(scope="session")
def P2():
    return enumerate_universe("partitions", 2)


@pytest.fixture(scope="session")
def P3():
    return enumerate_universe("partitions", 3)
