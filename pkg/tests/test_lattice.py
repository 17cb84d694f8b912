import itertools
import math

import pytest
from hypothesis import given, strategies as st

from latsort import (
    DivisibilityLattice,
    DomainError,
    EmptySequenceError,
    FiniteLattice,
    IntLattice,
    LatticeOverflowError,
    PowersetLattice,
    ProductLattice,
    check_axioms,
    check_distributive,
    join,
    join_all,
    leq,
    m3,
    meet,
    meet_all,
    n5,
)

from conftest import M3_LEQ, N5_LEQ, table_from_leq

DIV = DivisibilityLattice()
INT = IntLattice()
XYZ = PowersetLattice(("x", "y", "z"))
X, Y, Z = 0b001, 0b010, 0b100


def test_divisibility_meet_join():
    assert meet(DIV, 4, 6) == 2
    assert join(DIV, 4, 6) == 12
    assert leq(DIV, 3, 12)
    assert not leq(DIV, 12, 3)


def test_powerset_meet_join():
    assert meet(XYZ, X, Y) == 0
    assert join(XYZ, X, Y) == X | Y
    assert not leq(XYZ, X, Y)
    assert leq(XYZ, X, X | Z)


def test_lcm_overflow():
    with pytest.raises(LatticeOverflowError):
        join(DIV, 2**63, 3)
    # largest representable lcm is fine
    assert join(DIV, 2**63, 2) == 2**63


def test_domain_errors():
    with pytest.raises(DomainError):
        meet(DIV, 0, 3)
    with pytest.raises(DomainError):
        join(INT, 2**63, 1)
    with pytest.raises(DomainError):
        leq(XYZ, 8, 1)
    with pytest.raises(DomainError):
        meet(INT, True, 1)
    with pytest.raises(DomainError):
        meet(ProductLattice(INT, DIV), (1, 0), (1, 1))


def test_folds():
    assert join_all(DIV, [1, 2, 3]) == 6
    assert meet_all(DIV, [1, 2, 3, 4, 5]) == 1
    assert meet_all(XYZ, [X | Y]) == X | Y
    with pytest.raises(EmptySequenceError):
        meet_all(DIV, [])
    with pytest.raises(EmptySequenceError):
        join_all(INT, iter(()))


@given(st.lists(st.integers(1, 1000), min_size=1, max_size=6), st.randoms(use_true_random=False))
def test_folds_order_independent(items, rnd):
    shuffled = list(items)
    rnd.shuffle(shuffled)
    assert meet_all(DIV, items) == meet_all(DIV, shuffled) == math.gcd(*items)
    assert join_all(DIV, items) == join_all(DIV, shuffled) == math.lcm(*items)


@given(st.integers(-(2**63), 2**63 - 1), st.integers(-(2**63), 2**63 - 1))
def test_total_order_is_min_max(a, b):
    assert meet(INT, a, b) == min(a, b)
    assert join(INT, a, b) == max(a, b)


def _elements(d):
    if isinstance(d, DivisibilityLattice):
        return st.integers(1, 2**20)
    if isinstance(d, IntLattice):
        return st.integers(-(2**63), 2**63 - 1)
    if isinstance(d, PowersetLattice):
        return st.integers(0, d.full)
    if isinstance(d, FiniteLattice):
        return st.integers(0, d.size - 1)
    return st.tuples(_elements(d.left), _elements(d.right))


LATTICES = [INT, DIV, XYZ, PowersetLattice(tuple(f"e{i}" for i in range(64))), m3(), n5(),
            ProductLattice(DIV, XYZ), ProductLattice(m3(), INT)]


@pytest.mark.parametrize("d", LATTICES, ids=str)
@given(data=st.data())
def test_lattice_laws(d, data):
    a, b, c = (data.draw(_elements(d)) for _ in range(3))
    if isinstance(d, DivisibilityLattice):
        a, b, c = a % 4096 + 1, b % 4096 + 1, c % 4096 + 1
    assert meet(d, a, b) == meet(d, b, a)
    assert join(d, a, b) == join(d, b, a)
    assert meet(d, meet(d, a, b), c) == meet(d, a, meet(d, b, c))
    assert join(d, join(d, a, b), c) == join(d, a, join(d, b, c))
    assert meet(d, a, a) == a == join(d, a, a)
    assert join(d, a, meet(d, a, b)) == a
    assert meet(d, a, join(d, a, b)) == a
    assert (meet(d, a, b) == a) == (join(d, a, b) == b)
    assert leq(d, a, a)
    if leq(d, a, b) and leq(d, b, a):
        assert a == b
    if leq(d, a, b) and leq(d, b, c):
        assert leq(d, a, c)


def test_m3_tables_match_hand_oracle():
    meet_t, join_t = table_from_leq(M3_LEQ)
    assert [list(r) for r in m3().meet_table] == meet_t
    assert [list(r) for r in m3().join_table] == join_t
    meet_t, join_t = table_from_leq(N5_LEQ)
    assert [list(r) for r in n5().meet_table] == meet_t
    assert [list(r) for r in n5().join_table] == join_t


def _brute_axioms(meet_t, join_t):
    n = len(meet_t)
    r = range(n)
    return all(
        meet_t[x][y] == meet_t[y][x]
        and join_t[x][y] == join_t[y][x]
        and meet_t[meet_t[x][y]][z] == meet_t[x][meet_t[y][z]]
        and join_t[join_t[x][y]][z] == join_t[x][join_t[y][z]]
        and meet_t[x][x] == x == join_t[x][x]
        and join_t[x][meet_t[x][y]] == x
        and meet_t[x][join_t[x][y]] == x
        for x, y, z in itertools.product(r, r, r)
    )


def test_check_axioms_m3_pass():
    meet_t, join_t = table_from_leq(M3_LEQ)
    assert _brute_axioms(meet_t, join_t)
    report = check_axioms(m3(), range(5))
    assert report.passed
    assert report.checked == 5 + 25 + 125


def test_check_axioms_corrupted_table_fails():
    meet_t, join_t = table_from_leq(M3_LEQ)
    meet_t[1][2] = 1  # a & b = a but b & a = bot
    assert not _brute_axioms(meet_t, join_t)
    broken = FiniteLattice(meet_t, join_t, validate=False)
    report = check_axioms(broken, range(5))
    assert not report.passed
    assert report.law == "meet commutativity"
    assert set(report.witness) == {1, 2}


def test_check_axioms_divisibility():
    sample = list(range(1, 21))
    assert all(
        math.gcd(x, math.lcm(x, y)) == x and math.lcm(x, math.gcd(x, y)) == x
        for x, y in itertools.product(sample, sample)
    )
    assert check_axioms(DIV, sample).passed


def _brute_distributive(meet_t, join_t):
    r = range(len(meet_t))
    for x, y, z in itertools.product(r, r, r):
        if meet_t[x][join_t[y][z]] != join_t[meet_t[x][y]][meet_t[x][z]]:
            return (x, y, z)
    return None


def test_check_distributive():
    assert check_distributive(XYZ, range(8)).passed
    assert check_distributive(DIV, range(1, 31)).passed
    witness = _brute_distributive(*table_from_leq(M3_LEQ))
    assert witness is not None
    report = check_distributive(m3(), range(5))
    assert not report.passed
    assert report.witness == witness
    x, y, z = report.witness
    d = m3()
    assert meet(d, x, join(d, y, z)) != join(d, meet(d, x, y), meet(d, x, z))
    assert "distributivity violated" in report.describe(d)


def test_large_sample_is_subsampled_deterministically():
    sample = list(range(1, 101))
    r1 = check_axioms(DIV, sample)
    r2 = check_axioms(DIV, sample)
    assert r1.passed and r1 == r2
    assert check_distributive(DIV, sample).checked == 4096


def test_empty_sample_rejected():
    with pytest.raises(EmptySequenceError):
        check_axioms(DIV, [])


def test_is_chain():
    assert INT.is_chain
    assert not DIV.is_chain
    assert PowersetLattice(("x",)).is_chain
    assert not XYZ.is_chain
    assert not m3().is_chain
