"""Tests for n-valued Lukasiewicz logic."""

from fractions import Fraction
from itertools import product

import pytest

from src.errors import DomainError
from src.logic import (
    Connective,
    LogicValueSet,
    MvlValue,
    mvl_and,
    mvl_equiv,
    mvl_implies,
    mvl_not,
    mvl_or,
    truth_table,
)

BOOLEAN = {
    Connective.AND: lambda a, b: a and b,
    Connective.OR: lambda a, b: a or b,
    Connective.IMPLIES: lambda a, b: (not a) or b,
    Connective.EQUIV: lambda a, b: a == b,
}


def test_value_set():
    v3 = LogicValueSet(3)
    assert [str(v) for v in v3.values()] == ["0", "1/2", "1"]
    assert v3.false == MvlValue(0, 3)
    assert v3.true.fraction == Fraction(1)
    assert v3.value_of(0.5) == MvlValue(1, 3)
    assert v3.contains(1.0)
    assert not v3.contains(0.3)
    with pytest.raises(DomainError):
        v3.value_of(0.3)
    with pytest.raises(DomainError):
        LogicValueSet(1)


def test_value_validation():
    with pytest.raises(DomainError):
        MvlValue(3, 3)
    with pytest.raises(DomainError):
        MvlValue(0, 1)


def test_three_valued_examples():
    half = MvlValue(1, 3)
    assert mvl_not(half) == half
    assert mvl_implies(half, MvlValue(0, 3)) == half
    assert mvl_implies(half, half) == MvlValue(2, 3)
    assert mvl_or(half, mvl_not(half)) == half
    assert mvl_equiv(MvlValue(0, 3), MvlValue(2, 3)) == MvlValue(0, 3)


def test_arity_mismatch():
    with pytest.raises(DomainError):
        mvl_and(MvlValue(0, 2), MvlValue(0, 3))


@pytest.mark.parametrize("connective", list(BOOLEAN))
def test_two_valued_tables_are_boolean(connective):
    table = truth_table(connective, 2)
    for a, b in product([False, True], repeat=2):
        entry = table.lookup(MvlValue(int(a), 2), MvlValue(int(b), 2))
        assert entry.k == int(BOOLEAN[connective](a, b))


def test_two_valued_negation_is_boolean():
    table = truth_table(Connective.NOT, 2)
    assert [row[0].k for row in table.rows] == [1, 0]


@pytest.mark.parametrize("n", range(2, 8))
def test_de_morgan_holds_exhaustively(n):
    values = LogicValueSet(n).values()
    for a, b in product(values, repeat=2):
        assert mvl_not(mvl_and(a, b)) == mvl_or(mvl_not(a), mvl_not(b))
        assert mvl_not(mvl_or(a, b)) == mvl_and(mvl_not(a), mvl_not(b))


@pytest.mark.parametrize("n", range(2, 13))
def test_connectives_are_closed(n):
    values = set(LogicValueSet(n).values())
    for connective in Connective:
        table = truth_table(connective, n)
        assert set(table.entries) <= values


@pytest.mark.parametrize("n", range(2, 8))
def test_implication_matches_formula(n):
    values = LogicValueSet(n).values()
    for a, b in product(values, repeat=2):
        expected = min(Fraction(1), 1 - a.fraction + b.fraction)
        assert mvl_implies(a, b).fraction == expected
        assert mvl_equiv(a, b) == mvl_and(mvl_implies(a, b), mvl_implies(b, a))


def test_excluded_middle_fails_above_two_values():
    half = MvlValue(1, 3)
    assert mvl_or(half, mvl_not(half)) != LogicValueSet(3).true


def test_truth_table_dict():
    data = truth_table(Connective.NOT, 3).to_dict()
    assert data == {
        "op": "not",
        "n": 3,
        "values": ["0", "1/2", "1"],
        "table": [["1"], ["1/2"], ["0"]],
    }
    assert truth_table(Connective.AND, 3).lookup(MvlValue(2, 3), MvlValue(1, 3)) == MvlValue(1, 3)
