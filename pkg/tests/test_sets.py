import pytest

from matadj import ElementSet, InputError


def test_out_of_range_rejected():
    with pytest.raises(InputError):
        ElementSet.of([3], 3)
    with pytest.raises(InputError):
        ElementSet.of([-1], 3)


def test_extensional_equality():
    assert ElementSet.of([0, 1], 3) == ElementSet.of([1, 0], 3)
    assert ElementSet.of([0], 3) != ElementSet.of([0], 4)


def test_universe_mismatch_rejected():
    with pytest.raises(InputError):
        ElementSet.of([0], 3) | ElementSet.of([0], 4)


def test_algebra_and_order():
    a = ElementSet.of([0, 1], 4)
    b = ElementSet.of([1, 2], 4)
    assert (a | b).sorted() == [0, 1, 2]
    assert (a & b).sorted() == [1]
    assert (a - b).sorted() == [0]
    assert a <= a | b
    assert not a <= b
    assert a.complement().sorted() == [2, 3]
    assert a.key == (0, 1)


def test_relabel():
    a = ElementSet.of([1, 3], 4)
    assert a.relabel({1: 0, 3: 1}, 2) == ElementSet.of([0, 1], 2)
    with pytest.raises(InputError):
        a.relabel({1: 0}, 2)
