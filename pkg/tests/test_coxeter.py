import pytest

from hopfcox import coxeter as cx
from hopfcox.coxeter import NOT_SIMPLE, SignedPerm


def test_group_orders():
    assert len(cx.elements("B", 3)) == 48
    assert len(cx.elements("D", 3)) == 24
    assert len(cx.elements("D", 4)) == 192
    assert all(w.in_D() for w in cx.elements("D", 4))


def test_length():
    s = cx.generators("B", 2)
    assert cx.length(SignedPerm.identity(2)) == 0
    assert cx.length(s[1]) == 1
    assert cx.length(cx.longest_element("B", 2)) == 4
    # the longest element of B_n is -1 with length n^2
    assert cx.longest_element("B", 3).images == (-1, -2, -3)
    assert cx.length(cx.longest_element("B", 3)) == 9


def test_length_rejects_odd_in_D():
    with pytest.raises(ValueError):
        cx.length(cx.generators("B", 2)[0], "D")


def test_parabolic():
    assert cx.parabolic(set(), "B", 3) == {SignedPerm.identity(3)}
    assert len(cx.parabolic({0, 1}, "B", 2)) == 8
    assert len(cx.parabolic({1}, "B", 3)) == 2
    with pytest.raises(OverflowError):
        cx.parabolic({0, 1, 2}, "B", 3, cap=10)


def test_min_coset_reps():
    assert cx.min_coset_reps({0, 1}, {0, 1}, "B", 2) == (SignedPerm.identity(2),)
    reps = cx.min_coset_reps({0, 1}, {1}, "B", 2)
    assert len(reps) == 4
    assert len(cx.min_coset_reps({0, 1}, set(), "B", 2)) == 8
    # each rep is the shortest element of its coset
    sub = cx.parabolic({1}, "B", 2)
    for w in reps:
        assert all(cx.length(w) <= cx.length(w * v) for v in sub)


def test_conjugate_genset():
    t = cx.generators("D", 4)
    s0 = cx.generators("B", 4)[0]
    assert cx.conjugate_genset(SignedPerm.identity(3), {0, 2}) == frozenset({0, 2})
    assert cx.conjugate_genset(s0, {0}, "D") == frozenset({1})
    assert cx.conjugate_genset(s0, {2, 3}, "D") == frozenset({2, 3})
    assert cx.conjugate_genset(cx.generators("B", 3)[1], {0}) is NOT_SIMPLE
    assert t[0] * t[0] == SignedPerm.identity(4)


def test_signed_perm_validation():
    with pytest.raises(ValueError):
        SignedPerm([1, 1])
    w = SignedPerm([-2, 1, 3])
    assert w * w.inverse() == SignedPerm.identity(3)
