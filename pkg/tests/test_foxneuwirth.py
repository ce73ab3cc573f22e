import pytest

from hopfcox import foxneuwirth as fn
from hopfcox import hopf_b as hb
from hopfcox.gf2 import BitMatrix, rank


def test_cells():
    assert fn.cells("B", 2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert fn.cells("B", 1, 4) == [(4,)]
    assert sorted(fn.cells("B", 3, 1)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(fn.cells("Dprime", 2, 1)) == 4


def test_coboundary_small():
    for d in range(6):
        assert fn.coboundary("B", 1, d).is_zero()
    assert rank(fn.coboundary("B", 2, 0)) == 0
    assert fn.betti("B", 2, 0) == 1
    assert fn.betti("Dprime", 2, 0) == 1 and fn.betti("Dprime", 2, 1) == 2


def test_coboundary_squares_to_zero():
    for group, ns in (("B", range(1, 5)), ("Dprime", range(2, 5)), ("D", range(2, 5))):
        for n in ns:
            for d in range(6):
                a, b = fn.coboundary(group, n, d), fn.coboundary(group, n, d + 1)
                assert (b * a).is_zero(), (group, n, d)


def test_betti_values():
    assert fn.betti("B", 1, 5) == 1
    assert fn.betti("B", 2, 1) == 2
    assert fn.betti("Dprime", 3, 1) == 1
    with pytest.raises(ValueError):
        fn.betti("B", 2, fn.MAX_DEGREE + 1)


def test_betti_two_complexes_agree():
    for n in range(2, 5):
        for d in range(7):
            assert fn.betti("D", n, d) == fn.betti("Dprime", n, d)


def test_kblocks():
    assert fn.kblocks((3, 2, 3, 1, 2), 1) == [(0, 2), (4, 4)]
    assert fn.principal_kblocks((3, 2, 3, 1, 2), 1) == [(4, 4)]
    assert fn.principal_kblocks((1, 1, 1), 0) == [(0, 2)]
    assert fn.principal_kblocks((0,), 0) == []


def test_coproduct_rules():
    want = {((), (1, 0, 1)), ((1,), (0, 1)), ((1, 0, 1), ())}
    assert fn.delta_printed((1, 0, 1)) == want
    # the geometric rule also sees the split with the origin point on the right
    assert fn.delta_geometric((1, 0, 1)) == want | {((0, 1), (1,))}
    assert fn.delta_chain("B", {(3,)}) == {((), (3,)), ((3,), ())}


def test_coproduct_rules_are_chain_maps():
    for rule in ("printed", "geometric"):
        for n in range(1, 5):
            for d in range(5):
                for c in fn.cells("B", n, d):
                    lhs = fn.delta_chain("B", fn.d_cochain("B", {c}), rule)
                    rhs = fn.d_tensor("B", fn.delta_chain("B", {c}, rule))
                    assert lhs == rhs, (rule, c)


def test_dprime_coproduct_shape():
    # s_0 moves to whichever side carries the origin
    out = fn.delta_chain("Dprime", {(1, (1, 0, 1))})
    assert ((1, ()), (0, (1, 0, 1))) in out and ((0, ()), (1, (1, 0, 1))) in out


def test_transfer_rules():
    assert fn.odot_chain("B", {(1,)}, {(1,)}) == frozenset()
    assert fn.odot_chain("B", {(1,)}, {(1,)}, rule="printed") == frozenset()
    assert fn.odot_chain("B", {(1,)}, {(0,)}, rule="printed") == {(1, 0), (0, 1)}
    # the geometric rule gives the class with s_0 -> 1, s_1 -> 0, which is the
    # transfer of x_1 from B_1 x B_1; [0:1] alone is gamma_{1,1}
    assert fn.odot_chain("B", {(1,)}, {(0,)}) == {(1, 0)}
    out = fn.odot_chain("Dprime", {(1, (1, 1))}, {(1, (0, 1))})
    assert {e for e, _ in out} == {0}


def test_transfer_rules_are_chain_maps():
    for rule in ("printed", "geometric"):
        for a in [(1,), (0,), (2,), (0, 1), (1, 1)]:
            for b in [(1,), (0,), (1, 0)]:
                lhs = fn.odot_chain("B", fn.d_cochain("B", {a}), {b}, rule) ^ \
                    fn.odot_chain("B", {a}, fn.d_cochain("B", {b}), rule)
                assert fn.d_cochain("B", fn.odot_chain("B", {a}, {b}, rule)) == lhs


def test_phi():
    assert fn.phi({(0, 1, 2)}) == {(0, (0, 1, 2))}
    assert fn.phi({(1, 1, 0)}) == {(0, (1, 1, 0)), (1, (1, 1, 0))}
    assert fn.phi({(2, 0)}) == {(1, (0, 2))}


def test_generator_cochains():
    assert fn.generator_cochain("delta", 3) == {(1, 1, 1)}
    assert fn.generator_cochain("gamma", 1, 2) == {(0, 1, 0, 1)}
    assert fn.generator_cochain("g+", 1, 1) == {(0, 1)}
    assert fn.generator_cochain("g-", 1, 1) == {(1, 0)}
    for n in range(1, 5):
        assert fn.is_cocycle("B", fn.generator_cochain("delta", n))
    for k, m in ((1, 1), (1, 2), (2, 1)):
        for name in ("g+", "g-"):
            assert fn.is_cocycle("Dprime", fn.phi(fn.generator_cochain(name, k, m)))


def test_same_class():
    c = fn.d_cochain("B", {(0, 1, 0)})
    assert fn.same_class("B", c, frozenset())
    assert not fn.same_class("B", fn.generator_cochain("delta", 2), frozenset())


def test_triplet_export():
    text = fn.export_triplets("B", 3, 2)
    m = BitMatrix.from_triplets(text)
    assert m == fn.coboundary("B", 3, 2)
    assert text.splitlines()[0] == f"{m.rows} {m.cols}"


def test_betti_matches_basis_small():
    for n in range(1, 4):
        for d in range(6):
            assert fn.betti("B", n, d) == len(hb.basis(n, d))
