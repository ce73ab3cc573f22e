import random

import pytest

from hopfcox.gf2 import (BitMatrix, ColumnSpace, Gf2Poly, NoSolution, binom2, kernel_basis,
                         nullity, pack, rank, solve, sq_component, total_steenrod, unpack)


def test_rank_examples():
    assert rank(BitMatrix(3, 3, [(i, i) for i in range(3)])) == 3
    assert rank(BitMatrix(4, 7)) == 0
    assert rank(BitMatrix.from_dense([[1, 0], [1, 0]])) == 1


def test_rank_nullity_on_random_matrices():
    rng = random.Random(5)
    for _ in range(50):
        r, c = rng.randint(1, 12), rng.randint(1, 12)
        m = BitMatrix(r, c, [(i, j) for i in range(r) for j in range(c) if rng.random() < 0.4])
        assert rank(m) == rank(m.transpose())
        ker = kernel_basis(m)
        assert len(ker) == nullity(m)
        for v in ker:
            assert not any(m.apply(v))


def test_solve():
    eye = BitMatrix(3, 3, [(i, i) for i in range(3)])
    assert solve(eye, [1, 0, 0]) == [1, 0, 0]
    with pytest.raises(NoSolution):
        solve(BitMatrix(2, 2), [1, 0])
    m = BitMatrix.from_dense([[1, 1], [0, 1]])
    # rows as written: x1 + x2 = 1, x2 = 0
    assert solve(m, [1, 0]) == [1, 0]
    # the same lists read as columns
    assert solve(m.transpose(), [1, 0]) == [1, 1]


def test_column_space_combination():
    cs = ColumnSpace([0b011, 0b110])
    combo = cs.solve(0b101)
    assert combo == 0b11
    assert not cs.contains(0b001)


def test_pack_roundtrip():
    bits = [1, 0, 1, 1, 0]
    assert unpack(pack(bits), 5) == bits


def test_triplets_roundtrip():
    m = BitMatrix(3, 4, [(0, 1), (2, 3), (1, 0)])
    assert BitMatrix.from_triplets(m.to_triplets()) == m
    assert m.to_triplets().splitlines()[0] == "3 4"


V = ("x", "y", "u")


def p(name):
    return Gf2Poly.var(V, name)


def test_poly_products():
    x, y, u = p("x"), p("y"), p("u")
    assert x * x == x ** 2
    assert (x + y) * (x + y) == x ** 2 + y ** 2
    assert x * (x + u) * Gf2Poly.one(V) == x ** 2 + x * u


def test_poly_universe_mismatch():
    with pytest.raises(ValueError):
        Gf2Poly.var(("x",), "x") + Gf2Poly.var(("y",), "y")


def test_total_steenrod():
    x, y = p("x"), p("y")
    assert total_steenrod(x) == x + x ** 2
    assert total_steenrod(x * y) == x * y + x ** 2 * y + x * y ** 2 + x ** 2 * y ** 2
    assert total_steenrod(Gf2Poly.one(V)) == Gf2Poly.one(V)


def test_sq_cartan_and_unstable():
    rng = random.Random(3)
    for _ in range(30):
        a = sum((p(rng.choice(V)) ** rng.randint(1, 3) for _ in range(3)), Gf2Poly.zero(V))
        b = sum((p(rng.choice(V)) ** rng.randint(1, 3) for _ in range(3)), Gf2Poly.zero(V))
        assert total_steenrod(a * b) == total_steenrod(a) * total_steenrod(b)
    x, y = p("x"), p("y")
    assert sq_component(x * y, 2) == (x * y) ** 2
    assert not sq_component(x * y, 3)


def test_binom2_lucas():
    from math import comb
    for n in range(20):
        for k in range(-1, 22):
            want = comb(n, k) % 2 if 0 <= k <= n else 0
            assert binom2(n, k) == want
