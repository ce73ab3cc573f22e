import random
import re

import pytest

from hopfcox import hopf_b as hb
from hopfcox.hopf_b import GatheredBlockB as Blk, HopfMonomialB as Mono


def mono(*blocks):
    return Mono([Blk(w, p) for w, p in blocks])


def only(x):
    (m,) = x.terms
    return m


def test_block_invariants():
    b = Blk(4, (1, 1))
    assert b.scale == 1 and b.units == 2 and b.degree == 4 + 1 * 2
    assert str(Blk(2, (0,))) == "u2"
    with pytest.raises(ValueError):
        Blk(3, (0, 1))
    with pytest.raises(ValueError):
        Mono([Blk(1, (1,)), Blk(2, (1,))])


def test_degree_formula():
    # gamma_{k,m} has degree m(2^k - 1)
    assert only(hb.gamma(2, 3)).degree == 9
    assert only(hb.delta(5, 2)).degree == 10


def test_odot_examples():
    assert not hb.odot(hb.delta(1), hb.delta(1))
    x = hb.odot(hb.cup(hb.delta(4), hb.gamma(1, 2)), hb.cup(hb.delta(2), hb.gamma(1, 1)))
    assert x == hb.cup(hb.delta(6), hb.gamma(1, 3))
    assert hb.odot(hb.unit(1), hb.unit(2)) == hb.unit(3)
    assert hb.odot(hb.delta(3), hb.unit(0)) == hb.delta(3)


def test_odot_binomial_rule():
    from math import comb
    for k in (1, 2):
        for n in range(1, 4):
            for m in range(1, 4):
                x = hb.odot(hb.gamma(k, n), hb.gamma(k, m))
                want = hb.gamma(k, n + m) if comb(n + m, n) % 2 else hb.ZERO
                assert x == want


def test_figure_row_two():
    x = hb.odot_all(hb.cup(hb.delta(4), hb.gamma(1, 2)), hb.cup(hb.delta(2), hb.gamma(1, 1)), hb.delta(2))
    assert x == hb.odot(hb.cup(hb.delta(6), hb.gamma(1, 3)), hb.delta(2))


def test_coproduct_examples():
    d = hb.coproduct(hb.cup(hb.delta(4), hb.gamma(1, 2)))
    assert hb.tensor_str(d) == "u0 (x) d4*g1_2 + d2*g1_1 (x) d2*g1_1 + d4*g1_2 (x) u0"
    for n in range(1, 6):
        d = lambda k: only(hb.delta(k)) if k else hb.ONE
        want = {(d(k), d(n - k)) for k in range(n + 1)}
        assert hb.coproduct(hb.delta(n)) == want
    u = lambda n: mono((n, (0,))) if n else hb.ONE
    assert hb.coproduct(hb.unit(2)) == {(u(2), u(0)), (u(1), u(1)), (u(0), u(2))}


def test_cup_examples():
    x = hb.cup(hb.odot(hb.delta(2), hb.unit(2)), hb.odot_all(hb.delta(1), hb.gamma(1, 1), hb.unit(1)))
    assert str(x) == "g1_1 o d1 o d1^2 + d2*g1_1 o u1 o d1"
    assert hb.cup(hb.gamma(1, 1), hb.delta(2)) == hb.cup(hb.delta(2), hb.gamma(1, 1))
    assert str(hb.cup(hb.gamma(1, 1), hb.delta(2))) == "d2*g1_1"
    assert not hb.cup(hb.delta(1), hb.delta(2))
    assert hb.cup(hb.unit(3), hb.odot(hb.delta(1), hb.gamma(1, 1))) == hb.odot(hb.delta(1), hb.gamma(1, 1))


def test_cup_power():
    assert hb.cup_power(hb.delta(2), 0) == hb.unit(2)
    assert str(hb.cup_power(hb.gamma(1, 1), 3)) == "g1_1^3"


def test_basis_examples():
    assert {str(m) for m in hb.basis(2, 2)} == {"d2", "g1_1^2", "u1 o d1^2"}
    assert {str(m) for m in hb.basis(2, 1)} == {"g1_1", "u1 o d1"}
    for d in range(6):
        assert [str(m) for m in hb.basis(1, d)] == ["d1" + (f"^{d}" if d > 1 else "") if d else "u1"]


def test_basis_canonical_and_unique():
    for n in range(1, 6):
        for d in range(7):
            ms = hb.basis(n, d)
            assert len(set(ms)) == len(ms)
            for m in ms:
                assert m.component == n and m.degree == d
                assert Mono(reversed(m.blocks)) == m


def test_poincare_small():
    assert hb.poincare(2, 4) == [1, 2, 3, 4, 5]


def test_render():
    assert "d2" in hb.render(mono((2, (1,))))
    svg = hb.render(mono((2, (1,))), "svg")
    assert svg.count("<rect") == 1 and svg.count("stroke-dasharray") == 1
    svg = hb.render(mono((4, (1, 1))), "svg")
    heights = sorted(float(h) for h in re.findall(r'<rect[^>]*height="([\d.]+)"', svg))
    assert heights == [hb.SVG_UNIT / 2, hb.SVG_UNIT]
    assert hb.render(mono((2, (0,)))).strip("\n") == "_" * 8
    with pytest.raises(ValueError):
        hb.render(mono((2, (1,))), "png")


def test_random_laws():
    rng = random.Random(11)
    for _ in range(60):
        x = hb.random_element(rng, rng.randint(1, 3), rng.randint(0, 4))
        y = hb.random_element(rng, rng.randint(1, 3), rng.randint(0, 4))
        assert hb.coproduct(hb.odot(x, y)) == hb.tensor_odot(hb.coproduct(x), hb.coproduct(y))
        assert hb.odot(x, y) == hb.odot(y, x)


def test_element_arithmetic():
    x = hb.delta(2)
    assert not (x + x)
    assert hb.as_element(mono((2, (1,)))) == x
    with pytest.raises(TypeError):
        hb.as_element(3)
