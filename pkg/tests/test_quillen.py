import pytest

from hopfcox import hopf_b as hb
from hopfcox import hopf_d as hd
from hopfcox import quillen as q
from hopfcox.gf2 import Gf2Poly, NoSolution
from hopfcox.quillen import Partition2, SiteD


def P(var, name):
    return Gf2Poly.var(var, name)


def test_partitions():
    assert list(q.partitions2(4)) == [Partition2(p) for p in ((4,), (2, 2), (2, 1, 1), (1, 1, 1, 1))]
    assert Partition2((1, 4, 2)).label() == "(4,2,1)"
    with pytest.raises(ValueError):
        Partition2((3,))


def test_sites_d_exclude_two_ones():
    labels = [s.label() for s in q.sites_d(4)]
    assert labels == ["D:(4)", "D:(4):s0", "D:(2,2)", "D:(1,1,1,1)"]
    with pytest.raises(ValueError):
        SiteD((2, 1, 1))
    with pytest.raises(ValueError):
        SiteD((2, 2), "s0")


def test_parse_site():
    assert q.parse_site("B:(4,2,1)") == Partition2((4, 2, 1))
    assert q.parse_site("D:(4,4):s0") == SiteD((4, 4), "s0")
    with pytest.raises(ValueError):
        q.parse_site("C:(1)")


def test_dickson():
    var = q.part_variables(2)
    u1, u2 = P(var, "u1"), P(var, "u2")
    assert q.dickson(1, 0) == P(q.part_variables(1), "u1")
    assert q.dickson(2, 1) == u1 ** 2 + u1 * u2 + u2 ** 2
    assert q.dickson(2, 0) == u1 ** 2 * u2 + u1 * u2 ** 2


def test_dickson_invariance():
    for k in (2, 3):
        var = q.part_variables(k)
        us = [P(var, f"u{j}") for j in range(1, k + 1)]
        x = P(var, "x")
        swap = [x, us[1], us[0]] + us[2:]
        shear = [x, us[0] + us[1]] + us[1:]
        for j in range(k):
            d = q.dickson(k, j)
            assert d.substitute(swap) == d and d.substitute(shear) == d
        f = q.f_class(k)
        assert f.substitute(swap) == f and f.substitute(shear) == f


def test_f_class():
    assert q.f_class(0) == P(("x",), "x")
    var = q.part_variables(1)
    x, u = P(var, "x"), P(var, "u1")
    assert q.f_class(1) == x * (x + u)


def test_h_class():
    var = q.h_variables(1)
    # h_1 = x + y; the restriction of gamma^+_{1,1} to (2)
    assert q.h_class(1) == P(var, "x1") + P(var, "u1_1")


def test_restrict_b_examples():
    assert str(q.restrict_b(hb.gamma(1, 1), (2,))) == "u1_1"
    assert not q.restrict_b(hb.gamma(1, 1), (1, 1))
    assert str(q.restrict_b(hb.delta(2), (2,))) == "x1^2 + x1*u1_1"
    assert str(q.restrict_b(hb.odot(hb.delta(1), hb.unit(1)), (1, 1))) == "x1 + x2"


def test_symmetrization():
    for n in range(1, 7):
        for d in range(7):
            for m in hb.basis(n, d):
                assert q.symmetrized_restriction(m) == q.restrict_b(m, q.pi_of(m)), m


def test_restrict_d_examples():
    s2 = SiteD((2,))
    assert q.restrict_d(hd.gamma_pm(1, 1), s2) == q.h_class(1)
    var = q.site_variables((2,))
    assert q.restrict_d(hd.gamma_pm(1, 1, hd.MINUS), s2) == P(var, "u1_1") + q.h_class(1)
    assert q.restrict_d(hd.gamma_pm(2, 1), SiteD((4,))) == q.restrict_b(hb.gamma(2, 1), (4,))
    assert not q.restrict_d(hd.gamma_pm(2, 1), SiteD((4,), "s0"))
    # signed classes vanish where a part 1 appears
    for t in hd.basis_d(4, 3):
        if t.is_signed():
            assert not q.restrict_d(hd.as_element_d(t), SiteD((1, 1, 1, 1)))


def test_rho_split_sitewise():
    # rho(x) restricts to the sum of the + and - restrictions
    for n in range(2, 6):
        for d in range(5):
            for m in hb.basis(n, d):
                if hd.classify(m) != "signed":
                    continue
                for s in q.sites_d(n):
                    if s.twist != "plain":
                        continue
                    a = q.restrict_d(hd.signed(m, hd.PLUS), s)
                    b = q.restrict_d(hd.signed(m, hd.MINUS), s)
                    if 1 not in s.pi:
                        assert a + b == q.restrict_b(m, s.pi)


def test_sign_split():
    pi = Partition2((2,))
    var = q.site_variables(pi)
    x, y = P(var, "x1"), P(var, "u1_1")
    z, w = x + y, x
    pos, neg = q.sign_split(pi, z * z * w)
    assert pos == z * z * w and not neg
    pos, neg = q.sign_split(pi, z * w * w)
    assert neg == z * w * w and not pos
    with pytest.raises(ArithmeticError):
        q.sign_split(pi, z * w)
    assert q.monomial_sign(2, 1) == 1 and q.monomial_sign(1, 2) == -1 and q.monomial_sign(1, 1) == 0


def test_solve_b():
    fam = q.quillen_map_b(hb.gamma(1, 1))
    assert q.quillen_solve_b(fam, 2, 1) == hb.gamma(1, 1)
    x = hb.odot(hb.delta(1), hb.unit(1)) + hb.gamma(1, 1)
    assert q.quillen_solve_b(q.quillen_map_b(x), 2, 1) == x
    bad = dict(fam)
    bad[Partition2((1, 1))] = P(q.site_variables((1, 1)), "x1")
    with pytest.raises(NoSolution):
        q.quillen_solve_b(bad, 2, 1)


def test_solve_d_roundtrip():
    for n in range(2, 5):
        for d in range(5):
            for t in hd.basis_d(n, d):
                x = hd.as_element_d(t)
                assert q.quillen_solve_d(q.quillen_map_d(x), n, d) == x


def test_injective():
    for n in range(1, 5):
        for d in range(6):
            r, c = q.restriction_rank_b(n, d)
            assert r == c
    for n in range(2, 5):
        for d in range(6):
            r, c = q.restriction_rank_d(n, d)
            assert r == c


def test_cup_via_quillen():
    for a in hb.basis(3, 2):
        for b in hb.basis(3, 1):
            assert q.cup_b_quillen(a, b, 3, 3) == hb.cup(a, b)


def test_family_json():
    out = q.family_to_json(q.quillen_map_b(hb.delta(2)))
    assert out == {"B:(2)": "x1^2 + x1*u1_1", "B:(1,1)": "x1*x2"}
    out = q.family_to_json(q.quillen_map_d(hd.gamma_pm(2, 1)))
    assert set(out) == {"D:(4)", "D:(4):s0", "D:(2,2)", "D:(1,1,1,1)"}


def test_intersection_table():
    # h_2 and d_1 x d_1 agree on A_(4) meet A_(2,2)
    var = q.h_variables(2)
    d1d1 = P(var, "u1_1") * P(var, "u2_1")
    assert q.restrict_to_intersection(q.h_class(2), (2, 2)) == q.restrict_to_intersection(d1d1, (2, 2))
    assert str(q.restrict_to_intersection(d1d1, (2, 2))) == "U^2"


def test_families_agree_on_intersection():
    for d in range(8):
        for m in hb.basis(4, d):
            a = q.restrict_to_intersection(q.restrict_b(m, (4,)), (4,))
            b = q.restrict_to_intersection(q.restrict_b(m, (2, 2)), (2, 2))
            assert a == b, m


def test_positive_part_of_squares_of_h():
    # squares of positive classes stay positive sitewise
    from hopfcox.gf2 import sq_component
    for m in (1, 2):
        pi = Partition2((2,) * m)
        h = q.h_class(m).embed(q.site_variables(pi))
        for i in range(h.degree() + 1):
            s = sq_component(h, i)
            pos, neg = q.sign_split(pi, s)
            assert pos == s and not neg
