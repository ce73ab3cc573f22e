"""Steenrod squares on A_B and A'_D.

The squares are computed by restricting to every elementary abelian site,
applying the total square there and solving back. The closed-form
descriptions by height, effective scale and full width are implemented
as enumerators so that they can be compared against the pullback.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import hopf_b as hb
from . import hopf_d as hd
from . import quillen as q
from .gf2 import sq_component


def _component_degree(terms):
    cd = {(t.component, t.degree) for t in terms}
    if len(cd) != 1:
        raise ValueError("sq needs a homogeneous element")
    return cd.pop()


@lru_cache(maxsize=None)
def _sq_mono_b(i, m):
    if i == 0:
        return frozenset({m})
    if i > m.degree or m.component == 0:
        return frozenset()
    fam = {s: sq_component(p, i) for s, p in q.quillen_map_b(m).items()}
    return q.quillen_solve_b(fam, m.component, m.degree + i).terms


@lru_cache(maxsize=None)
def _sq_charged(i, t):
    if i == 0:
        return frozenset({t})
    if i > t.degree or t.component == 0:
        return frozenset()
    fam = {s: sq_component(p, i) for s, p in q.quillen_map_d(hd.ElementD._raw({t})).items()}
    return q.quillen_solve_d(fam, t.component, t.degree + i).terms


def sq(i, x):
    """Sq^i of an element of A_B or A'_D."""
    if i < 0:
        raise ValueError("Sq^i needs i >= 0")
    if isinstance(x, (hd.ElementD, hd.ChargedMonomial)):
        out = set()
        for t in hd.as_element_d(x).terms:
            out ^= _sq_charged(i, t)
        return hd.ElementD._raw(out)
    out = set()
    for m in hb.as_element(x).terms:
        out ^= _sq_mono_b(i, m)
    return hb.ElementB._raw(out)


def total_sq(x):
    """Sq = Sq^0 + Sq^1 + ... as a list indexed by i."""
    terms = x.terms if hasattr(x, "terms") else {x}
    if not terms:
        return []
    _, d = _component_degree(terms)
    return [sq(i, x) for i in range(d + 1)]


# ---------------------------------------------------------------- statistics

@lru_cache(maxsize=None)
def block_effective_scale(b):
    """Least l with 2^l | width and a nonzero restriction to B_{2^l}^{width/2^l}.

    Restriction to the Young subgroup is the iterated coproduct, so this is
    the least l for which the block splits into pieces of width 2^l.
    """
    l = 0
    while (1 << l) <= b.width:
        if b.width % (1 << l) == 0 and (1 << l) % (1 << b.scale) == 0:
            return l
        l += 1
    return None


@dataclass(frozen=True)
class MonomialStats:
    height: int
    effective_scale: int
    full_width: bool

    @classmethod
    def of(cls, m):
        if isinstance(m, hd.ChargedMonomial):
            m = m.base
        scales = [block_effective_scale(b) for b in m.blocks if not b.is_unit()]
        return cls(m.height, min(scales, default=0), m.is_full_width())


def _no_delta(m):
    return all(b.profile[0] == 0 for b in m.blocks)


def _every_block_delta(m):
    return all(b.profile[0] > 0 for b in m.blocks)


def closed_form_sq_gamma(k, n, i, min_scale=None):
    """Full-width monomials of height <= 2, effective scale >= k, no delta."""
    if min_scale is None:
        min_scale = k
    comp, deg = n << k, n * ((1 << k) - 1) + i
    out = []
    for m in hb.basis(comp, deg):
        st = MonomialStats.of(m)
        if st.full_width and st.height <= 2 and st.effective_scale >= min_scale and _no_delta(m):
            out.append(m)
    return hb.ElementB(out)


def closed_form_sq_delta(n, i, min_scale=1):
    """Full-width monomials of height <= 2, effective scale >= min_scale,
    with a delta in every block."""
    out = []
    for m in hb.basis(n, n + i):
        st = MonomialStats.of(m)
        if st.full_width and st.height <= 2 and st.effective_scale >= min_scale and _every_block_delta(m):
            out.append(m)
    return hb.ElementB(out)


def sq_d_closed(k, n, i, sign=hd.PLUS, min_scale=None):
    """The D-side enumerator: the same filter on B^+ (or B^-)."""
    return hd.signed(closed_form_sq_gamma(k, n, i, min_scale), sign)


# ---------------------------------------------------------------- reports

@dataclass(frozen=True)
class Discrepancy:
    generator: str
    i: int
    pullback: str
    closed_form: str
    only_pullback: tuple
    only_closed_form: tuple

    def as_dict(self):
        return {
            "generator": self.generator, "i": self.i,
            "pullback": self.pullback, "closed_form": self.closed_form,
            "only_pullback": list(self.only_pullback),
            "only_closed_form": list(self.only_closed_form),
        }


def _compare(name, i, pull, closed):
    if pull == closed:
        return None
    a, b = set(map(str, pull.terms)), set(map(str, closed.terms))
    return Discrepancy(name, i, str(pull), str(closed), tuple(sorted(a - b)), tuple(sorted(b - a)))


def gamma_cases(max_component=8):
    return [(k, n) for k in range(1, 4) for n in range(1, max_component + 1) if n << k <= max_component]


def gamma_discrepancies(max_component=8):
    out = []
    for k, n in gamma_cases(max_component):
        g = hb.gamma(k, n)
        deg = n * ((1 << k) - 1)
        for i in range(deg + 1):
            d = _compare(f"g{k}_{n}", i, sq(i, g), closed_form_sq_gamma(k, n, i))
            if d:
                out.append(d)
    return out


def delta_discrepancies(max_component=8, min_scale=1):
    out = []
    j = 1
    while (1 << j) <= max_component:
        N = 1 << j
        for i in range(N + 1):
            d = _compare(f"d{N}", i, sq(i, hb.delta(N)), closed_form_sq_delta(N, i, min_scale))
            if d:
                out.append(d)
        j += 1
    return out


def discrepancy_report(max_component=8, delta_min_scale=1):
    """Compare pullback squares with the closed forms on gamma_{k,n} and delta_{2^j}."""
    return gamma_discrepancies(max_component) + delta_discrepancies(max_component, delta_min_scale)
