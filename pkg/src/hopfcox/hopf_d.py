"""The almost-Hopf ring A'_D.

A charged monomial is a B-monomial together with a charge: NEUTRAL for
classes pulled back along rho, or a parity bit (PLUS = 0, MINUS = 1) for
full-width gamma-monomials b_1^+ o ... o b_r^{+/-}. Component 0 holds 1^+
and 1^-; the cup unit there is 1^+ + 1^-, the transfer unit is 1^+.

Cup products in positive components are computed by restricting to the
maximal elementary abelian subgroups and solving back (see quillen).
"""

from __future__ import annotations

from functools import lru_cache

from . import hopf_b as hb

NEUTRAL = None
PLUS = 0
MINUS = 1


class ChargedMonomial:
    __slots__ = ("base", "charge", "_hash")

    def __init__(self, base, charge=NEUTRAL):
        if isinstance(base, hb.GatheredBlockB):
            base = hb.HopfMonomialB([base])
        if charge is not NEUTRAL:
            if charge not in (PLUS, MINUS):
                raise ValueError("charge must be NEUTRAL, PLUS or MINUS")
            if not all(b.has_gamma() for b in base.blocks):
                raise ValueError("signed monomials need a gamma factor in every block")
        elif not base.blocks:
            raise ValueError("component 0 only holds 1^+ and 1^-")
        self.base = base
        self.charge = charge
        self._hash = hash((base, charge))

    @property
    def component(self):
        return self.base.component

    @property
    def degree(self):
        return self.base.degree

    def is_signed(self):
        return self.charge is not NEUTRAL

    def key(self):
        c = -1 if self.charge is NEUTRAL else self.charge
        return hb.sort_key(self.base) + (c,)

    def __eq__(self, other):
        return (isinstance(other, ChargedMonomial) and self.base == other.base
                and self.charge == other.charge)

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ChargedMonomial({self})"

    def __str__(self):
        if self.charge is NEUTRAL:
            return f"r({self.base})"
        sign = "+" if self.charge == PLUS else "-"
        if not self.base.blocks:
            return f"e{sign}"
        return f"s{sign}({self.base})"


ONE_PLUS = ChargedMonomial(hb.ONE, PLUS)
ONE_MINUS = ChargedMonomial(hb.ONE, MINUS)


class ElementD:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        out = set()
        for t in terms:
            out ^= {t}
        self.terms = frozenset(out)

    @classmethod
    def _raw(cls, terms):
        e = cls.__new__(cls)
        e.terms = frozenset(terms)
        return e

    def __add__(self, other):
        return ElementD._raw(self.terms ^ as_element_d(other).terms)

    __sub__ = __add__

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ElementD) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def __len__(self):
        return len(self.terms)

    def __mul__(self, other):
        return cup_d(self, other)

    def __repr__(self):
        return f"ElementD({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in sorted(self.terms))


ZERO_D = ElementD()


def as_element_d(x):
    if isinstance(x, ElementD):
        return x
    if isinstance(x, ChargedMonomial):
        return ElementD._raw({x})
    raise TypeError(f"cannot view {type(x).__name__} as an element of A'_D")


def one_plus():
    return ElementD._raw({ONE_PLUS})


def one_minus():
    return ElementD._raw({ONE_MINUS})


def unit_d(n):
    """Cup unit of component n (1^+ + 1^- when n = 0)."""
    if n == 0:
        return ElementD._raw({ONE_PLUS, ONE_MINUS})
    return rho(hb.unit(n))


# ---------------------------------------------------------------- rho, iota, tr

def classify(m):
    """'zero', 'neutral' or 'signed' for a B-monomial under rho.

    'zero' means the image is not a basis element of A'_D: the tallest
    pure-delta column has width 1.
    """
    if not m.blocks:
        return "signed"
    pure = [b for b in m.blocks if b.is_pure_delta()]
    if pure:
        top = max(pure, key=lambda b: b.height)
        if top.width == 1:
            return "zero"
    if pure or any(b.is_unit() for b in m.blocks):
        return "neutral"
    return "signed"


def _basis_terms(m):
    """Basis elements of A'_D attached to a B-monomial by the classification."""
    kind = classify(m)
    if kind == "zero":
        return frozenset()
    if kind == "neutral":
        return frozenset({ChargedMonomial(m)})
    return frozenset({ChargedMonomial(m, PLUS), ChargedMonomial(m, MINUS)})


@lru_cache(maxsize=None)
def _rho_mono(m):
    kind = classify(m)
    if kind == "zero":
        # not a basis element; its image is spanned by the others (often 0)
        from . import quillen
        fam = quillen.quillen_map_d(ElementD._raw({ChargedMonomial(m)}))
        if not any(fam.values()):
            return frozenset()
        return quillen.quillen_solve_d(fam, m.component, m.degree).terms
    return _basis_terms(m)


def rho(x):
    """Restriction A_B -> A'_D."""
    out = set()
    for m in hb.as_element(x).terms:
        out ^= _rho_mono(m)
    return ElementD._raw(out)


def iota(x):
    out = set()
    for t in as_element_d(x).terms:
        out.add(t if t.charge is NEUTRAL else ChargedMonomial(t.base, 1 - t.charge))
    return ElementD._raw(out)


def tr(x):
    """Transfer A'_D -> A_B."""
    out = set()
    for t in as_element_d(x).terms:
        if t.charge is not NEUTRAL:
            out ^= {t.base}
    return hb.ElementB._raw(out)


def signed(x, charge=PLUS):
    """x^+ or x^- for a full-width gamma-monomial (or element) x of A_B."""
    out = set()
    for m in hb.as_element(x).terms:
        out ^= {ChargedMonomial(m, charge)}
    return ElementD._raw(out)


def neutral(x):
    out = set()
    for m in hb.as_element(x).terms:
        out ^= {ChargedMonomial(m)}
    return ElementD._raw(out)


def gamma_pm(k, m, charge=PLUS, power=1):
    if m == 0:
        return ElementD._raw({ChargedMonomial(hb.ONE, charge)})
    return signed(hb.gamma(k, m, power), charge)


def delta0(n, m, power=1):
    """delta^0_{n:m}: the restriction of delta_n o 1_m."""
    x = hb.odot(hb.delta(n, power) if n else hb.unit(0), hb.unit(m))
    return rho(x)


# ---------------------------------------------------------------- transfer

@lru_cache(maxsize=None)
def _odot_charged(a, b):
    if a.charge is not NEUTRAL and b.charge is not NEUTRAL:
        m = hb.odot_mono(a.base, b.base)
        if m is None:
            return frozenset()
        return frozenset({ChargedMonomial(m, a.charge ^ b.charge)})
    if a.charge is NEUTRAL and b.charge is NEUTRAL:
        return frozenset()
    s, n = (a, b) if a.charge is not NEUTRAL else (b, a)
    # b o rho(y) = rho(tr(b) o y)
    m = hb.odot_mono(s.base, n.base)
    if m is None:
        return frozenset()
    return _rho_mono(m)


def odot_d(x, y):
    out = set()
    for a in as_element_d(x).terms:
        for b in as_element_d(y).terms:
            out ^= _odot_charged(a, b)
    return ElementD._raw(out)


def odot_all_d(*xs):
    acc = one_plus()
    for x in xs:
        acc = odot_d(acc, x)
    return acc


# ---------------------------------------------------------------- cup

@lru_cache(maxsize=None)
def _cup_charged(a, b):
    if a.component != b.component:
        return frozenset()
    if a.component == 0:
        return frozenset({a}) if a.charge == b.charge else frozenset()
    from . import quillen
    n = a.component
    fa = quillen.quillen_map_d(ElementD._raw({a}))
    fb = quillen.quillen_map_d(ElementD._raw({b}))
    prod = {s: fa[s] * fb[s] for s in fa}
    return quillen.quillen_solve_d(prod, n, a.degree + b.degree).terms


def cup_d(x, y):
    out = set()
    for a in as_element_d(x).terms:
        for b in as_element_d(y).terms:
            out ^= _cup_charged(a, b)
    return ElementD._raw(out)


def cup_power_d(x, k):
    x = as_element_d(x)
    if k == 0:
        comps = {t.component for t in x.terms}
        if len(comps) != 1:
            raise ValueError("x^0 needs a single component")
        return unit_d(comps.pop())
    out = x
    for _ in range(k - 1):
        out = cup_d(out, x)
    return out


# ---------------------------------------------------------------- coproduct

def rho_tensor(t):
    """(rho x rho) on a set of B-monomial pairs."""
    out = set()
    for l, r in t:
        for a in _rho_mono(l):
            for b in _rho_mono(r):
                out ^= {(a, b)}
    return frozenset(out)


def tensor_odot_d(s, t):
    out = set()
    for a1, b1 in s:
        for a2, b2 in t:
            for l in _odot_charged(a1, a2):
                for r in _odot_charged(b1, b2):
                    out ^= {(l, r)}
    return frozenset(out)


def tensor_cup_d(s, t):
    out = set()
    for a1, b1 in s:
        for a2, b2 in t:
            ls = _cup_charged(a1, a2)
            if not ls:
                continue
            rs = _cup_charged(b1, b2)
            for l in ls:
                for r in rs:
                    out ^= {(l, r)}
    return frozenset(out)


def tensor_iota_left(t):
    out = set()
    for l, r in t:
        out ^= {(next(iter(iota(ElementD._raw({l})).terms)), r)}
    return frozenset(out)


@lru_cache(maxsize=None)
def _coproduct_generator(width, l, charge):
    """Delta of one generator of width `width`: delta^0 (l = 0) or gamma^{+/-}_l."""
    if l == 0:
        return rho_tensor(hb.coproduct_mono(hb.HopfMonomialB([hb.GatheredBlockB(width, (1,))])))
    out = set()
    m = width >> l
    for i in range(m + 1):
        for c in (PLUS, MINUS):
            left = ChargedMonomial(hb.HopfMonomialB([hb.GatheredBlockB(i << l, (0,) * l + (1,))]) if i else hb.ONE, c)
            rm = hb.HopfMonomialB([hb.GatheredBlockB((m - i) << l, (0,) * l + (1,))]) if i < m else hb.ONE
            right = ChargedMonomial(rm, c ^ charge)
            out ^= {(left, right)}
    return frozenset(out)


def generator_product(b, charge=PLUS):
    """The cup product of the +/- generators making up block b.

    For blocks with a repeated gamma_1 factor this differs from b^+ by
    terms with more delta^0 factors (b^+ is the positive part of rho(b)).
    """
    acc = None
    for l, t in enumerate(b.profile):
        for _ in range(t):
            g = delta0(b.width, 0) if l == 0 else gamma_pm(l, b.width >> l, charge)
            acc = g if acc is None else cup_d(acc, g)
    return acc


@lru_cache(maxsize=None)
def _coproduct_product(b):
    """Delta of generator_product(b) by the (Delta, .) bialgebra law."""
    acc = None
    for l, t in enumerate(b.profile):
        for _ in range(t):
            g = _coproduct_generator(b.width, l, PLUS)
            acc = g if acc is None else tensor_cup_d(acc, g)
    return acc


@lru_cache(maxsize=None)
def _coproduct_signed_block(b):
    """Delta(b^+) for one gamma block."""
    out = set(_coproduct_product(b))
    top = ChargedMonomial(hb.HopfMonomialB([b]), PLUS)
    # triangular correction: the other terms carry more delta^0 factors
    for t in generator_product(b).terms:
        if t != top:
            out ^= _coproduct_charged(t)
    return frozenset(out)


def delta_prime_block(b):
    """Delta'(b^+) for one gamma block: splits of the block, both sides +."""
    out = set()
    for l, r in hb.coproduct_block(b):
        out ^= {(ChargedMonomial(l, PLUS), ChargedMonomial(r, PLUS))}
    return frozenset(out)


def delta_prime_from_full(b):
    """The part of Delta(b^+) whose left factor carries no - generator."""
    full = _coproduct_signed_block(b)
    return frozenset(p for p in full if p[0].charge != MINUS)


@lru_cache(maxsize=None)
def _coproduct_charged(t):
    if t.charge is NEUTRAL:
        return rho_tensor(hb.coproduct_mono(t.base))
    if not t.base.blocks:
        if t.charge == PLUS:
            return frozenset({(ONE_PLUS, ONE_PLUS), (ONE_MINUS, ONE_MINUS)})
        return frozenset({(ONE_PLUS, ONE_MINUS), (ONE_MINUS, ONE_PLUS)})
    if t.charge == MINUS:
        # conjugation by s_0 only touches the left factor
        return tensor_iota_left(_coproduct_charged(ChargedMonomial(t.base, PLUS)))
    blocks = t.base.blocks
    if len(blocks) == 1:
        return _coproduct_signed_block(blocks[0])
    # Delta(b^+ o x) = (o x o)(id x tau x id)(Delta'(b^+) x Delta(x))
    head = delta_prime_block(blocks[0])
    rest = ChargedMonomial(hb.HopfMonomialB(blocks[1:]), PLUS)
    return tensor_odot_d(head, _coproduct_charged(rest))


def coproduct_d(x):
    """Delta(x) as a frozenset of (left, right) charged-monomial pairs."""
    out = set()
    for t in as_element_d(x).terms:
        out ^= _coproduct_charged(t)
    return frozenset(out)


def coproduct_part_d(x, left_component):
    return frozenset(p for p in coproduct_d(x) if p[0].component == left_component)


def tensor_str_d(t):
    if not t:
        return "0"
    return " + ".join(f"{a} (x) {b}" for a, b in sorted(t))


# ---------------------------------------------------------------- basis

@lru_cache(maxsize=None)
def basis_d(n, d):
    """Additive basis of A'_D in component n and degree d."""
    out = set()
    for m in hb.basis(n, d):
        out |= _basis_terms(m)
    return tuple(sorted(out))


def poincare_d(n, d_max):
    return [len(basis_d(n, d)) for d in range(d_max + 1)]


def random_element_d(rng, n, d, density=0.5):
    return ElementD(t for t in basis_d(n, d) if rng.random() < density)
