"""The Hopf ring A_B of mod-2 cohomology of the groups B_n.

A gathered block is a column of width M with profile (t_0, ..., t_n):
delta_M^{t_0} times the product of gamma_{k, M/2^k}^{t_k}. A Hopf monomial
is a transfer product of blocks with pairwise distinct profiles. Elements
are finite sets of monomials (coefficients in GF(2)).
"""

from __future__ import annotations

from functools import lru_cache, reduce
from itertools import product

from .gf2 import binom2

UNIT_PROFILE = (0,)


def _norm_profile(profile):
    p = list(profile)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else UNIT_PROFILE


class GatheredBlockB:
    __slots__ = ("width", "profile")

    def __init__(self, width, profile=UNIT_PROFILE):
        profile = _norm_profile(profile)
        if width < 1:
            raise ValueError("block width must be positive")
        if any(t < 0 for t in profile):
            raise ValueError("profile entries must be nonnegative")
        if width % (1 << (len(profile) - 1)):
            raise ValueError(f"width {width} not divisible by 2^{len(profile) - 1}")
        self.width = width
        self.profile = profile

    @property
    def scale(self):
        """n_b: the largest gamma index present (0 for delta powers and units)."""
        return len(self.profile) - 1

    @property
    def units(self):
        """Width measured in 2^{n_b}-wide units."""
        return self.width >> self.scale

    def is_unit(self):
        return self.profile == UNIT_PROFILE

    def is_pure_delta(self):
        return len(self.profile) == 1 and self.profile[0] > 0

    def has_gamma(self):
        return len(self.profile) > 1

    @property
    def height(self):
        """Number of generators cup-multiplied together."""
        return sum(self.profile)

    @property
    def degree(self):
        M = self.width
        return self.profile[0] * M + sum(t * (M - (M >> k)) for k, t in enumerate(self.profile) if k)

    def key(self):
        return (-self.width, self.profile)

    def __eq__(self, other):
        return isinstance(other, GatheredBlockB) and (self.width, self.profile) == (other.width, other.profile)

    def __hash__(self):
        return hash((self.width, self.profile))

    def __repr__(self):
        return f"GatheredBlockB({self.width}, {self.profile})"

    def __str__(self):
        if self.is_unit():
            return f"u{self.width}"
        parts = []
        t0 = self.profile[0]
        if t0:
            parts.append(f"d{self.width}" + (f"^{t0}" if t0 > 1 else ""))
        for k, t in enumerate(self.profile):
            if k and t:
                parts.append(f"g{k}_{self.width >> k}" + (f"^{t}" if t > 1 else ""))
        return "*".join(parts)


class HopfMonomialB:
    """Transfer product of blocks, kept in canonical order."""

    __slots__ = ("blocks", "_hash")

    def __init__(self, blocks=()):
        blocks = tuple(sorted(blocks, key=GatheredBlockB.key))
        profs = [b.profile for b in blocks]
        if len(set(profs)) != len(profs):
            raise ValueError("blocks of a basis monomial need distinct profiles")
        self.blocks = blocks
        self._hash = hash(blocks)

    @property
    def component(self):
        return sum(b.width for b in self.blocks)

    @property
    def degree(self):
        return sum(b.degree for b in self.blocks)

    @property
    def height(self):
        return max((b.height for b in self.blocks), default=0)

    def is_full_width(self):
        return not any(b.is_unit() for b in self.blocks)

    def __eq__(self, other):
        return isinstance(other, HopfMonomialB) and self.blocks == other.blocks

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"HopfMonomialB({self})"

    def __str__(self):
        if not self.blocks:
            return "u0"
        return " o ".join(str(b) for b in self.blocks)


def sort_key(m):
    return (m.component, m.degree, tuple(b.key() for b in m.blocks))


ONE = HopfMonomialB()


class ElementB:
    """A finite GF(2)-combination of Hopf monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = set()
        for t in terms:
            acc ^= {t}
        self.terms = frozenset(acc)

    @classmethod
    def _raw(cls, terms):
        e = cls.__new__(cls)
        e.terms = frozenset(terms)
        return e

    def __add__(self, other):
        return ElementB._raw(self.terms ^ other.terms)

    __sub__ = __add__

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ElementB) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def __len__(self):
        return len(self.terms)

    def __mul__(self, other):
        return cup(self, other)

    def __repr__(self):
        return f"ElementB({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(m) for m in sorted(self.terms))

    def homogeneous(self):
        return len({(m.component, m.degree) for m in self.terms}) <= 1


ZERO = ElementB()


def element(*monos):
    return ElementB(monos)


def as_element(x):
    if isinstance(x, ElementB):
        return x
    if isinstance(x, HopfMonomialB):
        return ElementB._raw({x})
    if isinstance(x, GatheredBlockB):
        return ElementB._raw({HopfMonomialB([x])})
    raise TypeError(f"cannot view {type(x).__name__} as an element of A_B")


# ---------------------------------------------------------------- generators

def block(width, profile=UNIT_PROFILE):
    return as_element(GatheredBlockB(width, profile))


def delta(n, power=1):
    if n == 0:
        return unit(0)
    return block(n, (power,))


def gamma(k, m, power=1):
    """gamma_{k,m} in component m 2^k (gamma_{k,0} is the empty unit)."""
    if k < 1:
        raise ValueError("gamma_{k,m} needs k >= 1")
    if m == 0:
        return unit(0)
    return block(m << k, (0,) * k + (power,))


def unit(n):
    if n == 0:
        return ElementB._raw({ONE})
    return block(n)


# ---------------------------------------------------------------- transfer

def merge_blocks(b, c):
    """Transfer product of two blocks with equal profiles: 0 or one block."""
    if b.profile != c.profile:
        raise ValueError("merge_blocks needs equal profiles")
    if binom2(b.units + c.units, b.units):
        return GatheredBlockB(b.width + c.width, b.profile)
    return None


def _odot_blocks(blocks):
    """Normalize a list of blocks into one monomial or None (zero)."""
    by_prof = {}
    for b in blocks:
        cur = by_prof.get(b.profile)
        if cur is None:
            by_prof[b.profile] = b
        else:
            m = merge_blocks(cur, b)
            if m is None:
                return None
            by_prof[b.profile] = m
    return HopfMonomialB(by_prof.values())


@lru_cache(maxsize=None)
def odot_mono(x, y):
    return _odot_blocks(x.blocks + y.blocks)


def odot(x, y):
    x, y = as_element(x), as_element(y)
    out = set()
    for a in x.terms:
        for b in y.terms:
            m = odot_mono(a, b)
            if m is not None:
                out ^= {m}
    return ElementB._raw(out)


def odot_all(*xs):
    return reduce(odot, xs, unit(0))


# ---------------------------------------------------------------- coproduct

@lru_cache(maxsize=None)
def coproduct_block(b):
    """Splits of one block along full-height lines, as monomial pairs."""
    step = 1 << b.scale
    out = []
    for w in range(0, b.width + 1, step):
        left = HopfMonomialB([GatheredBlockB(w, b.profile)]) if w else ONE
        right = HopfMonomialB([GatheredBlockB(b.width - w, b.profile)]) if w < b.width else ONE
        out.append((left, right))
    return tuple(out)


def tensor_odot(s, t):
    """(odot x odot)(id x tau x id) on sets of monomial pairs."""
    out = set()
    for a1, b1 in s:
        for a2, b2 in t:
            l = odot_mono(a1, a2)
            if l is None:
                continue
            r = odot_mono(b1, b2)
            if r is None:
                continue
            out ^= {(l, r)}
    return frozenset(out)


@lru_cache(maxsize=None)
def coproduct_mono(x):
    acc = frozenset({(ONE, ONE)})
    for b in x.blocks:
        acc = tensor_odot(acc, coproduct_block(b))
    return acc


def coproduct(x):
    """Delta(x) as a frozenset of (left, right) monomial pairs."""
    out = set()
    for m in as_element(x).terms:
        out ^= coproduct_mono(m)
    return frozenset(out)


def coproduct_part(x, left_component):
    return frozenset(p for p in coproduct(x) if p[0].component == left_component)


# ---------------------------------------------------------------- cup

def _profile_sum(p, q):
    n = max(len(p), len(q))
    return tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def _block_cup_block(b, c):
    if b.width != c.width:
        return None
    return GatheredBlockB(b.width, _profile_sum(b.profile, c.profile))


@lru_cache(maxsize=None)
def _block_cup_mono(b, y):
    """b . y for a single block b and monomial y of the same component."""
    if y.component != b.width:
        return frozenset()
    if len(y.blocks) == 1:
        return frozenset({HopfMonomialB([_block_cup_block(b, y.blocks[0])])})
    c = y.blocks[0]
    rest = HopfMonomialB(y.blocks[1:])
    out = set()
    # distributivity: b . (c o rest) = sum (b' . c) o (b'' . rest)
    for left, right in coproduct_block(b):
        if left.component != c.width:
            continue
        lb = left.blocks[0]
        head = _block_cup_block(lb, c)
        tails = _block_cup_mono(right.blocks[0], rest)
        for t in tails:
            m = _odot_blocks((head,) + t.blocks)
            if m is not None:
                out ^= {m}
    return frozenset(out)


@lru_cache(maxsize=None)
def cup_mono(x, y):
    if x.component != y.component:
        return frozenset()
    if not x.blocks:
        return frozenset({ONE})
    b = x.blocks[0]
    rest = HopfMonomialB(x.blocks[1:])
    out = set()
    # (b o rest) . y = sum (b . y') o (rest . y'')
    for y1, y2 in coproduct_mono(y):
        if y1.component != b.width:
            continue
        heads = _block_cup_mono(b, y1)
        if not heads:
            continue
        tails = cup_mono(rest, y2)
        for h in heads:
            for t in tails:
                m = odot_mono(h, t)
                if m is not None:
                    out ^= {m}
    return frozenset(out)


def cup(x, y):
    x, y = as_element(x), as_element(y)
    out = set()
    for a in x.terms:
        for b in y.terms:
            out ^= cup_mono(a, b)
    return ElementB._raw(out)


def cup_power(x, k):
    x = as_element(x)
    comps = {m.component for m in x.terms}
    if k == 0:
        if len(comps) != 1:
            raise ValueError("x^0 needs a single component")
        return unit(comps.pop())
    out = x
    for _ in range(k - 1):
        out = cup(out, x)
    return out


# ---------------------------------------------------------------- basis

@lru_cache(maxsize=None)
def _blocks_upto(n, d):
    """All blocks of width <= n and degree <= d, sorted canonically."""
    out = []
    for M in range(1, n + 1):
        kmax = (M & -M).bit_length() - 1
        for k in range(kmax + 1):
            out.extend(_profiles(M, k, d))
    out.sort(key=GatheredBlockB.key)
    return tuple(out)


def _profiles(M, top, d):
    """Blocks of width M with scale exactly top and degree <= d."""
    costs = [M] + [M - (M >> k) for k in range(1, top + 1)]
    res = []

    def go(i, acc, budget):
        if i == top + 1:
            if top == 0 or acc[top] > 0:
                res.append(GatheredBlockB(M, tuple(acc)))
            return
        lo = 1 if (i == top and top > 0) else 0
        t = lo
        while t * costs[i] <= budget:
            go(i + 1, acc + [t], budget - t * costs[i])
            t += 1

    go(0, [], d)
    return res


@lru_cache(maxsize=None)
def basis(n, d):
    """The additive basis in component n and degree d, deterministic order."""
    if n == 0:
        return (ONE,) if d == 0 else ()
    cands = _blocks_upto(n, d)
    out = []

    def go(i, width, deg, chosen, profs):
        if width == n:
            if deg == d:
                out.append(HopfMonomialB(chosen))
            return
        for j in range(i, len(cands)):
            b = cands[j]
            if b.profile in profs or width + b.width > n or deg + b.degree > d:
                continue
            go(j + 1, width + b.width, deg + b.degree, chosen + [b], profs | {b.profile})

    go(0, 0, 0, [], frozenset())
    return tuple(sorted(out))


def poincare(n, d_max):
    return [len(basis(n, d)) for d in range(d_max + 1)]


def basis_index(n, d):
    return {m: i for i, m in enumerate(basis(n, d))}


# ---------------------------------------------------------------- rendering

SVG_UNIT = 40


def _boxes(mono):
    """(x, y, width, height, dashes) for every box, x and y in width units."""
    out = []
    x = 0
    for b in mono.blocks:
        y = 0.0
        M = b.width
        for k, t in enumerate(b.profile):
            if k == 0 and b.is_unit():
                break
            h = 1.0 if k == 0 else 1 - 2.0 ** (-k)
            parts = M if k == 0 else M >> k
            for _ in range(t):
                out.append((x, y, M, h, parts))
                y += h
        x += M
    return out, x


def render(mono, fmt="ascii"):
    """Skyline diagram of one monomial; fmt is 'ascii' or 'svg'."""
    if isinstance(mono, ElementB):
        if len(mono.terms) != 1:
            raise ValueError("render needs a single monomial")
        mono = next(iter(mono.terms))
    boxes, total = _boxes(mono)
    if fmt == "svg":
        return _render_svg(boxes, total)
    if fmt == "ascii":
        return _render_ascii(mono)
    raise ValueError(f"unknown format {fmt!r}")


def _render_svg(boxes, total):
    u = SVG_UNIT
    top = max((y + h for _, y, _, h, _ in boxes), default=0.0)
    W, H = max(total, 1) * u + 2, int(top * u) + u + 2
    base = H - u // 2
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}">']
    lines.append(f'<line x1="1" y1="{base}" x2="{total * u + 1}" y2="{base}" stroke="black"/>')
    for x, y, w, h, parts in boxes:
        px, py, pw, ph = x * u + 1, base - (y + h) * u, w * u, h * u
        lines.append(f'<rect x="{px}" y="{py:g}" width="{pw}" height="{ph:g}" fill="none" stroke="black"/>')
        for j in range(1, parts):
            lx = px + j * pw / parts
            lines.append(f'<line x1="{lx:g}" y1="{py:g}" x2="{lx:g}" y2="{py + ph:g}" '
                         'stroke="black" stroke-dasharray="4,3"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _render_ascii(mono):
    """Columns side by side; each box is a labelled row, bottom row last."""
    cols = []
    for b in mono.blocks:
        cell = 4 * b.width
        rows = []
        if b.is_unit():
            rows.append("_" * cell)
        else:
            for k, t in enumerate(b.profile):
                label = f"d{b.width}" if k == 0 else f"g{k}_{b.width >> k}"
                for _ in range(t):
                    rows.append("[" + label.center(cell - 2, "-" if k else "=") + "]")
        cols.append((cell, rows))
    height = max((len(r) for _, r in cols), default=0)
    out = []
    for level in range(height - 1, -1, -1):
        out.append("".join((r[level] if level < len(r) else " " * c) for c, r in cols).rstrip())
    if not out:
        out.append("1")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- helpers

def tensor_str(t):
    if not t:
        return "0"
    return " + ".join(f"{a} (x) {b}" for a, b in sorted(t))


def all_monomials(n_max, d_max):
    return [m for n in range(n_max + 1) for d in range(d_max + 1) for m in basis(n, d)]


def random_element(rng, n, d, density=0.5):
    """A random homogeneous element of component n, degree d."""
    bs = basis(n, d)
    return ElementB(m for m in bs if rng.random() < density)


def tensor_product_elements(s, t):
    """Componentwise cup product on tensors."""
    out = set()
    for a1, b1 in s:
        for a2, b2 in t:
            for l, r in product(cup_mono(a1, a2), cup_mono(b1, b2)):
                out ^= {(l, r)}
    return frozenset(out)
