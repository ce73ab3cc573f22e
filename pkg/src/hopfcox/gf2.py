"""Linear algebra and polynomial arithmetic over the two-element field.

Rows of a matrix are packed into Python integers (bit j = column j), so
elimination is a sequence of XORs on arbitrary-precision ints.
"""

from __future__ import annotations

from itertools import product


class NoSolution(ValueError):
    """The right-hand side is not in the column space."""


class BitMatrix:
    """Immutable matrix over GF(2) built from sparse (row, col) positions."""

    __slots__ = ("rows", "cols", "_rowbits")

    def __init__(self, rows, cols, entries=()):
        self.rows = int(rows)
        self.cols = int(cols)
        bits = [0] * self.rows
        for r, c in entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            bits[r] ^= 1 << c
        self._rowbits = tuple(bits)

    @classmethod
    def from_rowbits(cls, rows, cols, rowbits):
        m = cls(rows, cols)
        m._rowbits = tuple(rowbits)
        return m

    @classmethod
    def from_dense(cls, table):
        table = [list(r) for r in table]
        cols = len(table[0]) if table else 0
        ent = [(i, j) for i, r in enumerate(table) for j, v in enumerate(r) if v & 1]
        return cls(len(table), cols, ent)

    @property
    def entries(self):
        out = set()
        for i, b in enumerate(self._rowbits):
            while b:
                low = b & -b
                out.add((i, low.bit_length() - 1))
                b ^= low
        return frozenset(out)

    def rowbits(self):
        return self._rowbits

    def to_dense(self):
        return [[(b >> j) & 1 for j in range(self.cols)] for b in self._rowbits]

    def transpose(self):
        return BitMatrix(self.cols, self.rows, [(c, r) for r, c in self.entries])

    def __mul__(self, other):
        if isinstance(other, BitMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            out = []
            for b in self._rowbits:
                acc = 0
                while b:
                    low = b & -b
                    acc ^= other._rowbits[low.bit_length() - 1]
                    b ^= low
                out.append(acc)
            return BitMatrix.from_rowbits(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, vec):
        """Matrix times a bit vector (sequence of 0/1 or packed int)."""
        x = vec if isinstance(vec, int) else pack(vec)
        return [bin(b & x).count("1") & 1 for b in self._rowbits]

    def is_zero(self):
        return not any(self._rowbits)

    def __eq__(self, other):
        return (isinstance(other, BitMatrix) and self.rows == other.rows
                and self.cols == other.cols and self._rowbits == other._rowbits)

    def __hash__(self):
        return hash((self.rows, self.cols, self._rowbits))

    def __repr__(self):
        return f"BitMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    def to_triplets(self):
        """Plain-text sparse format: header 'rows cols', then 'row col' lines."""
        lines = [f"{self.rows} {self.cols}"]
        lines += [f"{r} {c}" for r, c in sorted(self.entries)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplets(cls, text):
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        rows, cols = map(int, lines[0])
        return cls(rows, cols, [(int(a), int(b)) for a, b in lines[1:]])


def pack(bits):
    x = 0
    for j, v in enumerate(bits):
        if v & 1:
            x |= 1 << j
    return x


def unpack(x, length):
    return [(x >> j) & 1 for j in range(length)]


def _echelon(rowbits):
    """Reduce packed rows; returns list of (pivot_bit, row) with distinct pivots."""
    basis = {}
    for r in rowbits:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return basis


def rank(m):
    return len(_echelon(m.rowbits()))


def nullity(m):
    return m.cols - rank(m)


def kernel_basis(m):
    """Basis of {x : m x = 0}, each vector packed as an int."""
    return ColumnSpace(m.transpose().rowbits()).dependencies()


class ColumnSpace:
    """Incremental elimination on column vectors with combination tracking.

    Columns are packed ints over the row index. After construction the
    object answers membership and solve queries for many right-hand sides.
    """

    def __init__(self, columns=()):
        self._piv = {}      # pivot bit -> (reduced vector, combination mask)
        self._deps = []
        self.ncols = 0
        for c in columns:
            self.add(c)

    def add(self, vec):
        j = self.ncols
        self.ncols += 1
        combo = 1 << j
        while vec:
            top = vec.bit_length() - 1
            hit = self._piv.get(top)
            if hit is None:
                self._piv[top] = (vec, combo)
                return True
            vec ^= hit[0]
            combo ^= hit[1]
        self._deps.append(combo)
        return False

    @property
    def rank(self):
        return len(self._piv)

    def dependencies(self):
        return list(self._deps)

    def reduce(self, vec):
        combo = 0
        while vec:
            top = vec.bit_length() - 1
            hit = self._piv.get(top)
            if hit is None:
                return vec, combo
            vec ^= hit[0]
            combo ^= hit[1]
        return 0, combo

    def contains(self, vec):
        return self.reduce(vec)[0] == 0

    def solve(self, vec):
        rest, combo = self.reduce(vec)
        if rest:
            raise NoSolution("vector outside the column space")
        return combo


def solve(m, rhs):
    """Some x with m x = rhs, as a list of bits; raises NoSolution."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length must equal the number of rows")
    cols = [0] * m.cols
    for i, b in enumerate(m.rowbits()):
        while b:
            low = b & -b
            cols[low.bit_length() - 1] |= 1 << i
            b ^= low
    x = ColumnSpace(cols).solve(pack(rhs))
    return unpack(x, m.cols)


# ---------------------------------------------------------------- polynomials

_BITS = 8
_MASK = (1 << _BITS) - 1


def _encode(exps):
    code = 0
    for i, e in enumerate(exps):
        if e < 0 or e > _MASK:
            raise ValueError("exponent out of range")
        code |= e << (_BITS * i)
    return code


def _decode(code, nvars):
    return tuple((code >> (_BITS * i)) & _MASK for i in range(nvars))


class Gf2Poly:
    """Polynomial over GF(2) in ordered degree-1 variables.

    Monomials are stored as packed exponent vectors; ``terms`` gives them
    back as tuples.
    """

    __slots__ = ("variables", "_mons", "_hash")

    def __init__(self, variables, terms=()):
        self.variables = tuple(variables)
        n = len(self.variables)
        mons = set()
        for t in terms:
            t = tuple(t)
            if len(t) != n:
                raise ValueError("exponent vector length mismatch")
            mons ^= {_encode(t)}
        self._mons = frozenset(mons)
        self._hash = None

    @classmethod
    def _raw(cls, variables, mons):
        p = cls.__new__(cls)
        p.variables = variables
        p._mons = frozenset(mons)
        p._hash = None
        return p

    @classmethod
    def zero(cls, variables):
        return cls._raw(tuple(variables), ())

    @classmethod
    def one(cls, variables):
        return cls._raw(tuple(variables), (0,))

    @classmethod
    def var(cls, variables, name):
        variables = tuple(variables)
        return cls._raw(variables, (1 << (_BITS * variables.index(name)),))

    @property
    def terms(self):
        n = len(self.variables)
        return frozenset(_decode(c, n) for c in self._mons)

    def monomial_codes(self):
        return self._mons

    def is_zero(self):
        return not self._mons

    def __bool__(self):
        return bool(self._mons)

    def degree(self):
        """Top total degree (-1 for zero)."""
        return max((_mdeg(c) for c in self._mons), default=-1)

    def is_homogeneous(self):
        return len({_mdeg(c) for c in self._mons}) <= 1

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError("polynomials live in different variable universes")

    def __add__(self, other):
        self._check(other)
        return Gf2Poly._raw(self.variables, self._mons ^ other._mons)

    __sub__ = __add__

    def __mul__(self, other):
        return poly_mul(self, other)

    def __pow__(self, k):
        out = Gf2Poly.one(self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, Gf2Poly) and self.variables == other.variables
                and self._mons == other._mons)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, self._mons))
        return self._hash

    def homogeneous_part(self, d):
        return Gf2Poly._raw(self.variables, [c for c in self._mons if _mdeg(c) == d])

    def substitute(self, images):
        """Ring map sending variable i to images[i] (all in one universe)."""
        if not images:
            return self
        target = images[0].variables
        out = set()
        cache = {}
        n = len(self.variables)
        for c in self._mons:
            acc = Gf2Poly.one(target)
            for i, e in enumerate(_decode(c, n)):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = images[i] ** e
                    acc = acc * cache[key]
            out ^= acc._mons
        return Gf2Poly._raw(target, out)

    def embed(self, variables, mapping=None):
        """Rename into a larger universe; mapping sends own names to new ones."""
        variables = tuple(variables)
        mapping = mapping or {}
        pos = [variables.index(mapping.get(v, v)) for v in self.variables]
        n = len(self.variables)
        out = set()
        for c in self._mons:
            code = 0
            for i, e in enumerate(_decode(c, n)):
                code += e << (_BITS * pos[i])
            out ^= {code}
        return Gf2Poly._raw(variables, out)

    def __repr__(self):
        return f"Gf2Poly({self})"

    def __str__(self):
        if not self._mons:
            return "0"
        n = len(self.variables)
        parts = []
        for t in sorted((_decode(c, n) for c in self._mons), key=lambda t: (-sum(t), [-e for e in t])):
            f = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, t) if e]
            parts.append("*".join(f) or "1")
        return " + ".join(parts)


def _mdeg(code):
    d = 0
    while code:
        d += code & _MASK
        code >>= _BITS
    return d


def poly_mul(p, q):
    p._check(q)
    if not p._mons or not q._mons:
        return Gf2Poly._raw(p.variables, ())
    if p.degree() + q.degree() > _MASK:
        raise ValueError("degree exceeds the packed exponent range")
    out = set()
    small, big = (p._mons, q._mons) if len(p._mons) <= len(q._mons) else (q._mons, p._mons)
    for a in small:
        out ^= {a + b for b in big}
    return Gf2Poly._raw(p.variables, out)


def _subsets_of(e):
    """All j with binom(e, j) odd, i.e. the bit-subsets of e (Lucas)."""
    j = e
    out = []
    while True:
        out.append(j)
        if j == 0:
            return out
        j = (j - 1) & e


def _sq_monomial(code, nvars, want=None):
    exps = _decode(code, nvars)
    opts = []
    for e in exps:
        opts.append(_subsets_of(e) if e else [0])
    out = set()
    for js in product(*opts):
        if want is not None and sum(js) != want:
            continue
        out ^= {_encode([e + j for e, j in zip(exps, js)])}
    return out


def total_steenrod(p):
    """Ring endomorphism with v -> v + v^2 on every variable."""
    n = len(p.variables)
    out = set()
    for c in p._mons:
        out ^= _sq_monomial(c, n)
    return Gf2Poly._raw(p.variables, out)


def sq_component(p, i):
    """Sq^i p: the part of total_steenrod raising each term's degree by i."""
    n = len(p.variables)
    out = set()
    for c in p._mons:
        out ^= _sq_monomial(c, n, want=i)
    return Gf2Poly._raw(p.variables, out)


def binom2(n, k):
    """binom(n, k) mod 2 by Lucas: odd iff k is a bit-subset of n."""
    if k < 0 or k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0
