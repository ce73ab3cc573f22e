"""Fox-Neuwirth cochain complexes for B_n and D_n, modulo 2.

A basis cochain of FN_B (and FN_D) is a tuple [a_0:...:a_{n-1}] of
nonnegative integers; its flag is Gamma_r = {i : a_i >= r}. The complex
FN'_D is FN_B taken modulo D_n, so each tuple comes twice: (0, a) for
[a] and (1, a) for s_0[a].

Cochains are frozensets of keys: tuples for variants "B" and "D", pairs
(eps, tuple) for "Dprime". Tensors are frozensets of key pairs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from . import coxeter
from .gf2 import BitMatrix, ColumnSpace, pack, rank

VARIANTS = ("B", "D", "Dprime")
CAPS = {"B": 6, "D": 5, "Dprime": 6}
MAX_DEGREE = 12


def _check(variant, n, d=0):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if n < 0 or d < 0:
        raise ValueError("rank and degree must be nonnegative")
    if n > CAPS[variant]:
        raise ValueError(f"rank {n} exceeds the cap for {variant}")


def degree(key):
    return sum(key[1]) if _is_pair(key) else sum(key)


def _is_pair(key):
    return len(key) == 2 and isinstance(key[1], tuple)


def tuple_of(key):
    return key[1] if _is_pair(key) else key


def compositions(n, d):
    """n-tuples of nonnegative integers summing to d, lexicographic."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d + 1):
        for rest in compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


def cells(group, n, d):
    """Basis of the degree-d part: tuples, or (eps, tuple) for Dprime."""
    _check(group, n, d)
    tups = compositions(n, d)
    if group == "Dprime":
        return [(e, a) for a in tups for e in (0, 1)]
    return tups


# ------------------------------------------------------------------ boundary

def flag(a):
    top = max(a, default=0)
    return [frozenset(i for i, v in enumerate(a) if v >= r) for r in range(1, top + 1)]


def _tuple_from_flag(fl, n):
    out = [0] * n
    for g in fl:
        for i in g:
            out[i] += 1
    return tuple(out)


def _faces(a, kind, side):
    """(lower tuple, parity of beta) for each boundary term of the flag of a."""
    n = len(a)
    fl = flag(a)
    out = []
    for i, gi in enumerate(fl):
        nxt = fl[i + 1] if i + 1 < len(fl) else frozenset()
        for tau in gi:
            smaller = gi - {tau}
            for beta in coxeter.min_coset_reps(gi, smaller, kind, n, side):
                conj = coxeter.conjugate_genset(beta, nxt, kind)
                if conj is coxeter.NOT_SIMPLE or not conj <= smaller:
                    continue
                new = fl[:i] + [smaller]
                new += [coxeter.conjugate_genset(beta, g, kind) for g in fl[i + 1:]]
                out.append((_tuple_from_flag(new, n), beta.negatives() & 1))
    return out


@lru_cache(maxsize=None)
def _cobound_map(group, n, d, side="left"):
    """Lower cell -> frozenset of upper cells (degree d -> d+1)."""
    _check(group, n, d)
    kind = "D" if group == "D" else "B"
    acc = {}
    for a in compositions(n, d + 1):
        tops = [(0, a), (1, a)] if group == "Dprime" else [a]
        faces = _faces(a, kind, side)
        for top in tops:
            for low, par in faces:
                key = (top[0] ^ par, low) if group == "Dprime" else low
                s = acc.setdefault(key, set())
                s ^= {top}
    return {k: frozenset(v) for k, v in acc.items() if v}


def coboundary(group, n, d, side="left"):
    """BitMatrix of the coboundary degree d -> d+1.

    Rows are indexed by cells(group, n, d+1), columns by cells(group, n, d).
    """
    rows = {c: i for i, c in enumerate(cells(group, n, d + 1))}
    cols = cells(group, n, d)
    m = _cobound_map(group, n, d, side)
    ent = [(rows[t], j) for j, c in enumerate(cols) for t in m.get(c, ())]
    return BitMatrix(len(rows), len(cols), ent)


@lru_cache(maxsize=None)
def _rank(group, n, d, side="left"):
    if d < 0:
        return 0
    return rank(coboundary(group, n, d, side))


def betti(group, n, d, side="left"):
    """dim H^d from the Fox-Neuwirth complex (the cap d <= MAX_DEGREE applies)."""
    if d > MAX_DEGREE:
        raise ValueError(f"degree {d} exceeds the cap {MAX_DEGREE}")
    if group != "B" and n < 2:
        raise ValueError("type D complexes need n >= 2")
    return len(cells(group, n, d)) - _rank(group, n, d, side) - _rank(group, n, d - 1, side)


def d_cochain(group, x):
    """Apply the coboundary to a homogeneous cochain (frozenset of keys)."""
    out = set()
    for key in x:
        n = len(tuple_of(key))
        out ^= _cobound_map(group, n, degree(key)).get(key, frozenset())
    return frozenset(out)


def d_tensor(group, t):
    out = set()
    for a, b in t:
        for a2 in d_cochain(group, {a}):
            out ^= {(a2, b)}
        for b2 in d_cochain(group, {b}):
            out ^= {(a, b2)}
    return frozenset(out)


def is_cocycle(group, x):
    return not d_cochain(group, x)


def same_class(group, x, y):
    """True when x - y is a coboundary (x, y homogeneous of one component)."""
    diff = frozenset(x) ^ frozenset(y)
    if not diff:
        return True
    key = next(iter(diff))
    n, deg = len(tuple_of(key)), degree(key)
    if any(len(tuple_of(k)) != n or degree(k) != deg for k in diff):
        raise ValueError("cochain is not homogeneous")
    if deg == 0:
        return False
    lower = cells(group, n, deg - 1)
    index = {c: i for i, c in enumerate(cells(group, n, deg))}
    m = _cobound_map(group, n, deg - 1)
    space = ColumnSpace(pack_keys(m.get(c, ()), index) for c in lower)
    return space.contains(pack_keys(diff, index))


def tensor_same_class(group, s, t):
    """same_class for sums of tensors of one bidegree (p, q) and total degree."""
    diff = frozenset(s) ^ frozenset(t)
    if not diff:
        return True
    a, b = next(iter(diff))
    p, q = len(tuple_of(a)), len(tuple_of(b))
    deg = degree(a) + degree(b)
    if any((len(tuple_of(x)), len(tuple_of(y)), degree(x) + degree(y)) != (p, q, deg)
           for x, y in diff):
        raise ValueError("tensor is not homogeneous")
    top = [(x, y) for i in range(deg + 1) for x in cells(group, p, i) for y in cells(group, q, deg - i)]
    index = {c: j for j, c in enumerate(top)}
    lower = [(x, y) for i in range(deg) for x in cells(group, p, i) for y in cells(group, q, deg - 1 - i)]
    space = ColumnSpace(pack_keys(d_tensor(group, {c}), index) for c in lower)
    return space.contains(pack_keys(diff, index))


def pack_keys(keys, index):
    v = 0
    for k in keys:
        v ^= 1 << index[k]
    return v


# ------------------------------------------------------------------ blocks

def principal_kblocks(a, k):
    """Principal k-blocks of a as (start, end) index pairs, inclusive."""
    out = []
    n = len(a)
    i = 0
    while i < n:
        if a[i] > k:
            j = i
            while j + 1 < n and a[j + 1] > k:
                j += 1
            prefix = min(a[:i], default=0)
            if prefix == k:
                out.append((i, j))
            i = j + 1
        else:
            i += 1
    return out


def kblocks(a, k):
    out = []
    i = 0
    while i < len(a):
        if a[i] > k:
            j = i
            while j + 1 < len(a) and a[j + 1] > k:
                j += 1
            out.append((i, j))
            i = j + 1
        else:
            i += 1
    return out


# ------------------------------------------------------------- coproduct

def _origin_prefix(c):
    """o_j = prefix of agreement between the origin and point j (j = 1..N)."""
    out, m = [], None
    for v in c:
        m = v if m is None else min(m, v)
        out.append(m)
    return out


def delta_printed(a):
    """The splitting rule as printed: cut where a_k <= min(a_0..a_{k-1})."""
    out = set()
    n = len(a)
    for k in range(n + 1):
        if k == 0 or k == n or a[k] <= min(a[:k]):
            out ^= {(a[:k], a[k:])}
    return frozenset(out)


def delta_geometric(c):
    """Coproduct from merging a small configuration with a large one.

    Points are lex-ordered positive vectors; point j has origin prefix
    o_j. A point of the small set P and a point of the large set Q agree
    only on their common leading zeros, and at equal origin prefix the
    P point comes first. Every admissible 2-colouring contributes the
    induced pair of tuples.
    """
    N = len(c)
    o = _origin_prefix(c)
    out = set()
    for n in range(N + 1):
        for P in combinations(range(N), n):
            Ps = set(P)
            ok = True
            for j in range(N - 1):
                if (j in Ps) != (j + 1 in Ps):
                    if c[j + 1] != o[j + 1]:
                        ok = False
                        break
                    if j not in Ps and o[j] == o[j + 1]:
                        ok = False
                        break
            if ok:
                Q = [j for j in range(N) if j not in Ps]
                out ^= {(induced(c, P), induced(c, Q))}
    return frozenset(out)


def induced(c, chosen):
    """Tuple of the sub-configuration on the chosen point indices (0-based)."""
    out = []
    prev = -1
    for j in chosen:
        out.append(min(c[prev + 1:j + 1]))
        prev = j
    return tuple(out)


def delta_chain(group, x, rule="geometric"):
    """Chain-level coproduct of a cochain; returns a frozenset of key pairs."""
    split = delta_geometric if rule == "geometric" else delta_printed
    out = set()
    for key in x:
        if group == "Dprime":
            e, a = key
            for p, q in split(a):
                out ^= {((0, p), (e, q)), ((1, p), (1 - e, q))}
        elif group == "B":
            out ^= split(key)
        else:
            raise ValueError("no chain-level coproduct on FN_D; use phi first")
    return frozenset(out)


# -------------------------------------------------------------- transfer

def odot_geometric(a, b):
    """Sum over placements of a and b as complementary sub-configurations."""
    n, m = len(a), len(b)
    N, deg = n + m, sum(a) + sum(b)
    out = set()
    for c in compositions(N, deg):
        cnt = 0
        for S in combinations(range(N), n):
            if induced(c, S) != a:
                continue
            rest = [j for j in range(N) if j not in set(S)]
            if induced(c, rest) == b:
                cnt ^= 1
        if cnt:
            out.add(c)
    return frozenset(out)


def _interleavings(target, left, right):
    """Number of ways the list target interleaves left and right."""
    if len(target) != len(left) + len(right):
        return 0
    memo = {}

    def go(i, j):
        if i + j == len(target):
            return 1
        if (i, j) in memo:
            return memo[i, j]
        t = target[i + j]
        r = 0
        if i < len(left) and left[i] == t:
            r += go(i + 1, j)
        if j < len(right) and right[j] == t:
            r += go(i, j + 1)
        memo[i, j] = r
        return r

    return go(0, 0)


def _pblocks(a, k):
    return [a[i:j + 1] for i, j in principal_kblocks(a, k)]


def odot_printed(a, b):
    """The literal block-shuffle rule, counting interleavings mod 2."""
    n, m = len(a), len(b)
    deg = sum(a) + sum(b)
    top = max(a + b, default=0)
    out = set()
    for c in compositions(n + m, deg):
        cnt = 1
        for k in range(top + 1):
            cnt *= _interleavings(_pblocks(c, k), _pblocks(a, k), _pblocks(b, k))
            if not cnt & 1:
                break
        if cnt & 1:
            out.add(c)
    return frozenset(out)


def odot_chain(group, x, y, rule="geometric"):
    prod = odot_geometric if rule == "geometric" else odot_printed
    out = set()
    for kx in x:
        for ky in y:
            if group == "Dprime":
                e = kx[0] ^ ky[0]
                out ^= {(e, c) for c in prod(kx[1], ky[1])}
            elif group == "B":
                out ^= prod(kx, ky)
            else:
                raise ValueError("no chain-level transfer on FN_D; use phi first")
    return frozenset(out)


# ------------------------------------------------------ D-side chain maps

def phi(x):
    """FN_D -> FN'_D, induced by the inclusion of configuration spaces."""
    out = set()
    for a in x:
        if len(a) < 2:
            raise ValueError("FN_D tuples have length >= 2")
        sw = (a[1], a[0]) + a[2:]
        if a[0] < a[1]:
            out ^= {(0, a)}
        elif a[0] == a[1]:
            out ^= {(0, a), (1, sw)}
        else:
            out ^= {(1, sw)}
    return frozenset(out)


def iota_fn(x):
    return frozenset((a[1], a[0]) + a[2:] for a in x)


def iota_prime(x):
    return frozenset((1 - e, a) for e, a in x)


def restrict_chain(x):
    """FN_B -> FN'_D: a cell splits into its two D-cosets."""
    out = set()
    for a in x:
        out ^= {(0, a), (1, a)}
    return frozenset(out)


def transfer_chain(x):
    """FN'_D -> FN_B: forget the coset bit."""
    out = set()
    for _, a in x:
        out ^= {a}
    return frozenset(out)


# ------------------------------------------------------ generator cochains

def gamma_tuple(k, m):
    if k < 1 or m < 1:
        raise ValueError("gamma_{k,m} needs k, m >= 1")
    block = (1,) * (2 ** k - 1)
    out = (0,) + block
    for _ in range(m - 1):
        out += (0,) + block
    return out


def generator_cochain(name, *idx):
    """Cochain representatives of the generators.

    name: "delta" (n) and "gamma" (k, m) in FN_B; "g+" / "g-" (k, m) in
    FN_D; "unit" (n) in FN_B.
    """
    if name == "delta":
        (n,) = idx
        if n < 1:
            raise ValueError("delta_n needs n >= 1")
        return frozenset({(1,) * n})
    if name == "gamma":
        return frozenset({gamma_tuple(*idx)})
    if name == "unit":
        (n,) = idx
        return frozenset({(0,) * n})
    if name in ("g+", "g-"):
        t = gamma_tuple(*idx)
        if name == "g-":
            t = (t[1], t[0]) + t[2:]
        return frozenset({t})
    raise ValueError(f"unknown generator {name!r}")


def export_triplets(group, n, d):
    return coboundary(group, n, d).to_triplets()
