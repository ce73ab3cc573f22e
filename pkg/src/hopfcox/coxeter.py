"""Signed permutations: the Coxeter groups B_n and D_n.

B_n acts on {-n..-1, 1..n}; generators are s_0 (negate 1) and s_i
(swap i, i+1). D_n has t_0 = s_0 s_1 s_0 and t_i = s_i. Products compose
as functions: (u * v)(i) = u(v(i)).
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

DEFAULT_CAP = 50000


class NotSimple:
    """Marker for a conjugate that is not a standard generator."""

    def __repr__(self):
        return "NotSimple"

    def __bool__(self):
        return False


NOT_SIMPLE = NotSimple()


class SignedPerm:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(v) for v in images)
        if sorted(abs(v) for v in images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a signed permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        v = self.images[abs(i) - 1]
        return v if i > 0 else -v

    @classmethod
    def _raw(cls, images):
        w = cls.__new__(cls)
        w.images = images
        return w

    def __mul__(self, other):
        im = self.images
        return SignedPerm._raw(tuple(im[v - 1] if v > 0 else -im[-v - 1] for v in other.images))

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.images, 1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPerm(inv)

    def negatives(self):
        return sum(1 for v in self.images if v < 0)

    def in_D(self):
        return self.negatives() % 2 == 0

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"SignedPerm({list(self.images)})"


def generators(kind, n):
    """Standard Coxeter generators of B_n or D_n, indexed 0..n-1."""
    ident = list(range(1, n + 1))
    s = []
    for i in range(n):
        im = ident[:]
        if i == 0:
            im[0] = -1
        else:
            im[i - 1], im[i] = im[i], im[i - 1]
        s.append(SignedPerm(im))
    if kind == "B":
        return s
    if kind == "D":
        if n < 2:
            return []
        return [s[0] * s[1] * s[0]] + s[1:]
    raise ValueError(f"unknown Coxeter type {kind!r}")


@lru_cache(maxsize=None)
def _cayley(kind, n):
    """BFS over the whole group: element -> length."""
    gens = generators(kind, n)
    start = SignedPerm.identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in gens:
            v = w * g
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


def elements(kind, n):
    return list(_cayley(kind, n))


def length(w, kind="B"):
    if kind == "D" and not w.in_D():
        raise ValueError("element is not in D_n")
    return _cayley(kind, w.n)[w]


def parabolic(gamma, kind, n, cap=DEFAULT_CAP):
    """The subgroup generated by the generators with indices in gamma."""
    gens = generators(kind, n)
    sub = [gens[i] for i in sorted(gamma)]
    start = SignedPerm.identity(n)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in sub:
            v = w * g
            if v not in seen:
                seen.add(v)
                if len(seen) > cap:
                    raise OverflowError(f"parabolic subgroup exceeds cap {cap}")
                queue.append(v)
    return seen


@lru_cache(maxsize=None)
def _parabolic_cached(T, kind, n):
    return frozenset(parabolic(T, kind, n))


@lru_cache(maxsize=None)
def _min_reps(T, Tp, kind, n, side):
    if not Tp <= T:
        raise ValueError("T' must be a subset of T")
    lens = _cayley(kind, n)
    gens = generators(kind, n)
    sub = [gens[i] for i in sorted(Tp)]
    reps = []
    # parabolic lengths agree with ambient lengths, so the minimal element
    # of each coset is the unique one with no descent in T'
    for w in _parabolic_cached(T, kind, n):
        lw = lens[w]
        if side == "left":
            ok = all(lens[w * s] > lw for s in sub)
        else:
            ok = all(lens[s * w] > lw for s in sub)
        if ok:
            reps.append(w)
    reps.sort(key=lambda w: (lens[w], w.images))
    return tuple(reps)


def min_coset_reps(T, Tp, kind, n, side="left"):
    """Minimal-length representatives of the cosets of W_{T'} in W_T.

    side="left" uses cosets w W_{T'} (the representatives w with
    l(ws) > l(w) for s in T'); side="right" uses W_{T'} w.
    """
    return _min_reps(frozenset(T), frozenset(Tp), kind, n, side)


@lru_cache(maxsize=None)
def _gen_index(kind, n):
    return {g: i for i, g in enumerate(generators(kind, n))}


def conjugate_genset(beta, gamma, kind="B"):
    """beta^{-1} Gamma beta as a set of generator indices, or NOT_SIMPLE."""
    n = beta.n
    gens = generators(kind, n)
    index = _gen_index(kind, n)
    binv = beta.inverse()
    out = set()
    for i in gamma:
        j = index.get(binv * gens[i] * beta)
        if j is None:
            return NOT_SIMPLE
        out.add(j)
    return frozenset(out)


def longest_element(kind, n):
    lens = _cayley(kind, n)
    return max(lens, key=lambda w: (lens[w], w.images))
