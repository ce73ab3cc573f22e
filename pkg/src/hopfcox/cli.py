"""Command-line front end.

    hopfcox basis --ring B --n 2 --deg 2 --format json
    hopfcox eval "g1_1 o g1_1"
    hopfcox eval --op coprod "d4*g1_2"
    hopfcox restrict "d2 o u1" --site "B:(2,1)"
    hopfcox sq --i 1 d2
    hopfcox render "d4*g1_2 o d2"
    hopfcox verify betti --max-n 4

Expressions: + is addition, o the transfer product, * the cup product and
^ a cup power (precedence ^ > * > o > +). B atoms are dN, gK_M, uN; D atoms
are DN_M, G+K_M, G-K_M, UN, e+, e-. Canonical D printouts also use
r(B-expr), s+(B-expr) and s-(B-expr) for rho, [.]^+ and [.]^-.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import hopf_b as hb
from . import hopf_d as hd
from . import quillen as q
from . import steenrod


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<wrap>r\(|s[+-]\()
  | (?P<batom>d\d+|g\d+_\d+|u\d+)
  | (?P<datom>D\d+_\d+|G[+-]\d+_\d+|U\d+|e[+-])
  | (?P<zero>0)
  | (?P<op>[+*o^()])
  | (?P<nat>\d+)
""", re.VERBOSE)


def tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    """Recursive descent; the ring is fixed by the first atom seen."""

    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0
        self.ring = None

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def set_ring(self, ring, pos):
        if self.ring is None:
            self.ring = ring
        elif self.ring != ring:
            raise ParseError("B and D atoms cannot be mixed in one expression", pos)

    def parse(self):
        x = self.element()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return x

    def _add(self, x, y):
        if isinstance(x, _Zero):
            return y
        if isinstance(y, _Zero):
            return x
        return x + y

    def element(self):
        x = self.transfer()
        while self.peek()[1] == "+" and self.peek()[0] == "op":
            self.take()
            x = self._add(x, self.transfer())
        return x

    def transfer(self):
        x = self.cup()
        while self.peek()[1] == "o":
            self.take()
            y = self.cup()
            if isinstance(x, _Zero) or isinstance(y, _Zero):
                x = _Zero()
            else:
                x = hd.odot_d(x, y) if self.ring == "D" else hb.odot(x, y)
        return x

    def cup(self):
        x = self.factor()
        while self.peek()[1] == "*":
            _, _, pos = self.take()
            y = self.factor()
            x = self._cup(x, y, pos)
        return x

    def _cup(self, x, y, pos):
        if isinstance(x, _Zero) or isinstance(y, _Zero):
            return _Zero()
        try:
            return hd.cup_d(x, y) if self.ring == "D" else hb.cup(x, y)
        except ValueError as e:
            raise ParseError(str(e), pos) from None

    def factor(self):
        x = self.atom()
        if self.peek()[1] == "^":
            _, _, pos = self.take()
            kind, v, npos = self.take()
            if kind not in ("nat", "zero"):
                raise ParseError("expected an exponent", npos)
            k = int(v)
            if k == 0:
                raise ParseError("exponent must be positive", npos)
            out = x
            for _ in range(k - 1):
                out = self._cup(out, x, pos)
            x = out
        return x

    def atom(self):
        kind, v, pos = self.take()
        if v == "(" and kind == "op":
            x = self.element()
            self.expect(")")
            return x
        if kind == "zero":
            return _Zero()
        if kind == "batom":
            self.set_ring("B", pos)
            return _b_atom(v)
        if kind == "datom":
            self.set_ring("D", pos)
            return _d_atom(v)
        if kind == "wrap":
            self.set_ring("D", pos)
            inner = _Parser.__new__(_Parser)
            inner.toks, inner.i, inner.ring = self.toks, self.i, "B"
            x = inner.element()
            self.i = inner.i
            self.expect(")")
            x = hb.as_element(x) if not isinstance(x, _Zero) else hb.ZERO
            if v[0] == "r":
                return hd.rho(x)
            try:
                return hd.signed(x, hd.PLUS if v[1] == "+" else hd.MINUS)
            except ValueError as e:
                raise ParseError(str(e), pos) from None
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


class _Zero:
    """The literal 0 before its ring is known."""


def _b_atom(v):
    nums = list(map(int, re.findall(r"\d+", v)))
    if v[0] == "d":
        return hb.delta(nums[0]) if nums[0] else hb.unit(0)
    if v[0] == "u":
        return hb.unit(nums[0])
    k, m = nums
    if k == 0:
        raise ValueError("gamma needs k >= 1")
    return hb.gamma(k, m) if m else hb.unit(0)


def _d_atom(v):
    if v in ("e+", "e-"):
        return hd.one_plus() if v == "e+" else hd.one_minus()
    nums = list(map(int, re.findall(r"\d+", v)))
    if v[0] == "D":
        return hd.delta0(nums[0], nums[1])
    if v[0] == "U":
        return hd.unit_d(nums[0])
    return hd.gamma_pm(nums[0], nums[1], hd.PLUS if v[1] == "+" else hd.MINUS)


def parse(text):
    """Parse an expression; returns (ring, element)."""
    p = _Parser(text)
    try:
        x = p.parse()
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(str(e), 0) from None
    ring = p.ring or "B"
    if isinstance(x, _Zero):
        x = hd.ZERO_D if ring == "D" else hb.ZERO
    return ring, x


# ---------------------------------------------------------------- output

def _base(t):
    return t.base if isinstance(t, hd.ChargedMonomial) else t


def _charge(t):
    if not isinstance(t, hd.ChargedMonomial):
        return None
    return {hd.NEUTRAL: "0", hd.PLUS: "+", hd.MINUS: "-"}[t.charge]


def mono_json(t):
    return {"blocks": [{"width": b.width, "profile": list(b.profile)} for b in _base(t).blocks],
            "charge": _charge(t)}


def element_json(ring, x):
    terms = sorted(x.terms)
    cd = sorted({(t.component, t.degree) for t in terms})
    comp = cd[0][0] if len(cd) == 1 else None
    deg = cd[0][1] if len(cd) == 1 else None
    return {"ring": ring, "component": comp, "degree": deg,
            "monomials": [mono_json(t) for t in terms]}


def _tensor_str(ring, t):
    return hd.tensor_str_d(t) if ring == "D" else hb.tensor_str(t)


def _svg_page(monos):
    """Stack skyline SVGs vertically in one document."""
    parts, y, width = [], 0, 0
    for m in monos:
        svg = hb.render(_base(m), "svg")
        w = int(re.search(r'width="(\d+)"', svg).group(1))
        h = int(re.search(r'height="(\d+)"', svg).group(1))
        inner = svg[svg.index(">") + 1: svg.rindex("</svg>")]
        parts.append(f'<g transform="translate(0,{y})">{inner}</g>')
        y += h + 10
        width = max(width, w)
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{max(y - 10, 0)}">'
            + "".join(parts) + "</svg>\n")


# ---------------------------------------------------------------- verbs

def _cmd_basis(args, out):
    if args.ring == "B":
        monos = hb.basis(args.n, args.deg)
    else:
        monos = hd.basis_d(args.n, args.deg)
    monos = sorted(monos)
    if args.format == "json":
        x = {"ring": args.ring, "component": args.n, "degree": args.deg,
             "monomials": [mono_json(m) for m in monos]}
        out.write(json.dumps(x, indent=2) + "\n")
    elif args.format == "svg":
        out.write(_svg_page(monos))
    else:
        for m in monos:
            out.write(f"{m}\n")
    return 0


def _cmd_eval(args, out):
    ring, x = parse(args.expr)
    if args.op == "coprod":
        t = hd.coproduct_d(x) if ring == "D" else hb.coproduct(x)
        out.write(_tensor_str(ring, t) + "\n")
    elif args.format == "json":
        out.write(json.dumps(element_json(ring, x), indent=2) + "\n")
    else:
        out.write(f"{x}\n")
    return 0


def _cmd_restrict(args, out):
    ring, x = parse(args.expr)
    if args.site == "all":
        fam = q.quillen_map_d(x) if ring == "D" else q.quillen_map_b(x)
        out.write(json.dumps(q.family_to_json(fam), indent=2, sort_keys=True) + "\n")
        return 0
    site = q.parse_site(args.site)
    kind = "D" if isinstance(site, q.SiteD) else "B"
    if kind != ring:
        raise ParseError(f"site {args.site} does not belong to ring {ring}", 0)
    poly = q.restrict_d(x, site) if ring == "D" else q.restrict_b(x, site)
    out.write(f"{poly}\n")
    return 0


def _cmd_sq(args, out):
    ring, x = parse(args.expr)
    y = steenrod.sq(args.i, x)
    if args.format == "json":
        out.write(json.dumps(element_json(ring, y), indent=2) + "\n")
    else:
        out.write(f"{y}\n")
    return 0


def _cmd_render(args, out):
    ring, x = parse(args.expr)
    terms = sorted(x.terms)
    if args.format == "svg":
        out.write(_svg_page(terms))
        return 0
    for t in terms:
        out.write(f"{t}\n")
        out.write(hb.render(_base(t), "ascii"))
    if not terms:
        out.write("0\n")
    return 0


def _cmd_verify(args, out):
    from . import verify
    report = verify.run_suite(args.suite, max_n=args.max_n, max_deg=args.max_deg,
                              cache_dir=args.cache_dir)
    for line in report.lines:
        out.write(line + "\n")
    out.write(("PASS" if report.ok else "FAIL") + f" verify {args.suite}\n")
    return 0 if report.ok else 1


def build_parser():
    p = argparse.ArgumentParser(prog="hopfcox", description="Mod-2 cohomology Hopf rings of type B and D.")
    sub = p.add_subparsers(dest="verb", required=True)

    b = sub.add_parser("basis", help="additive basis in one component and degree")
    b.add_argument("--ring", choices=["B", "D"], default="B")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--deg", type=int, required=True)
    b.add_argument("--format", choices=["text", "json", "svg"], default="text")
    b.set_defaults(fn=_cmd_basis)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("--op", choices=["coprod", "none"], default="none")
    e.add_argument("--format", choices=["text", "json"], default="text")
    e.add_argument("expr")
    e.set_defaults(fn=_cmd_eval)

    r = sub.add_parser("restrict", help="restrict to an elementary abelian site")
    r.add_argument("expr")
    r.add_argument("--site", required=True, help='e.g. "B:(2,1)", "D:(4,4):s0" or "all"')
    r.set_defaults(fn=_cmd_restrict)

    s = sub.add_parser("sq", help="Steenrod square")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("expr")
    s.set_defaults(fn=_cmd_sq)

    d = sub.add_parser("render", help="skyline diagrams")
    d.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    d.add_argument("expr")
    d.set_defaults(fn=_cmd_render)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["betti", "axioms", "relations", "steenrod", "oracle"])
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--max-deg", type=int, default=None)
    v.add_argument("--cache-dir", default=None, help="store coboundary matrices as triplet files")
    v.set_defaults(fn=_cmd_verify)
    return p


def run(argv, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    try:
        return args.fn(args, out)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return 2
    except (ValueError, TypeError, KeyError) as e:
        err.write(f"error: {e}\n")
        return 2


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
