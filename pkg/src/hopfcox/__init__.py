"""Mod-2 cohomology Hopf rings of the Coxeter groups of type B and D.

Modules: gf2 (linear algebra and polynomials over GF(2)), coxeter,
foxneuwirth (cochain complexes used as an oracle), hopf_b, hopf_d,
quillen (restriction to elementary abelian subgroups), steenrod, cli.
"""

__version__ = "0.1.0"
