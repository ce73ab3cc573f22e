"""Betti numbers of B_n and D_n from the Fox-Neuwirth / De Concini-Salvetti complexes."""

from hopfcox import foxneuwirth as fn

for group, ns in (("B", range(1, 6)), ("D", range(2, 5)), ("Dprime", range(2, 5))):
    for n in ns:
        row = [fn.betti(group, n, d) for d in range(n + 1)]
        print(f"{group:6} n={n}: {row}")

g = fn.generator_cochain("gamma", 1, 2)
print("gamma_{1,2} cochain", g, "cocycle:", fn.is_cocycle("B", g))
