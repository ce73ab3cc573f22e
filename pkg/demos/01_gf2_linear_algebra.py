"""GF(2) linear algebra and the total Steenrod square on a polynomial ring."""

from hopfcox import gf2

m = gf2.BitMatrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
print("matrix", m.to_dense())
print("rank", gf2.rank(m), "nullity", gf2.nullity(m))
print("kernel", gf2.kernel_basis(m))
print("solve m x = (0,1,1):", gf2.solve(m, [0, 1, 1]))

xs = ("x", "y")
x, y = gf2.Gf2Poly.var(xs, "x"), gf2.Gf2Poly.var(xs, "y")
p = gf2.poly_mul(x, y)
print("p =", p)
for i in range(3):
    print(f"Sq^{i} p =", gf2.sq_component(p, i))
