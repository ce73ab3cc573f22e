"""The Hopf ring A_B: generators, the three products and the skyline figure."""

from hopfcox import hopf_b as hb

d4g = hb.cup(hb.delta(4), hb.gamma(1, 2))
print("coproduct of", d4g, "=", hb.tensor_str(hb.coproduct(d4g)))

x = hb.odot(hb.cup(hb.delta(4), hb.gamma(1, 2)), hb.cup(hb.delta(2), hb.gamma(1, 1)))
print("transfer product:", hb.odot(x, hb.delta(2)))

a = hb.odot(hb.gamma(1, 1), hb.delta(1))
print("cup square of", a, "=", hb.cup(a, a))
print("gamma_{1,1} o gamma_{1,1} =", hb.odot(hb.gamma(1, 1), hb.gamma(1, 1)))

print("basis of H^3(B_3):")
for m in hb.basis(3, 3):
    print(" ", m)
print(hb.render(next(iter(hb.as_element(d4g)))))
