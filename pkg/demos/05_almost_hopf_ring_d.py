"""The almost-Hopf ring A'_D: charges, restriction, involution and transfer."""

from hopfcox import hopf_b as hb
from hopfcox import hopf_d as hd

gp, gm = hd.gamma_pm(1, 1, hd.PLUS), hd.gamma_pm(1, 1, hd.MINUS)
print("g+ * g- =", hd.cup_d(gp, gm))
print("e- o e- =", hd.odot_d(hd.one_minus(), hd.one_minus()))
print("rho(d2) =", hd.rho(hb.delta(2)))
print("iota(g+) =", hd.iota(gp))
print("tr(rho(d2)) =", hd.tr(hd.rho(hb.delta(2))))
print("delta0_{1:1} =", hd.delta0(1, 1))
print("coproduct of g+_{1,2} =", hd.tensor_str_d(hd.coproduct_d(hd.gamma_pm(1, 2))))
print("basis of H^2(D_4):")
for m in hd.basis_d(4, 2):
    print(" ", m)
