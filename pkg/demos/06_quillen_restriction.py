"""Restriction to elementary abelian subgroups, and recovering a product by solving."""

from hopfcox import hopf_b as hb
from hopfcox import quillen as q

print("Dickson invariants of V_2:", q.dickson(2, 0), "|", q.dickson(2, 1))
x = hb.delta(2)
for pi in q.sites_b(2):
    print(f"restrict d2 to {q.site_label_b(pi)}:", q.restrict_b(x, pi))

a = hb.odot(hb.gamma(1, 1), hb.delta(2))
b = hb.odot(hb.delta(3), hb.unit(1))
print("cup by the Hopf ring rule:    ", hb.cup(a, b))
print("cup through the Quillen solve:", q.cup_b_quillen(a, b, 4, 6))
print("restriction rank, basis size of H^4(B_4):", q.restriction_rank_b(4, 4))
