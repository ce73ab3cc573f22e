"""Steenrod squares by Quillen pullback, and the closed-form discrepancy report."""

import json

from hopfcox import hopf_b as hb
from hopfcox import steenrod

for i in range(3):
    print(f"Sq^{i} d2 =", steenrod.sq(i, hb.delta(2)))
print("total Sq of g1_2 =", " + ".join(map(str, steenrod.total_sq(hb.gamma(1, 2)))))

for row in steenrod.gamma_discrepancies(8):
    print(json.dumps(row.as_dict(), sort_keys=True))
