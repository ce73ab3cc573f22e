"""Signed permutations: group orders, lengths and minimal coset representatives."""

from collections import Counter

from hopfcox import coxeter

for kind, n in (("B", 3), ("D", 3), ("B", 4)):
    els = coxeter.elements(kind, n)
    lengths = Counter(coxeter.length(w, kind) for w in els)
    print(f"{kind}{n}: order {len(els)}, length distribution {sorted(lengths.items())}")

w0 = coxeter.longest_element("B", 3)
print("longest element of B3", w0, "length", coxeter.length(w0))
reps = coxeter.min_coset_reps((0, 1, 2), (1, 2), "B", 3)
print("minimal coset reps of <s1,s2> = S3 in B3:", len(reps))
