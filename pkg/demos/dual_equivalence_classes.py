"""Dual equivalence on reduced words, and the weak version that sees keys.

The strong involutions split R(42153) into Schur-sized classes.  The weak
involutions (after stabilizing) split it into classes that each carry a
single key polynomial, and rectification names that key.
"""

from collections import Counter

from weakdual import dualequiv as de
from weakdual import permwords as pw
from weakdual import tableaux as tb

w = (4, 2, 1, 5, 3)

fam = de.reduced_word_family(w)
for cls in de.classes(fam):
    T = de.rectify(fam, cls.members[0])
    print(f"class of size {len(cls)} rectifies to shape {T.shape}")
report = de.check_dual_equivalence(fam)
print(report.summary())
print()

# weak structure on the stabilized permutation
m = pw.stabilization_shift(w)
weak = de.reduced_word_family(pw.shift(w, m), weak=True)
print(de.check_weak_dual_equivalence(weak).summary())
anchors = Counter()
for rho, (_, back) in de.word_weak_rectification(w, m).items():
    if back is not None and tb.weak_descent_tableau(back) == back.shape:
        anchors[back.shape] += 1
        print("yamanouchi word", "".join(map(str, rho)), "->")
        print(back.render())
print("keys found:", dict(anchors))
print()

# Products with a non-increasing right factor break the weak axioms.
bad = de.product_skt_family((0,) * 4 + (0, 2, 1, 0), (0,) * 4 + (0, 1, 0, 1))
good = de.product_skt_family((0,) * 4 + (0, 2, 1, 0), (0,) * 4 + (0, 0, 1, 1))
print(de.check_weak_dual_equivalence(bad).summary())
print(de.check_weak_dual_equivalence(good).summary())
