"""Reduced words of 42153 and what they say about its Schubert polynomial.

Run with ``python demos/reduced_words_and_schubert.py``.
"""

from weakdual import bases as B
from weakdual import permwords as pw

w = pw.parse_permutation("42153")
words = pw.reduced_words(w)
print(f"{pw.format_permutation(w)} has {len(words)} reduced words of length {pw.inv(w)}")

# Every word contributes F_Des to the Stanley symmetric function.
for rho in words:
    des = pw.weak_descent_word(rho, 4)
    shown = "virtual" if des is None else des
    print("  ", "".join(map(str, rho)), "Des", pw.descent_composition(rho), "des", shown)

print()
print("Stanley, F basis:    ", B.stanley_F_expansion(w).to_text())
print("Stanley, Schur basis:", B.stanley_schur_expansion(w).to_text())

# Only the two nonvirtual words survive in the Schubert polynomial.
print("Schubert, slides:    ", B.schubert_slide_expansion(w).to_text())
print("Schubert, keys:      ", B.schubert_key_expansion(w).to_text())

# Shifting by 1^m removes virtual words; the slide expansion then settles
# and flattens back to the Stanley function.
m = pw.stabilization_shift(w)
print()
print(f"after shifting by 1^{m} no word is virtual")
for k in range(m + 2):
    v = pw.shift(w, k)
    exp = B.schubert_slide_expansion(v)
    print(f"  1^{k} x w = {pw.format_permutation(v)}: {len(exp)} slide terms, {pw.virtual_count(v)} virtual words")
stable = B.stable_F_expansion(B.schubert_slide_expansion(pw.shift(w, m + 1)))
print("flattened limit equals Stanley:", stable == B.stanley_F_expansion(w))
