"""Products and skew shapes: where keys stay positive and where they do not."""

from weakdual import bases as B
from weakdual import foundations as F

print("shuffle F_(2,3) F_(2,1), coefficient of F_(3,2,3):", B.shuffle_product((2, 3), (2, 1))[(3, 2, 3)])
print()

exp = B.slide_product((2, 0, 3), (0, 2, 1), check=True)
print(f"slide product (2,0,3) x (0,2,1): {len(exp)} terms")
for line in exp.to_lines():
    print("  ", line)
print()

print("key (0,2,1,0) x key (0,1,0,1):", B.key_product((0, 2, 1, 0), (0, 1, 0, 1)).to_text())
print("key (0,2,1,0) x key (0,0,1,1):", B.key_product((0, 2, 1, 0), (0, 0, 1, 1)).to_text())
print("key (0,1,0) x s_11(x1,x2,x3): ", B.key_times_schur((0, 1, 0), (1, 1), 3).to_text())
print()

print("skew key (3,2,3)/(0,1,2):      ", B.skew_key_expansion((3, 2, 3), (2, 1)).to_text())
print("skew key (0,2,1,2)/(0,1,0,0):  ", B.skew_key_signed_expansion((0, 2, 1, 2), (0, 1, 0, 0)).to_text())
print("its stable limit:              ", B.skew_key_stable_limit((0, 2, 1, 2), (0, 1, 0, 0)).to_text())
print("skew Schur (3,3,2)/(2,1):      ", B.skew_schur_expansion((3, 3, 2), (2, 1)).to_text())

# every expansion above re-verifies itself against monomial arithmetic;
# here is one check spelled out
lhs = B.key_poly((0, 1, 0)) * B.schur_poly((1, 1), 3)
rhs = F.realize(B.key_times_schur((0, 1, 0), (1, 1), 3), 3)
print()
print("monomial check of the key-times-Schur rule:", lhs == rhs)
