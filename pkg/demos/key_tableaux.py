"""Two combinatorial models of the key polynomial for (0,3,0,2).

Quasi-Yamanouchi Kohnert tableaux and standard key tableaux are matched by
``ascend``/``descend``; weight on one side is weak descent on the other.
"""

from weakdual import bases as B
from weakdual import tableaux as tb

a = (0, 3, 0, 2)

print(f"standard key tableaux of shape {a}")
for T in tb.enumerate_skt(a):
    des = tb.weak_descent_tableau(T)
    print(T.render())
    print("   des =", "virtual" if des is None else des)
    print()

print("quasi-Yamanouchi Kohnert tableaux, and the key tableau each one ascends to")
for D in tb.enumerate_qkt(a):
    T = tb.ascend(D)
    print(D.render())
    print("   weight =", D.weight(), " ascend gives des =", tb.weak_descent_tableau(T))
    assert tb.descend(T) == D
    print()

print("key polynomial in slides:", B.key_slide_expansion(a).to_text())
print("in monomials:            ", B.key_poly(a).to_text())

# Falling cells and complementing labels turns SKT into SYT of the sorted shape.
print()
print("flattened yamanouchi tableau:")
print(tb.phi_flatten(tb.yamanouchi_key(a)).render())
