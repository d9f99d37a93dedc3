"""Schur, Stanley, Schubert, key and skew key polynomials, and the product
rules built on the involution machinery.

Every positivity expansion computed from anchors (super-standard or
yamanouchi class members) is cross-checked against an independent route
before it is returned; a mismatch raises :class:`OracleMismatch`.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import ceil, comb
from typing import Callable, Sequence

from . import dualequiv as de
from . import permwords as pw
from . import tableaux as tb
from .foundations import (
    FUNDAMENTAL_F,
    KEY,
    SCHUR,
    SLIDE,
    VIRTUAL,
    BasisExpansion,
    Composition,
    F_sum,
    Polynomial,
    expand_in_key,
    expand_in_slide,
    flat,
    increasing_composition,
    pad,
    slide_sum,
)


class OracleMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""


class PositivityError(AssertionError):
    """An expansion that must be nonnegative has a negative coefficient."""


def _require_nonnegative(exp: BasisExpansion, what: str) -> BasisExpansion:
    if not exp.is_nonnegative():
        raise PositivityError(f"{what} has a negative coefficient: {exp.to_text()}")
    return exp


def _require_equal(x, y, what: str):
    if x != y:
        raise OracleMismatch(f"{what}: {x!r} != {y!r}")
    return x


# ---------------------------------------------------------------------------
# Schur and Stanley


@lru_cache(maxsize=None)
def _schur(lam: Composition, k: int) -> Polynomial:
    return F_sum((tb.syt_descent_composition(T) for T in tb.enumerate_syt(lam)), k)


def schur_poly(lam: Sequence[int], k: int) -> Polynomial:
    """Schur polynomial in ``x_1..x_k`` as a sum of fundamental quasisymmetric
    polynomials over standard Young tableaux."""
    lam = tuple(lam)
    if len(lam) > k:
        return Polynomial.zero(k)
    return _schur(lam, k)


def schur_F_expansion(lam: Sequence[int]) -> BasisExpansion:
    return BasisExpansion(FUNDAMENTAL_F, de.syt_des_counter(tuple(lam)))


def stanley_F_expansion(w: Sequence[int]) -> BasisExpansion:
    return BasisExpansion(FUNDAMENTAL_F, Counter(pw.descent_composition(r) for r in pw.reduced_words(w)))


def stanley_poly(w: Sequence[int], nvars: int | None = None) -> Polynomial:
    w = tuple(w)
    if nvars is None:
        nvars = max(pw.inv(w), 1)
    return F_sum((pw.descent_composition(r) for r in pw.reduced_words(w)), nvars)


def _schur_to_F(exp: BasisExpansion) -> BasisExpansion:
    out: Counter = Counter()
    for lam, c in exp.items():
        for alpha, m in de.syt_des_counter(lam).items():
            out[alpha] += c * m
    return BasisExpansion(FUNDAMENTAL_F, out)


def _anchor_counts(fam: de.InvolutionFamily) -> Counter:
    counts: Counter = Counter()
    for cls in de.classes(fam):
        phi = de.rectification(fam, cls.members[0])
        for x, T in phi.items():
            if T == tb.super_standard(T.shape):
                counts[T.shape] += 1
    return counts


def stanley_schur_expansion(w: Sequence[int]) -> BasisExpansion:
    """Count super-standard reduced words by shape; cross-checked in the
    fundamental basis against the direct descent expansion."""
    fam = de.reduced_word_family(w)
    exp = BasisExpansion(SCHUR, _anchor_counts(fam))
    _require_equal(_schur_to_F(exp), stanley_F_expansion(w), "Stanley Schur expansion")
    return exp


def skew_schur_expansion(lam: Sequence[int], mu: Sequence[int]) -> BasisExpansion:
    lam, mu = tuple(lam), tuple(mu)
    fam = de.syt_family(lam, mu)
    exp = BasisExpansion(SCHUR, _anchor_counts(fam))
    direct = BasisExpansion(FUNDAMENTAL_F, Counter(fam.Des(T) for T in fam.carrier))
    _require_equal(_schur_to_F(exp), direct, "skew Schur expansion")
    return exp


def skew_schur_poly(lam: Sequence[int], mu: Sequence[int], k: int) -> Polynomial:
    return F_sum((tb.syt_descent_composition(T) for T in tb.enumerate_syt(lam, mu)), k)


def lr_coefficients(mu: Sequence[int], nu: Sequence[int]) -> BasisExpansion:
    """Schur expansion of ``s_mu s_nu`` from super-standard product tableaux."""
    mu, nu = tuple(mu), tuple(nu)
    fam = de.product_syt_family(mu, nu)
    exp = BasisExpansion(SCHUR, _anchor_counts(fam))
    direct = BasisExpansion(FUNDAMENTAL_F, Counter(fam.Des(T) for T in fam.carrier))
    _require_equal(_schur_to_F(exp), direct, "Littlewood-Richardson expansion")
    return exp


# ---------------------------------------------------------------------------
# Schubert and key


def schubert_nvars(w: Sequence[int]) -> int:
    return max(len(w) - 1, 1)


def schubert_slide_expansion(w: Sequence[int], nvars: int | None = None) -> BasisExpansion:
    w = tuple(w)
    if nvars is None:
        nvars = schubert_nvars(w)
    cnt = Counter(pw.weak_descent_word(r, nvars) for r in pw.reduced_words(w))
    cnt.pop(VIRTUAL, None)
    return BasisExpansion(SLIDE, cnt)


def schubert_poly(w: Sequence[int], nvars: int | None = None) -> Polynomial:
    """Sum of slide polynomials over non-virtual reduced words."""
    w = tuple(w)
    if nvars is None:
        nvars = schubert_nvars(w)
    return slide_sum((pw.weak_descent_word(r, nvars) for r in pw.reduced_words(w)), nvars)


def qkt_slide_counter(a: Sequence[int]) -> Counter:
    cnt = Counter(D.weight() for D in tb.enumerate_qkt(a, virtual=False))
    cnt.pop(VIRTUAL, None)
    return cnt


@lru_cache(maxsize=None)
def _key(a: Composition) -> Polynomial:
    skt = de.key_slide_counter(a)
    _require_equal(qkt_slide_counter(a), skt, f"key polynomial {a}: Kohnert vs key tableaux")
    return slide_sum(skt.elements(), len(a))


def key_poly(a: Sequence[int]) -> Polynomial:
    """Key polynomial; both tableau models are computed and must agree."""
    return _key(tuple(a))


def key_slide_expansion(a: Sequence[int]) -> BasisExpansion:
    key_poly(a)
    return BasisExpansion(SLIDE, de.key_slide_counter(tuple(a)))


def slide_to_key(exp: BasisExpansion) -> BasisExpansion:
    """Key expansion of a slide expansion, by triangular subtraction of the
    slide expansions of key polynomials."""
    if exp.basis != SLIDE:
        raise ValueError("expected a slide expansion")
    residual = Counter(exp.terms)
    out: Counter = Counter()
    while residual:
        a = min(residual)
        c = residual[a]
        out[a] += c
        for b, m in de.key_slide_counter(a).items():
            residual[b] -= c * m
            if residual[b] == 0:
                del residual[b]
    return BasisExpansion(KEY, out)


def _weak_anchor_counts(make_family: Callable[[int], de.InvolutionFamily], m: int) -> Counter:
    """Yamanouchi counts after prepending ``m`` zero rows, pulled back."""
    fam = make_family(m)
    counts: Counter = Counter()
    for cls in de.classes(fam):
        psi = de.weak_rectification(fam, cls.members[0])
        a = min(T.shape for T in psi.values())
        if any(a[:m]):
            continue
        counts[a[m:]] += 1
    return counts


def schubert_key_expansion(w: Sequence[int]) -> BasisExpansion:
    """Count yamanouchi reduced words of the stabilized permutation whose
    shape has enough leading zeros; cross-checked against triangular
    expansion of the Schubert polynomial."""
    w = tuple(w)
    m = pw.stabilization_shift(w)
    nv = schubert_nvars(w)

    def make(k):
        return de.reduced_word_family(pw.shift(w, k), weak=True)

    raw = _weak_anchor_counts(make, m)
    exp = BasisExpansion(KEY, {pad(a, nv): c for a, c in raw.items()})
    _require_equal(exp, expand_in_key(schubert_poly(w)), f"Schubert key expansion of {pw.format_permutation(w)}")
    return _require_nonnegative(exp, "Schubert key expansion")


# ---------------------------------------------------------------------------
# shuffle and slide products


def _weak_runs(word: Sequence[int]) -> list[list[int]]:
    runs: list[list[int]] = []
    for x in word:
        if runs and runs[-1][-1] <= x:
            runs[-1].append(x)
        else:
            runs.append([x])
    return runs


def word_descent_composition(word: Sequence[int]) -> Composition:
    """Lengths of the weakly increasing runs, left to right."""
    return tuple(len(r) for r in _weak_runs(word))


def plateau_witness(alpha: Sequence[int], offset: int = 0) -> list[int]:
    """``k^{alpha_1} (k-1)^{alpha_2} ... 1^{alpha_k}`` shifted by ``offset``."""
    k = len(alpha)
    return [offset + k - j for j, part in enumerate(alpha) for _ in range(part)]


def distinct_witness(alpha: Sequence[int], parity: int) -> list[int]:
    """Distinct letters of one parity, one increasing block per run, blocks
    decreasing from left to right."""
    word = []
    for j, part in enumerate(alpha):
        start = sum(alpha[j + 1:])
        word.extend(2 * (start + t) + parity for t in range(1, part + 1))
    return word


def shuffles(A: Sequence[int], B: Sequence[int]):
    n, k = len(A) + len(B), len(A)
    for slots in combinations(range(n), k):
        slot_set = set(slots)
        ia, ib = iter(A), iter(B)
        yield [next(ia) if p in slot_set else next(ib) for p in range(n)]


def shuffle_product(alpha: Sequence[int], beta: Sequence[int], witness: str = "plateau") -> BasisExpansion:
    alpha, beta = tuple(alpha), tuple(beta)
    if witness == "plateau":
        A, B = plateau_witness(alpha), plateau_witness(beta, len(alpha))
    elif witness == "distinct":
        A, B = distinct_witness(alpha, 0), distinct_witness(beta, 1)
    else:
        raise ValueError(f"unknown witness {witness!r}")
    _require_equal(word_descent_composition(A) if A else (), alpha, "witness A")
    _require_equal(word_descent_composition(B) if B else (), beta, "witness B")
    return BasisExpansion(FUNDAMENTAL_F, Counter(word_descent_composition(C) if C else () for C in shuffles(A, B)))


def slide_witness(a: Sequence[int], parity: int) -> list[int]:
    """``(2n-1)^{a_n} ... 3^{a_2} 1^{a_1}`` (parity 1) or the even analogue."""
    n = len(a)
    return [2 * i - parity for i in range(n, 0, -1) for _ in range(a[i - 1])]


def slide_word_des(word: Sequence[int], n: int) -> Composition | None:
    runs = _weak_runs(word)
    if not runs:
        return (0,) * n
    blocks = list(reversed(runs))
    c = [0] * len(blocks)
    for i in range(len(blocks) - 1, -1, -1):
        first = ceil(blocks[i][0] / 2)
        c[i] = first if i == len(blocks) - 1 else min(first, c[i + 1] - 1)
    if c[0] <= 0:
        return VIRTUAL
    out = [0] * n
    for blk, r in zip(blocks, c):
        out[r - 1] = len(blk)
    return tuple(out)


def slide_product(a: Sequence[int], b: Sequence[int], check: bool = False) -> BasisExpansion:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("slide product needs equal lengths")
    n = len(a)
    A, B = slide_witness(a, 1), slide_witness(b, 0)
    cnt = Counter(slide_word_des(C, n) for C in shuffles(A, B))
    cnt.pop(VIRTUAL, None)
    exp = BasisExpansion(SLIDE, cnt)
    if check:
        from .foundations import slide

        _require_equal(exp, expand_in_slide(slide(a) * slide(b)), "slide product")
    return exp


# ---------------------------------------------------------------------------
# skew keys and key products


def skew_key_slide_expansion(d: Sequence[int], a: Sequence[int]) -> BasisExpansion:
    cnt = Counter(tb.weak_descent_tableau(T) for T in tb.enumerate_skew_skt(d, a))
    cnt.pop(VIRTUAL, None)
    return BasisExpansion(SLIDE, cnt)


def skew_key_poly(d: Sequence[int], a: Sequence[int]) -> Polynomial:
    d = tuple(d)
    return slide_sum(Counter(skew_key_slide_expansion(d, a).terms).elements(), len(d))


def skew_key_expansion(d: Sequence[int], lam: Sequence[int]) -> BasisExpansion:
    """Key expansion of the skew key polynomial with weakly increasing inner
    shape, from yamanouchi skew tableaux."""
    d = tuple(d)
    a = increasing_composition(lam, len(d))
    if any(x > y for x, y in zip(a, d)):
        raise ValueError(f"{a} is not contained in {d}")
    m = sum(d) - sum(a)

    def make(k):
        z = (0,) * k
        return de.skew_skt_family(z + d, z + a)

    exp = BasisExpansion(KEY, _weak_anchor_counts(make, m))
    _require_equal(exp, expand_in_key(skew_key_poly(d, a)), f"skew key expansion {d}/{a}")
    return _require_nonnegative(exp, "skew key expansion")


def skew_key_signed_expansion(d: Sequence[int], a: Sequence[int]) -> BasisExpansion:
    """Key expansion of any skew key polynomial; signs are allowed."""
    return expand_in_key(skew_key_poly(d, a))


def skew_key_stable_limit(d: Sequence[int], a: Sequence[int]) -> BasisExpansion:
    """Schur expansion of the limit of the skew key polynomials of
    ``0^m d / 0^m a``, from super-standard skew key tableaux."""
    fam = de.skew_skt_family(tuple(d), tuple(a))
    exp = BasisExpansion(SCHUR, _anchor_counts(fam))
    direct = BasisExpansion(FUNDAMENTAL_F, Counter(fam.Des(T) for T in fam.carrier))
    _require_equal(_schur_to_F(exp), direct, "skew key stable limit")
    return exp


def F_to_schur(exp: BasisExpansion) -> BasisExpansion:
    """Schur expansion of a symmetric F-expansion, peeling off the
    lexicographically largest partition index each step."""
    residual = Counter(exp.terms)
    out: Counter = Counter()
    while residual:
        parts = [alpha for alpha in residual if list(alpha) == sorted(alpha, reverse=True)]
        if not parts:
            raise ValueError("F-expansion is not symmetric")
        lam = max(parts)
        c = residual[lam]
        out[lam] += c
        for alpha, m in de.syt_des_counter(lam).items():
            residual[alpha] -= c * m
            if residual[alpha] == 0:
                del residual[alpha]
    return BasisExpansion(SCHUR, out)


def split_product(P: tb.Filling) -> tuple[tb.Filling, tb.Filling, str]:
    """Inverse of :func:`product_tableau`."""
    a, b = P.shape
    sub: tuple[dict, dict] = ({}, {})
    for cell, v in P.cells:
        f = P.factor(cell)
        r, c = cell
        sub[f][(r, c - (P.split - 1) * f)] = v
    word = "".join("A" if v in set(sub[0].values()) else "B" for v in range(P.n, 0, -1))
    out = []
    for f, shape in ((0, a), (1, b)):
        order = {v: k for k, v in enumerate(sorted(sub[f].values()), 1)}
        out.append(tb.Filling.build(tb.KEY, shape, {cell: order[v] for cell, v in sub[f].items()}))
    return out[0], out[1], word


def transported_des(P: tb.Filling) -> Composition | None:
    """Weak descent of the shuffle matched to ``P`` by the product bijection."""
    T, U, C = split_product(P)
    a, b = P.shape
    n = max(len(a), len(b))
    da, db = tb.weak_descent_tableau(T, n), tb.weak_descent_tableau(U, n)
    if da is VIRTUAL or db is VIRTUAL:
        return VIRTUAL
    ia, ib = iter(slide_witness(da, 1)), iter(slide_witness(db, 0))
    return slide_word_des([next(ia) if x == "A" else next(ib) for x in C], n)


PRODUCT_MODELS = ("bijection", "tableau")


def key_product_slide_model(a: Sequence[int], b: Sequence[int], model: str = "bijection",
                            check: bool = True) -> BasisExpansion:
    """Slide expansion of ``kappa_a kappa_b`` summed over product key tableaux.

    ``model="bijection"`` reads each tableau's weak descent off its matched
    shuffle; ``model="tableau"`` uses the run decomposition of the product
    filling itself, which does not always reproduce the product.
    """
    a, b = tuple(a), tuple(b)
    if model not in PRODUCT_MODELS:
        raise ValueError(f"unknown model {model!r}")
    n = max(len(a), len(b))
    a, b = pad(a, n), pad(b, n)
    stat = transported_des if model == "bijection" else (lambda T: tb.weak_descent_tableau(T, n))
    cnt = Counter(stat(T) for T in tb.enumerate_product_skt(a, b))
    cnt.pop(VIRTUAL, None)
    exp = BasisExpansion(SLIDE, cnt)
    if check:
        _require_equal(exp, expand_in_slide(key_poly(a) * key_poly(b)), f"key product {model} model")
    return exp


def key_product(a: Sequence[int], b: Sequence[int]) -> BasisExpansion:
    """Signed key expansion of a product of two key polynomials."""
    exp = slide_to_key(key_product_slide_model(a, b))
    n = max(len(a), len(b))
    _require_equal(exp, expand_in_key(key_poly(pad(a, n)) * key_poly(pad(b, n))), "key product")
    return exp


def key_times_schur(b: Sequence[int], lam: Sequence[int], n: int) -> BasisExpansion:
    """Key expansion of ``kappa_b s_lam(x_1..x_n)`` from yamanouchi product
    tableaux with the partition factor on the right."""
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    b = tuple(b)
    if len(b) > n:
        raise ValueError(f"composition {b} is longer than {n}")
    b = pad(b, n)
    a = increasing_composition(lam, n)
    m = sum(a) + sum(b)

    def make(k):
        z = (0,) * k
        return de.product_skt_family(z + b, z + a)

    exp = BasisExpansion(KEY, _weak_anchor_counts(make, m))
    _require_equal(exp, expand_in_key(key_poly(b) * schur_poly(lam, n)), "key times Schur")
    return _require_nonnegative(exp, "key times Schur")


def product_tableau(T: tb.Filling, U: tb.Filling, C: str) -> tb.Filling:
    """Combine ``T`` in SKT(a), ``U`` in SKT(b) and a word in A, B.

    Positions of ``C`` are numbered from the right, so its last letter is
    position 1; the ``k``-th A-position receives the cell of ``k`` in ``T``.
    """
    n = len(C)
    a_pos = [n - p for p in range(n - 1, -1, -1) if C[p] == "A"]
    b_pos = [n - p for p in range(n - 1, -1, -1) if C[p] == "B"]
    if len(a_pos) != T.n or len(b_pos) != U.n:
        raise ValueError("word does not match the tableau sizes")
    entries = {}
    for cell, v in T.cells:
        entries[(0, cell[0], cell[1])] = a_pos[v - 1]
    for cell, v in U.cells:
        entries[(1, cell[0], cell[1])] = b_pos[v - 1]
    return tb.product_filling(T.shape, U.shape, entries)


def product_count(a: Sequence[int], b: Sequence[int]) -> int:
    return len(tb.enumerate_skt(a)) * len(tb.enumerate_skt(b)) * comb(sum(a) + sum(b), sum(a))


def stable_F_expansion(exp: BasisExpansion) -> BasisExpansion:
    """Flatten a slide expansion into the fundamental quasisymmetric basis."""
    out: Counter = Counter()
    for a, c in exp.items():
        out[flat(a)] += c
    return BasisExpansion(FUNDAMENTAL_F, out)
