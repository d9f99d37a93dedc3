from collections import Counter
from math import comb

from hypothesis import given, strategies as st
import pytest

from weakdual import foundations as F
from weakdual import tableaux as tb
from weakdual.foundations import VIRTUAL


def young(*rows_bottom_up):
    return tb.young_filling_from_rows(list(reversed(rows_bottom_up)))


def key(*rows_bottom_up):
    return tb.key_filling_from_rows(list(reversed(rows_bottom_up)))


small_shapes = [a for n in range(1, 7) for k in range(1, 5) for a in F.weak_compositions(n, k) if a[-1] or k == 1]


@pytest.mark.parametrize("lam,count", [((3, 2), 5), ((4,), 1), ((2, 2), 2), ((3, 1, 1), 6)])
def test_syt_counts(lam, count):
    assert len(tb.enumerate_syt(lam)) == count


def test_syt_descent_compositions_of_32():
    got = Counter(tb.syt_descent_composition(T) for T in tb.enumerate_syt((3, 2)))
    assert got == Counter([(3, 2), (2, 3), (2, 2, 1), (1, 3, 1), (1, 2, 2)])
    assert tb.syt_descent_composition(young([1, 2, 3], [4, 5])) == (3, 2)


def test_super_standard():
    assert tb.super_standard((3, 2)) == young([1, 2, 3], [4, 5])
    assert tb.super_standard((3, 1, 1)) == young([1, 2, 3], [4], [5])
    for lam in [(3, 2), (2, 2, 1), (4, 1)]:
        hits = [T for T in tb.enumerate_syt(lam) if tb.syt_descent_composition(T) == lam]
        assert hits == [tb.super_standard(lam)]


def test_skt_of_0302():
    got = {T: tb.weak_descent_tableau(T) for T in tb.enumerate_skt((0, 3, 0, 2))}
    assert len(got) == 5
    assert Counter(got.values()) == Counter([(0, 3, 0, 2), (2, 2, 0, 1), (1, 3, 0, 1), VIRTUAL, (2, 3, 0, 0)])


def test_skt_runs():
    Y = key([], [3, 2, 1], [], [5, 4])
    assert tb.skt_runs_and_descents(Y) == ([(5, 4), (3, 2, 1)], (3, 2))
    T = key([], [5, 4, 2], [], [3, 1])
    assert tb.skt_runs_and_descents(T) == ([(5, 4), (3, 2), (1,)], (1, 2, 2))
    assert tb.weak_descent_tableau(T) is VIRTUAL


def test_small_skt_counts():
    assert len(tb.enumerate_skt((4,))) == 1
    # only 2 above 1 satisfies the column condition
    assert tb.enumerate_skt((1, 1)) == [key([1], [2])]


def test_yamanouchi():
    assert tb.yamanouchi_key((0, 3, 0, 2)) == key([], [3, 2, 1], [], [5, 4])
    for a in [(0, 3, 0, 2), (3, 1, 0, 1), (1, 0, 2), (0, 2, 1, 2)]:
        hits = [T for T in tb.enumerate_skt(a) if tb.weak_descent_tableau(T) == a]
        assert hits == [tb.yamanouchi_key(a)]


def test_qkt_of_0302():
    qkt = tb.enumerate_qkt((0, 3, 0, 2))
    assert len(qkt) == 5
    assert all(tb.is_kohnert(D) and tb.is_quasi_yamanouchi(D) for D in qkt)
    assert Counter(D.weight() for D in qkt) == Counter([(0, 3, 0, 2), (2, 2, 0, 1), (1, 3, 0, 1), VIRTUAL, (2, 3, 0, 0)])


def test_qkt_of_a_single_row():
    assert tb.enumerate_qkt((3, 0)) == [tb.key_diagram_tableau((3, 0))]


@pytest.mark.parametrize("a", small_shapes[::7])
def test_qkt_and_skt_counts_agree(a):
    assert len(tb.enumerate_qkt(a)) == len(tb.enumerate_skt(a))


@pytest.mark.parametrize("a", [(0, 3, 0, 2), (2, 1, 2), (1, 0, 3, 1), (0, 2, 2, 1)])
def test_ascend_and_descend_are_inverse(a):
    for D in tb.enumerate_qkt(a):
        T = tb.ascend(D)
        assert tb.is_skt(T)
        assert tb.descend(T) == D
        assert tb.weak_descent_tableau(T) == D.weight()
    for T in tb.enumerate_skt(a):
        assert tb.ascend(tb.descend(T)) == T


def test_skew_skt_of_0212_over_0100():
    got = [tb.weak_descent_tableau(T) for T in tb.enumerate_skew_skt((0, 2, 1, 2), (0, 1, 0, 0))]
    assert Counter(got) == Counter([VIRTUAL, VIRTUAL, (1, 1, 0, 2), (0, 2, 0, 2), (0, 1, 2, 1)])


def test_skew_skt_counts():
    assert len(tb.enumerate_skew_skt((2, 1), (2, 1))) == 1
    # f^(3,1,1) + f^(3,2)
    assert len(tb.enumerate_skew_skt((3, 2, 3), (0, 1, 2))) == 11


@pytest.mark.parametrize("a,b", [((0, 2, 1, 0), (0, 1, 0, 1)), ((1, 0, 2), (0, 1, 1)), ((2, 0), (1, 1))])
def test_product_skt_count(a, b):
    got = len(tb.enumerate_product_skt(a, b))
    assert got == len(tb.enumerate_skt(a)) * len(tb.enumerate_skt(b)) * comb(sum(a) + sum(b), sum(a))


def test_phi_flatten_example():
    Y = key([], [3, 2, 1], [], [5, 4])
    # descent 3 of Y goes to descent 5 - 3 = 2
    assert tb.phi_flatten(Y) == young([1, 2, 5], [3, 4])
    assert tb.phi_flatten(key([3, 2, 1])) == young([1, 2, 3])


@pytest.mark.parametrize("a", [(0, 3, 0, 2), (2, 0, 2, 1), (1, 2, 0, 2), (0, 1, 1, 3)])
def test_phi_flatten_is_a_descent_complementing_bijection(a):
    T_all = tb.enumerate_skt(a)
    images = [tb.phi_flatten(T) for T in T_all]
    assert set(images) == set(tb.enumerate_syt(F.sort(a)))
    n = sum(a)
    for T, S in zip(T_all, images):
        assert sorted(n - i for i in tb.skt_descents(T)) == sorted(tb.syt_descents(S))


@given(st.sampled_from(small_shapes))
def test_skt_F_sum_is_schur(a):
    lam = F.sort(a)
    k = len(lam)
    got = F.F_sum((tb.skt_descent_composition(T) for T in tb.enumerate_skt(a)), k)
    want = F.F_sum((tb.syt_descent_composition(T) for T in tb.enumerate_syt(lam)), k)
    assert got == want


def test_render_marks_skewed_cells():
    T = tb.enumerate_skew_skt((0, 2, 1, 2), (0, 1, 0, 0))[0]
    assert "#" in T.render()
