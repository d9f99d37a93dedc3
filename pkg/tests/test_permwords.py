from hypothesis import given, strategies as st
import pytest

from weakdual import permwords as pw
from weakdual.foundations import VIRTUAL, flat

FIG2 = {
    (1, 2, 1, 4, 3), (1, 2, 4, 1, 3), (1, 2, 4, 3, 1), (1, 4, 2, 1, 3),
    (1, 4, 2, 3, 1), (2, 1, 2, 4, 3), (2, 1, 4, 2, 3), (2, 4, 1, 2, 3),
    (4, 1, 2, 1, 3), (4, 1, 2, 3, 1), (4, 2, 1, 2, 3),
}

perm = st.integers(1, 5).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_parse_permutation():
    assert pw.parse_permutation("42153") == (4, 2, 1, 5, 3)
    assert pw.parse_permutation("4,2,1,5,3") == (4, 2, 1, 5, 3)
    with pytest.raises(ValueError):
        pw.parse_permutation("4215")


def test_inversions():
    assert pw.inv((4, 2, 1, 5, 3)) == 5
    assert pw.inv(pw.identity(4)) == 0
    assert pw.inv((2, 1)) == 1


def test_reduced_words_of_42153():
    words = pw.reduced_words((4, 2, 1, 5, 3))
    assert len(words) == 11
    assert set(words) == FIG2


def test_small_reduced_word_sets():
    assert pw.reduced_words((1, 2, 3)) == [()]
    assert pw.reduced_words((3, 2, 1)) == [(1, 2, 1), (2, 1, 2)]


@pytest.mark.parametrize("n,count", [(3, 2), (4, 16)])
def test_longest_element_counts(n, count):
    w0 = tuple(range(n, 0, -1))
    assert len(pw.reduced_words(w0)) == count


def test_run_decomposition():
    assert pw.run_decomposition((1, 4, 2, 3, 1)) == [(1, 4), (2, 3), (1,)]
    assert pw.descent_composition((1, 4, 2, 3, 1)) == (1, 2, 2)
    assert pw.descent_composition((1, 2, 3)) == (3,)
    assert pw.descent_composition((3, 2, 1)) == (1, 1, 1)


def test_weak_descent_words():
    assert pw.weak_descent_word((4, 2, 1, 2, 3), 4) == (3, 1, 0, 1)
    assert pw.weak_descent_word((2, 4, 1, 2, 3), 4) == (3, 2, 0, 0)
    assert pw.weak_descent_word((1, 2, 4, 1, 3), 4) is VIRTUAL


def test_grassmannian():
    assert pw.grassmannian((5, 4, 4, 1), 6) == (1, 2, 4, 8, 9, 11, 3, 5, 6, 7, 10)
    assert pw.grassmannian((), 1) == (1,)
    assert pw.grassmannian((1,), 1) == (2, 1)


def test_shift():
    assert pw.shift((4, 2, 1, 5, 3), 1) == (1, 5, 3, 2, 6, 4)
    assert pw.shift((2, 1), 2) == (1, 2, 4, 3)
    assert pw.shift((2, 1), 0) == (2, 1)


def test_stabilization_shift():
    # one shift still leaves four virtual words in R(153264)
    assert pw.virtual_count((1, 5, 3, 2, 6, 4)) == 4
    assert pw.stabilization_shift((4, 2, 1, 5, 3)) == 2
    # (1,2,1) is virtual before shifting
    assert pw.stabilization_shift((3, 2, 1)) == 1
    assert pw.stabilization_shift((1, 2, 3)) == 0


@given(perm)
def test_every_word_multiplies_to_w(w):
    for rho in pw.reduced_words(w):
        assert len(rho) == pw.inv(w)
        assert pw.word_to_permutation(rho, len(w)) == w


@given(perm, st.integers(0, 2))
def test_shift_shifts_letters(w, m):
    words = pw.reduced_words(pw.shift(w, m))
    assert words == sorted(pw.shift_word(rho, m) for rho in pw.reduced_words(w))


@given(perm)
def test_weak_des_flattens_to_Des(w):
    for rho in pw.reduced_words(w):
        des = pw.weak_descent_word(rho, max(len(w) - 1, 1))
        if des is not VIRTUAL:
            assert flat(des) == pw.descent_composition(rho)
