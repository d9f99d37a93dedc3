from hypothesis import given, settings, strategies as st
import pytest

from weakdual import foundations as F
from weakdual.foundations import BasisExpansion, Polynomial


weak_comp = st.lists(st.integers(0, 3), min_size=1, max_size=4).map(tuple)


def test_flat_and_sort():
    assert F.flat((0, 3, 0, 2)) == (3, 2)
    assert F.sort((1, 0, 3, 2)) == (3, 2, 1)
    assert F.flat((0, 0)) == ()


def test_refines():
    assert F.refines((1, 2, 2), (3, 2))
    assert F.refines((3, 2), (3, 2))
    assert not F.refines((2, 3), (3, 2))
    assert not F.refines((1, 1), (3,))


def test_prefix_geq():
    assert F.prefix_geq((1, 1, 0), (0, 1, 1))
    assert not F.prefix_geq((0, 1, 1), (1, 1, 0))
    with pytest.raises(ValueError):
        F.prefix_geq((1,), (1, 0))


def test_increasing_composition():
    assert F.increasing_composition((2, 1), 3) == (0, 1, 2)
    with pytest.raises(ValueError):
        F.increasing_composition((1, 1, 1), 2)


def test_fundamental_F_in_three_variables():
    p = F.fundamental_F((3, 2), 3)
    assert p.terms == {
        (3, 2, 0): 1, (3, 0, 2): 1, (0, 3, 2): 1,
        (3, 1, 1): 1, (2, 1, 2): 1, (1, 2, 2): 1,
    }


def test_fundamental_F_drops_long_refinements():
    # (1,1,1) needs three variables
    assert not F.fundamental_F((1, 1, 1), 2)


def test_slide_of_a_single_part():
    p = F.fundamental_slide((0, 0, 2))
    assert len(p) == 6
    assert p.coefficient((2, 0, 0)) == 1
    assert p.coefficient((1, 0, 1)) == 1


def test_slide_of_a_partition_is_a_monomial():
    assert F.slide((3, 2, 0)).terms == {(3, 2, 0): 1}


def test_slide_expansion_round_trip():
    p = F.slide((0, 3, 0, 2)) + F.slide((1, 3, 0, 1)) * 2
    exp = F.expand_in_slide(p)
    assert exp.terms == {(0, 3, 0, 2): 1, (1, 3, 0, 1): 2}
    assert F.realize(exp, 4) == p


def test_schur_expansion_of_e1_squared():
    e1 = Polynomial({(1, 0): 1, (0, 1): 1})
    exp = F.expand_in_schur(e1 * e1)
    assert exp.terms == {(2,): 1, (1, 1): 1}


def test_non_symmetric_polynomial_has_no_schur_expansion():
    with pytest.raises(F.ExpansionError):
        F.expand_in_schur(Polynomial({(1, 0): 1}))


def test_poly_ops():
    p = Polynomial({(1, 0): 1, (0, 1): 2})
    q = Polynomial({(1, 0): -1, (0, 0): 3})
    assert F.poly_add(p, q).terms == {(0, 1): 2, (0, 0): 3}
    assert not F.poly_sub(p, p)
    assert F.poly_mul(p, q).terms == {(2, 0): -1, (1, 1): -2, (1, 0): 3, (0, 1): 6}


def test_expansion_rejects_bad_indices():
    with pytest.raises(ValueError):
        BasisExpansion(F.SCHUR, {(1, 2): 1})
    with pytest.raises(ValueError):
        BasisExpansion(F.FUNDAMENTAL_F, {(1, 0): 1})


def test_expansion_text_and_dict_agree():
    exp = BasisExpansion(F.KEY, {(3, 1, 0, 1): 1, (3, 2, 0, 0): -2})
    assert exp.to_text() == "1*key(3,1,0,1) - 2*key(3,2,0,0)"
    assert BasisExpansion.from_dict(exp.to_dict()) == exp


@given(weak_comp)
def test_slide_expansion_of_a_slide_is_itself(a):
    if sum(a) == 0:
        return
    assert F.expand_in_slide(F.slide(a)).terms == {a: 1}


@given(weak_comp)
def test_slide_flattens_into_F(a):
    # every slide term is a term of the fundamental function of flat(a)
    big = F.fundamental_F(F.flat(a), len(a))
    for e in F.slide(a).terms:
        assert big.coefficient(e) == 1


@settings(max_examples=50)
@given(weak_comp, weak_comp)
def test_multiplication_is_commutative(a, b):
    p, q = F.slide(a), F.slide(b)
    n = max(len(a), len(b))
    assert p.pad(n) * q.pad(n) == q.pad(n) * p.pad(n)


@given(st.integers(0, 6))
def test_refinement_count(n):
    assert len(list(F.compositions_of(n))) == (2 ** (n - 1) if n else 1)


def test_polynomial_text_round_trip():
    p = Polynomial({(2, 0, 1): 3, (0, 1, 0): -1})
    assert Polynomial.from_text(p.to_text(), 3) == p


def test_mismatched_lengths_are_rejected():
    with pytest.raises(ValueError):
        Polynomial({(1, 0): 1, (1,): 1})
