from fractions import Fraction

import pytest

from matsemi import (Caps, Matrix, ProjectiveElement, Scalar,
                     algebra_dimension, generate_closure, group_info,
                     is_irreducible, projective_canonical, rank_one_ideal,
                     xy_decomposition)
from _fx import M, outer, ones

C3 = M([[0, 1, 0], [0, 0, 1], [1, 0, 0]])


def test_caps_validation():
    with pytest.raises(ValueError):
        Caps(max_elements=0)
    with pytest.raises(ValueError):
        Caps(max_word_length=0)


def test_projective_canonical():
    assert projective_canonical(Matrix.identity(2).scale(2)) \
        == Matrix.identity(2)
    z = Matrix.zeros(2, 2)
    assert projective_canonical(z) == z
    got = projective_canonical(M([[0, 0], [0, 0]]) + Matrix.diagonal([3, -6]))
    assert got == Matrix.diagonal([Fraction(1, 2), -1])
    # only positive rescaling: signs survive
    assert projective_canonical(M([[-2]])) == M([[-1]])
    got = projective_canonical(Matrix.from_rows([[Scalar(0, 3)]]))
    assert got.entry(0, 0) == Scalar(0, 1)


def test_projective_element_semantics():
    e1 = ProjectiveElement(Matrix.identity(2), (0,))
    e2 = ProjectiveElement(Matrix.identity(2), (1, 1))
    assert e1 == e2 and hash(e1) == hash(e2)
    assert e1 != "x"
    with pytest.raises(AttributeError):
        e1.word = ()


def test_closure_of_cyclic_generator():
    cl = generate_closure([C3])
    assert not cl.truncated
    assert len(cl.elements) == 3
    assert cl.elements[0].word == (0,)
    assert cl.elements[1].word == (0, 0)
    assert cl.elements[2].word == (0, 0, 0)
    assert cl.elements[2].canonical == Matrix.identity(3)
    assert cl.contains_matrix(C3.scale(7))
    assert cl.contains_matrix(Matrix.identity(3))
    assert not cl.contains_matrix(ones(3))
    assert not cl.contains_matrix(C3.scale(-1))  # scaling is positive only


def test_closure_earliest_word_wins():
    cl = generate_closure([C3, matrix_square(C3)])
    assert len(cl.elements) == 3
    by_canonical = {e.canonical: e.word for e in cl.elements}
    assert by_canonical[matrix_square(C3)] == (1,)
    assert by_canonical[Matrix.identity(3)] == (0, 1)


def matrix_square(m):
    return m @ m


def test_closure_element_cap_truncates():
    d = Matrix.diagonal([2, 1])
    cl = generate_closure([d], Caps(max_elements=5, max_word_length=50))
    assert cl.truncated
    assert len(cl.elements) == 5
    # canonical powers: diag(1, 2^-k)
    assert cl.elements[3].canonical == Matrix.diagonal([1, Fraction(1, 16)])


def test_closure_word_cap_truncates():
    d = Matrix.diagonal([2, 1])
    cl = generate_closure([d], Caps(max_elements=1000, max_word_length=3))
    assert cl.truncated
    assert len(cl.elements) == 3
    assert max(len(e.word) for e in cl.elements) == 3


def test_closure_validation():
    with pytest.raises(ValueError):
        generate_closure([])
    with pytest.raises(ValueError):
        generate_closure([Matrix.identity(2), Matrix.identity(3)])
    with pytest.raises(ValueError):
        generate_closure([Matrix.zeros(2, 3)])


def test_group_info_cyclic_group():
    info = group_info([C3])
    assert info.all_invertible and info.closed_under_inverse_within_cap


def test_group_info_singular_generator():
    info = group_info([M([[1, 0], [0, 0]])])
    assert not info.all_invertible
    assert not info.closed_under_inverse_within_cap


def test_group_info_truncated_closure():
    info = group_info([Matrix.diagonal([2, 1])],
                      Caps(max_elements=4, max_word_length=50))
    assert info.all_invertible
    assert not info.closed_under_inverse_within_cap


def test_group_info_accepts_precomputed_closure():
    cl = generate_closure([C3])
    info = group_info([C3], closure=cl)
    assert info.closed_under_inverse_within_cap


def test_algebra_dimension_examples():
    a = ones(2)
    b = outer([1, -1], [1, -1])
    # a + b = 2I and ab = ba = 0, so the algebra is 2-dimensional
    assert algebra_dimension([a, b]) == 2
    assert not is_irreducible([a, b])

    e01 = M([[0, 1], [0, 0]])
    e10 = M([[0, 0], [1, 0]])
    assert algebra_dimension([e01, e10]) == 4
    assert is_irreducible([e01, e10])

    swap = M([[0, 1], [1, 0]])
    sign = Matrix.diagonal([1, -1])
    assert algebra_dimension([swap, sign]) == 4

    assert algebra_dimension([M([[0, 1], [0, 0]])]) == 2
    assert algebra_dimension([Matrix.identity(3)]) == 1


def test_rank_one_ideal():
    assert rank_one_ideal(generate_closure([C3])) == ()
    cl = generate_closure([outer([1, 1], [1, 0])])
    ideal = rank_one_ideal(cl)
    assert len(ideal) == len(cl.elements) == 1


def test_xy_decomposition_directions_and_spans():
    p = outer([1, 1], [1, 0])
    q = outer([1, 0], [0, 1])
    cl = generate_closure([p, q])
    ideal = rank_one_ideal(cl)
    assert len(ideal) == len(cl.elements) == 5  # 4 outer products + zero
    fac = xy_decomposition(ideal)
    xset = set(fac.x_vectors)
    yset = set(fac.y_vectors)
    one = Scalar(1)
    zero = Scalar(0)
    assert xset == {(one, one), (one, zero)}
    assert yset == {(one, zero), (zero, one)}
    assert fac.x_spans and fac.y_spans
    assert (-1, -1) in fac.pairing  # the zero member
    for k, (xi, yi) in enumerate(fac.pairing):
        if xi < 0:
            assert ideal[k].canonical.is_zero()
        else:
            prod = Matrix.from_rows(
                [[a * b for b in fac.y_vectors[yi]]
                 for a in fac.x_vectors[xi]])
            assert projective_canonical(prod) == ideal[k].canonical


def test_xy_decomposition_rejects_higher_rank():
    e = ProjectiveElement(Matrix.identity(2), (0,))
    with pytest.raises(ValueError):
        xy_decomposition([e])


def test_xy_decomposition_no_span():
    cl = generate_closure([outer([1, 0, 0], [0, 1, 0])])
    fac = xy_decomposition(rank_one_ideal(cl))
    assert not fac.x_spans and not fac.y_spans
