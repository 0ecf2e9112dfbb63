from __future__ import annotations

from fractions import Fraction

import pytest
from superqf.scalar import Scalar, parse_scalar
from superqf.superspace import (
    BilForm,
    DegenerateForm,
    LinearMap,
    MixedParityTerm,
    Parity,
    PreconditionViolated,
    SubSpace,
    SuperSpace,
    check_superdim_constraints,
    form_determinant,
    is_antisymmetric,
    nh_wedge_form,
    orthogonal_complement,
    parity_shift,
    superdim_constraint_holds,
    symmetry_class,
    tensor_form,
    upsetting,
    wedge_form,
)

V22 = SuperSpace.from_sdim(2, 2)


def test_parity_arithmetic_wraps():
    assert Parity.ODD + Parity.ODD == Parity.EVEN
    assert SuperSpace(("a", "b", "c"), (1, 1, 1)).sdim == (0, 3)


def test_parity_shift_is_an_involution():
    V = SuperSpace(("x", "y"), (0, 1))
    P = parity_shift(V)
    assert P.labels == ("Pi(x)", "Pi(y)") and P.sdim == (1, 1)
    assert parity_shift(P) == V


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        SuperSpace(("a", "a"), (0, 0))


def test_even_wedge_values():
    w = wedge_form([(1, "e1", "e2")], V22, 0)
    assert w.value(0, 1) == Scalar(1) and w.value(1, 0) == Scalar(-1)


def test_odd_self_wedge_doubles_with_sign():
    w = wedge_form([(3, "e3", "e3")], V22, 0)
    assert w.value(2, 2) == Scalar(-6)


def test_mixed_wedge_sign():
    # even-odd pair: no Koszul sign on the (i, j) entry, -c on (j, i)
    w = wedge_form([(1, "e3", "e1")], V22, 1)
    assert w.value(2, 0) == Scalar(1) and w.value(0, 2) == Scalar(-1)


def test_wedge_rejects_wrong_parity_term():
    with pytest.raises(MixedParityTerm):
        wedge_form([(1, "e1", "e3")], V22, 0)


def test_convention_d6_value():
    # omega = e3*^e1* + e4*^e2* on sdim 2|2; v = l1 e1 + l2 e2
    w = wedge_form([(1, "e3", "e1"), (1, "e4", "e2")], V22, 1)
    l1, l2 = Scalar.param("lambda"), Scalar.param("mu")
    v = [l1, l2, Scalar(0), Scalar(0)]
    assert w(v, V22.basis_vector(2)) == -l1


def test_convention_definite_odd_block():
    w = wedge_form([(1, "e1", "e2"), (Fraction(-1, 2), "e3", "e3"), (Fraction(-1, 2), "e4", "e4")], V22, 0)
    z3, z4 = Scalar.param("p"), Scalar.param("q")
    Y = [Scalar(0), Scalar(0), z3, z4]
    assert w(Y, Y) == z3 * z3 + z4 * z4


def test_tensor_form_is_not_antisymmetrised():
    t = tensor_form([(1, "e4", "e4")], V22, 0)
    assert t.value(3, 3) == Scalar(-1)
    assert symmetry_class(t) == "anti-symmetric"  # odd-odd diagonal is anti-symmetric
    s = tensor_form([(1, "e1", "e2")], V22, 0)
    assert symmetry_class(s) == "neither"


def test_nh_form_splits_by_parity():
    f = nh_wedge_form([(1, "e1", "e2"), (1, "e1", "e3")], V22)
    even, odd = f.parts()
    assert even.parity == Parity.EVEN and odd.parity == Parity.ODD
    assert form_determinant(even) == Scalar(0)


def test_gram_parity_enforced():
    with pytest.raises(MixedParityTerm):
        BilForm(V22, 0, [[0, 0, 1, 0], [0] * 4, [0] * 4, [0] * 4])


def test_linear_map_parity_enforced():
    V = SuperSpace(("a", "b"), (0, 1))
    LinearMap(V, V, [[0, 1], [1, 0]], Parity.ODD)
    with pytest.raises(MixedParityTerm):
        LinearMap(V, V, [[0, 1], [1, 0]], Parity.EVEN)


def test_superdimension_constraints():
    assert superdim_constraint_holds((2, 2), 0) and superdim_constraint_holds((2, 2), 1)
    assert not superdim_constraint_holds((1, 3), 1)
    assert not superdim_constraint_holds((1, 3), 0)
    w = wedge_form([(1, "e1", "e2"), (1, "e3", "e3"), (1, "e4", "e4")], V22, 0)
    assert check_superdim_constraints(w)
    with pytest.raises(PreconditionViolated):
        check_superdim_constraints(wedge_form([(1, "e1", "e2")], V22, 0))
    with pytest.raises(PreconditionViolated):
        check_superdim_constraints(wedge_form([(1, "e1", "e2")], SuperSpace.from_sdim(2, 0), 0))


def test_complement_needs_nondegenerate_form():
    with pytest.raises(DegenerateForm):
        orthogonal_complement(SubSpace.whole(V22), BilForm.zero(V22))


def test_lagrangian_complement():
    w = wedge_form([(1, "e3", "e1"), (1, "e4", "e2")], V22, 1)
    S = SubSpace.span(V22, [V22.basis_vector(2), V22.basis_vector(3)])
    assert orthogonal_complement(S, w) == S


def test_subspace_membership_and_coordinates():
    S = SubSpace.span(V22, [[1, 1, 0, 0], [0, 0, 1, 0]])
    assert S.dim == 2
    assert S.contains([Scalar(2), Scalar(2), Scalar(5), Scalar(0)])
    assert not S.contains([Scalar(1), Scalar(0), Scalar(0), Scalar(0)])
