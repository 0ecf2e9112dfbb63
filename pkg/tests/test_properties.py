"""Randomized invariants over small super-structures (100+ examples each)."""
from __future__ import annotations

from hypothesis import assume, given
from hypothesis import strategies as st

from superqf.extension import (
    Connection,
    check_representation,
    dual_rep,
    extension_report,
    is_flat,
    is_torsion_free,
    pi_dual_rep,
    pi_t_star_extend,
    quotient_flat_connection,
    t_star_extend,
)
from superqf.lie import LieSuperStructure, check_jacobi
from superqf.lsa import ProductTable, induced_bracket, is_left_symmetric
from superqf.scalar import as_scalar
from superqf.superspace import BilForm, SubSpace, form_determinant, is_antisymmetric, orthogonal_complement, upsetting
from strategies import associative_superalgebras, homogeneous_forms, small_fraction, superspaces


def _table(data):
    V, m = data
    return V, [[[as_scalar(x) for x in b] for b in a] for a in m]


def _commutator(V, m):
    n = V.dim
    c = [[[m[i][j][k] - (-1) ** (int(V.parity(i)) * int(V.parity(j))) * m[j][i][k] for k in range(n)]
          for j in range(n)] for i in range(n)]
    return LieSuperStructure(V, c)


# (a)
@given(homogeneous_forms())
def test_upsetting_is_an_involution(w):
    assert upsetting(upsetting(w)) == w


@given(homogeneous_forms())
def test_antisymmetrised_form_is_antisymmetric(w):
    u = upsetting(w)
    a = BilForm(w.space, w.parity, [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(w.gram, u.gram)])
    assert is_antisymmetric(a)


# (b)
@st.composite
def nondegenerate_with_subspace(draw):
    V = draw(superspaces(min_dim=1, max_dim=4))
    w = draw(homogeneous_forms(space=V))
    assume(not form_determinant(w).is_zero())
    k = draw(st.integers(0, V.dim))
    vecs = [[draw(small_fraction) for _ in range(V.dim)] for _ in range(k)]
    return w, SubSpace.span(V, vecs) if vecs else SubSpace(V)


@given(nondegenerate_with_subspace())
def test_complement_dimension(data):
    w, S = data
    assert S.dim + orthogonal_complement(S, w).dim == w.space.dim


# (c)
@given(associative_superalgebras())
def test_dual_of_flat_connection_is_a_representation(data):
    V, m = _table(data)
    L = _commutator(V, m)
    nabla = Connection(L, m)
    assert is_flat(nabla)
    assert check_representation(dual_rep(nabla), L).ok
    assert check_representation(pi_dual_rep(nabla), L).ok


# (d)
@given(associative_superalgebras())
def test_associative_product_is_left_symmetric(data):
    V, m = _table(data)
    P = ProductTable(V, m)
    assert is_left_symmetric(P).ok
    assert check_jacobi(induced_bracket(P)).ok


@given(associative_superalgebras(), st.sampled_from(["t-star", "pi-t-star"]))
def test_extension_of_random_flat_connection(data, kind):
    V, m = _table(data)
    h = _commutator(V, m)
    nabla = Connection(h, m)
    assert is_torsion_free(nabla)
    ext = (t_star_extend if kind == "t-star" else pi_t_star_extend)(h, nabla)
    assert extension_report(ext).ok
    h2, nabla2 = quotient_flat_connection(ext.algebra, ext.form, ext.dual_ideal, ext.base_complement,
                                          labels=V.labels)
    assert h2.c == h.c and nabla2.gamma == nabla.gamma
