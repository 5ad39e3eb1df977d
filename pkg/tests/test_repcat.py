"""Representations: Hom and Ext spaces, classes, sequences, indecomposables."""

import itertools

import pytest
import hypothesis.strategies as st
from hypothesis import given, settings

from arquiver.exactmat import FieldSpec, Matrix, mat_rank
from arquiver.quiverpath import Quiver
from arquiver.repcat import (
    INJECTIVE,
    PROJECTIVE,
    SIMPLE,
    Rep,
    RepMorphism,
    cocycle_from_ses,
    ext1_space,
    ext_pull,
    ext_push,
    euler_form,
    has_injective_summand,
    hom_dim,
    hom_space,
    indecomposable,
    is_projective,
    rep_dual,
    ses_from_cocycle,
    zero_rep,
)

FP = FieldSpec.prime(10007)
F2 = FieldSpec.prime(2)
QQ = FieldSpec.rational()

A2 = Quiver(2, ((0, 1),))
A3 = Quiver(3, ((0, 1), (1, 2)))
KRON = Quiver(2, ((0, 1), (0, 1)))


@st.composite
def quivers(draw, max_vertices=4, max_arrows=4):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_arrows)) if n > 1 else 0
    arrows = []
    for _ in range(m):
        i = draw(st.integers(0, n - 2))
        j = draw(st.integers(i + 1, n - 1))
        arrows.append((i, j))
    return Quiver(n, tuple(arrows))


@st.composite
def reps(draw, field=None, max_dim=3, max_vertices=4, max_arrows=4):
    q = draw(quivers(max_vertices, max_arrows))
    fs = field if field is not None else draw(st.sampled_from([FP, QQ]))
    dims = tuple(draw(st.integers(0, max_dim)) for _ in range(q.vertex_count))
    mats = []
    for s, t in q.arrows:
        mats.append(Matrix.from_rows(
            fs, [[draw(st.integers(-2, 2)) for _ in range(dims[s])]
                 for _ in range(dims[t])], cols=dims[s]))
    return Rep(q, fs, dims, tuple(mats))


@st.composite
def rep_pairs(draw, field=None, max_dim=3):
    x = draw(reps(field=field, max_dim=max_dim))
    fs = x.field
    q = x.quiver
    dims = tuple(draw(st.integers(0, max_dim)) for _ in range(q.vertex_count))
    mats = []
    for s, t in q.arrows:
        mats.append(Matrix.from_rows(
            fs, [[draw(st.integers(-2, 2)) for _ in range(dims[s])]
                 for _ in range(dims[t])], cols=dims[s]))
    return x, Rep(q, fs, dims, tuple(mats))


@st.composite
def tiny_f2_pairs(draw):
    """Pairs small enough to enumerate every vertex tuple over F_2."""
    q = draw(quivers(max_vertices=3, max_arrows=2))
    def rep():
        dims = tuple(draw(st.integers(0, 2)) for _ in range(q.vertex_count))
        mats = [Matrix.from_rows(
            F2, [[draw(st.integers(0, 1)) for _ in range(dims[s])]
                 for _ in range(dims[t])], cols=dims[s])
            for s, t in q.arrows]
        return Rep(q, F2, dims, tuple(mats))
    x, y = rep(), rep()
    hom_coords = sum(x.dims[v] * y.dims[v] for v in range(q.vertex_count))
    ext_coords = sum(x.dims[s] * y.dims[t] for s, t in q.arrows)
    if hom_coords > 10 or ext_coords > 8:
        return None
    return x, y


@given(rep_pairs())
@settings(deadline=None, max_examples=50)
def test_hom_space_basis(pair):
    x, y = pair
    basis = hom_space(x, y)
    assert len(basis) == hom_dim(x, y)
    for f in basis:
        assert f.is_intertwiner()
    if basis:
        flats = [sum((m.to_flat() for m in f.mats), []) for f in basis]
        stacked = Matrix.from_rows(x.field, flats, cols=len(flats[0]))
        assert mat_rank(stacked) == len(basis)


@given(tiny_f2_pairs())
@settings(deadline=None, max_examples=30)
def test_hom_dim_matches_exhaustive_count(pair):
    """Over F_2 the morphism set is a vector space: its size is 2^dim."""
    if pair is None:
        return
    x, y = pair
    q = x.quiver
    shapes = [(y.dims[v], x.dims[v]) for v in range(q.vertex_count)]
    total = sum(r * c for r, c in shapes)
    count = 0
    for bits in itertools.product((0, 1), repeat=total):
        mats = []
        k = 0
        for r, c in shapes:
            mats.append(Matrix.from_flat(F2, r, c, bits[k:k + r * c]))
            k += r * c
        if RepMorphism(x, y, tuple(mats)).is_intertwiner():
            count += 1
    assert count == 2 ** hom_dim(x, y)


@given(tiny_f2_pairs())
@settings(deadline=None, max_examples=20)
def test_ext_dim_matches_exhaustive_classes(pair):
    """Over F_2 the number of distinct canonical classes is 2^dim."""
    if pair is None:
        return
    x, y = pair
    q = x.quiver
    space = ext1_space(x, y)
    shapes = [(y.dims[t], x.dims[s]) for s, t in q.arrows]
    total = sum(r * c for r, c in shapes)
    seen = set()
    for bits in itertools.product((0, 1), repeat=total):
        mats = []
        k = 0
        for r, c in shapes:
            mats.append(Matrix.from_flat(F2, r, c, bits[k:k + r * c]))
            k += r * c
        seen.add(space.class_of(tuple(mats)).coords)
    assert len(seen) == 2 ** space.dim


@given(rep_pairs())
@settings(deadline=None, max_examples=50)
def test_euler_identity(pair):
    """dim Hom - dim Ext^1 equals the alternating sum of products, computed
    here directly from the dimension vectors."""
    x, y = pair
    q = x.quiver
    direct = (sum(x.dims[v] * y.dims[v] for v in range(q.vertex_count))
              - sum(x.dims[s] * y.dims[t] for s, t in q.arrows))
    assert euler_form(q, x.dims, y.dims) == direct
    assert hom_dim(x, y) - ext1_space(x, y).dim == direct


@given(rep_pairs(max_dim=2))
@settings(deadline=None, max_examples=40)
def test_coboundaries_vanish(pair):
    """The defect tuple of any vertexwise map has zero class."""
    x, y = pair
    q = x.quiver
    fs = x.field
    h = [Matrix.from_rows(fs, [[(i * 7 + j * 3 + v) % 5 - 2
                                for j in range(x.dims[v])]
                               for i in range(y.dims[v])], cols=x.dims[v])
         for v in range(q.vertex_count)]
    cocycle = tuple(y.mats[a] @ h[s] - h[t] @ x.mats[a]
                    for a, (s, t) in enumerate(q.arrows))
    assert ext1_space(x, y).class_of(cocycle).is_zero()


@given(rep_pairs(max_dim=2))
@settings(deadline=None, max_examples=40)
def test_ses_round_trip(pair):
    x, y = pair
    space = ext1_space(x, y)
    if space.dim == 0:
        return
    z = space.basis()[0]
    s = ses_from_cocycle(z)
    s.validate()
    assert s.sub == y and s.quo == x
    assert cocycle_from_ses(s) == z
    assert cocycle_from_ses(s, section_tweak=3) == z


@given(rep_pairs(max_dim=2))
@settings(deadline=None, max_examples=30)
def test_ext_functoriality_identity(pair):
    x, y = pair
    space = ext1_space(x, y)
    if space.dim == 0:
        return
    z = space.basis()[-1]
    assert ext_pull(z, RepMorphism.identity(x)) == z
    assert ext_push(RepMorphism.identity(y), z) == z


def test_a3_indecomposable_dims():
    assert indecomposable(A3, PROJECTIVE, 0, FP).dims == (1, 1, 1)
    assert indecomposable(A3, PROJECTIVE, 1, FP).dims == (0, 1, 1)
    assert indecomposable(A3, PROJECTIVE, 2, FP).dims == (0, 0, 1)
    assert indecomposable(A3, INJECTIVE, 0, FP).dims == (1, 0, 0)
    assert indecomposable(A3, INJECTIVE, 1, FP).dims == (1, 1, 0)
    assert indecomposable(A3, INJECTIVE, 2, FP).dims == (1, 1, 1)
    assert indecomposable(A3, SIMPLE, 1, FP).dims == (0, 1, 0)


def test_summand_and_projectivity_predicates():
    s0 = indecomposable(A2, SIMPLE, 0, FP)
    s1 = indecomposable(A2, SIMPLE, 1, FP)
    p0 = indecomposable(A2, PROJECTIVE, 0, FP)
    assert has_injective_summand(s0)
    assert not has_injective_summand(s1)
    assert has_injective_summand(p0)
    assert is_projective(s1)
    assert not is_projective(s0)
    assert is_projective(p0)
    assert is_projective(zero_rep(A2, FP))


def test_desk_ext_dims():
    s0 = indecomposable(A2, SIMPLE, 0, QQ)
    s1 = indecomposable(A2, SIMPLE, 1, QQ)
    assert ext1_space(s0, s1).dim == 1
    assert ext1_space(s1, s0).dim == 0
    k0 = indecomposable(KRON, SIMPLE, 0, QQ)
    k1 = indecomposable(KRON, SIMPLE, 1, QQ)
    assert ext1_space(k0, k1).dim == 2


@given(reps())
@settings(deadline=None, max_examples=40)
def test_dual_involution(x):
    assert rep_dual(rep_dual(x)) == x


@given(rep_pairs(max_dim=2))
@settings(deadline=None, max_examples=30)
def test_dual_swaps_hom(pair):
    x, y = pair
    assert hom_dim(x, y) == hom_dim(rep_dual(y), rep_dual(x))


def test_morphism_shape_validation():
    s0 = indecomposable(A2, SIMPLE, 0, FP)
    s1 = indecomposable(A2, SIMPLE, 1, FP)
    with pytest.raises(ValueError):
        RepMorphism(s0, s1, (Matrix.identity(FP, 1), Matrix.identity(FP, 1)))
