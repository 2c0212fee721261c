import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taumut import LocalCoefficientAlgebra, Quiver, build_path_algebra, tensor_algebra
from taumut.linalg import Matrix
from taumut.modules import (
    AlgebraMismatch,
    Representation,
    decompose,
    direct_sum,
    hom_dim,
    hom_dim_mod_p,
    hom_space,
    induce,
    is_indecomposable,
    is_isomorphic,
    parse_module,
    restrict,
    serialize_module,
    standard_modules,
)


@pytest.fixture(scope="module")
def kA3():
    return build_path_algebra(Quiver.linear_A(3), name="kA3")


@pytest.fixture(scope="module")
def std(kA3):
    return standard_modules(kA3)


def test_standard_dimension_vectors(std):
    assert std["P1"].dims == (1, 1, 1)
    assert std["P3"].dims == (0, 0, 1)
    assert std["I1"].dims == (1, 0, 0)
    assert std["I3"].dims == (1, 1, 1)
    assert is_isomorphic(std["P1"], std["I3"])


def test_hom_dimensions(std):
    assert hom_dim(std["P1"], std["P3"]) == 0
    assert hom_dim(std["P3"], std["P1"]) == 1
    assert hom_dim(std["S2"], std["S2"]) == 1
    for f in hom_space(std["P2"], std["P1"]):
        f.verify()


def test_relations_are_checked():
    q = Quiver.from_edges(2, [("a", 0, 1), ("x", 0, 0)])
    A = build_path_algebra(q, ["x^2", "a*x"])
    with pytest.raises(ValueError):
        Representation(A, [1, 1], [Matrix.from_rows([[1]]), Matrix.from_rows([[1]])])


def test_decompose_recovers_summands(std):
    M = direct_sum([std["P1"], std["S2"], std["S2"], std["I2"]])
    parts = decompose(M)
    assert sorted(p[0].dims for p in parts) == sorted([(1, 1, 1), (0, 1, 0), (0, 1, 0), (1, 1, 0)])
    total = None
    for X, inc, proj in parts:
        assert is_indecomposable(X)
        term = inc @ proj
        total = term if total is None else total + term
    assert total.is_isomorphism()


def test_hom_between_algebras_is_rejected(std):
    other = build_path_algebra(Quiver.linear_A(3))
    with pytest.raises(AlgebraMismatch):
        hom_space(std["P1"], standard_modules(other)["P1"])


def test_serialization_roundtrip(kA3, std):
    for name, M in std.items():
        back = parse_module(serialize_module(M), kA3)
        assert back.same_data(M) and back.name == M.name


def test_induction_and_restriction(kA3, std):
    L = tensor_algebra(LocalCoefficientAlgebra.truncated_polynomial(3), kA3)
    X = induce(L, std["S2"])
    assert X.name == "Ind(S2)" and X.dims == (0, 3, 0)
    assert is_indecomposable(X)
    back = restrict(X)
    assert is_isomorphic(back, direct_sum([std["S2"]] * 3))


def test_induced_projective_keeps_its_name(kA3, std):
    L = tensor_algebra(LocalCoefficientAlgebra.truncated_polynomial(2), kA3)
    assert induce(L, std["P2"]).name == "P2"


@given(st.lists(st.sampled_from(["P1", "P2", "P3", "I1", "I2", "S2"]), min_size=1, max_size=4))
@settings(max_examples=25, deadline=None)
def test_krull_schmidt_counts(std, names):
    M = direct_sum([std[n] for n in names])
    parts = decompose(M)
    assert len(parts) == len(names)
    assert sorted(p[0].dims for p in parts) == sorted(std[n].dims for n in names)


@given(st.sampled_from(["P1", "P2", "P3", "I1", "I2", "S2"]),
       st.sampled_from(["P1", "P2", "P3", "I1", "I2", "S2"]))
@settings(max_examples=25, deadline=None)
def test_hom_dimension_mod_p_matches(std, a, b):
    assert hom_dim(std[a], std[b]) == hom_dim_mod_p(std[a], std[b], 32003)


def test_isomorphism_witness(std):
    ok, w = is_isomorphic(std["P1"], std["I3"], with_witness=True)
    assert ok and w.is_isomorphism()
    assert not is_isomorphic(std["P2"], std["I2"])


def test_hom_is_additive(std):
    names = ["P1", "S2", "I2"]
    for a, b in itertools.product(names, repeat=2):
        lhs = hom_dim(direct_sum([std[a], std[b]]), std["I2"])
        assert lhs == hom_dim(std[a], std["I2"]) + hom_dim(std[b], std["I2"])
