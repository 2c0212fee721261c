import pytest

from taumut import LocalCoefficientAlgebra, Quiver, build_path_algebra, tensor_algebra
from taumut.homology import (
    cogen_membership,
    coxeter_dim,
    euler_form,
    ext1_dim,
    gen_membership,
    is_injective,
    is_projective,
    proj_dimension,
    tau,
    tau_inverse,
    trace_quotient,
    universal_coextension,
    universal_extension,
)
from taumut.modules import induce, is_indecomposable, is_isomorphic, standard_modules


@pytest.fixture(scope="module")
def kA3():
    return build_path_algebra(Quiver.linear_A(3), name="kA3")


@pytest.fixture(scope="module")
def std(kA3):
    return standard_modules(kA3)


def test_auslander_reiten_translate(std):
    assert tau(std["P1"]).dim == 0
    assert is_isomorphic(tau(std["S2"]), std["P3"])
    assert is_isomorphic(tau(std["I2"]), std["P2"])
    assert is_isomorphic(tau_inverse(std["P3"]), std["S2"])
    assert tau_inverse(std["I1"]).dim == 0


def test_projective_dimension(std):
    assert proj_dimension(std["P2"]) == 0
    assert proj_dimension(std["S2"]) == 1
    assert is_projective(std["P3"]) and is_injective(std["I1"])


def test_ext_dimensions(std):
    assert ext1_dim(std["S1"], std["S2"]) == 1
    assert ext1_dim(std["S2"], std["S3"]) == 1
    assert ext1_dim(std["S2"], std["S1"]) == 0
    assert ext1_dim(std["S1"], std["S3"]) == 0


def test_universal_extensions(std):
    E, inc, proj, r = universal_extension(std["S1"], std["S2"])
    assert r == 1 and is_isomorphic(E, std["I2"])
    assert inc.is_injective() and proj.is_surjective()
    E, *_ = universal_extension(std["S2"], std["S3"])
    assert is_isomorphic(E, std["P2"])
    E, *_ = universal_coextension(std["S1"], std["S2"])
    assert is_isomorphic(E, std["I2"])


def test_trace_quotient(std):
    t, inc, f, proj = trace_quotient(std["S2"], std["I2"])
    assert t.dims == (0, 1, 0)
    assert is_isomorphic(f, std["S1"])


def test_gen_and_cogen(std):
    assert gen_membership(std["S2"], std["P2"])
    assert not gen_membership(std["S2"], std["I2"])
    assert gen_membership(std["I1"], std["I2"])
    assert cogen_membership(std["S2"], std["I2"])
    assert not cogen_membership(std["S2"], std["P2"])


def test_euler_and_coxeter(kA3):
    q = kA3.quiver
    assert euler_form([0, 1, 0], [0, 0, 1], q) == -1
    assert euler_form([0, 1, 0], [0, 1, 0], q) == 1
    # dim tau^-1 P3 = dim S2
    assert coxeter_dim([0, 1, 0], q) == [0, 0, 1]


@pytest.mark.parametrize("t", [2, 3])
def test_tau_commutes_with_induction(kA3, std, t):
    L = tensor_algebra(LocalCoefficientAlgebra.truncated_polynomial(t), kA3)
    X = induce(L, std["S2"])
    assert is_isomorphic(tau(X), induce(L, std["S3"]))
    assert proj_dimension(X) == 1
    assert is_indecomposable(X)
