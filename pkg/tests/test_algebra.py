import pytest
from gmpy2 import mpq

from taumut.algebra import (
    AbstractAlgebra,
    AdmissibilityError,
    LocalCoefficientAlgebra,
    NotBasicError,
    Quiver,
    abstract_from_path_algebra,
    basic_presentation,
    build_path_algebra,
    compare_presentations,
    parse_relation,
    tensor_algebra,
)


@pytest.fixture(scope="module")
def kA3():
    return build_path_algebra(Quiver.linear_A(3), name="kA3")


def test_path_basis_of_linear_a3(kA3):
    assert kA3.dim == 6
    assert [kA3.basis_label(k) for k in range(6)] == ["e1", "e2", "e3", "a", "b", "b*a"]
    assert kA3.cartan_matrix() == [[1, 0, 0], [1, 1, 0], [1, 1, 1]]
    assert kA3.radical_series_dims() == [6, 3, 1, 0]


def test_multiplication_composes_right_to_left(kA3):
    a, b = kA3.arrow_basis
    prod = kA3.mul_vec({b: mpq(1)}, {a: mpq(1)})
    assert [kA3.basis_label(k) for k in prod] == ["b*a"]
    assert kA3.mul_vec({a: mpq(1)}, {b: mpq(1)}) == {}


def test_relations_truncate_the_path_algebra():
    q = Quiver.from_edges(1, [("x", 0, 0)])
    assert build_path_algebra(q, ["x^3"]).dim == 3
    with pytest.raises(AdmissibilityError):
        build_path_algebra(q, [])
    with pytest.raises(AdmissibilityError):
        build_path_algebra(q, ["x"])


def test_parse_relation_orders_factors():
    q = Quiver.from_edges(2, [("a", 0, 1), ("x", 0, 0), ("y", 1, 1)])
    rel = parse_relation(q, "a*x - y*a")
    assert rel == ((mpq(1), 0, (1, 0)), (mpq(-1), 0, (0, 2)))
    with pytest.raises(ValueError):
        parse_relation(q, "a - x")


def test_quiver_predicates():
    assert Quiver.D4().is_dynkin()
    assert not Quiver.from_edges(2, [("a", 0, 1), ("b", 0, 1)]).is_dynkin()
    assert not Quiver.from_edges(2, [("a", 0, 1), ("b", 1, 0)]).is_acyclic()


@pytest.mark.parametrize("t,n,dim", [(2, 3, 12), (3, 3, 18), (3, 2, 9)])
def test_tensor_algebra_dimension(t, n, dim):
    kq = build_path_algebra(Quiver.linear_A(n))
    L = tensor_algebra(LocalCoefficientAlgebra.truncated_polynomial(t), kq)
    assert L.dim == dim
    # one loop per vertex on top of the original arrows
    assert len(L.quiver.arrows) == (n - 1) + n


def test_tensor_algebra_for_structure_constants():
    consts = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for j in range(3):
        consts[0][j][j] = consts[j][0][j] = 1
    R = LocalCoefficientAlgebra.from_dense(consts)
    assert R.generators == [1, 2] and not R.is_self_injective()
    L = tensor_algebra(R, build_path_algebra(Quiver.linear_A(2)))
    assert L.dim == 9


def test_truncated_polynomial_is_self_injective():
    assert LocalCoefficientAlgebra.truncated_polynomial(3).is_self_injective()


def test_coefficient_algebra_validation():
    with pytest.raises(ValueError):
        # non-commutative product table
        LocalCoefficientAlgebra.from_dense([
            [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            [[0, 1, 0], [0, 0, 0], [0, 0, 1]],
            [[0, 0, 1], [0, 0, 0], [0, 0, 0]],
        ])
    with pytest.raises(ValueError):
        # k x k is not local
        LocalCoefficientAlgebra.from_dense([[[1, 0], [0, 1]], [[0, 1], [0, 1]]])


def test_basic_presentation_recovers_kA3(kA3):
    pres = basic_presentation(abstract_from_path_algebra(kA3))
    inv = compare_presentations(pres.algebra, kA3)
    assert all(x == y for x, y in inv.values())
    assert len(pres.quiver.arrows) == 2 and not pres.relations


def test_basic_presentation_of_semisimple_algebra():
    A = AbstractAlgebra(2, [[{0: mpq(1)}, {}], [{}, {1: mpq(1)}]], [{0: mpq(1)}, {1: mpq(1)}])
    pres = basic_presentation(A)
    assert pres.quiver.n == 2 and not pres.quiver.arrows


def test_non_basic_algebra_is_rejected():
    # 2x2 matrices with a single idempotent: semisimple quotient too big
    table = [[{} for _ in range(4)] for _ in range(4)]
    for i in range(2):
        for j in range(2):
            for k in range(2):
                table[2 * i + j][2 * j + k] = {2 * i + k: mpq(1)}
    with pytest.raises(NotBasicError):
        basic_presentation(AbstractAlgebra(4, table, [{0: mpq(1), 3: mpq(1)}]))


def test_tensor_presentation_has_tensor_relations():
    kq = build_path_algebra(Quiver.linear_A(2))
    L = tensor_algebra(LocalCoefficientAlgebra.truncated_polynomial(2), kq)
    # x_v^2 for both vertices and one commutation relation for the arrow
    assert len(L.relations) == 3
    # rad = <x1, x2, a, a*x1>, rad^2 = <a*x1>
    assert L.radical_series_dims() == [6, 4, 1, 0]
