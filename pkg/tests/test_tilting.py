import pytest

from taumut import LocalCoefficientAlgebra, Quiver, Workspace
from taumut.homology import proj_dimension
from taumut.modules import simple
from taumut.tilting import ContextError, is_gen_minimal, is_R_exceptional, is_RQ_lattice


def test_perpendicular_category_of_s2(a3):
    J = a3.ctx.perp_of("S2")
    assert J.names == ["P1", "P2", "I1"]
    assert J.generators == ["P1", "P2"]
    assert J.gamma_dim == 3 and len(J.algebra.quiver.arrows) == 1
    assert J.dump().startswith("context J(S2)\nmembers = P1, P2, I1\ngenerators = P1, P2\ngamma dim = 3")


def test_perpendicular_category_over_lambda(lam):
    J = lam.ctx.perp_of("Ind(S2)")
    assert J.names == ["P1", "P2", "I1"]
    # R (x) kA2: one arrow and a loop at each vertex
    assert J.gamma_dim == 6
    arrows = J.algebra.quiver.arrows
    assert sum(a.source == a.target for a in arrows) == 2 and len(arrows) == 3
    assert J.algebra.radical_series_dims() == [6, 4, 1, 0]


def test_transport_does_not_raise_projective_dimension(lam):
    for x in lam.ctx.names:
        if lam.ctx.hom_tau(x, x):
            continue
        J = lam.ctx.perp_of(x)
        for y in J.names:
            assert proj_dimension(J.rep(y)) <= proj_dimension(lam.ctx.rep(y))


def test_rank_of_perpendicular_categories(a3):
    C = a3.ctx
    for x in C.names:
        assert C.perp_of(x).n == 2
    assert C.perp([("P1", 0), ("P2", 0), ("P3", 0)]).n == 0


def test_support_tau_rigidity(a3):
    C = a3.ctx
    assert C.is_support_tau_rigid([("I2", 0), ("I1", 0)])
    assert not C.is_support_tau_rigid([("I1", 0), ("S2", 0)])
    assert C.is_support_tau_rigid([("S2", 0), ("P3", 1)])
    assert not C.is_support_tau_rigid([("S2", 0), ("P2", 1)])
    with pytest.raises(ValueError):
        C.perp([("I1", 0), ("S2", 0)])


def test_e_maps(a3, a2):
    C = a3.ctx
    assert C.e_map([("S2", 0)], ("I2", 0)) == ("I1", 0)
    assert C.e_map_inverse([("S2", 0)], ("I1", 0)) == ("I2", 0)
    assert C.e_map([("S2", 0)], ("P3", 1)) == ("P2", 1)
    assert C.e_map([("P3", 1)], ("S2", 0)) == ("S2", 0)
    assert a2.ctx.e_map([("I1", 0)], ("P2", 1)) == ("P1", 1)
    with pytest.raises(ValueError):
        C.e_map([("S2", 0)], ("P2", 1))


def test_e_map_over_lambda(lam):
    assert lam.ctx.e_map([("Ind(S2)", 0)], ("I2", 0)) == ("I1", 0)
    assert lam.ctx.e_map_inverse([("Ind(S2)", 0)], ("I1", 0)) == ("I2", 0)


def test_bongartz_completion(a3, lam):
    assert a3.ctx.bongartz([("P1", 0)]) == ["P1", "P2", "P3"]
    assert a3.ctx.bongartz([("S2", 0)]) == ["P1", "P2", "S2"]
    assert lam.ctx.bongartz([("Ind(S2)", 0)]) == ["P1", "P2", "Ind(S2)"]


def test_split_projectives(a3):
    C = a3.ctx
    assert C.split_projectives(["P1", "P2", "P3"]) == (["P1", "P2", "P3"], [])
    # I2 maps onto I1, so I1 is Ext-projective in Gen(I2 + I1) without being split
    assert C.split_projectives(["I2", "I1"]) == (["I2"], ["I1"])


def test_gen_minimality(a3):
    assert is_gen_minimal(a3.ctx, ["S2"])
    assert not is_gen_minimal(a3.ctx, ["I2", "I1"])
    assert is_gen_minimal(a3.ctx, ["I2", "S2"])


def test_lattices(lam):
    assert is_RQ_lattice(lam.ctx.rep("Ind(S2)"))
    assert is_R_exceptional(lam.ctx.rep("Ind(S2)"))
    assert not is_RQ_lattice(simple(lam.algebra, 1))
    assert all(is_R_exceptional(lam.ctx.rep(p)) for p in ("P1", "P2", "P3"))


def test_pair_classification(a3, lam):
    cl = a3.ctx.classify_pair("I1", "S2")
    assert cl["left"] == "irregular" and cl["left_mutable"] and cl["right_mutable"]
    assert a3.ctx.is_left_regular("P1", "P3")
    assert lam.ctx.classify_pair("I1", "Ind(S2)")["left"] == "irregular"


def test_pair_mutation(a3, a2, lam):
    c, b, info = a3.ctx.phi_pair("I1", "S2")
    assert (c, b) == ("I2", "I1") and info["branch"] == "irregular"
    assert info["ext_route"] == info["P_ns"] == ["I1", "I2"]
    c, b, info = a2.ctx.phi_pair("I1", "P2")
    assert (c, b) == ("P1", "I1") and info["branch"] == "regular"
    assert lam.ctx.phi_pair("I1", "Ind(S2)")[:2] == ("I2", "I1")


def test_pair_mutation_rejects_non_pairs(a3):
    with pytest.raises(ValueError):
        a3.ctx.phi_pair("S2", "I1")


def test_completeness_certificate(lam, ws_cache):
    ok, text = lam.ctx.certify_complete()
    assert ok and text.startswith("14 support tau-tilting objects")
    ok, _ = ws_cache("D4").ctx.certify_complete()
    assert ok


def test_incomplete_candidates_are_detected(a3):
    from taumut.tilting import Context
    partial = Context(a3.kq, [(x, a3.ctx.rep(x)) for x in a3.ctx.names if x != "S2"])
    ok, text = partial.certify_complete()
    assert not ok and "completions" in text
