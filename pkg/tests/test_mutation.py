import pytest

from taumut.mutation import (
    emit_dot,
    enumerate_complete,
    mutation_graph,
    phi,
    phi_inverse,
    sigma,
    sigma_constructive,
    validate_exceptional,
    validate_tau_exceptional,
)
from taumut.tilting import ContextError


def test_validation(a3):
    C = a3.ctx
    assert validate_exceptional(C, ("P3", "P2", "P1"))
    assert validate_exceptional(C, ("I1", "S2")) and validate_tau_exceptional(C, ("I1", "S2"))
    assert not validate_tau_exceptional(C, ("S2", "I1"))
    assert not validate_exceptional(C, ("S2", "I1"))


def test_exceptional_with_small_pd_is_tau_exceptional(a3):
    # every exceptional sequence over a hereditary algebra is tau-exceptional
    import itertools
    C = a3.ctx
    for r in (1, 2, 3):
        for seq in itertools.permutations(C.names, r):
            if validate_exceptional(C, seq):
                assert validate_tau_exceptional(C, seq)


def test_enumeration_counts(a2, a3, lam):
    assert enumerate_complete(a2.ctx) == [("I1", "P2"), ("P1", "I1"), ("P2", "P1")]
    assert len(enumerate_complete(a3.ctx)) == 16
    assert len(lam.sequences()) == 16


def test_sigma_examples(a3):
    C = a3.ctx
    assert sigma(C, ("P3", "P2", "P1"), 1) == ("S2", "P3", "P1")
    assert sigma(C, ("P3", "P2", "P1"), 2) == ("P3", "I1", "P2")
    assert sigma(C, ("I1", "S2", "P3"), 1) == ("I2", "I1", "P3")
    assert sigma(C, ("I2", "I1", "P3"), 1, right=True) == ("I1", "S2", "P3")
    with pytest.raises(ValueError):
        sigma(C, ("P3", "P2", "P1"), 3)


def test_sigma_constructive_cases(a3):
    C = a3.ctx
    assert sigma_constructive(C, "I1", "S2") == ["I2"]   # extension
    assert sigma_constructive(C, "P3", "P2") == ["S2"]   # cokernel
    assert sigma_constructive(C, "P1", "I1") == ["P2"]   # kernel
    assert sigma_constructive(C, "P3", "I1") == ["I1"]   # transposition


def test_phi_examples(lam):
    C = lam.ctx
    assert phi(C, ("I1", "Ind(S2)", "P3"), 1) == ("I2", "I1", "P3")
    assert phi(C, ("P3", "P2", "P1"), 1) == ("Ind(S2)", "P3", "P1")
    assert phi(C, ("P3", "P2", "P1"), 2) == ("P3", "I1", "P2")
    assert phi_inverse(C, ("I2", "I1", "P3"), 1) == ("I1", "Ind(S2)", "P3")


def test_phi_on_partial_sequences(lam):
    assert phi(lam.ctx, ("I1", "Ind(S2)"), 1) == ("I2", "I1")


def test_phi_rejects_bad_input(lam):
    with pytest.raises(ValueError):
        phi(lam.ctx, ("Ind(S2)", "I1", "P3"), 1)
    with pytest.raises(ValueError):
        phi(lam.ctx, ("P3", "P2", "P1"), 0)


def test_a2_graph_is_a_three_cycle(a2, ws_cache):
    for ws in (a2, ws_cache("A2", 3)):
        g = mutation_graph(ws.ctx)
        assert len(g.vertices) == 3 and len(g.edges) == 3
        v = g.vertices[0]
        orbit = {v, g.successor(v, 1), g.successor(g.successor(v, 1), 1)}
        assert len(orbit) == 3 and g.successor(g.successor(g.successor(v, 1), 1), 1) == v


def test_phi_is_a_permutation(lam):
    g = lam.graph()
    for i in (1, 2):
        targets = [t for s, k, t in g.edges if k == i]
        assert sorted(targets) == g.vertices


def test_dot_output(a2):
    g = mutation_graph(a2.ctx, threads=1)
    text = emit_dot(g)
    assert text.startswith("digraph mutation {")
    assert text.count("style=solid") == 3 and "dashed" not in text
    assert emit_dot(mutation_graph(a2.ctx, threads=3)) == text


def test_dot_labels_higher_indices(ws_cache):
    text = emit_dot(mutation_graph(ws_cache("D4").ctx))
    assert text.count('label="phi_3"') == 162
    assert text.count("style=dashed") == 162


def test_mutation_of_irregular_pair_matches_extension_route(a3):
    for s in enumerate_complete(a3.ctx):
        for i in (1, 2):
            K = a3.ctx.chain(s[i + 1:])
            _, _, info = K.phi_pair(s[i - 1], s[i])
            if info["branch"] == "irregular" and info["ext_route"] is not None:
                assert info["ext_route"] == info["P_ns"]
