import pytest
from hypothesis import given
import hypothesis.strategies as st

import helpers
from conftest import nfa_pairs, nfas, port_nfas
from nfacomp import core
from nfacomp.families import reverse_friendly


A2 = reverse_friendly(2)


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        core.Nfa.build(("a", "a"), 1, [], {0}, set())
    with pytest.raises(ValueError):
        core.Nfa.build(("a",), 1, [(0, "b", 0)], {0}, set())
    with pytest.raises(ValueError):
        core.Nfa.build(("a",), 1, [(0, "a", 1)], {0}, set())
    with pytest.raises(ValueError):
        core.Nfa.build(("a",), 1, [], {1}, set())
    with pytest.raises(ValueError):
        core.PortNfa.build(("a",), 1, [], [], [{0}])


def test_accepts_on_a2():
    # A_2 accepts exactly the words with an 'a' three letters from the end.
    assert core.accepts(A2, "aaa")
    assert core.accepts(A2, "abb")
    assert core.accepts(A2, "baba")
    assert not core.accepts(A2, "")
    assert not core.accepts(A2, "bbb")
    assert not core.accepts(A2, "ab")


def test_a2_shape_predicates():
    assert not core.is_deterministic(A2)
    assert not core.is_complete(A2)
    assert core.is_reverse_deterministic(A2)


@given(nfas(), st.lists(st.sampled_from("ab"), max_size=4))
def test_reverse_flips_words(a, w):
    w = [s for s in w if s in a.alphabet]
    assert core.accepts(core.reverse(a), w) == core.accepts(a, list(reversed(w)))


@given(nfas())
def test_trim_preserves_language(a):
    t = core.trim(a)
    assert t.num_states <= a.num_states
    assert helpers.brute_language(t, 6) == helpers.brute_language(a, 6)


@given(nfa_pairs())
def test_union_language(pair):
    a, b = pair
    u = core.union(a, b)
    for w in helpers.words_up_to(a.alphabet, 5):
        assert core.accepts(u, w) == (core.accepts(a, w) or core.accepts(b, w))


@given(nfa_pairs())
def test_product_intersection_language(pair):
    a, b = pair
    x = core.product_intersection(a, b)
    for w in helpers.words_up_to(a.alphabet, 5):
        assert core.accepts(x, w) == (core.accepts(a, w) and core.accepts(b, w))


@given(nfa_pairs(max_states=5))
def test_antichain_inclusion_matches_enumeration(pair):
    a, b = pair
    # Length-6 enumeration is sound for refutation and only suggestive for
    # inclusion, so check the two directions asymmetrically.
    inc = core.antichain_inclusion(a, b)
    if not helpers.brute_included(a, b, 6):
        assert not inc
    if inc:
        assert helpers.brute_included(a, b, 6)


@given(nfa_pairs(max_states=4))
def test_language_equivalent_and_disjoint(pair):
    a, b = pair
    eq = core.language_equivalent(a, b)
    assert eq == (
        core.antichain_inclusion(a, b) and core.antichain_inclusion(b, a)
    )
    dis = core.language_disjoint(a, b)
    brute_dis = all(
        not (core.accepts(a, w) and core.accepts(b, w))
        for w in helpers.words_up_to(a.alphabet, 6)
    )
    if not brute_dis:
        assert not dis
    if dis:
        assert brute_dis


def test_is_empty():
    assert core.is_empty(core.Nfa.build(("a",), 1, [(0, "a", 0)], {0}, set()))
    assert not core.is_empty(A2)


def test_scc_condensation_of_a2():
    dag = core.scc_condensation(A2)
    assert dag.components == (
        frozenset({0}),
        frozenset({1}),
        frozenset({2}),
        frozenset({3}),
    )
    assert sorted(dag.edges) == [(0, 1, 1), (1, 2, 2), (2, 3, 2)]


@given(nfas(max_states=7))
def test_scc_condensation_against_networkx(a):
    nx = pytest.importorskip("networkx")
    g = nx.DiGraph()
    g.add_nodes_from(range(a.num_states))
    g.add_edges_from((s, t) for (s, _y, t) in a.transitions)
    expected = {frozenset(c) for c in nx.strongly_connected_components(g)}
    dag = core.scc_condensation(a)
    assert set(dag.components) == expected
    # Component order is topological: every edge goes left to right.
    for i, j, cap in dag.edges:
        assert i < j
        crossing = sum(
            1
            for (s, _y, t) in a.transitions
            if s in dag.components[i] and t in dag.components[j]
        )
        assert cap == crossing


def test_slice_and_induced():
    p = core.PortNfa.build(
        ("a",), 3, [(0, "a", 1), (1, "a", 2)], [{0}, {1}], [{2}]
    )
    s = p.slice(1, 0)
    assert s.initial == frozenset({1}) and s.final == frozenset({2})
    assert core.accepts(s, "a") and not core.accepts(s, "aa")
    sub = core.induced(core.Nfa.build(("a",), 3, [(0, "a", 1), (1, "a", 2)], {0}, {2}), [0, 1])
    assert sub.num_states == 2
    assert sub.transitions == frozenset({(0, 0, 1)})


@given(port_nfas())
def test_union_port_slicewise(p):
    q = core.union_port(p, p)
    for i in range(p.num_entry):
        for j in range(p.num_exit):
            assert helpers.brute_language(q.slice(i, j), 4) == helpers.brute_language(
                p.slice(i, j), 4
            )


def test_sequential_partition_of():
    b = core.Nfa.build(("a",), 3, [(0, "a", 1), (1, "a", 2)], {0}, {2})
    p = core.SequentialPartition.of(b, [0, 1])
    assert p.front_states == (0, 1) and p.rear_states == (2,)
    assert p.transfer == ((1, 0, 2),)
    assert p.gate_symbols == (0,) and p.gate_targets == (2,)
    rt = p.rear_for_targets()
    assert rt.num_entry == p.rear.num_entry + 1
    assert rt.entry_sets[-1] == frozenset({0})
    with pytest.raises(ValueError):
        core.SequentialPartition.of(b, [1])  # 0 -> 1 would cross backwards
