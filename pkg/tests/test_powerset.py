import pytest
from hypothesis import given, settings

import helpers
from conftest import nfas, port_nfas
from nfacomp import core, powerset
from nfacomp.errors import BudgetExceededError
from nfacomp.families import reverse_friendly


A2 = reverse_friendly(2)


def test_determinize_a2():
    d = powerset.determinize(A2)
    assert d.nfa.num_states == 8
    assert core.is_deterministic(d.nfa) and core.is_complete(d.nfa)
    assert d.macrostates[0] == frozenset({0})
    assert d.nfa.state_names[0] == "{0}"
    # Every macrostate of det(A_2) contains the looping start state.
    assert all(0 in m for m in d.macrostates)


def test_determinize_reverse_a2():
    d = powerset.determinize(core.reverse(A2))
    assert d.nfa.num_states == 5


@given(nfas())
def test_determinize_language(a):
    d = powerset.determinize(a)
    assert core.is_deterministic(d.nfa) and core.is_complete(d.nfa)
    assert helpers.brute_language(d.nfa, 5) == helpers.brute_language(a, 5)


def test_forward_complement_a2():
    c = powerset.forward_complement(A2)
    assert c.num_states == 8
    assert powerset.forward_complement(A2, trim=False).num_states == 8
    assert helpers.brute_complement_ok(A2, c, 6)


def test_reverse_complement_a2_structure():
    c = powerset.reverse_complement(A2)
    assert c.num_states == 4
    assert c.state_names == ("{3}", "{2}", "{1}", "{}")
    assert c.initial == frozenset({0, 1, 2, 3})
    assert c.final == frozenset({0})
    named = sorted(
        (c.state_names[s], c.alphabet[y], c.state_names[t]) for (s, y, t) in c.transitions
    )
    assert named == [
        ("{1}", "a", "{2}"),
        ("{1}", "b", "{2}"),
        ("{2}", "a", "{3}"),
        ("{2}", "b", "{3}"),
        ("{}", "a", "{}"),
        ("{}", "b", "{1}"),
        ("{}", "b", "{}"),
    ]


def test_family_sizes_small():
    for n in (1, 2, 3, 4):
        a = reverse_friendly(n)
        assert powerset.forward_complement(a).num_states == 2 ** (n + 1)
        assert powerset.reverse_complement(a).num_states == n + 2


@given(nfas())
def test_forward_complement_is_complement(a):
    c = powerset.forward_complement(a)
    assert helpers.brute_complement_ok(a, c, 5)


@given(nfas())
def test_reverse_complement_is_complement(a):
    c = powerset.reverse_complement(a)
    assert helpers.brute_complement_ok(a, c, 5)
    # The reverse route always returns a trim automaton.
    assert c.num_states == core.trim(c).num_states


def test_complement_of_empty_language_is_universal():
    a = core.Nfa.build(("a", "b"), 2, [(0, "a", 1)], {0}, set())
    for c in (powerset.forward_complement(a), powerset.reverse_complement(a)):
        assert all(core.accepts(c, w) for w in helpers.words_up_to(("a", "b"), 4))


def test_complement_dfa_requires_deterministic():
    with pytest.raises(ValueError):
        powerset.complement_dfa(A2)


def test_budget_exceeded():
    a = reverse_friendly(4)
    with pytest.raises(BudgetExceededError):
        powerset.forward_complement(a, budget=5)
    with pytest.raises(BudgetExceededError):
        powerset.determinize(a, budget=5)


# --- port variants ----------------------------------------------------------


@given(port_nfas(max_states=4))
@settings(max_examples=25)
def test_port_complements_every_slice(p):
    for c in (powerset.port_forward_complement(p), powerset.port_reverse_complement(p)):
        assert c.num_entry == p.num_entry and c.num_exit == p.num_exit
        for i in range(p.num_entry):
            for j in range(p.num_exit):
                assert helpers.brute_complement_ok(p.slice(i, j), c.slice(i, j), 4)


def test_port_determinize_shares_macrostates():
    p = core.PortNfa.build(
        ("a", "b"),
        3,
        [(0, "a", 1), (1, "a", 2), (0, "b", 0)],
        [{0}, {1}],
        [{2}],
    )
    d = powerset.port_determinize(p)
    # One exploration covers both entry ports; every slice is deterministic.
    for i in range(d.num_entry):
        s = d.slice(i, 0)
        t = core.trim(s)
        assert core.is_deterministic(t)
        assert helpers.brute_language(s, 4) == helpers.brute_language(p.slice(i, 0), 4)
