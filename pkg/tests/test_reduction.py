from collections import deque

import pytest
from hypothesis import given, settings

import helpers
from conftest import nfas, port_nfas
from nfacomp import core, powerset, reduction
from nfacomp.families import reverse_friendly


A2 = reverse_friendly(2)


def dfa_equivalence_classes(d):
    """Table-filling reference: classes of reachable states of a complete DFA."""
    succ = {}
    for (s, y, t) in d.transitions:
        succ[(s, y)] = t
    reach = set(d.initial)
    queue = deque(d.initial)
    while queue:
        q = queue.popleft()
        for y in range(len(d.alphabet)):
            t = succ[(q, y)]
            if t not in reach:
                reach.add(t)
                queue.append(t)
    reach = sorted(reach)
    distinct = {(p, q) for p in reach for q in reach if (p in d.final) != (q in d.final)}
    changed = True
    while changed:
        changed = False
        for p in reach:
            for q in reach:
                if (p, q) in distinct:
                    continue
                for y in range(len(d.alphabet)):
                    if (succ[(p, y)], succ[(q, y)]) in distinct:
                        distinct.add((p, q))
                        distinct.add((q, p))
                        changed = True
                        break
    classes = []
    seen = set()
    for p in reach:
        if p in seen:
            continue
        cls = {q for q in reach if (p, q) not in distinct}
        seen |= cls
        classes.append(cls)
    return classes


def test_hopcroft_keeps_a2_at_eight():
    d = powerset.determinize(A2)
    assert reduction.hopcroft_minimize(d).num_states == 8


def test_hopcroft_merges_equivalent_finals():
    d = core.Nfa.build(("a",), 3, [(0, "a", 1), (1, "a", 2), (2, "a", 1)], {0}, {1, 2})
    m = reduction.hopcroft_minimize(d)
    assert m.num_states == 2
    assert helpers.brute_language(m, 5) == helpers.brute_language(d, 5)


def test_hopcroft_rejects_nondeterministic_input():
    with pytest.raises(ValueError):
        reduction.hopcroft_minimize(A2)


@given(nfas())
def test_hopcroft_matches_table_filling(a):
    d = powerset.determinize(a).nfa
    m = reduction.hopcroft_minimize(d)
    assert m.num_states == len(dfa_equivalence_classes(d))
    assert helpers.brute_language(m, 5) == helpers.brute_language(d, 5)
    # Idempotent: minimizing a minimum-size DFA changes nothing.
    assert reduction.hopcroft_minimize(m).num_states == m.num_states


def test_simulation_on_a2_is_trivial():
    sim = reduction.compute_simulation(A2)
    assert sim.relation == frozenset({(q, q) for q in range(4)})


def test_simulation_detects_dominated_branch():
    # 2 can do everything 1 can, so 1 is simulated by 2 (not vice versa).
    a = core.Nfa.build(
        ("a", "b"),
        4,
        [(0, "a", 1), (0, "a", 2), (1, "a", 3), (2, "a", 3), (2, "b", 3)],
        {0},
        {3},
    )
    rel = reduction.compute_simulation(a).relation
    assert (1, 2) in rel
    assert (2, 1) not in rel


def test_simulation_reduce_merges_duplicate_copies():
    doubled = core.union(A2, A2)
    assert doubled.num_states == 8
    r = reduction.simulation_reduce(doubled)
    assert r.num_states == 4
    assert helpers.brute_language(r, 6) == helpers.brute_language(A2, 6)


@given(nfas())
def test_simulation_reduce_preserves_language(a):
    r = reduction.simulation_reduce(a)
    assert r.num_states <= a.num_states
    assert helpers.brute_language(r, 5) == helpers.brute_language(a, 5)


@given(port_nfas(max_states=4))
@settings(max_examples=25)
def test_simulation_reduce_port_preserves_slices(p):
    r = reduction.simulation_reduce_port(p)
    assert r.num_states <= p.num_states
    assert r.num_entry == p.num_entry and r.num_exit == p.num_exit
    for i in range(p.num_entry):
        for j in range(p.num_exit):
            assert helpers.brute_language(r.slice(i, j), 4) == helpers.brute_language(
                p.slice(i, j), 4
            )
