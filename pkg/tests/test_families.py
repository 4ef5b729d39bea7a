import pytest

from nfacomp import core, families


def test_reverse_friendly_structure():
    a = families.reverse_friendly(2)
    assert a.name == "A2"
    assert a.alphabet == ("a", "b")
    assert a.num_states == 4
    assert a.initial == frozenset({0}) and a.final == frozenset({3})
    assert a.transitions == frozenset(
        {(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 2), (1, 1, 2), (2, 0, 3), (2, 1, 3)}
    )


def test_reverse_friendly_n0():
    a = families.reverse_friendly(0)
    assert a.num_states == 2
    assert core.accepts(a, "a") and core.accepts(a, "ba")
    assert not core.accepts(a, "ab")


def test_sequential_chain_structure():
    b = families.sequential_chain(1)
    assert b.name == "B1"
    assert b.num_states == 5
    assert b.initial == frozenset({0}) and b.final == frozenset({4})
    # One mandatory letter, a marked 'a', free middle, a marked 'a', one letter.
    assert core.accepts(b, "aaaa")
    assert core.accepts(b, "babab")
    assert not core.accepts(b, "aaa")
    assert not core.accepts(b, "bb")


def test_gate_chain_structure():
    g = families.gate_chain(1)
    assert g.name == "G1"
    assert g.alphabet == ("a", "b", "c")
    assert g.num_states == 6
    assert g.initial == frozenset({0}) and g.final == frozenset({5})
    ids = g.symbol_ids
    assert g.transitions == frozenset(
        {
            (0, ids["a"], 0), (0, ids["b"], 0), (0, ids["a"], 1),
            (1, ids["a"], 2), (1, ids["b"], 2),
            (2, ids["c"], 3),
            (3, ids["a"], 4), (3, ids["b"], 4),
            (4, ids["a"], 5),
            (5, ids["a"], 5), (5, ids["b"], 5),
        }
    )
    assert core.accepts(g, "aacaa")
    assert core.accepts(g, "abcba")
    assert not core.accepts(g, "ca")
    assert not core.accepts(g, "aacab")


def test_family_sizes():
    for n in range(1, 7):
        assert families.reverse_friendly(n).num_states == n + 2
        assert families.sequential_chain(n).num_states == 2 * n + 3
        assert families.gate_chain(n).num_states == 2 * n + 4


def test_generate_family_dispatch():
    assert families.generate_family("reverse", 3).name == "A3"
    assert families.generate_family("sequential", 2).name == "B2"
    assert families.generate_family("gate", 2).name == "G2"
    with pytest.raises(ValueError):
        families.generate_family("nope", 1)
    with pytest.raises(ValueError):
        families.generate_family("sequential", 0)
    with pytest.raises(ValueError):
        families.generate_family("reverse", -1)
