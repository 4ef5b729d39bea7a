"""Seeded random automata and brute-force reference implementations.

Everything here is deliberately naive: the point is to have a second,
independent route to every answer the library computes cleverly.
"""

import itertools

from nfacomp import core


LETTERS = "abc"


def random_nfa(rng, max_states=8, max_syms=3, force_final=False):
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_syms)
    alphabet = tuple(LETTERS[:k])
    p = rng.uniform(0.5, 2.0) / n
    trans = [
        (q, sym, r)
        for q in range(n)
        for sym in alphabet
        for r in range(n)
        if rng.random() < p
    ]
    initial = {q for q in range(n) if rng.random() < 0.3} or {rng.randrange(n)}
    final = {q for q in range(n) if rng.random() < 0.3}
    if force_final and not final:
        final = {rng.randrange(n)}
    return core.Nfa.build(alphabet, n, trans, initial, final)


def random_port_nfa(rng, max_states=6, num_entry=2, num_exit=2, max_syms=2):
    n = rng.randint(1, max_states)
    k = rng.randint(1, max_syms)
    alphabet = tuple(LETTERS[:k])
    p = rng.uniform(0.5, 2.0) / n
    trans = [
        (q, sym, r)
        for q in range(n)
        for sym in alphabet
        for r in range(n)
        if rng.random() < p
    ]

    def port_set():
        # Mostly non-empty, but empty port sets are legal and worth hitting.
        s = {q for q in range(n) if rng.random() < 0.4}
        if not s and rng.random() < 0.85:
            s = {rng.randrange(n)}
        return s

    return core.PortNfa.build(
        alphabet,
        n,
        trans,
        [port_set() for _ in range(num_entry)],
        [port_set() for _ in range(num_exit)],
    )


def words_up_to(alphabet, max_len):
    """All words over `alphabet` of length <= max_len, shortest first."""
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


def brute_language(a, max_len):
    return {w for w in words_up_to(a.alphabet, max_len) if core.accepts(a, w)}


def brute_included(a, b, max_len):
    return all(core.accepts(b, w) for w in words_up_to(a.alphabet, max_len) if core.accepts(a, w))


def brute_complement_ok(a, c, max_len):
    return all(
        core.accepts(c, w) != core.accepts(a, w) for w in words_up_to(a.alphabet, max_len)
    )


def concat_with_gate(a1, a2, c):
    """L(a1) . c . L(a2) as one NFA; the reference input for basic-gate tests."""
    if a1.alphabet != a2.alphabet:
        raise ValueError("alphabets differ")
    off = a1.num_states
    trans = set(a1.transitions)
    trans.update((s + off, y, t + off) for (s, y, t) in a2.transitions)
    cid = a1.symbol_ids[c]
    trans.update((f, cid, i + off) for f in a1.final for i in a2.initial)
    return core.Nfa(
        a1.alphabet,
        off + a2.num_states,
        frozenset(trans),
        a1.initial,
        frozenset(q + off for q in a2.final),
    )


def random_gate_instance(rng, max_component_states=10):
    """A pair (a1, a2) over {a, b, c} where neither component touches c."""

    def component(single_final, single_initial):
        n = rng.randint(1, max_component_states)
        p = rng.uniform(0.5, 2.0) / n
        trans = [
            (q, sym, r)
            for q in range(n)
            for sym in "ab"
            for r in range(n)
            if rng.random() < p
        ]
        initial = {0} if single_initial else (
            {q for q in range(n) if rng.random() < 0.3} or {rng.randrange(n)}
        )
        final = {n - 1} if single_final else (
            {q for q in range(n) if rng.random() < 0.3} or {rng.randrange(n)}
        )
        return core.Nfa.build(("a", "b", "c"), n, trans, initial, final)

    return component(False, False), component(False, False)
