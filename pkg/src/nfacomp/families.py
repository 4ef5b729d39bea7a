"""Generators for the witness families used throughout the test suite.

All three families are parametric chains over {a, b} (plus a gate symbol c
for the third one) whose complements behave very differently depending on
the direction of determinization.  The constructions are deterministic:
the same (kind, n) always yields a byte-for-byte identical automaton.
"""

from __future__ import annotations

from .core import Nfa

FAMILY_KINDS = ("reverse", "sequential", "gate")


def reverse_friendly(n: int) -> Nfa:
    """The n-th member of the reverse-friendly family (n + 2 states).

    Accepts {a,b}* a {a,b}^n: an `a` must occur exactly n+1 letters before
    the end of the word.  Forward determinization explodes to 2^(n+1)
    macrostates while the reverse direction stays linear.  n = 0 is allowed
    and gives the two-state automaton for {a,b}* a.
    """
    if n < 0:
        raise ValueError("family index must be nonnegative")
    trans = [(0, "a", 0), (0, "b", 0), (0, "a", 1)]
    for k in range(1, n + 1):
        trans.append((k, "a", k + 1))
        trans.append((k, "b", k + 1))
    return Nfa.build(("a", "b"), n + 2, trans, {0}, {n + 1}, name=f"A{n}")


def sequential_chain(n: int) -> Nfa:
    """The n-th member of the sequential family (2n + 3 states).

    Accepts {a,b}^n a {a,b}* a {a,b}^n.  A fixed-length prefix chain feeds a
    loop state through an `a`-guess, and a second guess leaves the loop into
    a fixed-length suffix chain.  Both powerset directions blow up on it,
    but splitting between the chains keeps the complement linear.
    """
    if n < 1:
        raise ValueError("family index must be at least 1")
    trans = []
    for k in range(n):  # prefix chain 0 .. n
        trans.append((k, "a", k + 1))
        trans.append((k, "b", k + 1))
    trans.append((n, "a", n + 1))
    trans.append((n + 1, "a", n + 1))
    trans.append((n + 1, "b", n + 1))
    trans.append((n + 1, "a", n + 2))
    for k in range(n + 2, 2 * n + 2):  # suffix chain n+2 .. 2n+2
        trans.append((k, "a", k + 1))
        trans.append((k, "b", k + 1))
    return Nfa.build(("a", "b"), 2 * n + 3, trans, {0}, {2 * n + 2}, name=f"B{n}")


def gate_chain(n: int) -> Nfa:
    """The n-th member of the gate family (2n + 4 states).

    Accepts ({a,b}* a {a,b}^n) c ({a,b}^n a {a,b}*): a reverse-friendly
    front and its mirror image as the rear, joined by a single transition
    under the gate symbol c, which appears nowhere else.
    """
    if n < 1:
        raise ValueError("family index must be at least 1")
    trans = [(0, "a", 0), (0, "b", 0), (0, "a", 1)]
    for k in range(1, n + 1):  # front chain 1 .. n+1
        trans.append((k, "a", k + 1))
        trans.append((k, "b", k + 1))
    trans.append((n + 1, "c", n + 2))
    for k in range(n + 2, 2 * n + 2):  # rear chain n+2 .. 2n+2
        trans.append((k, "a", k + 1))
        trans.append((k, "b", k + 1))
    trans.append((2 * n + 2, "a", 2 * n + 3))
    trans.append((2 * n + 3, "a", 2 * n + 3))
    trans.append((2 * n + 3, "b", 2 * n + 3))
    return Nfa.build(("a", "b", "c"), 2 * n + 4, trans, {0}, {2 * n + 3}, name=f"G{n}")


def generate_family(kind: str, n: int) -> Nfa:
    """Dispatch by family name: "reverse", "sequential", or "gate"."""
    if kind == "reverse":
        return reverse_friendly(n)
    if kind == "sequential":
        return sequential_chain(n)
    if kind == "gate":
        return gate_chain(n)
    raise ValueError(f"unknown family {kind!r} (expected one of {', '.join(FAMILY_KINDS)})")
