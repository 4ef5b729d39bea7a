"""Direction selection: estimate which powerset direction stays smaller.

The score sums, over every state, the sizes of its distinct successor sets
(one count per set, however many symbols produce it), plus the number of
initial states.  A large score hints at macrostate blow-up in that direction,
so the smaller-scoring side is determinized.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import core
from .core import Nfa
from .powerset import Direction, forward_complement, reverse_complement


@dataclass(frozen=True)
class DirectionChoice:
    score_forward: int
    score_reverse: int
    choice: Direction

    def __post_init__(self):
        expected = Direction.REVERSE if self.score_forward >= self.score_reverse else Direction.FORWARD
        if self.choice is not expected:
            raise ValueError("choice contradicts the scores")


def det_successor_score(a: Nfa) -> int:
    """|I| plus the summed sizes of each state's distinct successor sets."""
    n = a.num_states
    score = len(a.initial)
    for q in range(n):
        distinct = {a.succ_masks[sym * n + q] for sym in range(len(a.alphabet))}
        distinct.discard(0)
        score += sum(m.bit_count() for m in distinct)
    return score


def choose_direction(a: Nfa) -> DirectionChoice:
    """Score both directions; ties go to reverse."""
    score_forward = det_successor_score(a)
    score_reverse = det_successor_score(core.reverse(a))
    choice = Direction.REVERSE if score_forward >= score_reverse else Direction.FORWARD
    return DirectionChoice(score_forward, score_reverse, choice)


def auto_complement(a: Nfa, *, budget: int | None = None) -> tuple[Nfa, DirectionChoice]:
    """Complement via the direction the heuristic picks."""
    decision = choose_direction(a)
    if decision.choice is Direction.REVERSE:
        return reverse_complement(a, budget=budget), decision
    return forward_complement(a, budget=budget), decision
