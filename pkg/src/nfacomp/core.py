"""Core automata model: plain NFAs, port NFAs, and language-level queries.

States are dense integers ``0..num_states-1``; display names live in an
optional side table.  Transition symbols are stored as indices into the
ordered ``alphabet`` tuple.  State sets cross into the kernel layer as int
bitmasks; everything user-facing stays as frozensets of state ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

from . import _kernels
from .errors import BudgetExceededError

Transition = tuple[int, int, int]  # (src, symbol index, dst)


def _check_alphabet(alphabet: tuple[str, ...]) -> None:
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError("alphabet has duplicate symbols")


def _check_transitions(num_states, alphabet, transitions) -> None:
    for (src, sym, dst) in transitions:
        if not (0 <= src < num_states and 0 <= dst < num_states):
            raise ValueError(f"transition ({src},{sym},{dst}) leaves the state range")
        if not (0 <= sym < len(alphabet)):
            raise ValueError(f"transition ({src},{sym},{dst}) uses an unknown symbol index")


def _check_states(num_states, states: Iterable[int], what: str) -> None:
    for q in states:
        if not (0 <= q < num_states):
            raise ValueError(f"{what} contains {q}, outside the state range")


def _resolve_transitions(transitions, symbol_ids) -> frozenset[Transition]:
    out = set()
    for (src, sym, dst) in transitions:
        if not isinstance(sym, int):
            try:
                sym = symbol_ids[sym]
            except KeyError:
                raise ValueError(f"unknown symbol {sym!r}") from None
        out.add((src, sym, dst))
    return frozenset(out)


def _succ_masks(num_states: int, num_syms: int, transitions) -> list[int]:
    """Flat successor table for the kernels: index sym*num_states+q -> bitmask."""
    table = [0] * (num_syms * num_states)
    for (src, sym, dst) in transitions:
        table[sym * num_states + src] |= 1 << dst
    return table


def _mask_of(states: Iterable[int]) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


@dataclass(frozen=True)
class Nfa:
    """A nondeterministic finite automaton (Q, Sigma, delta, I, F)."""

    alphabet: tuple[str, ...]
    num_states: int
    transitions: frozenset[Transition]
    initial: frozenset[int]
    final: frozenset[int]
    state_names: tuple[str, ...] | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(map(tuple, self.transitions)))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        _check_alphabet(self.alphabet)
        _check_transitions(self.num_states, self.alphabet, self.transitions)
        _check_states(self.num_states, self.initial, "initial")
        _check_states(self.num_states, self.final, "final")
        if self.state_names is not None:
            object.__setattr__(self, "state_names", tuple(self.state_names))
            if len(self.state_names) != self.num_states:
                raise ValueError("state_names length must match num_states")

    @classmethod
    def build(cls, alphabet, num_states, transitions, initial, final, *, state_names=None, name=None):
        """Like the constructor, but transition symbols may be given as strings."""
        alphabet = tuple(alphabet)
        ids = {s: i for i, s in enumerate(alphabet)}
        return cls(
            alphabet,
            num_states,
            _resolve_transitions(transitions, ids),
            frozenset(initial),
            frozenset(final),
            state_names=state_names,
            name=name,
        )

    @cached_property
    def symbol_ids(self) -> dict:
        return {s: i for i, s in enumerate(self.alphabet)}

    @cached_property
    def succ_masks(self) -> list[int]:
        return _succ_masks(self.num_states, len(self.alphabet), self.transitions)

    @cached_property
    def initial_mask(self) -> int:
        return _mask_of(self.initial)

    @cached_property
    def final_mask(self) -> int:
        return _mask_of(self.final)

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)

    def successors(self, q: int, sym: int) -> frozenset[int]:
        return frozenset(_bits(self.succ_masks[sym * self.num_states + q]))

    def state_name(self, q: int) -> str:
        return self.state_names[q] if self.state_names is not None else str(q)

    def as_port(self) -> "PortNfa":
        """The same automaton with one entry port set (I) and one exit port set (F)."""
        return PortNfa(
            self.alphabet,
            self.num_states,
            self.transitions,
            (self.initial,),
            (self.final,),
            state_names=self.state_names,
            name=self.name,
        )


@dataclass(frozen=True)
class PortNfa:
    """An NFA with ordered families of entry and exit port sets.

    The pair (entry_sets[i], exit_sets[j]) induces the slice(i, j) automaton;
    the port NFA stands for the whole matrix of these languages at once.
    """

    alphabet: tuple[str, ...]
    num_states: int
    transitions: frozenset[Transition]
    entry_sets: tuple[frozenset[int], ...]
    exit_sets: tuple[frozenset[int], ...]
    state_names: tuple[str, ...] | None = None
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(map(tuple, self.transitions)))
        object.__setattr__(self, "entry_sets", tuple(frozenset(s) for s in self.entry_sets))
        object.__setattr__(self, "exit_sets", tuple(frozenset(s) for s in self.exit_sets))
        _check_alphabet(self.alphabet)
        _check_transitions(self.num_states, self.alphabet, self.transitions)
        if not self.entry_sets or not self.exit_sets:
            raise ValueError("port NFA needs at least one entry and one exit port set")
        for i, s in enumerate(self.entry_sets):
            _check_states(self.num_states, s, f"entry set {i}")
        for j, s in enumerate(self.exit_sets):
            _check_states(self.num_states, s, f"exit set {j}")
        if self.state_names is not None:
            object.__setattr__(self, "state_names", tuple(self.state_names))
            if len(self.state_names) != self.num_states:
                raise ValueError("state_names length must match num_states")

    @classmethod
    def build(cls, alphabet, num_states, transitions, entry_sets, exit_sets, *, state_names=None, name=None):
        alphabet = tuple(alphabet)
        ids = {s: i for i, s in enumerate(alphabet)}
        return cls(
            alphabet,
            num_states,
            _resolve_transitions(transitions, ids),
            tuple(frozenset(s) for s in entry_sets),
            tuple(frozenset(s) for s in exit_sets),
            state_names=state_names,
            name=name,
        )

    @cached_property
    def symbol_ids(self) -> dict:
        return {s: i for i, s in enumerate(self.alphabet)}

    @cached_property
    def succ_masks(self) -> list[int]:
        return _succ_masks(self.num_states, len(self.alphabet), self.transitions)

    @property
    def num_transitions(self) -> int:
        return len(self.transitions)

    @property
    def num_entry(self) -> int:
        return len(self.entry_sets)

    @property
    def num_exit(self) -> int:
        return len(self.exit_sets)

    def state_name(self, q: int) -> str:
        return self.state_names[q] if self.state_names is not None else str(q)

    def slice(self, i: int, j: int) -> Nfa:
        return slice_port(self, i, j)


Automaton = Union[Nfa, PortNfa]


@dataclass(frozen=True)
class SccDag:
    """Condensation of an automaton: SCCs in topological order plus capacities.

    ``edges`` holds (from_index, to_index, capacity) triples where the
    capacity counts the individual transitions crossing between the two
    components.
    """

    components: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int, int], ...]

    @cached_property
    def component_index(self) -> dict:
        out = {}
        for ci, comp in enumerate(self.components):
            for q in comp:
                out[q] = ci
        return out

    def index_of(self, q: int) -> int:
        return self.component_index[q]


# ---------------------------------------------------------------------------
# Structural operations


def reverse(a: Nfa) -> Nfa:
    """Flip every transition and swap initial with final states."""
    return Nfa(
        a.alphabet,
        a.num_states,
        frozenset((dst, sym, src) for (src, sym, dst) in a.transitions),
        a.final,
        a.initial,
        state_names=a.state_names,
    )


def reverse_port(a: PortNfa) -> PortNfa:
    """Flip every transition and swap the entry/exit port-set families."""
    return PortNfa(
        a.alphabet,
        a.num_states,
        frozenset((dst, sym, src) for (src, sym, dst) in a.transitions),
        a.exit_sets,
        a.entry_sets,
        state_names=a.state_names,
    )


def _merged_names(a, b):
    if a.state_names is None and b.state_names is None:
        return None
    names = [a.state_name(q) for q in range(a.num_states)]
    names += [b.state_name(q) for q in range(b.num_states)]
    return _uniquify(names)


def _uniquify(names) -> tuple[str, ...]:
    used = set()
    out = []
    for n in names:
        if n in used:
            k = 2
            while f"{n}_{k}" in used:
                k += 1
            n = f"{n}_{k}"
        used.add(n)
        out.append(n)
    return tuple(out)


def union(a: Nfa, b: Nfa) -> Nfa:
    """Disjoint union; b's states are relabeled past a's."""
    if a.alphabet != b.alphabet:
        raise ValueError("union requires matching alphabets")
    off = a.num_states
    trans = set(a.transitions)
    trans.update((src + off, sym, dst + off) for (src, sym, dst) in b.transitions)
    return Nfa(
        a.alphabet,
        off + b.num_states,
        frozenset(trans),
        a.initial | frozenset(q + off for q in b.initial),
        a.final | frozenset(q + off for q in b.final),
        state_names=_merged_names(a, b),
    )


def union_port(a: PortNfa, b: PortNfa) -> PortNfa:
    """Element-wise disjoint union; requires equal entry/exit arities."""
    if a.alphabet != b.alphabet:
        raise ValueError("union requires matching alphabets")
    if a.num_entry != b.num_entry or a.num_exit != b.num_exit:
        raise ValueError("port union requires matching port arities")
    off = a.num_states
    trans = set(a.transitions)
    trans.update((src + off, sym, dst + off) for (src, sym, dst) in b.transitions)
    return PortNfa(
        a.alphabet,
        off + b.num_states,
        frozenset(trans),
        tuple(ea | frozenset(q + off for q in eb) for ea, eb in zip(a.entry_sets, b.entry_sets)),
        tuple(fa | frozenset(q + off for q in fb) for fa, fb in zip(a.exit_sets, b.exit_sets)),
        state_names=_merged_names(a, b),
    )


def slice_port(a: PortNfa, i: int, j: int) -> Nfa:
    """The plain NFA with initial = entry_sets[i] and final = exit_sets[j]."""
    if not (0 <= i < a.num_entry):
        raise IndexError(f"entry port index {i} out of range")
    if not (0 <= j < a.num_exit):
        raise IndexError(f"exit port index {j} out of range")
    return Nfa(
        a.alphabet,
        a.num_states,
        a.transitions,
        a.entry_sets[i],
        a.exit_sets[j],
        state_names=a.state_names,
    )


def scc_condensation(a: Automaton) -> SccDag:
    """Tarjan decomposition; components come out in topological order."""
    n = a.num_states
    adj = [[] for _ in range(n)]
    for (src, _sym, dst) in a.transitions:
        adj[src].append(dst)
    adj = [sorted(set(vs)) for vs in adj]

    index = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    stack: list[int] = []
    emitted: list[frozenset[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            descended = False
            for k in range(pi, len(adj[v])):
                w = adj[v][k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp.append(w)
                    if w == v:
                        break
                emitted.append(frozenset(comp))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])

    components = tuple(reversed(emitted))  # Tarjan emits in reverse topological order
    comp_of = {}
    for ci, comp in enumerate(components):
        for q in comp:
            comp_of[q] = ci
    caps: dict[tuple[int, int], int] = {}
    for (src, _sym, dst) in a.transitions:
        ci, cj = comp_of[src], comp_of[dst]
        if ci != cj:
            caps[(ci, cj)] = caps.get((ci, cj), 0) + 1
    edges = tuple(sorted((i, j, c) for (i, j), c in caps.items()))
    return SccDag(components, edges)


def _closure(seed: Iterable[int], adj: list[list[int]]) -> set[int]:
    seen = set(seed)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def _both_adjacency(a: Automaton):
    fwd = [[] for _ in range(a.num_states)]
    bwd = [[] for _ in range(a.num_states)]
    for (src, _sym, dst) in a.transitions:
        fwd[src].append(dst)
        bwd[dst].append(src)
    return fwd, bwd


def induced(a: Nfa, keep: Iterable[int]) -> Nfa:
    """Subautomaton on ``keep`` (relabeled densely, order-preserving)."""
    keep = sorted(set(keep))
    remap = {q: i for i, q in enumerate(keep)}
    return Nfa(
        a.alphabet,
        len(keep),
        frozenset(
            (remap[src], sym, remap[dst])
            for (src, sym, dst) in a.transitions
            if src in remap and dst in remap
        ),
        frozenset(remap[q] for q in a.initial if q in remap),
        frozenset(remap[q] for q in a.final if q in remap),
        state_names=tuple(a.state_name(q) for q in keep) if a.state_names is not None else None,
        name=a.name,
    )


def induced_port(a: PortNfa, keep: Iterable[int]) -> PortNfa:
    """Subautomaton on ``keep``; every port set is restricted, arity preserved."""
    keep = sorted(set(keep))
    remap = {q: i for i, q in enumerate(keep)}
    return PortNfa(
        a.alphabet,
        len(keep),
        frozenset(
            (remap[src], sym, remap[dst])
            for (src, sym, dst) in a.transitions
            if src in remap and dst in remap
        ),
        tuple(frozenset(remap[q] for q in s if q in remap) for s in a.entry_sets),
        tuple(frozenset(remap[q] for q in s if q in remap) for s in a.exit_sets),
        state_names=tuple(a.state_name(q) for q in keep) if a.state_names is not None else None,
        name=a.name,
    )


def trim(a: Nfa) -> Nfa:
    """Drop states not on any initial-to-final path; language preserved."""
    fwd, bwd = _both_adjacency(a)
    keep = _closure(a.initial, fwd) & _closure(a.final, bwd)
    if len(keep) == a.num_states:
        return a
    return induced(a, keep)


def trim_port(a: PortNfa) -> PortNfa:
    """Drop states unreachable from every entry set or dead for every exit set."""
    fwd, bwd = _both_adjacency(a)
    entry_all = frozenset().union(*a.entry_sets)
    exit_all = frozenset().union(*a.exit_sets)
    keep = _closure(entry_all, fwd) & _closure(exit_all, bwd)
    if len(keep) == a.num_states:
        return a
    return induced_port(a, keep)


# ---------------------------------------------------------------------------
# Language-level queries


def accepts(a: Nfa, w) -> bool:
    """Membership by on-the-fly subset propagation; w is a symbol sequence."""
    cur = a.initial_mask
    n = a.num_states
    for sym in w:
        sid = a.symbol_ids.get(sym)
        if sid is None:
            raise ValueError(f"symbol {sym!r} not in the alphabet")
        nxt = 0
        for q in _bits(cur):
            nxt |= a.succ_masks[sid * n + q]
        cur = nxt
        if not cur:
            return False
    return bool(cur & a.final_mask)


def antichain_inclusion(a: Nfa, b: Nfa, *, budget: int | None = None) -> bool:
    """L(a) subseteq L(b), by antichain exploration of (a-state, b-set) pairs."""
    if a.alphabet != b.alphabet:
        raise ValueError("inclusion requires matching alphabets")
    res = _kernels.antichain_included(
        len(a.alphabet),
        a.num_states,
        a.succ_masks,
        a.initial_mask,
        a.final_mask,
        b.num_states,
        b.succ_masks,
        b.initial_mask,
        b.final_mask,
        budget,
    )
    if res < 0:
        raise BudgetExceededError("antichain expansion budget exceeded", budget=budget)
    return bool(res)


def language_equivalent(a: Nfa, b: Nfa, *, budget: int | None = None) -> bool:
    return antichain_inclusion(a, b, budget=budget) and antichain_inclusion(b, a, budget=budget)


def language_disjoint(a: Nfa, b: Nfa) -> bool:
    """True iff the synchronized product of a and b accepts nothing."""
    if a.alphabet != b.alphabet:
        raise ValueError("disjointness requires matching alphabets")
    return not _kernels.product_nonempty(
        len(a.alphabet),
        a.num_states,
        a.succ_masks,
        a.initial_mask,
        a.final_mask,
        b.num_states,
        b.succ_masks,
        b.initial_mask,
        b.final_mask,
    )


def is_empty(a: Nfa) -> bool:
    fwd, _ = _both_adjacency(a)
    return not (_closure(a.initial, fwd) & a.final)


def product_intersection(a: Nfa, b: Nfa) -> Nfa:
    """Reachable synchronized product; accepts L(a) & L(b)."""
    if a.alphabet != b.alphabet:
        raise ValueError("product requires matching alphabets")
    index: dict[tuple[int, int], int] = {}
    pairs: list[tuple[int, int]] = []

    def intern(pair):
        i = index.get(pair)
        if i is None:
            i = len(pairs)
            index[pair] = i
            pairs.append(pair)
        return i

    for pair in sorted((pa, pb) for pa in a.initial for pb in b.initial):
        intern(pair)
    transitions = set()
    head = 0
    na, nb = a.num_states, b.num_states
    while head < len(pairs):
        pa, pb = pairs[head]
        cur = head
        head += 1
        for sym in range(len(a.alphabet)):
            ta = a.succ_masks[sym * na + pa]
            tb = b.succ_masks[sym * nb + pb]
            if not ta or not tb:
                continue
            for qa in _bits(ta):
                for qb in _bits(tb):
                    transitions.add((cur, sym, intern((qa, qb))))
    return Nfa(
        a.alphabet,
        len(pairs),
        frozenset(transitions),
        frozenset(index[p] for p in index if p[0] in a.initial and p[1] in b.initial),
        frozenset(i for i, (pa, pb) in enumerate(pairs) if pa in a.final and pb in b.final),
        state_names=tuple(f"{a.state_name(pa)}|{b.state_name(pb)}" for (pa, pb) in pairs),
    )


def product_intersection_port(a: PortNfa, b: PortNfa) -> PortNfa:
    """Port-wise synchronized product: slice(i,j) accepts the slice intersection."""
    if a.alphabet != b.alphabet:
        raise ValueError("product requires matching alphabets")
    if a.num_entry != b.num_entry or a.num_exit != b.num_exit:
        raise ValueError("port product requires matching port arities")
    index: dict[tuple[int, int], int] = {}
    pairs: list[tuple[int, int]] = []

    def intern(pair):
        i = index.get(pair)
        if i is None:
            i = len(pairs)
            index[pair] = i
            pairs.append(pair)
        return i

    seeds = set()
    for ea, eb in zip(a.entry_sets, b.entry_sets):
        seeds.update((pa, pb) for pa in ea for pb in eb)
    for pair in sorted(seeds):
        intern(pair)
    transitions = set()
    head = 0
    na, nb = a.num_states, b.num_states
    while head < len(pairs):
        pa, pb = pairs[head]
        cur = head
        head += 1
        for sym in range(len(a.alphabet)):
            ta = a.succ_masks[sym * na + pa]
            tb = b.succ_masks[sym * nb + pb]
            if not ta or not tb:
                continue
            for qa in _bits(ta):
                for qb in _bits(tb):
                    transitions.add((cur, sym, intern((qa, qb))))
    return PortNfa(
        a.alphabet,
        len(pairs),
        frozenset(transitions),
        tuple(
            frozenset(i for i, (pa, pb) in enumerate(pairs) if pa in ea and pb in eb)
            for ea, eb in zip(a.entry_sets, b.entry_sets)
        ),
        tuple(
            frozenset(i for i, (pa, pb) in enumerate(pairs) if pa in fa and pb in fb)
            for fa, fb in zip(a.exit_sets, b.exit_sets)
        ),
        state_names=tuple(f"{a.state_name(pa)}|{b.state_name(pb)}" for (pa, pb) in pairs),
    )


# ---------------------------------------------------------------------------
# Shape predicates


def _transitions_deterministic(a: Automaton) -> bool:
    seen = set()
    for (src, sym, _dst) in a.transitions:
        if (src, sym) in seen:
            return False
        seen.add((src, sym))
    return True


def is_deterministic(a: Automaton) -> bool:
    """DFA check: single start per slice, at most one successor per symbol."""
    if isinstance(a, PortNfa):
        if any(len(s) != 1 for s in a.entry_sets):
            return False
    elif len(a.initial) != 1:
        return False
    return _transitions_deterministic(a)


def is_complete(a: Automaton) -> bool:
    """Every state has at least one successor on every symbol."""
    pairs = {(src, sym) for (src, sym, _dst) in a.transitions}
    return len(pairs) == a.num_states * len(a.alphabet)


def is_reverse_deterministic(a: Automaton) -> bool:
    if isinstance(a, PortNfa):
        return is_deterministic(reverse_port(a))
    return is_deterministic(reverse(a))


# ---------------------------------------------------------------------------
# Sequential partitions


@dataclass(frozen=True)
class SequentialPartition:
    """A split of an automaton into a front and a rear part.

    All transitions between the parts (the transfer transitions) lead from
    front to rear.  ``front`` and ``rear`` are the induced subautomata with
    dense local state ids and the *outer* port sets restricted to each side;
    ``transfer`` keeps the crossing transitions in the source automaton's ids.
    """

    source: PortNfa
    front_states: tuple[int, ...]
    rear_states: tuple[int, ...]
    front: PortNfa
    rear: PortNfa
    transfer: tuple[Transition, ...]

    @classmethod
    def of(cls, a: Automaton, front_states: Iterable[int]) -> "SequentialPartition":
        port = a.as_port() if isinstance(a, Nfa) else a
        fset = frozenset(front_states)
        _check_states(port.num_states, fset, "front_states")
        rset = frozenset(range(port.num_states)) - fset
        transfer = []
        for (src, sym, dst) in port.transitions:
            if src in rset and dst in fset:
                raise ValueError("rear-to-front transition: split is not sequential")
            if src in fset and dst in rset:
                transfer.append((src, sym, dst))
        return cls(
            port,
            tuple(sorted(fset)),
            tuple(sorted(rset)),
            induced_port(port, fset),
            induced_port(port, rset),
            tuple(sorted(transfer)),
        )

    @cached_property
    def front_index(self) -> dict:
        return {q: i for i, q in enumerate(self.front_states)}

    @cached_property
    def rear_index(self) -> dict:
        return {q: i for i, q in enumerate(self.rear_states)}

    @cached_property
    def gate_symbols(self) -> tuple[int, ...]:
        return tuple(sorted({sym for (_s, sym, _d) in self.transfer}))

    @cached_property
    def gate_targets(self) -> tuple[int, ...]:
        return tuple(sorted({dst for (_s, _sym, dst) in self.transfer}))

    @cached_property
    def gate_sources_by_symbol(self) -> dict:
        out: dict[int, set[int]] = {sym: set() for sym in self.gate_symbols}
        for (src, sym, _dst) in self.transfer:
            out[sym].add(src)
        return {sym: frozenset(s) for sym, s in out.items()}

    @cached_property
    def gate_targets_by_symbol(self) -> dict:
        out: dict[int, set[int]] = {sym: set() for sym in self.gate_symbols}
        for (_src, sym, dst) in self.transfer:
            out[sym].add(dst)
        return {sym: frozenset(s) for sym, s in out.items()}

    @cached_property
    def inner_exit_ports_front(self) -> tuple[frozenset[int], ...]:
        """Per gate symbol (sorted): the front-local sources of that symbol's gates."""
        fi = self.front_index
        return tuple(
            frozenset(fi[q] for q in self.gate_sources_by_symbol[sym])
            for sym in self.gate_symbols
        )

    @cached_property
    def inner_entry_ports_rear(self) -> tuple[frozenset[int], ...]:
        """Per gate target (sorted): the singleton rear-local entry port."""
        ri = self.rear_index
        return tuple(frozenset({ri[p]}) for p in self.gate_targets)

    def front_for_gate(self) -> PortNfa:
        """Front with the inner exit ports appended after the outer ones."""
        f = self.front
        return PortNfa(
            f.alphabet,
            f.num_states,
            f.transitions,
            f.entry_sets,
            f.exit_sets + self.inner_exit_ports_front,
            state_names=f.state_names,
        )

    def rear_for_targets(self) -> PortNfa:
        """Rear with one singleton inner entry port per gate target."""
        r = self.rear
        return PortNfa(
            r.alphabet,
            r.num_states,
            r.transitions,
            r.entry_sets + self.inner_entry_ports_rear,
            r.exit_sets,
            state_names=r.state_names,
        )

    def rear_for_equal(self) -> PortNfa:
        """Rear with one inner entry port per gate symbol (all that symbol's targets)."""
        r = self.rear
        ri = self.rear_index
        extra = tuple(
            frozenset(ri[p] for p in self.gate_targets_by_symbol[sym])
            for sym in self.gate_symbols
        )
        return PortNfa(
            r.alphabet,
            r.num_states,
            r.transitions,
            r.entry_sets + extra,
            r.exit_sets,
            state_names=r.state_names,
        )
