"""Sequential complementation: complement the rear, track instances of it.

The front part of a sequential split runs determinized; every time the input
crosses a transfer ("gate") transition, a fresh instance of the rear
complement is activated and tracked alongside.  A word is accepted when the
front never exits accepting and every tracked instance accepts — i.e. no run
of the original automaton could have accepted.

Also home to the three partitioning strategies (deterministic components,
reverse-deterministic bottom, min-cut) and the multi-component pipeline that
folds them together.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass

from . import core
from .core import Nfa, PortNfa, SequentialPartition
from .errors import BudgetExceededError
from .powerset import (
    Direction,
    forward_complement,
    port_determinize_mapped,
    port_forward_complement,
    port_reverse_complement,
    reverse_complement,
)
from .reduction import simulation_reduce_port


@dataclass(frozen=True)
class SeqComplementState:
    """Composite state: front position plus the tracked rear-complement states."""

    front_state: int
    tracked: frozenset[int]


class PartitionStrategy(enum.Enum):
    DETERMINISTIC_COMPONENTS = "det"
    DET_PLUS_REVDET_BOTTOM = "detrev"
    MIN_CUT = "mincut"


@dataclass(frozen=True)
class ComponentPartition:
    """Ordered components (topological, original state ids) of one automaton."""

    source: Nfa
    components: tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# Generalized composition


def determinize_front(p: SequentialPartition, *, budget: int | None = None) -> SequentialPartition:
    """Replace the front with its port determinization, lifting the gates.

    A gate (x, a, t) fires from every front macrostate containing x; the rear
    part is kept untouched, so the rear-local ids (and with them the inner
    entry ports) are stable across this step.
    """
    det, macros = port_determinize_mapped(p.front, budget=budget)
    rear = p.rear
    off = det.num_states
    trans = set(det.transitions)
    trans.update((src + off, sym, dst + off) for (src, sym, dst) in rear.transitions)
    containing: dict[int, list[int]] = {}
    for mi, mac in enumerate(macros):
        for q in mac:
            containing.setdefault(q, []).append(mi)
    for (x, sym, t) in p.transfer:
        xl = p.front_index[x]
        tl = p.rear_index[t]
        for mi in containing.get(xl, ()):
            trans.add((mi, sym, off + tl))
    names = None
    if det.state_names is not None or rear.state_names is not None:
        names = core._uniquify(
            [det.state_name(q) for q in range(off)]
            + [rear.state_name(q) for q in range(rear.num_states)]
        )
    combined = PortNfa(
        det.alphabet,
        off + rear.num_states,
        frozenset(trans),
        tuple(
            det.entry_sets[i] | frozenset(q + off for q in rear.entry_sets[i])
            for i in range(det.num_entry)
        ),
        tuple(
            det.exit_sets[j] | frozenset(q + off for q in rear.exit_sets[j])
            for j in range(det.num_exit)
        ),
        state_names=names,
    )
    return SequentialPartition.of(combined, range(off))


def seq_complement_generalized_annotated(
    p: SequentialPartition, c2: PortNfa, *, budget: int | None = None
) -> tuple[PortNfa, tuple[SeqComplementState, ...]]:
    """seq_complement_generalized plus the composite-state annotation."""
    f = p.front
    if not core.is_deterministic(f) or not core.is_complete(f):
        raise ValueError("front must be deterministic and complete (see determinize_front)")
    if c2.alphabet != f.alphabet:
        raise ValueError("c2 alphabet does not match the partition")
    if c2.num_entry != p.rear.num_entry + len(p.gate_targets):
        raise ValueError("c2 entry ports do not line up with the rear's ports")
    if c2.num_exit != p.rear.num_exit:
        raise ValueError("c2 exit ports do not line up with the rear's ports")

    nsyms = len(f.alphabet)
    nf = f.num_states
    nc = c2.num_states
    target_port = {t: p.rear.num_entry + k for k, t in enumerate(p.gate_targets)}
    gates: dict[tuple[int, int], set[int]] = {}
    for (x, sym, t) in p.transfer:
        gates.setdefault((p.front_index[x], sym), set()).add(t)
    gate_targets_at = {key: sorted(ts) for key, ts in gates.items()}

    index: dict[tuple[int, frozenset], int] = {}
    states: list[tuple[int, frozenset]] = []

    def intern(st):
        i = index.get(st)
        if i is None:
            if budget is not None and len(states) >= budget:
                raise BudgetExceededError("composite state budget exceeded", budget=budget)
            i = len(states)
            index[st] = i
            states.append(st)
        return i

    entry_ids: list[frozenset[int]] = []
    for i in range(p.rear.num_entry):
        (q0,) = f.entry_sets[i]
        if p.rear.entry_sets[i]:
            ids = frozenset(
                intern((q0, frozenset({r0}))) for r0 in sorted(c2.entry_sets[i])
            )
        else:
            ids = frozenset({intern((q0, frozenset()))})
        entry_ids.append(ids)

    transitions = set()
    head = 0
    while head < len(states):
        q, tracked = states[head]
        sid = head
        head += 1
        for sym in range(nsyms):
            q2 = next(core._bits(f.succ_masks[sym * nf + q]))
            choice_lists = []
            dead = False
            for r in sorted(tracked):
                succs = sorted(core._bits(c2.succ_masks[sym * nc + r]))
                if not succs:
                    dead = True
                    break
                choice_lists.append(succs)
            if dead:
                continue
            for t in gate_targets_at.get((q, sym), ()):
                entry = sorted(c2.entry_sets[target_port[t]])
                if not entry:
                    dead = True
                    break
                choice_lists.append(entry)
            if dead:
                continue
            for combo in itertools.product(*choice_lists):
                transitions.add((sid, sym, intern((q2, frozenset(combo)))))

    exit_ids = []
    for j in range(p.rear.num_exit):
        fj = f.exit_sets[j]
        cj = c2.exit_sets[j]
        exit_ids.append(
            frozenset(i for i, (q, tracked) in enumerate(states) if q not in fj and tracked <= cj)
        )
    names = tuple(
        f.state_name(q) + ":{" + ",".join(c2.state_name(r) for r in sorted(tracked)) + "}"
        for (q, tracked) in states
    )
    out = PortNfa(
        f.alphabet,
        len(states),
        frozenset(transitions),
        tuple(entry_ids),
        tuple(exit_ids),
        state_names=names,
    )
    annotation = tuple(SeqComplementState(q, tracked) for (q, tracked) in states)
    return out, annotation


def seq_complement_generalized(
    p: SequentialPartition, c2: PortNfa, *, budget: int | None = None
) -> PortNfa:
    """Complement a partitioned port NFA, given a port complement of its rear.

    ``c2`` must complement ``p.rear_for_targets()``: its entry ports are the
    rear's outer entries followed by one port per gate target (sorted).
    """
    out, _ = seq_complement_generalized_annotated(p, c2, budget=budget)
    return out


def seq_complement_basic(
    a1: Nfa, a2: Nfa, c: str, *, c2: Nfa | None = None, budget: int | None = None
) -> Nfa:
    """Complement of L(a1)·{c}·L(a2) for single-final a1 and single-initial a2.

    The rear complement defaults to the reverse powerset construction; a
    precomputed complement of a2 may be passed instead.
    """
    if a1.alphabet != a2.alphabet:
        raise ValueError("components must share one alphabet")
    if len(a1.final) != 1:
        raise ValueError("a1 needs exactly one final state")
    if len(a2.initial) != 1:
        raise ValueError("a2 needs exactly one initial state")
    sym = a1.symbol_ids.get(c)
    if sym is None:
        raise ValueError(f"symbol {c!r} not in the alphabet")
    off = a1.num_states
    (qf,) = a1.final
    (qi,) = a2.initial
    trans = set(a1.transitions)
    trans.update((src + off, s, dst + off) for (src, s, dst) in a2.transitions)
    trans.add((qf, sym, qi + off))
    combined = Nfa(
        a1.alphabet,
        off + a2.num_states,
        frozenset(trans),
        a1.initial,
        frozenset(q + off for q in a2.final),
        state_names=core._merged_names(a1, a2),
    )
    part = determinize_front(SequentialPartition.of(combined, range(off)), budget=budget)
    if c2 is None:
        c2_port = port_reverse_complement(part.rear_for_targets(), budget=budget)
    else:
        if c2.alphabet != a1.alphabet:
            raise ValueError("c2 alphabet mismatch")
        c2_port = PortNfa(
            c2.alphabet,
            c2.num_states,
            c2.transitions,
            (frozenset(), c2.initial),
            (c2.final,),
            state_names=c2.state_names,
        )
    return seq_complement_generalized(part, c2_port, budget=budget).slice(0, 0)


# ---------------------------------------------------------------------------
# Partitioning strategies


def _induced_deterministic(a: Nfa, states: frozenset[int] | set[int]) -> bool:
    seen = set()
    for (src, sym, dst) in a.transitions:
        if src in states and dst in states:
            if (src, sym) in seen:
                return False
            seen.add((src, sym))
    return True


def _induced_reverse_deterministic(a: Nfa, states: set[int]) -> bool:
    if len(a.final & states) != 1:
        return False
    seen = set()
    for (src, sym, dst) in a.transitions:
        if src in states and dst in states:
            if (dst, sym) in seen:
                return False
            seen.add((dst, sym))
    return True


def _det_component_split(a: Nfa, sccs: list[frozenset[int]]) -> list[set[int]]:
    """Greedy absorption of topologically consecutive SCCs while deterministic."""
    out = []
    k = 0
    while k < len(sccs):
        cur = set(sccs[k])
        k += 1
        if _induced_deterministic(a, cur):
            while k < len(sccs) and _induced_deterministic(a, cur | sccs[k]):
                cur |= sccs[k]
                k += 1
        out.append(cur)
    return out


def partition(a: Nfa, strategy: PartitionStrategy) -> ComponentPartition:
    """Split into sequentially ordered components under the chosen strategy."""
    dag = core.scc_condensation(a)
    sccs = list(dag.components)
    if len(sccs) <= 1:
        return ComponentPartition(a, (tuple(range(a.num_states)),) if a.num_states else ())

    if strategy is PartitionStrategy.DETERMINISTIC_COMPONENTS:
        groups = _det_component_split(a, sccs)
    elif strategy is PartitionStrategy.DET_PLUS_REVDET_BOTTOM:
        bottom_start = len(sccs)
        union: set[int] = set()
        # widen the bottom while the union stays reverse-deterministic
        for k in range(len(sccs) - 1, -1, -1):
            candidate = union | sccs[k]
            if _induced_reverse_deterministic(a, candidate):
                union = candidate
                bottom_start = k
            else:
                break
        if bottom_start == 0:
            groups = [set(range(a.num_states))]
        elif bottom_start == len(sccs):
            groups = _det_component_split(a, sccs)
        else:
            groups = _det_component_split(a, sccs[:bottom_start]) + [union]
    elif strategy is PartitionStrategy.MIN_CUT:
        groups = _min_cut_split(a, dag)
    else:  # pragma: no cover - exhaustive enum
        raise ValueError(f"unknown strategy {strategy!r}")
    return ComponentPartition(a, tuple(tuple(sorted(g)) for g in groups))


def _min_cut_split(a: Nfa, dag: core.SccDag) -> list[set[int]]:
    """Two components with the fewest transfer transitions between them.

    Max-flow on the condensation, with an infinite-capacity reverse edge per
    DAG edge so every minimum cut is closed under predecessors (otherwise the
    residual cut could include a component with an incoming zero-flow edge
    from the far side, which is not a sequential split).
    """
    m = len(dag.components)
    sink = m - 1
    source = m
    inf = a.num_transitions + 1
    res: dict[tuple[int, int], int] = {}

    def add(u, v, c):
        res[(u, v)] = res.get((u, v), 0) + c

    has_pred = set()
    for (i, j, cap) in dag.edges:
        add(i, j, cap)
        add(j, i, inf)
        has_pred.add(j)
    for i in range(m):
        if i not in has_pred and i != sink:
            add(source, i, inf)

    adj: dict[int, list[int]] = {}
    for (u, v) in res:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for vs in adj.values():
        vs.sort()

    while True:
        # BFS for a shortest augmenting path
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            u = queue.popleft()
            for v in adj.get(u, ()):
                if v not in prev and res.get((u, v), 0) > 0:
                    prev[v] = u
                    queue.append(v)
        if sink not in prev:
            break
        bottleneck = inf
        v = sink
        while v != source:
            u = prev[v]
            bottleneck = min(bottleneck, res[(u, v)])
            v = u
        v = sink
        while v != source:
            u = prev[v]
            res[(u, v)] -= bottleneck
            res[(v, u)] = res.get((v, u), 0) + bottleneck
            v = u

    reachable = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj.get(u, ()):
            if v not in reachable and res.get((u, v), 0) > 0:
                reachable.add(v)
                queue.append(v)
    front: set[int] = set()
    for i in range(m):
        if i in reachable:
            front |= dag.components[i]
    rear = set(range(a.num_states)) - front
    if not front or not rear:  # degenerate flow network; fall back to a topological split
        front = set(dag.components[0])
        rear = set(range(a.num_states)) - front
    return [front, rear]


# ---------------------------------------------------------------------------
# Pipeline


def seq_pipeline(
    a: Nfa,
    strategy: PartitionStrategy,
    rear_method: Direction = Direction.REVERSE,
    *,
    reduce_intermediate: bool = True,
    budget: int | None = None,
    stats: dict | None = None,
) -> Nfa:
    """Partition, complement the bottom component, and fold front components in.

    Intermediate composites are reduced with the port-aware simulation pass;
    the final result is only trimmed.
    """
    parts = partition(a, strategy)
    comps = parts.components
    if stats is not None:
        stats["strategy"] = strategy.value
        stats["component_sizes"] = [len(c) for c in comps]
    if len(comps) <= 1:
        if rear_method is Direction.REVERSE:
            raw = forward_complement(core.reverse(a), trim=False, budget=budget)
            out = core.trim(core.reverse(raw))
        else:
            raw = forward_complement(a, trim=False, budget=budget)
            out = core.trim(raw)
        if stats is not None:
            stats["stage_sizes"] = [raw.num_states]
            stats["pre_trim"] = raw.num_states
        return out

    w = a.as_port()
    current = {q: q for q in range(a.num_states)}
    chain: list[SequentialPartition] = []
    for comp in comps[:-1]:
        p = SequentialPartition.of(w, sorted(current[q] for q in comp))
        # Determinize before deriving the rear's port layout: macrostate
        # construction can drop transfer edges whose source never becomes
        # reachable, and the complement built for the rear must expose
        # exactly the gate-target ports the composition will ask for.
        det_p = determinize_front(p, budget=budget)
        chain.append(det_p)
        rank = {q: i for i, q in enumerate(p.rear_states)}
        current = {orig: rank[wid] for orig, wid in current.items() if wid in rank}
        w = det_p.rear_for_targets()

    if rear_method is Direction.REVERSE:
        c_cur = port_reverse_complement(w, budget=budget)
    else:
        c_cur = port_forward_complement(w, budget=budget)
    if reduce_intermediate:
        c_cur = simulation_reduce_port(c_cur)
    if stats is not None:
        stats["stage_sizes"] = [c_cur.num_states]

    for k in range(len(chain) - 1, -1, -1):
        c_cur = seq_complement_generalized(chain[k], c_cur, budget=budget)
        if reduce_intermediate and k > 0:
            c_cur = simulation_reduce_port(c_cur)
        if stats is not None:
            stats["stage_sizes"].append(c_cur.num_states)

    if stats is not None:
        stats["pre_trim"] = c_cur.num_states
    return core.trim(c_cur.slice(0, 0))


def seq_pipeline_best(
    a: Nfa,
    rear_method: Direction = Direction.REVERSE,
    *,
    reduce_intermediate: bool = True,
    budget: int | None = None,
    stats: dict | None = None,
) -> tuple[Nfa, PartitionStrategy]:
    """Run every partitioning strategy and keep the smallest complement.

    When a stats dict is supplied it ends up holding the winner's numbers.
    """
    best: tuple[Nfa, PartitionStrategy, dict] | None = None
    failure: BudgetExceededError | None = None
    for strat in PartitionStrategy:
        local: dict = {}
        try:
            cand = seq_pipeline(
                a, strat, rear_method,
                reduce_intermediate=reduce_intermediate, budget=budget, stats=local,
            )
        except BudgetExceededError as exc:
            failure = exc
            continue
        if best is None or cand.num_states < best[0].num_states:
            best = (cand, strat, local)
    if best is None:
        raise failure if failure is not None else BudgetExceededError()
    if stats is not None:
        stats.update(best[2])
    return best[0], best[1]


# ---------------------------------------------------------------------------
# Single-instance class (the quadratic-bound premises)


def single_instance_class(p: SequentialPartition) -> bool:
    """Do the composite states provably track at most one rear instance?

    Holds when (1) after any gate fires, the front can never again reach a
    gate source, (2) no gate source fires two gates on one symbol, and (3)
    the rear has no outer entry states (so entry composites carry at most one
    seeded instance).
    """
    if any(p.rear.entry_sets):
        return False
    per_source_symbol: dict[tuple[int, int], int] = {}
    for (x, sym, _t) in p.transfer:
        per_source_symbol[(x, sym)] = per_source_symbol.get((x, sym), 0) + 1
        if per_source_symbol[(x, sym)] > 1:
            return False
    f = p.front
    nf = f.num_states
    fwd = [[] for _ in range(nf)]
    for (src, _sym, dst) in f.transitions:
        fwd[src].append(dst)
    sources = {p.front_index[x] for (x, _sym, _t) in p.transfer}
    for (x, sym) in per_source_symbol:
        xl = p.front_index[x]
        start = set(core._bits(f.succ_masks[sym * nf + xl]))
        if core._closure(start, fwd) & sources:
            return False
    return True


def activation_targets(p: SequentialPartition) -> frozenset[int]:
    """Front states with an incoming transition from some gate source.

    The size of this set is the factor n in the |A_1| + n·|C_2| bound on the
    composite complement, valid whenever every composite tracks ≤ 1 instance.
    """
    f = p.front
    nf = f.num_states
    sources = {p.front_index[x] for (x, _sym, _t) in p.transfer}
    out: set[int] = set()
    for xl in sources:
        for sym in range(len(f.alphabet)):
            out |= set(core._bits(f.succ_masks[sym * nf + xl]))
    return frozenset(out)
