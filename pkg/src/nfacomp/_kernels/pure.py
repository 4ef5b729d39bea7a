"""Pure-Python kernels over bitmask-encoded automata.

Every kernel works on a flat encoding that the callers in :mod:`nfacomp.core`
and :mod:`nfacomp.powerset` produce once per automaton:

* states are ``0 .. nstates-1``,
* ``succ`` is a flat list of length ``nsyms * nstates`` where entry
  ``sym * nstates + q`` is the bitmask of successors of ``q`` under ``sym``,
* state sets (initial, final, macrostates) are plain ints used as bitmasks.

The compiled twin in ``_speedups.pyx`` implements the same four functions
with the same observable behaviour; ``tests/test_kernels.py`` holds the two
implementations to bit-for-bit agreement.
"""

from __future__ import annotations

from collections import deque


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def explore_subsets(nstates, nsyms, succ, init, budget=None):
    """Breadth-first powerset exploration from the macrostate ``init``.

    Returns ``(macros, delta)`` where ``macros`` is the list of discovered
    macrostate bitmasks in BFS order (``macros[0] == init``) and ``delta`` is
    the flat transition table ``delta[i * nsyms + sym] -> macro index``.  The
    exploration is complete: every macrostate gets a successor for every
    symbol, so the empty macrostate shows up exactly when some transition is
    missing in the source.  Returns ``None`` if more than ``budget``
    macrostates would be materialized.
    """
    index = {init: 0}
    macros = [init]
    delta = []
    queue = deque((0,))
    while queue:
        i = queue.popleft()
        cur = macros[i]
        base = len(delta)
        delta.extend([0] * nsyms)
        for sym in range(nsyms):
            row = succ[sym * nstates : (sym + 1) * nstates]
            nxt = 0
            for q in _bits(cur):
                nxt |= row[q]
            j = index.get(nxt)
            if j is None:
                if budget is not None and len(macros) >= budget:
                    return None
                j = len(macros)
                index[nxt] = j
                macros.append(nxt)
                queue.append(j)
            delta[base + sym] = j
    return macros, delta


def word_signature(nstates, nsyms, succ, init, final, max_len):
    """Acceptance bit per word of length <= max_len, in length-lex order.

    Words are ordered by length, then lexicographically by symbol index; the
    byte for word ``w`` is 1 iff the subset run from ``init`` over ``w`` ends
    in a set intersecting ``final``.  Shared prefixes are evaluated once.
    """
    out = bytearray()
    level = [init]
    out.append(1 if init & final else 0)
    for _ in range(max_len):
        nxt_level = []
        for mask in level:
            for sym in range(nsyms):
                row = succ[sym * nstates : (sym + 1) * nstates]
                nxt = 0
                for q in _bits(mask):
                    nxt |= row[q]
                nxt_level.append(nxt)
                out.append(1 if nxt & final else 0)
        level = nxt_level
    return bytes(out)


def antichain_included(
    nsyms,
    nstates_a,
    succ_a,
    init_a,
    final_a,
    nstates_b,
    succ_b,
    init_b,
    final_b,
    budget=None,
):
    """Antichain-based language inclusion check: L(a) <= L(b).

    Explores pairs (state of a, macrostate of b), keeping per a-state only the
    subset-minimal macrostates — a pair dominated by one with a smaller b-set
    can only fail later, so it never needs its own expansion.  Returns 1 when
    the inclusion holds, 0 with certainty when it does not, and -1 when the
    expansion budget runs out first.
    """
    frontier = {}  # a-state -> list of minimal b-masks
    queue = deque()

    def offer(p, s):
        kept = frontier.setdefault(p, [])
        for old in kept:
            if old & s == old:  # old subseteq s: dominated, skip
                return None
        frontier[p] = [old for old in kept if old & s != s] + [s]
        queue.append((p, s))
        return s

    for p in _bits(init_a):
        if (final_a >> p) & 1 and not (init_b & final_b):
            return 0
        offer(p, init_b)

    expansions = 0
    while queue:
        p, s = queue.popleft()
        if s not in frontier.get(p, ()):  # superseded by a smaller set
            continue
        expansions += 1
        if budget is not None and expansions > budget:
            return -1
        for sym in range(nsyms):
            row_b = succ_b[sym * nstates_b : (sym + 1) * nstates_b]
            targets_a = succ_a[sym * nstates_a + p]
            if not targets_a:
                continue
            s2 = 0
            for q in _bits(s):
                s2 |= row_b[q]
            for p2 in _bits(targets_a):
                if (final_a >> p2) & 1 and not (s2 & final_b):
                    return 0
                offer(p2, s2)
    return 1


def product_nonempty(
    nsyms,
    nstates_a,
    succ_a,
    init_a,
    final_a,
    nstates_b,
    succ_b,
    init_b,
    final_b,
):
    """True iff the synchronized product of the two automata accepts a word."""
    if nstates_a == 0 or nstates_b == 0:
        return False
    seen = bytearray(nstates_a * nstates_b)
    queue = deque()
    for pa in _bits(init_a):
        for pb in _bits(init_b):
            if (final_a >> pa) & 1 and (final_b >> pb) & 1:
                return True
            seen[pa * nstates_b + pb] = 1
            queue.append((pa, pb))
    while queue:
        pa, pb = queue.popleft()
        for sym in range(nsyms):
            ta = succ_a[sym * nstates_a + pa]
            if not ta:
                continue
            tb = succ_b[sym * nstates_b + pb]
            if not tb:
                continue
            for qa in _bits(ta):
                qa_final = (final_a >> qa) & 1
                for qb in _bits(tb):
                    if seen[qa * nstates_b + qb]:
                        continue
                    if qa_final and (final_b >> qb) & 1:
                        return True
                    seen[qa * nstates_b + qb] = 1
                    queue.append((qa, qb))
    return False
