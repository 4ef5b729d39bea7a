# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: same contracts as nfacomp._kernels.pure, limb-based.

State sets cross the boundary as Python ints (arbitrary width); internally
they are unpacked into little-endian uint64 limb buffers so the hot
union/iteration loops run in C.  Keep the observable behaviour identical to
the pure module — the parity tests compare outputs bit for bit.
"""

from collections import deque

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memset

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int nfk_ctzll(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int nfk_ctzll(unsigned long long x) {
        int n = 0;
        while (!(x & 1ULL)) { x >>= 1; n++; }
        return n;
    }
    #endif
    """
    int nfk_ctzll(unsigned long long x) nogil


cdef uint64_t* _alloc(Py_ssize_t count) except NULL:
    cdef uint64_t* buf = <uint64_t*> malloc((count if count > 0 else 1) * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill(object mask, uint64_t* buf, int limbs):
    cdef int li
    for li in range(limbs):
        buf[li] = <uint64_t> ((mask >> (64 * li)) & 0xFFFFFFFFFFFFFFFF)


cdef object _unfill(uint64_t* buf, int limbs):
    return int.from_bytes((<unsigned char*> buf)[:limbs * 8], "little")


cdef uint64_t* _table(list masks, Py_ssize_t rows, int limbs) except NULL:
    cdef uint64_t* tab = _alloc(rows * limbs)
    cdef Py_ssize_t i
    for i in range(rows):
        _fill(masks[i], tab + i * limbs, limbs)
    return tab


def explore_subsets(Py_ssize_t nstates, int nsyms, list succ, object init, budget=None):
    cdef int limbs = <int> ((nstates + 63) >> 6)
    if limbs == 0:
        limbs = 1
    cdef uint64_t* tab = NULL
    cdef uint64_t* cur = NULL
    cdef uint64_t* acc = NULL
    cdef Py_ssize_t head = 0
    cdef Py_ssize_t q, base
    cdef int sym, li, lj
    cdef uint64_t w
    cdef object nxt, j
    macros = [init]
    index = {init: 0}
    delta = []
    try:
        tab = _table(succ, nsyms * nstates, limbs)
        cur = _alloc(limbs)
        acc = _alloc(limbs)
        while head < len(macros):
            _fill(macros[head], cur, limbs)
            head += 1
            for sym in range(nsyms):
                memset(acc, 0, limbs * sizeof(uint64_t))
                for li in range(limbs):
                    w = cur[li]
                    while w:
                        q = li * 64 + nfk_ctzll(w)
                        w &= w - 1
                        base = (sym * nstates + q) * limbs
                        for lj in range(limbs):
                            acc[lj] |= tab[base + lj]
                nxt = _unfill(acc, limbs)
                j = index.get(nxt)
                if j is None:
                    if budget is not None and len(macros) >= budget:
                        return None
                    j = len(macros)
                    index[nxt] = j
                    macros.append(nxt)
                delta.append(j)
        return macros, delta
    finally:
        free(tab)
        free(cur)
        free(acc)


def word_signature(Py_ssize_t nstates, int nsyms, list succ, object init, object final, Py_ssize_t max_len):
    cdef int limbs = <int> ((nstates + 63) >> 6)
    if limbs == 0:
        limbs = 1
    cdef uint64_t* tab = NULL
    cdef uint64_t* fin = NULL
    cdef uint64_t* cur = NULL
    cdef uint64_t* acc = NULL
    cdef Py_ssize_t q, base, depth, i
    cdef int sym, li, lj
    cdef uint64_t w, hit
    out = bytearray()
    level = [init]
    try:
        tab = _table(succ, nsyms * nstates, limbs)
        fin = _alloc(limbs)
        cur = _alloc(limbs)
        acc = _alloc(limbs)
        _fill(final, fin, limbs)
        _fill(init, cur, limbs)
        hit = 0
        for li in range(limbs):
            hit |= cur[li] & fin[li]
        out.append(1 if hit else 0)
        for depth in range(max_len):
            nxt_level = []
            for i in range(len(level)):
                _fill(level[i], cur, limbs)
                for sym in range(nsyms):
                    memset(acc, 0, limbs * sizeof(uint64_t))
                    for li in range(limbs):
                        w = cur[li]
                        while w:
                            q = li * 64 + nfk_ctzll(w)
                            w &= w - 1
                            base = (sym * nstates + q) * limbs
                            for lj in range(limbs):
                                acc[lj] |= tab[base + lj]
                    nxt_level.append(_unfill(acc, limbs))
                    hit = 0
                    for li in range(limbs):
                        hit |= acc[li] & fin[li]
                    out.append(1 if hit else 0)
            level = nxt_level
        return bytes(out)
    finally:
        free(tab)
        free(fin)
        free(cur)
        free(acc)


def antichain_included(
    int nsyms,
    Py_ssize_t nstates_a,
    list succ_a,
    object init_a,
    object final_a,
    Py_ssize_t nstates_b,
    list succ_b,
    object init_b,
    object final_b,
    budget=None,
):
    cdef int limbs_b = <int> ((nstates_b + 63) >> 6)
    if limbs_b == 0:
        limbs_b = 1
    cdef uint64_t* tab_b = NULL
    cdef uint64_t* sbuf = NULL
    cdef uint64_t* acc = NULL
    cdef Py_ssize_t q, base
    cdef int sym, li, lj
    cdef uint64_t w
    cdef long expansions = 0
    frontier = {}
    queue = deque()

    def offer(p, s):
        kept = frontier.setdefault(p, [])
        for old in kept:
            if old & s == old:
                return
        frontier[p] = [old for old in kept if old & s != s] + [s]
        queue.append((p, s))

    try:
        tab_b = _table(succ_b, nsyms * nstates_b, limbs_b)
        sbuf = _alloc(limbs_b)
        acc = _alloc(limbs_b)
        p_mask = init_a
        while p_mask:
            low = p_mask & -p_mask
            p = low.bit_length() - 1
            p_mask ^= low
            if (final_a >> p) & 1 and not (init_b & final_b):
                return 0
            offer(p, init_b)
        while queue:
            p, s = queue.popleft()
            if s not in frontier.get(p, ()):
                continue
            expansions += 1
            if budget is not None and expansions > budget:
                return -1
            _fill(s, sbuf, limbs_b)
            for sym in range(nsyms):
                targets_a = succ_a[sym * nstates_a + p]
                if not targets_a:
                    continue
                memset(acc, 0, limbs_b * sizeof(uint64_t))
                for li in range(limbs_b):
                    w = sbuf[li]
                    while w:
                        q = li * 64 + nfk_ctzll(w)
                        w &= w - 1
                        base = (sym * nstates_b + q) * limbs_b
                        for lj in range(limbs_b):
                            acc[lj] |= tab_b[base + lj]
                s2 = _unfill(acc, limbs_b)
                t_mask = targets_a
                while t_mask:
                    low = t_mask & -t_mask
                    p2 = low.bit_length() - 1
                    t_mask ^= low
                    if (final_a >> p2) & 1 and not (s2 & final_b):
                        return 0
                    offer(p2, s2)
        return 1
    finally:
        free(tab_b)
        free(sbuf)
        free(acc)


def product_nonempty(
    int nsyms,
    Py_ssize_t nstates_a,
    list succ_a,
    object init_a,
    object final_a,
    Py_ssize_t nstates_b,
    list succ_b,
    object init_b,
    object final_b,
):
    if nstates_a == 0 or nstates_b == 0:
        return False
    cdef int limbs_a = <int> ((nstates_a + 63) >> 6)
    cdef int limbs_b = <int> ((nstates_b + 63) >> 6)
    cdef uint64_t* tab_a = NULL
    cdef uint64_t* tab_b = NULL
    cdef uint64_t* fin_a = NULL
    cdef uint64_t* fin_b = NULL
    cdef char* seen = NULL
    cdef Py_ssize_t* qa_arr = NULL
    cdef Py_ssize_t* qb_arr = NULL
    cdef Py_ssize_t head = 0, tail = 0, cap = nstates_a * nstates_b
    cdef Py_ssize_t pa, pb, qa, qb, base_a, base_b
    cdef int sym, li, lj
    cdef uint64_t wa, wb
    cdef bint found = False
    try:
        tab_a = _table(succ_a, nsyms * nstates_a, limbs_a)
        tab_b = _table(succ_b, nsyms * nstates_b, limbs_b)
        fin_a = _alloc(limbs_a)
        fin_b = _alloc(limbs_b)
        _fill(final_a, fin_a, limbs_a)
        _fill(final_b, fin_b, limbs_b)
        seen = <char*> malloc(cap if cap > 0 else 1)
        if seen == NULL:
            raise MemoryError()
        memset(seen, 0, cap)
        qa_arr = <Py_ssize_t*> malloc((cap if cap > 0 else 1) * sizeof(Py_ssize_t))
        qb_arr = <Py_ssize_t*> malloc((cap if cap > 0 else 1) * sizeof(Py_ssize_t))
        if qa_arr == NULL or qb_arr == NULL:
            raise MemoryError()

        ia = init_a
        while ia and not found:
            low_a = ia & -ia
            pa = low_a.bit_length() - 1
            ia ^= low_a
            ib = init_b
            while ib:
                low_b = ib & -ib
                pb = low_b.bit_length() - 1
                ib ^= low_b
                if (fin_a[pa >> 6] >> (pa & 63)) & 1 and (fin_b[pb >> 6] >> (pb & 63)) & 1:
                    found = True
                    break
                if not seen[pa * nstates_b + pb]:
                    seen[pa * nstates_b + pb] = 1
                    qa_arr[tail] = pa
                    qb_arr[tail] = pb
                    tail += 1
        while head < tail and not found:
            pa = qa_arr[head]
            pb = qb_arr[head]
            head += 1
            for sym in range(nsyms):
                base_a = (sym * nstates_a + pa) * limbs_a
                base_b = (sym * nstates_b + pb) * limbs_b
                for li in range(limbs_a):
                    wa = tab_a[base_a + li]
                    while wa:
                        qa = li * 64 + nfk_ctzll(wa)
                        wa &= wa - 1
                        for lj in range(limbs_b):
                            wb = tab_b[base_b + lj]
                            while wb:
                                qb = lj * 64 + nfk_ctzll(wb)
                                wb &= wb - 1
                                if seen[qa * nstates_b + qb]:
                                    continue
                                if ((fin_a[qa >> 6] >> (qa & 63)) & 1) and ((fin_b[qb >> 6] >> (qb & 63)) & 1):
                                    found = True
                                    break
                                seen[qa * nstates_b + qb] = 1
                                qa_arr[tail] = qa
                                qb_arr[tail] = qb
                                tail += 1
                            if found:
                                break
                        if found:
                            break
                    if found:
                        break
                if found:
                    break
        return bool(found)
    finally:
        free(tab_a)
        free(tab_b)
        free(fin_a)
        free(fin_b)
        free(seen)
        free(qa_arr)
        free(qb_arr)
