# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled candidate search over uint64 row bitsets."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cnp.import_array()


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil


cdef struct Ctx:
    const uint64_t* hold
    const uint64_t* gen
    const int64_t* pos_start
    const uint64_t* agree
    uint64_t* cover_stack
    uint64_t* fired_stack
    int64_t* combo
    Py_ssize_t n_words
    Py_ssize_t n_pos
    int64_t n_rows
    int64_t n_agree
    int64_t min_fired
    int64_t cap
    int64_t conf_num
    int64_t conf_den
    bint mode_dataset
    int64_t visited


cdef void _dfs(Ctx* ctx, int64_t depth, Py_ssize_t next_pos, int head, list out):
    # cover/fired of the current prefix live at row ``depth`` of the stacks
    cdef Py_ssize_t W = ctx.n_words
    cdef const uint64_t* cover = ctx.cover_stack + depth * W
    cdef const uint64_t* fired = ctx.fired_stack + depth * W
    cdef uint64_t* c2 = ctx.cover_stack + (depth + 1) * W
    cdef uint64_t* f2 = ctx.fired_stack + (depth + 1) * W
    cdef Py_ssize_t p, w
    cdef int64_t a, nf, nc, base, i
    cdef uint64_t any_cover
    cdef const uint64_t* g
    cdef const uint64_t* hd
    for p in range(next_pos, ctx.n_pos):
        for a in range(ctx.pos_start[p], ctx.pos_start[p + 1]):
            g = ctx.gen + a * W
            any_cover = 0
            for w in range(W):
                c2[w] = cover[w] & g[w]
                any_cover |= c2[w]
            if any_cover == 0:
                continue
            hd = ctx.hold + a * W
            nf = 0
            for w in range(W):
                f2[w] = fired[w] & hd[w]
                nf += popcount64(f2[w])
            if nf < ctx.min_fired:
                continue
            ctx.visited += 1
            nc = 0
            for w in range(W):
                nc += popcount64(f2[w] & ctx.agree[w])
            ctx.combo[depth] = a
            base = ctx.n_rows if ctx.mode_dataset else nf
            if nc * ctx.conf_den > ctx.conf_num * base and nc * ctx.n_rows > nf * ctx.n_agree:
                out.append((head, tuple([ctx.combo[i] for i in range(depth + 1)]), nf, nc))
            if depth + 1 < ctx.cap:
                _dfs(ctx, depth + 1, p + 1, head, out)


def mine_best(uint64_t[:, ::1] hold, uint64_t[:, ::1] gen, int64_t[::1] pos_start,
              uint64_t[:, ::1] groups, uint64_t[:, ::1] agrees, int64_t n_rows,
              int64_t min_fired, int64_t cap, int64_t conf_num, int64_t conf_den,
              bint mode_dataset):
    cdef Py_ssize_t W = hold.shape[1]
    cdef Py_ssize_t H = groups.shape[0]
    cdef Py_ssize_t h, w
    cdef Ctx ctx
    cdef list out = []
    cdef int64_t n_agree
    cdef uint64_t[:, ::1] cover_stack = np.zeros((cap + 1, max(W, 1)), dtype=np.uint64)
    cdef uint64_t[:, ::1] fired_stack = np.zeros((cap + 1, max(W, 1)), dtype=np.uint64)
    cdef int64_t[::1] combo = np.zeros(cap + 1, dtype=np.int64)
    cdef int64_t total_visited = 0

    if hold.shape[0] == 0 or H == 0 or W == 0:
        return out, 0
    ctx.hold = &hold[0, 0]
    ctx.gen = &gen[0, 0]
    ctx.pos_start = &pos_start[0]
    ctx.cover_stack = &cover_stack[0, 0]
    ctx.fired_stack = &fired_stack[0, 0]
    ctx.combo = &combo[0]
    ctx.n_words = W
    ctx.n_pos = pos_start.shape[0] - 1
    ctx.n_rows = n_rows
    ctx.min_fired = min_fired
    ctx.cap = cap
    ctx.conf_num = conf_num
    ctx.conf_den = conf_den
    ctx.mode_dataset = mode_dataset

    for h in range(H):
        n_agree = 0
        for w in range(W):
            n_agree += popcount64(agrees[h, w])
        if n_agree == 0:
            continue
        ctx.agree = &agrees[h, 0]
        ctx.n_agree = n_agree
        ctx.visited = 0
        for w in range(W):
            cover_stack[0, w] = groups[h, w]
            fired_stack[0, w] = 0
        # all-ones over n_rows bits
        for w in range(W):
            if (w + 1) * 64 <= n_rows:
                fired_stack[0, w] = <uint64_t>0xFFFFFFFFFFFFFFFF
            elif w * 64 < n_rows:
                fired_stack[0, w] = ((<uint64_t>1) << (n_rows - w * 64)) - 1
        _dfs(&ctx, 0, 0, <int>h, out)
        total_visited += ctx.visited
    return out, total_visited
