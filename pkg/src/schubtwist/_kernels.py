"""Hot loops over weight arrays.

Every kernel exists twice: a numba ``@njit`` version and a numpy/interpreter
version with identical semantics.  ``SCHUBTWIST_DISABLE_NUMBA=1`` (or numba
being unavailable) selects the numpy path at import time; both paths stay
importable as ``NUMBA`` / ``NUMPY`` so they can be cross-checked and
benchmarked in one process.

Arrays: weights are ``int64[n, rank]`` in fundamental-weight coordinates,
multiplicities ``int64[n]``.
"""

import os
from types import SimpleNamespace

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SCHUBTWIST_DISABLE_NUMBA", "") not in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# Demazure operator on a whole character


def _demazure_rows_loop(W, M, alpha, i):
    n = W.shape[0]
    total = 0
    for k in range(n):
        p = W[k, i]
        if p >= 0:
            total += p + 1
        elif p <= -2:
            total += -p - 1
    rank = W.shape[1]
    out_w = np.empty((total, rank), dtype=np.int64)
    out_m = np.empty(total, dtype=np.int64)
    pos = 0
    for k in range(n):
        p = W[k, i]
        if p >= 0:
            for t in range(p + 1):
                for r in range(rank):
                    out_w[pos, r] = W[k, r] - t * alpha[r]
                out_m[pos] = M[k]
                pos += 1
        elif p <= -2:
            for t in range(1, -p):
                for r in range(rank):
                    out_w[pos, r] = W[k, r] + t * alpha[r]
                out_m[pos] = -M[k]
                pos += 1
    return out_w, out_m


def _demazure_rows_numpy(W, M, alpha, i):
    p = W[:, i]
    counts = np.where(p >= 0, p + 1, np.where(p <= -2, -p - 1, 0))
    src = np.repeat(np.arange(W.shape[0]), counts)
    if src.size == 0:
        return np.empty((0, W.shape[1]), dtype=np.int64), np.empty(0, dtype=np.int64)
    starts = np.cumsum(counts) - counts
    t = np.arange(src.size) - starts[src]
    ps = p[src]
    # p >= 0: lambda - t*alpha (t = 0..p); p <= -2: lambda + (t+1)*alpha
    shift = np.where(ps >= 0, -t, t + 1)
    out_w = W[src] + shift[:, None] * alpha[None, :]
    out_m = np.where(ps >= 0, M[src], -M[src])
    return out_w.astype(np.int64), out_m.astype(np.int64)


# ---------------------------------------------------------------------------
# alpha-string matching
#
# Input is sorted so that each alpha-class is contiguous with pairings
# descending.  Chains are the level sets of the multiplicity profile along a
# class (youngest chain ends first), which is exactly one-at-a-time greedy
# "highest pairing first, extend down as far as possible".


def _match_chains_loop(cls, p, mult, strict):
    n = cls.shape[0]
    st_start = np.empty(n + 1, dtype=np.int64)
    st_cnt = np.empty(n + 1, dtype=np.int64)
    out_top = np.empty(2 * n + 1, dtype=np.int64)
    out_end = np.empty(2 * n + 1, dtype=np.int64)
    out_cnt = np.empty(2 * n + 1, dtype=np.int64)
    sp = 0
    nout = 0
    opened = 0
    ambiguous = False
    for k in range(n):
        contiguous = k > 0 and cls[k] == cls[k - 1] and p[k] == p[k - 1] - 2
        if not contiguous:
            while sp > 0:
                sp -= 1
                out_top[nout] = st_start[sp]
                out_end[nout] = k - 1
                out_cnt[nout] = st_cnt[sp]
                nout += 1
            opened = 0
        a = mult[k]
        if a < opened:
            excess = opened - a
            max_ended = -1
            while excess > 0:
                s = st_start[sp - 1]
                c = st_cnt[sp - 1]
                if s > max_ended:
                    max_ended = s
                out_top[nout] = s
                out_end[nout] = k - 1
                if c <= excess:
                    out_cnt[nout] = c
                    sp -= 1
                    excess -= c
                else:
                    out_cnt[nout] = excess
                    st_cnt[sp - 1] = c - excess
                    excess = 0
                nout += 1
            if strict and sp > 0 and st_start[sp - 1] < max_ended:
                ambiguous = True
            opened = a
        elif a > opened:
            st_start[sp] = k
            st_cnt[sp] = a - opened
            sp += 1
            opened = a
    while sp > 0:
        sp -= 1
        out_top[nout] = st_start[sp]
        out_end[nout] = n - 1
        out_cnt[nout] = st_cnt[sp]
        nout += 1
    return out_top[:nout].copy(), out_end[:nout].copy(), out_cnt[:nout].copy(), ambiguous


# ---------------------------------------------------------------------------
# SL2 cohomology of matched strings (closed form)
#
# A string of length m+1 whose top pairs to n has twist c = n - m.  Its H^0
# (c >= 0) is V(m) (x) V(c), its H^1 (c <= -2) is V(m) (x) V(-c-2); both are
# s_alpha-symmetric trapezoids in the same alpha-class.


def _sl2_rows_loop(Ws, p, top, end, cnt, alpha):
    rank = Ws.shape[1]
    ns = top.shape[0]
    n0 = 0
    n1 = 0
    for s in range(ns):
        m = end[s] - top[s]
        c = p[top[s]] - m
        if c >= 0:
            n0 += m + c + 1
        elif c <= -2:
            n1 += m - c - 1
    w0 = np.empty((n0, rank), dtype=np.int64)
    m0 = np.empty(n0, dtype=np.int64)
    w1 = np.empty((n1, rank), dtype=np.int64)
    m1 = np.empty(n1, dtype=np.int64)
    k0 = 0
    k1 = 0
    for s in range(ns):
        m = end[s] - top[s]
        c = p[top[s]] - m
        if c >= 0:
            L = m + c
            for t in range(L + 1):
                for r in range(rank):
                    w0[k0, r] = Ws[top[s], r] - t * alpha[r]
                m0[k0] = cnt[s] * (min(min(t, L - t), min(m, c)) + 1)
                k0 += 1
        elif c <= -2:
            cc = -c - 2
            L = m + cc
            lift = -c - 1
            for t in range(L + 1):
                for r in range(rank):
                    w1[k1, r] = Ws[top[s], r] + (lift - t) * alpha[r]
                m1[k1] = cnt[s] * (min(min(t, L - t), min(m, cc)) + 1)
                k1 += 1
    return w0, m0, w1, m1


def _sl2_rows_numpy(Ws, p, top, end, cnt, alpha):
    m = end - top
    c = p[top] - m
    rank = Ws.shape[1]

    def trapezoids(sel, second, lift):
        L = m[sel] + second
        counts = L + 1
        src = np.repeat(np.arange(counts.size), counts)
        if src.size == 0:
            return np.empty((0, rank), dtype=np.int64), np.empty(0, dtype=np.int64)
        t = np.arange(src.size) - (np.cumsum(counts) - counts)[src]
        Ls = L[src]
        mult = cnt[sel][src] * (np.minimum(np.minimum(t, Ls - t), np.minimum(m[sel][src], second[src])) + 1)
        rows = Ws[top[sel][src]] + (lift[src] - t)[:, None] * alpha[None, :]
        return rows.astype(np.int64), mult.astype(np.int64)

    h0 = c >= 0
    h1 = c <= -2
    w0, m0 = trapezoids(h0, c[h0], np.zeros(int(h0.sum()), dtype=np.int64))
    w1, m1 = trapezoids(h1, -c[h1] - 2, -c[h1] - 1)
    return w0, m0, w1, m1


# ---------------------------------------------------------------------------
# backends

if HAVE_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    NUMBA = SimpleNamespace(
        name="numba",
        demazure_rows=_jit(_demazure_rows_loop),
        match_chains=_jit(_match_chains_loop),
        sl2_rows=_jit(_sl2_rows_loop),
    )
else:  # pragma: no cover
    NUMBA = None

NUMPY = SimpleNamespace(
    name="numpy",
    demazure_rows=_demazure_rows_numpy,
    match_chains=_match_chains_loop,
    sl2_rows=_sl2_rows_numpy,
)

_backend = NUMBA if USE_NUMBA else NUMPY


def backend():
    return _backend


def set_backend(name):
    """Switch kernels at runtime ("numba" or "numpy")."""
    global _backend
    if name == "numba":
        if NUMBA is None:
            raise RuntimeError("numba is not installed")
        _backend = NUMBA
    elif name == "numpy":
        _backend = NUMPY
    else:
        raise ValueError(f"unknown backend {name!r}")


# ---------------------------------------------------------------------------
# array helpers shared by both paths


def empty(rank):
    return np.empty((0, rank), dtype=np.int64), np.empty(0, dtype=np.int64)


def combine(W, M):
    """Merge equal rows, summing multiplicities; drop zeros.  Rows come out
    in lexicographic order."""
    if W.shape[0] == 0:
        return W.reshape(0, W.shape[1]).astype(np.int64), M.astype(np.int64)
    order = np.lexsort(W.T[::-1])
    Ws = W[order]
    starts = np.concatenate(([0], np.nonzero(np.any(Ws[1:] != Ws[:-1], axis=1))[0] + 1))
    sums = np.add.reduceat(M[order], starts)
    keep = sums != 0
    return np.ascontiguousarray(Ws[starts][keep], dtype=np.int64), sums[keep].astype(np.int64)


def alpha_classes(W, alpha, i):
    """Sort rows into alpha-classes.  Returns (order, class id, pairing) with
    each class contiguous and pairings descending inside a class."""
    p = W[:, i]
    rep = W - (p // 2)[:, None] * alpha[None, :]
    _, cls = np.unique(rep, axis=0, return_inverse=True)
    cls = cls.ravel().astype(np.int64)
    order = np.lexsort((-p, cls))
    return order, cls[order], np.ascontiguousarray(p[order])


def demazure(W, M, alpha, i):
    w, m = _backend.demazure_rows(W, M, alpha, i)
    return combine(w, m)


def match(W, M, alpha, i, strict=False):
    """Greedy alpha-string matching on a nonnegative character.

    Returns (sorted weights, sorted pairings, top, end, count, ambiguous);
    top/end index into the sorted arrays."""
    order, cls, p = alpha_classes(W, alpha, i)
    Ws = np.ascontiguousarray(W[order])
    Ms = np.ascontiguousarray(M[order])
    top, end, cnt, amb = _backend.match_chains(cls, p, Ms, strict)
    return Ws, p, top, end, cnt, bool(amb)


def sl2_step(W, M, alpha, i, strict=False):
    """One P^1-fibration step on a nonnegative character: returns
    (H^0 rows, H^0 mults, H^1 rows, H^1 mults, ambiguous)."""
    if W.shape[0] == 0:
        e = empty(W.shape[1])
        return e[0], e[1], e[0].copy(), e[1].copy(), False
    Ws, p, top, end, cnt, amb = match(W, M, alpha, i, strict)
    w0, m0, w1, m1 = _backend.sl2_rows(Ws, p, top, end, cnt, alpha)
    w0, m0 = combine(w0, m0)
    w1, m1 = combine(w1, m1)
    return w0, m0, w1, m1, amb
