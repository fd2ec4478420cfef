"""Hot loops over integer-scaled structure constants.

Both kernels take the CSR-like arrays from :meth:`LieAlgebra.to_arrays`
(``ptr``, ``idx``, ``val`` over ordered basis pairs) and are exact: values
are int64 and the algebras here never get near overflow.

Two implementations exist for each kernel: numba ``@njit`` loops and a
vectorized numpy join.  The numba path is used when numba imports and
``LIEFORGE_DISABLE_NUMBA`` is unset or ``0``; pass ``backend=`` to force one.
``LIEFORGE_THREADS`` caps numba worker threads (0 = numba's default).
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "HAVE_NUMBA",
    "default_backend",
    "jacobi_first_failure",
    "killing_matrix",
]

try:  # pragma: no cover - exercised implicitly
    import numba
    from numba import njit, prange

    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the bundled TBB is too old and only produces a warning
        numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def default_backend() -> str:
    flag = os.environ.get("LIEFORGE_DISABLE_NUMBA", "0").strip().lower()
    if not HAVE_NUMBA or flag not in ("", "0", "false", "no"):
        return "numpy"
    return "numba"


def _resolve(backend: str | None) -> str:
    backend = backend or default_backend()
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


def _threads() -> int:
    try:
        t = int(os.environ.get("LIEFORGE_THREADS", "0"))
    except ValueError:
        t = 0
    if t < 0:
        t = 0
    return t


# ------------------------------------------------------------------ Jacobi


if HAVE_NUMBA:

    @njit(cache=True)
    def _accumulate(a, b, c, dim, ptr, idx, val, acc, mark, touched, nt):
        # acc += [x_a, [x_b, x_c]]
        p = b * dim + c
        for s in range(ptr[p], ptr[p + 1]):
            m = idx[s]
            v = val[s]
            q = a * dim + m
            for t in range(ptr[q], ptr[q + 1]):
                l = idx[t]
                if not mark[l]:
                    mark[l] = True
                    touched[nt] = l
                    nt += 1
                acc[l] += v * val[t]
        return nt

    @njit(cache=True)
    def _jacobi_row(i, dim, ptr, idx, val, out_jk, out_res):
        acc = np.zeros(dim, dtype=np.int64)
        mark = np.zeros(dim, dtype=np.bool_)
        touched = np.empty(dim, dtype=np.int64)
        for j in range(i, dim):
            for k in range(j, dim):
                nt = 0
                nt = _accumulate(i, j, k, dim, ptr, idx, val, acc, mark, touched, nt)
                nt = _accumulate(j, k, i, dim, ptr, idx, val, acc, mark, touched, nt)
                nt = _accumulate(k, i, j, dim, ptr, idx, val, acc, mark, touched, nt)
                bad = False
                for s in range(nt):
                    if acc[touched[s]] != 0:
                        bad = True
                if bad:
                    out_jk[0] = j
                    out_jk[1] = k
                    for s in range(dim):
                        out_res[s] = acc[s]
                for s in range(nt):
                    acc[touched[s]] = 0
                    mark[touched[s]] = False
                if bad:
                    return True
        return False

    @njit(parallel=True, cache=True)
    def _jacobi_chunk(i0, i1, dim, ptr, idx, val, fail, jk, res):
        for r in prange(i1 - i0):
            fail[r] = _jacobi_row(i0 + r, dim, ptr, idx, val, jk[r], res[r])

    @njit(cache=True)
    def _killing_join_nb(dim, first, val, lo, hi, order_f):
        out = np.zeros((dim, dim), dtype=np.int64)
        for e in range(first.size):
            a = first[e]
            v = val[e]
            for t in range(lo[e], hi[e]):
                f = order_f[t]
                out[a, first[f]] += v * val[f]
        return out


def _jacobi_numba(dim, ptr, idx, val):
    threads = _threads()
    if threads:
        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    width = max(1, numba.get_num_threads())
    for i0 in range(0, dim, width):
        i1 = min(dim, i0 + width)
        fail = np.zeros(i1 - i0, dtype=np.bool_)
        jk = np.zeros((i1 - i0, 2), dtype=np.int64)
        res = np.zeros((i1 - i0, dim), dtype=np.int64)
        _jacobi_chunk(i0, i1, dim, ptr, idx, val, fail, jk, res)
        hits = np.flatnonzero(fail)
        if hits.size:
            r = int(hits[0])
            return (i0 + r, int(jk[r, 0]), int(jk[r, 1])), res[r]
    return None


def _expand(ptr, keys):
    """Positions ptr[keys[e]] .. ptr[keys[e]+1]-1 for every e, with owner ids."""
    starts = ptr[keys]
    counts = ptr[keys + 1] - starts
    owner = np.repeat(np.arange(keys.size), counts)
    if owner.size == 0:
        return owner, owner
    offs = np.arange(owner.size) - np.repeat(np.cumsum(counts) - counts, counts)
    return owner, starts[owner] + offs


def _jacobi_numpy(dim, ptr, idx, val):
    counts = np.diff(ptr)
    pair = np.repeat(np.arange(dim * dim), counts)
    first, second = pair // dim, pair % dim
    # entries grouped by second index: (first=b, second=m) -> l
    by_second = np.argsort(second, kind="stable")
    sec_ptr = np.zeros(dim + 1, dtype=np.int64)
    np.cumsum(np.bincount(second, minlength=dim), out=sec_ptr[1:])
    sec_first = first[by_second]
    sec_out = idx[by_second]
    sec_val = val[by_second]

    for a in range(dim):
        keys, vals = [], []
        # [a, [b, c]] over every entry (b, c) -> m
        own, pos = _expand(ptr, a * dim + idx)
        keys.append(pair[own] * dim + idx[pos])
        vals.append(val[own] * val[pos])
        # [b, [c, a]]: [c, a] = sum_m v1 x_m, then [b, x_m] for all b
        ca = np.arange(dim) * dim + a
        o1, p1 = _expand(ptr, ca)
        c_of, m_of, v1 = o1, idx[p1], val[p1]
        o2, p2 = _expand(sec_ptr, m_of)
        b2 = sec_first[p2]
        keys.append((b2 * dim + c_of[o2]) * dim + sec_out[p2])
        vals.append(v1[o2] * sec_val[p2])
        # [c, [a, b]]: [a, b] = sum_m v1 x_m, then [c, x_m] for all c
        ab = a * dim + np.arange(dim)
        o1, p1 = _expand(ptr, ab)
        b_of, m_of, v1 = o1, idx[p1], val[p1]
        o2, p2 = _expand(sec_ptr, m_of)
        c2 = sec_first[p2]
        keys.append((b_of[o2] * dim + c2) * dim + sec_out[p2])
        vals.append(v1[o2] * sec_val[p2])

        k = np.concatenate(keys)
        v = np.concatenate(vals)
        if k.size == 0:
            continue
        order = np.argsort(k, kind="stable")
        k, v = k[order], v[order]
        starts = np.flatnonzero(np.r_[True, k[1:] != k[:-1]])
        sums = np.add.reduceat(v, starts)
        ukeys = k[starts]
        nz = sums != 0
        if not nz.any():
            continue
        bc = ukeys[nz] // dim
        b, c = bc // dim, bc % dim
        ok = (b >= a) & (c >= b)
        if not ok.any():
            continue
        best = int(bc[ok][0])
        sel = nz & (ukeys // dim == best)
        res = np.zeros(dim, dtype=np.int64)
        res[ukeys[sel] % dim] = sums[sel]
        return (a, best // dim, best % dim), res
    return None


def jacobi_first_failure(dim, ptr, idx, val, backend: str | None = None):
    """Smallest triple i <= j <= k whose Jacobi sum is nonzero.

    Returns ``None`` when the identity holds everywhere, otherwise
    ``((i, j, k), residual)`` with the residual scaled by ``scale**2``.
    """
    if _resolve(backend) == "numba":
        return _jacobi_numba(dim, ptr, idx, val)
    return _jacobi_numpy(dim, ptr, idx, val)


# ---------------------------------------------------------------- Killing


def _killing_join(dim, ptr, idx):
    """Pair entry (a, m) -> l with every entry (b, l) -> m.

    Returns the first index of every entry and, per entry, the range of
    matching partners in ``order_f``.
    """
    counts = np.diff(ptr)
    pair = np.repeat(np.arange(dim * dim), counts)
    first, second = pair // dim, pair % dim
    key_e = second * dim + idx
    key_f = idx * dim + second
    order_f = np.argsort(key_f, kind="stable")
    kf = key_f[order_f]
    lo = np.searchsorted(kf, key_e, side="left")
    hi = np.searchsorted(kf, key_e, side="right")
    return first, lo, hi, order_f


def _killing_numpy(dim, ptr, idx, val):
    first, lo, hi, order_f = _killing_join(dim, ptr, idx)
    cnt = hi - lo
    owner = np.repeat(np.arange(first.size), cnt)
    offs = np.arange(owner.size) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    fpos = order_f[lo[owner] + offs]
    out = np.zeros(dim * dim, dtype=np.int64)
    np.add.at(out, first[owner] * dim + first[fpos], val[owner] * val[fpos])
    return out.reshape(dim, dim)


def _killing_numba(dim, ptr, idx, val):
    first, lo, hi, order_f = _killing_join(dim, ptr, idx)
    return _killing_join_nb(dim, first, val, lo, hi, order_f)


def killing_matrix(dim, ptr, idx, val, backend: str | None = None) -> np.ndarray:
    """tr(ad x_a ad x_b) for all a, b, scaled by ``scale**2``."""
    if _resolve(backend) == "numba":
        return _killing_numba(dim, ptr, idx, val)
    return _killing_numpy(dim, ptr, idx, val)
