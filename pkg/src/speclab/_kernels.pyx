# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same surface as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

ctypedef long long i64
ctypedef unsigned long long u64


cdef inline i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rank_mod_p(object matrix, i64 p):
    """Rank of an integer matrix over F_p (p < 2**31)."""
    cdef cnp.ndarray[i64, ndim=2] a = np.array(matrix, dtype=np.int64, copy=True)
    if a.ndim != 2 or a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f
    for i in range(rows):
        for j in range(cols):
            a[i, j] = a[i, j] % p
            if a[i, j] < 0:
                a[i, j] += p
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                f = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = f
        inv = _inv_mod(a[r, c], p)
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(r + 1, rows):
            f = a[i, c]
            if f != 0:
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
                    if a[i, j] < 0:
                        a[i, j] += p
        r += 1
    return int(r)


def specialization_closed_masks(object closures, Py_ssize_t limit):
    """All masks U over k points with closure[x] contained in U for every x in U.

    ``closures[x]`` is the bitmask of the closure of point x. Enumerates the
    2**k candidates; ``limit`` caps k.
    """
    cdef Py_ssize_t k = len(closures)
    if k > limit or k > 62:
        raise OverflowError(k)
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] cl = np.array(closures, dtype=np.uint64)
    cdef u64 total = (<u64>1) << k
    cdef u64 mask, rem
    cdef int x, ok
    out = []
    for mask in range(total):
        ok = 1
        rem = mask
        x = 0
        while rem:
            if rem & 1:
                if (cl[x] & ~mask) != 0:
                    ok = 0
                    break
            rem >>= 1
            x += 1
        if ok:
            out.append(mask)
    return out


def intersections_of_complements(object subsets, object primes, u64 full):
    """For each point subset U, AND together the prime masks whose index is not in U."""
    cdef Py_ssize_t m = len(primes), t
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] pr = np.array(primes, dtype=np.uint64)
    cdef u64 acc, u
    out = []
    for obj in subsets:
        u = obj
        acc = full
        for t in range(m):
            if not (u >> t) & 1:
                acc &= pr[t]
        out.append(acc)
    return out


def moore_family(object generators, u64 full, Py_ssize_t limit=1 << 20):
    """All intersections of the generator masks, including the empty one (``full``).

    Raises OverflowError once more than ``limit`` sets have been found.
    """
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] gens = np.array(generators, dtype=np.uint64)
    cdef Py_ssize_t g = gens.shape[0], i
    cdef u64 cur, nxt
    seen = {full}
    stack = [full]
    while stack:
        cur = stack.pop()
        for i in range(g):
            nxt = cur & gens[i]
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise OverflowError(limit)
                stack.append(nxt)
    return sorted(seen)


def closure_fixed_points(object out_nz, object in_nz, Py_ssize_t limit):
    """Masks S with perp_right(perp_left(S)) == S, by exhausting all 2**k subsets.

    ``out_nz[x]``: classes y with some nonzero Hom(x, shift y);
    ``in_nz[y]``: classes x with some nonzero Hom(x, shift y).
    """
    cdef Py_ssize_t k = len(out_nz), x
    if k > limit or k > 62:
        raise OverflowError(k)
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] on = np.array(out_nz, dtype=np.uint64)
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] inn = np.array(in_nz, dtype=np.uint64)
    cdef u64 total = (<u64>1) << k
    cdef u64 s, left, right
    out = []
    for s in range(total):
        left = 0
        for x in range(k):
            if (on[x] & s) == 0:
                left |= (<u64>1) << x
        right = 0
        for x in range(k):
            if (inn[x] & left) == 0:
                right |= (<u64>1) << x
        if right == s:
            out.append(s)
    return out
