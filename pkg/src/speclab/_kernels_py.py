"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""


def rank_mod_p(matrix, p):
    """Rank of an integer matrix over F_p."""
    a = [[int(v) % p for v in row] for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        pivot_row = [(v * inv) % p for v in a[r]]
        a[r] = pivot_row
        for i in range(r + 1, rows):
            f = a[i][c]
            if f:
                row = a[i]
                a[i] = [(row[j] - f * pivot_row[j]) % p for j in range(cols)]
        r += 1
    return r


def specialization_closed_masks(closures, limit):
    k = len(closures)
    if k > limit or k > 62:
        raise OverflowError(k)
    out = []
    for mask in range(1 << k):
        rem, x = mask, 0
        ok = True
        while rem:
            if rem & 1 and closures[x] & ~mask:
                ok = False
                break
            rem >>= 1
            x += 1
        if ok:
            out.append(mask)
    return out


def intersections_of_complements(subsets, primes, full):
    out = []
    for u in subsets:
        acc = full
        for t, pm in enumerate(primes):
            if not (u >> t) & 1:
                acc &= pm
        out.append(acc)
    return out


def moore_family(generators, full, limit=1 << 20):
    seen = {full}
    stack = [full]
    while stack:
        cur = stack.pop()
        for g in generators:
            nxt = cur & g
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise OverflowError(limit)
                stack.append(nxt)
    return sorted(seen)


def closure_fixed_points(out_nz, in_nz, limit):
    k = len(out_nz)
    if k > limit or k > 62:
        raise OverflowError(k)
    out = []
    for s in range(1 << k):
        left = 0
        for x in range(k):
            if not out_nz[x] & s:
                left |= 1 << x
        right = 0
        for x in range(k):
            if not in_nz[x] & left:
                right |= 1 << x
        if right == s:
            out.append(s)
    return out
