"""Independent F_2 computations for modules over the linear quiver 1 -> 2 -> ... -> n.

Modules are (dims, maps) with maps[v] a dims[v+1] x dims[v] matrix over F_2.
Decomposition into interval modules uses ranks of path maps only.
"""

import itertools


def rank2(rows):
    rows = [int("".join(map(str, r)), 2) if r else 0 for r in rows]
    rank = 0
    while rows:
        piv = max(rows)
        rows.remove(piv)
        if piv == 0:
            break
        rank += 1
        top = piv.bit_length() - 1
        rows = [r ^ piv if r >> top & 1 else r for r in rows]
    return rank


def mul(a, b, inner, cols):
    """(rows x inner) times (inner x cols) over F_2; shapes are explicit so empty dimensions survive."""
    return [[sum(a[i][t] * b[t][j] for t in range(inner)) % 2 for j in range(cols)] for i in range(len(a))]


def identity(d):
    return [[int(i == j) for j in range(d)] for i in range(d)]


def interval(n, i, j):
    dims = [1 if i <= v + 1 <= j else 0 for v in range(n)]
    maps = [[[1] * dims[v]] * dims[v + 1] if dims[v] and dims[v + 1] else [[0] * dims[v] for _ in range(dims[v + 1])]
            for v in range(n - 1)]
    return dims, maps


def direct_sum(a, b):
    (da, ma), (db, mb) = a, b
    dims = [x + y for x, y in zip(da, db)]
    maps = []
    for v in range(len(ma)):
        rows = [list(r) + [0] * db[v] for r in ma[v]] + [[0] * da[v] + list(r) for r in mb[v]]
        maps.append(rows)
    return dims, maps


def path(mod, a, b):
    dims, maps = mod
    m = identity(dims[a])
    for v in range(a, b):
        m = mul(maps[v], m, dims[v], dims[a])
    return m


def multiplicities(n, rank):
    """Interval multiplicities from r(a, b) = rank of the path map from vertex a to b (0-based)."""
    def r(a, b):
        return rank(a, b) if 0 <= a <= b < n else 0
    out = {}
    for a in range(n):
        for b in range(a, n):
            m = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1)
            if m:
                out[(a + 1, b + 1)] = m
    return out


def decompose(mod):
    n = len(mod[0])
    return multiplicities(n, lambda a, b: rank2(path(mod, a, b)) if mod[0][a] else 0)


def transpose(m, rows, cols):
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def morphisms(x, y):
    """All quiver morphisms x -> y over F_2, by solving the commutation system."""
    (dx, mx), (dy, my) = x, y
    n = len(dx)
    offsets, total = [], 0
    for v in range(n):
        offsets.append(total)
        total += dy[v] * dx[v]

    def var(v, i, j):
        return offsets[v] + i * dx[v] + j

    eqs = []
    for v in range(n - 1):
        # my[v] phi_v = phi_{v+1} mx[v], entrywise (i, j) with i < dy[v+1], j < dx[v]
        for i in range(dy[v + 1]):
            for j in range(dx[v]):
                row = [0] * total
                for t in range(dy[v]):
                    if my[v][i][t]:
                        row[var(v, t, j)] ^= 1
                for t in range(dx[v + 1]):
                    if mx[v][t][j]:
                        row[var(v + 1, i, t)] ^= 1
                eqs.append(row)
    basis = nullspace2(eqs, total)
    for coeffs in itertools.product((0, 1), repeat=len(basis)):
        vec = [0] * total
        for c, b in zip(coeffs, basis):
            if c:
                vec = [p ^ q for p, q in zip(vec, b)]
        yield [[[vec[var(v, i, j)] for j in range(dx[v])] for i in range(dy[v])] for v in range(n)]


def nullspace2(eqs, total):
    rows = [list(r) for r in eqs]
    pivots = []
    r = 0
    for c in range(total):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(total) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * total
        vec[f] = 1
        for i, c in enumerate(pivots):
            vec[c] = rows[i][f]
        basis.append(vec)
    return basis


def kernel_type(x, y, phi):
    dx = x[0]
    n = len(dx)
    kernels = []
    for v in range(n):
        basis = nullspace2(phi[v], dx[v]) if dx[v] else []
        kernels.append(transpose(basis, len(basis), dx[v]) if basis else [])

    def rank(a, b):
        if not kernels[a]:
            return 0
        return rank2(mul(path(x, a, b), kernels[a], dx[a], len(kernels[a][0])))
    return multiplicities(n, rank)


def cokernel_type(x, y, phi):
    dx, dy = x[0], y[0]
    n = len(dy)

    def rank(a, b):
        if not dy[a]:
            return 0
        p = path(y, a, b)
        im = phi[b]
        joined = [list(p[i]) + list(im[i]) for i in range(dy[b])]
        return rank2(joined) - rank2(im)
    return multiplicities(n, rank)


def extension_types(x, y):
    """Interval types of middle terms E of all extensions 0 -> y -> E -> x -> 0."""
    (dx, mx), (dy, my) = x, y
    n = len(dx)
    slots = [(v, i, j) for v in range(n - 1) for i in range(dy[v + 1]) for j in range(dx[v])]
    for bits in itertools.product((0, 1), repeat=len(slots)):
        h = [[[0] * dx[v] for _ in range(dy[v + 1])] for v in range(n - 1)]
        for (v, i, j), b in zip(slots, bits):
            h[v][i][j] = b
        maps = []
        for v in range(n - 1):
            top = [list(my[v][i]) + list(h[v][i]) for i in range(dy[v + 1])]
            bottom = [[0] * dy[v] + list(mx[v][i]) for i in range(dx[v + 1])]
            maps.append(top + bottom)
        yield decompose(([a + b for a, b in zip(dy, dx)], maps))


def wide_subsets(n, max_summands=2):
    """Subsets of interval modules whose additive closure is closed under kernels, cokernels, extensions."""
    ints = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    index = {iv: k for k, iv in enumerate(ints)}
    objects = []
    for size in range(1, max_summands + 1):
        for combo in itertools.combinations_with_replacement(range(len(ints)), size):
            mod = interval(n, *ints[combo[0]])
            for k in combo[1:]:
                mod = direct_sum(mod, interval(n, *ints[k]))
            objects.append((sum(1 << k for k in set(combo)), len(combo), mod))

    def mask(types):
        return sum(1 << index[t] for t in types)

    needs = []
    for (sx, nx, x), (sy, ny, y) in itertools.product(objects, repeat=2):
        need = 0
        for phi in morphisms(x, y):
            need |= mask(kernel_type(x, y, phi)) | mask(cokernel_type(x, y, phi))
        if nx == 1 and ny == 1:
            for t in extension_types(x, y):
                need |= mask(t)
        needs.append((sx | sy, need))
    out = []
    for w in range(1 << len(ints)):
        if all(need & ~w == 0 for support, need in needs if support & ~w == 0):
            out.append(frozenset(ints[k] for k in range(len(ints)) if w >> k & 1))
    return out
