"""Pure-numpy kernels, same signatures as ``_nb``.

Vectorised over the innermost index; slower than the compiled path but with
no dependency beyond numpy.
"""
import numpy as np


def bfs_all_pairs(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    frontier = np.eye(n, dtype=bool)
    seen = frontier.copy()
    np.fill_diagonal(dist, 0)
    deg = np.diff(indptr)
    nz = deg > 0
    starts = indptr[:-1][nz]
    level = 0
    while frontier.any():
        level += 1
        # column v of nxt = OR of frontier columns over the neighbours of v
        nxt = np.zeros((n, n), dtype=bool)
        if len(indices):
            nxt[:, nz] = np.logical_or.reduceat(frontier[:, indices], starts, axis=1)
        nxt &= ~seen
        dist[nxt] = level
        seen |= nxt
        frontier = nxt
    return dist


def _void(a):
    a = np.ascontiguousarray(a)
    return a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel()


def sort_codes(codes):
    if codes.shape[1] == 0:
        return codes.copy(), np.arange(codes.shape[0], dtype=np.int64)
    order = np.argsort(_void(codes), kind="stable").astype(np.int64)
    return np.ascontiguousarray(codes[order]), order


def lookup_codes(sorted_codes, order, queries):
    n = sorted_codes.shape[0]
    if sorted_codes.shape[1] == 0:
        return np.zeros(queries.shape[0], dtype=np.int64) if n else np.full(queries.shape[0], -1)
    keys = _void(sorted_codes)
    q = _void(queries)
    pos = np.searchsorted(keys, q)
    hit = pos < n
    hit[hit] = keys[pos[hit]] == q[hit]
    out = np.full(q.shape[0], -1, dtype=np.int64)
    out[hit] = order[pos[hit]]
    return out


def majority_violation(codes, sorted_codes, order):
    n = codes.shape[0]
    for x in range(n):
        for y in range(x + 1, n - 1):
            a, b, c = codes[x], codes[y], codes[y + 1:]
            maj = (a & b) | (a & c) | (b & c)
            found = lookup_codes(sorted_codes, order, maj)
            bad = np.flatnonzero(found < 0)
            if bad.size:
                return np.array([x, y, y + 1 + bad[0]], dtype=np.int64)
    return np.full(3, -1, dtype=np.int64)


def brute_median_violation(dist):
    n = dist.shape[0]
    for x in range(n):
        for y in range(x, n):
            zs = np.arange(y, n)
            on_xy = dist[x] + dist[y] == dist[x, y]
            on_xz = dist[x][None, :] + dist[zs] == dist[x, zs][:, None]
            on_yz = dist[y][None, :] + dist[zs] == dist[y, zs][:, None]
            count = (on_xy[None, :] & on_xz & on_yz).sum(axis=1)
            bad = np.flatnonzero(count != 1)
            if bad.size:
                z = zs[bad[0]]
                return np.array([x, y, z, count[bad[0]]], dtype=np.int64)
    return np.full(4, -1, dtype=np.int64)


def delta4_doubled(dist):
    n = dist.shape[0]
    best = 0
    d = dist.astype(np.int64)
    for x in range(n):
        for y in range(x + 1, n):
            # all (z, w); the max over unordered tuples is the same
            s1 = d[x, y] + d
            s2 = d[x][:, None] + d[y][None, :]
            s3 = d[y][:, None] + d[x][None, :]
            s = np.sort(np.stack([s1, s2, s3]), axis=0)
            best = max(best, int((s[2] - s[1]).max()))
    return best


def gate_table(x, codes, sorted_codes, order):
    n = codes.shape[0]
    gate = np.empty((n, n), dtype=np.int32)
    for y in range(n):
        sep = codes[x] ^ codes[y]
        q = (codes & sep) | (codes[x] & ~sep)
        gate[y] = lookup_codes(sorted_codes, order, q)
    return gate


def _longest_chain(cand, lt):
    lens = np.zeros(len(cand), dtype=np.int64)
    sub = lt[np.ix_(cand, cand)]
    for a in range(len(cand)):
        prev = lens[:a][sub[:a, a]]
        lens[a] = 1 + (prev.max() if prev.size else 0)
    return int(lens.max()) if len(cand) else 0


def pair_tables(x, D, dist, side, cross, lt, topo, gate):
    n, nh = side.shape
    nhs = 2 * nh
    periph = np.zeros((n, nhs), dtype=bool)
    inter = np.full((n, nhs), -1, dtype=np.int32)
    dper = np.zeros((n, nhs), dtype=bool)
    dmax = np.full((n, nhs), -1, dtype=np.int32)
    proj = np.zeros((n, nhs, n), dtype=bool)
    cyl = np.ones((n, n), dtype=bool)
    tj = topo >> 1
    for y in range(n):
        sep = side[x] != side[y]
        sep_side = (topo & 1) == side[y, tj]
        for j in np.flatnonzero(~sep):
            h = 2 * j + 1 - side[x, j]
            periph[y, h] = True
            cand = topo[sep[tj] & sep_side & cross[j, tj]]
            i = _longest_chain(cand, lt)
            inter[y, h] = i
            if i <= D:
                dper[y, h] = True
                inside = side[:, j] == (h & 1)
                cyl[y, inside] = False
                g = gate[y, inside]
                proj[y, h, g] = True
                dmax[y, h] = dist[x, g].max()
    return periph, inter, dper, dmax, proj, cyl


def sweep_block(x, ys, zs, dist, periph, dper, dmax, proj, cyl, gate, Dd, R):
    T = len(ys)
    out = np.zeros((T, 7), dtype=np.int64)
    ball_r = dist <= R
    for t in range(T):
        y, z = ys[t], zs[t]
        rho2 = int(dist[x, y]) + int(dist[x, z]) - int(dist[y, z])
        out[t, 0] = rho2
        sd = np.flatnonzero((2 * dist[x] <= rho2) & (cyl[y] != cyl[z]))
        out[t, 1] = sd.size

        near = dper[y] & (2 * dmax[y] < rho2 - 2 * Dd)
        out[t, 6] = int(not (near & ~periph[z]).any())
        fam = np.flatnonzero(near & ~dper[z])
        out[t, 5] = len(np.unique(proj[y, fam], axis=0)) if fam.size else 0

        lim = rho2 + 2 * Dd
        fy = dper[y] & ~dper[z] & (2 * dmax[y] < lim)
        fz = dper[z] & ~dper[y] & (2 * dmax[z] < lim)
        centers = proj[y, fy].any(axis=0) | proj[z, fz].any(axis=0)
        centers[gate[y, z]] = True
        clist = np.flatnonzero(centers)
        out[t, 2] = clist.size
        if sd.size == 0:
            out[t, 3] = 1
            continue
        cover = ball_r[np.ix_(clist, sd)]
        uncovered = np.ones(sd.size, dtype=bool)
        k = 0
        while uncovered.any():
            counts = (cover & uncovered).sum(axis=1)
            c = int(np.argmax(counts))
            if counts[c] == 0:
                break
            uncovered &= ~cover[c]
            k += 1
        out[t, 3] = int(not uncovered.any())
        out[t, 4] = k
    return out


def grid_scan(ea, eb, elen, cross):
    P = len(ea)
    best, bi, bj = 0, -1, -1
    a_all, b_all = ea >> 1, eb >> 1
    for i in range(P):
        if elen[i] <= best:
            break
        js = np.arange(i + 1, P)
        js = js[elen[js] > best]
        if not js.size:
            continue
        a1, a2 = ea[i] >> 1, eb[i] >> 1
        b1, b2 = a_all[js], b_all[js]
        ok = cross[a1, b1] & cross[a1, b2] & cross[a2, b1] & cross[a2, b2]
        hit = np.flatnonzero(ok)
        if hit.size:
            j = js[hit[0]]
            best, bi, bj = int(elen[j]), i, int(j)
    return best, bi, bj
