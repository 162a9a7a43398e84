"""Numba-compiled kernels.

Every function here has a twin with the same signature in ``_np``.  Loops are
written out explicitly; numpy is used only for allocation.
"""
import numpy as np
from numba import njit

_jit = dict(cache=True, nogil=True)


@njit(**_jit)
def bfs_all_pairs(indptr, indices, n):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            du = row[u] + 1
            for p in range(indptr[u], indptr[u + 1]):
                v = indices[p]
                if row[v] < 0:
                    row[v] = du
                    queue[tail] = v
                    tail += 1
    return dist


@njit(**_jit)
def _cmp_rows(a, b):
    for w in range(a.shape[0]):
        if a[w] < b[w]:
            return -1
        if a[w] > b[w]:
            return 1
    return 0


@njit(**_jit)
def _find(sorted_codes, order, q):
    lo = 0
    hi = sorted_codes.shape[0] - 1
    while lo <= hi:
        mid = (lo + hi) >> 1
        c = _cmp_rows(sorted_codes[mid], q)
        if c == 0:
            return order[mid]
        if c < 0:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


def sort_codes(codes):
    if codes.shape[1] == 0:
        order = np.arange(codes.shape[0], dtype=np.int64)
    else:
        order = np.lexsort(codes.T[::-1]).astype(np.int64)
    return np.ascontiguousarray(codes[order]), order


@njit(**_jit)
def lookup_codes(sorted_codes, order, queries):
    out = np.empty(queries.shape[0], dtype=np.int64)
    for i in range(queries.shape[0]):
        out[i] = _find(sorted_codes, order, queries[i])
    return out


@njit(**_jit)
def majority_violation(codes, sorted_codes, order):
    n, nw = codes.shape
    q = np.empty(nw, dtype=np.uint64)
    out = np.full(3, -1, dtype=np.int64)
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                for w in range(nw):
                    a = codes[x, w]
                    b = codes[y, w]
                    c = codes[z, w]
                    q[w] = (a & b) | (a & c) | (b & c)
                if _find(sorted_codes, order, q) < 0:
                    out[0] = x
                    out[1] = y
                    out[2] = z
                    return out
    return out


@njit(**_jit)
def brute_median_violation(dist):
    n = dist.shape[0]
    out = np.full(4, -1, dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            dxy = dist[x, y]
            for z in range(y, n):
                dxz = dist[x, z]
                dyz = dist[y, z]
                count = 0
                for m in range(n):
                    if (dist[x, m] + dist[m, y] == dxy
                            and dist[x, m] + dist[m, z] == dxz
                            and dist[y, m] + dist[m, z] == dyz):
                        count += 1
                if count != 1:
                    out[0] = x
                    out[1] = y
                    out[2] = z
                    out[3] = count
                    return out
    return out


@njit(**_jit)
def delta4_doubled(dist):
    n = dist.shape[0]
    best = 0
    for x in range(n):
        for y in range(x + 1, n):
            dxy = dist[x, y]
            for z in range(y + 1, n):
                dxz = dist[x, z]
                dyz = dist[y, z]
                for w in range(z + 1, n):
                    s1 = dxy + dist[z, w]
                    s2 = dxz + dist[y, w]
                    s3 = dist[x, w] + dyz
                    # largest minus second largest
                    if s1 < s2:
                        s1, s2 = s2, s1
                    if s2 < s3:
                        s2, s3 = s3, s2
                    if s1 < s2:
                        s1, s2 = s2, s1
                    if s1 - s2 > best:
                        best = s1 - s2
    return best


@njit(**_jit)
def gate_table(x, codes, sorted_codes, order):
    n, nw = codes.shape
    gate = np.empty((n, n), dtype=np.int32)
    q = np.empty(nw, dtype=np.uint64)
    for y in range(n):
        for v in range(n):
            for w in range(nw):
                sep = codes[x, w] ^ codes[y, w]
                q[w] = (codes[v, w] & sep) | (codes[x, w] & ~sep)
            gate[y, v] = _find(sorted_codes, order, q)
    return gate


@njit(**_jit)
def _longest_chain(cand, nc, lt):
    best = 0
    lens = np.zeros(nc, dtype=np.int32)
    for a in range(nc):
        la = 1
        for b in range(a):
            if lt[cand[b], cand[a]] and lens[b] + 1 > la:
                la = lens[b] + 1
        lens[a] = la
        if la > best:
            best = la
    return best


@njit(**_jit)
def pair_tables(x, D, dist, side, cross, lt, topo, gate):
    n, nh = side.shape
    nhs = 2 * nh
    periph = np.zeros((n, nhs), dtype=np.bool_)
    inter = np.full((n, nhs), -1, dtype=np.int32)
    dper = np.zeros((n, nhs), dtype=np.bool_)
    dmax = np.full((n, nhs), -1, dtype=np.int32)
    proj = np.zeros((n, nhs, n), dtype=np.bool_)
    cyl = np.ones((n, n), dtype=np.bool_)
    cand = np.empty(nhs, dtype=np.int64)
    for y in range(n):
        for j in range(nh):
            if side[x, j] != side[y, j]:
                continue
            h = 2 * j + 1 - side[x, j]
            periph[y, h] = True
            nc = 0
            for t in range(nhs):
                k = topo[t]
                jk = k >> 1
                if (side[x, jk] != side[y, jk] and (k & 1) == side[y, jk]
                        and cross[j, jk]):
                    cand[nc] = k
                    nc += 1
            i = _longest_chain(cand, nc, lt) if nc > 0 else 0
            inter[y, h] = i
            if i <= D:
                dper[y, h] = True
                hside = h & 1
                dm = 0
                for v in range(n):
                    if side[v, j] == hside:
                        cyl[y, v] = False
                        g = gate[y, v]
                        proj[y, h, g] = True
                        if dist[x, g] > dm:
                            dm = dist[x, g]
                dmax[y, h] = dm
    return periph, inter, dper, dmax, proj, cyl


@njit(**_jit)
def sweep_block(x, ys, zs, dist, periph, dper, dmax, proj, cyl, gate, Dd, R):
    """Per-triple stability record.

    Columns: doubled rho, |sym diff|, |centers|, covered, greedy k,
    distinct projection count, peripheral-containment ok.
    """
    T = ys.shape[0]
    n = dist.shape[0]
    nhs = dper.shape[1]
    out = np.zeros((T, 7), dtype=np.int64)
    centers = np.zeros(n, dtype=np.bool_)
    clist = np.empty(n, dtype=np.int64)
    sd = np.empty(n, dtype=np.int64)
    fam = np.empty(nhs, dtype=np.int64)
    for t in range(T):
        y = ys[t]
        z = zs[t]
        rho2 = dist[x, y] + dist[x, z] - dist[y, z]
        out[t, 0] = rho2
        ns = 0
        for v in range(n):
            if 2 * dist[x, v] <= rho2 and cyl[y, v] != cyl[z, v]:
                sd[ns] = v
                ns += 1
        out[t, 1] = ns

        # difference family at the tighter threshold rho - Dd
        nf = 0
        ok = 1
        for h in range(nhs):
            if dper[y, h] and 2 * dmax[y, h] < rho2 - 2 * Dd:
                if not periph[z, h]:
                    ok = 0
                if not dper[z, h]:
                    fam[nf] = h
                    nf += 1
        out[t, 6] = ok
        distinct = 0
        for a in range(nf):
            fresh = True
            for b in range(a):
                same = True
                for v in range(n):
                    if proj[y, fam[a], v] != proj[y, fam[b], v]:
                        same = False
                        break
                if same:
                    fresh = False
                    break
            if fresh:
                distinct += 1
        out[t, 5] = distinct

        # witness centers, superset threshold rho + Dd
        for v in range(n):
            centers[v] = False
        centers[gate[y, z]] = True
        lim = rho2 + 2 * Dd
        for h in range(nhs):
            if dper[y, h] and not dper[z, h] and 2 * dmax[y, h] < lim:
                for v in range(n):
                    if proj[y, h, v]:
                        centers[v] = True
            if dper[z, h] and not dper[y, h] and 2 * dmax[z, h] < lim:
                for v in range(n):
                    if proj[z, h, v]:
                        centers[v] = True
        nc = 0
        for v in range(n):
            if centers[v]:
                clist[nc] = v
                nc += 1
        out[t, 2] = nc

        if ns == 0:
            out[t, 3] = 1
            continue
        uncovered = np.ones(ns, dtype=np.bool_)
        left = ns
        k = 0
        while left > 0:
            best = 0
            bc = -1
            for c in range(nc):
                cnt = 0
                for s in range(ns):
                    if uncovered[s] and dist[clist[c], sd[s]] <= R:
                        cnt += 1
                if cnt > best:
                    best = cnt
                    bc = c
            if best == 0:
                break
            for s in range(ns):
                if uncovered[s] and dist[clist[bc], sd[s]] <= R:
                    uncovered[s] = False
            left -= best
            k += 1
        out[t, 3] = 1 if left == 0 else 0
        out[t, 4] = k
    return out


@njit(**_jit)
def grid_scan(ea, eb, elen, cross):
    P = ea.shape[0]
    best = 0
    bi = -1
    bj = -1
    for i in range(P):
        if elen[i] <= best:
            break
        a1 = ea[i] >> 1
        a2 = eb[i] >> 1
        for j in range(i + 1, P):
            if elen[j] <= best:
                break
            b1 = ea[j] >> 1
            b2 = eb[j] >> 1
            if cross[a1, b1] and cross[a1, b2] and cross[a2, b1] and cross[a2, b2]:
                best = elen[j]
                bi = i
                bj = j
                break
    return best, bi, bj
