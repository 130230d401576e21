"""Compiled inner loops.

All kernels work on CSR arrays: ``indptr``/``adj`` with each neighbour list
sorted by ``rank`` (heaviest first), ``mate`` holding -1 for unmatched
vertices, and ``cursor`` holding per-vertex offsets into the lists.

Augmentation logs are flat: ``log`` holds path vertices origin-first and
``offsets[k]:offsets[k+1]`` delimits the k-th augmenting path.
"""

import numpy as np
from numba import njit

INF_RANK = np.iinfo(np.int64).max


@njit(cache=True)
def _grow(buf, need):
    if need <= buf.shape[0]:
        return buf
    out = np.empty(max(need, 2 * buf.shape[0]), dtype=buf.dtype)
    out[:buf.shape[0]] = buf
    return out


@njit(cache=True)
def hun(indptr, adj, cursor, mate, v, exclude):
    start = indptr[v]
    end = indptr[v + 1]
    pos = start + cursor[v]
    while pos < end and mate[adj[pos]] != -1:
        pos += 1
    cursor[v] = pos - start
    # the cursor stops at the first unmatched neighbour even if it is excluded
    while pos < end:
        x = adj[pos]
        if x != exclude and mate[x] == -1:
            return x
        pos += 1
    return -1


@njit(cache=True)
def half(indptr, adj, order, mate, cursor):
    for u in order:
        if mate[u] != -1:
            continue
        x = hun(indptr, adj, cursor, mate, u, -1)
        if x != -1:
            mate[u] = x
            mate[x] = u


@njit(cache=True)
def two_thirds(indptr, adj, order, rank, weights, mate, cursor, record):
    n = mate.shape[0]
    log = np.empty(4 * (n // 2) + 4 if record else 1, dtype=np.int64)
    offsets = np.zeros(n // 2 + 2 if record else 1, dtype=np.int64)
    steps = 0
    for u in order:
        if mate[u] != -1:
            continue
        best = hun(indptr, adj, cursor, mate, u, -1)
        best_rank = INF_RANK if best == -1 else rank[best]
        via = -1
        for pos in range(indptr[u], indptr[u + 1]):
            v = adj[pos]
            w = mate[v]
            if w == -1:
                continue
            x = hun(indptr, adj, cursor, mate, w, u)
            if x == -1 or rank[x] >= best_rank:
                continue
            # a length-3 path must beat the direct neighbour on weight, not id
            if via == -1 and best != -1 and weights[x] == weights[best]:
                continue
            best = x
            best_rank = rank[x]
            via = v
        if best == -1:
            continue
        if via == -1:
            mate[u] = best
            mate[best] = u
        else:
            w = mate[via]
            mate[u] = via
            mate[via] = u
            mate[w] = best
            mate[best] = w
        if record:
            o = offsets[steps]
            log[o] = u
            if via == -1:
                log[o + 1] = best
                offsets[steps + 1] = o + 2
            else:
                log[o + 1] = via
                log[o + 2] = mate[best]
                log[o + 3] = best
                offsets[steps + 1] = o + 4
            steps += 1
    return log, offsets[:steps + 1]


@njit(cache=True)
def _find(bpar, bst, stamp, x):
    # union-find over blossom bases, lazily reset by stamp
    root = x
    while bst[root] == stamp and bpar[root] != root:
        root = bpar[root]
    while bst[x] == stamp and bpar[x] != root:
        nxt = bpar[x]
        bpar[x] = root
        x = nxt
    return root


@njit(cache=True)
def exact(indptr, adj, order, rank, weights, mate, use_marks, use_stop, record):
    """Heaviest-first exact MVM by single-root Edmonds searches.

    Returns ``(log, offsets, searches, scanned)``; the last two count searches
    started and adjacency entries examined, for profiling.
    """
    n = mate.shape[0]
    p = np.full(n, -1, dtype=np.int64)
    pst = np.zeros(n, dtype=np.int64)
    outer = np.zeros(n, dtype=np.int64)
    bpar = np.arange(n).astype(np.int64)
    bst = np.zeros(n, dtype=np.int64)
    lmark = np.zeros(n, dtype=np.int64)
    dead = np.zeros(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    touched = np.empty(n, dtype=np.int64)
    absorbed = np.empty(2 * n + 2, dtype=np.int64)
    log = np.empty(16 if record else 1, dtype=np.int64)
    offsets = np.zeros(n // 2 + 2 if record else 1, dtype=np.int64)
    steps = 0
    stamp = 0
    lstamp = 0
    epoch = 1
    searches = 0
    scanned = 0
    nxt = 0

    for i in range(n):
        u = order[i]
        if mate[u] != -1 or (use_marks and dead[u] == epoch):
            continue
        target_weight = -1.0
        if use_stop:
            if nxt <= i:
                nxt = i + 1
            while nxt < n and mate[order[nxt]] != -1:
                nxt += 1
            if nxt < n:
                target_weight = weights[order[nxt]]
            else:
                continue  # no unmatched vertex remains after u
        searches += 1
        stamp += 1
        outer[u] = stamp
        queue[0] = u
        head = 0
        tail = 1
        touched[0] = u
        ntouched = 1
        best = -1
        best_rank = INF_RANK
        stop = False
        while head < tail and not stop:
            v = queue[head]
            head += 1
            for pos in range(indptr[v], indptr[v + 1]):
                to = adj[pos]
                scanned += 1
                if use_marks and dead[to] == epoch:
                    continue
                if mate[v] == to:
                    continue
                bv = _find(bpar, bst, stamp, v)
                bt = _find(bpar, bst, stamp, to)
                if bv == bt:
                    continue
                if outer[to] == stamp:
                    # odd cycle: find the base, re-point parents, absorb
                    lstamp += 1
                    a = bv
                    while True:
                        a = _find(bpar, bst, stamp, a)
                        lmark[a] = lstamp
                        if mate[a] == -1:
                            break
                        a = p[mate[a]]
                    c = bt
                    while True:
                        c = _find(bpar, bst, stamp, c)
                        if lmark[c] == lstamp:
                            break
                        c = p[mate[c]]
                    b = c
                    nabs = 0
                    for side in range(2):
                        x = v if side == 0 else to
                        child = to if side == 0 else v
                        while _find(bpar, bst, stamp, x) != b:
                            mx = mate[x]
                            absorbed[nabs] = _find(bpar, bst, stamp, x)
                            absorbed[nabs + 1] = _find(bpar, bst, stamp, mx)
                            nabs += 2
                            p[x] = child
                            if pst[x] != stamp:
                                pst[x] = stamp
                            if outer[mx] != stamp:
                                outer[mx] = stamp
                                queue[tail] = mx
                                tail += 1
                            child = mx
                            x = p[mx]
                    for k in range(nabs):
                        r = _find(bpar, bst, stamp, absorbed[k])
                        if r != b:
                            bpar[r] = b
                            bst[r] = stamp
                    if bst[b] != stamp:
                        bpar[b] = b
                        bst[b] = stamp
                elif pst[to] != stamp:
                    p[to] = v
                    pst[to] = stamp
                    touched[ntouched] = to
                    ntouched += 1
                    if mate[to] == -1:
                        if rank[to] < best_rank:
                            best = to
                            best_rank = rank[to]
                        if use_stop and weights[to] == target_weight:
                            stop = True
                            break
                    else:
                        m2 = mate[to]
                        outer[m2] = stamp
                        queue[tail] = m2
                        tail += 1
                        touched[ntouched] = m2
                        ntouched += 1
        if best == -1:
            if use_marks:
                for k in range(ntouched):
                    dead[touched[k]] = epoch
            continue
        if record:
            start = offsets[steps]
            log = _grow(log, start + n + 1)
            k = start
        x = best
        while x != -1:
            px = p[x]
            nx = mate[px]
            mate[x] = px
            mate[px] = x
            if record:
                log[k] = x
                log[k + 1] = px
                k += 2
            x = nx
        if record:
            log[start:k] = log[start:k][::-1].copy()
            offsets[steps + 1] = k
            steps += 1
        epoch += 1
    return log, offsets[:steps + 1], searches, scanned
