"""Pure-Python kernels on int bitsets.

Mirrors ``_ckernels.pyx`` exactly: same vertex ordering, same coloring and
same branching order, so both backends return identical witnesses.
"""

from itertools import combinations


def _bits(x):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def degree_order(rows):
    """Vertices sorted by descending degree, ties by ascending index."""
    return sorted(range(len(rows)), key=lambda v: (-rows[v].bit_count(), v))


def max_clique(rows, lower=0, target=-1):
    """Search for a clique strictly larger than ``lower``.

    Returns the vertex list of the largest clique found (ascending), or an
    empty list when no clique beats ``lower``.  With ``target > 0`` the search
    stops as soon as a clique of at least ``target`` vertices is found.
    """
    n = len(rows)
    if n == 0:
        return []
    order = degree_order(rows)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    adj = [0] * n
    for i, v in enumerate(order):
        m = 0
        for u in _bits(rows[v]):
            m |= 1 << pos[u]
        adj[i] = m

    best = []
    best_size = lower
    current = []
    done = False

    def expand(P):
        nonlocal best, best_size, done
        # greedy sequential coloring of P in position order
        verts = []
        cols = []
        U = P
        color = 0
        while U:
            color += 1
            Q = U
            while Q:
                b = Q & -Q
                v = b.bit_length() - 1
                U ^= b
                Q = (Q ^ b) & ~adj[v]
                verts.append(v)
                cols.append(color)
        for i in range(len(verts) - 1, -1, -1):
            if done or len(current) + cols[i] <= best_size:
                return
            v = verts[i]
            current.append(v)
            NP = P & adj[v]
            if NP:
                expand(NP)
            elif len(current) > best_size:
                best = list(current)
                best_size = len(current)
                if 0 < target <= best_size:
                    done = True
            current.pop()
            P &= ~(1 << v)

    expand((1 << n) - 1)
    return sorted(order[i] for i in best)


def subset_edge_masks(n, k):
    """Bitmask over the C(n,2) edge slots for every k-subset of n vertices."""
    slot = {}
    for u, v in combinations(range(n), 2):
        slot[u, v] = len(slot)
    masks = []
    for s in combinations(range(n), k):
        m = 0
        for u, v in combinations(s, 2):
            m |= 1 << slot[u, v]
        masks.append(m)
    return masks


def count_ramsey_witnesses(n, k, limit=-1):
    """Count labeled n-vertex graphs with no homogeneous k-set.

    Graphs are edge masks over the lexicographic pair order.  Returns
    ``(count, first_mask)``; ``first_mask`` is -1 when there is none.  A
    positive ``limit`` stops counting once reached.
    """
    if k > n:
        total = 1 << (n * (n - 1) // 2)
        return (total if limit <= 0 else min(total, limit)), 0
    masks = subset_edge_masks(n, k)
    total_bits = n * (n - 1) // 2
    count = 0
    first = -1
    for g in range(1 << total_bits):
        for m in masks:
            x = g & m
            if x == 0 or x == m:
                break
        else:
            if first < 0:
                first = g
            count += 1
            if 0 < limit <= count:
                break
    return count, first
