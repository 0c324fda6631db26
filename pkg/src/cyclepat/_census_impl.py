"""Loop kernels behind the whole-group censuses.

Everything in here is written against 0-based numpy int64 arrays in a style
that compiles unchanged under numba's nopython mode; cyclepat.kernels loads
this module twice and jit-decorates one copy.  A permutation is an array
``perm`` with ``perm[i]`` the image of ``i``, which doubles as its one-line
word, so lexicographic successor enumeration and orbit walks share one
buffer.  Pattern ids 0..11 are ``triple_id`` of the pattern word plus 6 when
the glued pair sits first.
"""

import numpy as np


def next_permutation(perm, start):
    """Advance to the next word in lex order, fixing positions before start."""
    n = perm.shape[0]
    i = n - 2
    while i >= start and perm[i] >= perm[i + 1]:
        i -= 1
    if i < start:
        return False
    j = n - 1
    while perm[j] <= perm[i]:
        j -= 1
    perm[i], perm[j] = perm[j], perm[i]
    lo = i + 1
    hi = n - 1
    while lo < hi:
        perm[lo], perm[hi] = perm[hi], perm[lo]
        lo += 1
        hi -= 1
    return True


def triple_id(a, b, c):
    """Rank in 0..5 of the relative order of three distinct values.

    The order is 123, 132, 213, 231, 312, 321.
    """
    if a < b:
        if b < c:
            return 0
        return 1 if a < c else 3
    if a < c:
        return 2
    return 4 if b < c else 5


def cycle_word(perm, anchor_max, order_desc, flat, blk, tmp, starts, lens, anchors, order):
    """Fill flat/blk with the anchored cycle word of perm; return cycle count.

    Each orbit is rotated so its minimum (or maximum, when anchor_max) comes
    first, and the orbits are laid out by descending (or ascending) anchor.
    blk[i] is the index of the cycle covering position i in the final order.
    """
    n = perm.shape[0]
    visited = 0
    ncyc = 0
    pos = 0
    for s in range(n):
        if visited >> s & 1:
            continue
        length = 0
        anchor_off = 0
        anchor_val = s
        v = s
        while True:
            tmp[length] = v
            visited |= 1 << v
            if anchor_max and v > anchor_val:
                anchor_val = v
                anchor_off = length
            length += 1
            v = perm[v]
            if v == s:
                break
        starts[ncyc] = pos
        lens[ncyc] = length
        anchors[ncyc] = anchor_val
        for i in range(length):
            flat[pos + i] = tmp[(anchor_off + i) % length]
        pos += length
        ncyc += 1
    for c in range(ncyc):
        order[c] = c
    for c in range(1, ncyc):
        j = c
        while j > 0:
            a = anchors[order[j - 1]]
            b = anchors[order[j]]
            if (a < b) if order_desc else (a > b):
                order[j - 1], order[j] = order[j], order[j - 1]
                j -= 1
            else:
                break
    for i in range(n):
        tmp[i] = flat[i]
    pos = 0
    for c in range(ncyc):
        ci = order[c]
        for i in range(lens[ci]):
            flat[pos] = tmp[starts[ci] + i]
            blk[pos] = c
            pos += 1
    return ncyc


def pair_counts(flat, blk, bet, wit):
    """Between/within occurrence counts of all 12 patterns over a cycle word.

    The glued pair of an occurrence is an adjacent position pair inside one
    cycle; the single letter is between (different cycle) or within (same).
    Glue-last patterns a-bc land in ids 0..5, glue-first ab-c in 6..11.
    """
    n = flat.shape[0]
    for i in range(12):
        bet[i] = 0
        wit[i] = 0
    for j in range(n - 1):
        b0 = blk[j]
        if b0 != blk[j + 1]:
            continue
        u = flat[j]
        v = flat[j + 1]
        for i in range(j):
            pid = triple_id(flat[i], u, v)
            if blk[i] == b0:
                wit[pid] += 1
            else:
                bet[pid] += 1
        for i in range(j + 2, n):
            pid = 6 + triple_id(u, v, flat[i])
            if blk[i] == b0:
                wit[pid] += 1
            else:
                bet[pid] += 1


def census_pair(n, anchor_max, order_desc, first_val):
    """Joint (between, within, cycles) counts for all 144 ordered pattern pairs.

    Returns int64 counts[12, 12, B+1, B+1, n+1] over all of S_n, where entry
    [a, b, i, j, c] counts permutations with i between-occurrences of pattern
    a, j within-occurrences of pattern b, and c cycles.  first_val >= 0
    restricts to words starting with that value (for work splitting).
    """
    cap = (n - 1) * (n - 2) // 2 if n >= 2 else 0
    counts = np.zeros((12, 12, cap + 1, cap + 1, n + 1), np.int64)
    perm = np.empty(n, np.int64)
    flat = np.empty(n, np.int64)
    blk = np.empty(n, np.int64)
    tmp = np.empty(n, np.int64)
    starts = np.empty(n, np.int64)
    lens = np.empty(n, np.int64)
    anchors = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    bet = np.empty(12, np.int64)
    wit = np.empty(12, np.int64)
    start = 0
    if first_val >= 0:
        perm[0] = first_val
        k = 1
        for v in range(n):
            if v != first_val:
                perm[k] = v
                k += 1
        start = 1
    else:
        for v in range(n):
            perm[v] = v
    if n == 0:
        for a in range(12):
            for b in range(12):
                counts[a, b, 0, 0, 0] = 1
        return counts
    while True:
        ncyc = cycle_word(
            perm, anchor_max, order_desc, flat, blk, tmp, starts, lens, anchors, order
        )
        pair_counts(flat, blk, bet, wit)
        for a in range(12):
            ba = bet[a]
            for b in range(12):
                counts[a, b, ba, wit[b], ncyc] += 1
        if not next_permutation(perm, start):
            break
    return counts


def census_vincular(n, pid):
    """Occurrence counts of one pattern over plain one-line words of S_n.

    Returns int64 counts[cap+1] with counts[k] the number of words holding
    exactly k occurrences (no cycle structure involved).
    """
    cap = (n - 1) * (n - 2) // 2 if n >= 2 else 0
    counts = np.zeros(cap + 1, np.int64)
    perm = np.empty(n, np.int64)
    blk = np.zeros(n, np.int64)
    bet = np.empty(12, np.int64)
    wit = np.empty(12, np.int64)
    for v in range(n):
        perm[v] = v
    if n == 0:
        counts[0] = 1
        return counts
    while True:
        pair_counts(perm, blk, bet, wit)
        counts[wit[pid]] += 1
        if not next_permutation(perm, 0):
            break
    return counts


def weight_sweep(n, pid):
    """Count permutations whose node-weight product breaks the identity.

    For every permutation of S_n in the standard (min-anchored, descending)
    cycle form, the product of node weights must be x^cycles * q^total where
    total is the between+within count of pattern pid.  Returns the number of
    permutations where either exponent disagrees.
    """
    bad = 0
    perm = np.empty(n, np.int64)
    flat = np.empty(n, np.int64)
    blk = np.empty(n, np.int64)
    tmp = np.empty(n, np.int64)
    starts = np.empty(n, np.int64)
    lens = np.empty(n, np.int64)
    anchors = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    bet = np.empty(12, np.int64)
    wit = np.empty(12, np.int64)
    asrc = np.empty(n, np.int64)
    adst = np.empty(n, np.int64)
    visit = np.empty(n, np.int64)
    for v in range(n):
        perm[v] = v
    if n == 0:
        return 0
    while True:
        ncyc = cycle_word(perm, False, True, flat, blk, tmp, starts, lens, anchors, order)
        pair_counts(flat, blk, bet, wit)
        narc = 0
        i = 0
        while i < n:
            j = i
            while j < n and blk[j] == blk[i]:
                j += 1
            if j - i == 1:
                asrc[narc] = flat[i]
                adst[narc] = flat[i]
                narc += 1
            else:
                for p in range(i, j - 1):
                    asrc[narc] = flat[p]
                    adst[narc] = flat[p + 1]
                    narc += 1
            i = j
        for v in range(n):
            visit[v] = narc
        for d in range(narc):
            if d < visit[asrc[d]]:
                visit[asrc[d]] = d
            if d < visit[adst[d]]:
                visit[adst[d]] = d
        x_exp = 0
        q_exp = 0
        for i in range(n):
            if i == 0 or blk[i] != blk[i - 1]:
                x_exp += 1
            node = flat[i]
            for d in range(narc):
                if asrc[d] < node < adst[d] and d > visit[node]:
                    q_exp += 1
        if x_exp != ncyc or q_exp != bet[pid] + wit[pid]:
            bad += 1
        if not next_permutation(perm, 0):
            break
    return bad
