"""Pure-numpy kernel backend.

The subset DPs are vectorized two ways:

* popcount-level sweep (min_fas_table, path_reach_table): states grouped by
  popcount; within a level every transition is independent, so each
  (level, vertex) pair becomes one gather/compare over a contiguous slice.
* lowest-bit recursion (cut_sizes_all_subsets): subsets whose lowest set bit
  is b are exactly {b-bit + T : T a multiple of 2^(b+1)}, a strided range,
  so the recursion inside[S] = inside[S ^ lowbit] + (edges between lowbit
  and the rest) runs as n strided vector ops.
"""
import numpy as np

_INF16 = np.uint16(0xFFFF)


def _levels(n):
    """States of 0..2^n-1 grouped by popcount: (sorted-state array, offsets)."""
    size = 1 << n
    pop = np.bitwise_count(np.arange(size, dtype=np.uint32)).astype(np.uint8)
    order = np.argsort(pop, kind="stable").astype(np.int64)
    counts = np.bincount(pop, minlength=n + 1)
    offsets = np.zeros(n + 2, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    return order, offsets


def min_fas_table(out_masks, n):
    out_masks = np.asarray(out_masks, dtype=np.int64)
    size = 1 << n
    dp = np.zeros(size, dtype=np.uint16)
    if n == 0:
        return dp
    order, offsets = _levels(n)
    for k in range(1, n + 1):
        states = order[offsets[k]:offsets[k + 1]]
        best = np.full(states.shape[0], _INF16, dtype=np.uint16)
        for v in range(n):
            bit = np.int64(1) << v
            sel = (states & bit) != 0
            sub = states[sel] ^ bit
            cand = dp[sub] + np.bitwise_count(out_masks[v] & sub).astype(np.uint16)
            np.minimum(best[sel], cand, out=cand)
            best[sel] = cand
        dp[states] = best
    return dp


def cut_sizes_all_subsets(out_masks, in_masks, n):
    out_masks = np.asarray(out_masks, dtype=np.int64)
    in_masks = np.asarray(in_masks, dtype=np.int64)
    size = 1 << n
    inside = np.zeros(size, dtype=np.int32)
    sum_out = np.zeros(size, dtype=np.int32)
    sum_in = np.zeros(size, dtype=np.int32)
    out_deg = np.bitwise_count(out_masks).astype(np.int32)
    in_deg = np.bitwise_count(in_masks).astype(np.int32)
    for b in range(n - 1, -1, -1):
        rest = np.arange(0, size, 1 << (b + 1), dtype=np.int64)
        s = rest + (1 << b)
        inside[s] = (
            inside[rest]
            + np.bitwise_count(out_masks[b] & rest).astype(np.int32)
            + np.bitwise_count(in_masks[b] & rest).astype(np.int32)
        )
        sum_out[s] = sum_out[rest] + out_deg[b]
        sum_in[s] = sum_in[rest] + in_deg[b]
    sum_out -= inside
    sum_in -= inside
    return sum_out, sum_in


def path_reach_table(out_masks, start_mask, k):
    out_masks = np.asarray(out_masks, dtype=np.int64)
    size = 1 << k
    reach = np.zeros(size, dtype=np.uint32)
    if k == 0:
        return reach
    seeds = start_mask
    while seeds:
        low = seeds & -seeds
        reach[low] = np.uint32(low)
        seeds ^= low
    order, offsets = _levels(k)
    for level in range(1, k):
        states = order[offsets[level]:offsets[level + 1]]
        ends = reach[states]
        live = ends != 0
        states = states[live]
        if states.size == 0:
            continue
        ends = ends[live]
        for w in range(k):
            has_w = (ends >> np.uint32(w)) & np.uint32(1) != 0
            from_w = states[has_w]
            if from_w.size == 0:
                continue
            succ = int(out_masks[w])
            while succ:
                low = succ & -succ
                succ ^= low
                absent = (from_w & low) == 0
                targets = from_w[absent] | low
                reach[targets] |= np.uint32(low)
    return reach
