"""Numba kernel backend: the same three subset DPs as numpy_impl, written as
plain scalar loops and compiled with @njit (disk-cached).

Masks are int64 bitmasks; callers guarantee n <= 25, so the SWAR popcount's
final multiply never overflows.
"""
import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _pop(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True)
def _min_fas_table(out_masks, n):
    size = 1 << n
    dp = np.zeros(size, dtype=np.uint16)
    for s in range(1, size):
        best = 0xFFFF
        rem = s
        while rem:
            low = rem & -rem
            rem ^= low
            v = _pop(low - 1)
            sub = s ^ low
            cand = dp[sub] + _pop(out_masks[v] & sub)
            if cand < best:
                best = cand
        dp[s] = best
    return dp


@njit(cache=True)
def _cut_sizes_all_subsets(out_masks, in_masks, n):
    size = 1 << n
    e_out = np.zeros(size, dtype=np.int32)
    e_in = np.zeros(size, dtype=np.int32)
    inside = np.zeros(size, dtype=np.int32)
    for s in range(1, size):
        low = s & -s
        b = _pop(low - 1)
        rest = s ^ low
        inside[s] = inside[rest] + _pop(out_masks[b] & rest) + _pop(in_masks[b] & rest)
        e_out[s] = e_out[rest] + _pop(out_masks[b])
        e_in[s] = e_in[rest] + _pop(in_masks[b])
    for s in range(size):
        e_out[s] -= inside[s]
        e_in[s] -= inside[s]
    return e_out, e_in


@njit(cache=True)
def _path_reach_table(out_masks, start_mask, k):
    size = 1 << k
    reach = np.zeros(size, dtype=np.uint32)
    seeds = start_mask
    while seeds:
        low = seeds & -seeds
        reach[low] = low
        seeds ^= low
    for s in range(1, size):
        ends = reach[s]
        if ends == 0:
            continue
        rem = np.int64(ends)
        while rem:
            lw = rem & -rem
            rem ^= lw
            w = _pop(lw - 1)
            ext = out_masks[w] & ~s
            while ext:
                lx = ext & -ext
                ext ^= lx
                reach[s | lx] |= np.uint32(lx)
    return reach


def min_fas_table(out_masks, n):
    return _min_fas_table(np.asarray(out_masks, dtype=np.int64), n)


def cut_sizes_all_subsets(out_masks, in_masks, n):
    return _cut_sizes_all_subsets(
        np.asarray(out_masks, dtype=np.int64),
        np.asarray(in_masks, dtype=np.int64),
        n,
    )


def path_reach_table(out_masks, start_mask, k):
    return _path_reach_table(np.asarray(out_masks, dtype=np.int64), start_mask, k)
