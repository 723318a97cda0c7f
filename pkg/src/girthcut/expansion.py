"""Edge expansion and BFS sweep cuts.

For S with |S| <= n/2, mu(S) = min(e(S, V\\S), e(V\\S, S)) / |S|; mu(G) is
the minimum over all such S.  Everything here keeps mu as an exact Fraction:
tie-breaking and the theorem premises downstream must be bit-exact, so no
float ever enters a comparison.

exact_mu enumerates all subsets through the kernel cut-size profile (default
limit n <= 22).  sweep_low_expansion evaluates the BFS distance-layer
prefixes M_i from a source vertex as candidate low-expansion sets; the
AM-GM layer inequality  |N_i| + |N_{i+1}| >= 2 sqrt(mu(M_i) |M_i|)  holds
for every prefix with mu defined, and check_layer_growth verifies it (plus
the quadratic growth bound b_i >= (2/5) i^2) in cross-multiplied integer
arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .digraph import Digraph, bfs_layers

DEFAULT_MU_LIMIT = 22


@dataclass(frozen=True)
class CutResult:
    """A vertex set S (|S| <= n/2) with its two directed cut sizes and mu(S)."""

    s: tuple[int, ...]
    e_out: int
    e_in: int
    mu: Fraction
    provenance: str

    def to_json_dict(self, trace: Optional["SweepTrace"] = None) -> dict:
        d = {
            "s": list(self.s),
            "e_out": self.e_out,
            "e_in": self.e_in,
            "mu_num": self.mu.numerator,
            "mu_den": self.mu.denominator,
            "provenance": self.provenance,
            "trace": [] if trace is None else trace.to_json_list(),
        }
        return d


@dataclass(frozen=True)
class SweepLevel:
    """One eligible prefix M_i of a sweep: layer size, prefix size, mu(M_i)."""

    i: int
    layer_size: int
    prefix_size: int
    e_out: int
    e_in: int
    mu: Fraction


@dataclass(frozen=True)
class SweepTrace:
    """Full record of one BFS sweep: the distance layers and the per-level
    cut data for every prefix with |M_i| <= floor(n/2)."""

    source: int
    direction: str
    layers: tuple[tuple[int, ...], ...]
    levels: tuple[SweepLevel, ...]

    def layer_size(self, i: int) -> int:
        return len(self.layers[i]) if 0 <= i < len(self.layers) else 0

    def to_json_list(self) -> list:
        return [
            {
                "i": lv.i,
                "layer_size": lv.layer_size,
                "prefix_size": lv.prefix_size,
                "e_out": lv.e_out,
                "e_in": lv.e_in,
                "mu_num": lv.mu.numerator,
                "mu_den": lv.mu.denominator,
            }
            for lv in self.levels
        ]


def directed_cut_sizes(g: Digraph, s_set) -> tuple[int, int]:
    """(e(S, V\\S), e(V\\S, S)) by direct counting."""
    s = set(s_set)
    e_out = e_in = 0
    for v in s:
        for w in g.out[v]:
            if w not in s:
                e_out += 1
        for w in g.inn[v]:
            if w not in s:
                e_in += 1
    return e_out, e_in


def expansion_of_set(g: Digraph, s_set) -> CutResult:
    """Exact mu(S) with both directed cut sizes; S must satisfy 1 <= |S| <= n/2."""
    s = sorted(set(s_set))
    if not s:
        raise ValueError("S must be nonempty")
    if len(s) > g.n // 2:
        raise ValueError(
            f"|S|={len(s)} exceeds floor(n/2)={g.n // 2}; mu is undefined there"
        )
    if s[0] < 0 or s[-1] >= g.n:
        raise ValueError("S contains out-of-range vertices")
    e_out, e_in = directed_cut_sizes(g, s)
    return CutResult(
        s=tuple(s),
        e_out=e_out,
        e_in=e_in,
        mu=Fraction(min(e_out, e_in), len(s)),
        provenance="supplied",
    )


def _lex_min_state(states: np.ndarray, n: int) -> int:
    """Among equal-popcount bitmask states, the one whose sorted vertex
    tuple is lexicographically smallest (= max of the bit-reversed mask)."""
    rev = np.zeros(states.shape[0], dtype=np.int64)
    for b in range(n):
        rev |= ((states >> b) & 1) << (n - 1 - b)
    return int(states[int(np.argmax(rev))])


def exact_mu(g: Digraph, limit: int = DEFAULT_MU_LIMIT) -> CutResult:
    """Minimum mu(S) over all S with 1 <= |S| <= floor(n/2), by exhaustive
    enumeration.  Ties broken by smallest |S|, then lexicographically
    smallest S.
    """
    n = g.n
    if n > limit:
        raise ValueError(
            f"n={n} exceeds exhaustive limit {limit}; use best_sweep_cut"
        )
    half = n // 2
    if half < 1:
        raise ValueError("exact_mu needs at least 2 vertices")
    e_out_arr, e_in_arr = kernels.cut_sizes_all_subsets(g.out_mask, g.in_mask, n)
    vals = np.minimum(e_out_arr, e_in_arr)
    pop = np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.uint8)

    best_mu: Optional[Fraction] = None
    per_size_min: dict[int, int] = {}
    for size in range(1, half + 1):
        sel = pop == size
        vmin = int(vals[sel].min())
        per_size_min[size] = vmin
        f = Fraction(vmin, size)
        if best_mu is None or f < best_mu:
            best_mu = f
    assert best_mu is not None

    for size in range(1, half + 1):
        if Fraction(per_size_min[size], size) != best_mu:
            continue
        sel = (pop == size) & (vals == per_size_min[size])
        states = np.nonzero(sel)[0].astype(np.int64)
        state = _lex_min_state(states, n)
        members = tuple(v for v in range(n) if state >> v & 1)
        return CutResult(
            s=members,
            e_out=int(e_out_arr[state]),
            e_in=int(e_in_arr[state]),
            mu=best_mu,
            provenance="exhaustive",
        )
    raise AssertionError("unreachable: minimum not found")


def sweep_low_expansion(
    g: Digraph, v: int, direction: str = "out"
) -> tuple[Optional[CutResult], SweepTrace]:
    """Evaluate every BFS prefix M_i from v with |M_i| <= floor(n/2) and
    return the one minimizing mu(M_i) (an upper bound on mu(G)) plus the
    full trace.  Returns (None, trace) when no prefix is eligible (n < 2).
    """
    dl = bfs_layers(g, v, direction)
    half = g.n // 2
    members: set[int] = set()
    cur_out = cur_in = 0
    levels: list[SweepLevel] = []
    best_idx = -1
    for i, layer in enumerate(dl.layers):
        for u in layer:
            for w in g.out[u]:
                if w in members:
                    cur_in -= 1
                else:
                    cur_out += 1
            for w in g.inn[u]:
                if w in members:
                    cur_out -= 1
                else:
                    cur_in += 1
            members.add(u)
        size = len(members)
        if size > half:
            break
        mu = Fraction(min(cur_out, cur_in), size)
        levels.append(
            SweepLevel(
                i=i,
                layer_size=len(layer),
                prefix_size=size,
                e_out=cur_out,
                e_in=cur_in,
                mu=mu,
            )
        )
        if best_idx < 0 or mu < levels[best_idx].mu:
            best_idx = len(levels) - 1
    trace = SweepTrace(
        source=v, direction=direction, layers=dl.layers, levels=tuple(levels)
    )
    if best_idx < 0:
        return None, trace
    best = levels[best_idx]
    prefix = sorted(set().union(*dl.layers[: best.i + 1]))
    return (
        CutResult(
            s=tuple(prefix),
            e_out=best.e_out,
            e_in=best.e_in,
            mu=best.mu,
            provenance=f"sweep-from-{v}-{direction}",
        ),
        trace,
    )


def best_sweep_cut(g: Digraph, trace_sink: Optional[list] = None) -> CutResult:
    """Minimum sweep cut over all 2n sweeps (every vertex, both directions).

    Ties broken by (mu, |S|, S, direction out-before-in, source).  When
    trace_sink is a list every SweepTrace generated is appended to it.
    """
    best: Optional[CutResult] = None
    best_key = None
    for v in range(g.n):
        for direction in ("out", "in"):
            cut, trace = sweep_low_expansion(g, v, direction)
            if trace_sink is not None:
                trace_sink.append(trace)
            if cut is None:
                continue
            key = (cut.mu, len(cut.s), cut.s, direction == "in", v)
            if best is None or key < best_key:
                best, best_key = cut, key
    if best is None:
        # only possible for n < 2; fall back to a minimum-degree singleton
        if g.n == 0:
            raise ValueError("best_sweep_cut on empty graph")
        v = min(range(g.n), key=lambda u: (min(g.out_deg(u), g.in_deg(u)), u))
        return CutResult(
            s=(v,),
            e_out=g.out_deg(v),
            e_in=g.in_deg(v),
            mu=Fraction(min(g.out_deg(v), g.in_deg(v)), 1),
            provenance=f"fallback-singleton-{v}",
        )
    return best


def short_cycle_through(g: Digraph, v: int, r: int) -> Optional[list[int]]:
    """A shortest directed cycle through v if its length is <= r, else None.

    Meet in the middle: out-BFS truncated at radius floor(r/2) and in-BFS
    truncated at ceil(r/2); any vertex w in both balls closes a cycle of
    length d_out(w) + d_in(w), and the minimizer yields a shortest cycle
    through v (the two shortest paths cannot share an interior vertex,
    since that vertex would beat w).
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    out_radius = r // 2
    in_radius = r - out_radius

    dist_out = {v: 0}
    parent_out: dict[int, Optional[int]] = {v: None}
    frontier = [v]
    d = 0
    while frontier and d < out_radius:
        nxt = []
        for u in frontier:
            for w in g.out[u]:
                if w not in dist_out:
                    dist_out[w] = d + 1
                    parent_out[w] = u
                    nxt.append(w)
        frontier = nxt
        d += 1

    dist_in = {v: 0}
    next_in: dict[int, Optional[int]] = {v: None}  # next hop on shortest w -> v path
    frontier = [v]
    d = 0
    while frontier and d < in_radius:
        nxt = []
        for u in frontier:
            for w in g.inn[u]:
                if w not in dist_in:
                    dist_in[w] = d + 1
                    next_in[w] = u
                    nxt.append(w)
        frontier = nxt
        d += 1

    best_w = None
    best = None
    for w, do in dist_out.items():
        if w == v or w not in dist_in:
            continue
        key = (do + dist_in[w], do, w)
        if best is None or key < best:
            best, best_w = key, w
    if best is None or best[0] > r:
        return None

    path = []
    cur: Optional[int] = best_w
    while cur is not None:
        path.append(cur)
        cur = parent_out[cur]
    path.reverse()  # v ... w
    cur = next_in[best_w]
    while cur is not None and cur != v:
        path.append(cur)
        cur = next_in[cur]
    if len(set(path)) != len(path):
        raise AssertionError("meet-in-the-middle produced a non-simple cycle")
    return path


@dataclass(frozen=True)
class LayerGrowthReport:
    """Outcome of the per-level sweep checks; None means no violation."""

    eq1_first_violation: Optional[int]
    premise_first_violation: Optional[int]
    growth_first_violation: Optional[int]
    vacuous: bool

    @property
    def eq1_ok(self) -> bool:
        return self.eq1_first_violation is None

    @property
    def premise_ok(self) -> bool:
        return self.premise_first_violation is None

    @property
    def growth_ok(self) -> bool:
        return self.growth_first_violation is None


def check_layer_growth(trace: SweepTrace, mu_ref: Fraction) -> LayerGrowthReport:
    """Verify, level by level and in integer arithmetic, the AM-GM layer
    inequality and, under the premise mu(M_i) >= mu_ref at every level,
    the growth bound b_i >= (2/5) i^2 where b_i = sum_{j<=i}(|N_j|+|N_{j+1}|)/mu_ref.

    A violation is a report outcome, not an error.
    """
    if mu_ref <= 0:
        raise ValueError("mu_ref must be positive")
    if not trace.levels:
        return LayerGrowthReport(None, None, None, vacuous=True)

    eq1_bad: Optional[int] = None
    premise_bad: Optional[int] = None
    for lv in trace.levels:
        n_next = trace.layer_size(lv.i + 1)
        lhs = lv.layer_size + n_next
        # (|N_i| + |N_{i+1}|)^2 >= 4 mu(M_i) |M_i|, cross-multiplied
        if lhs * lhs * lv.mu.denominator < 4 * lv.mu.numerator * lv.prefix_size:
            if eq1_bad is None:
                eq1_bad = lv.i
        if lv.mu < mu_ref and premise_bad is None:
            premise_bad = lv.i

    growth_bad: Optional[int] = None
    if premise_bad is None:
        p, q = mu_ref.numerator, mu_ref.denominator
        acc = 0  # sum_{j=1..i} (|N_j| + |N_{j+1}|)
        for lv in trace.levels:
            i = lv.i
            if i == 0:
                continue
            acc += lv.layer_size + trace.layer_size(i + 1)
            # b_i >= (2/5) i^2  <=>  5 q acc >= 2 i^2 p
            if 5 * q * acc < 2 * i * i * p:
                growth_bad = i
                break
    return LayerGrowthReport(
        eq1_first_violation=eq1_bad,
        premise_first_violation=premise_bad,
        growth_first_violation=growth_bad,
        vacuous=False,
    )
