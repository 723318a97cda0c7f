"""Directed graph substrate: immutable simple digraphs and their basic statistics.

A Digraph stores vertices 0..n-1 and a set of ordered edges (u, v) with
u != v, no parallel edges (both (u, v) and (v, u) may be present).  It keeps
out- and in-adjacency lists plus per-vertex neighbour bitmasks, so membership
tests are O(1) and iteration is O(degree).  Instances never mutate after
construction, which makes every operation in this package a pure function of
its arguments.

Also here: the edge-list text format shared by all CLI commands, BFS distance
layers, strongly connected components (iterative Tarjan, components emitted
in topological order of the condensation), acyclicity, and directed girth.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class EdgeListError(ValueError):
    """Malformed edge-list input; message carries the 1-based line number."""

    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Digraph:
    """Simple directed graph on dense vertex ids 0..n-1, immutable after build.

    Both (u, v) and (v, u) may be present (digraph, not oriented graph);
    loops and parallel edges are rejected.
    """

    __slots__ = ("n", "edges", "out", "inn", "out_mask", "in_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edge_list = list(edges)
        edge_set = set()
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop ({u},{u}) not allowed")
            if (u, v) in edge_set:
                raise ValueError(f"duplicate edge ({u},{v})")
            edge_set.add((u, v))
            out[u].append(v)
            inn[v].append(u)
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        self.n = n
        self.edges = frozenset(edge_set)
        self.out = tuple(tuple(sorted(a)) for a in out)
        self.inn = tuple(tuple(sorted(a)) for a in inn)
        self.out_mask = tuple(out_mask)
        self.in_mask = tuple(in_mask)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def out_deg(self, v: int) -> int:
        return len(self.out[v])

    def in_deg(self, v: int) -> int:
        return len(self.inn[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Digraph":
        gone = set(removed)
        return Digraph(self.n, [e for e in self.sorted_edges() if e not in gone])

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))


@dataclass(frozen=True)
class GraphStats:
    """Edge count, non-adjacent pair count, directed girth, orientedness."""

    m: int
    gamma: int
    girth: Optional[int]  # None iff acyclic
    is_oriented: bool


@dataclass(frozen=True)
class DistanceLayers:
    """BFS layers from (or to) a source vertex.

    layers[i] is the sorted tuple of vertices at distance exactly i; layer 0
    is {source}.  prefix_sizes[i] = |layers[0]| + ... + |layers[i]|.  For
    direction "out" distances are outdistances (shortest path source -> w);
    for "in" they are indistances (w -> source).
    """

    source: int
    direction: str
    layers: tuple[tuple[int, ...], ...]
    prefix_sizes: tuple[int, ...]

    def distance_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}


@dataclass(frozen=True)
class SccDecomposition:
    """Strong components, listed in a topological order of the condensation."""

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.components)


def parse_edge_list(text: str) -> Digraph:
    """Parse the shared edge-list format into a Digraph.

    Format: optional header line "n=<int>", then one "u v" pair per line;
    "#" starts a comment; blank lines ignored.  Without a header, n is
    1 + max vertex id and every id in 0..n-1 must occur in some edge (gaps
    are rejected rather than silently compacted; declare isolated vertices
    with an explicit header).
    """
    header_n = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    seen_header = False
    seen_edge = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if seen_header:
                raise EdgeListError("duplicate n= header", line_no)
            if seen_edge:
                raise EdgeListError("n= header must precede all edges", line_no)
            try:
                header_n = int(line[2:])
            except ValueError:
                raise EdgeListError(f"bad header {line!r}", line_no) from None
            if header_n < 0:
                raise EdgeListError("header n must be nonnegative", line_no)
            seen_header = True
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"malformed vertex id in {line!r}", line_no) from None
        if u < 0 or v < 0:
            raise EdgeListError(f"negative vertex id in {line!r}", line_no)
        if u == v:
            raise EdgeListError(f"loop edge ({u},{u})", line_no)
        if (u, v) in seen:
            raise EdgeListError(f"duplicate edge ({u},{v})", line_no)
        seen.add((u, v))
        seen_edge = True
        pairs.append((u, v))

    max_id = max((max(u, v) for u, v in pairs), default=-1)
    if header_n is not None:
        if max_id >= header_n:
            raise EdgeListError(
                f"vertex id {max_id} out of range for declared n={header_n}"
            )
        n = header_n
    else:
        n = max_id + 1
        used = set()
        for u, v in pairs:
            used.add(u)
            used.add(v)
        missing = [v for v in range(n) if v not in used]
        if missing:
            raise EdgeListError(
                f"vertex ids have gaps (missing {missing[:5]}...); "
                "add an n= header if isolated vertices are intended"
                if len(missing) > 5
                else f"vertex ids have gaps (missing {missing}); "
                "add an n= header if isolated vertices are intended"
            )
    return Digraph(n, pairs)


def load_digraph(text: str) -> Digraph:
    """Alias of parse_edge_list; the name used by the CLI layer."""
    return parse_edge_list(text)


def format_edge_list(g: Digraph) -> str:
    """Serialize a Digraph in the shared edge-list format (round-trips)."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def bfs_layers(g: Digraph, v: int, direction: str = "out") -> DistanceLayers:
    """Exact unweighted BFS distance layers from v ("out") or to v ("in")."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if direction not in ("out", "in"):
        raise ValueError(f"direction must be 'out' or 'in', got {direction!r}")
    adj = g.out if direction == "out" else g.inn
    dist = {v: 0}
    layers = [[v]]
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        if nxt:
            layers.append(nxt)
        frontier = nxt
    sizes = []
    total = 0
    for layer in layers:
        total += len(layer)
        sizes.append(total)
    return DistanceLayers(
        source=v,
        direction=direction,
        layers=tuple(tuple(sorted(layer)) for layer in layers),
        prefix_sizes=tuple(sizes),
    )


def bfs_distances(g: Digraph, v: int, direction: str = "out",
                  max_dist: Optional[int] = None) -> dict[int, int]:
    """Plain BFS distance map, optionally truncated at max_dist."""
    adj = g.out if direction == "out" else g.inn
    dist = {v: 0}
    q = deque([v])
    while q:
        u = q.popleft()
        if max_dist is not None and dist[u] >= max_dist:
            continue
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def strong_components(g: Digraph) -> SccDecomposition:
    """Iterative Tarjan SCC; components returned sources-first.

    Tarjan emits components in reverse topological order of the
    condensation, so the final list is reversed.
    """
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        # frames: (vertex, iterator position into g.out[vertex])
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            out_v = g.out[v]
            while pi < len(out_v):
                w = out_v[pi]
                pi += 1
                if index[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    comps.reverse()
    component_of = [0] * n
    for cid, comp in enumerate(comps):
        for v in comp:
            component_of[v] = cid
    return SccDecomposition(
        component_of=tuple(component_of),
        components=tuple(tuple(c) for c in comps),
    )


def is_acyclic(g: Digraph) -> bool:
    """True iff g has no directed cycle (all strong components singletons)."""
    return all(len(c) == 1 for c in strong_components(g).components)


def shortest_cycle_through(g: Digraph, v: int) -> Optional[list[int]]:
    """Shortest directed cycle through v as a vertex list, or None.

    The shortest closed walk through v in a loop-free simple digraph is a
    simple cycle, so one out-BFS from v plus a scan of v's in-neighbours
    finds it: the cycle length is 1 + min distance from v to an
    in-neighbour of v.
    """
    if not g.inn[v] or not g.out[v]:
        return None
    parent = {v: None}
    dist = {v: 0}
    q = deque([v])
    best_u = None
    in_set = set(g.inn[v])
    if v in in_set:
        raise AssertionError("loop edge in digraph")
    while q:
        u = q.popleft()
        if u != v and u in in_set:
            best_u = u
            break
        for w in g.out[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                q.append(w)
    if best_u is None:
        return None
    path = []
    cur: Optional[int] = best_u
    while cur is not None:
        path.append(cur)
        cur = parent[cur]
    path.reverse()  # v ... best_u; closing edge (best_u, v) exists
    return path


def girth_with_witness(g: Digraph) -> Optional[tuple[int, list[int]]]:
    """Directed girth with a witness cycle, by BFS from every vertex."""
    best: Optional[tuple[int, list[int]]] = None
    for v in range(g.n):
        cyc = shortest_cycle_through(g, v)
        if cyc is not None and (best is None or len(cyc) < best[0]):
            best = (len(cyc), cyc)
            if best[0] == 2:
                break
    return best


def stats(g: Digraph) -> GraphStats:
    """m, gamma (non-adjacent unordered pairs), girth, orientedness."""
    adjacent_pairs = set()
    oriented = True
    for u, v in g.edges:
        if (v, u) in g.edges:
            oriented = False
        adjacent_pairs.add((u, v) if u < v else (v, u))
    gamma = g.n * (g.n - 1) // 2 - len(adjacent_pairs)
    gw = girth_with_witness(g)
    return GraphStats(
        m=g.m,
        gamma=gamma,
        girth=None if gw is None else gw[0],
        is_oriented=oriented,
    )


def induced_subgraph(g: Digraph, vertices: Sequence[int]) -> tuple[Digraph, list[int]]:
    """Restriction of g to the given vertices, with local ids 0..k-1.

    Returns (subgraph, originals) where originals[local] is the original id;
    vertices are taken in sorted order so the mapping is deterministic.
    """
    originals = sorted(set(vertices))
    local = {orig: i for i, orig in enumerate(originals)}
    edges = [
        (local[u], local[v])
        for u, v in g.edges
        if u in local and v in local
    ]
    return Digraph(len(originals), edges), originals
