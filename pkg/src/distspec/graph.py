"""Simple undirected graphs, the constructions used in the characterization,
BFS distances and the structural predicates (isometric induced subgraphs,
induced P4, universal vertices, unions of cliques).

Vertices are the integers ``0..order-1``.  Adjacency is kept as one bitmask
per vertex, which makes the small-graph census cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_ORDER = 1024


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.order}")
        if len(self.adj) != self.order:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or (row >> i) & 1:
                raise GraphError(f"bad adjacency row for vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not (self.adj[j] >> i) & 1:
                    raise GraphError(f"adjacency not symmetric at ({i}, {j})")
                r ^= low

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise GraphError("loops are not allowed")
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.order) for j in _bits(self.adj[i]) if i < j]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.order
        for i in range(self.order):
            m = 0
            for j in _bits(self.adj[i]):
                m |= 1 << perm[j]
            rows[perm[i]] = m
        return Graph(self.order, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- named families ----------------------------------------------------------

def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """S_n: centre 0 joined to n-1 leaves."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


# -- operations --------------------------------------------------------------

def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    s = g1.order
    return Graph(g1.order + g2.order, g1.adj + tuple(row << s for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    s, t = g1.order, g2.order
    low = (1 << s) - 1
    high = ((1 << t) - 1) << s
    rows = tuple(row | high for row in g1.adj) + tuple((row << s) | low for row in g2.adj)
    return Graph(s + t, rows)


def scalar_union(k: int, g: Graph) -> Graph:
    """kG, k vertex-disjoint copies of g."""
    if k < 1:
        raise GraphError("scalar_union needs k >= 1")
    out = g
    for _ in range(k - 1):
        out = disjoint_union(out, g)
    return out


def union_all(graphs: Iterable[Graph]) -> Graph:
    it = iter(graphs)
    out = next(it)
    for g in it:
        out = disjoint_union(out, g)
    return out


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.order and 0 <= v < g.order) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.order, tuple(rows))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``; vertices renumbered in increasing order."""
    verts = _check_subset(g, s)
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        m = 0
        for w in _bits(g.adj[v]):
            if w in index:
                m |= 1 << index[w]
        rows.append(m)
    return Graph(len(verts), tuple(rows))


def _check_subset(g: Graph, s: Iterable[int]) -> list[int]:
    verts = sorted(set(s))
    if not verts:
        raise GraphError("vertex set must be nonempty")
    if verts[0] < 0 or verts[-1] >= g.order:
        raise GraphError("vertex set out of range")
    return verts


# -- connectivity and distances ----------------------------------------------

def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for start in range(g.order):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(_bits(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    """Single-source BFS; unreachable vertices get ``None``."""
    dist: list[int | None] = [None] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in _bits(g.adj[v]):
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    order: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def max_entry(self) -> int:
        return max((max(r) for r in self.entries), default=0)

    def principal(self, s: Iterable[int]) -> DistanceMatrix:
        idx = sorted(set(s))
        return DistanceMatrix(len(idx), tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.order))


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs shortest-path lengths; layered bitmask BFS from every vertex."""
    n = g.order
    rows = []
    full = (1 << n) - 1
    for s in range(n):
        row = [0] * n
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for w in _bits(frontier):
                row[w] = d
        if seen != full:
            raise DisconnectedGraphError("distance matrix requires a connected graph")
        rows.append(tuple(row))
    return DistanceMatrix(n, tuple(rows))


def is_isometric_induced(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph H induced on ``s`` is connected and distance-preserving (H ⊴ G)."""
    verts = _check_subset(g, s)
    if len(verts) < 2:
        raise GraphError("isometric check needs at least two vertices")
    h = induced_subgraph(g, verts)
    if not is_connected(h):
        return False
    dg = distance_matrix(g)
    dh = distance_matrix(h)
    return all(
        dh.entries[a][b] == dg.entries[verts[a]][verts[b]]
        for a, b in combinations(range(len(verts)), 2)
    )


# -- structure ---------------------------------------------------------------

def find_induced_p4(g: Graph) -> tuple[int, int, int, int] | None:
    """Return ``(a, b, c, d)`` with a-b-c-d an induced path, or None if g is P4-free."""
    adj = g.adj
    for b in range(g.order):
        for c in _bits(adj[b]):
            # a ~ b, a !~ c; d ~ c, d !~ b; a !~ d
            left = adj[b] & ~adj[c] & ~(1 << c)
            right = adj[c] & ~adj[b] & ~(1 << b)
            for a in _bits(left):
                cand = right & ~adj[a] & ~(1 << a)
                if cand:
                    d = (cand & -cand).bit_length() - 1
                    return (a, b, c, d)
    return None


def universal_vertices(g: Graph) -> list[int]:
    full = (1 << g.order) - 1
    return [v for v in range(g.order) if g.adj[v] | (1 << v) == full]


def is_union_of_cliques(g: Graph) -> list[int] | None:
    """Sorted component orders if every component is complete, else None."""
    sizes = []
    for comp in components(g):
        k = len(comp)
        if any(g.degree(v) != k - 1 for v in comp):
            return None
        sizes.append(k)
    return sorted(sizes)


def is_complete(g: Graph) -> bool:
    return all(d == g.order - 1 for d in g.degrees())


def is_isomorphic_bruteforce(g1: Graph, g2: Graph) -> bool:
    """Permutation search; only meant for tiny graphs in tests and examples."""
    from itertools import permutations

    if g1.order != g2.order or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    target = g2.adj
    return any(g1.relabel(p).adj == target for p in permutations(range(g1.order)))
