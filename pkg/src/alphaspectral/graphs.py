"""Dense small-graph core.

Graphs live on vertex set {0..n-1} with a hard 64-vertex cap and store one
adjacency bitmask per vertex, so neighborhood algebra is plain integer ops.
Everything is immutable; structural operations return new graphs. Vertex
compaction after deletion keeps the relative order of surviving indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 64


class SizeCapError(ValueError):
    """An operation would exceed the 64-vertex dense-representation cap."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; bit v of rows[u] is set iff uv is an edge.

    Instances are built by :func:`make_graph`, the family constructors, or
    the structural operations below, all of which guarantee symmetry and
    irreflexivity of the adjacency relation.
    """

    n: int
    rows: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(r.bit_count() for r in self.rows)

    def min_degree(self) -> int:
        return min(r.bit_count() for r in self.rows)

    def is_regular(self) -> bool:
        degs = self.degrees()
        return min(degs) == max(degs)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)
            while row:
                v = (row & -row).bit_length() - 1
                out.append((u, v))
                row &= row - 1
        return out


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"graph order must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise SizeCapError(f"graph order {n} exceeds the {MAX_VERTICES}-vertex cap")


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an order and an edge list; duplicates collapse."""
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{u}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has a vertex outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def add_edge(G: Graph, u: int, v: int) -> Graph:
    """Return a copy of G with edge uv added (no-op if already present)."""
    if u == v:
        raise ValueError("loop edge is not allowed")
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError("vertex out of range")
    rows = list(G.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(G.n, tuple(rows))


def remove_edge(G: Graph, u: int, v: int) -> Graph:
    """Return a copy of G with edge uv removed."""
    if not G.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    rows = list(G.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(G.n, tuple(rows))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union of G and H plus all cross edges."""
    n = G.n + H.n
    if n > MAX_VERTICES:
        raise SizeCapError(f"join would have {n} > {MAX_VERTICES} vertices")
    h_block = ((1 << H.n) - 1) << G.n
    g_block = (1 << G.n) - 1
    rows = [r | h_block for r in G.rows]
    rows += [(r << G.n) | g_block for r in H.rows]
    return Graph(n, tuple(rows))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Disjoint union; H's vertices are shifted above G's."""
    n = G.n + H.n
    if n > MAX_VERTICES:
        raise SizeCapError(f"union would have {n} > {MAX_VERTICES} vertices")
    rows = list(G.rows) + [r << G.n for r in H.rows]
    return Graph(n, tuple(rows))


def blow_up(G: Graph, p: int) -> Graph:
    """Replace each vertex by p independent copies and each edge by K_{p,p}.

    Copy i of vertex v sits at index v*p + i, so classes are contiguous
    blocks.
    """
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"blow-up factor must be a positive integer, got {p!r}")
    n = p * G.n
    if n > MAX_VERTICES:
        raise SizeCapError(f"blow-up would have {n} > {MAX_VERTICES} vertices")
    block = (1 << p) - 1
    expanded = []
    for u in range(G.n):
        row = G.rows[u]
        mask = 0
        while row:
            v = (row & -row).bit_length() - 1
            mask |= block << (v * p)
            row &= row - 1
        expanded.append(mask)
    rows = []
    for u in range(G.n):
        rows.extend([expanded[u]] * p)
    return Graph(n, tuple(rows))


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled in the given order."""
    verts = list(vertices)
    if not verts:
        raise ValueError("induced subgraph needs at least one vertex")
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        old = G.rows[v]
        for w, i in pos.items():
            if old >> w & 1:
                row |= 1 << i
        rows.append(row)
    return Graph(len(verts), tuple(rows))


def delete_vertex(G: Graph, w: int) -> Graph:
    """Delete vertex w, compacting indices but preserving their order."""
    if G.n < 2:
        raise ValueError("cannot delete the only vertex of a 1-vertex graph")
    if not (0 <= w < G.n):
        raise ValueError(f"vertex {w} out of range 0..{G.n - 1}")
    return induced_subgraph(G, [v for v in range(G.n) if v != w])


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Apply a permutation: new vertex i is old vertex perm[i]."""
    if sorted(perm) != list(range(G.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    inv = [0] * G.n
    for i, v in enumerate(perm):
        inv[v] = i
    rows = []
    for i in range(G.n):
        old = G.rows[perm[i]]
        row = 0
        while old:
            v = (old & -old).bit_length() - 1
            row |= 1 << inv[v]
            old &= old - 1
        rows.append(row)
    return Graph(G.n, tuple(rows))


def components(G: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    comps = []
    full = (1 << G.n) - 1
    for v0 in range(G.n):
        if seen >> v0 & 1:
            continue
        comp = 0
        frontier = 1 << v0
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                nxt |= G.rows[v]
                f &= f - 1
            frontier = nxt & ~comp & full
        seen |= comp
        verts = []
        while comp:
            v = (comp & -comp).bit_length() - 1
            verts.append(v)
            comp &= comp - 1
        comps.append(verts)
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    _check_order(n)
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    _check_order(n)
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k}: one center joined to k leaves."""
    if k < 1:
        raise ValueError(f"star needs at least 1 leaf, got {k}")
    return join(complete(1), empty_graph(k))


def matching(k: int) -> Graph:
    """M_k: k pairwise disjoint edges on 2k vertices."""
    if k < 1:
        raise ValueError(f"matching needs at least 1 edge, got {k}")
    _check_order(2 * k)
    return make_graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts of a complete bipartite graph must be nonempty")
    return join(empty_graph(a), empty_graph(b))


def turan(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with near-equal parts.

    Parts are the residue classes of the vertex index mod r, so the larger
    parts come first and sizes differ by at most one.
    """
    if not (1 <= r <= n):
        raise ValueError(f"turan graph needs 1 <= r <= n, got r={r}, n={n}")
    _check_order(n)
    rows = []
    for u in range(n):
        row = 0
        for v in range(n):
            if v != u and v % r != u % r:
                row |= 1 << v
        rows.append(row)
    return Graph(n, tuple(rows))


def split(n: int, k: int) -> Graph:
    """K_k joined to an independent set of n-k vertices."""
    if not (0 <= k <= n):
        raise ValueError(f"split graph needs 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        return empty_graph(n)
    if k == n:
        return complete(n)
    return join(complete(k), empty_graph(n - k))


def split_plus(n: int, k: int) -> Graph:
    """Split graph with one extra edge planted in the independent part."""
    if k < 0 or n < k + 2:
        raise ValueError(f"split-plus graph needs n >= k+2 and k >= 0, got k={k}, n={n}")
    inner = disjoint_union(complete(2), empty_graph(n - k - 2)) if n > k + 2 else complete(2)
    if k == 0:
        return inner
    return join(complete(k), inner)


def book(r: int, k: int) -> Graph:
    """K_r joined to an independent set of k vertices."""
    if r < 1 or k < 1:
        raise ValueError(f"book graph needs r >= 1 and k >= 1, got r={r}, k={k}")
    return join(complete(r), empty_graph(k))


def wheel(n: int) -> Graph:
    """Even wheel: a hub joined to an odd cycle on n-1 vertices."""
    if n < 4 or n % 2 != 0:
        raise ValueError(f"wheel order must be even and at least 4, got {n}")
    return join(complete(1), cycle(n - 1))


FAMILY_TAGS = {
    "complete": (complete, 1),
    "empty": (empty_graph, 1),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "matching": (matching, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "turan": (turan, 2),
    "split": (split, 2),
    "split_plus": (split_plus, 2),
    "book": (book, 2),
    "wheel": (wheel, 1),
}


def generate(spec: str) -> Graph:
    """Build a named-family graph from a "tag:param[:param]" string."""
    parts = spec.strip().split(":")
    tag = parts[0]
    if tag not in FAMILY_TAGS:
        known = ", ".join(sorted(FAMILY_TAGS))
        raise ValueError(f"unknown family tag {tag!r} (known: {known})")
    fn, arity = FAMILY_TAGS[tag]
    if len(parts) - 1 != arity:
        raise ValueError(f"family tag {tag!r} takes {arity} parameter(s), got {len(parts) - 1}")
    try:
        params = [int(p) for p in parts[1:]]
    except ValueError:
        raise ValueError(f"family parameters must be integers: {spec!r}") from None
    return fn(*params)
