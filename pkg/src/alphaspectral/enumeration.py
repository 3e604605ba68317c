"""Isomorphism-class enumeration with a deterministic canonical form.

Canonical labeling: iterated degree/neighbor-color refinement, then
backtracking over individualization choices inside the first non-singleton
cell, taking the labeling that minimizes the column-major upper-triangle
bit string. Two prunes keep symmetric graphs cheap and do not affect the
minimum: vertices equivalent to an already-tried cellmate under a
transposition automorphism are skipped, and branches whose determined
bit-string prefix already exceeds the best known leaf are cut.

Generation is by vertex augmentation: every class on n vertices arises from
some class on n-1 vertices by attaching a new last vertex, because deleting
any vertex of an F-free graph stays F-free. Children are deduplicated by
canonical key, so each class is emitted exactly once, in ascending key
order. Forbidden-family filters are applied level by level (freeness is
hereditary); degree, edge and connectivity filters only at the final level.
"""

from __future__ import annotations

import hashlib
import os
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .graph6 import bits_to_graph6, decode_graph6, encode_graph6, graph_from_bits
from .graphs import Graph, is_connected
from .structure import ForbiddenFamily, as_family, is_free

ENUM_DEFAULT_CAP = 10
ENUM_HARD_CAP = 12
CACHE_ENV_VAR = "ALPHASPECTRAL_CACHE_DIR"


class EnumerationCapError(ValueError):
    """Requested order is above the enumeration cap."""


@dataclass(frozen=True, slots=True)
class EnumFilter:
    """Optional restrictions on the enumerated stream."""

    min_degree: Optional[int] = None
    max_edges: Optional[int] = None
    family: Optional[ForbiddenFamily] = None
    connected_only: bool = False


def _refine(n: int, rows: tuple[int, ...], colors: list[int]):
    """Equitable refinement; returns stable colors and per-color masks."""
    while True:
        k = max(colors) + 1
        masks = [0] * k
        for v in range(n):
            masks[colors[v]] |= 1 << v
        sigs = [
            (colors[v], tuple((rows[v] & m).bit_count() for m in masks))
            for v in range(n)
        ]
        distinct = sorted(set(sigs))
        if len(distinct) == k:
            return colors, masks
        rank = {s: i for i, s in enumerate(distinct)}
        colors = [rank[s] for s in sigs]


def canonical_bits(n: int, rows: tuple[int, ...]) -> int:
    """Minimum upper-triangle bit string over the explored labelings."""
    if n <= 1:
        return 0
    total = n * (n - 1) // 2
    degs = [rows[v].bit_count() for v in range(n)]
    drank = {d: i for i, d in enumerate(sorted(set(degs)))}
    best: Optional[int] = None

    def bits_of(order: list[int], upto: int) -> int:
        val = 0
        for vp in range(1, upto):
            rv = rows[order[vp]]
            for up in range(vp):
                val = (val << 1) | (rv >> order[up] & 1)
        return val

    def search(colors: list[int]) -> None:
        nonlocal best
        colors, masks = _refine(n, rows, colors)
        k = len(masks)
        if k == n:
            order = [0] * n
            for v in range(n):
                order[colors[v]] = v
            cand = bits_of(order, n)
            if best is None or cand < best:
                best = cand
            return
        cells = [[] for _ in range(k)]
        for v in range(n):
            cells[colors[v]].append(v)
        s = 0
        while len(cells[s]) == 1:
            s += 1
        if best is not None and s >= 2:
            pre = bits_of([cells[i][0] for i in range(s)], s)
            if pre > best >> (total - s * (s - 1) // 2):
                return
        tried: list[int] = []
        for v in cells[s]:
            rv = rows[v]
            if any((rv ^ rows[u]) & ~((1 << v) | (1 << u)) == 0 for u in tried):
                continue
            tried.append(v)
            child = [
                (c if c < s else (s if w == v else c + 1))
                for w, c in enumerate(colors)
            ]
            search(child)

    search([drank[d] for d in degs])
    assert best is not None
    return best


def canonical_form(G: Graph) -> str:
    """graph6 key of the canonically relabeled graph.

    Isomorphic graphs get identical keys; non-isomorphic graphs get
    distinct keys.
    """
    return bits_to_graph6(G.n, canonical_bits(G.n, G.rows))


def canonical_graph(G: Graph) -> Graph:
    """The canonical representative of G's isomorphism class."""
    return graph_from_bits(G.n, canonical_bits(G.n, G.rows))


# ---------------------------------------------------------------------------
# Class generation
# ---------------------------------------------------------------------------

_CLASS_CACHE: dict[tuple[int, Optional[tuple[str, ...]]], list[Graph]] = {}


def _family_key(family: Optional[ForbiddenFamily]) -> Optional[tuple[str, ...]]:
    if family is None:
        return None
    return tuple(sorted(canonical_form(F) for F in family.members))


def _disk_cache_path(n: int, fam_key) -> Optional[Path]:
    root = os.environ.get(CACHE_ENV_VAR)
    if not root:
        return None
    tag = "all" if fam_key is None else hashlib.sha1("|".join(fam_key).encode()).hexdigest()[:16]
    return Path(root) / f"classes_n{n}_{tag}.g6"


def _classes(n: int, family: Optional[ForbiddenFamily], fam_key) -> list[Graph]:
    key = (n, fam_key)
    cached = _CLASS_CACHE.get(key)
    if cached is not None:
        return cached
    path = _disk_cache_path(n, fam_key)
    if path is not None and path.is_file():
        try:
            graphs = [decode_graph6(line) for line in path.read_text().splitlines() if line.strip()]
            _CLASS_CACHE[key] = graphs
            return graphs
        except (ValueError, OSError):
            pass  # fall through and regenerate
    if n == 1:
        graphs = [Graph(1, (0,))]
    else:
        parents = _classes(n - 1, family, fam_key)
        nb = n - 1
        seen: set[int] = set()
        for P in parents:
            prows = P.rows
            for mask in range(1 << nb):
                rows = tuple(
                    prows[u] | ((mask >> u & 1) << nb) for u in range(nb)
                ) + (mask,)
                if family is not None and not is_free(Graph(n, rows), family):
                    continue
                seen.add(canonical_bits(n, rows))
        graphs = [graph_from_bits(n, bits) for bits in sorted(seen)]
    _CLASS_CACHE[key] = graphs
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("".join(encode_graph6(G) + "\n" for G in graphs))
        except OSError:
            pass
    return graphs


def _check_cap(n: int, force: bool) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")
    if n > ENUM_HARD_CAP:
        raise EnumerationCapError(f"enumeration at n={n} is out of reach (hard cap {ENUM_HARD_CAP})")
    if n > ENUM_DEFAULT_CAP:
        if not force:
            raise EnumerationCapError(
                f"enumeration at n={n} exceeds the default cap {ENUM_DEFAULT_CAP}; pass force=True to override"
            )
        warnings.warn(f"enumerating all classes at n={n}; this may take very long", stacklevel=3)


def _validate_filter(n: int, filt: EnumFilter) -> None:
    if filt.min_degree is not None and not (0 <= filt.min_degree <= n - 1):
        raise ValueError(f"min_degree must lie in [0, {n - 1}], got {filt.min_degree}")
    cap = n * (n - 1) // 2
    if filt.max_edges is not None and not (0 <= filt.max_edges <= cap):
        raise ValueError(f"max_edges must lie in [0, {cap}], got {filt.max_edges}")


def enumerate_graphs(n: int, filt: Optional[EnumFilter] = None, *, force: bool = False) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class, key-ascending."""
    _check_cap(n, force)
    filt = filt or EnumFilter()
    _validate_filter(n, filt)
    family = as_family(filt.family) if filt.family is not None else None
    for G in _classes(n, family, _family_key(family)):
        if filt.min_degree is not None and G.min_degree() < filt.min_degree:
            continue
        if filt.max_edges is not None and G.edge_count > filt.max_edges:
            continue
        if filt.connected_only and not is_connected(G):
            continue
        yield G


def count_classes(n: int, filt: Optional[EnumFilter] = None, *, force: bool = False) -> int:
    """Number of isomorphism classes passing the filter."""
    return sum(1 for _ in enumerate_graphs(n, filt, force=force))
