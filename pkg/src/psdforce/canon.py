"""Canonical labeling and isomorph-free enumeration of small graphs.

The canonical label of a graph is the graph6 string of a distinguished
relabeling: vertices are grouped by iterated color refinement (cells ordered
by their refinement signature, which is invariant under relabeling), and the
label is the lexicographically least adjacency bit string over the
refinement-consistent permutations.  Two graphs of order <= CANON_MAX_N get
equal labels iff they are isomorphic.
"""

from __future__ import annotations

import functools
from typing import Iterator

from .graph import Graph, components, parse_graph6, write_graph6

CANON_MAX_N = 10
ENUM_MAX_N = 8


def _refine_cells(g: Graph) -> list[list[int]]:
    """Partition vertices by iterated neighbor-color refinement.

    Cells come back ordered by their color signature, so the ordering is the
    same for every relabeling of g.
    """
    n = g.n
    colors = [g.degree(v) for v in range(n)]
    ranks = sorted(set(colors))
    colors = [ranks.index(c) for c in colors]
    while True:
        keys = []
        for v in range(n):
            nbr = []
            row = g.adj[v]
            while row:
                low = row & -row
                row ^= low
                nbr.append(colors[low.bit_length() - 1])
            nbr.sort()
            keys.append((colors[v], tuple(nbr)))
        uniq = sorted(set(keys))
        new = [uniq.index(k) for k in keys]
        if len(uniq) == len(set(colors)):
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _canonical_perm(g: Graph) -> list[int]:
    """Permutation (position -> original vertex) minimizing the bit string.

    Column j of the relabeled adjacency matrix (entries against positions
    0..j-1, most significant first) is minimized position by position over
    all permutations that fill refinement cells in order.  Ties fan out;
    twin vertices are explored once.
    """
    n = g.n
    adj = g.adj
    cells = _refine_cells(g)

    best_cols: list[int] = []
    best_perm: list[int] = []
    found = False
    perm: list[int] = []
    cols: list[int] = []

    def rec(ci: int, rem: list[list[int]]) -> None:
        nonlocal found
        j = len(perm)
        if found:
            head = best_cols[:j]
            if cols > head:
                return
            tight = cols == head
        else:
            tight = False
        if j == n:
            if not found or cols < best_cols:
                best_cols[:] = cols
                best_perm[:] = perm
                found = True
            return
        while not rem[ci]:
            ci += 1
        scored = []
        for v in rem[ci]:
            av = adj[v]
            col = 0
            for u in perm:
                col = col << 1 | (av >> u & 1)
            scored.append((col, v))
        mincol = min(scored)[0]
        if tight and mincol > best_cols[j]:
            return
        chosen = []
        twins: list[int] = []
        for col, v in sorted(scored):
            if col != mincol:
                break
            key_closed = adj[v] | 1 << v
            if any(adj[u] == adj[v] or (adj[u] | 1 << u) == key_closed for u in twins):
                continue
            twins.append(v)
            chosen.append(v)
        for v in chosen:
            nrem = [c if v not in c else [u for u in c if u != v] for c in rem]
            perm.append(v)
            cols.append(mincol)
            rec(ci, nrem)
            perm.pop()
            cols.pop()

    rec(0, cells)
    return best_perm


def canonical_form(g: Graph, max_n: int | None = None) -> Graph:
    """A canonical isomorph of g (same graph for all relabelings of g)."""
    cap = CANON_MAX_N if max_n is None else max_n
    if g.n > cap:
        raise ValueError(f"canonical labeling capped at order {cap}, got {g.n}")
    perm = _canonical_perm(g)
    rows = [0] * g.n
    for i, v in enumerate(perm):
        av = g.adj[v]
        for jj, w in enumerate(perm):
            if av >> w & 1:
                rows[i] |= 1 << jj
    return Graph._from_rows(rows)


def canonical_label(g: Graph, max_n: int | None = None) -> str:
    """Canonical graph6 string; equal labels iff isomorphic graphs."""
    return write_graph6(canonical_form(g, max_n))


# ---------------------------------------------------------------------------
# enumeration


@functools.lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[str, ...]:
    # Grow order n from order n-1 by attaching a new vertex with every
    # possible neighborhood, then dedupe by canonical label.  Every class on
    # n vertices arises: delete the last vertex of any representative.
    if n == 1:
        return (write_graph6(Graph(1)),)
    out: set[str] = set()
    for lab in _iso_classes(n - 1):
        g = parse_graph6(lab)
        rows = list(g.adj) + [0]
        for nbhd in range(1 << (n - 1)):
            rows[n - 1] = nbhd
            grown = Graph._from_rows(
                [row | ((nbhd >> v & 1) << (n - 1)) for v, row in enumerate(rows[:-1])]
                + [nbhd]
            )
            out.add(canonical_label(grown))
    return tuple(sorted(out))


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of order n.

    Representatives are canonical forms, streamed in sorted label order.
    """
    if not 1 <= n <= ENUM_MAX_N:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUM_MAX_N}, got {n}")
    for lab in _iso_classes(n):
        g = parse_graph6(lab)
        if connected_only and len(components(g)) > 1:
            continue
        yield g
