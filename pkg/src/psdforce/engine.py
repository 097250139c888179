"""Positive-semidefinite forcing: the color-change rule and exact invariants.

The rule: with blue set B, let W1..Wt be the components of G - B.  A blue
vertex u forces a white vertex w at this step iff w is the only white
neighbor of u inside some component Wi (u may force once per component).
Propagation is synchronous: every forceable vertex turns blue at once, and
the round count of a successful run is the propagation time of B.

A set that never stalls is a forcing set.  There is no numeric sentinel for
"never finishes": failed runs are reported as such, and the size-k optimum
raises :class:`NoForcingSetError` when no size-k forcing set exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, as_mask, components, induced_subgraph, vlist

# Subset scans are exponential; these caps keep desk-scale calls honest and
# can be overridden per call (the CLI exposes --max-n / --max-subsets).
DEFAULT_MAX_N = 12
DEFAULT_MAX_SUBSETS = 10**6


class CapExceededError(RuntimeError):
    """The requested exact search is larger than the configured cap."""


class NoForcingSetError(ValueError):
    """No forcing set satisfies the requested size constraint."""


class NotForcingError(ValueError):
    """The supplied blue set does not force the whole graph."""


@dataclass(frozen=True)
class ForceEvent:
    """One performed force: ``forcer`` turned ``target`` blue at ``step`` (1-based)."""

    forcer: int
    target: int
    step: int


@dataclass(frozen=True)
class PropagationSchedule:
    """Full record of one synchronous run.

    ``rounds[i]`` is the mask of vertices forced at step i+1; rounds are
    disjoint, nonempty, and disjoint from ``initial``.  ``assignments`` holds
    one ForceEvent per forced vertex (a vertex forceable by several blues is
    assigned the least-id forcer).  ``succeeded`` is False iff the run
    stalled with white vertices left.
    """

    n: int
    initial: int
    rounds: tuple[int, ...]
    assignments: tuple[ForceEvent, ...]
    succeeded: bool

    @property
    def steps(self) -> int:
        """Number of synchronous rounds performed (the propagation time when
        the run succeeded)."""
        return len(self.rounds)

    def blue_after(self, i: int) -> int:
        """Blue mask after round i (i=0 is the initial set)."""
        mask = self.initial
        for r in self.rounds[:i]:
            mask |= r
        return mask

    @property
    def final(self) -> int:
        return self.blue_after(len(self.rounds))

    @property
    def residual_white(self) -> int:
        return ((1 << self.n) - 1) & ~self.final


# ---------------------------------------------------------------------------
# core rule


def _white_components(adj: tuple[int, ...], white: int) -> list[tuple[int, int]]:
    """Components of the white subgraph as (component_mask, neighbor_union)."""
    comps = []
    rem = white
    while rem:
        seed = rem & -rem
        comp = seed
        frontier = seed
        nbrs = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            nbrs |= nxt
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append((comp, nbrs))
        rem &= ~comp
    return comps


def _force_round(adj: tuple[int, ...], blue: int, full: int) -> int:
    """Mask of every vertex forceable in one synchronous step."""
    forced = 0
    for comp, nbrs in _white_components(adj, full & ~blue):
        bm = blue & nbrs
        while bm:
            low = bm & -bm
            bm ^= low
            x = adj[low.bit_length() - 1] & comp
            if x and not x & (x - 1):
                forced |= x
    return forced


def _pt_mask(adj: tuple[int, ...], n: int, blue: int) -> int | None:
    """Propagation time of a blue mask, or None if it is not a forcing set."""
    full = (1 << n) - 1
    t = 0
    while blue != full:
        f = _force_round(adj, blue, full)
        if not f:
            return None
        blue |= f
        t += 1
    return t


def forceable(g: Graph, blue: int | Iterable[int]) -> list[tuple[int, int]]:
    """All valid forces (forcer, target) for the current blue set.

    Ordered by target then forcer.  Includes every valid pair, so one target
    may appear with several forcers.
    """
    mask = as_mask(g, blue)
    adj = g.adj
    pairs = []
    for comp, nbrs in _white_components(adj, g.full_mask & ~mask):
        bm = mask & nbrs
        while bm:
            low = bm & -bm
            bm ^= low
            u = low.bit_length() - 1
            x = adj[u] & comp
            if x and not x & (x - 1):
                pairs.append((u, x.bit_length() - 1))
    pairs.sort(key=lambda p: (p[1], p[0]))
    return pairs


def propagate(g: Graph, initial: int | Iterable[int]) -> PropagationSchedule:
    """Run the synchronous process to stall or completion."""
    start = as_mask(g, initial)
    blue = start
    full = g.full_mask
    rounds: list[int] = []
    events: list[ForceEvent] = []
    step = 0
    while blue != full:
        step += 1
        pairs = forceable(g, blue)
        if not pairs:
            break
        forced = 0
        for u, w in pairs:
            wbit = 1 << w
            if not forced & wbit:
                # least-id forcer wins: pairs are sorted by (target, forcer)
                events.append(ForceEvent(u, w, step))
                forced |= wbit
        rounds.append(forced)
        blue |= forced
    return PropagationSchedule(
        n=g.n,
        initial=start,
        rounds=tuple(rounds),
        assignments=tuple(events),
        succeeded=blue == full,
    )


def is_psd_forcing_set(g: Graph, blue: int | Iterable[int]) -> bool:
    return _pt_mask(g.adj, g.n, as_mask(g, blue)) is not None


@dataclass(frozen=True)
class ForcingForest:
    """Vertex partition induced by the assigned forces of a successful run.

    ``trees[b]`` is the mask of vertices whose forcing chain starts at the
    initial vertex b (b included); ``edges[b]`` are the (forcer, target)
    force edges inside that tree.
    """

    roots: tuple[int, ...]
    trees: dict[int, int]
    edges: dict[int, tuple[tuple[int, int], ...]]


def forcing_forest(g: Graph, schedule: PropagationSchedule) -> ForcingForest:
    """Group the assigned forces of a successful schedule by initial vertex."""
    if not schedule.succeeded:
        raise NotForcingError("schedule did not force the whole graph")
    root_of: dict[int, int] = {v: v for v in vlist(schedule.initial)}
    tree_edges: dict[int, list[tuple[int, int]]] = {v: [] for v in root_of}
    for ev in schedule.assignments:
        root = root_of[ev.forcer]
        root_of[ev.target] = root
        tree_edges[root].append((ev.forcer, ev.target))
    trees = {r: 0 for r in tree_edges}
    for v, r in root_of.items():
        trees[r] |= 1 << v
    return ForcingForest(
        roots=tuple(sorted(tree_edges)),
        trees=trees,
        edges={r: tuple(es) for r, es in tree_edges.items()},
    )


# ---------------------------------------------------------------------------
# exact optima


def _isolated_mask(g: Graph) -> int:
    mask = 0
    for v, row in enumerate(g.adj):
        if not row:
            mask |= 1 << v
    return mask


def _scan_size_k(g: Graph, k: int) -> tuple[int, int] | None:
    """Best (pt, witness_mask) over size-k blue sets, or None if none forces.

    The witness is the lexicographically least minimizer (as a sorted vertex
    tuple).  Isolated vertices can never be forced, so only supersets of
    them are scanned.
    """
    adj, n = g.adj, g.n
    iso = _isolated_mask(g)
    niso = iso.bit_count()
    if k < niso:
        return None
    free = [v for v in range(n) if not iso >> v & 1]
    best: tuple[int, tuple[int, ...]] | None = None
    for extra in combinations(free, k - niso):
        mask = iso
        for v in extra:
            mask |= 1 << v
        pt = _pt_mask(adj, n, mask)
        if pt is None:
            continue
        key = (pt, tuple(vlist(mask)))
        if best is None or key < best:
            best = key
    if best is None:
        return None
    witness = 0
    for v in best[1]:
        witness |= 1 << v
    return best[0], witness


def _z_and_pt(g: Graph) -> tuple[int, int, int]:
    """(Z, pt, witness): least forcing-set size, its best time, one witness."""
    for k in range(max(1, _isolated_mask(g).bit_count()), g.n + 1):
        got = _scan_size_k(g, k)
        if got is not None:
            return k, got[0], got[1]
    raise AssertionError("the full vertex set always forces")


def psd_zero_forcing_number(
    g: Graph, *, max_n: int | None = None
) -> tuple[int, int]:
    """Least size of a forcing set, with one witness mask."""
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if g.n > cap:
        raise CapExceededError(
            f"order {g.n} exceeds the exact-search cap {cap}; raise max_n to override"
        )
    z, _, witness = _z_and_pt(g)
    return z, witness


def pt_plus_k(
    g: Graph, k: int, *, max_subsets: int | None = None
) -> tuple[int, int]:
    """Best propagation time over blue sets of size exactly k, with witness.

    Raises :class:`NoForcingSetError` if no size-k set forces (distinct from
    the cap error).
    """
    if not 0 <= k <= g.n:
        raise ValueError(f"k must be in 0..{g.n}, got {k}")
    cap = DEFAULT_MAX_SUBSETS if max_subsets is None else max_subsets
    if math.comb(g.n, k) > cap:
        raise CapExceededError(
            f"C({g.n},{k}) exceeds the subset-scan cap {cap}; raise max_subsets to override"
        )
    got = _scan_size_k(g, k)
    if got is None:
        raise NoForcingSetError(f"no forcing set of size {k}")
    return got


def pt_plus(
    g: Graph, *, max_n: int | None = None
) -> tuple[int, int]:
    """Propagation time of the graph: best time over minimum forcing sets.

    Returns (pt, witness_mask); the witness is a minimum forcing set
    achieving it.
    """
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if g.n > cap:
        raise CapExceededError(
            f"order {g.n} exceeds the exact-search cap {cap}; raise max_n to override"
        )
    _, pt, witness = _z_and_pt(g)
    return pt, witness


def component_pt(g: Graph, blue: int | Iterable[int]) -> list[tuple[int, int]]:
    """Per-component times: (component_mask, time) for each component of G - B.

    The time of component C is the propagation time of B inside the subgraph
    induced on C plus B.  Components come back ordered by least vertex; the
    whole-graph time equals the max of the per-component times.
    """
    mask = as_mask(g, blue)
    if _pt_mask(g.adj, g.n, mask) is None:
        raise NotForcingError("blue set does not force the graph")
    out = []
    for comp in components(g, mask):
        sub, remap = induced_subgraph(g, comp | mask)
        sub_blue = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            sub_blue |= 1 << remap[low.bit_length() - 1]
        pt = _pt_mask(sub.adj, sub.n, sub_blue)
        assert pt is not None, "a forcing set forces every component"
        out.append((comp, pt))
    return out
