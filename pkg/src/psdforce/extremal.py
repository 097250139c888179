"""Throttling, complement-sum bounds, and exhaustive extremal searches.

Searches stream one :class:`ExtremalRecord` per isomorphism class in
deterministic order (order, then canonical label).  Long runs can checkpoint
per order to JSON-lines files and resume.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from multiprocessing import Pool

from .canon import enumerate_graphs
from .engine import (
    CapExceededError,
    DEFAULT_MAX_SUBSETS,
    _scan_size_k,
    _z_and_pt,
)
from .graph import Graph, complement, parse_graph6, vlist, write_graph6


@dataclass
class ExtremalRecord:
    """One graph's exact invariants, JSON-lines ready."""

    g6: str
    n: int
    z_plus: int
    pt_plus: int
    th_plus: int | None = None
    ng_pt: int | None = None
    ng_z: int | None = None

    def to_json(self) -> str:
        doc: dict = {"g6": self.g6, "n": self.n, "z+": self.z_plus, "pt+": self.pt_plus}
        if self.th_plus is not None:
            doc["th+"] = self.th_plus
        if self.ng_pt is not None:
            doc["ng_pt"] = self.ng_pt
        if self.ng_z is not None:
            doc["ng_z"] = self.ng_z
        return json.dumps(doc, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ExtremalRecord":
        doc = json.loads(line)
        return cls(
            g6=doc["g6"],
            n=doc["n"],
            z_plus=doc["z+"],
            pt_plus=doc["pt+"],
            th_plus=doc.get("th+"),
            ng_pt=doc.get("ng_pt"),
            ng_z=doc.get("ng_z"),
        )


def graph_record(g: Graph, g6: str | None = None) -> ExtremalRecord:
    z, pt, _ = _z_and_pt(g)
    return ExtremalRecord(
        g6=g6 if g6 is not None else write_graph6(g), n=g.n, z_plus=z, pt_plus=pt
    )


# ---------------------------------------------------------------------------
# throttling


def throttling_number(
    g: Graph, *, max_subsets: int | None = None
) -> tuple[int, int, int]:
    """min over k of k + best time at size k; returns (value, best_k, witness).

    Ties go to the least k.  The value never exceeds ceil((n + Z)/2)
    (asserted).
    """
    cap = DEFAULT_MAX_SUBSETS if max_subsets is None else max_subsets
    if 2**g.n > cap:
        raise CapExceededError(
            f"2^{g.n} subsets exceed the scan cap {cap}; raise max_subsets to override"
        )
    best: tuple[int, int, int] | None = None
    z = None
    for k in range(1, g.n + 1):
        got = _scan_size_k(g, k)
        if got is None:
            continue
        if z is None:
            z = k
        pt, witness = got
        if best is None or k + pt < best[0]:
            best = (k + pt, k, witness)
    assert best is not None and z is not None
    bound = (g.n + z + 1) // 2  # ceil((n+Z)/2)
    assert best[0] <= bound, f"throttling {best[0]} above bound {bound}"
    return best


# ---------------------------------------------------------------------------
# complement sums


@dataclass(frozen=True)
class NGSums:
    """Graph-plus-complement sums with bound-tightness flags.

    For order n: n-2 <= z_sum <= 2n-1, and 1 <= pt_sum <= n/2 + 2.  The
    pt upper flag marks pt_sum == n/2 + 2 exactly (so only even orders can
    set it).
    """

    n: int
    pt_sum: int
    z_sum: int
    pt_at_lower: bool
    pt_at_upper: bool
    z_at_lower: bool
    z_at_upper: bool


def ng_sums(g: Graph) -> NGSums:
    z_g, pt_g, _ = _z_and_pt(g)
    z_c, pt_c, _ = _z_and_pt(complement(g))
    pt_sum = pt_g + pt_c
    z_sum = z_g + z_c
    n = g.n
    return NGSums(
        n=n,
        pt_sum=pt_sum,
        z_sum=z_sum,
        pt_at_lower=pt_sum == 1,
        pt_at_upper=2 * pt_sum == n + 4,
        z_at_lower=z_sum == n - 2,
        z_at_upper=z_sum == 2 * n - 1,
    )


def ng_pt_sum(g: Graph) -> int:
    return ng_sums(g).pt_sum


def ng_z_sum(g: Graph) -> int:
    return ng_sums(g).z_sum


# ---------------------------------------------------------------------------
# exhaustive searches


def _record_for_label(lab: str) -> ExtremalRecord:
    return graph_record(parse_graph6(lab), g6=lab)


def _ng_record_for_label(lab: str) -> ExtremalRecord:
    g = parse_graph6(lab)
    rec = graph_record(g, g6=lab)
    s = ng_sums(g)
    rec.ng_pt = s.pt_sum
    rec.ng_z = s.z_sum
    return rec


def _checkpoint_file(checkpoint_dir: str, task: str, n: int) -> str:
    return os.path.join(checkpoint_dir, f"{task}.n{n}.jsonl")


def _load_checkpoint(path: str) -> list[ExtremalRecord] | None:
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        return None
    try:
        tail = json.loads(lines[-1])
    except json.JSONDecodeError:
        return None
    if not isinstance(tail, dict) or tail.get("done") != len(lines) - 1:
        return None  # incomplete run; recompute this order
    return [ExtremalRecord.from_json(ln) for ln in lines[:-1]]


def _write_checkpoint(path: str, records: list[ExtremalRecord]) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")
        fh.write(json.dumps({"done": len(records)}) + "\n")
    os.replace(tmp, path)


def _records_for_order(
    n: int,
    worker,
    task: str,
    jobs: int = 1,
    checkpoint_dir: str | None = None,
) -> list[ExtremalRecord]:
    if checkpoint_dir is not None:
        path = _checkpoint_file(checkpoint_dir, task, n)
        cached = _load_checkpoint(path)
        if cached is not None:
            return cached
    labels = [write_graph6(g) for g in enumerate_graphs(n)]
    if jobs > 1:
        with Pool(jobs) as pool:
            records = pool.map(worker, labels, chunksize=64)
    else:
        records = [worker(lab) for lab in labels]
    if checkpoint_dir is not None:
        os.makedirs(checkpoint_dir, exist_ok=True)
        _write_checkpoint(_checkpoint_file(checkpoint_dir, task, n), records)
    return records


def invariant_table(
    max_n: int, *, jobs: int = 1, checkpoint_dir: str | None = None
) -> list[ExtremalRecord]:
    """Z and pt for every isomorphism class of order 1..max_n (max 8)."""
    out: list[ExtremalRecord] = []
    for n in range(1, max_n + 1):
        out.extend(
            _records_for_order(n, _record_for_label, "invariants", jobs, checkpoint_dir)
        )
    return out


def classify_extremal(
    k: int,
    *,
    jobs: int = 1,
    checkpoint_dir: str | None = None,
    table: list[ExtremalRecord] | None = None,
) -> list[ExtremalRecord]:
    """All graphs (up to isomorphism) with propagation time exactly n - k.

    Any such graph has order at most 2k, so the search space is complete.
    Edgeless graphs are excluded: their time is 0 only because nothing is
    ever forced, and the slow-propagation catalogs are about graphs that do
    propagate.  Ordered by (n, canonical label).
    """
    if not 1 <= k <= 4:
        raise ValueError(f"catalog supports 1 <= k <= 4, got {k}")
    if table is None:
        table = invariant_table(2 * k, jobs=jobs, checkpoint_dir=checkpoint_dir)
    out = [
        rec
        for rec in table
        if rec.n <= 2 * k and rec.pt_plus == rec.n - k and rec.pt_plus > 0
    ]
    out.sort(key=lambda r: (r.n, r.g6))
    return out


def zeta(n: int, k: int) -> tuple[int, list[str]]:
    """Largest propagation time among order-n graphs with Z = k, with witnesses.

    Exhaustive over isomorphism classes (n <= 8).  Raises ValueError if no
    order-n graph has forcing number k.  The value never exceeds
    ceil((n-k)/2) (asserted).
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    best = -1
    witnesses: list[str] = []
    for g in enumerate_graphs(n):
        z, pt, _ = _z_and_pt(g)
        if z != k:
            continue
        if pt > best:
            best = pt
            witnesses = [write_graph6(g)]
        elif pt == best:
            witnesses.append(write_graph6(g))
    if best < 0:
        raise ValueError(f"no graph of order {n} has forcing number {k}")
    assert best <= (n - k + 1) // 2
    return best, witnesses


@dataclass(frozen=True)
class NGSearchResult:
    """Distribution of graph-plus-complement time sums over one order.

    ``threshold`` is floor(n/2) + 2, the largest integer sum the bound
    n/2 + 2 permits; ``attained`` says whether any graph reaches it, and
    ``attaining`` lists those that do.
    """

    n: int
    histogram: dict[int, int]
    max_sum: int
    threshold: int
    attained: bool
    attaining: tuple[str, ...]


def ng_search(n: int, *, jobs: int = 1, checkpoint_dir: str | None = None) -> NGSearchResult:
    """Exact complement-sum survey of every order-n isomorphism class."""
    records = _records_for_order(n, _ng_record_for_label, "ng", jobs, checkpoint_dir)
    hist: dict[int, int] = {}
    attaining = []
    threshold = n // 2 + 2
    for rec in records:
        hist[rec.ng_pt] = hist.get(rec.ng_pt, 0) + 1
        if rec.ng_pt == threshold:
            attaining.append(rec.g6)
    return NGSearchResult(
        n=n,
        histogram=dict(sorted(hist.items())),
        max_sum=max(hist),
        threshold=threshold,
        attained=bool(attaining),
        attaining=tuple(sorted(attaining)),
    )
