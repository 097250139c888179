"""Command line front end.

Subcommands: compute, simulate, migrate1, migrate2, family, extremal, ng,
verify-bounds.  Data goes to stdout and is byte-deterministic for fixed
input and flags; timings, warnings, and other run metadata go to stderr.
Exit status is 0 only if every requested computation completed and every
checked postcondition held.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .engine import (
    CapExceededError,
    NoForcingSetError,
    component_pt,
    is_psd_forcing_set,
    propagate,
    psd_zero_forcing_number,
    pt_plus,
    pt_plus_k,
)
from .extremal import classify_extremal, ng_search, throttling_number, zeta
from .families import FIXTURES, make_family
from .graph import (
    Graph,
    Graph6Error,
    components,
    parse_graph6,
    read_graph6_lines,
    vlist,
    write_graph6,
)
from .migration import ConsistencyError, balance_propagation, shrink_max_component


class CliError(Exception):
    """Fatal usage or input problem; message printed to stderr, exit 1."""


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _vset_str(mask: int) -> str:
    return "{" + ",".join(str(v) for v in vlist(mask)) + "}"


def _jline(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# input plumbing


def _add_source(p: argparse.ArgumentParser, *, families_only: bool = False) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    if not families_only:
        src.add_argument("--g6", metavar="STR", help="one graph6 string")
        src.add_argument(
            "--file", metavar="PATH", help="file of graph6 lines ('-' for stdin)"
        )
    src.add_argument("--family", metavar="SPEC", help="family spec, e.g. path:5 or lollipop:6,5")
    src.add_argument("--fixture", choices=sorted(FIXTURES), help="named example graph")


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="JSON lines instead of a table")
    p.add_argument("--max-n", type=int, default=None, metavar="N",
                   help="override the exact-search order cap")
    p.add_argument("--max-subsets", type=int, default=None, metavar="M",
                   help="override the subset-scan cap")


def _load_inputs(args) -> list[tuple[str, Graph, dict[str, int]]]:
    """Resolve the one chosen source into (label, graph, name map) triples."""
    if getattr(args, "g6", None) is not None:
        try:
            g = parse_graph6(args.g6.strip())
        except Graph6Error as e:
            raise CliError(f"--g6: {e}") from None
        return [(write_graph6(g), g, {})]
    if getattr(args, "file", None) is not None:
        if args.file == "-":
            lines = sys.stdin.readlines()
        else:
            try:
                with open(args.file, encoding="ascii") as f:
                    lines = f.readlines()
            except OSError as e:
                raise CliError(str(e)) from None
        try:
            return [
                (write_graph6(g), g, {}) for _, g in read_graph6_lines(lines)
            ]
        except Graph6Error as e:
            raise CliError(f"{args.file}: {e}") from None
    if args.family is not None:
        try:
            g, names = make_family(args.family)
        except ValueError as e:
            raise CliError(str(e)) from None
        return [(write_graph6(g), g, dict(names))]
    g, names = FIXTURES[args.fixture]()
    return [(write_graph6(g), g, dict(names))]


def _load_single(args) -> tuple[str, Graph, dict[str, int]]:
    got = _load_inputs(args)
    if len(got) != 1:
        raise CliError(f"this command needs exactly one graph, got {len(got)}")
    return got[0]


def _parse_blue(spec: str, g: Graph, names: dict[str, int]) -> int:
    """Comma-separated vertex ids or family vertex names -> bitmask."""
    mask = 0
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.isdigit():
            v = int(tok)
        elif tok in names:
            v = names[tok]
        else:
            hint = f"; known names: {', '.join(sorted(names))}" if names else ""
            raise CliError(f"unknown vertex {tok!r}{hint}")
        if not 0 <= v < g.n:
            raise CliError(f"vertex {v} out of range for order {g.n}")
        mask |= 1 << v
    return mask


def _print_table(rows: list[dict], columns: list[str]) -> None:
    if not rows:
        return
    widths = {c: len(c) for c in columns}
    rendered = []
    for row in rows:
        r = {c: str(row.get(c, "")) for c in columns}
        rendered.append(r)
        for c in columns:
            widths[c] = max(widths[c], len(r[c]))
    print("  ".join(c.ljust(widths[c]) for c in columns).rstrip())
    for r in rendered:
        print("  ".join(r[c].ljust(widths[c]) for c in columns).rstrip())


# ---------------------------------------------------------------------------
# subcommands


def cmd_compute(args) -> int:
    rows = []
    skipped = 0
    for label, g, _names in _load_inputs(args):
        try:
            z, _ = psd_zero_forcing_number(g, max_n=args.max_n)
            pt, witness = pt_plus(g, max_n=args.max_n)
            row: dict = {"g6": label, "n": g.n, "z+": z, "pt+": pt,
                         "witness": vlist(witness)}
            if args.throttle:
                th, _, _ = throttling_number(g, max_subsets=args.max_subsets)
                row["th+"] = th
            rows.append(row)
        except CapExceededError as e:
            _note(f"warning: {label}: skipped: {e}")
            skipped += 1
    if args.json:
        for row in rows:
            print(_jline(row))
    else:
        shown = [dict(r, witness=_vset_str(sum(1 << v for v in r["witness"])))
                 for r in rows]
        cols = ["g6", "n", "z+", "pt+", "witness"] + (["th+"] if args.throttle else [])
        _print_table(shown, cols)
    _note(f"compute: {len(rows)} graph(s), {skipped} skipped")
    return 1 if skipped else 0


def cmd_simulate(args) -> int:
    label, g, names = _load_single(args)
    blue = _parse_blue(args.blue, g, names)
    sched = propagate(g, blue)
    if args.json:
        print(_jline({"g6": label, "n": g.n, "initial": vlist(blue)}))
        for i, forced in enumerate(sched.rounds, start=1):
            forces = [[e.forcer, e.target] for e in sched.assignments if e.step == i]
            print(_jline({"step": i, "forces": forces, "new_blue": vlist(forced)}))
        verdict: dict = {"forcing": sched.succeeded}
        verdict["pt"] = sched.steps if sched.succeeded else None
        verdict["residual"] = vlist(sched.residual_white)
        print(_jline(verdict))
    else:
        print(f"graph {label} (n={g.n})  initial {_vset_str(blue)}")
        for i, forced in enumerate(sched.rounds, start=1):
            moves = " ".join(
                f"{e.forcer}->{e.target}" for e in sched.assignments if e.step == i
            )
            print(f"step {i}: {moves}  new blue {_vset_str(forced)}")
        if sched.succeeded:
            print(f"forcing: yes  pt={sched.steps}")
        else:
            print(f"forcing: no  residual {_vset_str(sched.residual_white)}")
    return 0


def cmd_migrate(args, algorithm: int) -> int:
    label, g, names = _load_single(args)
    blue = _parse_blue(args.blue, g, names)
    if not is_psd_forcing_set(g, blue):
        residual = propagate(g, blue).residual_white
        raise CliError(
            f"blue set {_vset_str(blue)} is not a PSD forcing set of {label}: "
            f"propagation stalls with white {_vset_str(residual)}"
        )
    k = bin(blue).count("1")
    bound = (g.n - k + 1) // 2  # ceil((n-k)/2)
    if algorithm == 1:
        final, trace = shrink_max_component(g, blue)
        maxc = max((bin(c).count("1") for c in components(g, final)), default=0)
        summary = {"final": vlist(final), "pt": propagate(g, final).steps,
                   "bound": bound, "max_component": maxc, "ok": maxc <= bound}
    else:
        final, trace = balance_propagation(g, blue)
        # constant-time sentinel mirrors the balancing loop's gap test
        times = sorted([t for _, t in component_pt(g, final)] + [0])
        gap = times[-1] - times[-2] if len(times) >= 2 else 0
        ptf = propagate(g, final).steps
        summary = {"final": vlist(final), "pt": ptf, "bound": bound,
                   "gap": gap, "ok": gap <= 1 and ptf <= bound}
    if args.json:
        for line in trace.to_json_lines():
            print(line)
        print(_jline(summary))
    else:
        print(f"graph {label} (n={g.n})  blue {_vset_str(blue)}  bound {bound}")
        for i, step in enumerate(trace.steps, start=1):
            moves = " ".join(f"{e.forcer}->{e.target}@{e.step}" for e in step.forces)
            print(
                f"pass {i}: out {_vset_str(step.moved_out)} "
                f"in {_vset_str(step.moved_in)} -> {_vset_str(step.after)}"
                + (f"  forces {moves}" if moves else "")
            )
        if not trace.steps:
            print("no migration needed")
        tail = {1: "max component", 2: "time gap"}[algorithm]
        extra = summary.get("max_component", summary.get("gap"))
        print(
            f"final {_vset_str(final)}  pt={summary['pt']}  "
            f"{tail}={extra}  postcondition "
            + ("ok" if summary["ok"] else "VIOLATED")
        )
    return 0 if summary["ok"] else 1


def cmd_family(args) -> int:
    label, g, names = _load_single(args)
    if args.json:
        print(_jline({"g6": label, "n": g.n, "names": dict(sorted(names.items()))}))
    else:
        print(label)
        for name, v in sorted(names.items()):
            print(f"{name} = {v}")
    return 0


def cmd_extremal(args) -> int:
    if (args.k is None) == (args.zeta is None):
        raise CliError("choose exactly one of --k or --zeta")
    t0 = time.monotonic()
    if args.k is not None:
        records = classify_extremal(args.k, jobs=args.jobs,
                                    checkpoint_dir=args.checkpoint)
        if args.json:
            for rec in records:
                print(rec.to_json())
        else:
            _print_table(
                [{"g6": r.g6, "n": r.n, "z+": r.z_plus, "pt+": r.pt_plus}
                 for r in records],
                ["g6", "n", "z+", "pt+"],
            )
        _note(f"extremal k={args.k}: {len(records)} graphs "
              f"in {time.monotonic() - t0:.2f}s")
        return 0
    n, k = args.zeta
    try:
        value, witnesses = zeta(n, k)
    except ValueError as e:
        raise CliError(str(e)) from None
    if args.json:
        print(_jline({"n": n, "k": k, "zeta": value, "witnesses": witnesses}))
    else:
        print(f"zeta({n},{k}) = {value}")
        for w in witnesses:
            print(w)
    _note(f"zeta({n},{k}) in {time.monotonic() - t0:.2f}s")
    return 0


def cmd_ng(args) -> int:
    t0 = time.monotonic()
    res = ng_search(args.n, jobs=args.jobs, checkpoint_dir=args.checkpoint)
    if args.json:
        print(_jline({
            "n": res.n,
            "histogram": {str(s): c for s, c in res.histogram.items()},
            "max_sum": res.max_sum,
            "threshold": res.threshold,
            "attained": res.attained,
            "attaining": list(res.attaining),
        }))
    else:
        print(f"order {res.n}: pt+ sum histogram")
        for s, c in res.histogram.items():
            print(f"sum {s}: {c}")
        verdict = "attained" if res.attained else "not attained"
        print(f"threshold {res.threshold} {verdict}"
              + (f" by {' '.join(res.attaining)}" if res.attaining else ""))
    _note(f"ng n={args.n} in {time.monotonic() - t0:.2f}s")
    return 0


def cmd_verify_bounds(args) -> int:
    rows = []
    skipped = 0
    violations = 0
    for label, g, _names in _load_inputs(args):
        try:
            z, _ = psd_zero_forcing_number(g, max_n=args.max_n)
            bad = []
            tight = []
            for k in range(z, g.n + 1):
                pt, _ = pt_plus_k(g, k, max_subsets=args.max_subsets)
                bound = (g.n - k + 1) // 2
                if pt > bound:
                    bad.append(k)
                elif pt == bound and pt > 0:
                    tight.append(k)
        except CapExceededError as e:
            _note(f"warning: {label}: skipped: {e}")
            skipped += 1
            continue
        violations += len(bad)
        rows.append({"g6": label, "n": g.n, "z+": z,
                     "violations": bad, "tight": tight})
    if args.json:
        for row in rows:
            print(_jline(row))
    else:
        _print_table(
            [dict(r, violations=",".join(map(str, r["violations"])) or "-",
                  tight=",".join(map(str, r["tight"])) or "-")
             for r in rows],
            ["g6", "n", "z+", "violations", "tight"],
        )
    _note(f"verify-bounds: {len(rows)} graph(s), {violations} violation(s), "
          f"{skipped} skipped")
    return 0 if violations == 0 and skipped == 0 else 1


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="psdforce",
        description="PSD zero forcing: exact invariants, simulation, "
                    "migration, and extremal catalogs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Z+, pt+, and optionally th+ per graph")
    _add_source(p)
    _add_caps(p)
    p.add_argument("--throttle", action="store_true", help="also compute th+")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("simulate", help="run the propagation from a blue set")
    _add_source(p)
    _add_caps(p)
    p.add_argument("--blue", required=True, metavar="SET",
                   help="comma-separated vertex ids or fixture names")
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("migrate1", help="shrink the largest white component")
    _add_source(p)
    _add_caps(p)
    p.add_argument("--blue", required=True, metavar="SET")
    p.set_defaults(fn=lambda a: cmd_migrate(a, 1))

    p = sub.add_parser("migrate2", help="balance per-component times")
    _add_source(p)
    _add_caps(p)
    p.add_argument("--blue", required=True, metavar="SET")
    p.set_defaults(fn=lambda a: cmd_migrate(a, 2))

    p = sub.add_parser("family", help="emit a family graph and its name map")
    _add_source(p, families_only=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("extremal", help="slow-propagation catalogs and zeta")
    p.add_argument("--k", type=int, default=None,
                   help="catalog of graphs with pt+ = n - k (1..4)")
    p.add_argument("--zeta", type=int, nargs=2, default=None,
                   metavar=("N", "K"), help="max pt+ over order-N graphs with Z+ = K")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", metavar="DIR", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_extremal)

    p = sub.add_parser("ng", help="graph-plus-complement time sums for one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", metavar="DIR", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_ng)

    p = sub.add_parser("verify-bounds",
                       help="check pt+(G,k) <= ceil((n-k)/2) over a corpus")
    _add_source(p)
    _add_caps(p)
    p.set_defaults(fn=cmd_verify_bounds)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        _note(f"error: {e}")
        return 1
    except (NoForcingSetError, ConsistencyError, ValueError) as e:
        _note(f"error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
