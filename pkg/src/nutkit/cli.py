"""Command-line interface: ``nutkit <subcommand> ...``.

Graphs travel as graph6 lines. ``analyze`` and ``verify`` write JSON lines,
``stats`` writes CSV. Exit status is 0 on success, 1 for a malformed input
line or a failed verification, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TextIO

from . import constructions, families, verify
from .enumeration import enumerate_connected, enumerate_nut
from .errors import Graph6Error, NutkitError
from .graph import Graph, parse_graph6, write_graph6
from .nut import edge_signatures, is_core, is_nut, nullity
from .symmetry import automorphism_group, orbits, vertex_orbit_graph

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


# records ------------------------------------------------------------------------

def analysis_record(g: Graph) -> dict:
    """All per-graph quantities as a JSON-ready dict (schema version 1)."""
    degs = g.degrees() or [0]
    rep = nullity(g)
    nut = is_nut(g, rep)
    core = is_core(g, rep)
    a = automorphism_group(g)
    part, sig = orbits(g, a)
    idx = part.orbit_index()
    signs = edge_signatures(g, nut.witness) if nut else None
    edge_orbits = []
    for orb in part.edge_orbits:
        u, v = orb[0]
        entry = {"type": "intra" if idx[u] == idx[v] else "inter",
                 "vertex_orbits": sorted({idx[u], idx[v]}), "size": len(orb)}
        if signs is not None:
            entry["like"] = sum(1 for e in orb if signs[e].like)
            entry["unlike"] = len(orb) - entry["like"]
        edge_orbits.append(entry)
    quotient = vertex_orbit_graph(g, part)
    return {
        "schema_version": SCHEMA_VERSION,
        "graph6": write_graph6(g).decode(),
        "order": g.order,
        "size": g.size,
        "degree": {"min": min(degs), "avg": 2 * g.size / g.order if g.order else 0, "max": max(degs)},
        "connected": g.is_connected(),
        "bipartite": g.is_bipartite(),
        "nullity": rep.eta,
        "is_nut": bool(nut),
        "is_core": bool(core),
        "omega": list(sig.as_tuple()),
        "kernel_vector": list(rep.basis[0]) if rep.eta == 1 else None,
        "vertex_orbits": [list(o) for o in part.vertex_orbits],
        "edge_orbits": edge_orbits,
        "orbit_degrees": [list(r) for r in quotient.d],
    }


def _pretty_header() -> str:
    return f"{'graph6':<20} {'n':>4} {'m':>5} {'eta':>4} {'nut':>4} {'core':>5}  omega"


def _pretty_line(rec: dict) -> str:
    yes = lambda b: "yes" if b else "no"
    return (f"{rec['graph6']:<20} {rec['order']:>4} {rec['size']:>5} {rec['nullity']:>4} "
            f"{yes(rec['is_nut']):>4} {yes(rec['is_core']):>5}  {tuple(rec['omega'])}")


# input handling -------------------------------------------------------------------

def _open_input(path: str | None) -> TextIO:
    if path is None or path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii", errors="replace")
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc.strerror}") from None


def read_graphs(stream: TextIO, lenient: bool) -> Iterator[Graph]:
    """Yield graphs from graph6 lines; blank lines and a bare header are skipped."""
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text or text == ">>graph6<<":
            continue
        try:
            yield parse_graph6(text)
        except Graph6Error as exc:
            msg = f"line {lineno}: {exc}"
            if not lenient:
                raise InputError(msg) from None
            print(f"skipping {msg}", file=sys.stderr)


def ordered_map(fn: Callable, items: Iterable, jobs: int) -> Iterator:
    """``map`` that keeps input order and holds only a bounded window in memory."""
    if jobs <= 1:
        yield from map(fn, items)
        return
    window = jobs * 4
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending: deque = deque()
        for item in items:
            pending.append(pool.submit(fn, item))
            if len(pending) >= window:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()


def _jobs(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get("NUTKIT_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"NUTKIT_JOBS must be an integer, got {env!r}") from None
    return 1


def _emit(graph: Graph, out: TextIO) -> None:
    out.write(write_graph6(graph).decode() + "\n")


# subcommands ----------------------------------------------------------------------

def cmd_analyze(args: argparse.Namespace, out: TextIO) -> int:
    graphs = read_graphs(_open_input(args.file), args.lenient)
    records = ordered_map(analysis_record, graphs, _jobs(args))
    if args.pretty:
        out.write(_pretty_header() + "\n")
    for rec in records:
        out.write((_pretty_line(rec) if args.pretty else json.dumps(rec, sort_keys=True)) + "\n")
    return 0


GENERATORS: dict[str, tuple[int | None, Callable[..., Graph]]] = {
    "circulant": (None, lambda n, *s: families.circulant(n, s)),
    "antiprism": (1, families.antiprism),
    "c3-cart-cycle": (1, families.c3_cart_cycle),
    "c3-twist-cycle": (1, families.c3_twist_cycle),
    "triangle-cycle": (1, families.triangle_cycle),
    "rose-window": (3, families.rose_window),
    "complete": (1, families.complete),
    "cycle": (1, families.cycle),
    "path": (1, families.path),
    "hypercube": (1, families.hypercube),
    "complete-bipartite": (1, families.complete_bipartite),
    "two-orbit-nut": (1, constructions.two_orbit_nut),
}


def _ints(values: list[str]) -> list[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"expected integer parameters, got {' '.join(values)}") from None


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    name = args.family
    if name in families.SPORADIC:
        if args.params:
            raise UsageError(f"{name} takes no parameters")
        _emit(families.sporadic(name), out)
        return 0
    if name not in GENERATORS:
        choices = sorted(GENERATORS) + sorted(families.SPORADIC)
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(choices)}")
    arity, make = GENERATORS[name]
    params = _ints(args.params)
    if (arity is not None and len(params) != arity) or (arity is None and len(params) < 2):
        raise UsageError(f"{name} expects {arity if arity is not None else 'n and at least one'} parameter(s)")
    try:
        _emit(make(*params), out)
    except NutkitError as exc:
        raise UsageError(str(exc)) from None
    return 0


CONSTRUCT_ARITY = {"multiplier": 1, "bridge": 2, "subdivide": 2, "fowler": 1, "coalesce": 1, "two-orbit-nut": 1}


def _apply_construction(which: str, g: Graph, params: list[int]) -> Graph:
    if which == "multiplier":
        return constructions.multiplier(g, params[0])
    if which == "coalesce":
        return constructions.coalesce_triangle_pentagon(g, params[0])
    a = automorphism_group(g)
    part, _ = orbits(g, a)
    if which in ("bridge", "subdivide"):
        e = tuple(sorted(params))
        orb = next((o for o in part.edge_orbits if e in o), None)
        if orb is None:
            raise UsageError(f"{e} is not an edge")
        build = constructions.bridge_construction if which == "bridge" else constructions.subdivision_construction
        return build(g, orb, a)
    v = params[0]
    orb = next((o for o in part.vertex_orbits if v in o), None)
    if orb is None:
        raise UsageError(f"vertex {v} out of range")
    return constructions.fowler(g, orb, a)


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    which = args.construction
    params = _ints(args.params)
    if len(params) != CONSTRUCT_ARITY[which]:
        raise UsageError(f"{which} expects {CONSTRUCT_ARITY[which]} integer parameter(s)")
    if which == "two-orbit-nut":
        try:
            _emit(constructions.two_orbit_nut(params[0]), out)
        except NutkitError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        return 0
    status = 0
    for g in read_graphs(_open_input(args.file), args.lenient):
        try:
            _emit(_apply_construction(which, g, params), out)
        except NutkitError as exc:
            print(f"error: {write_graph6(g).decode()}: {type(exc).__name__}: {exc}", file=sys.stderr)
            status = 1
    return status


def _filter_keep(g: Graph, want_nut: bool, want_core: bool, want_vt: bool) -> bool:
    rep = nullity(g)
    if want_nut and not is_nut(g, rep):
        return False
    if want_core and not is_core(g, rep):
        return False
    if want_vt:
        a = automorphism_group(g)
        if len(orbits(g, a)[0].vertex_orbits) != 1:
            return False
    return True


def cmd_filter(args: argparse.Namespace, out: TextIO) -> int:
    if not (args.nut or args.core or args.vt):
        raise UsageError("filter needs at least one of --nut, --core, --vt")
    for g in read_graphs(_open_input(args.file), args.lenient):
        if _filter_keep(g, args.nut, args.core, args.vt):
            _emit(g, out)
    return 0


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    try:
        graphs = [r.graph for r in enumerate_nut(args.n)] if args.nut else enumerate_connected(args.n)
    except NutkitError as exc:
        raise UsageError(str(exc)) from None
    for g in graphs:
        _emit(g, out)
    return 0


STAT_KEYS = ("n", "ov", "oe", "connected", "nut")


def _stat_key(g: Graph, keys: tuple[str, ...]) -> tuple:
    values = {}
    if "ov" in keys or "oe" in keys:
        _, sig = orbits(g, automorphism_group(g))
        values["ov"], values["oe"] = sig.o_v, sig.o_e
    values["n"] = g.order
    if "connected" in keys:
        values["connected"] = int(g.is_connected())
    if "nut" in keys:
        values["nut"] = int(bool(is_nut(g)))
    return tuple(values[k] for k in keys)


def cmd_stats(args: argparse.Namespace, out: TextIO) -> int:
    keys = tuple(k.strip() for k in args.group_by.split(",") if k.strip())
    bad = [k for k in keys if k not in STAT_KEYS]
    if not keys or bad:
        raise UsageError(f"--group-by takes a comma list from {', '.join(STAT_KEYS)}")
    graphs = read_graphs(_open_input(args.file), args.lenient)
    counts = Counter(ordered_map(_StatKey(keys), graphs, _jobs(args)))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([{"ov": "o_v", "oe": "o_e"}.get(k, k) for k in keys] + ["count"])
    for key in sorted(counts):
        writer.writerow(list(key) + [counts[key]])
    return 0


class _StatKey:
    # picklable callable for process pools
    def __init__(self, keys: tuple[str, ...]) -> None:
        self.keys = keys

    def __call__(self, g: Graph) -> tuple:
        return _stat_key(g, self.keys)


def _graph_suite(check: Callable[[Graph], verify.VerificationReport]) -> Callable:
    def run(args: argparse.Namespace) -> Iterator[verify.VerificationReport]:
        for g in read_graphs(_open_input(args.file), args.lenient):
            try:
                yield check(g)
            except NutkitError as exc:
                yield verify.VerificationReport(check.__name__, write_graph6(g).decode(),
                                                verify.NOT_APPLICABLE, {"reason": f"{type(exc).__name__}: {exc}"})
    return run


def _suite_params(args: argparse.Namespace, count: int) -> list[int]:
    params = _ints(args.params)
    if len(params) != count:
        raise UsageError(f"suite {args.suite} expects {count} integer parameter(s)")
    return params


def _run_suite(args: argparse.Namespace) -> Iterable[verify.VerificationReport]:
    suite = args.suite
    if suite == "orbit-inequality":
        return _graph_suite(verify.check_orbit_inequality)(args)
    if suite == "vt-nut":
        return _graph_suite(verify.check_vt_nut_conditions)(args)
    if suite == "orbit-sums":
        return _graph_suite(verify.check_orbit_sums)(args)
    if suite == "multiplier-symmetry":
        (k,) = _suite_params(args, 1)
        return _graph_suite(lambda g: verify.check_multiplier_symmetry(g, k))(args)
    if suite == "construction-delta":
        if not args.params:
            raise UsageError("construction-delta expects bridge|subdivide|fowler and a target")
        which, rest = args.params[0], _ints(args.params[1:])
        need = 1 if which == "fowler" else 2
        if which not in ("bridge", "subdivide", "fowler") or len(rest) != need:
            raise UsageError("use: construction-delta fowler V | bridge U V | subdivide U V")
        target = rest[0] if which == "fowler" else tuple(rest)
        return _graph_suite(lambda g: verify.check_construction_delta(g, which, target)[1])(args)
    if suite == "circulant-dihedral":
        k, lo, hi = _suite_params(args, 3)
        return [verify.check_circulant_dihedral(k, range(lo, hi + 1))]
    if suite == "prime-exclusion":
        (n_max,) = _suite_params(args, 1)
        return [verify.check_two_orbit_prime_exclusion(n_max)]
    if suite == "two-orbit-existence":
        lo, hi = _suite_params(args, 2)
        return [verify.check_two_orbit_existence(range(lo, hi + 1))]
    raise UsageError(f"unknown suite {suite!r}")


SUITES = ["orbit-inequality", "vt-nut", "orbit-sums", "multiplier-symmetry", "construction-delta",
          "circulant-dihedral", "prime-exclusion", "two-orbit-existence"]


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    status = 0
    for rep in _run_suite(args):
        out.write(json.dumps({"schema_version": SCHEMA_VERSION, **rep.to_dict()}, sort_keys=True) + "\n")
        if rep.failed:
            status = 1
    return status


# parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nutkit", description="Nut graph analysis toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def stream_opts(p: argparse.ArgumentParser, jobs: bool = False) -> None:
        p.add_argument("file", nargs="?", help="graph6 input file (default: stdin)")
        p.add_argument("--lenient", action="store_true", help="skip malformed lines instead of failing")
        if jobs:
            p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $NUTKIT_JOBS or 1)")

    p = sub.add_parser("analyze", help="one JSON record per input graph")
    stream_opts(p, jobs=True)
    p.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON lines")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="emit a named family member as graph6")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("construct", help="apply a construction to each input graph")
    p.add_argument("construction", choices=sorted(CONSTRUCT_ARITY))
    p.add_argument("params", nargs="*")
    p.add_argument("--file", default=None, help="graph6 input file (default: stdin)")
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("filter", help="pass through graphs with the requested properties")
    stream_opts(p)
    p.add_argument("--nut", action="store_true")
    p.add_argument("--core", action="store_true")
    p.add_argument("--vt", action="store_true", help="vertex-transitive only")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("enumerate", help="connected graphs of a given order up to isomorphism")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--nut", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("params", nargs="*")
    p.add_argument("--file", default=None, help="graph6 input for graph suites (default: stdin)")
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="CSV counts grouped by orbit counts or other keys")
    stream_opts(p, jobs=True)
    p.add_argument("--group-by", default="ov,oe", help="comma list from n, ov, oe, connected, nut")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code = args.func(args, out)
    except UsageError as exc:
        print(f"nutkit: error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"nutkit: error: {exc}", file=sys.stderr)
        return 1
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
