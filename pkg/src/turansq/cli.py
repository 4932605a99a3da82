"""Command-line front end.

    turansq construct --family E --i 4 --n 8 --format graph6
    turansq check --host-family Tmatch --i 4 --n 8 --pattern square-path:6
    turansq search --pattern flat-tetra --n 4..9
    turansq verify --claim thm7 --n 6..9
    turansq conjecture --k 6 --n 6..20

Integer options accept ``a..b`` (inclusive) and comma lists.  Results go to
stdout, diagnostics to stderr.  Exit status is 2 on usage errors; ``verify``
exits 1 when the report fails or a search was cut short.
"""

from __future__ import annotations

import argparse
import inspect
import itertools
import json
import os
import sys
from collections.abc import Sequence

from .constructions import FAMILY_BUILDERS, build, vertex_names
from .containment import contains_subgraph, parse_pattern
from .errors import SearchLimitExceeded, TuranError
from .formulas import conjecture_bound
from .graph import Graph, decode_graph6, encode_graph6
from .search import SearchConfig, enumerate_free_at, search_max_edges
from .verify import CLAIMS, conjecture_row, verify_claim

THREADS_ENV = "TURANSQ_THREADS"


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"3..7"`` or ``"3,5,8..9"`` to a list of integers."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                a, b = part.split("..", 1)
                lo, hi = int(a), int(b)
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad integer or range {part!r} (expected a..b)") from None
    return out


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise UsageError(f"{THREADS_ENV} must be >= 1")
    return value


def _config(args, collect: bool = True) -> SearchConfig:
    threads = args.threads if args.threads is not None else _default_threads()
    if threads < 1:
        raise UsageError("--threads must be >= 1")
    return SearchConfig(threads=threads, seed=getattr(args, "seed", None),
                        node_limit=args.node_limit, collect_extremal=collect)


_PARAMS = ("i", "j", "n", "k", "l", "t", "a", "b", "r")


def _family_specs(family: str, args) -> list:
    if family not in FAMILY_BUILDERS:
        raise UsageError(f"unknown family {family!r}; known: {', '.join(FAMILY_BUILDERS)}")
    fn = FAMILY_BUILDERS[family]
    names = list(inspect.signature(fn).parameters)
    values = []
    for name in names:
        raw = getattr(args, name, None)
        if raw is None:
            raise UsageError(f"family {family} needs --{name}")
        values.append(parse_range(raw))
    for name in _PARAMS:
        if name not in names and getattr(args, name, None) is not None:
            raise UsageError(f"family {family} takes no --{name}")
    return [fn(*combo) for combo in itertools.product(*values)]


def to_dot(g: Graph, names: Sequence[str] | None = None, title: str = "G") -> str:
    names = names or [f"v{v + 1}" for v in range(g.n)]
    lines = [f'graph "{title}" {{']
    lines += [f'  {v} [label="{names[v]}"];' for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines)


def _graph_json(g: Graph, label: str) -> str:
    return json.dumps({"spec": label, "n": g.n, "m": g.m, "graph6": encode_graph6(g),
                       "edges": [list(e) for e in g.edges()]})


def cmd_construct(args, out) -> int:
    for spec in _family_specs(args.family, args):
        g = build(spec)
        if args.format == "graph6":
            print(encode_graph6(g), file=out)
        elif args.format == "dot":
            print(to_dot(g, vertex_names(spec), str(spec)), file=out)
        else:
            print(_graph_json(g, str(spec)), file=out)
    return 0


def cmd_check(args, out) -> int:
    if (args.host_family is None) == (args.host_g6 is None):
        raise UsageError("give exactly one of --host-family and --host-g6")
    if args.host_g6 is not None:
        hosts = [(args.host_g6, decode_graph6(args.host_g6))]
    else:
        hosts = [(str(s), build(s)) for s in _family_specs(args.host_family, args)]
    pattern = parse_pattern(args.pattern)
    for label, host in hosts:
        emb = contains_subgraph(host, pattern)
        witness = None if emb is None else {str(p): h for p, h in enumerate(emb)}
        if args.format == "json":
            print(json.dumps({"host": label, "pattern": pattern.name,
                              "contained": emb is not None, "witness": witness}), file=out)
        else:
            print("contained" if emb is not None else "free", file=out)
            if witness is not None:
                print(json.dumps(witness), file=out)
    return 0


def cmd_search(args, out) -> int:
    pattern = parse_pattern(args.pattern)
    cfg = _config(args, collect=not args.no_extremal)
    status = 0
    for n in parse_range(args.n):
        try:
            if args.edges is not None:
                for m in parse_range(args.edges):
                    forms = enumerate_free_at(n, pattern, m, cfg)
                    print(json.dumps({"n": n, "pattern": pattern.name, "m": m,
                                      "classes": [f.graph6 for f in forms]}), file=out)
                continue
            res = search_max_edges(n, pattern, cfg)
        except SearchLimitExceeded as exc:
            print(f"search n={n}: {exc}", file=sys.stderr)
            if args.edges is None:
                print(json.dumps(exc.partial.to_dict(not args.no_timing)), file=out)
            status = 1
            continue
        print(json.dumps(res.to_dict(not args.no_timing)), file=out)
        out.flush()
    return status


def cmd_verify(args, out) -> int:
    ns = parse_range(args.n) if args.n else None
    ls = parse_range(args.l) if args.l else None
    rs = parse_range(args.r) if args.r else None
    ks = parse_range(args.k) if args.k else None
    report = verify_claim(args.claim, ns, ls=ls, rs=rs, ks=ks, cfg=_config(args))
    print(report.to_json(not args.no_timing, indent=2 if args.pretty else None), file=out)
    if not report.exact:
        print("verify: a search hit the node limit; report is inexact", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_conjecture(args, out) -> int:
    rows = []
    for k in parse_range(args.k):
        for n in parse_range(args.n):
            b = conjecture_bound(k, n)
            known = None
            if k <= 6:
                row = conjecture_row(k, n)
                known = row.search
            gap = None if known is None else b.value - known
            rows.append({"k": k, "n": n, "bound": str(b.value), "argmax_i": b.argmax_i,
                         "known_ex": known, "gap": None if gap is None else str(gap)})
    if args.format == "json":
        for row in rows:
            print(json.dumps(row), file=out)
    else:
        print("k\tn\tbound\targmax_i\tknown_ex\tgap", file=out)
        for r in rows:
            fields = [r["k"], r["n"], r["bound"], r["argmax_i"], r["known_ex"], r["gap"]]
            print("\t".join("-" if f is None else str(f) for f in fields), file=out)
    return 0


def _add_params(p: argparse.ArgumentParser) -> None:
    for name in _PARAMS:
        p.add_argument(f"--{name}", metavar="INT|A..B")


def _add_search_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, help=f"worker processes (default ${THREADS_ENV} or 1)")
    p.add_argument("--node-limit", type=int, help="abort after this many search nodes")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turansq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named graph family")
    p.add_argument("--family", required=True, help=", ".join(FAMILY_BUILDERS))
    _add_params(p)
    p.add_argument("--format", choices=("graph6", "dot", "json"), default="graph6")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test a host graph for a forbidden subgraph")
    p.add_argument("--host-family")
    p.add_argument("--host-g6")
    _add_params(p)
    p.add_argument("--pattern", required=True,
                   help="square-path:<k>, flat-tetra, t-prime, clique:<n>, path:<l>, g6:<s>")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exact ex(n, H) with all extremal graphs")
    p.add_argument("--pattern", required=True)
    p.add_argument("--n", required=True, metavar="INT|A..B")
    p.add_argument("--edges", metavar="INT|A..B",
                   help="list every H-free class with exactly this many edges instead")
    p.add_argument("--seed", type=int, help="known lower bound on ex(n, H)")
    p.add_argument("--no-extremal", action="store_true", help="report the value only")
    _add_search_opts(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a stated result; exit 0 iff it passes")
    p.add_argument("--claim", required=True, choices=list(CLAIMS))
    p.add_argument("--n", metavar="INT|A..B")
    p.add_argument("--l", metavar="INT|A..B", help="path orders (erdos-gallai, faudree-schelp)")
    p.add_argument("--r", metavar="INT|A..B", help="path lengths (lemma12)")
    p.add_argument("--k", metavar="INT|A..B", help="squared-path orders (conjecture-consistency)")
    p.add_argument("--pretty", action="store_true")
    _add_search_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="tabulate the conjectured bound")
    p.add_argument("--k", required=True, metavar="INT|A..B")
    p.add_argument("--n", required=True, metavar="INT|A..B")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, TuranError, ValueError) as exc:
        print(f"turansq {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
