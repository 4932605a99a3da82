"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call each backend directly on the same inputs and check that
the answers agree.  The search timing runs a fresh interpreter per backend,
since the backend is chosen once at import.
"""

import argparse
import os
import random
import subprocess
import sys
import time

from turansq.constructions import E, Tmatch, build, square_path
from turansq.containment import Pattern
from turansq.graph import from_edges
from turansq.kernels import get_backend

SEARCH_SNIPPET = (
    "import time; from turansq.containment import parse_pattern; "
    "from turansq.search import search_max_edges; "
    "t = time.perf_counter(); r = search_max_edges({n}, parse_pattern('{sel}')); "
    "print(r.max_edges, r.nodes_explored, time.perf_counter() - t)"
)


def random_graphs(count, n, p, seed=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        out.append(from_edges(n, edges))
    return out


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def bench_canon(backends, repeat):
    graphs = random_graphs(300, 12, 0.5) + [build(Tmatch(8, 16)), build(E(7, 14))] * 20
    cases = [(g.n, list(g.rows)) for g in graphs]
    results = {}
    for name, mod in backends.items():
        sec, labs = timed(lambda: [mod.canon_label(n, rows, None)[1] for n, rows in cases],
                          repeat)
        results[name] = (sec, labs)
    return "canon_label (340 graphs, n <= 16)", results


def bench_embedding(backends, repeat):
    pat = Pattern(build(square_path(6)))
    plan = pat._global
    hosts = random_graphs(400, 14, 0.45, seed=2) + [build(E(7, 14))] * 50
    results = {}
    for name, mod in backends.items():
        def run():
            return [mod.find_embedding(list(h.rows), pat.k, plan.order, plan.back, plan.pdeg)
                    is not None for h in hosts]
        results[name] = timed(run, repeat)
    return "find_embedding (P6^2 into 450 hosts, n = 14)", results


def bench_search(names, n, sel):
    results = {}
    for name in names:
        env = dict(os.environ, TURANSQ_BACKEND=name)
        proc = subprocess.run([sys.executable, "-c", SEARCH_SNIPPET.format(n=n, sel=sel)],
                              env=env, capture_output=True, text=True, check=True)
        value, nodes, sec = proc.stdout.split()
        results[name] = (float(sec), (int(value), int(nodes)))
    return f"search_max_edges({sel}, n = {n})", results


def report(title, results):
    print(title)
    answers = {repr(r[1]) for r in results.values()}
    base = results.get("python", (None,))[0]
    for name, (sec, _) in results.items():
        speed = f"  x{base / sec:.1f}" if base and name != "python" else ""
        print(f"  {name:<7} {sec * 1000:9.1f} ms{speed}")
    print(f"  answers agree: {len(answers) == 1}")
    return len(answers) == 1


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = {"python": get_backend("python")}
    try:
        backends["cython"] = get_backend("cython")
    except ImportError as exc:
        print(f"note: {exc}")

    ok = True
    ok &= report(*bench_canon(backends, args.repeat))
    ok &= report(*bench_embedding(backends, args.repeat))
    for n, sel in ((14, "square-path:6"), (14, "flat-tetra")):
        ok &= report(*bench_search(list(backends), n, sel))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
