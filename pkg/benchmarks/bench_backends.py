"""Compare the compiled tanh-sinh kernels against the pure-Python twin.

The backend is fixed at import time, so each timing runs in a child
interpreter with EULERGAMMA_BACKEND set.  Usage:

    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --repeats 9
"""

import argparse
import json
import math
import os
import subprocess
import sys
import time


def workloads():
    from eulergamma import (
        beta_integral,
        default_grid,
        euler_symbol,
        gamma_integral,
        integrate_finite,
        run_suite,
    )

    cos = math.cos
    return [
        ("gamma_integral(7.3)", 200, lambda: gamma_integral(7.3)),
        ("beta_integral(1.5, 1.5)", 200, lambda: beta_integral(1.5, 1.5)),
        ("euler_symbol(3, 2, 5)", 200, lambda: euler_symbol(3.0, 2.0, 5)),
        # Generic callable: every node crosses back into Python, so the
        # compiled loop only saves the node arithmetic.
        ("integrate_finite(cos, 0, 2)", 200,
         lambda: integrate_finite(cos, 0.0, 2.0)),
        ("run_suite(default_grid())", 1,
         lambda: run_suite(default_grid())),
    ]


def run_worker(repeats):
    from eulergamma import BACKEND

    results = {"backend": BACKEND, "timings": {}}
    for name, inner, fn in workloads():
        fn()  # warm up
        best = math.inf
        for _ in range(repeats):
            start = time.perf_counter()
            for _ in range(inner):
                fn()
            best = min(best, (time.perf_counter() - start) / inner)
        results["timings"][name] = best
    json.dump(results, sys.stdout)
    return 0


def time_backend(backend, repeats):
    env = dict(os.environ, EULERGAMMA_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, __file__, "--worker", "--repeats", str(repeats)],
        capture_output=True, text=True, env=env,
    )
    if proc.returncode != 0:
        return None, proc.stderr.strip()
    return json.loads(proc.stdout), None


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats per workload (best is kept)")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.worker:
        return run_worker(args.repeats)

    results = {}
    for backend in ("python", "compiled"):
        data, err = time_backend(backend, args.repeats)
        if data is None:
            print(f"{backend}: unavailable ({err})", file=sys.stderr)
        else:
            results[backend] = data["timings"]

    if "python" not in results:
        print("pure-Python backend failed to run; nothing to compare",
              file=sys.stderr)
        return 1

    names = [name for name, _, _ in workloads()]
    width = max(len(name) for name in names)
    have_compiled = "compiled" in results

    header = f"{'workload':<{width}}  {'python':>12}"
    if have_compiled:
        header += f"  {'compiled':>12}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name in names:
        py = results["python"][name]
        line = f"{name:<{width}}  {py * 1e3:>10.3f}ms"
        if have_compiled:
            cy = results["compiled"][name]
            line += f"  {cy * 1e3:>10.3f}ms  {py / cy:>7.2f}x"
        print(line)
    if not have_compiled:
        print("\ncompiled backend unavailable; install with a C compiler to compare")
    return 0


if __name__ == "__main__":
    sys.exit(main())
