"""Command line entry point.

    cellint xi --l 4 --format psi
    cellint verify --suite beta --lmax 10
    cellint oracle --l 5 --method mc --samples 1e7 --seed 42

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
A human-readable table goes to stdout; ``--json`` prints the full report and
``--tsv`` prints one tab-separated line per row instead.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from importlib import metadata

from . import oracle, xi
from .suites import SUITES, Options, run_suites

MAX_SYMBOLIC_L = 12
MAX_NUMERIC_L = 6


def version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "0.1.0"


class UsageError(Exception):
    pass


def _count(s: str) -> int:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}")
    if v != int(v) or v < 1:
        raise argparse.ArgumentTypeError(f"need a positive integer, got {s!r}")
    return int(v)


def _report(command, inputs, outputs, checks, t0, timings=None, seed=None, rng=None) -> dict:
    t = {"total_s": round(time.perf_counter() - t0, 3)}
    t.update(timings or {})
    return {
        "command": command,
        "version": version(),
        "inputs": inputs,
        "outputs": outputs,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
        "timings": t,
        "seed": seed,
        "rng": rng,
    }


def _finite(obj):
    """Replace non-finite floats so the report stays valid JSON."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_finite(v) for v in obj]
    return obj


# -- commands ----------------------------------------------------------------------

def cmd_xi(l: int, fmt: str = "psi", variant: str = "words", with_mc: bool = False,
           samples: int | None = None, seed: int = 0) -> tuple[dict, list[str]]:
    t0 = time.perf_counter()
    limit = MAX_NUMERIC_L if fmt in ("numeric", "all") else MAX_SYMBOLIC_L
    if not 2 <= l <= limit:
        raise UsageError(f"--l must lie in 2..{limit} for format {fmt}")
    outputs: dict = {"l": l}
    checks: list[dict] = []
    lines: list[str] = []
    if fmt in ("psi", "all"):
        p = xi.xi_symbolic(l)
        outputs["psi_form"] = str(p)
        outputs["psi_terms"] = p.to_json()
        ok = p == xi.xi_theorem(l)
        checks.append({"id": "xi/symbolic=theorem", "pass": ok, "residual": 0.0 if ok else 1.0, "tol": 0.0})
        lines.append(str(p))
    if fmt in ("mzv", "all"):
        outputs["mzv_form"] = str(xi.xi_expand_mzv(l, variant))
        lines.append(outputs["mzv_form"])
    rng = None
    if fmt in ("numeric", "all"):
        v = xi.xi_numeric(l, variant=variant)
        s = oracle.xi_series(l)
        outputs["numeric"] = v.to_dict()
        outputs["oracle_series"] = s.to_dict()
        res = abs(v.value - s.value)
        outputs["residuals"] = {"oracle_series": res}
        tol = v.error + s.error + 1e-9 * abs(v.value)
        checks.append({"id": "xi/numeric-vs-series", "pass": res <= tol, "residual": res, "tol": tol})
        lines.append(f"{v.value:.12g} ± {v.error:.1e}")
        if with_mc:
            m = oracle.xi_montecarlo(l, samples, seed)
            outputs["oracle_mc"] = m.to_dict()
            outputs["residuals"]["oracle_mc"] = abs(m.value - v.value)
            checks.append({"id": "xi/numeric-vs-mc", "pass": m.within(v.value), "residual": abs(m.value - v.value),
                           "tol": 3 * m.stderr, "detail": {"zscore": m.zscore(v.value)}})
            rng = m.algorithm
    inputs = {"l": l, "format": fmt, "psi_set": variant}
    return _report("xi", inputs, outputs, checks, t0, seed=seed if with_mc else None, rng=rng), lines


def cmd_verify(suites, opts: Options) -> dict:
    t0 = time.perf_counter()
    checks, timings = run_suites(suites, opts)
    inputs = {"suite": list(suites), "lmax": opts.lmax, "quick": opts.quick, "samples": opts.mc_samples(),
              "workers": opts.workers}
    outputs = {"checks_run": len(checks), "failed": [c["id"] for c in checks if not c["pass"]]}
    return _report("verify", inputs, outputs, checks, t0, timings, seed=opts.seed, rng=oracle.RNG_ALGORITHM)


def cmd_oracle(l: int, method: str = "series", samples: int | None = None, seed: int = 0,
               N: int | None = None, zlobin: bool = False, workers: int = 1) -> dict:
    t0 = time.perf_counter()
    if l < 2:
        raise UsageError("--l must be at least 2")
    if method not in ("series", "mc"):
        raise UsageError(f"unknown method {method!r}")
    checks: list[dict] = []
    rng = None
    if method == "series":
        N = N or oracle.default_series_N()
        est = oracle.zlobin_I(l, "series", N=N) if zlobin else oracle.xi_series(l, oracle.SeriesConfig(N))
        value, error, budget = est.value, est.error, {"N": N}
    else:
        samples = samples or oracle.default_mc_samples()
        if zlobin:
            est = oracle.zlobin_I(l, "mc", samples=samples, seed=seed, workers=workers)
        else:
            est = oracle.xi_montecarlo(l, samples, seed, workers=workers)
        value, error, budget = est.value, est.stderr, {"samples": samples, "chunk": est.chunk}
        rng = est.algorithm
    outputs = {"l": l, "method": method, "estimate": value, "error": error, "budget": budget,
               "seed": seed if method == "mc" else None}
    if zlobin:
        target = oracle.zlobin_exact(l)
        outputs["target"] = {"formula": "(l-1)! zeta(l)", **target.to_dict()}
        res = abs(value - target.value)
        tol = 3 * error if method == "mc" else error + target.error + 1e-9
        checks.append({"id": "oracle/zlobin-vs-exact", "pass": res <= tol, "residual": res, "tol": tol})
    inputs = {"l": l, "method": method, "zlobin": zlobin, "samples": samples, "N": N}
    return _report("oracle", inputs, outputs, checks, t0, seed=seed if method == "mc" else None, rng=rng)


# -- output -----------------------------------------------------------------------

def _table(rows: list[tuple]) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _verify_rows(rep: dict) -> list[tuple]:
    rows = [("check", "status", "residual", "tol")]
    for c in rep["checks"]:
        rows.append((c["id"], "PASS" if c["pass"] else "FAIL", f"{c['residual']:.3g}", f"{c['tol']:.3g}"))
    return rows


def _emit(rep: dict, args, human: list[str]):
    rep = _finite(rep)
    if args.json:
        print(json.dumps(rep, indent=2, sort_keys=True))
    elif args.tsv:
        if rep["command"] == "verify":
            for r in _verify_rows(rep):
                print("\t".join(map(str, r)))
        else:
            for k, v in rep["outputs"].items():
                print(f"{k}\t{json.dumps(v) if isinstance(v, (dict, list)) else v}")
    else:
        print("\n".join(human))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cellint", description="Cellular integrals xi_l and their verification.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {version()}")
    sub = ap.add_subparsers(dest="command", required=True)

    def out_flags(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="print the JSON report")
        g.add_argument("--tsv", action="store_true", help="print tab-separated rows")

    p = sub.add_parser("xi", help="compute xi_l")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--format", choices=("psi", "mzv", "numeric", "all"), default="psi")
    p.add_argument("--psi-set", choices=("words", "compositions"), default="words",
                   help="index set substituted for psi_n (they differ from weight 6 on)")
    p.add_argument("--mc", action="store_true", help="also run the Monte Carlo oracle (numeric formats)")
    p.add_argument("--samples", type=_count, default=None)
    p.add_argument("--seed", type=int, default=0)
    out_flags(p)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), action="append", dest="suites",
                   help="suite to run; repeatable (default: all)")
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--quick", action="store_true", help="smaller sweeps and 10^6 Monte Carlo samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=_count, default=None)
    p.add_argument("--N", type=_count, default=None, help="series cutoff")
    p.add_argument("--workers", type=int, default=1)
    out_flags(p)

    p = sub.add_parser("oracle", help="independent numeric estimate of xi_l or I_l")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--method", choices=("series", "mc"), default="series")
    p.add_argument("--samples", type=_count, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--N", type=_count, default=None, help="series cutoff")
    p.add_argument("--zlobin", action="store_true", help="estimate I_l instead of xi_l")
    p.add_argument("--workers", type=int, default=1)
    out_flags(p)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "xi":
            rep, lines = cmd_xi(args.l, args.format, args.psi_set, args.mc, args.samples, args.seed)
            _emit(rep, args, lines)
        elif args.command == "verify":
            suites = args.suites or ["all"]
            if args.lmax is not None and args.lmax < 2:
                raise UsageError("--lmax must be at least 2")
            opts = Options(args.lmax, args.quick, args.seed, args.samples, max(1, args.workers), args.N)
            rep = cmd_verify(suites, opts)
            summary = f"{sum(c['pass'] for c in rep['checks'])}/{len(rep['checks'])} checks passed"
            _emit(rep, args, [_table(_verify_rows(rep)), summary])
        else:
            rep = cmd_oracle(args.l, args.method, args.samples, args.seed, args.N, args.zlobin, max(1, args.workers))
            o = rep["outputs"]
            lines = [_table([("l", "method", "estimate", "error", "budget")] +
                            [(o["l"], o["method"], f"{o['estimate']:.12g}", f"{o['error']:.2g}", json.dumps(o["budget"]))])]
            if "target" in o:
                lines.append(f"target (l-1)! zeta(l) = {o['target']['value']:.12g}")
            _emit(rep, args, lines)
    except (UsageError, ValueError) as e:
        print(f"cellint: error: {e}", file=sys.stderr)
        return 2
    return 0 if rep["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
