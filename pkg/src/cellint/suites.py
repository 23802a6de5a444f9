"""Verification suites behind ``cellint verify``.

Each suite returns a list of check records ``{id, pass, residual, tol,
detail}``. Exact identities report residual 0 and tol 0 when they hold.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import beta as B
from . import gfun, hyperlog, mzv, oracle, ratfun, xi
from .words import Word, words_in_I

SUITES = ("swap", "beta", "n-count", "exactness", "shape-g", "odd-relation", "oracle", "zlobin")


@dataclass
class Options:
    lmax: int | None = None
    quick: bool = False
    seed: int = 0
    samples: int | None = None
    workers: int = 1
    series_N: int | None = None
    extra: dict = field(default_factory=dict)

    def mc_samples(self) -> int:
        if self.samples:
            return self.samples
        return 10**6 if self.quick else oracle.default_mc_samples()


def check(cid: str, ok: bool, residual: float = 0.0, tol: float = 0.0, **detail) -> dict:
    return {"id": cid, "pass": bool(ok), "residual": float(residual), "tol": float(tol), "detail": detail}


def exact(cid: str, ok: bool, **detail) -> dict:
    return check(cid, ok, 0.0 if ok else 1.0, 0.0, **detail)


# -- suites ----------------------------------------------------------------------------

def suite_swap(o: Options) -> list[dict]:
    out = []
    max_w = min(o.lmax or 4, 4)
    words = [w for m in range(1, max_w + 1) for w in words_in_I(m)]
    if o.quick and max_w == 4:
        words = [w for w in words if w.weight < 4] + [w for w in words if w.weight == 4][:5]
    for w in words:
        r = hyperlog.verify_swap(w, samples=20, tol=1e-6, seed=o.seed)
        out.append(check(f"swap/general/{w}", r["pass"], r["max_residual"], r["tol"],
                         samples=r["samples"], flipped_sign_residual=r["flipped_sign_residual"]))
    for w in ("1", "01", "11"):
        r = hyperlog.verify_swap(Word(w), samples=20, tol=1e-5, seed=o.seed, restricted=True)
        out.append(check(f"swap/restricted/{w}", r["pass"], r["max_residual"], r["tol"], samples=r["samples"]))
    return out


def suite_beta(o: Options) -> list[dict]:
    lmax = o.lmax or 12
    out = []
    bad, inhom = [], []
    for L in range(2, lmax + 2):
        for m in B.valid_m(L):
            r = B.beta_recurrence(L, m)
            if not r == B.beta_via_k(L, m) == B.beta_via_partitions(L, m):
                bad.append([L, m])
            if not r.is_homogeneous(L - 1 - m):
                inhom.append([L, m])
    out.append(exact(f"beta/triple-route/l<={lmax}", not bad, failures=bad))
    out.append(exact(f"beta/homogeneity/l<={lmax}", not inhom, failures=inhom))
    for drop in (2, 4, 6):
        fails = [l for l in range(drop + 1, lmax + 1) if B.beta_recurrence(l + 1, l - drop) != B.beta_closed_form(l, drop)]
        out.append(exact(f"beta/closed-form/l-{drop}", not fails, failures=fails))
    lp = min(lmax, 10)
    fails = [list(t) for t in B.valid_product_triples(lp) if not B.verify_product_identity(*t)]
    out.append(exact(f"beta/product-identity/l<={lp}", not fails, failures=fails))
    return out


def suite_ncount(o: Options) -> list[dict]:
    out = []
    sweeps = [(5, 6)] if o.quick else [(5, 6), (6, 6)]
    for smax, amax in sweeps:
        n, fails = 0, []
        for s in range(1, smax + 1):
            for a in itertools.combinations_with_replacement(range(amax + 1), s):
                n += 1
                if B.count_N_formula(a) != B.count_N_bruteforce(a):
                    fails.append(list(a))
        out.append(exact(f"n-count/formula/s<={smax},a<={amax}", not fails, cases=n, failures=fails[:20]))
    fails = [s for s in range(1, 9) if B.count_N_bruteforce(tuple(range(s))) != B.catalan(s)]
    out.append(exact("n-count/catalan/s<=8", not fails, failures=fails))
    fails = [m for m in range(1, 11) if B.gamma_coeff(m, (1, 2)) != m * (m + 3) // 2]
    out.append(exact("n-count/gamma(1,2)/m<=10", not fails, failures=fails))
    fails = [m for m in range(1, 11) if B.gamma_coeff(m, (2, 1)) != m * (m + 7) // 2]
    out.append(exact("n-count/gamma(2,1)/m<=10", not fails, failures=fails))
    return out


def suite_exactness(o: Options) -> list[dict]:
    lmax = o.lmax or 7
    out = []
    for l in range(2, lmax + 1):
        t0 = time.perf_counter()
        ok = ratfun.exactness_check(l)
        out.append(exact(f"exactness/d-alpha/l={l}", ok, expect="omega" if l % 2 else "0",
                         seconds=round(time.perf_counter() - t0, 3)))
        out.append(exact(f"exactness/telescoping/l={l}", ratfun.telescoping_check(l)))
    for l in range(3, min(lmax, 5) + 1):
        phi = ratfun.random_monomial_form(l, l - 2, seed=o.seed)
        out.append(exact(f"exactness/dd=0/l={l}", ratfun.exterior_derivative(ratfun.exterior_derivative(phi)).is_zero()))
    for n in (5, 6) if o.quick else (5, 6, 7, 8):
        r = ratfun.divisor_sweep(n)
        if n % 2:
            ok = r["min_order"] == -1
        else:
            ok = r["min_order"] == -2 and r["unique_alternating"]
        out.append(exact(f"exactness/divisor-orders/n={n}", ok, min_order=r["min_order"],
                         partitions=r["partitions"], argmin=r["argmin"][:4]))
    return out


def suite_shape_g(o: Options) -> list[dict]:
    out = []
    for l in range(2, 6):
        worst = 0.0
        for x in (0.2, 0.5, 0.8):
            worst = max(worst, abs(gfun.g_numeric(l, x).value - gfun.g_formula(l, x).value))
        out.append(check(f"shape-g/g-formula/l={l}", worst < 1e-4, worst, 1e-4))
    lmax = o.lmax or 8
    r = gfun.alpha_recursion(lmax + 1).collapse_report()
    out.append(exact(f"shape-g/alpha-collapse/l<={lmax}", r["pass"], **r))
    for l in range(1, 5):
        sym, val = gfun.integral_g(l + 1)
        q = gfun.tower_integral("G", l + 1)
        res = abs(val.value - q.value)
        out.append(check(f"shape-g/integral-g/l={l}", res < 1e-4, res, 1e-4, psi_form=str(sym)))
    fails = [l for l in range(1, lmax + 1) if not gfun.xi_closure_check(l)]
    out.append(exact(f"shape-g/xi-closure/l<={lmax}", not fails, failures=fails))
    return out


def suite_odd_relation(o: Options) -> list[dict]:
    lmax = o.lmax or 12
    out = []
    fails = [m for m in range(1, 6) if not xi.verify_odd_relation(m)]
    out.append(exact("odd-relation/exact/m<=5", not fails, failures=fails))
    fails = [l for l in range(2, lmax + 1) if xi.xi_symbolic(l) != xi.xi_theorem(l)]
    out.append(exact(f"odd-relation/symbolic=theorem/l<={lmax}", not fails, failures=fails))
    fails = [l for l in range(2, 14) if not xi.xi_symbolic(l).is_homogeneous(xi.expected_grade(l))]
    out.append(exact("odd-relation/weight-purity/n<=6", not fails, failures=fails))
    for l, target in ((2, 1.6449340668), (3, 3.2898681337)):
        v = xi.xi_numeric(l)
        res = abs(v.value - target)
        out.append(check(f"odd-relation/xi{l}-value", res < 1e-6, res, 1e-6, value=v.value))
    return out


def suite_oracle(o: Options) -> list[dict]:
    out = []
    N = o.series_N or oracle.default_series_N()
    for l in range(2, 7):
        s = oracle.xi_series(l, oracle.SeriesConfig(N))
        v = xi.xi_numeric(l)
        res = abs(s.value - v.value)
        out.append(check(f"oracle/series-vs-numeric/l={l}", res < 2e-3, res, 2e-3,
                         series=s.to_dict(), numeric=v.to_dict()))
    n = o.mc_samples()
    for l in range(2, 7):
        m = oracle.xi_montecarlo(l, n, o.seed, workers=o.workers)
        v = xi.xi_numeric(l)
        z = m.zscore(v.value)
        out.append(check(f"oracle/mc-vs-numeric/l={l}", abs(z) <= 3.0, abs(m.value - v.value), 3.0 * m.stderr,
                         zscore=z, mc=m.to_dict()))
    return out


def suite_zlobin(o: Options) -> list[dict]:
    out = []
    for l in range(2, 6):
        s = oracle.zlobin_I(l, "series", N=o.series_N)
        e = oracle.zlobin_exact(l)
        res = abs(s.value - e.value)
        tol = s.error + e.error + 1e-9
        out.append(check(f"zlobin/series/l={l}", res <= tol, res, tol, exact=e.value))
    n = o.mc_samples()
    for l in range(2, 5):
        m = oracle.zlobin_I(l, "mc", samples=n, seed=o.seed, workers=o.workers)
        e = oracle.zlobin_exact(l)
        z = m.zscore(e.value)
        out.append(check(f"zlobin/mc/l={l}", abs(z) <= 3.0, abs(m.value - e.value), 3.0 * m.stderr,
                         zscore=z, mc=m.to_dict()))
    return out


RUNNERS = {
    "swap": suite_swap,
    "beta": suite_beta,
    "n-count": suite_ncount,
    "exactness": suite_exactness,
    "shape-g": suite_shape_g,
    "odd-relation": suite_odd_relation,
    "oracle": suite_oracle,
    "zlobin": suite_zlobin,
}


def run_suites(names, opts: Options) -> tuple[list[dict], dict]:
    """Run suites (in parallel when ``opts.workers > 1``); checks sorted by id."""
    names = list(SUITES) if "all" in names else list(names)
    for n in names:
        if n not in RUNNERS:
            raise ValueError(f"unknown suite {n!r}")

    def timed(name):
        t0 = time.perf_counter()
        res = RUNNERS[name](opts)
        return name, res, time.perf_counter() - t0

    if opts.workers > 1:
        with ThreadPoolExecutor(opts.workers) as ex:
            results = list(ex.map(timed, names))
    else:
        results = [timed(n) for n in names]
    checks = sorted((c for _, res, _ in results for c in res), key=lambda c: c["id"])
    timings = {name: round(dt, 3) for name, _, dt in results}
    return checks, timings
