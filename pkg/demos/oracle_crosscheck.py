"""Series and Monte Carlo estimates of xi_l and of the Zlobin integrals.

The xi integrand is heavy tailed near (1, ..., 1); watch the z-scores grow with l.
"""

from cellint.oracle import SeriesConfig, xi_montecarlo, xi_series, zlobin_I, zlobin_exact
from cellint.xi import xi_numeric

for l in range(2, 7):
    target = xi_numeric(l).value
    s = xi_series(l, SeriesConfig(20000))
    mc = xi_montecarlo(l, 10**6, seed=0)
    print(f"xi_{l}: symbolic {target:.10f}  series {s}  MC {mc.value:.5f} ± {mc.stderr:.5f} (z={mc.zscore(target):+.2f})")

print()
for l in (2, 3, 4):
    e = zlobin_exact(l)
    print(f"I_{l}: (l-1)! zeta(l) = {e.value:.10f}  series {zlobin_I(l, 'series')}  "
          f"MC z={zlobin_I(l, 'mc', samples=10**6).zscore(e.value):+.2f}")
