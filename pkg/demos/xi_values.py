"""xi_l for small l: psi form, MZV form and a numeric value with its oracles."""

from cellint.oracle import SeriesConfig, xi_series
from cellint.xi import xi_expand_mzv, xi_numeric, xi_symbolic

for l in range(2, 7):
    print(f"xi_{l} = {xi_symbolic(l)}")
    print(f"     = {xi_expand_mzv(l)}")
    v, s = xi_numeric(l), xi_series(l, SeriesConfig(20000))
    print(f"     = {v}   (series oracle {s})\n")
