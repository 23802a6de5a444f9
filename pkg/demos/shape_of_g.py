"""G_l(1, x) by nested quadrature against its closed shape, and the alpha-table collapse."""

from cellint.gfun import AlphaTable, g_formula, g_numeric, integral_g, tower_integral

for l in range(2, 6):
    for x in (0.2, 0.5, 0.8):
        a, b = g_numeric(l, x), g_formula(l, x)
        print(f"G_{l}(1,{x}) quadrature {a.value:.12f}  closed form {b.value:.12f}  diff {abs(a.value - b.value):.1e}")

print()
for L in range(2, 6):
    sym, val = integral_g(L)
    print(f"int G_{L} = {sym} = {val.value:.10f}   quadrature {tower_integral('G', L).value:.10f}")

print()
print(AlphaTable(8).collapse_report())
