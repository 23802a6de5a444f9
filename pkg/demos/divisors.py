"""Exactness of alpha_l and pole orders of omega_l along boundary divisors."""

from cellint.ratfun import divisor_sweep, exactness_check, telescoping_check

for l in range(2, 8):
    kind = "omega_l" if l % 2 else "0"
    print(f"l={l}: d alpha_l = {kind}: {exactness_check(l)}   telescoping: {telescoping_check(l)}")

print()
for n in range(5, 9):
    r = divisor_sweep(n)
    print(f"n={n} (l={r['l']}): {r['partitions']} partitions, min order {r['min_order']}, "
          f"attained at {len(r['argmin'])} partition(s)")
