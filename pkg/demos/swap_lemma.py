"""Exchanging the roles of x and y inside a hyperlogarithm with a 1/x letter."""

from cellint.hyperlog import swap_expand, verify_swap
from cellint.words import words_in_I

print(swap_expand("1"))
print()
for m in range(1, 4):
    for w in words_in_I(m):
        r = verify_swap(w, samples=20, seed=0)
        print(f"{str(w):>4}  terms={r['terms']:3d}  residual={r['max_residual']:.1e}  "
              f"opposite sign residual={r['flipped_sign_residual']:.1e}")
