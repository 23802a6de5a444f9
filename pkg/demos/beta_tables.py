"""The beta recurrence, its closed forms, and the lattice-path counts behind gamma."""

from cellint.beta import beta_recurrence, catalan, count_N_bruteforce, count_N_formula, gamma_coeff, valid_m

for L in range(2, 10):
    row = "  ".join(f"m={m}: {beta_recurrence(L, m)}" for m in valid_m(L))
    print(f"beta^({L})  {row}")

print()
for s in range(1, 7):
    a = list(range(s))
    print(f"N{tuple(a)} = {count_N_bruteforce(a)}  formula {count_N_formula(a)}  Catalan {catalan(s)}")

print()
for m in range(1, 6):
    print(f"m={m}: gamma_(1,2) = {gamma_coeff(m, (1, 2))}, gamma_(2,1) = {gamma_coeff(m, (2, 1))}")
