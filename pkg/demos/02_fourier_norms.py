"""Fourier-algebra norms on Z6 and S3, including the two witness functions
whose norms change by exactly sqrt(2) between the groups.

Run with:  python demos/02_fourier_norms.py
"""

import numpy as np

import fourierdist as fd

z6 = fd.make_cyclic(6)
s3 = fd.make_symmetric(3)
t6 = fd.irrep_table_for(z6)
t3 = fd.irrep_table_for(s3)

# A function is specified by expansion coefficients against the six cyclic
# characters; the same values are read on S3 through the index identification.
for coeffs, label in ([0, 1, 1, 0, 1, -1], "(0,1,1,0,1,-1)"), \
                     ([0, 1, 0, 0, 0, 0], "first character"):
    f6 = fd.function_from_cyclic_coeffs(z6, coeffs)
    f3 = fd.function_from_cyclic_coeffs(s3, coeffs)
    n6 = fd.a_norm(f6, t6)
    n3 = fd.a_norm(f3, t3)
    print(f"coefficients {label}: ||f||_A(Z6) = {n6:.6f}, "
          f"||f||_A(S3) = {n3:.6f}, ratio = {n3 / n6:.6f}")

# The norm is the exact dual of the operator norm on the group von Neumann
# algebra: random elements of the unit ball never beat it, and an optimized
# element attains it.
rng = np.random.default_rng(0)
f = fd.AFunction(s3, rng.standard_normal(6) + 1j * rng.standard_normal(6))
norm = fd.a_norm(f, t3)
best_random = 0.0
for _ in range(2000):
    x = fd.GroupAlgebraElement(s3, rng.standard_normal(6) + 1j * rng.standard_normal(6))
    best_random = max(best_random, abs(fd.pairing(x, f)) / fd.vn_norm(x, t3))
attained, witness = fd.dual_norm_witness(f, t3)
print(f"\nrandom f on S3: ||f||_A = {norm:.9f}")
print(f"  best of 2000 random unit-ball pairings = {best_random:.9f}")
print(f"  optimized pairing                     = {attained:.9f}")

# Four translations with signs +,+,-,- always have operator norm 0 or at
# least sqrt(2); here is the exhaustive picture on Z6.
values = set()
for quad in np.ndindex(6, 6, 6, 6):
    c = np.zeros(6, dtype=complex)
    c[quad[0]] += 1; c[quad[1]] += 1; c[quad[2]] -= 1; c[quad[3]] -= 1
    values.add(round(fd.vn_norm(fd.GroupAlgebraElement(z6, c), t6), 9))
print("\ndistinct four-translation norms on Z6:", sorted(values))
