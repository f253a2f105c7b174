"""Randomized falsification runs for the quantitative matrix lemmas, and the
empirical scatter linking distortion excess to Jordan defect.

Run with:  python demos/05_lemma_suite.py
"""

import numpy as np

import fourierdist as fd

# Both 2x2 block lemmas bound how far an operator can sit from a product of
# unitaries once the block norm is close to sqrt(2).  Random and adversarial
# search never finds a violation; the worst margins approach 0 from above.
for dim in (2, 4, 8):
    inv = fd.verify_invmult(dim, trials=5000, seed=1)
    unit = fd.verify_unitmult(dim, trials=5000, seed=1)
    print(f"dim {dim}: inverse-block worst margin {inv.worst_margin:.3e} "
          f"(adversarial {inv.meta['worst_margin_adversarial']:.3e}), "
          f"product-block worst margin {unit.worst_margin:.3e}")

# The norm gap on translations: exhaustive four-term dichotomy plus random
# Euclidean lower bounds.
for label in ("Z6", "S3", "D4"):
    g = fd.parse_group_spec(label)
    report = fd.verify_norm_gap(g, fd.irrep_table_for(g), random_trials=5000, seed=2)
    print(f"{label}: four-term minimum above zero = "
          f"{report.meta['four_term_nonzero_min']:.9f}, "
          f"zero-case maximum = {report.meta['four_term_zero_max']:.2e}")

# Distortion excess against Jordan defect across a small corpus of maps:
# isomorphisms sit at (0, 0); every genuinely twisted map observed so far
# needs distortion at least 2 as soon as its defect reaches sqrt(2).
z6 = fd.make_cyclic(6)
s3 = fd.make_symmetric(3)
t6 = fd.irrep_table_for(z6)
t3 = fd.irrep_table_for(s3)
homs = [fd.induced_hom(t6, t6, np.arange(6)),
        fd.induced_hom(t6, t3, np.arange(6)),
        fd.induced_hom(t6, t3, np.array([0, 1, 2, 3, 5, 4])),
        fd.induced_hom(t6, t3, np.array([0, 2, 1, 3, 4, 5]))]
est = fd.estimate_jordan_rho(eta_grid=[0.25, 0.5, 1.0, 1.4], homs=homs, seed=3)
print("\n(distortion - 1, defect) scatter:")
for excess, defect in est.points:
    print(f"  ({excess:.6f}, {defect:.6f})")
print("eta  largest excess with defect >= eta   binding minimum   count")
for row in est.rows:
    print(f"  {row['eta']:.2f}  {row['largest_excess']}   {row['min_excess']}   "
          f"{row['count']}")
