"""
Three passing tests are not enough
==================================

The Angle, Grammian and Parallelepiped tests compare pairwise moduli,
Gram spectra and basis volumes.  All three are necessary conditions, and
this 4x4 integer matrix satisfies every one of them -- yet it is not in
the class.  Only the triple-product (cocycle) test catches it, which is
why that test is the decisive one.
"""

import numpy as np

from uecsm import build_beta, classify, compute_spectral_data, gram_pair

t = np.array([
    [5, 0, -1, 3],
    [2, 4, 1, 2],
    [2, -2, 6, -2],
    [0, -2, 1, 4],
], dtype=complex)
print("T =")
print(np.real(t).astype(int))

report = classify(t)
print("\nspectrum:", np.round(report.spectrum, 6))
for verdict in report.verdicts:
    print(f"  {verdict.kind:<15} {verdict.outcome.value}")
print(f"final: {report.final.value}")

# The two Gram matrices are even unitarily equivalent -- identical
# spectra -- so no pairwise or spectral comparison can tell them apart.
sd = compute_spectral_data(t)
gu, gv = gram_pair(sd)
print("\nGram spectrum (u-basis):", np.round(np.sort(np.linalg.eigvalsh(gu)), 6))
print("Gram spectrum (v-basis):", np.round(np.sort(np.linalg.eigvalsh(gv)), 6))
print("|det U| =", f"{abs(np.linalg.det(sd.u_basis)):.9f}")
print("|det V| =", f"{abs(np.linalg.det(sd.v_basis)):.9f}",
      f" (both 2/(5 sqrt 3) = {2 / (5 * np.sqrt(3)):.9f})")

# The failing triple product, straight from the report.
w = {v.kind: v for v in report.verdicts}["StrongAngle"].witness
print(f"\nworst triple {w.indices}:")
print(f"  u-side product {np.round(complex(w.left), 9)}")
print(f"  v-side product {np.round(complex(w.right), 9)} (conjugated)")
print(f"  discrepancy    {w.discrepancy:.9f}"
      f"  (exact (4/75) sqrt 5 = {(4 / 75) * np.sqrt(5):.9f})")

# Diagnostic: for a member, the ratio matrix beta is rank one.  Here it
# has full rank -- there is no unimodular alpha to factor it.
beta = build_beta(sd)
print("\nbeta eigenvalues:", np.round(np.sort(np.linalg.eigvalsh(beta.entries)), 5))
print("rank:", np.linalg.matrix_rank(beta.entries), "(rank one required)")
