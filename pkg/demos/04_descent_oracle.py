"""
A derivative-based second opinion
=================================

The eigenvector criteria need distinct eigenvalues.  The descent oracle
does not: it minimizes h(Q) = 0.5 * ||M - M^t||_F^2 over the unitary
group, where M = Q* T Q.  Reaching (numerically) zero exhibits a
symmetric matrix in the unitary orbit; stalling at a clearly nonzero
value after many restarts is strong evidence there is none.
"""

import numpy as np

from uecsm import (
    brute_force_uecsm,
    classify,
    find_fixture,
    nilpotent3_verdict,
    tener_applicable,
)


def nilpotent(a, b):
    return np.array([[0, a, 0], [0, 0, b], [0, 0, 0]], dtype=complex)


# Nilpotent 3x3 matrices have eigenvalue 0 three times, so the
# eigenvector machinery declines them outright.
t_yes = nilpotent(18, 18j)
t_no = nilpotent(18, 9j)
report = classify(t_yes)
print("criteria on [[0,18,0],[0,0,18i],[0,0,0]]:", report.final.value,
      f"({report.not_applicable.reason})")

# The cross-Gramian test still applies to these rows (its applicability
# condition lives on the Cartesian parts A and B, not on T itself).
applicable, why = tener_applicable(t_yes)
print("cross-Gramian test applicable:", applicable, f"({why})")

# For this specific shape there is a closed form: membership holds
# exactly when ab = 0 or |a| = |b|.
print("\nclosed form: (18, 18i) ->", nilpotent3_verdict(18, 18j))
print("closed form: (18,  9i) ->", nilpotent3_verdict(18, 9j))

# The oracle reproduces both verdicts from raw descent.
for label, t in [("(18, 18i)", t_yes), ("(18,  9i)", t_no)]:
    verdict = brute_force_uecsm(t, restarts=16)
    print(f"oracle {label}: {verdict.outcome.value:<9} "
          f"best residual {verdict.best_residual:.3e} "
          f"after {verdict.restarts_used} restart(s)")

# The objective is unitarily invariant, so hiding the same matrices
# behind a random unitary changes nothing.
rng = np.random.default_rng(7)
x = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
q, _ = np.linalg.qr(x)
for label, t in [("rotated yes-case", t_yes), ("rotated no-case", t_no)]:
    verdict = brute_force_uecsm(q.conj().T @ t @ q, restarts=16)
    print(f"oracle {label}: {verdict.outcome.value:<9} "
          f"best residual {verdict.best_residual:.3e}")

# On a symmetric input the very first start (the identity) certifies
# membership immediately.
g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
sym = (g + g.T) / 2
verdict = brute_force_uecsm(sym, restarts=16)
print("\nsymmetric input:", verdict.outcome.value,
      f"(restarts used: {verdict.restarts_used})")

# Some matrices evade the criteria AND the cross-Gramian test; then raw
# descent is the only tool standing.
m = find_fixture("table3-row1").matrix()
print("\n4x4 with eigenvalue 0 of multiplicity 3:")
print("  criteria:", classify(m).final.value)
print("  cross-Gramian applicable:", tener_applicable(m)[0])
verdict = brute_force_uecsm(m, restarts=16)
print(f"  oracle: {verdict.outcome.value} "
      f"(best residual {verdict.best_residual:.3e})")
