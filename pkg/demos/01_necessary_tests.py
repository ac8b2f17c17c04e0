"""
The four eigenvector tests on a one-parameter family
====================================================

T(s) = [[0,7,0],[0,1,s],[0,0,6]] has distinct eigenvalues 0, 1, 6 for
every s, so the eigenvector criteria always apply.  Membership turns out
to depend on s only through |s|, and the family crosses into the UECSM
class exactly on the circle |s| = 5.
"""

import numpy as np

from uecsm import classify, family_member

for s in range(2, 7):
    report = classify(family_member(s))
    print(f"s = {s}: {report.final.value}")

# A closer look at one rejected member and one accepted member.  Each of
# the four tests compares a quantity computed from the eigenvectors of T
# against the same quantity computed from the eigenvectors of T*; the
# witness records the worst mismatch.
for s in (3, 5):
    print(f"\nT(s={s}) test-by-test:")
    report = classify(family_member(s))
    for verdict in report.verdicts:
        line = f"  {verdict.kind:<15} {verdict.outcome.value}"
        w = verdict.witness
        if w is not None and w.indices:
            line += (f"   worst at {w.indices}: "
                     f"{abs(w.left):.6f} vs {abs(w.right):.6f}")
        print(line)

# The rejected 3x3 below fails every single test -- the two eigenvector
# bases have visibly different geometry.
t = np.array([[0, 1, 1], [0, 1, 0], [0, 0, 2]], dtype=complex)
print("\nT = [[0,1,1],[0,1,0],[0,0,2]]:")
report = classify(t)
for verdict in report.verdicts:
    print(f"  {verdict.kind:<15} {verdict.outcome.value}")
print(f"  final: {report.final.value}")

# |det U| != |det V| is the quickest of those failures: the two unit
# eigenvector bases span parallelepipeds of different volume.
w = {v.kind: v for v in report.verdicts}["Parallelepiped"].witness
print(f"  |det U| = {abs(w.left):.9f}  (exact sqrt(2/5) = {np.sqrt(2/5):.9f})")
print(f"  |det V| = {abs(w.right):.9f}  (exact 2/3)")
