"""Reference matrices with known UECSM status, used by tests and the CLI.

The corpus collects the worked examples this implementation is calibrated
against: a one-parameter triangular family where exactly one member is
UECSM, a small matrix rejected by every necessary test, a matrix whose
symmetric unitary S is known in closed form, a 4x4 integer matrix that
defeats all three necessary tests but not the strong angle test, and three
tables of paired Yes/No examples (including nilpotent and repeated-spectrum
cases that the eigenvector criteria must decline).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Fixture:
    label: str
    entries: tuple[tuple[complex, ...], ...]
    expected_final: str                     # classify: UECSM | NotUECSM | NotApplicable
    oracle_expected: bool | None = None     # published verdict where the oracle applies
    tener: bool | None = None               # expected tener_applicable flag
    nilpotent_ab: tuple[complex, complex] | None = None
    notes: str = ""

    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.complex128)


def _rows(m) -> tuple[tuple[complex, ...], ...]:
    return tuple(tuple(complex(x) for x in row) for row in m)


def family_member(s: complex) -> np.ndarray:
    """[[0,7,0],[0,1,s],[0,0,6]]; UECSM exactly when |s| = 5."""
    return np.array([[0, 7, 0], [0, 1, s], [0, 0, 6]], dtype=np.complex128)


FAMILY = tuple(
    Fixture(
        label=f"family-s{s}",
        entries=_rows(family_member(s)),
        expected_final="UECSM" if s == 5 else "NotUECSM",
        notes="triangular family [[0,7,0],[0,1,s],[0,0,6]]",
    )
    for s in (2, 3, 4, 5, 6)
)

NECESSARY_FAIL = (
    Fixture(
        label="necessary-tests-fail",
        entries=_rows([[0, 1, 1], [0, 1, 0], [0, 0, 2]]),
        expected_final="NotUECSM",
        notes="|det U| = sqrt(2/5) vs |det V| = 2/3; angle pair (1,2) is "
              "1/sqrt(2) vs 2/3",
    ),
)

CLOSED_FORM = (
    Fixture(
        label="closed-form-s",
        entries=_rows([[0, 7, 0], [0, 1, -5], [0, 0, 6]]),
        expected_final="UECSM",
        notes="S known in closed form; |det U| = |det V| = 3 sqrt(2)/55",
    ),
)

# The symmetric unitary for the closed-form example.  S acts on standard
# coordinates, so it does not depend on any eigenvalue ordering; a valid
# pipeline reproduces it up to one global unimodular factor.
CLOSED_FORM_S = np.array([
    [6 / 55, -42 / 55, -7 / 11],
    [-42 / 55, 19 / 55, -6 / 11],
    [-7 / 11, -6 / 11, 6 / 11],
])

# Eigenvectors with published phases, indexed by their eigenvalue.
CLOSED_FORM_VECTORS = {
    "lambdas": (0.0, 1.0, 6.0),
    "u": (
        (1, 0, 0),
        (7 / (5 * np.sqrt(2)), 1 / (5 * np.sqrt(2)), 0),
        (-7 / 11, -6 / 11, 6 / 11),
    ),
    "v": (
        (-6 / 55, 42 / 55, 7 / 11),
        (0, 1 / np.sqrt(2), 1 / np.sqrt(2)),
        (0, 0, 1),
    ),
}

COUNTEREXAMPLE = (
    Fixture(
        label="strong-angle-counterexample",
        entries=_rows([[5, 0, -1, 3], [2, 4, 1, 2], [2, -2, 6, -2], [0, -2, 1, 4]]),
        expected_final="NotUECSM",
        notes="passes Angle, Grammian and Parallelepiped; fails StrongAngle "
              "with discrepancy (4/75) sqrt(5)",
    ),
)

# Spectra ascending, the order the Hermitian eigensolver reports.
COUNTEREXAMPLE_GRAM_SPECTRUM = (0.0824931, 0.253856, 0.932497, 2.73115)
COUNTEREXAMPLE_BETA_SPECTRUM = (-0.66798, 0.0926015, 0.694237, 3.88114)
COUNTEREXAMPLE_DET = 2 / (5 * np.sqrt(3))

TABLE1 = (
    Fixture(
        label="table1-row1",
        entries=_rows([[2, 0, 0, 0], [0, 4, 0, 0], [0, 0, 8, 4], [0, 0, 0, -2]]),
        expected_final="UECSM", oracle_expected=True, tener=False,
    ),
    Fixture(
        label="table1-row2",
        entries=_rows([[2, 0, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2], [0, 8, 0, 0]]),
        expected_final="NotUECSM", oracle_expected=False, tener=False,
    ),
    Fixture(
        label="table1-row3",
        entries=_rows([[4, 1, -1, -2], [3, 2, -4, 1], [-1, -2, 4, 1], [-4, 1, 3, 2]]),
        expected_final="UECSM", oracle_expected=True, tener=False,
        notes="unitary conjugate of row 1",
    ),
    Fixture(
        label="table1-row4",
        entries=_rows([[4, -1, 1, -2], [-2, 1, -1, 4], [-1, 4, -2, 1], [1, -2, 4, -1]]),
        expected_final="NotUECSM", oracle_expected=False, tener=False,
        notes="unitary conjugate of row 2",
    ),
)

TABLE2 = (
    Fixture(
        label="table2-row1",
        entries=_rows([[0, 18, 0], [0, 0, 18j], [0, 0, 0]]),
        expected_final="NotApplicable", oracle_expected=True, tener=True,
        nilpotent_ab=(18, 18j),
    ),
    Fixture(
        label="table2-row2",
        entries=_rows([[0, 18, 0], [0, 0, 9j], [0, 0, 0]]),
        expected_final="NotApplicable", oracle_expected=False, tener=True,
        nilpotent_ab=(18, 9j),
    ),
    Fixture(
        label="table2-row3",
        entries=_rows([[8 + 4j, 4 + 8j, -8 + 8j],
                       [-8 + 2j, -4 + 4j, 8 + 4j],
                       [4 - 4j, 2 - 8j, -4 - 8j]]),
        expected_final="NotApplicable", oracle_expected=True, tener=True,
        notes="unitary conjugate of row 1",
    ),
    Fixture(
        label="table2-row4",
        entries=_rows([[8 + 2j, 4 + 4j, -8 + 4j],
                       [-8 + 1j, -4 + 2j, 8 + 2j],
                       [4 - 2j, 2 - 4j, -4 - 4j]]),
        expected_final="NotApplicable", oracle_expected=False, tener=True,
        notes="unitary conjugate of row 2",
    ),
)

TABLE3 = (
    Fixture(
        label="table3-row1",
        entries=_rows([[4, 0, 0, 0], [0, 0, 8, 0], [0, 0, 0, 8], [0, 0, 0, 0]]),
        expected_final="NotApplicable", oracle_expected=True, tener=False,
    ),
    Fixture(
        label="table3-row2",
        entries=_rows([[8, 0, 0, 0], [0, 0, 4, 0], [0, 0, 0, 8], [0, 0, 0, 0]]),
        expected_final="NotApplicable", oracle_expected=False, tener=False,
    ),
    Fixture(
        label="table3-row3",
        entries=_rows([[5, 1, -3, 1], [1, -3, 1, 5], [1, 5, 1, -3], [-3, 1, 5, 1]]),
        expected_final="NotApplicable", oracle_expected=True, tener=False,
        notes="unitary conjugate of row 1",
    ),
    Fixture(
        label="table3-row4",
        entries=_rows([[5, 1, -1, 3], [3, -1, 1, 5], [1, 5, 3, -1], [-1, 3, 5, 1]]),
        expected_final="NotApplicable", oracle_expected=False, tener=False,
        notes="unitary conjugate of row 2",
    ),
)

FIXTURE_GROUPS: dict[str, tuple[Fixture, ...]] = {
    "section1-family": FAMILY,
    "necessary-tests-fail": NECESSARY_FAIL,
    "closed-form-s": CLOSED_FORM,
    "strong-angle-counterexample": COUNTEREXAMPLE,
    "table1": TABLE1,
    "table2": TABLE2,
    "table3": TABLE3,
}


def find_fixture(label: str) -> Fixture:
    """Look up a fixture by its label, or by group name for one-entry groups."""
    if label in FIXTURE_GROUPS and len(FIXTURE_GROUPS[label]) == 1:
        return FIXTURE_GROUPS[label][0]
    for group in FIXTURE_GROUPS.values():
        for fx in group:
            if fx.label == label:
                return fx
    raise KeyError(f"no fixture labelled {label!r}")
