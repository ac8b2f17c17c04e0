"""Paired eigensystem extraction for matrices with distinct eigenvalues.

For an n-by-n matrix T with distinct eigenvalues lambda_1, ..., lambda_n the
pipeline works with the paired data

    T u_i  = lambda_i u_i,          ||u_i|| = 1,
    T* v_i = conj(lambda_i) v_i,    ||v_i|| = 1,

ordered ascending lexicographically by (Re, Im) of the eigenvalue.  Distinct
eigenvalues force biorthogonality: <u_i, v_j> = 0 for i != j while
e_i = <u_i, v_i> is never zero, so E = V* U is an invertible diagonal
matrix.  Those diagonal entries double as a condition meter: e_i is the
reciprocal eigenvalue condition number, and |e_i| collapsing to zero means
the spectrum is only "distinct" beyond working precision (a gap check alone
cannot see this -- a defective cluster splits its eigenvalue by roughly
eps**(1/3) * ||T||, far above any reasonable gap tolerance).

Each vector carries an arbitrary unimodular phase.  Everything consumed
downstream is either phase-invariant or covariant in a controlled way, and
the criteria tests are checked for exactly this invariance.

Every x in C^n expands against either basis:

    x = sum_j ( <x, v_j> / <u_j, v_j> ) u_j
      = sum_j ( <x, u_j> / <v_j, u_j> ) v_j.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    NumericalBreakdownError,
    ToleranceConfig,
    adjoint,
    as_matrix,
    eigenvalues,
    unit_eigenvector,
)


@dataclass(frozen=True)
class NotApplicable:
    """Outcome for inputs outside the distinct-eigenvalue hypothesis.

    This is a value, not an error: a repeated (or effectively repeated)
    spectrum simply means the geometric tests do not apply.  ``pair`` uses
    1-based indices into the sorted spectrum when a specific offending pair
    exists.
    """

    reason: str
    pair: tuple[int, int] | None = None
    gap: float | None = None


@dataclass(frozen=True)
class SpectralData:
    """Sorted eigenvalues with paired unit eigenvector bases.

    lambdas -- shape (n,), ascending by (Re, Im)
    u_basis -- shape (n, n), column i is u_i (right eigenvector of T)
    v_basis -- shape (n, n), column i is v_i (right eigenvector of T*)
    e_diag  -- shape (n,), e_i = <u_i, v_i>, all nonzero
    """

    lambdas: np.ndarray
    u_basis: np.ndarray
    v_basis: np.ndarray
    e_diag: np.ndarray

    @property
    def n(self) -> int:
        return self.lambdas.shape[0]

    @classmethod
    def from_bases(cls, lambdas, u_basis, v_basis) -> "SpectralData":
        """Assemble from explicit bases, computing e_diag = diag(V* U).

        Intended for externally pinned eigenvectors (e.g. reproducing a
        worked example with published phases); no validation beyond shape.
        """
        lam = np.asarray(lambdas, dtype=np.complex128)
        u = np.asarray(u_basis, dtype=np.complex128)
        v = np.asarray(v_basis, dtype=np.complex128)
        n = lam.shape[0]
        if u.shape != (n, n) or v.shape != (n, n):
            raise ValueError("basis shapes do not match the eigenvalue count")
        e = np.einsum("ki,ki->i", v.conj(), u)
        return cls(lambdas=lam, u_basis=u, v_basis=v, e_diag=e)


def assert_distinct_spectrum(
    lambdas,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    scale: float | None = None,
) -> NotApplicable | None:
    """Check pairwise eigenvalue separation; None means acceptably distinct.

    The gap threshold is cfg.eig_gap_tol * scale.  When no scale is given it
    defaults to max |lambda| (callers holding the matrix should pass its
    Frobenius norm, the scale the tolerance is calibrated against).
    """
    lam = np.asarray(lambdas, dtype=np.complex128).ravel()
    n = lam.shape[0]
    if n < 2:
        return None
    if scale is None:
        scale = float(np.abs(lam).max())
    threshold = cfg.eig_gap_tol * scale
    worst = (np.inf, None)
    for i in range(n):
        for j in range(i + 1, n):
            gap = abs(lam[i] - lam[j])
            if gap < worst[0]:
                worst = (gap, (i + 1, j + 1))
    if worst[0] <= threshold:
        return NotApplicable(
            reason=f"repeated spectrum: gap {worst[0]:.3e} at pair {worst[1]} "
                   f"is within tolerance {threshold:.3e}",
            pair=worst[1],
            gap=float(worst[0]),
        )
    return None


def compute_spectral_data(
    t,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
    seed: int = 0,
) -> SpectralData | NotApplicable:
    """Compute the full paired eigensystem of ``t``, or NotApplicable.

    NotApplicable covers three situations: the sorted spectrum violates the
    gap tolerance; the adjoint's computed spectrum fails to pair with the
    conjugated eigenvalues within half the gap threshold; or some
    |<u_i, v_i>| falls below zero_tol (spectrum effectively degenerate at
    working precision).  An off-diagonal biorthogonality violation, by
    contrast, is raised as NumericalBreakdownError: with a genuinely
    separated spectrum that cannot happen short of solver failure.
    """
    a = as_matrix(t)
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    lam = eigenvalues(a)
    verdict = assert_distinct_spectrum(lam, cfg, scale=scale)
    if verdict is not None:
        return verdict

    a_star = adjoint(a)
    mu = eigenvalues(a_star)
    # Pair conj(lambda_i) with the adjoint's computed spectrum.  With a
    # certifiably separated spectrum the nearest match sits at distance
    # ~eps * kappa * ||t||; anything past half the gap threshold means the
    # two runs disagree about where the eigenvalues are.
    half_gap = 0.5 * cfg.eig_gap_tol * scale if scale > 0 else np.inf
    matched = np.full(n, -1, dtype=int)
    taken = np.zeros(n, dtype=bool)
    for i in range(n):
        dist = np.abs(mu - np.conj(lam[i]))
        k = int(np.argmin(dist))
        if dist[k] > half_gap or taken[k]:
            return NotApplicable(
                reason="adjoint spectrum does not pair with conjugated "
                       f"eigenvalues (offset {dist[k]:.3e} at index {i + 1}); "
                       "spectrum effectively degenerate at working precision",
            )
        matched[i] = k
        taken[k] = True

    master = np.random.SeedSequence(seed)
    streams = master.spawn(2 * n)
    u = np.empty((n, n), dtype=np.complex128)
    v = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        u[:, i] = unit_eigenvector(a, lam[i], cfg,
                                   rng=np.random.default_rng(streams[i]))
        v[:, i] = unit_eigenvector(a_star, mu[matched[i]], cfg,
                                   rng=np.random.default_rng(streams[n + i]))

    e = v.conj().T @ u
    e_diag = np.diag(e).copy()
    min_diag = float(np.abs(e_diag).min())
    if min_diag <= cfg.zero_tol:
        return NotApplicable(
            reason=f"effectively degenerate spectrum: min |<u_i, v_i>| = "
                   f"{min_diag:.3e} (eigenvalue condition beyond working "
                   "precision)",
        )
    off = e - np.diag(e_diag)
    max_off = float(np.abs(off).max())
    if max_off > cfg.zero_tol:
        raise NumericalBreakdownError(
            f"biorthogonality violated: max |<u_i, v_j>| = {max_off:.3e} "
            f"for i != j exceeds zero_tol = {cfg.zero_tol:.3e}")
    return SpectralData(lambdas=lam, u_basis=u, v_basis=v, e_diag=e_diag)


def expand_in_eigenbasis(x, sd: SpectralData, which: str = "u") -> np.ndarray:
    """Coefficients of ``x`` in the chosen eigenvector basis.

    which="u": x = sum_j c_j u_j with c_j = <x, v_j> / <u_j, v_j>;
    which="v": x = sum_j c_j v_j with c_j = <x, u_j> / <v_j, u_j>.
    """
    xv = np.asarray(x, dtype=np.complex128).ravel()
    if xv.shape[0] != sd.n:
        raise ValueError(f"vector length {xv.shape[0]} != dimension {sd.n}")
    if which == "u":
        return (sd.v_basis.conj().T @ xv) / sd.e_diag
    if which == "v":
        return (sd.u_basis.conj().T @ xv) / np.conj(sd.e_diag)
    raise ValueError(f"which must be 'u' or 'v', got {which!r}")
