"""Construction of the symmetric unitary witnessing T = S T^t S*.

When the strong angle condition holds, the phase data

    beta_ij = <u_i, u_j> / <v_j, v_i>     (defined when both factors != 0)

is Hermitian, unimodular where defined, and multiplicative
(beta_ij = beta_ik * beta_kj).  A fully defined completion therefore has
rank one, beta = conj(alpha)^t alpha for a unimodular row alpha, which can
be read off any row once the matrix is complete.  The first row is used,
fixing the gauge alpha_1 = 1; alpha as a whole is determined only up to one
global unimodular factor, and S inherits exactly that ambiguity.

Partially defined beta matrices are completed index by index: when the new
index is linked to the already-completed block by some defined entry, that
entry anchors the remaining ones through multiplicativity; when it is not
linked at all, the connecting phase is a genuinely free unimodular choice
and is set to 1.

With alpha in hand,

    S = U diag(alpha_i / e_i) U^t
      = sum_i (alpha_i / <u_i, v_i>) u_i u_i^t,

which is symmetric by construction, independent of the index order, and --
exactly when the strong angle condition holds -- unitary with
S conj(u_i) = alpha_i v_i and T S = S T^t.  The certificate records the
residuals of these four identities rather than trusting the derivation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOLERANCES,
    LinearAlgebraError,
    ToleranceConfig,
)
from .spectral import SpectralData


class BetaInconsistencyError(LinearAlgebraError):
    """One side of a beta quotient vanished while the other did not.

    |<u_i, u_j>| = |<v_j, v_i>| is forced whenever the angle condition
    holds, so a one-sided zero means the input is not consistent UECSM data
    (or sits exactly on the zero_tol fence); surfacing it beats guessing.
    """


@dataclass(frozen=True)
class BetaMatrix:
    """Possibly partial Hermitian matrix of phase quotients.

    entries     -- complex (n, n); meaningful only where ``defined``
    defined     -- boolean (n, n) mask, diagonal always True
    min_divisor -- smallest |<v_j, v_i>| divided by so far (inf if none)
    """

    entries: np.ndarray
    defined: np.ndarray
    min_divisor: float

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def is_complete(self) -> bool:
        return bool(self.defined.all())


@dataclass(frozen=True)
class ConjugationCertificate:
    """Constructed S with the four verification residuals.

    residual_symmetry   -- ||S - S^t||_F
    residual_unitarity  -- ||S* S - I||_F
    residual_intertwine -- ||T S - S T^t||_F / ||T||_F
    residual_eigvec     -- max_i ||S conj(u_i) - alpha_i v_i||

    A failed verification is encoded in the residuals, never raised.
    """

    s: np.ndarray
    alphas: np.ndarray
    residual_symmetry: float
    residual_unitarity: float
    residual_intertwine: float
    residual_eigvec: float
    beta_min_divisor: float | None = None

    def residuals(self) -> tuple[float, float, float, float]:
        return (self.residual_symmetry, self.residual_unitarity,
                self.residual_intertwine, self.residual_eigvec)

    def is_valid(self, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> bool:
        return max(self.residuals()) <= cfg.match_tol


def build_beta(sd: SpectralData, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> BetaMatrix:
    """Quotient matrix beta_ij = <u_i, u_j> / <v_j, v_i> where defined.

    An entry is defined when both inner products clear zero_tol in modulus;
    both below means undefined; exactly one below raises
    BetaInconsistencyError.  Callable on any SpectralData -- including
    inputs that fail the strong angle test -- for diagnostics, but the
    multiplicative structure is only guaranteed after a pass.
    """
    n = sd.n
    u, v = sd.u_basis, sd.v_basis
    uu = (u.conj().T @ u).T    # uu[i, j] = <u_i, u_j>
    vv = (v.conj().T @ v).T
    entries = np.zeros((n, n), dtype=np.complex128)
    defined = np.zeros((n, n), dtype=bool)
    min_divisor = np.inf
    for i in range(n):
        entries[i, i] = 1.0
        defined[i, i] = True
    for i in range(n):
        for j in range(i + 1, n):
            num = abs(uu[i, j])
            den = abs(vv[j, i])
            if num > cfg.zero_tol and den > cfg.zero_tol:
                entries[i, j] = uu[i, j] / vv[j, i]
                entries[j, i] = np.conj(entries[i, j])
                defined[i, j] = defined[j, i] = True
                min_divisor = min(min_divisor, den)
            elif num > cfg.zero_tol or den > cfg.zero_tol:
                raise BetaInconsistencyError(
                    f"pair ({i + 1}, {j + 1}): |<u_i,u_j>| = {num:.3e} but "
                    f"|<v_j,v_i>| = {den:.3e}; exactly one is below "
                    f"zero_tol = {cfg.zero_tol:.3e}")
    return BetaMatrix(entries=entries, defined=defined,
                      min_divisor=float(min_divisor))


def complete_beta(b: BetaMatrix) -> BetaMatrix:
    """Fill the undefined entries of ``b`` through multiplicativity.

    Grows the fully defined leading block one index at a time.  For the new
    column, the lowest defined row (if any) anchors the rest via
    beta_(i,new) = beta_(i,anchor) * beta_(anchor,new); with no defined row
    the connecting phase is free and beta_(1,new) is set to 1.  Assumes the
    defined entries already satisfy multiplicativity (strong angle pass);
    no consistency is re-checked here.
    """
    n = b.n
    entries = b.entries.copy()
    defined = b.defined.copy()
    for new in range(1, n):
        anchors = [i for i in range(new) if defined[i, new]]
        if anchors:
            anchor = anchors[0]
        else:
            entries[0, new] = 1.0
            entries[new, 0] = 1.0
            defined[0, new] = defined[new, 0] = True
            anchor = 0
        for i in range(new):
            if not defined[i, new]:
                entries[i, new] = entries[i, anchor] * entries[anchor, new]
                entries[new, i] = np.conj(entries[i, new])
                defined[i, new] = defined[new, i] = True
    return BetaMatrix(entries=entries, defined=defined,
                      min_divisor=b.min_divisor)


def extract_alpha(b: BetaMatrix) -> np.ndarray:
    """Unimodular row alpha with beta = conj(alpha)^t alpha; alpha_1 = 1."""
    if not b.is_complete():
        raise ValueError("beta matrix has undefined entries; complete it first")
    return b.entries[0, :].copy()


def build_s(sd: SpectralData, alpha) -> np.ndarray:
    """S = U diag(alpha_i / e_i) U^t = sum_i (alpha_i / e_i) u_i u_i^t."""
    al = np.asarray(alpha, dtype=np.complex128).ravel()
    if al.shape[0] != sd.n:
        raise ValueError(f"alpha length {al.shape[0]} != dimension {sd.n}")
    e_floor = float(np.abs(sd.e_diag).min())
    if e_floor <= DEFAULT_TOLERANCES.zero_tol:
        # Cannot occur for SpectralData that passed extraction; defensive.
        raise LinearAlgebraError(
            f"e_diag entry of modulus {e_floor:.3e} is too small to divide by")
    weights = al / sd.e_diag
    return (sd.u_basis * weights) @ sd.u_basis.T


def verify_certificate(
    t,
    s: np.ndarray,
    sd: SpectralData,
    alpha,
    cfg: ToleranceConfig = DEFAULT_TOLERANCES,
) -> ConjugationCertificate:
    """Measure the four defining identities of S; residuals encode failure."""
    a = np.asarray(t, dtype=np.complex128)
    al = np.asarray(alpha, dtype=np.complex128).ravel()
    n = sd.n
    t_norm = float(np.linalg.norm(a))
    r_sym = float(np.linalg.norm(s - s.T))
    r_uni = float(np.linalg.norm(s.conj().T @ s - np.eye(n)))
    r_int = float(np.linalg.norm(a @ s - s @ a.T)) / (t_norm if t_norm > 0 else 1.0)
    mapped = s @ np.conj(sd.u_basis)
    r_vec = float(np.linalg.norm(mapped - sd.v_basis * al, axis=0).max())
    return ConjugationCertificate(
        s=s, alphas=al,
        residual_symmetry=r_sym,
        residual_unitarity=r_uni,
        residual_intertwine=r_int,
        residual_eigvec=r_vec,
    )
