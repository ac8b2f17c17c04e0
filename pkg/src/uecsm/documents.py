"""File formats: matrix documents and classification report documents.

Both formats are JSON with every complex number spelled as an explicit
``[re, im]`` pair, so integer and decimal literals parse exactly and a
serialized document parses back to an equal value.  ``format_version`` is
checked on input; this module reads and writes version 1.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .criteria import ClassificationReport
from .linalg import ToleranceConfig
from .oracle import OracleVerdict

FORMAT_VERSION = 1


class DocumentError(ValueError):
    """Malformed document; carries line/column when the JSON layer knows them."""

    def __init__(self, message: str, line: int | None = None,
                 column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}",
                            line=exc.lineno, column=exc.colno) from exc
    if not isinstance(data, dict):
        raise DocumentError("document root must be a JSON object")
    return data


def _check_version(data: dict) -> None:
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(
            f"unsupported format_version {version!r} (expected {FORMAT_VERSION})")


def _pair_to_complex(value, where: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(p, (int, float)) and not isinstance(p, bool)
                       for p in value)):
        raise DocumentError(f"{where}: expected an [re, im] number pair, got {value!r}")
    return complex(float(value[0]), float(value[1]))


def _complex_to_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class MatrixDocument:
    """A labelled square complex matrix as stored on disk."""

    entries: tuple[tuple[complex, ...], ...]
    label: str | None = None

    @property
    def n(self) -> int:
        return len(self.entries)

    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.complex128)

    @classmethod
    def from_matrix(cls, m, label: str | None = None) -> "MatrixDocument":
        a = np.asarray(m, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DocumentError(f"expected a nonempty square matrix, got shape {a.shape}")
        entries = tuple(tuple(complex(x) for x in row) for row in a)
        return cls(entries=entries, label=label)


def parse_matrix_document(text: str) -> MatrixDocument:
    data = _load_json(text)
    _check_version(data)
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise DocumentError(f"label must be a string, got {label!r}")
    raw = data.get("entries")
    if not isinstance(raw, list) or not raw:
        raise DocumentError("entries must be a nonempty list of rows")
    n = len(raw)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"row {i + 1} must have {n} entries (square matrix)")
        rows.append(tuple(_pair_to_complex(v, f"entry ({i + 1}, {j + 1})")
                          for j, v in enumerate(row)))
    declared = data.get("n")
    if declared is not None and declared != n:
        raise DocumentError(f"declared n = {declared} but entries are {n}x{n}")
    values = np.array(rows, dtype=np.complex128)
    if not (np.all(np.isfinite(values.real)) and np.all(np.isfinite(values.imag))):
        raise DocumentError("matrix has non-finite entries")
    return MatrixDocument(entries=tuple(rows), label=label)


def serialize_matrix_document(doc: MatrixDocument) -> str:
    payload = {
        "format_version": FORMAT_VERSION,
        "label": doc.label,
        "n": doc.n,
        "entries": [[_complex_to_pair(z) for z in row] for row in doc.entries],
    }
    return json.dumps(payload, indent=2) + "\n"


# ----------------------------------------------------------------- reports

@dataclass(frozen=True)
class VerdictRecord:
    kind: str
    outcome: str
    indices: tuple[int, ...] | None = None
    left: complex | None = None
    right: complex | None = None
    discrepancy: float | None = None


@dataclass(frozen=True)
class CertificateRecord:
    s: tuple[tuple[complex, ...], ...]
    alphas: tuple[complex, ...]
    residual_symmetry: float
    residual_unitarity: float
    residual_intertwine: float
    residual_eigvec: float
    beta_min_divisor: float | None = None


@dataclass(frozen=True)
class OracleRecord:
    outcome: str
    best_residual: float
    restarts_used: int


@dataclass(frozen=True)
class ReportDocument:
    """Everything a classification run produced, in serializable form."""

    label: str | None
    n: int
    seed: int
    tolerances: ToleranceConfig
    final: str
    reason: str | None
    spectrum: tuple[complex, ...] | None
    verdicts: tuple[VerdictRecord, ...]
    certificate: CertificateRecord | None = None
    oracle: OracleRecord | None = None


def build_report_document(
    report: ClassificationReport,
    *,
    n: int,
    label: str | None = None,
    cfg: ToleranceConfig | None = None,
    seed: int = 0,
    oracle: OracleVerdict | None = None,
) -> ReportDocument:
    cfg = cfg if cfg is not None else ToleranceConfig()
    verdicts = []
    for tv in report.verdicts:
        w = tv.witness
        verdicts.append(VerdictRecord(
            kind=tv.kind,
            outcome=tv.outcome.value,
            indices=tuple(w.indices) if w is not None else None,
            left=complex(w.left) if w is not None else None,
            right=complex(w.right) if w is not None else None,
            discrepancy=float(w.discrepancy) if w is not None else None,
        ))
    spectrum = None
    if report.spectrum is not None:
        spectrum = tuple(complex(z) for z in report.spectrum)
    certificate = None
    if report.certificate is not None:
        cert = report.certificate
        certificate = CertificateRecord(
            s=tuple(tuple(complex(z) for z in row) for row in cert.s),
            alphas=tuple(complex(z) for z in cert.alphas),
            residual_symmetry=cert.residual_symmetry,
            residual_unitarity=cert.residual_unitarity,
            residual_intertwine=cert.residual_intertwine,
            residual_eigvec=cert.residual_eigvec,
            beta_min_divisor=cert.beta_min_divisor,
        )
    oracle_record = None
    if oracle is not None:
        oracle_record = OracleRecord(
            outcome=oracle.outcome.value,
            best_residual=oracle.best_residual,
            restarts_used=oracle.restarts_used,
        )
    reason = report.not_applicable.reason if report.not_applicable else None
    return ReportDocument(
        label=label,
        n=n,
        seed=seed,
        tolerances=cfg,
        final=report.final.value,
        reason=reason,
        spectrum=spectrum,
        verdicts=tuple(verdicts),
        certificate=certificate,
        oracle=oracle_record,
    )


def serialize_report_document(doc: ReportDocument) -> str:
    payload = {
        "format_version": FORMAT_VERSION,
        "label": doc.label,
        "n": doc.n,
        "seed": doc.seed,
        "tolerances": asdict(doc.tolerances),
        "final": doc.final,
        "reason": doc.reason,
        "spectrum": ([_complex_to_pair(z) for z in doc.spectrum]
                     if doc.spectrum is not None else None),
        "verdicts": [
            {
                "kind": v.kind,
                "outcome": v.outcome,
                "indices": list(v.indices) if v.indices is not None else None,
                "left": _complex_to_pair(v.left) if v.left is not None else None,
                "right": _complex_to_pair(v.right) if v.right is not None else None,
                "discrepancy": v.discrepancy,
            }
            for v in doc.verdicts
        ],
        "certificate": None,
        "oracle": None,
    }
    if doc.certificate is not None:
        cert = doc.certificate
        payload["certificate"] = {
            "s": [[_complex_to_pair(z) for z in row] for row in cert.s],
            "alphas": [_complex_to_pair(z) for z in cert.alphas],
            "residual_symmetry": cert.residual_symmetry,
            "residual_unitarity": cert.residual_unitarity,
            "residual_intertwine": cert.residual_intertwine,
            "residual_eigvec": cert.residual_eigvec,
            "beta_min_divisor": cert.beta_min_divisor,
        }
    if doc.oracle is not None:
        payload["oracle"] = {
            "outcome": doc.oracle.outcome,
            "best_residual": doc.oracle.best_residual,
            "restarts_used": doc.oracle.restarts_used,
        }
    return json.dumps(payload, indent=2) + "\n"


def parse_report_document(text: str) -> ReportDocument:
    data = _load_json(text)
    _check_version(data)
    try:
        tolerances = ToleranceConfig(**data["tolerances"])
        verdicts = tuple(
            VerdictRecord(
                kind=v["kind"],
                outcome=v["outcome"],
                indices=tuple(v["indices"]) if v["indices"] is not None else None,
                left=_pair_to_complex(v["left"], "verdict left")
                if v["left"] is not None else None,
                right=_pair_to_complex(v["right"], "verdict right")
                if v["right"] is not None else None,
                discrepancy=v["discrepancy"],
            )
            for v in data["verdicts"]
        )
        spectrum = None
        if data["spectrum"] is not None:
            spectrum = tuple(_pair_to_complex(z, "spectrum") for z in data["spectrum"])
        certificate = None
        if data["certificate"] is not None:
            c = data["certificate"]
            certificate = CertificateRecord(
                s=tuple(tuple(_pair_to_complex(z, "certificate s") for z in row)
                        for row in c["s"]),
                alphas=tuple(_pair_to_complex(z, "certificate alphas")
                             for z in c["alphas"]),
                residual_symmetry=c["residual_symmetry"],
                residual_unitarity=c["residual_unitarity"],
                residual_intertwine=c["residual_intertwine"],
                residual_eigvec=c["residual_eigvec"],
                beta_min_divisor=c["beta_min_divisor"],
            )
        oracle = None
        if data["oracle"] is not None:
            o = data["oracle"]
            oracle = OracleRecord(outcome=o["outcome"],
                                  best_residual=o["best_residual"],
                                  restarts_used=o["restarts_used"])
        return ReportDocument(
            label=data["label"],
            n=data["n"],
            seed=data["seed"],
            tolerances=tolerances,
            final=data["final"],
            reason=data["reason"],
            spectrum=spectrum,
            verdicts=verdicts,
            certificate=certificate,
            oracle=oracle,
        )
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"report document missing or malformed field: {exc}") from exc
