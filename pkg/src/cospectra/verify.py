"""Cospectrality verdicts with machine-checkable certificates.

Adjacency cospectrality is decided three independent exact ways (deleted-
vertex characteristic polynomials, power diagonals, Krylov orthogonality);
the three must agree — disagreement would mean a library bug and raises
immediately.  The eigenprojector comparison is numeric and advisory: it is
reported alongside, never used as the verdict.  Laplacian cospectrality is
decided by the exact Krylov criterion on the Laplacian.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import (
    IntPolynomial,
    char_poly,
    first_krylov_mismatch,
    first_power_diagonal_mismatch,
)
from .graph import (
    CospectraError,
    Graph,
    adjacency_matrix,
    delete_vertex,
    laplacian_matrix,
)
from .spectral import (
    DEFAULT_TOLERANCES,
    StrongCospectralityResult,
    Tolerances,
    check_strong_cospectrality,
    eigendecompose_symmetric,
    projection_diagonal_equal,
)

ADJACENCY = "adjacency"
LAPLACIAN = "laplacian"

LAPLACIAN_NOTE = (
    "Laplacian cospectrality of a vertex pair does not imply that the "
    "vertex-deleted subgraphs have equal Laplacian spectra; no such claim "
    "is made or checked here."
)


class InternalCheckError(CospectraError):
    """Two provably equivalent exact criteria disagreed — a library bug."""


@dataclass(frozen=True)
class CospectralityReport:
    """Verdict for one pair against one matrix, with certificates.

    ``cospectral`` is the exact verdict.  The deleted-vertex polynomials and
    the first failing powers (when a criterion fails) are included so the
    verdict can be re-checked independently.  ``projection_equal`` is the
    numeric advisory criterion; it never influences ``cospectral``.
    """

    pair: tuple[int, int]
    matrix_kind: str
    cospectral: bool
    krylov_orthogonal: bool
    first_krylov_mismatch_k: int | None
    projection_equal: bool
    projection_tolerance: float
    char_polys_equal: bool | None = None  # adjacency only
    deleted_char_polys: tuple[IntPolynomial, IntPolynomial] | None = None
    power_diagonal_equal: bool | None = None  # adjacency only
    first_power_mismatch_k: int | None = None
    note: str | None = None

    def to_json(self) -> dict:
        doc: dict = {
            "pair": list(self.pair),
            "matrix": self.matrix_kind,
            "cospectral": self.cospectral,
            "criteria": {
                "krylov_orthogonal": self.krylov_orthogonal,
                "projection_diagonal_equal": self.projection_equal,
            },
            "projection_tolerance": repr(self.projection_tolerance),
        }
        if self.matrix_kind == ADJACENCY:
            doc["criteria"]["deleted_char_polys_equal"] = self.char_polys_equal
            doc["criteria"]["power_diagonal_equal"] = self.power_diagonal_equal
        certificates: dict = {}
        if self.deleted_char_polys is not None:
            p, q = self.deleted_char_polys
            certificates["deleted_char_polys"] = [p.to_json(), q.to_json()]
        if self.first_power_mismatch_k is not None:
            certificates["first_power_mismatch_k"] = self.first_power_mismatch_k
        if self.first_krylov_mismatch_k is not None:
            certificates["first_krylov_mismatch_k"] = self.first_krylov_mismatch_k
        if certificates:
            doc["certificates"] = certificates
        if self.note:
            doc["note"] = self.note
        return doc


@dataclass(frozen=True)
class PairReport:
    """Merged verdicts for one pair: both matrices plus strong cospectrality."""

    adjacency: CospectralityReport
    laplacian: CospectralityReport
    strong: StrongCospectralityResult

    def to_json(self) -> dict:
        return {
            "adjacency": self.adjacency.to_json(),
            "laplacian": self.laplacian.to_json(),
            "strong": self.strong.to_json(),
        }


def verify_a_cospectral(
    g: Graph,
    u: int,
    v: int,
    tol: float = 1e-8,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CospectralityReport:
    """Decide adjacency cospectrality of (u, v) exactly, three ways.

    The deleted-vertex characteristic polynomials are the certificate of
    record; the power-diagonal and Krylov criteria re-derive the same verdict
    and must agree.  The numeric projector comparison (threshold ``tol``) is
    reported as advisory data.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError("pair vertices must be distinct")
    a = adjacency_matrix(g)
    p_u = char_poly(adjacency_matrix(delete_vertex(g, u)))
    p_v = char_poly(adjacency_matrix(delete_vertex(g, v)))
    by_char = p_u == p_v
    k_power = first_power_diagonal_mismatch(a, u, v)
    k_krylov = first_krylov_mismatch(a, u, v)
    by_power = k_power is None
    by_krylov = k_krylov is None
    if not (by_char == by_power == by_krylov):
        raise InternalCheckError(
            f"exact criteria disagree on pair ({u}, {v}): "
            f"char={by_char} power={by_power} krylov={by_krylov}"
        )
    dec = eigendecompose_symmetric(a, tolerances=tolerances)
    proj_equal = projection_diagonal_equal(dec, u, v, tol)
    return CospectralityReport(
        pair=(u, v),
        matrix_kind=ADJACENCY,
        cospectral=by_char,
        krylov_orthogonal=by_krylov,
        first_krylov_mismatch_k=k_krylov,
        projection_equal=proj_equal,
        projection_tolerance=tol,
        char_polys_equal=by_char,
        deleted_char_polys=(p_u, p_v),
        power_diagonal_equal=by_power,
        first_power_mismatch_k=k_power,
    )


def verify_l_cospectral(
    g: Graph,
    u: int,
    v: int,
    tol: float = 1e-8,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CospectralityReport:
    """Decide Laplacian cospectrality of (u, v) via the exact Krylov criterion.

    The numeric Laplacian eigenprojector comparison is advisory.  The report
    carries a fixed note that equality of deleted-vertex Laplacian spectra is
    a different (stronger) property that this verdict does not assert.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError("pair vertices must be distinct")
    lap = laplacian_matrix(g)
    k_krylov = first_krylov_mismatch(lap, u, v)
    by_krylov = k_krylov is None
    dec = eigendecompose_symmetric(lap, tolerances=tolerances)
    proj_equal = projection_diagonal_equal(dec, u, v, tol)
    return CospectralityReport(
        pair=(u, v),
        matrix_kind=LAPLACIAN,
        cospectral=by_krylov,
        krylov_orthogonal=by_krylov,
        first_krylov_mismatch_k=k_krylov,
        projection_equal=proj_equal,
        projection_tolerance=tol,
        note=LAPLACIAN_NOTE,
    )


def verify_pair_full(
    g: Graph,
    u: int,
    v: int,
    tol: float = 1e-8,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> PairReport:
    """Run the adjacency, Laplacian, and strong-cospectrality checks together."""
    return PairReport(
        adjacency=verify_a_cospectral(g, u, v, tol, tolerances),
        laplacian=verify_l_cospectral(g, u, v, tol, tolerances),
        strong=check_strong_cospectrality(g, u, v, tol, tolerances),
    )
