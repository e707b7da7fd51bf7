"""Numeric spectral decomposition steered by exact multiplicity data.

Floating point enters the library only here.  The eigensolver is a cyclic
Jacobi iteration; eigenvalue clustering is never decided by numeric gaps
alone: the exact squarefree structure of the characteristic polynomial fixes
how many distinct eigenvalues exist and with what multiplicities, the numeric
eigenvalues are assigned to the refined roots, and any mismatch is a hard
error rather than a silent regrouping.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .construct import A_KIND, ConstructedGraph
from .exact import (
    IntPolynomial,
    MultiplicityStructure,
    char_poly,
    check_symmetric,
    first_krylov_mismatch,
    multiplicity_structure,
)
from .graph import CospectraError, Graph, IntMatrix, adjacency_matrix

STRONG = "strong"
COSPECTRAL_ONLY = "cospectral-only"
NOT_COSPECTRAL = "not-cospectral"
STRONG_CERTIFIED = "strong-certified"
INCONCLUSIVE = "inconclusive"


class SpectralNumericError(CospectraError):
    """A numeric computation failed to meet its accuracy contract."""


class ClusteringError(SpectralNumericError):
    """Numeric eigenvalues could not be reconciled with the exact
    multiplicity structure; carries gap diagnostics in ``.diagnostics``."""

    def __init__(self, message: str, diagnostics: dict):
        super().__init__(message)
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class Tolerances:
    """Numeric accuracy thresholds.  Scales follow the matrix at hand:

    * identity residual:  identity_scale * n
    * eigen residual:     residual_scale * max(1, frobenius norm)
    * coefficient floor:  coefficient (absolute)
    * root matching:      root_scale * sum_j |c_j| * max(1, |x|)^j
    * jacobi off-target:  jacobi_scale * frobenius norm
    """

    identity_scale: float = 1e-9
    residual_scale: float = 1e-8
    coefficient: float = 1e-8
    root_scale: float = 1e-7
    jacobi_scale: float = 1e-12

    def identity_tol(self, n: int) -> float:
        return self.identity_scale * max(1, n)

    def residual_tol(self, fro: float) -> float:
        return self.residual_scale * max(1.0, fro)

    def root_tol(self, p: IntPolynomial, x: float) -> float:
        scale = max(1.0, abs(x))
        bound = 0.0
        power = 1.0
        for c in p.coeffs:
            bound += abs(c) * power
            power *= scale
        return self.root_scale * max(1.0, bound)


DEFAULT_TOLERANCES = Tolerances()


# ---------------------------------------------------------------------------
# cyclic Jacobi eigensolver


def jacobi_eigh(
    m: IntMatrix | np.ndarray, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
    symmetric matrix, by cyclic Jacobi rotations.

    Sweeps continue until the off-diagonal Frobenius norm drops below
    ``jacobi_scale`` times the matrix Frobenius norm.
    """
    if len(m) == 0:
        return np.zeros(0), np.zeros((0, 0))
    a = np.array(m, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n) or not np.array_equal(a, a.T):
        raise ValueError("jacobi_eigh needs an exactly symmetric square matrix")
    v = np.eye(n)
    fro = float(np.linalg.norm(a))
    if fro == 0.0 or n < 2:
        order = np.argsort(np.diag(a), kind="stable")
        return np.diag(a)[order].copy(), v[:, order].copy()
    target = tolerances.jacobi_scale * fro
    # rotations smaller than this cannot push the off-norm above target/10
    skip = target / (10.0 * n * n)
    offmask = ~np.eye(n, dtype=bool)
    for _ in range(64):
        # summed directly over off-diagonal entries: the subtraction
        # ||A||_F^2 - sum(diag^2) cancels catastrophically near convergence
        off = float(np.linalg.norm(a[offmask]))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    else:
        off = float(np.linalg.norm(a[offmask]))
        if off > target:
            raise SpectralNumericError(
                "jacobi iteration failed to reach its off-diagonal target"
            )
    vals = np.diag(a).copy()
    order = np.argsort(vals, kind="stable")
    return vals[order], v[:, order].copy()


# ---------------------------------------------------------------------------
# decomposition with exact multiplicities


@dataclass(frozen=True, eq=False)
class EigenCluster:
    value: float  # refined root of the squarefree factor
    multiplicity: int  # exact, from the squarefree structure
    basis: np.ndarray  # n x multiplicity, orthonormal columns
    projector: np.ndarray  # n x n orthogonal projector onto the eigenspace


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    matrix: IntMatrix
    n: int
    frobenius: float
    clusters: tuple[EigenCluster, ...]  # ascending by value
    structure: MultiplicityStructure
    tolerances: Tolerances

    def cluster_nearest(self, x: float) -> EigenCluster:
        return min(self.clusters, key=lambda cl: abs(cl.value - x))

    def projector_sum(self) -> np.ndarray:
        total = np.zeros((self.n, self.n))
        for cl in self.clusters:
            total += cl.projector
        return total


def _real_roots(p: IntPolynomial, tolerances: Tolerances) -> list[float]:
    """All (real) roots of a squarefree integer polynomial, Newton-refined."""
    if p.degree < 1:
        return []
    coeffs_desc = [float(c) for c in reversed(p.coeffs)]
    seeds = np.roots(coeffs_desc)
    deriv = p.derivative()
    roots: list[float] = []
    for z in seeds:
        if abs(z.imag) > 1e-6 * (1.0 + abs(z.real)):
            raise SpectralNumericError(
                f"unexpected non-real root {z} of a factor of a symmetric "
                "characteristic polynomial"
            )
        x = float(z.real)
        for _ in range(60):
            fx = _horner_float(p, x)
            dfx = _horner_float(deriv, x)
            if dfx == 0.0:
                break
            step = fx / dfx
            x -= step
            if abs(step) <= 1e-16 * max(1.0, abs(x)):
                break
        if abs(_horner_float(p, x)) > tolerances.root_tol(p, x):
            raise SpectralNumericError(
                f"newton refinement failed to converge on a root near {x}"
            )
        roots.append(x)
    roots.sort()
    return roots


def _horner_float(p: IntPolynomial, x: float) -> float:
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc


def eigendecompose_symmetric(
    m: IntMatrix,
    char: IntPolynomial | None = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SpectralDecomposition:
    """Spectral decomposition whose cluster sizes are dictated by the exact
    squarefree structure of the characteristic polynomial.

    Raises a clustering failure (with gap diagnostics) if the numeric
    eigenvalues cannot be matched root-for-root with the exact multiplicity
    counts.
    """
    n = check_symmetric(m)
    if char is None:
        char = char_poly(m)
    if char.degree != n:
        raise ValueError(
            f"characteristic polynomial degree {char.degree} does not match order {n}"
        )
    if n == 0:
        struct0 = MultiplicityStructure((), 1)
        return SpectralDecomposition(m, 0, 0.0, (), struct0, tolerances)
    struct = multiplicity_structure(char)
    expected: list[tuple[float, int]] = []  # (root, multiplicity), ascending
    for factor, mult in struct.factors:
        for r in _real_roots(factor, tolerances):
            expected.append((r, mult))
    expected.sort()
    if sum(mult for _, mult in expected) != n:
        raise SpectralNumericError("root count does not add up to the matrix order")
    vals, vecs = jacobi_eigh(m, tolerances)
    fro = float(np.linalg.norm(np.array(m, dtype=float)))
    roots = np.array([r for r, _ in expected])
    counts = [0] * len(expected)
    for x in vals:
        idx = int(np.argmin(np.abs(roots - x)))
        counts[idx] += 1
    mults = [mult for _, mult in expected]
    if counts != mults:
        gaps = np.diff(roots).tolist() if len(roots) > 1 else []
        raise ClusteringError(
            "clustering failure: numeric eigenvalues do not match the exact "
            "multiplicity structure",
            diagnostics={
                "expected_roots": roots.tolist(),
                "expected_multiplicities": mults,
                "assigned_counts": counts,
                "numeric_eigenvalues": vals.tolist(),
                "root_gaps": gaps,
            },
        )
    clusters: list[EigenCluster] = []
    start = 0
    for (root, mult) in expected:
        basis = vecs[:, start : start + mult]
        projector = basis @ basis.T
        projector = (projector + projector.T) / 2.0
        clusters.append(
            EigenCluster(value=root, multiplicity=mult, basis=basis, projector=projector)
        )
        start += mult
    return SpectralDecomposition(
        matrix=m,
        n=n,
        frobenius=fro,
        clusters=tuple(clusters),
        structure=struct,
        tolerances=tolerances,
    )


def projection_diagonal_equal(
    d: SpectralDecomposition, u: int, v: int, tol: float
) -> bool:
    """True when every eigenprojector has equal (u,u) and (v,v) entries within tol."""
    if not (0 <= u < d.n and 0 <= v < d.n):
        raise ValueError(f"vertex pair ({u}, {v}) out of range 0..{d.n - 1}")
    return all(
        abs(cl.projector[u, u] - cl.projector[v, v]) <= tol for cl in d.clusters
    )


# ---------------------------------------------------------------------------
# strong cospectrality


@dataclass(frozen=True)
class StrongCospectralityResult:
    """Verdict plus the per-cluster sign pattern.

    ``signs`` pairs each cluster eigenvalue with +1 (projections agree), -1
    (projections are opposite), 0 (both projections vanish), or None (neither
    relation holds — the cluster that demotes the verdict).
    """

    verdict: str
    signs: tuple[tuple[float, int | None], ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "signs": [
                {"eigenvalue": repr(val), "sign": sign} for val, sign in self.signs
            ],
        }


def check_strong_cospectrality(
    g: Graph,
    u: int,
    v: int,
    tol: float = 1e-8,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> StrongCospectralityResult:
    """Classify a pair as strongly cospectral / cospectral-only / not cospectral.

    Cospectrality itself is decided exactly (Krylov criterion on the adjacency
    matrix); only the per-eigenspace sign comparison E e_u = ±E e_v is numeric,
    with threshold ``tol`` on the projection norms.
    """
    a = adjacency_matrix(g)
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError("pair vertices must be distinct")
    if first_krylov_mismatch(a, u, v) is not None:
        return StrongCospectralityResult(verdict=NOT_COSPECTRAL, signs=())
    dec = eigendecompose_symmetric(a, tolerances=tolerances)
    signs: list[tuple[float, int | None]] = []
    verdict = STRONG
    for cl in dec.clusters:
        pu = cl.projector[:, u]
        pv = cl.projector[:, v]
        diff = float(np.linalg.norm(pu - pv))
        summ = float(np.linalg.norm(pu + pv))
        if diff <= tol and summ <= tol:
            signs.append((cl.value, 0))
        elif diff <= tol:
            signs.append((cl.value, 1))
        elif summ <= tol:
            signs.append((cl.value, -1))
        else:
            signs.append((cl.value, None))
            verdict = COSPECTRAL_ONLY
    return StrongCospectralityResult(verdict=verdict, signs=tuple(signs))


# ---------------------------------------------------------------------------
# induced eigenvalues of the adjacency construction


@dataclass(frozen=True, eq=False)
class InducedEigenpair:
    """An eigenvalue of the base graph lifted to the constructed graph.

    The lifted vector is +w on copy 1, -w on copy 2, zero on H (normalized);
    ``base_coefficient`` is the norm of the base eigenprojection of e_{v_c},
    and ``multiplicity_in_big`` is the exact multiplicity of the eigenvalue in
    the constructed graph.
    """

    eigenvalue: float
    base_coefficient: float
    vector: np.ndarray
    multiplicity_in_big: int

    @property
    def simple_in_big(self) -> bool:
        return self.multiplicity_in_big == 1


def induced_eigenpairs(
    cg: ConstructedGraph, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> tuple[InducedEigenpair, ...]:
    """Eigenvalues the base graph forces on a pure adjacency construction.

    For every eigenspace of the base graph whose projection of e_{v_c} is
    nonzero, the lift (+w, -w, 0) is an exact eigenvector of the constructed
    graph; each returned pair carries the residual-checked unit vector and the
    exact multiplicity of its eigenvalue upstairs.  Not defined once orbit
    cross-connection edges have been added (they break the lift), so such
    inputs are rejected.
    """
    if cg.kind != A_KIND:
        raise ValueError("induced eigenpairs are defined for adjacency constructions")
    if cg.cross_connected:
        raise ValueError(
            "induced eigenpairs are not defined after orbit cross-connection"
        )
    base = cg.base_graph()
    base_dec = eigendecompose_symmetric(adjacency_matrix(base), tolerances=tolerances)
    big = cg.graph
    a_big = adjacency_matrix(big)
    a_big_f = np.array(a_big, dtype=float)
    char_big = char_poly(a_big)
    struct_big = multiplicity_structure(char_big)
    res_tol = tolerances.residual_tol(float(np.linalg.norm(a_big_f)))
    e_vc = np.zeros(base.n)
    e_vc[cg.fixed_vertex] = 1.0
    out: list[InducedEigenpair] = []
    for cl in base_dec.clusters:
        proj = cl.projector @ e_vc
        coeff = float(np.linalg.norm(proj))
        if coeff <= tolerances.coefficient:
            continue
        w = proj / coeff
        lifted = np.zeros(big.n)
        for b in range(base.n):
            lifted[cg.g1_map[b]] = w[b]
            lifted[cg.g2_map[b]] = -w[b]
        lifted /= np.sqrt(2.0)
        residual = float(np.linalg.norm(a_big_f @ lifted - cl.value * lifted))
        if residual > res_tol:
            raise SpectralNumericError(
                f"lifted vector residual {residual:.3e} exceeds {res_tol:.3e} "
                f"at eigenvalue {cl.value!r}"
            )
        mult = _multiplicity_at(struct_big, cl.value, tolerances)
        out.append(
            InducedEigenpair(
                eigenvalue=cl.value,
                base_coefficient=coeff,
                vector=lifted,
                multiplicity_in_big=mult,
            )
        )
    return tuple(out)


def _multiplicity_at(
    struct: MultiplicityStructure, x: float, tolerances: Tolerances
) -> int:
    """Exact multiplicity of the eigenvalue numerically equal to x.

    x must match exactly one squarefree factor (evaluation below the scaled
    root tolerance); anything else is a numeric failure, never a guess.
    """
    matches = [
        mult
        for factor, mult in struct.factors
        if abs(_horner_float(factor, x)) <= tolerances.root_tol(factor, x)
    ]
    if len(matches) != 1:
        raise SpectralNumericError(
            f"eigenvalue {x!r} matched {len(matches)} squarefree factors; "
            "cannot assign an exact multiplicity"
        )
    return matches[0]


def lifted_span_residual(
    cg: ConstructedGraph, pairs: Sequence[InducedEigenpair]
) -> float:
    """Norm of e_pair0 - e_pair1 minus its projection onto the lifted vectors.

    For a pure adjacency construction the difference vector decomposes exactly
    into the lifted eigenvectors, so this residual is numerically zero.
    """
    d = np.zeros(cg.graph.n)
    d[cg.pair[0]] = 1.0
    d[cg.pair[1]] = -1.0
    r = d.copy()
    for pair in pairs:
        r -= float(pair.vector @ d) * pair.vector
    return float(np.linalg.norm(r))


@dataclass(frozen=True, eq=False)
class SimplicityVerdict:
    """Outcome of the simplicity-based strong cospectrality certificate.

    ``strong-certified`` means every induced eigenvalue is simple in the
    constructed graph, which forces strong cospectrality of the pair;
    ``inconclusive`` means some induced eigenvalue is degenerate upstairs, in
    which case nothing is claimed either way and the direct numeric check is
    attached for comparison.
    """

    verdict: str
    induced: tuple[InducedEigenpair, ...]
    direct: StrongCospectralityResult

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "induced": [
                {
                    "eigenvalue": repr(p.eigenvalue),
                    "base_coefficient": repr(p.base_coefficient),
                    "multiplicity_in_big": p.multiplicity_in_big,
                    "simple": p.simple_in_big,
                }
                for p in self.induced
            ],
            "direct": self.direct.to_json(),
        }


def strong_via_simplicity(
    cg: ConstructedGraph,
    tol: float = 1e-8,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> SimplicityVerdict:
    """Certify strong cospectrality of the constructed pair via simplicity of
    every induced eigenvalue; degenerate cases come back ``inconclusive``.

    A certificate is always cross-checked against the direct per-eigenspace
    comparison; disagreement is an internal error (it would mean one of the
    two methods is wrong), not a report.
    """
    pairs = induced_eigenpairs(cg, tolerances)
    direct = check_strong_cospectrality(
        cg.graph, cg.pair[0], cg.pair[1], tol, tolerances
    )
    if pairs and all(p.simple_in_big for p in pairs):
        if direct.verdict != STRONG:
            raise CospectraError(
                "internal inconsistency: simplicity certificate says strong but "
                f"the direct check returned {direct.verdict!r}"
            )
        return SimplicityVerdict(STRONG_CERTIFIED, pairs, direct)
    return SimplicityVerdict(INCONCLUSIVE, pairs, direct)


# ---------------------------------------------------------------------------
# multiplicity reduction by pendant attachment


@dataclass(frozen=True)
class PendantReductionReport:
    eigenvalue: float
    attach_vertex: int
    new_vertex: int
    old_multiplicity: int
    new_multiplicity: int
    certified: bool  # new multiplicity is exactly old - 1
    upper_neighbor: float  # eigenvalue now strictly above, at the old position
    lower_neighbor: float  # eigenvalue now strictly below the old block
    strict_interlacing: bool

    def to_json(self) -> dict:
        return {
            "eigenvalue": repr(self.eigenvalue),
            "attach_vertex": self.attach_vertex,
            "new_vertex": self.new_vertex,
            "old_multiplicity": self.old_multiplicity,
            "new_multiplicity": self.new_multiplicity,
            "certified": self.certified,
            "upper_neighbor": repr(self.upper_neighbor),
            "lower_neighbor": repr(self.lower_neighbor),
            "strict_interlacing": self.strict_interlacing,
        }


def attach_pendant_reduce(
    g: Graph,
    cluster: EigenCluster,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> tuple[Graph, PendantReductionReport]:
    """Attach one pendant vertex so a repeated adjacency eigenvalue loses
    exactly one unit of multiplicity.

    The pendant goes on the vertex carrying the largest eigenvector component
    of the cluster (which must exceed the coefficient floor).  The drop from
    multiplicity l to l-1 is certified exactly from the squarefree structure
    of the new characteristic polynomial, and the report records the strict
    interlacing neighbors around the old eigenvalue block.
    """
    if cluster.multiplicity < 2:
        raise ValueError("multiplicity reduction needs a repeated eigenvalue")
    basis = np.asarray(cluster.basis)
    if basis.shape[0] != g.n:
        raise ValueError("cluster basis does not match the graph order")
    flat = int(np.argmax(np.abs(basis)))
    v_m = flat // basis.shape[1]
    peak = float(np.abs(basis).max())
    if peak <= tolerances.coefficient:
        raise SpectralNumericError(
            "no vertex carries an eigenvector component above the coefficient floor"
        )
    new_vertex = g.n
    grown = Graph(g.n + 1, g.edges | {(v_m, new_vertex)})
    old_dec = eigendecompose_symmetric(adjacency_matrix(g), tolerances=tolerances)
    old_cl = old_dec.cluster_nearest(cluster.value)
    if old_cl.multiplicity != cluster.multiplicity:
        raise ValueError("cluster does not belong to this graph's decomposition")
    new_dec = eigendecompose_symmetric(adjacency_matrix(grown), tolerances=tolerances)
    new_mult = _multiplicity_at(new_dec.structure, old_cl.value, tolerances)
    certified = new_mult == cluster.multiplicity - 1
    # position of the old eigenvalue block in the descending spectra
    old_desc = [
        cl.value for cl in reversed(old_dec.clusters) for _ in range(cl.multiplicity)
    ]
    new_desc = [
        cl.value for cl in reversed(new_dec.clusters) for _ in range(cl.multiplicity)
    ]
    j0 = min(
        range(len(old_desc)), key=lambda i: abs(old_desc[i] - old_cl.value)
    )
    while j0 > 0 and old_desc[j0 - 1] == old_desc[j0]:
        j0 -= 1
    upper = new_desc[j0]
    lower = new_desc[j0 + cluster.multiplicity]
    strict = upper > old_cl.value and lower < old_cl.value
    report = PendantReductionReport(
        eigenvalue=old_cl.value,
        attach_vertex=v_m,
        new_vertex=new_vertex,
        old_multiplicity=cluster.multiplicity,
        new_multiplicity=new_mult,
        certified=certified,
        upper_neighbor=upper,
        lower_neighbor=lower,
        strict_interlacing=strict,
    )
    return grown, report
