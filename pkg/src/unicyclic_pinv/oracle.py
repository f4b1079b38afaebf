"""Independent checks: exact pseudoinverse by rank factorisation and a Penrose checker."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from .exact_arith import (
    DimensionError,
    RationalMatrix,
    mat_mul,
    mat_sub,
    mat_transpose,
    rref,
    solve_full_rank,
    zeros,
)
from .graph_core import Graph, UnicyclicDecomposition
from .matrices import parity_matrix

__all__ = [
    "CertificationError",
    "Violation",
    "PenroseReport",
    "check_penrose",
    "pinv_rank_factorization",
    "check_parity_annihilation",
    "first_difference",
    "pendant_positions",
    "check_pendant_fingerprint",
    "check_cycle_fingerprint",
]


class CertificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: int
    row: int  # 1-based
    col: int  # 1-based


@dataclass(frozen=True)
class PenroseReport:
    axiom1: bool
    axiom2: bool
    axiom3: bool
    axiom4: bool
    first_violation: Optional[Violation] = None

    @property
    def passed(self) -> bool:
        return self.axiom1 and self.axiom2 and self.axiom3 and self.axiom4

    def to_json(self) -> dict:
        w = self.first_violation
        return {
            "axiom1": self.axiom1,
            "axiom2": self.axiom2,
            "axiom3": self.axiom3,
            "axiom4": self.axiom4,
            "witness": None if w is None else asdict(w),
        }


def first_difference(a: RationalMatrix, b: RationalMatrix) -> Optional[tuple[int, int]]:
    """0-based position of the first differing entry in row-major order."""
    diff = mat_sub(a, b)
    for i, row in enumerate(diff.numerators):
        for j, x in enumerate(row):
            if x:
                return i, j
    return None


def _nnz(m: RationalMatrix) -> int:
    return sum(1 for r in m.numerators for x in r if x)


def _cheaper_triple(left: RationalMatrix, mid: RationalMatrix, right: RationalMatrix,
                    left_mid: RationalMatrix, mid_right: RationalMatrix) -> RationalMatrix:
    """``left @ mid @ right`` given both pairwise products; picks the cheaper association."""
    cost_lr = min(_nnz(left_mid) * right.cols, _nnz(right) * left_mid.rows)
    cost_rl = min(_nnz(left) * mid_right.cols, _nnz(mid_right) * left.rows)
    if cost_lr <= cost_rl:
        return mat_mul(left_mid, right)
    return mat_mul(left, mid_right)


def check_penrose(a: RationalMatrix, x: RationalMatrix) -> PenroseReport:
    """Check the four Penrose equations for candidate ``x`` of ``a`` exactly."""
    if (x.rows, x.cols) != (a.cols, a.rows):
        raise DimensionError(f"candidate {x.shape} does not match transpose of {a.shape}")
    ax = mat_mul(a, x)
    xa = mat_mul(x, a)
    checks = [
        (_cheaper_triple(a, x, a, ax, xa), a),
        (_cheaper_triple(x, a, x, xa, ax), x),
        (mat_transpose(ax), ax),
        (mat_transpose(xa), xa),
    ]
    flags = []
    witness = None
    for k, (lhs, rhs) in enumerate(checks, 1):
        pos = first_difference(lhs, rhs)
        flags.append(pos is None)
        if pos is not None and witness is None:
            witness = Violation(k, pos[0] + 1, pos[1] + 1)
    return PenroseReport(*flags, first_violation=witness)


def pinv_rank_factorization(a: RationalMatrix, certify: bool = True) -> RationalMatrix:
    """Exact Moore-Penrose inverse via ``A = F G`` from the reduced row echelon form.

    ``F`` is the pivot columns of ``A`` and ``G`` the nonzero rows of
    ``rref(A)``; ``A+ = G^T (G G^T)^-1 (F^T F)^-1 F^T``.
    """
    r_form, pivots = rref(a)
    r = len(pivots)
    if r == 0:
        return zeros(a.cols, a.rows)
    f = a.submatrix(cols=pivots)
    g = r_form.submatrix(rows=range(r))
    ft, gt = mat_transpose(f), mat_transpose(g)
    y = solve_full_rank(mat_mul(ft, f), ft)  # (F^T F)^-1 F^T
    z = solve_full_rank(mat_mul(g, gt), y)  # (G G^T)^-1 (F^T F)^-1 F^T
    x = mat_mul(gt, z)
    if certify:
        report = check_penrose(a, x)
        if not report.passed:
            raise CertificationError(f"rank-factorisation pseudoinverse failed: {report}")
    return x


def matrix_rank(a: RationalMatrix) -> int:
    return len(rref(a)[1])


def check_parity_annihilation(g: Graph, m: RationalMatrix) -> bool:
    """True iff ``[(-1)^{d(i,j)}] M`` vanishes (holds exactly for bipartite ``g``)."""
    return mat_mul(parity_matrix(g), m).is_zero()


def pendant_positions(g: Graph) -> set[tuple[int, int]]:
    """0-based ``(edge, vertex)`` pairs where the vertex is a degree-1 endpoint."""
    return {(e, v) for e, pair in enumerate(g.edges) for v in pair if g.degree(v) == 1}


def check_pendant_fingerprint(g: Graph, h: RationalMatrix) -> bool:
    """``(n-1)/n`` occurs in ``h`` exactly at the pendant edge/vertex positions."""
    target = Fraction(g.n - 1, g.n)
    hits = set()
    if h.denominator % target.denominator == 0:
        want = target.numerator * (h.denominator // target.denominator)
        hits = {(i, j) for i, row in enumerate(h.numerators) for j, x in enumerate(row) if x == want}
    return hits == pendant_positions(g)


def check_cycle_fingerprint(dec: UnicyclicDecomposition, hm: RationalMatrix) -> bool:
    """Diagonal of ``H M`` is ``(|C|-1)/|C|`` on cycle edges and 1 elsewhere."""
    L = dec.cycle_length
    return all(
        hm[i, i] == (Fraction(L - 1, L) if dec.on_cycle(i) else 1) for i in range(hm.rows)
    )
