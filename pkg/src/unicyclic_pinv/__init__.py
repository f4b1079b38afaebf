"""Exact Moore-Penrose inverses of unicyclic incidence matrices."""

from .exact_arith import RationalMatrix, mat_eq, mat_mul, mat_transpose
from .graph_core import (
    Graph,
    GraphClass,
    classify,
    decompose,
    find_cycle,
    parse_graph,
)
from .matrices import incidence_matrix, parity_matrix, signless_laplacians
from .oracle import PenroseReport, check_penrose, pinv_rank_factorization
from .pinv import (
    CombinatorialPinv,
    combinatorial_pinv,
    even_unicyclic_pinv,
    odd_unicyclic_inverse,
    predicted_HM,
    predicted_MH,
    qplus_splus,
)

__version__ = "0.1.0"
