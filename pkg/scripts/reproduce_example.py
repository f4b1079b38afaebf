"""Print M and 36*H for the nine-vertex example graph and check them against the oracle."""

from pathlib import Path

from unicyclic_pinv import decompose, incidence_matrix, parse_graph
from unicyclic_pinv.exact_arith import mat_scale
from unicyclic_pinv.oracle import check_penrose, pinv_rank_factorization
from unicyclic_pinv.pinv import even_unicyclic_pinv

GRAPH = Path(__file__).resolve().parent.parent / "tests" / "data" / "example9.txt"


def show(name, mat):
    print(name)
    for row in mat.entries:
        print("  " + " ".join(f"{str(x):>4}" for x in row))


def main():
    g = parse_graph(GRAPH.read_text())
    m = incidence_matrix(g)
    h = even_unicyclic_pinv(decompose(g)).h
    show("M", m)
    show("36*H", mat_scale(h, 36))
    print("Penrose:", check_penrose(m, h).to_json())
    print("equals oracle:", h == pinv_rank_factorization(m))


if __name__ == "__main__":
    main()
