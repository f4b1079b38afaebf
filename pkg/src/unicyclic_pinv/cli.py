"""Command line: classify, pinv, verify, gen, bench.

Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bench as bench_mod
from .exact_arith import (
    RationalMatrix,
    mat_mul,
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
)
from .generate import GenSpec, GenSpecError, random_unicyclic
from .graph_core import (
    Graph,
    GraphClass,
    GraphFormatError,
    classify,
    decompose,
    find_cycle,
    format_graph,
    parse_graph,
)
from .matrices import incidence_matrix
from .oracle import (
    check_cycle_fingerprint,
    check_parity_annihilation,
    check_penrose,
    check_pendant_fingerprint,
    first_difference,
)
from .pinv import combinatorial_pinv, predicted_HM, predicted_MH, qplus_splus

EXIT_OK, EXIT_FAIL = 0, 1  # argparse exits with 2 on usage errors


class CliError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(_read_text(path))
    except GraphFormatError as exc:
        raise CliError(f"invalid graph: {exc}") from None


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _summary_line(g: Graph) -> str:
    cls = classify(g)
    line = f"{cls} n={g.n} m={g.m}"
    if cls in (GraphClass.OddUnicyclic, GraphClass.EvenUnicyclic):
        line += f" |C|={find_cycle(g).length}"
    return line


def _require_unicyclic(g: Graph) -> None:
    cls = classify(g)
    if cls not in (GraphClass.OddUnicyclic, GraphClass.EvenUnicyclic):
        raise CliError(
            f"graph classifies as {cls}; the closed forms cover unicyclic graphs only "
            f"(n={g.n}, m={g.m})"
        )


# -- subcommands --------------------------------------------------------------


def cmd_classify(args) -> int:
    g = _load_graph(args.input)
    _write(_summary_line(g) + "\n", args.out)
    return EXIT_OK


def _labels(g: Graph, name: str):
    edges = [f"e{i}" for i in range(1, g.m + 1)]
    verts = [f"v{j}" for j in range(1, g.n + 1)]
    return {
        "h": (edges, verts),
        "mh": (verts, verts),
        "hm": (edges, edges),
        "qplus": (verts, verts),
        "splus": (edges, edges),
    }[name]


def cmd_pinv(args) -> int:
    g = _load_graph(args.input)
    _require_unicyclic(g)
    dec = decompose(g)
    comb = combinatorial_pinv(dec)
    emits = args.emit or ["h"]
    mats: dict[str, RationalMatrix] = {}
    for name in emits:
        if name == "h":
            mats[name] = comb.h
        elif name == "mh":
            mats[name] = predicted_MH(dec)
        elif name == "hm":
            mats[name] = predicted_HM(dec)
        elif name in ("qplus", "splus") and not {"qplus", "splus"} <= mats.keys():
            mats["qplus"], mats["splus"] = qplus_splus(comb)
    notes = {"class": str(comb.graph_class), "provenance": comb.provenance}
    if "hm" in emits and not dec.is_even:
        notes["hm_note"] = "identity: M is invertible on odd cycles"
    if args.format == "json":
        doc = dict(notes)
        for name in emits:
            rl, cl = _labels(g, name)
            doc[name] = matrix_to_json(mats[name], row_labels=rl, col_labels=cl)
        text = json.dumps(doc, indent=1) + "\n"
    else:
        parts = []
        for name in emits:
            rl, cl = _labels(g, name)
            header = f"# {name}" if len(emits) > 1 else None
            body = matrix_to_csv(mats[name], rl, cl, corner="edge\\vertex" if name == "h" else "")
            parts.append(body if header is None else f"{header}\n{body}")
        text = "".join(parts)
    _write(text, args.out)
    return EXIT_OK


def _load_candidate(path: str) -> RationalMatrix:
    text = _read_text(path)
    try:
        if text.lstrip().startswith("{"):
            doc = json.loads(text)
            return matrix_from_json(doc.get("h", doc))
        return matrix_from_csv(text)
    except (ValueError, KeyError) as exc:
        raise CliError(f"cannot read candidate matrix: {exc}") from None


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    _require_unicyclic(g)
    dec = decompose(g)
    m = incidence_matrix(g)
    if args.candidate:
        h = _load_candidate(args.candidate)
        if h.shape != (g.m, g.n):
            raise CliError(f"candidate is {h.rows}x{h.cols}, expected {g.m}x{g.n}")
    else:
        h = combinatorial_pinv(dec).h
    report = check_penrose(m, h)

    mh = mat_mul(m, h)
    hm = mat_mul(h, m)
    checks = {
        "MH_closed_form": first_difference(mh, predicted_MH(dec)) is None,
        "HM_closed_form": first_difference(hm, predicted_HM(dec)) is None,
    }
    if dec.is_even:
        checks["parity_annihilation"] = check_parity_annihilation(g, m)
        checks["pendant_fingerprint"] = check_pendant_fingerprint(g, h)
        checks["cycle_fingerprint"] = check_cycle_fingerprint(dec, hm)
    doc = report.to_json()
    doc["checks"] = checks
    doc["passed"] = report.passed and all(checks.values())
    _write(json.dumps(doc) + "\n", args.out)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def cmd_gen(args) -> int:
    spec = GenSpec(args.n, args.cycle, args.parity, args.seed)
    try:
        g = random_unicyclic(spec)
    except GenSpecError as exc:
        raise CliError(str(exc)) from None
    _write(format_graph(g), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    seeds = range(args.seed, args.seed + args.seeds)
    try:
        records = bench_mod.run_bench(args.sizes, seeds, args.oracle_cap, args.cycle)
    except (GenSpecError, ValueError) as exc:
        raise CliError(str(exc)) from None
    _write(bench_mod.records_to_csv(records), args.out)
    for row in bench_mod.summarize(records):
        print(
            "n={n} runs={runs} verified={verified} median_comb={c} median_oracle={o} ratio={r}".format(
                n=row["n"], runs=row["runs"], verified=row["verified"],
                c=_fmt(row["median_t_combinatorial"]), o=_fmt(row["median_t_oracle"]), r=_fmt(row["ratio"]),
            ),
            file=sys.stderr,
        )
    return EXIT_OK if all(r.verified for r in records) else EXIT_FAIL


def _fmt(x) -> str:
    return "-" if x is None else f"{x:.4g}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unicyclic-pinv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_io(sp, with_input=True):
        if with_input:
            sp.add_argument("--input", default="-", help="edge-list file, or - for stdin")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("classify", help="print graph class, n, m and cycle length")
    add_io(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("pinv", help="print the combinatorial (pseudo)inverse")
    add_io(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="csv")
    sp.add_argument("--emit", action="append", choices=("h", "mh", "hm", "qplus", "splus"),
                    help="matrix to print; repeatable (default: h)")
    sp.set_defaults(func=cmd_pinv)

    sp = sub.add_parser("verify", help="Penrose axioms and closed-form checks, as JSON")
    add_io(sp)
    sp.add_argument("--candidate", default=None,
                    help="verify this matrix (JSON or CSV) instead of the computed one")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="emit a seeded random unicyclic graph")
    add_io(sp, with_input=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cycle", type=int, default=None)
    sp.add_argument("--parity", choices=("even", "odd", "any"), default="any")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="time combinatorial vs oracle; CSV on stdout")
    add_io(sp, with_input=False)
    sp.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64])
    sp.add_argument("--seeds", type=int, default=5, help="seeds per size")
    sp.add_argument("--seed", type=int, default=0, help="first seed")
    sp.add_argument("--cycle", type=int, default=None)
    sp.add_argument("--oracle-cap", type=int, default=bench_mod.DEFAULT_ORACLE_CAP)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
