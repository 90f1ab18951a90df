import argparse
import sys
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from orbitlattice.combinatorics.intersections import (
    closure_set,
    codim_one_graph,
    intersect,
    pairwise_table,
)
from orbitlattice.combinatorics.involutions import (
    Involution,
    is_maximal_dimension,
    orbit_dim,
    parse_cycles,
    r_stat,
    sigma_of_tableau,
    tableau_of_sigma,
)
from orbitlattice.combinatorics.rankmatrix import (
    format_grid,
    hasse_diagram,
    involution_leq,
    liftings,
    n_matrix,
    parse_matrix,
    rank_matrix,
    reconstruct,
    validate,
)
from orbitlattice.combinatorics.rscells import (
    cell,
    cell_graph,
    edge_vs_codim,
    parse_permutation,
    root_positions,
)
from orbitlattice.combinatorics.tableaux import (
    StandardTableau,
    enumerate_two_column,
    parse_two_column,
)
from orbitlattice.config import OutputFormat
from orbitlattice.errors import ConsistencyError, OrbitLatticeError, ParseError
from orbitlattice.infrastructure.logging import setup_logging
from orbitlattice.models.schemas import (
    CellDoc,
    ClosureDoc,
    DimensionDoc,
    EdgeVsCodimDoc,
    FailureDoc,
    GraphDoc,
    IntersectionDoc,
    InvolutionDoc,
    LiftingsDoc,
    MatrixDoc,
    OrderDoc,
    PairwiseTableDoc,
    RootPositionsDoc,
    SigmaDoc,
    StandardTableauDoc,
    TableauDoc,
    TableauListDoc,
    ValidityDoc,
    VerifyDoc,
    VerifySuiteDoc,
)
from orbitlattice.tools import render
from orbitlattice.tools.verify import SUITES, check_cap, run_verify

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_VERIFY = 3


@dataclass
class Output:
    """One emitted document in every format the subcommand supports."""
    document: BaseModel
    text: str
    dot: Optional[str] = None
    csv: Optional[str] = None
    exit_code: int = EXIT_OK

    def render(self, fmt: OutputFormat) -> str:
        if fmt == OutputFormat.JSON:
            return self.document.model_dump_json(indent=2) + "\n"
        if fmt == OutputFormat.DOT:
            return self.dot
        if fmt == OutputFormat.CSV:
            return self.csv
        return self.text


# ----------------------------------------------------------------------------
# Argument helpers
# ----------------------------------------------------------------------------

def _parsed(args, flag: str, func: Callable, *extra):
    """Runs a text parser, turning ParseError into an argparse error naming *flag*."""
    try:
        return func(getattr(args, flag.lstrip("-").replace("-", "_")), *extra)
    except ParseError as exc:
        args.parser.error(f"argument {flag}: {exc}")


def _sigma(args, flag: str = "--sigma") -> Involution:
    return _parsed(args, flag, parse_cycles, args.n)


def _window(text: str):
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'i,j', got '{text}'") from None
    return i, j


def _sigma_pair(args, left: str, right: str) -> Tuple[Involution, Involution]:
    """Both involutions at one n: --n if given, else the largest entry of either."""
    if args.n is not None:
        return _sigma(args, left), _sigma(args, right)
    sizes = []
    for flag in (left, right):
        try:
            sizes.append(parse_cycles(getattr(args, flag.lstrip("-"))).n)
        except ParseError:
            pass
    if not sizes:
        _parsed(args, left, parse_cycles)
    n = max(sizes)
    return _parsed(args, left, parse_cycles, n), _parsed(args, right, parse_cycles, n)


def _orbits(args):
    if args.as_tableaux:
        return _parsed(args, "--left", parse_two_column), _parsed(args, "--right", parse_two_column)
    return _sigma_pair(args, "--left", "--right")


def _capped(args, n: int) -> None:
    check_cap(n, unsafe=args.unsafe_no_cap)


# ----------------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------------

def cmd_tableaux(args) -> Output:
    tableaux = enumerate_two_column(args.n, args.k)
    doc = TableauListDoc(
        n=args.n, k=args.k, count=len(tableaux),
        tableaux=[TableauDoc.from_tableau(t) for t in tableaux],
    )
    text = "".join(t.text + "\n" for t in tableaux)
    csv = render.rows_to_csv(("text", "col1", "col2"), (
        (t.text, " ".join(map(str, t.col1)), " ".join(map(str, t.col2))) for t in tableaux
    ))
    return Output(doc, text, csv=csv)


def cmd_sigma(args) -> Output:
    tableau = _parsed(args, "--tableau", parse_two_column)
    sigma = sigma_of_tableau(tableau)
    doc = SigmaDoc(tableau=TableauDoc.from_tableau(tableau), sigma=InvolutionDoc.from_involution(sigma))
    return Output(doc, sigma.text + "\n")


def cmd_tableau(args) -> Output:
    sigma = _sigma(args)
    tableau = tableau_of_sigma(sigma)
    doc = SigmaDoc(tableau=TableauDoc.from_tableau(tableau), sigma=InvolutionDoc.from_involution(sigma))
    return Output(doc, f"{tableau.text}\n{tableau.to_standard()}\n")


def _matrix_output(kind: str, matrix) -> Output:
    doc = MatrixDoc.from_matrix(kind, matrix)
    csv = render.rows_to_csv([str(j) for j in range(1, matrix.n + 1)], matrix.rows())
    return Output(doc, format_grid(matrix) + "\n", csv=csv)


def cmd_nmatrix(args) -> Output:
    return _matrix_output("nmatrix", n_matrix(_sigma(args)))


def cmd_rankmatrix(args) -> Output:
    return _matrix_output("rankmatrix", rank_matrix(_sigma(args)))


def cmd_validate(args) -> Output:
    matrix = _parsed(args, "--matrix", parse_matrix)
    report = validate(matrix)
    sigma = reconstruct(matrix) if report.valid else None
    doc = ValidityDoc.from_report(matrix, report, sigma)
    lines = ["valid" if report.valid else "invalid"]
    if sigma is not None:
        lines.append(f"rank matrix of {sigma.text}")
    lines.extend(f"  ({v.condition}) at ({v.i},{v.j})" for v in report.violations)
    return Output(doc, "\n".join(lines) + "\n")


def cmd_dim(args) -> Output:
    sigma = _sigma(args)
    maximal = is_maximal_dimension(sigma)
    doc = DimensionDoc(
        sigma=InvolutionDoc.from_involution(sigma),
        r_stats=[r_stat(sigma, s) for s in range(1, sigma.k + 1)],
        maximal=maximal,
        tableau=TableauDoc.from_tableau(tableau_of_sigma(sigma)) if maximal else None,
    )
    return Output(doc, f"{orbit_dim(sigma)}\n")


def cmd_order(args) -> Output:
    lhs, rhs = _sigma_pair(args, "--lhs", "--rhs")
    down, up = involution_leq(lhs, rhs), involution_leq(rhs, lhs)
    doc = OrderDoc(
        lhs=InvolutionDoc.from_involution(lhs),
        rhs=InvolutionDoc.from_involution(rhs),
        lhs_leq_rhs=down,
        rhs_leq_lhs=up,
    )
    text = f"{lhs.text} <= {rhs.text}: {'yes' if down else 'no'}\n{rhs.text} <= {lhs.text}: {'yes' if up else 'no'}\n"
    return Output(doc, text)


def cmd_closure(args) -> Output:
    sigma = _sigma(args)
    _capped(args, sigma.n)
    orbits = closure_set(sigma)
    if args.same_rank:
        orbits = [other for other in orbits if other.k == sigma.k]
    doc = ClosureDoc(
        sigma=InvolutionDoc.from_involution(sigma),
        count=len(orbits),
        orbits=[InvolutionDoc.from_involution(other) for other in orbits],
    )
    text = "".join(f"{other.text}  dim={orbit_dim(other)}\n" for other in orbits)
    return Output(doc, text)


def cmd_intersect(args) -> Output:
    left, right = _orbits(args)
    _capped(args, left.n)
    report = intersect(left, right)
    return Output(IntersectionDoc.from_report(report), render.intersection_text(report))


def cmd_table(args) -> Output:
    _capped(args, args.n)
    table = pairwise_table(args.n, args.k)
    return Output(PairwiseTableDoc.from_table(table), render.table_text(table), csv=render.table_csv(table))


def cmd_cell(args) -> Output:
    tableau = _parsed(args, "--tableau", StandardTableau.from_text)
    members = cell(tableau)
    doc = CellDoc(
        tableau=StandardTableauDoc.from_tableau(tableau),
        size=len(members),
        members=[list(w.values) for w in members],
    )
    return Output(doc, "".join(f"{w}\n" for w in members))


def cmd_cellgraph(args) -> Output:
    tableau = _parsed(args, "--tableau", StandardTableau.from_text)
    graph = cell_graph(tableau)
    nx_graph = graph.to_networkx()
    return Output(
        GraphDoc.from_cell_graph(graph),
        render.graph_text(nx_graph),
        dot=render.graph_to_dot(nx_graph, f"cell graph of {tableau.text}"),
    )


def cmd_codim1graph(args) -> Output:
    _capped(args, args.n)
    graph = codim_one_graph(args.n, args.k)
    return Output(
        render.graph_doc(graph, "codim1graph"),
        render.graph_text(graph),
        dot=render.graph_to_dot(graph, f"codim 1 graph n={args.n} k={args.k}"),
    )


def cmd_edge_vs_codim(args) -> Output:
    _capped(args, args.n)
    report = edge_vs_codim(args.n, args.k)
    return Output(
        EdgeVsCodimDoc.from_report(report),
        render.edge_vs_codim_text(report),
        csv=render.edge_vs_codim_csv(report),
    )


def cmd_hasse(args) -> Output:
    _capped(args, args.n)
    graph = hasse_diagram(args.n, args.k)
    return Output(
        render.graph_doc(graph, "hasse"),
        render.graph_text(graph),
        dot=render.graph_to_dot(graph, f"closure order n={args.n}"),
    )


def cmd_liftings(args) -> Output:
    _capped(args, args.n)
    i, j = args.window
    delta = _parsed(args, "--sigma", parse_cycles, j - i + 1)
    found = liftings(delta, i, j, args.n)
    doc = LiftingsDoc(
        delta=InvolutionDoc.from_involution(delta),
        window=(i, j),
        n=args.n,
        liftings=[InvolutionDoc.from_involution(sigma) for sigma in found],
    )
    return Output(doc, "".join(sigma.text + "\n" for sigma in found))


def cmd_roots(args) -> Output:
    w = _parsed(args, "--w", parse_permutation)
    positions = root_positions(w).sorted_positions()
    doc = RootPositionsDoc(w=list(w.values), positions=positions)
    return Output(doc, "".join(f"({i},{j})\n" for i, j in positions))


def cmd_verify(args) -> Output:
    started = time.perf_counter()
    results = run_verify(args.n_max, args.suite, unsafe=args.unsafe_no_cap)
    elapsed = time.perf_counter() - started
    ok = all(result.ok for result in results)
    doc = VerifyDoc(
        n_max=args.n_max,
        ok=ok,
        suites=[
            VerifySuiteDoc(
                name=result.name,
                cases=result.cases,
                failures=[FailureDoc(case=f.case, detail=f.detail) for f in result.failures],
                seconds=round(result.seconds, 3) if args.timings else None,
            )
            for result in results
        ],
    )
    lines = []
    for result in results:
        timing = f"  {result.seconds:.2f}s" if args.timings else ""
        lines.append(f"{'ok  ' if result.ok else 'FAIL'} {result.name}: {result.cases} cases{timing}")
        lines.extend(f"     {f.case}: {f.detail}" for f in result.failures[:10])
    total_failures = sum(len(result.failures) for result in results)
    print(f"verify n_max={args.n_max}: {total_failures} failure(s) in {elapsed:.2f}s", file=sys.stderr)
    return Output(doc, "\n".join(lines) + "\n", exit_code=EXIT_OK if ok else EXIT_VERIFY)


# ----------------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------------

TEXT_JSON = ("text", "json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitlattice",
        description="B-orbits, rank matrices and orbital varieties of nilpotent order 2.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, formats: Sequence[str] = TEXT_JSON):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--format", choices=list(formats), default="text")
        sub.add_argument("--unsafe-no-cap", action="store_true", help="Lift the soft n cap")
        sub.set_defaults(handler=handler, parser=sub)
        return sub

    sub = add("tableaux", cmd_tableaux, "List the tableaux of dual shape (n-k,k)", ("text", "json", "csv"))
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int, required=True)

    sub = add("sigma", cmd_sigma, "sigma_T of a two-column tableau")
    sub.add_argument("--tableau", required=True, help="e.g. '1,3,5|2,4'")

    sub = add("tableau", cmd_tableau, "The tableau T with sigma_T = sigma")
    sub.add_argument("--sigma", required=True, help="e.g. '(1,2)(3,4)'")
    sub.add_argument("--n", type=int)

    for name, handler, help_text in (
        ("nmatrix", cmd_nmatrix, "The matrix N_sigma"),
        ("rankmatrix", cmd_rankmatrix, "The rank matrix R_sigma"),
        ("dim", cmd_dim, "Dimension of the B-orbit of N_sigma"),
        ("closure", cmd_closure, "B-orbits in the closure of B.N_sigma"),
    ):
        formats = ("text", "json", "csv") if name in ("nmatrix", "rankmatrix") else TEXT_JSON
        sub = add(name, handler, help_text, formats)
        sub.add_argument("--sigma", required=True)
        sub.add_argument("--n", type=int)
        if name == "closure":
            sub.add_argument("--same-rank", action="store_true", help="Only orbits with L = L(sigma)")

    sub = add("validate", cmd_validate, "Check whether a matrix is a rank matrix")
    sub.add_argument("--matrix", required=True, help="rows separated by ';', entries by ','")

    sub = add("order", cmd_order, "Compare two involutions in the closure order")
    sub.add_argument("--lhs", required=True)
    sub.add_argument("--rhs", required=True)
    sub.add_argument("--n", type=int)

    sub = add("intersect", cmd_intersect, "Components of the intersection of two orbit closures")
    sub.add_argument("--left", required=True)
    sub.add_argument("--right", required=True)
    sub.add_argument("--as-tableaux", action="store_true", help="Read --left/--right as tableaux")
    sub.add_argument("--n", type=int)

    for name, handler, help_text, formats in (
        ("table", cmd_table, "Pairwise intersections of orbital varieties", ("text", "json", "csv")),
        ("codim1graph", cmd_codim1graph, "Graph of codimension-1 intersections", ("text", "json", "dot")),
        ("edge-vs-codim", cmd_edge_vs_codim, "Cell-graph edges against codimension 1", ("text", "json", "csv")),
    ):
        sub = add(name, handler, help_text, formats)
        sub.add_argument("--n", type=int, required=True)
        sub.add_argument("--k", type=int, required=True)

    sub = add("cell", cmd_cell, "The left cell C_T")
    sub.add_argument("--tableau", required=True, help="rows like '1,3/2/4' or columns like '1,2,4|3'")

    sub = add("cellgraph", cmd_cellgraph, "The cell graph of T", ("text", "json", "dot"))
    sub.add_argument("--tableau", required=True)

    sub = add("roots", cmd_roots, "Positions (i,j) spanning n intersected with its w-conjugate")
    sub.add_argument("--w", required=True, help="one-line notation, e.g. '4,2,3,1'")

    sub = add("hasse", cmd_hasse, "Hasse diagram of the closure order", ("text", "json", "dot"))
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--k", type=int)

    sub = add("liftings", cmd_liftings, "All sigma projecting to a given involution of a window")
    sub.add_argument("--sigma", required=True, help="involution of the window, relabelled from 1")
    sub.add_argument("--window", type=_window, required=True, help="i,j")
    sub.add_argument("--n", type=int, required=True)

    sub = add("verify", cmd_verify, "Run the verification suites")
    sub.add_argument("--n-max", type=int, required=True)
    sub.add_argument("--suite", action="append", choices=list(SUITES), help="Repeatable; default all")
    sub.add_argument("--timings", action="store_true", help="Include wall times in the output")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logger = setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        output = args.handler(args)
    except SystemExit as exc:
        # args.parser.error() from a value that failed to parse.
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except OrbitLatticeError as exc:
        logger.warning("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        logger.error("internal inconsistency in %s: %s", args.command, exc, exc_info=True)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    sys.stdout.write(output.render(OutputFormat(args.format)))
    return output.exit_code


if __name__ == "__main__":
    sys.exit(main())
