"""Command-line front end.

Exit codes: 0 success, 1 verification FAIL, 2 usage error, 3 budget
exceeded, 4 hypothesis not met.
"""

import argparse
import sys

from . import io
from ._enumerate import DEFAULT_BUDGET
from .exceptions import (
    BudgetExceededError,
    EmptyGraphError,
    EmptySetError,
    HypothesisNotMetError,
    InvalidVertexError,
    PreconditionError,
)
from .generators import FAMILY_NAMES, build_family
from .graph import contract
from .propagation import forcing_closure, power_closure
from .solvers import min_dominating, min_k_forcing, min_k_power_dominating
from .transforms import (
    build_xhat,
    pd_contraction_bounds,
    pd_low_degree_bounds,
    pd_partition_bound,
    zf_contraction_bounds,
    zf_partition_bound,
)
from .verifier import (
    BoundReport,
    check_named_families,
    check_sierpinski_formula,
    check_surgery_equivalences,
    run_inequality_suite,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_HYPOTHESIS = 0, 1, 2, 3, 4
SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ids(text):
    try:
        return io.parse_id_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser():
    parser = _Parser(prog="kforcing", description="k-forcing and k-power domination toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, output=True):
        p.add_argument("--format", choices=("json", "text"), default="json")
        if output:
            p.add_argument("--output", help="write the report here instead of stdout")

    g = sub.add_parser("gen", help="generate a graph family")
    g.add_argument("family", choices=FAMILY_NAMES)
    for flag in ("--p", "--n", "--q", "--c", "--r"):
        g.add_argument(flag, type=_positive)
    g.add_argument("-k", "--k", type=_nonneg, default=1)
    g.add_argument("--prob", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", help="graph file; a .meta.json sidecar is written next to it")

    c = sub.add_parser("closure", help="trace a forcing / power-domination closure")
    c.add_argument("--mode", choices=("forcing", "power"), required=True)
    c.add_argument("-k", type=_nonneg, required=True)
    c.add_argument("--seed-set", type=_ids, required=True)
    c.add_argument("file")
    common(c)

    s = sub.add_parser("solve", help="exact Z_k, gamma_{P,k} or gamma")
    s.add_argument("--param", choices=("zk", "pdk", "gamma"), required=True)
    s.add_argument("-k", type=_nonneg, default=1)
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("file")
    common(s)

    for name in ("contract", "xhat"):
        t = sub.add_parser(name, help=f"{name} a vertex set")
        t.add_argument("--set", type=_ids, required=True, dest="vertex_set")
        t.add_argument("file")
        t.add_argument("-o", "--output", required=True, help="output graph file")

    b = sub.add_parser("bound", help="contraction and partition bounds")
    bsub = b.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    bc = bsub.add_parser("contraction")
    bc.add_argument("--param", choices=("pdk", "zk"), required=True)
    bc.add_argument("-k", type=_nonneg, required=True)
    bc.add_argument("--set", type=_ids, required=True, dest="vertex_set")
    bc.add_argument("--low-degree", action="store_true", help="use the c(G[X]) upper bound (pdk only)")
    bc.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    bc.add_argument("file")
    common(bc)
    bp = bsub.add_parser("partition")
    bp.add_argument("--param", choices=("pdk", "zk"), required=True)
    bp.add_argument("-k", type=_nonneg, required=True)
    bp.add_argument("--parts", required=True)
    bp.add_argument("--workers", type=_positive, default=1)
    bp.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    bp.add_argument("--timings", action="store_true", help="include per-part wall-clock seconds")
    bp.add_argument("file")
    common(bp)

    v = sub.add_parser("verify", help="audit every applicable inequality")
    v.add_argument("target", help="graph file, or 'sierpinski' / 'families'")
    v.add_argument("-k", type=_nonneg, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    v.add_argument("--trials", type=_nonneg, default=20)
    v.add_argument("--p", type=_positive)
    v.add_argument("--n", type=_positive)
    v.add_argument("--mode", choices=("exact", "witness"))
    v.add_argument("--workers", type=_positive, default=1)
    common(v)
    return parser


def _load(path):
    try:
        return io.read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (io.GraphFormatError, EmptyGraphError, InvalidVertexError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(args, payload, text=None):
    body = io.dumps(payload) if args.format == "json" or text is None else text
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _envelope(command, data):
    return {"schema_version": SCHEMA_VERSION, "command": command, "result": data}


def cmd_gen(args):
    fam = build_family(
        args.family, k=args.k, p=args.p, n=args.n, q=args.q, c=args.c, r=args.r,
        prob=args.prob, seed=args.seed,
    )
    text = io.format_graph(fam.graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        with open(args.output + ".meta.json", "w", encoding="utf-8", newline="\n") as fh:
            fh.write(io.dumps(fam.metadata()))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_closure(args):
    g = _load(args.file)
    fn = forcing_closure if args.mode == "forcing" else power_closure
    trace = fn(g, args.k, args.seed_set)
    text = "".join(f"round {i}: {' '.join(map(str, sorted(r)))}\n" for i, r in enumerate(trace.rounds))
    text += f"success: {trace.success}\n"
    _emit(args, _envelope("closure", trace.to_dict()), text)
    return EXIT_OK


def cmd_solve(args):
    g = _load(args.file)
    if args.param == "zk":
        res = min_k_forcing(g, args.k, budget=args.budget, workers=args.workers)
    elif args.param == "pdk":
        res = min_k_power_dominating(g, args.k, budget=args.budget, workers=args.workers)
    else:
        res = min_dominating(g, budget=args.budget, workers=args.workers)
    text = f"{res.parameter} = {res.value}\nwitness: {' '.join(map(str, res.witness))}\n"
    _emit(args, _envelope("solve", res.to_dict()), text)
    return EXIT_OK


def cmd_contract(args):
    g = _load(args.file)
    res = contract(g, args.vertex_set)
    io.write_graph(res.graph, args.output)
    info = {"contracted_vertex": res.contracted_vertex, "id_map": {str(k): v for k, v in sorted(res.id_map.items())}}
    sys.stdout.write(io.dumps(_envelope("contract", info)))
    return EXIT_OK


def cmd_xhat(args):
    g = _load(args.file)
    res = build_xhat(g, args.vertex_set)
    io.write_graph(res.graph, args.output)
    info = {
        "core_ids": list(res.core_ids),
        "id_map": {str(k): v for k, v in sorted(res.id_map.items())},
        "pendant_map": {str(k): list(v) for k, v in sorted(res.pendant_map.items())},
    }
    sys.stdout.write(io.dumps(_envelope("xhat", info)))
    return EXIT_OK


def cmd_bound(args):
    g = _load(args.file)
    if args.kind == "contraction":
        if args.param == "pdk":
            fn = pd_low_degree_bounds if args.low_degree else pd_contraction_bounds
            interval = fn(g, args.k, args.vertex_set, budget=args.budget)
            data = {"parameter": "gammaPk", "k": args.k, "interval": interval.to_dict(),
                    "hypothesis": {"met": True, "description": "none required", "failing_parts": []}}
            met = True
        else:
            res = zf_contraction_bounds(g, args.k, args.vertex_set, budget=args.budget)
            data = {"parameter": "Zk", "k": args.k, **res.to_dict()}
            met = res.hypothesis.met
        text = io.dumps(data)
    else:
        try:
            parts = io.read_parts(args.parts)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read parts file {args.parts}: {exc}") from None
        fn = pd_partition_bound if args.param == "pdk" else zf_partition_bound
        res = fn(g, args.k, parts, workers=args.workers, budget=args.budget)
        data = res.to_dict(timings=args.timings)
        met = res.hypothesis.met
        text = f"bound: {res.bound}\nwitness: {' '.join(map(str, sorted(res.witness or ())))}\n"
        text += "".join(f"part {p.index}: {p.value} hypothesis_met={p.hypothesis_met}\n" for p in res.parts)
    _emit(args, _envelope(f"bound {args.kind}", data), text)
    return EXIT_OK if met else EXIT_HYPOTHESIS


def cmd_verify(args):
    if args.target == "sierpinski":
        if args.p is None or args.n is None:
            raise UsageError("verify sierpinski needs --p and --n")
        mode = args.mode or ("exact" if args.p**args.n <= 64 else "witness")
        report = check_sierpinski_formula(args.p, args.n, args.k, mode, budget=args.budget, workers=args.workers)
    elif args.target == "families":
        report = check_named_families(budget=args.budget)
    else:
        g = _load(args.target)
        report = run_inequality_suite(g, args.k, budget=args.budget, seed=args.seed)
        if args.trials:
            surgery = check_surgery_equivalences(g, args.k, trials=args.trials, seed=args.seed)
            report = BoundReport(report.checks + surgery.checks, report.graph_summary, report.notes).normalized()
    _emit(args, _envelope("verify", report.to_dict()), report.to_text())
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {
    "gen": cmd_gen,
    "closure": cmd_closure,
    "solve": cmd_solve,
    "contract": cmd_contract,
    "xhat": cmd_xhat,
    "bound": cmd_bound,
    "verify": cmd_verify,
}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"kforcing: error: {exc}\n")
        return EXIT_USAGE
    except (PreconditionError, HypothesisNotMetError) as exc:
        sys.stderr.write(f"kforcing: hypothesis not met: {exc}\n")
        return EXIT_HYPOTHESIS
    except BudgetExceededError as exc:
        sys.stderr.write(f"kforcing: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (InvalidVertexError, EmptySetError, EmptyGraphError, ValueError) as exc:
        sys.stderr.write(f"kforcing: error: {exc}\n")
        return EXIT_USAGE

def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
