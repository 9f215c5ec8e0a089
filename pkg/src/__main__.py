import argparse
import logging
import os
import sys
from typing import Optional

from src.algorithms import aggregate, run_heuristic, solve_exact
from src.analysis import (
    FORMULA_TABLES,
    approximation_report,
    formula_table,
    run_trials,
    verify_theorem,
)
from src.data import (
    format_solution,
    format_tournament,
    generate_tournament,
    read_ballots,
    read_experiment_config,
    read_tournament,
    save_dot,
    write_summary_csv,
    write_tournament,
)
from src.structs import (
    ALGORITHM_NAMES,
    ExperimentConfig,
    Model,
    Ordering,
    PivotRule,
    TieRule,
    backward_count,
    backward_edges,
)
from src.utils import FastError

SEED_ENV_VAR = "FAST_SEED"

logger = logging.getLogger("src")


def _default_seed() -> int:
    value = os.environ.get(SEED_ENV_VAR)
    if value is None:
        return 0
    try:
        return int(value)
    except ValueError:
        raise FastError(f"{SEED_ENV_VAR} must be an integer, got {value!r}") from None


def _parse_model(text: str) -> tuple[Model, float]:
    """Parse `uniform`, `transitive` or `noisy:P`"""
    name, _, probability = text.partition(":")
    try:
        model = Model(name)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown model {text!r}, expected uniform, transitive or noisy:P"
        ) from None
    if model is Model.NOISY:
        try:
            return model, float(probability)
        except ValueError:
            raise argparse.ArgumentTypeError(f"noisy model needs a probability, got {text!r}") from None
    if probability:
        raise argparse.ArgumentTypeError(f"model {name} does not take a probability")
    return model, 0.0


def _seed(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else _default_seed()


def run_gen(args: argparse.Namespace) -> int:
    model, p = args.model
    t = generate_tournament(model, args.n, _seed(args), p)
    if args.out:
        write_tournament(t, args.out)
        logger.info("Wrote tournament on %d vertices to %s", t.n, args.out)
    else:
        sys.stdout.write(format_tournament(t))
    return 0


def run_solve(args: argparse.Namespace) -> int:
    t = read_tournament(args.input)
    if args.algo == "exact":
        result = solve_exact(t)
        sys.stdout.write(format_solution(result.optimal_ordering, result.optimal_cost))
    else:
        heuristic = run_heuristic(args.algo, t, _seed(args), PivotRule(args.pivot))
        sys.stdout.write(format_solution(heuristic.ordering, heuristic.cost))
        print(f"work {heuristic.work}")
    return 0


def run_cost(args: argparse.Namespace) -> int:
    t = read_tournament(args.input)
    ordering = Ordering.parse(args.order)
    print(f"cost {backward_count(t, ordering)}")
    for u, v in backward_edges(t, ordering):
        print(f"backward {u} {v}")
    if args.dot:
        save_dot(t, args.dot, ordering)
    return 0


def run_experiment(args: argparse.Namespace) -> int:
    data = read_experiment_config(args.config).to_json() if args.config else {}
    if args.algo:
        data["algorithms"] = args.algo
    if args.n is not None:
        data["n"] = args.n
    if args.model is not None:
        data["model"] = args.model[0].value
        data["p"] = args.model[1]
    for key in ("trials", "seed", "workers"):
        if getattr(args, key) is not None:
            data[key] = getattr(args, key)
    if args.pivot is not None:
        data["pivot_rule"] = args.pivot
    data.setdefault("seed", _default_seed())
    config = ExperimentConfig.from_json(data)

    approximation = args.report == "approximation"
    summary = approximation_report(config) if approximation else run_trials(config)
    if args.out:
        with open(args.out, mode="w", encoding="utf-8", newline="") as f:
            write_summary_csv([summary], f, extended=approximation)
    else:
        write_summary_csv([summary], sys.stdout, extended=approximation)
    return 0


def run_verify(args: argparse.Namespace) -> int:
    report = verify_theorem(args.theorem, args.nmax)
    for row in report.rows:
        print(row)
    print(f"theorem {report.theorem}: {'ok' if report.ok else 'FAILED'}")
    return 0 if report.ok else 1


def run_formulas(args: argparse.Namespace) -> int:
    header, rows = formula_table(args.table, args.max)
    print(",".join(header))
    for row in rows:
        print(",".join(row))
    return 0


def run_aggregate(args: argparse.Namespace) -> int:
    profile = read_ballots(args.ballots)
    ranking, distance = aggregate(
        profile, args.algo, _seed(args), TieRule(args.ties), PivotRule(args.pivot)
    )
    print(f"ranking {ranking}")
    print(f"kendall_tau {distance}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src",
        description="Sorting heuristics, exact solvers and average-case analysis for the "
        "feedback arc set problem on tournaments",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log progress (twice for debug)"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    seed_help = f"Random seed (default: ${SEED_ENV_VAR} or 0)"
    pivots = [rule.value for rule in PivotRule]

    gen = subparsers.add_parser("gen", help="Generate a random tournament")
    gen.add_argument("--n", type=int, required=True, help="Number of vertices")
    gen.add_argument(
        "--model",
        type=_parse_model,
        default=(Model.UNIFORM, 0.0),
        help="uniform, transitive or noisy:P (transitive order with each edge flipped with probability P)",
    )
    gen.add_argument("--seed", type=int, help=seed_help)
    gen.add_argument("--out", type=str, help="Output file, stdout if omitted")
    gen.set_defaults(run=run_gen)

    solve = subparsers.add_parser("solve", help="Order the vertices of a tournament")
    solve.add_argument("--algo", choices=ALGORITHM_NAMES, required=True)
    solve.add_argument("--in", dest="input", type=str, required=True, help="Tournament file")
    solve.add_argument("--seed", type=int, help=seed_help)
    solve.add_argument("--pivot", choices=pivots, default=PivotRule.RANDOM.value)
    solve.set_defaults(run=run_solve)

    cost = subparsers.add_parser("cost", help="Count the backward edges of an ordering")
    cost.add_argument("--in", dest="input", type=str, required=True, help="Tournament file")
    cost.add_argument("--order", type=str, required=True, help='Comma-separated ids, e.g. "0,1,2"')
    cost.add_argument("--dot", type=str, help="Also write a Graphviz drawing to this file")
    cost.set_defaults(run=run_cost)

    experiment = subparsers.add_parser("experiment", help="Run a Monte Carlo campaign")
    experiment.add_argument("--config", type=str, help="JSON experiment configuration")
    experiment.add_argument("--algo", nargs="+", choices=ALGORITHM_NAMES)
    experiment.add_argument("--n", type=int)
    experiment.add_argument("--model", type=_parse_model)
    experiment.add_argument("--trials", type=int)
    experiment.add_argument("--seed", type=int, help=seed_help)
    experiment.add_argument("--pivot", choices=pivots)
    experiment.add_argument("--workers", type=int, help="Worker processes")
    experiment.add_argument(
        "--report",
        choices=["trials", "approximation"],
        default="trials",
        help="approximation also solves every trial exactly and reports cost ratios",
    )
    experiment.add_argument("--out", type=str, help="CSV output file, stdout if omitted")
    experiment.set_defaults(run=run_experiment)

    verify = subparsers.add_parser("verify", help="Check a closed form against its oracle")
    verify.add_argument("--theorem", type=int, choices=[1, 2, 3], required=True)
    verify.add_argument("--nmax", type=int, help="Largest size or group enumerated")
    verify.set_defaults(run=run_verify)

    formulas = subparsers.add_parser("formulas", help="Print a table of closed-form values")
    formulas.add_argument("--table", choices=FORMULA_TABLES, required=True)
    formulas.add_argument("--max", type=int, default=10, help="Largest index")
    formulas.set_defaults(run=run_formulas)

    aggregate_parser = subparsers.add_parser("aggregate", help="Aggregate ranked ballots")
    aggregate_parser.add_argument("--ballots", type=str, required=True, help="Ballots file")
    aggregate_parser.add_argument("--algo", choices=ALGORITHM_NAMES, default="quick")
    aggregate_parser.add_argument("--seed", type=int, help=seed_help)
    aggregate_parser.add_argument(
        "--ties", choices=[rule.value for rule in TieRule], default=TieRule.ERROR.value
    )
    aggregate_parser.add_argument("--pivot", choices=pivots, default=PivotRule.RANDOM.value)
    aggregate_parser.set_defaults(run=run_aggregate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.run(args)
    except (FastError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
