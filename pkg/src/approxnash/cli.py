"""Command-line harness: generate games, solve, certify lower bounds, run sampling experiments.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 bound violated
or not certified, 4 work-limit refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

from approxnash import generators
from approxnash.game import PROB_TOL, Game, InvalidGame, MixedProfile, regret_report
from approxnash.gamefile import GameFileError, dumps_game, payoff_checksum, read_game
from approxnash.lower_bound import DEFAULT_WORK_LIMIT, WorkLimitExceeded, certify_lower_bound
from approxnash.sampling import required_samples, run_sampling_trials
from approxnash.solvers import TwoPlayerSolver, delta_bound, dmp_two_player, recursive_lift, staircase

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FAILED = 3
EXIT_WORK_LIMIT = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x: float) -> str:
    return format(float(x), ".12g")


class Output:
    """Collects one command's result as CSV (``#`` config header) or a JSON document."""

    def __init__(self, args: argparse.Namespace):
        self.format = args.format
        self.config = {k: v for k, v in sorted(vars(args).items()) if k not in ("func",)}
        self.columns: list[str] = []
        self.rows: list[list] = []
        self.summary: dict[str, object] = {}

    def render(self) -> str:
        if self.format == "text":
            doc = {"config": self.config, "rows": [dict(zip(self.columns, r)) for r in self.rows]}
            doc.update(self.summary)
            return json.dumps(doc, indent=2) + "\n"
        buf = io.StringIO()
        buf.write("# config " + json.dumps(self.config) + "\n")
        if self.columns:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows(self.rows)
        for key, value in self.summary.items():
            buf.write(f"# {key}: {value}\n")
        return buf.getvalue()

    def emit(self, path: str | None) -> None:
        text = self.render()
        if path:
            with open(path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _load(path: str) -> Game:
    try:
        return read_game(path)
    except OSError as exc:
        raise GameFileError(f"cannot read {path}: {exc.strerror}") from exc


def _parse_anchors(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(a) for a in text.split(",") if a.strip()]
    except ValueError:
        raise UsageError(f"--anchors must be comma-separated integers, got {text!r}")


def cmd_gen(args) -> int:
    kind = args.kind
    try:
        if kind == "wta":
            game = generators.gen_wta(args.k, args.n, args.seed)
        elif kind == "uniform":
            game = generators.gen_uniform_payoffs(args.k, args.n, args.seed)
        elif kind == "parity":
            game = generators.fixture_parity(args.k)
        else:
            game = generators.fixture_matching_pennies()
    except ValueError as exc:
        raise UsageError(str(exc))
    text = dumps_game(game)
    checksum = payoff_checksum(game)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"checksum {checksum}")
    else:
        sys.stdout.write(text)
        print(f"checksum {checksum}", file=sys.stderr)
    return EXIT_OK


def _base_solver(guarantee: float, anchor: int) -> TwoPlayerSolver:
    base = dmp_two_player(anchor)
    if guarantee == base.guarantee:
        return base
    if guarantee < base.guarantee:
        print(
            f"note: the bundled 2-player solver only guarantees {base.guarantee}; "
            f"bound is computed for a declared base guarantee of {guarantee}",
            file=sys.stderr,
        )
    return TwoPlayerSolver(base.solve, guarantee, base.name)


def cmd_solve(args) -> int:
    if not 0.0 <= args.base_guarantee <= 1.0:
        raise UsageError("--base-guarantee must lie in [0, 1]")
    out = Output(args)
    if args.game is None:
        # bound-only mode: no game, just the theoretical guarantee for --k players
        if args.k is None or args.k < 2:
            raise UsageError("solve needs a game file, or --k >= 2 to print the bound only")
        bound = 1 - 1 / args.k if args.method == "staircase" else delta_bound(args.k, args.base_guarantee)
        out.summary = {"k": args.k, "bound": fmt(bound)}
        out.emit(args.out)
        return EXIT_OK

    game = _load(args.game)
    k = game.num_players
    if k < 2:
        raise UsageError("solvers need at least 2 players")
    anchors = _parse_anchors(args.anchors)
    try:
        if args.method == "staircase":
            profile, _ = staircase(game, anchors)
            bound = 1 - 1 / k
        else:
            anchor = anchors[0] if anchors else 0
            profile = recursive_lift(game, _base_solver(args.base_guarantee, anchor), anchor)
            bound = delta_bound(k, args.base_guarantee)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc))

    report = regret_report(game, profile)
    out.columns = ["player", "probabilities", "support", "expected_payoff", "best_response_value", "regret"]
    for p, (strategy, row) in enumerate(zip(profile.strategies, report.per_player)):
        out.rows.append(
            [
                p,
                " ".join(fmt(x) for x in strategy.probs),
                strategy.support_size,
                fmt(row.expected_payoff),
                fmt(row.best_response_value),
                fmt(row.regret),
            ]
        )
    ok = report.epsilon <= bound + PROB_TOL
    out.summary = {
        "epsilon": fmt(report.epsilon),
        "bound": fmt(bound),
        "total_support": profile.total_support,
        "within_bound": ok,
    }
    out.emit(args.out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_certify(args) -> int:
    game = _load(args.game)
    if args.t is None:
        raise UsageError("certify needs --t")
    out = Output(args)
    try:
        result = certify_lower_bound(game, args.t, args.work_limit)
    except InvalidGame as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WorkLimitExceeded as exc:
        out.summary = {"refused": "work limit", "estimate": exc.estimate, "work_limit": exc.limit}
        out.emit(args.out)
        return EXIT_WORK_LIMIT
    except ValueError as exc:
        raise UsageError(str(exc))
    floor = result.epsilon_floor
    out.summary = {
        "certified": result.certified,
        "t": result.t,
        "support_sets_examined": result.examined,
    }
    if result.certified:
        out.summary["statement"] = f"no eps-NE with eps < {floor} at total support <= {result.t}"
    else:
        support, player = result.witness
        out.summary["witness_support"] = [list(s) for s in support.per_player]
        out.summary["witness_player"] = player
    out.emit(args.out)
    return EXIT_OK if result.certified else EXIT_FAILED


def cmd_sample(args) -> int:
    game = _load(args.game)
    if args.eps is None or not args.eps > 0:
        raise UsageError("--eps must be positive")
    if args.trials < 0:
        raise UsageError("--trials must be >= 0")
    N = args.samples if args.samples is not None else required_samples(game.num_players, game.num_strategies, args.eps)
    if N < 1:
        raise UsageError("--samples must be >= 1")
    source = MixedProfile.uniform(game.num_players, game.num_strategies)
    trials = run_sampling_trials(game, source, args.eps, args.trials, args.seed, N)

    out = Output(args)
    out.columns = ["trial", "N", "max_deviation", "epsilon", "pass_eps", "pass_2eps"]
    for r in trials:
        out.rows.append([r.trial, r.N, fmt(r.max_deviation), fmt(r.epsilon), int(r.concentrated), int(r.within_2eps)])
    if trials:
        both = sum(r.concentrated and r.within_2eps for r in trials)
        out.summary = {
            "N": N,
            "pass_rate_eps": fmt(sum(r.concentrated for r in trials) / len(trials)),
            "pass_rate_2eps": fmt(sum(r.within_2eps for r in trials) / len(trials)),
            "pass_rate_both": fmt(both / len(trials)),
        }
    out.emit(args.out)
    return EXIT_OK


def cmd_cost(args) -> int:
    if args.k is None or args.n is None or args.eps is None:
        raise UsageError("cost needs --k, --n and --eps")
    try:
        N = required_samples(args.k, args.n, args.eps)
    except ValueError as exc:
        raise UsageError(str(exc))
    exponent = args.k * N
    out = Output(args)
    out.summary = {"N": N, "exponent": exponent, "log10_size": fmt(exponent * math.log10(args.n))}
    out.emit(args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--eps", type=float)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out")
    common.add_argument("--format", choices=["csv", "text"], default="csv")

    parser = _Parser(prog="approxnash", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a game file")
    p.add_argument("kind", choices=["wta", "uniform", "parity", "matching-pennies"])
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", parents=[common], help="staircase or recursive-lift solve")
    p.add_argument("method", choices=["staircase", "lift"])
    p.add_argument("game", nargs="?")
    p.add_argument("--anchors")
    p.add_argument("--base-guarantee", type=float, default=0.5)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("certify", parents=[common], help="certify the constant-support lower bound")
    p.add_argument("game")
    p.add_argument("--work-limit", type=int, default=DEFAULT_WORK_LIMIT)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sample", parents=[common], help="sampled support-reduction trials")
    p.add_argument("game")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--samples", type=int, help="override N (default: required sample count)")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("cost", parents=[common], help="support-enumeration cost estimate")
    p.set_defaults(func=cmd_cost)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"approxnash {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GameFileError, InvalidGame, OSError) as exc:
        print(f"approxnash {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
