# Copyright 2025 The liar-game-lab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command-line front end: `liargame <subcommand> ...`.

Payloads go to stdout; logs go to stderr. Exit codes: 0 success, 2 domain or
parse error, 3 budget exceeded, 4 failed verification.
"""

import argparse
import csv
import io
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from app.game.core import GameState, Params
from app.lab_app import LiarGameLab
from app.play import run_play
from app.solver.cache import MemoCache, dump_cache, header_params, load_cache, parse_cache, save_cache
from app.strategies.policies import adversary_policy, optimal_policy
from app.strategies.simulate import simulate
from app.utils.config import Settings, SolverBudget, VerifyBudget, parse_budget_pairs
from app.utils.errors import BudgetExceededError, LiarGameError
from app.utils.typing import RunConfig
from app.verify.suite import suite_passed

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def parse_range(text: str) -> list[int]:
    """Parses `a..b`, `a,b,c` or a single integer."""
    values: list[int] = []
    for chunk in text.split(","):
        start, sep, stop = chunk.partition("..")
        if sep:
            values.extend(range(int(start), int(stop) + 1))
        else:
            values.append(int(chunk))
    if not values:
        raise ValueError(f"empty range {text!r}")
    return values


# =============================================================================
# OUTPUT
# =============================================================================


def _rows(payload: Any) -> list[dict[str, Any]]:
    if isinstance(payload, BaseModel):
        return [payload.model_dump()]
    if isinstance(payload, dict):
        return [payload]
    return [row.model_dump() if isinstance(row, BaseModel) else row for row in payload]


def render(payload: Any, fmt: str) -> str:
    rows = _rows(payload)
    if fmt == "json":
        data = rows[0] if isinstance(payload, BaseModel | dict) else rows
        return json.dumps(data, indent=2, sort_keys=True)
    if fmt == "csv":
        buffer = io.StringIO()
        columns = list(rows[0]) if rows else []
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(
                {k: json.dumps(v) if isinstance(v, list | dict) else v for k, v in row.items()}
            )
        return buffer.getvalue().rstrip("\n")
    lines = []
    for row in rows:
        lines.extend(f"{key}: {value}" for key, value in row.items())
        lines.append("")
    return "\n".join(lines).rstrip("\n")


# =============================================================================
# SUBCOMMANDS
# =============================================================================


def _solver_budget(config: RunConfig) -> SolverBudget:
    return SolverBudget().override(config.budget)


def _lab(config: RunConfig, args: argparse.Namespace) -> LiarGameLab:
    settings = Settings.from_env()
    updates: dict[str, Any] = {}
    if args.log_level:
        updates["log_level"] = args.log_level.upper()
    if args.cloud_logging:
        updates["cloud_logging"] = True
    settings = settings.model_copy(update=updates)
    budget = SolverBudget() if config.subcommand == "verify" else _solver_budget(config)
    lab = LiarGameLab(settings=settings, solver_budget=budget)
    lab.set_up(batch_spans=False)
    return lab


def _cache_path(config: RunConfig, lab: LiarGameLab, lies: int, cap: int) -> Path | None:
    if config.cache_path:
        return Path(config.cache_path)
    return lab.settings.default_cache_path(lies, cap)


def cmd_solve(config: RunConfig, args: argparse.Namespace, lab: LiarGameLab) -> tuple[Any, int]:
    if config.lies is None or config.cap is None:
        raise ValueError("solve needs --lies and --cap")
    if config.state is not None:
        state = GameState.parse(config.state, config.lies)
    elif config.n is not None:
        state = GameState.initial(config.n, config.lies)
    else:
        raise ValueError("solve needs --n or --state")
    params = Params(lies=config.lies, cap=config.cap)
    path = _cache_path(config, lab, config.lies, config.cap)
    if path is not None and path.exists():
        load_cache(path, params, lab.cache)
    result = lab.solve(state, config.cap)
    payload: dict[str, Any] = {
        "state": str(state),
        "lies": config.lies,
        "k": config.cap,
        "value": result.value,
        "principal": str(result.principal) if result.principal else None,
        "new_entries": result.new_entries,
    }
    if args.all_optimal:
        payload["optimal_queries"] = [str(q) for q in result.optimal_queries]
    solver = lab.solver(config.lies, config.cap)
    if args.tree:
        tree = solver.extract_strategy(state)
        payload["tree_depth"] = tree.depth()
        payload["tree_nodes"] = tree.node_count()
    if args.transcript:
        transcript = simulate(optimal_policy(solver), adversary_policy(solver), state, params)
        payload["transcript"] = transcript.to_record().model_dump()
    if path is not None:
        save_cache(lab.cache, path, params)
    return payload, EXIT_OK


def cmd_bounds(config: RunConfig, args: argparse.Namespace, lab: LiarGameLab) -> tuple[Any, int]:
    if config.lies is None or config.cap is None or config.n is None:
        raise ValueError("bounds needs --n, --cap and --lies")
    report = lab.bounds(config.n, config.cap, config.lies, with_exact=not args.no_exact)
    return report, EXIT_OK


def cmd_sweep(config: RunConfig, args: argparse.Namespace, lab: LiarGameLab) -> tuple[Any, int]:
    rows = lab.sweep(config.n_values, config.cap_values, config.lies_values, config.workers)
    return rows, EXIT_OK


def cmd_verify(config: RunConfig, args: argparse.Namespace, lab: LiarGameLab) -> tuple[Any, int]:
    budget = VerifyBudget().override(config.budget)
    reports = lab.verify(config.only or None, budget, config.workers)
    return reports, EXIT_OK if suite_passed(reports) else EXIT_VERIFY


def cmd_cache(config: RunConfig, args: argparse.Namespace, lab: LiarGameLab) -> tuple[Any, int]:
    action = args.action
    if action == "import":
        source = Path(args.input)
        text = source.read_text()
        params = header_params(text.splitlines()[0] if text else "")
        _check_params(config, params)
        imported = parse_cache(text, params)
        if config.cache_path is None:
            raise ValueError("cache import needs --cache as the destination")
        target = Path(config.cache_path)
        merged = MemoCache()
        if target.exists():
            load_cache(target, params, merged)
        for key, value in imported.exact.items():
            merged.put(key, value)
        written = save_cache(merged, target, params)
        return {"path": str(target), "imported": len(imported), "entries": written}, EXIT_OK

    if config.cache_path is None:
        raise ValueError(f"cache {action} needs --cache")
    path = Path(config.cache_path)
    text = path.read_text()
    params = header_params(text.splitlines()[0] if text else "")
    _check_params(config, params)
    cache = parse_cache(text, params)
    if action == "export":
        dumped = dump_cache(cache, params)
        if args.output:
            Path(args.output).write_text(dumped)
            return {"path": args.output, "entries": len(cache)}, EXIT_OK
        sys.stdout.write(dumped)
        return None, EXIT_OK
    totals = [sum(counts) for counts, _ in cache.entries(params)]
    return {
        "path": str(path),
        "lies": params.lies,
        "k": params.cap,
        "entries": len(cache),
        "min_total": min(totals) if totals else None,
        "max_total": max(totals) if totals else None,
    }, EXIT_OK


def _check_params(config: RunConfig, params: Params) -> None:
    if config.lies is not None and config.lies != params.lies:
        raise ValueError(f"cache file is for l={params.lies}, not l={config.lies}")
    if config.cap is not None and config.cap != params.cap:
        raise ValueError(f"cache file is for k={params.cap}, not k={config.cap}")


def cmd_play(config: RunConfig, args: argparse.Namespace, lab: LiarGameLab) -> tuple[Any, int]:
    if config.lies is None or config.cap is None or config.n is None:
        raise ValueError("play needs --n, --cap and --lies")
    run_play(lab.solver(config.lies, config.cap), config.n, role=args.role)
    return None, EXIT_OK


COMMANDS: dict[str, Callable[[RunConfig, argparse.Namespace, LiarGameLab], tuple[Any, int]]] = {
    "solve": cmd_solve,
    "bounds": cmd_bounds,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "cache": cmd_cache,
    "play": cmd_play,
}


# =============================================================================
# ARGUMENTS
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["json", "csv", "text"], default="text")
    common.add_argument("--cache", dest="cache_path", default=None, help="Cache file path")
    common.add_argument("--log-level", default=None, help="Logging level (default from LIARGAME_LOG_LEVEL)")
    common.add_argument("--cloud-logging", action="store_true", help="Send structured logs to Google Cloud Logging")
    common.add_argument(
        "--budget",
        action="append",
        default=[],
        help="Budget override key=value (repeatable), e.g. --budget total=6",
    )
    game = argparse.ArgumentParser(add_help=False)
    game.add_argument("--lies", type=int, default=None, help="Lie budget l")
    game.add_argument("--cap", type=int, default=None, help="Query size cap k")
    game.add_argument("--n", type=int, default=None, help="Number of candidates")

    parser = argparse.ArgumentParser(prog="liargame", description="Liar game solver and bounds lab")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    solve = sub.add_parser("solve", parents=[common, game], help="Exact value of a state")
    solve.add_argument("--state", default=None, help="State literal x0,...,xl")
    solve.add_argument("--all-optimal", action="store_true", help="List every optimal query")
    solve.add_argument("--tree", action="store_true", help="Report strategy tree depth and size")
    solve.add_argument("--transcript", action="store_true", help="Play optimal vs adversary")

    bounds = sub.add_parser("bounds", parents=[common, game], help="All bounds for one (n, k, l)")
    bounds.add_argument("--no-exact", action="store_true", help="Skip the exact solver value")

    sweep = sub.add_parser("sweep", parents=[common], help="Bound tables over (n, k, l) grids")
    sweep.add_argument("--n", dest="n_range", required=True, help="e.g. 5..20")
    sweep.add_argument("--cap", dest="cap_range", required=True, help="e.g. 2,3")
    sweep.add_argument("--lies", dest="lies_range", required=True, help="e.g. 0..2")
    sweep.add_argument("--workers", type=int, default=1)

    verify = sub.add_parser("verify", parents=[common], help="Run the verification suite")
    verify.add_argument("--only", nargs="+", default=[], help="Checks or check groups to run")
    verify.add_argument("--workers", type=int, default=1)

    cache = sub.add_parser("cache", help="Inspect, export or import cache files")
    cache_sub = cache.add_subparsers(dest="action", required=True)
    for action in ("inspect", "export", "import"):
        cmd = cache_sub.add_parser(action, parents=[common, game])
        if action == "export":
            cmd.add_argument("--output", default=None, help="Write here instead of stdout")
        if action == "import":
            cmd.add_argument("--input", required=True, help="Cache file to import")

    play = sub.add_parser("play", parents=[common, game], help="Interactive game in the terminal")
    play.add_argument("--role", choices=["responder", "questioner"], default="responder",
                      help="Your role in the game")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    fields: dict[str, Any] = {
        "subcommand": args.subcommand,
        "lies": getattr(args, "lies", None),
        "cap": getattr(args, "cap", None),
        "n": getattr(args, "n", None),
        "state": getattr(args, "state", None),
        "cache_path": args.cache_path,
        "output_format": args.output_format,
        "budget": parse_budget_pairs(args.budget),
        "workers": getattr(args, "workers", 1),
        "only": getattr(args, "only", []),
    }
    if args.subcommand == "sweep":
        fields["n_values"] = parse_range(args.n_range)
        fields["cap_values"] = parse_range(args.cap_range)
        fields["lies_values"] = parse_range(args.lies_range)
    return RunConfig.model_validate(fields)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = to_config(args)
        lab = _lab(config, args)
        payload, code = COMMANDS[config.subcommand](config, args, lab)
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (LiarGameError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if payload is not None:
        print(render(payload, config.output_format))
    logging.debug(f"{config.subcommand} finished with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
