"""
stablecat command line.

    stablecat WORKSPACE COMMAND [options]

Exit codes: 0 all requested checks pass, 1 a check failed, 2 a check is
inconclusive, 3 usage, workspace or contract error.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from loguru import logger
from pydantic import ValidationError

from config import Budget, OutputFormat, RunConfig, env_seed
from errors import ContractError, InconclusiveError, InternalConsistencyError, StableCatError, WorkspaceError
from verifier.faults import FAULTS
from verifier.report import reports_to_json, summary_table
from .commands import COMMANDS, CommandResult
from .workspace import parse_workspace, resolve_workspace

EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _budget_override(text: str) -> Dict[str, int]:
    key, sep, value = text.partition("=")
    if not sep or key not in Budget.model_fields:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE with KEY one of {sorted(Budget.model_fields)}")
    return {key: int(value)}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stablecat", description="Stable categories of Frobenius triples over F_p")
    parser.add_argument("workspace", type=Path, help="workspace JSON file")
    parser.add_argument("--seed", type=int, default=None, help="overrides the workspace seed")
    parser.add_argument("--budget", type=_budget_override, action="append", default=[],
                        help="budget override KEY=VALUE, repeatable")
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                        default=OutputFormat.JSON.value)
    parser.add_argument("--out", default=None, help="write the report here instead of stdout")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--backend", default=None, help="backend name (default: first declared)")
    parser.add_argument("--triple", default=None, help="triple name (default: first declared)")
    parser.add_argument("--subcategory", default=None, help="replace D of the triple by this subcategory")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("validate", help="load and validate the workspace")
    for name in ("hom", "ext1", "stable-hom"):
        p = sub.add_parser(name)
        p.add_argument("--source", required=True)
        p.add_argument("--target", required=True)
    sub.add_parser("decompose").add_argument("--object", required=True)
    p = sub.add_parser("shift")
    p.add_argument("--object", required=True)
    p.add_argument("--direction", choices=["S", "S*"], default="S")
    for name in ("cone", "rotate"):
        sub.add_parser(name).add_argument("--morphism", required=True, help="SRC->TGT[c1,...]")
    p = sub.add_parser("fill-in")
    for flag in ("--first", "--second", "-x", "-y"):
        p.add_argument(flag, required=True)
    p = sub.add_parser("octahedron")
    p.add_argument("--first", required=True, help="l: X -> M")
    p.add_argument("--second", required=True, help="m: M -> Y")
    p.add_argument("--perturb", action="store_true", help="make m' l = f hold only stably")
    sub.add_parser("frobenius-check")
    sub.add_parser("mutation-check")
    sub.add_parser("verify-axioms").add_argument("--fault", choices=sorted(FAULTS), default=None)
    sub.add_parser("verify-tr")
    return parser


def configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "INFO")


def render(result: CommandResult, config: RunConfig, command: str, workspace: str) -> str:
    extra = {"command": command, "workspace": workspace, "seed": config.seed, "exit_status": result.status}
    if config.output_format == OutputFormat.JSON:
        if result.reports is not None:
            return reports_to_json(result.reports, {**extra, **result.payload})
        return json.dumps({**extra, **result.payload}, sort_keys=True, indent=2, default=str)
    lines = [f"{command} on {workspace} (seed {config.seed}): exit {result.status}"]
    for key in sorted(result.payload):
        value = result.payload[key]
        rendered = value if isinstance(value, (str, int, float, bool)) or value is None else json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {rendered}")
    if result.reports is not None:
        lines.append(summary_table(result.reports).to_string(index=False))
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    if not args.workspace.is_file():
        raise WorkspaceError(f"workspace file {args.workspace} does not exist", entity=str(args.workspace))
    model = parse_workspace(args.workspace.read_text(encoding="utf-8"), str(args.workspace))
    seed = args.seed if args.seed is not None else model.seed
    if seed is None:
        seed = env_seed() or 0
    overrides = {k: v for item in args.budget for k, v in item.items()}
    try:
        budget = Budget.model_validate({**model.budget.model_dump(), **overrides})
        config = RunConfig(seed=seed, budget=budget, out=args.out, output_format=args.output_format,
                           verbose=args.verbose)
    except ValidationError as exc:
        raise ContractError(f"invalid option: {exc.errors()[0]['msg']}") from exc
    ws = resolve_workspace(model, config.seed, config.budget)
    logger.info(f"running {args.command} on workspace {ws.name}")
    result = COMMANDS[args.command](ws, args)
    text = render(result, config, args.command, ws.name)
    if config.out:
        Path(config.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return result.status


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return run(args)
    except InternalConsistencyError as exc:
        logger.error(f"{exc.code}: {exc.message} {exc.details}")
        print(json.dumps(exc.to_dict(), sort_keys=True, default=str), file=sys.stderr)
        return 1
    except InconclusiveError as exc:
        logger.warning(f"{exc.code}: {exc.message}")
        print(json.dumps(exc.to_dict(), sort_keys=True, default=str), file=sys.stderr)
        return 2
    except (ContractError, WorkspaceError, StableCatError) as exc:
        logger.error(f"{exc.code}: {exc.message}")
        print(json.dumps(exc.to_dict(), sort_keys=True, default=str), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
