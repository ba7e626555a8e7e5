from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path
from typing import Any, Mapping, Optional

from genocchi.errors import GenocchiError, ParameterError, SingularParameterError
from genocchi.families import Family
from genocchi.identities import IDENTITY_IDS
from runtime.engine import run_task

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# flags whose rational values may start with "-"
VALUE_FLAGS = ("--lambda", "--x", "--y", "--p", "--logs", "--ab")
_NEGATIVE_VALUE = re.compile(r"^-[\d.]")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--run-id", default=None, help="Optional run id (default: timestamp + random suffix)")
    p.add_argument("--agent", default=None, help="Agent id (default: env GENOCCHI_AGENT_ID or agent0)")
    p.add_argument("--precision", type=int, default=None, help="Series precision N (default: auto-sized)")
    p.add_argument(
        "--set",
        action="append",
        default=[],
        help="Override task config without editing files. Repeatable: --set key=value",
    )
    p.add_argument("--root", default=None, help="Project root (defaults to the folder of run.py)")
    p.add_argument("--quiet", action="store_true", help="Log to the run log file only, not to stderr")


def _add_family_flags(p: argparse.ArgumentParser, *, lambda_help: str) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--order", type=int, default=None, help="Order l (higher-order families)")
    p.add_argument("--lambda", dest="lam", default=None, help=lambda_help)
    p.add_argument("--logs", default=None, help='ln a, ln b, ln c as rationals, e.g. "0,1,1"')
    p.add_argument("--y", default=None, help="Second variable of two-var-genocchi")
    p.add_argument("--p", default=None, help="Scale of the second variable (default 1)")
    p.add_argument("--ab", default=None, help='(a, b) of hermite-genocchi-ab, e.g. "1/2,2"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact Genocchi/Bernoulli/Euler family tables and identity verification."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="Tabulate a family (rows 0..max_n)")
    _add_family_flags(p_table, lambda_help='Apostol parameter: rational "p/q" or "symbolic"')
    p_table.add_argument("--max-n", type=int, default=None)
    p_table.add_argument("--format", choices=["csv", "json"], default=None)
    p_table.add_argument("--output", default=None, help="Write here instead of stdout")
    _add_run_flags(p_table)

    p_eval = sub.add_parser("eval", help="Evaluate one row at a rational x")
    _add_family_flags(p_eval, lambda_help='Apostol parameter: rational "p/q"')
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--x", default=None, help='Rational point (default "0")')
    _add_run_flags(p_eval)

    p_verify = sub.add_parser("verify", help="Run the identity suite and write the report")
    p_verify.add_argument("--suite", choices=["all"], default="all")
    p_verify.add_argument(
        "--lambda", dest="lam", action="append", default=None, help="Repeatable; rational or symbolic"
    )
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument(
        "--only", action="append", default=None, help="Identity ids; repeatable or comma-separated"
    )
    p_verify.add_argument(
        "--expect-pass",
        action="append",
        nargs="*",
        default=None,
        help="Drop ids from the expected failures; bare, every selected identity must pass",
    )
    p_verify.add_argument("--report", default=None, help="Report path (default: inside the run directory)")
    _add_run_flags(p_verify)

    p_list = sub.add_parser("list", help="List available tasks")
    p_list.add_argument("--root", default=None)

    p_validate = sub.add_parser("validate", help="Check that a task's manifest and entrypoint load")
    p_validate.add_argument("task")
    p_validate.add_argument("--root", default=None)
    return parser


def parse_set(items: list[str]) -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    for item in items:
        if "=" not in item:
            raise ParameterError(f"Invalid --set value (expected key=value): {item}")
        k, v = (s.strip() for s in item.split("=", 1))
        if not k:
            raise ParameterError(f"Invalid --set key: {item}")
        # JSON scalars/arrays/objects, else the raw string
        try:
            overrides[k] = json.loads(v)
        except ValueError:
            overrides[k] = v
    return overrides


def fold_negative_values(argv: list[str]) -> list[str]:
    """
    ``--lambda -1/1`` -> ``--lambda=-1/1``.

    argparse takes only plain negative numbers such as ``-1`` as values; ``-1/1``,
    ``-1,2,3`` and the like would be read as unknown options.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
            continue
        out.append(arg)
        i += 1
    return out


def _ids(values: Optional[list[Any]]) -> Optional[list[str]]:
    if values is None:
        return None
    flat = [v for group in values for v in (group if isinstance(group, list) else [group])]
    return [i.strip() for v in flat for i in v.split(",") if i.strip()]


def _expect_pass(args: argparse.Namespace) -> Optional[list[str]]:
    """A bare --expect-pass means every selected identity must pass."""
    if args.expect_pass is None:
        return None
    ids = _ids(args.expect_pass)
    if any(group == [] for group in args.expect_pass):
        ids += _ids(args.only) or list(IDENTITY_IDS)
    return ids


def overrides_from_args(args: argparse.Namespace) -> dict[str, Any]:
    """--set first, then the explicit flags; flags left at None keep the task default."""
    overrides = parse_set(args.set)
    flags: dict[str, Any] = {"precision": args.precision}
    if args.command in ("table", "eval"):
        flags.update(
            family=args.family,
            order=args.order,
            logs=args.logs,
            y=args.y,
            p=args.p,
            ab=args.ab,
        )
        flags["lambda"] = args.lam
    if args.command == "table":
        flags.update(max_n=args.max_n, format=args.format, output=args.output)
    elif args.command == "eval":
        flags.update(n=args.n, x=args.x)
    elif args.command == "verify":
        flags.update(
            lambdas=args.lam,
            max_n=args.max_n,
            only=_ids(args.only),
            expect_pass=_expect_pass(args),
            report=args.report,
        )
    overrides.update({k: v for k, v in flags.items() if v is not None})
    return overrides


def _list_tasks(root_dir: Path) -> int:
    from runtime.registry import discover_tasks

    tasks = discover_tasks(root_dir)
    if not tasks:
        print("(no tasks found)")
        return EXIT_OK
    w1 = max(len(t.name) for t in tasks)
    w2 = max(len(t.version) for t in tasks)
    print(f"{'task'.ljust(w1)}  {'version'.ljust(w2)}  description")
    for t in tasks:
        print(f"{t.name.ljust(w1)}  {t.version.ljust(w2)}  {t.description}")
    return EXIT_OK


def _emit(command: str, res: Mapping[str, Any], output_given: bool) -> None:
    if command == "eval":
        print(res["value"])
    elif command == "table" and not output_given:
        sys.stdout.write(Path(res["artifact"]).read_text(encoding="utf-8"))
    else:
        # ASCII escapes keep the line safe for any console encoding.
        print(json.dumps(dict(res), ensure_ascii=True))


def main(argv: list[str] | None = None, *, environ: Mapping[str, str] = os.environ) -> int:
    project_root = Path(__file__).resolve().parent
    parser = build_parser()
    raw_argv = list(argv if argv is not None else sys.argv[1:])
    try:
        args = parser.parse_args(fold_negative_values(raw_argv))
    except SystemExit as e:
        return int(e.code or 0)

    root_dir = Path(args.root).resolve() if args.root else project_root

    if args.command == "list":
        return _list_tasks(root_dir)

    if args.command == "validate":
        from runtime.registry import validate_task

        try:
            validate_task(args.task, root_dir, environ=environ)
        except (FileNotFoundError, ImportError, AttributeError, TypeError, ValueError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_FAILED
        print("OK")
        return EXIT_OK

    try:
        overrides = overrides_from_args(args)
    except ParameterError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        res = run_task(
            args.command,
            root_dir=root_dir,
            run_id=args.run_id,
            agent_id=args.agent,
            config_overrides=overrides,
            invocation={"argv": raw_argv, "command": args.command},
            environ=environ,
            console=not args.quiet,
        )
    except SingularParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except ParameterError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GenocchiError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _emit(args.command, res, output_given=bool(overrides.get("output")))
    return EXIT_OK if res.get("status") == "ok" else EXIT_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
