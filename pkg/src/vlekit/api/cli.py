"""Command line front end.

Scalar tasks print JSON; tabular tasks (activity, vle, fit) print CSV by
default and JSON with --json.  Exit status is 0 on success and 2 on any
domain or configuration error, with the same structured error object the
HTTP service would return, written to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..errors import VlekitError
from ..export import export_csv
from .config import build_registry, load_config
from .service import _error_body
from .tasks import (
    ACTIVITY,
    BOILING_TEMPERATURE,
    NRTL_FIT,
    VALIDATE,
    VAPOR_PRESSURE,
    VLE,
    FitOutcome,
    TaskRequest,
    result_to_jsonable,
    run_task,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vlekit",
        description="Vapor pressures, activity coefficients, and VLE diagrams",
    )
    parser.add_argument("--config", help="path to a key = value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_smiles: str, model=False):
        p.add_argument("--smiles", nargs=n_smiles, required=True, metavar="SMILES")
        if model:
            p.add_argument("--model", required=True)
        p.add_argument("--out", help="write the result to a file instead of stdout")
        p.add_argument("--json", action="store_true", help="force JSON output")

    p = sub.add_parser("validate", help="parse and canonicalize SMILES")
    add_common(p, "+")

    p = sub.add_parser("psat", help="vapor pressure at a temperature")
    add_common(p, 1)
    p.add_argument("--T", type=float, required=True, help="temperature in K")

    p = sub.add_parser("tboil", help="boiling temperature at a pressure")
    add_common(p, 1)
    p.add_argument("--p", type=float, required=True, help="pressure in Pa")

    p = sub.add_parser("activity", help="activity coefficient curve")
    add_common(p, 2, model=True)
    p.add_argument("--T", type=float, required=True, help="temperature in K")

    p = sub.add_parser("vle", help="full bubble/dew diagram")
    add_common(p, 2, model=True)
    p.add_argument("--T", type=float, help="temperature in K (isothermal)")
    p.add_argument("--p", type=float, help="pressure in Pa (isobaric)")

    p = sub.add_parser("fit", help="fit NRTL parameters to a predictive model")
    add_common(p, 2, model=True)
    p.add_argument("--variant", type=int, choices=(3, 6, 10), required=True)
    p.add_argument("--T", type=float, help="temperature in K (3-parameter form)")
    p.add_argument(
        "--T-range",
        type=float,
        nargs=2,
        metavar=("LO", "HI"),
        help="temperature range in K (6/10-parameter forms)",
    )

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host")
    p.add_argument("--port", type=int)

    return parser


_COMMAND_TASKS = {
    "validate": VALIDATE,
    "psat": VAPOR_PRESSURE,
    "tboil": BOILING_TEMPERATURE,
    "activity": ACTIVITY,
    "vle": VLE,
    "fit": NRTL_FIT,
}


def _request_from_args(args) -> TaskRequest:
    task = _COMMAND_TASKS[args.command]
    return TaskRequest(
        task=task,
        smiles=tuple(args.smiles),
        model=getattr(args, "model", None),
        T=getattr(args, "T", None),
        p=getattr(args, "p", None),
        variant=getattr(args, "variant", None),
        T_range=tuple(args.T_range) if getattr(args, "T_range", None) else None,
    )


def _format_result(result, as_json: bool) -> str:
    if isinstance(result, dict) or as_json:
        return json.dumps(result_to_jsonable(result), indent=2) + "\n"
    if isinstance(result, FitOutcome):
        return export_csv(result.result, grid=result.grid)
    return export_csv(result)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        if args.command == "serve":
            from dataclasses import replace

            from .service import serve

            if args.host:
                config = replace(config, host=args.host)
            if args.port:
                config = replace(config, port=args.port)
            serve(config)
            return 0

        registry = build_registry(config)
        result = run_task(_request_from_args(args), registry)
        text = _format_result(result, args.json)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    except VlekitError as exc:
        sys.stderr.write(json.dumps(_error_body(exc)) + "\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(
            json.dumps({"error": {"code": "invalid_request", "message": str(exc)}}) + "\n"
        )
        return 2


def entrypoint() -> None:  # pragma: no cover - console script shim
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
