"""Command-line front end.

The CLI is a thin client over the HTTP service: every subcommand except
`serve` sends one request, either to an in-process application instance
(the default) or to a running server named by `--server` or the
ASPVERIFY_SERVER environment variable.  Results go to standard output,
diagnostics to standard error.

Exit codes: 0 verification proven (or the subcommand succeeded), 1 not
proven, 2 input/usage/analysis error, 3 prover unavailable.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from pathlib import Path

import httpx

from ._version import VERSION

SERVER_ENV_VAR = "ASPVERIFY_SERVER"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aspverify",
        description="Verify answer-set programs against specifications.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {VERSION}"
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        help=(
            "URL of a running service; default is an in-process instance "
            f"(environment variable {SERVER_ENV_VAR})"
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def output_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--output",
            choices=("human", "json"),
            default="human",
            help="result format (default: human)",
        )

    translate = commands.add_parser(
        "translate", help="print the first-order translation of a program"
    )
    translate.add_argument("file", help="program file")
    output_flag(translate)

    complete = commands.add_parser(
        "complete", help="print the completion of a program"
    )
    complete.add_argument("file", help="program file")
    complete.add_argument(
        "--spec",
        metavar="FILE",
        help=(
            "specification file supplying input/output declarations; "
            "without it, predicates that no rule defines are inputs"
        ),
    )
    output_flag(complete)

    simplify = commands.add_parser(
        "simplify", help="print simplified first-order formulas"
    )
    simplify.add_argument(
        "file",
        help=(
            "input file: .lp programs are translated first, any other file "
            "is read as '.'-terminated first-order formulas"
        ),
    )
    output_flag(simplify)

    analyze = commands.add_parser(
        "analyze", help="report tightness and private recursion"
    )
    analyze.add_argument("file", help="program file")
    analyze.add_argument(
        "--spec",
        metavar="FILE",
        help=(
            "specification file supplying input/output declarations; "
            "without it, every predicate is public"
        ),
    )
    output_flag(analyze)

    verify = commands.add_parser(
        "verify", help="verify equivalence claims with a theorem prover"
    )
    verify.add_argument(
        "--equivalence",
        choices=("external", "strong"),
        required=True,
        help=(
            "external: program vs specification (.spec) or second program; "
            "strong: two programs under every context"
        ),
    )
    verify.add_argument("files", nargs=2, metavar="FILE")
    verify.add_argument(
        "--user-guide",
        metavar="FILE",
        help="assumptions and lemmas for program-to-program verification",
    )
    verify.add_argument("--prover-path", metavar="PATH")
    verify.add_argument(
        "--time-limit", type=int, default=60, metavar="SECONDS",
        help="per-claim prover time limit (default: 60)",
    )
    verify.add_argument(
        "--cores", type=int, default=1, metavar="N",
        help="concurrent prover subprocesses (default: 1)",
    )
    verify.add_argument(
        "--save-problems", metavar="DIR",
        help="keep emitted prover problems in DIR",
    )
    verify.add_argument(
        "--no-simplify", action="store_true",
        help="emit claims without simplification",
    )
    output_flag(verify)

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _read(path: str) -> str:
    return Path(path).read_text()


def _post(args: argparse.Namespace, path: str, payload: dict) -> tuple[int, object]:
    server = args.server or os.environ.get(SERVER_ENV_VAR)
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            response = client.post(path, json=payload)
            return response.status_code, response.json()

    from .service.app import create_app

    async def call() -> tuple[int, object]:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service", timeout=None
        ) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()

    return asyncio.run(call())


def _fail(status: int, data: object) -> int:
    detail = data.get("detail") if isinstance(data, dict) else data
    if not isinstance(detail, str):
        detail = json.dumps(detail)
    print(f"error: {detail}", file=sys.stderr)
    return 3 if status == 503 else 2


def _print_formulas(args: argparse.Namespace, status: int, data: object) -> int:
    if status != 200:
        return _fail(status, data)
    if args.output == "json":
        print(json.dumps(data, indent=2))
    else:
        for line in data["formulas"]:
            print(line)
    return 0


def _print_analysis(args: argparse.Namespace, status: int, data: object) -> int:
    if status != 200:
        return _fail(status, data)
    if args.output == "json":
        print(json.dumps(data, indent=2))
        return 0
    print("predicates: " + ", ".join(data["predicates"]))
    print("tight: " + ("yes" if data["tight"] else "no"))
    for cycle in data["positive_cycles"]:
        print(f"not tight: positive cycle {cycle}")
    print("private recursion: " + ("yes" if data["private_recursion"] else "no"))
    for cycle in data["private_recursion_cycles"]:
        print(f"private recursion detected: cycle {cycle}")
    return 0


def _print_report(args: argparse.Namespace, status: int, data: object) -> int:
    if status != 200:
        return _fail(status, data)
    if args.output == "json":
        print(json.dumps(data, indent=2))
    else:
        for claim in data["claims"]:
            line = f"{claim['name']}: {claim['outcome']}"
            if claim["outcome"] != "skipped":
                line += f" ({claim['wall_time']:.1f} s)"
            print(line)
        print(f"verdict: {data['verdict']}")
    return 0 if data["verdict"] == "proven" else 1


def _verify_payload(
    parser: argparse.ArgumentParser, args: argparse.Namespace
) -> dict:
    first, second = args.files
    if first.endswith(".spec"):
        parser.error("the first argument must be a program")
    second_is_spec = second.endswith(".spec")
    if args.equivalence == "strong" and second_is_spec:
        parser.error("strong equivalence compares two programs")
    if args.user_guide and (args.equivalence != "external" or second_is_spec):
        parser.error("--user-guide applies only to program-to-program verification")
    return {
        "equivalence": args.equivalence,
        "program": _read(first),
        "second": _read(second),
        "second_kind": "spec" if second_is_spec else "program",
        "user_guide": _read(args.user_guide) if args.user_guide else None,
        "prover_path": args.prover_path,
        "time_limit": args.time_limit,
        "cores": args.cores,
        "save_problems": args.save_problems,
        "simplify": not args.no_simplify,
    }


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        match args.command:
            case "serve":
                return _serve(args)
            case "translate":
                status, data = _post(
                    args, "/translate", {"program": _read(args.file)}
                )
                return _print_formulas(args, status, data)
            case "complete":
                payload = {
                    "program": _read(args.file),
                    "spec": _read(args.spec) if args.spec else None,
                }
                status, data = _post(args, "/complete", payload)
                return _print_formulas(args, status, data)
            case "simplify":
                text = _read(args.file)
                key = "program" if args.file.endswith(".lp") else "formulas"
                status, data = _post(args, "/simplify", {key: text})
                return _print_formulas(args, status, data)
            case "analyze":
                payload = {
                    "program": _read(args.file),
                    "spec": _read(args.spec) if args.spec else None,
                }
                status, data = _post(args, "/analyze", payload)
                return _print_analysis(args, status, data)
            case "verify":
                payload = _verify_payload(parser, args)
                status, data = _post(args, "/verify", payload)
                return _print_report(args, status, data)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except httpx.HTTPError as e:
        print(f"error: cannot reach the server: {e}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
