"""Command-line client for the solver service.

Every subcommand builds an HTTP request against the service API.  By
default the app is driven in-process (no server needed); pass
``--server URL`` to talk to a running instance instead.  ``serve``
starts one with uvicorn.

Exit codes: 0 success, 2 parse or validation failure, 3 oracle budget
exceeded, 4 verified bound or property violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

import httpx

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    import warnings

    with warnings.catch_warnings():
        # starlette warns when its test client runs on httpx 0.x; that is
        # an environment choice, not something the caller can act on here
        warnings.filterwarnings("ignore", message=".*httpx.*", category=UserWarning)
        from fastapi.testclient import TestClient

    from .api import app

    return TestClient(app, raise_server_exceptions=False)


def _emit(payload: Any) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _post(args: argparse.Namespace, path: str, payload: dict) -> tuple[int, Any]:
    with _client(args.server) as client:
        response = client.post(path, json=payload)
    try:
        body = response.json()
    except ValueError:
        body = {"detail": response.text}
    return response.status_code, body


def _error_exit(status: int, body: Any) -> int:
    detail = body.get("detail", body) if isinstance(body, dict) else body
    code = detail.get("code") if isinstance(detail, dict) else None
    if code == "oracle-budget-exceeded":
        return _fail(f"oracle budget exceeded: {json.dumps(detail)}", EXIT_BUDGET)
    return _fail(f"request rejected (HTTP {status}): {json.dumps(detail)}", EXIT_INVALID)


def _read_json_file(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON in {path}: {exc}") from exc


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        instance = _read_json_file(args.instance)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INVALID)
    payload = {
        "instance": instance,
        "algorithm": args.algorithm,
        "max_support": args.max_support,
        "oracle_budget": args.oracle_budget,
        "include_trace": args.trace,
    }
    status, body = _post(args, "/solve", payload)
    if status != 200:
        return _error_exit(status, body)
    _emit(body)
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.from_mc:
        try:
            mc = _read_json_file(args.from_mc)
        except ValueError as exc:
            return _fail(str(exc), EXIT_INVALID)
        status, body = _post(args, "/generate/from-mc", {"mc": mc})
        if status != 200:
            return _error_exit(status, body)
        _emit(body["instance"])
        return EXIT_OK
    payload = {
        "num_students": args.num_students,
        "num_seminars": args.num_seminars,
        "size_model": args.size_model,
        "size_min": args.size_min,
        "size_max": args.size_max,
        "size_count": args.size_count,
        "fixed_size": args.fixed_size,
        "p_max": args.p_max,
        "seed": args.seed,
    }
    status, body = _post(args, "/generate", payload)
    if status != 200:
        return _error_exit(status, body)
    _emit(body)
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    payload = {
        "count": args.count,
        "num_students": args.num_students,
        "num_seminars": args.num_seminars,
        "size_model": args.size_model,
        "size_min": args.size_min,
        "size_max": args.size_max,
        "size_count": args.size_count,
        "fixed_size": args.fixed_size,
        "p_max": args.p_max,
        "seed": args.seed,
        "with_oracle": args.with_oracle,
        "oracle_budget": args.oracle_budget,
        "max_support": args.max_support,
    }
    status, body = _post(args, "/bench", payload)
    if status != 200:
        return _error_exit(status, body)
    _emit(body)
    if args.with_oracle and body.get("bound_violations"):
        return _fail(
            f"{len(body['bound_violations'])} guarantee bound violation(s)", EXIT_VIOLATION
        )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    payload = {
        "seed": args.seed,
        "trials": args.trials,
        "max_students": args.max_students,
        "max_seminars": args.max_seminars,
        "p_max": args.p_max,
    }
    status, body = _post(args, "/verify", payload)
    if status != 200:
        return _error_exit(status, body)
    _emit(body)
    for suite in body["suites"]:
        print(
            f"{suite['name']}: {suite['trials'] - suite['failures']}/{suite['trials']} passed",
            file=sys.stderr,
        )
    if not body["all_passed"]:
        return _fail("verification failures detected", EXIT_VIOLATION)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("sapsolve.api:app", host=args.host, port=args.port)
    return EXIT_OK


def _add_generation_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--num-students", type=int, required=True)
    parser.add_argument("--num-seminars", type=int, required=True)
    parser.add_argument(
        "--size-model", choices=["interval", "explicit", "fixed"], default="explicit"
    )
    parser.add_argument("--size-min", type=int, default=1, help="interval model lower bound")
    parser.add_argument("--size-max", type=int, default=None, help="largest nonzero size drawn")
    parser.add_argument(
        "--size-count", type=int, default=3, help="explicit model: max nonzero sizes per seminar"
    )
    parser.add_argument("--fixed-size", type=int, default=None, help="fixed model headcount")
    parser.add_argument("--p-max", type=int, default=9, help="profits are uniform in [0, p_max]")
    parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sapsolve",
        description="Seminar assignment solver client",
        epilog="exit codes: 0 ok, 2 invalid input, 3 oracle budget exceeded, 4 bound violation",
    )
    parser.add_argument("--server", default=None, help="service URL (default: run in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file (lowercase '-' for stdin)")
    p_solve.add_argument("instance")
    p_solve.add_argument("--algorithm", choices=["half", "full", "exact"], default="full")
    p_solve.add_argument("--max-support", type=int, default=3, help="full solver seed support cap")
    p_solve.add_argument("--oracle-budget", type=int, default=200_000)
    p_solve.add_argument("--trace", action="store_true", help="include the greedy trace")
    p_solve.set_defaults(func=_cmd_solve)

    p_gen = sub.add_parser("generate", help="emit a random instance, or reduce a coverage instance")
    p_gen.add_argument("--from-mc", default=None, help="coverage instance JSON file")
    group = p_gen.add_argument_group("random generation")
    group.add_argument("--num-students", type=int, default=None)
    group.add_argument("--num-seminars", type=int, default=None)
    group.add_argument(
        "--size-model", choices=["interval", "explicit", "fixed"], default="explicit"
    )
    group.add_argument("--size-min", type=int, default=1)
    group.add_argument("--size-max", type=int, default=None)
    group.add_argument("--size-count", type=int, default=3)
    group.add_argument("--fixed-size", type=int, default=None)
    group.add_argument("--p-max", type=int, default=9)
    group.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=_cmd_generate)

    p_bench = sub.add_parser("bench", help="solve a batch of random instances and report ratios")
    p_bench.add_argument("--count", type=int, required=True)
    _add_generation_options(p_bench)
    p_bench.add_argument("--with-oracle", action="store_true")
    p_bench.add_argument("--oracle-budget", type=int, default=200_000)
    p_bench.add_argument("--max-support", type=int, default=3)
    p_bench.set_defaults(func=_cmd_bench)

    p_verify = sub.add_parser("verify", help="run the randomized self-verification suites")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.add_argument("--max-students", type=int, default=6)
    p_verify.add_argument("--max-seminars", type=int, default=3)
    p_verify.add_argument("--p-max", type=int, default=9)
    p_verify.set_defaults(func=_cmd_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "generate" and not args.from_mc:
        if args.num_students is None or args.num_seminars is None:
            return _fail("generate needs --num-students and --num-seminars (or --from-mc)", EXIT_INVALID)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
