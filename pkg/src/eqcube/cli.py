"""Command-line front end; a thin client over the HTTP service.

By default the service app is called in-process through an ASGI transport,
so no server has to run; `--url` points the same client at a live server.
Exit codes: 0 success, 1 input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx

SUBCOMMANDS = (
    "alexander", "blanchfield", "dehn", "lp", "clasper", "script", "pk",
    "reduce", "verify",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqcube",
        description="Exact two-loop invariant calculus from Seifert data.",
    )
    parser.add_argument("--url", default=None,
                        help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-",
                       help="JSON input file, or - for stdin")
        p.add_argument("--output", choices=("json", "pretty"), default="json")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--cutoff", type=int, default=None)
        if name == "verify":
            p.add_argument("--trials", type=int, default=None)
    return parser


def _load_input(path: str, command: str) -> dict:
    if path == "-":
        if command == "verify" and sys.stdin.isatty():
            return {}
        text = sys.stdin.read()
        if not text.strip():
            if command == "verify":
                return {}
            raise ValueError("empty input")
    else:
        with open(path) as fh:
            text = fh.read()
    payload = json.loads(text)
    if not isinstance(payload, dict):
        raise ValueError("input must be a JSON object")
    return payload


def _apply_flags(payload: dict, args) -> dict:
    if args.cutoff is not None:
        if args.command == "reduce":
            payload["K"] = args.cutoff
        else:
            payload["cutoff"] = args.cutoff
    if args.seed is not None:
        payload["seed"] = args.seed
    if args.command == "verify" and getattr(args, "trials", None) is not None:
        payload["trials"] = args.trials
    return payload


def _client(url):
    if url:
        return httpx.Client(base_url=url, timeout=300.0)
    # in-process: drive the ASGI app directly, no server needed
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)


def _emit(obj: dict, mode: str):
    if mode == "pretty":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload = _apply_flags(_load_input(args.input, args.command), args)
    except (OSError, ValueError) as exc:
        _emit({"error": {"type": "input_error", "message": str(exc)}}, "json")
        print("error: %s" % exc, file=sys.stderr)
        return 1
    with _client(args.url) as client:
        try:
            resp = client.post("/%s" % args.command, json=payload)
        except httpx.HTTPError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
    try:
        body = resp.json()
    except ValueError:
        body = {"error": {"type": "internal", "message": resp.text}}
    if resp.status_code >= 500:
        _emit(body, args.output)
        print("internal error (%d)" % resp.status_code, file=sys.stderr)
        return 2
    if resp.status_code >= 400:
        if "error" not in body:
            body = {"error": {"type": "input_error", "message": json.dumps(body)}}
        _emit(body, args.output)
        print("input error (%d)" % resp.status_code, file=sys.stderr)
        return 1
    _emit(body, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
