"""Command-line front end.

Every command writes a single JSON document to stdout:
{"ok": true, "result": ...} on success, {"ok": false, "reason": ...} on
failure.  Exit codes: 0 success, 1 domain error, 2 parse error (expression
syntax or bad flags).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from .parser import ParseError, SessionConfig, evaluate, parse
from .simplicity import (
    build_witness,
    is_simple,
    nontriviality_probe,
    verify_witness,
    witness_from_doc,
    witness_to_doc,
)
from .matrix import MatrixElement, matrix_from_strings

ENV_CHAR = "LEAVITT_CHAR"

_DEFAULTS = {"n": 2, "d": 1, "char": 0, "mode": "leavitt"}


def _read_config_file(path: str) -> Dict[str, str]:
    values: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key not in _DEFAULTS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = value
    return values


def _resolve_config(args: argparse.Namespace) -> SessionConfig:
    """Layer the session settings: flags > config file > environment > defaults."""
    merged = dict(_DEFAULTS)
    env_char = os.environ.get(ENV_CHAR)
    if env_char is not None:
        merged["char"] = int(env_char)
    config_path = getattr(args, "config", None)
    if config_path:
        file_values = _read_config_file(config_path)
        for key in ("n", "d", "char"):
            if key in file_values:
                merged[key] = int(file_values[key])
        if "mode" in file_values:
            merged["mode"] = file_values["mode"]
    for key in ("n", "d", "char", "mode"):
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    return SessionConfig(
        n=merged["n"], d=merged["d"], characteristic=merged["char"], mode=merged["mode"]
    )


def _result_text(value) -> object:
    if isinstance(value, MatrixElement):
        return value.to_strings()
    return str(value)


def _cmd_nf(args) -> object:
    cfg = _resolve_config(args)
    return _result_text(evaluate(parse(args.expr), cfg))


def _cmd_trace(args) -> object:
    cfg = _resolve_config(args)
    return str(evaluate(parse(args.expr), cfg).trace())


def _cmd_bracket(args) -> object:
    cfg = _resolve_config(args)
    left = evaluate(parse(args.left), cfg)
    right = evaluate(parse(args.right), cfg)
    return _result_text(left.bracket(right))


def _cmd_taud(args) -> object:
    cfg = _resolve_config(args)
    with open(args.matrix_file, "r", encoding="utf-8") as handle:
        rows = json.load(handle)
    matrix = matrix_from_strings(rows, cfg.n, cfg.spec, leavitt=True)
    return str(matrix.trace())


def _cmd_simple(args) -> object:
    cfg = _resolve_config(args)
    verdict = is_simple(cfg.spec, cfg.n, cfg.d)
    return {"simple": verdict.simple, "reason": verdict.reason.value}


def _cmd_witness(args) -> object:
    cfg = _resolve_config(args)
    witness = build_witness(cfg.spec, cfg.n, cfg.d)
    doc = witness_to_doc(witness)
    if args.verify:
        doc["verified"] = verify_witness(witness_from_doc(doc))
    return doc


def _parse_range(text: str) -> List[int]:
    if ":" in text:
        lo, _, hi = text.partition(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _cmd_grid(args) -> object:
    chars = [int(c) for c in args.chars.split(",") if c.strip() != ""]
    rows = []
    for characteristic in chars:
        for n in _parse_range(args.n_range):
            for d in _parse_range(args.d_range):
                cfg = SessionConfig(n=n, d=d, characteristic=characteristic)
                verdict = is_simple(cfg.spec, n, d)
                row = {
                    "characteristic": characteristic,
                    "n": n,
                    "d": d,
                    "simple": verdict.simple,
                    "reason": verdict.reason.value,
                }
                if args.witnesses and not verdict.simple:
                    row["witness_verified"] = verify_witness(
                        build_witness(cfg.spec, n, d)
                    )
                if args.probe:
                    row["nontrivial"] = nontriviality_probe(cfg.spec, n, d)
                rows.append(row)
    return rows


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, default=None, help="algebra order (default 2)")
    sub.add_argument("--d", type=int, default=None, help="matrix dimension (default 1)")
    sub.add_argument(
        "--char", type=int, default=None, help="field characteristic, 0 for the rationals"
    )
    sub.add_argument(
        "--mode", choices=("cohn", "leavitt", "matrix"), default=None,
        help="evaluation algebra (default leavitt)",
    )
    sub.add_argument("--config", default=None, help="key=value config file")
    sub.add_argument("--pretty", action="store_true", help="indent the JSON output")


def build_arg_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="leavitt",
        description="Exact calculator for Cohn/Leavitt algebras and the "
        "simplicity of their matrix Lie algebras.",
    )
    subs = root.add_subparsers(dest="command", required=True)

    p = subs.add_parser("nf", help="evaluate an expression and print its normal form")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(handler=_cmd_nf)

    p = subs.add_parser("trace", help="trace of an expression (mode-dependent functional)")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(handler=_cmd_trace)

    p = subs.add_parser("bracket", help="Lie bracket of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    _add_common(p)
    p.set_defaults(handler=_cmd_bracket)

    p = subs.add_parser("taud", help="matrix trace of a JSON matrix file over the Leavitt algebra")
    p.add_argument("matrix_file")
    _add_common(p)
    p.set_defaults(handler=_cmd_taud)

    p = subs.add_parser("simple", help="decide simplicity of the derived Lie algebra")
    _add_common(p)
    p.set_defaults(handler=_cmd_simple)

    p = subs.add_parser("witness", help="construct a bracket-sum identity witness")
    p.add_argument("--verify", action="store_true", help="re-evaluate the witness after a serialization round trip")
    _add_common(p)
    p.set_defaults(handler=_cmd_witness)

    p = subs.add_parser("grid", help="sweep verdicts over characteristics, n, and d")
    p.add_argument("--chars", required=True, help="comma-separated characteristics, e.g. 0,2,3")
    p.add_argument("--n-range", required=True, help="inclusive range lo:hi or a single value")
    p.add_argument("--d-range", required=True, help="inclusive range lo:hi or a single value")
    p.add_argument("--witnesses", action="store_true", help="also build and verify witnesses for non-simple rows")
    p.add_argument("--probe", action="store_true", help="also run the nontriviality probe per row")
    _add_common(p)
    p.set_defaults(handler=_cmd_grid)

    return root


def _emit(doc: Dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(doc, indent=2))
    else:
        print(json.dumps(doc, separators=(",", ":")))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    pretty = getattr(args, "pretty", False)
    try:
        result = args.handler(args)
    except (ParseError, json.JSONDecodeError) as exc:
        _emit({"ok": False, "reason": str(exc)}, pretty)
        return 2
    except (ValueError, ZeroDivisionError, OSError, KeyError) as exc:
        _emit({"ok": False, "reason": str(exc)}, pretty)
        return 1
    _emit({"ok": True, "result": result}, pretty)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
