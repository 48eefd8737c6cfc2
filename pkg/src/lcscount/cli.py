"""Command-line front end: ``lcscount``.

Compares two inputs (inline text, files, or one side from standard input),
tokenizes them as bytes, code points, or lines, and prints the LCS length
and the requested exact counts in plain or JSON form.  Subcommands:

* ``lcscount oracle ...`` routes the same request to the brute-force
  reference implementations (size guards enforced).
* ``lcscount bench ...`` times the full-table and rolling-column algorithms
  on seeded random sequences.

Exit codes: 0 success, 1 usage or validation error, 2 I/O error, 3 oracle
guard violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    CountKind,
    count_distinct_full,
    count_embeddings_full,
    count_linear_space,
    lcs_length,
)
from .oracle import InputTooLargeError, oracle_distinct, oracle_embeddings

MODES = ("length", "distinct", "embeddings")
TOKENIZATIONS = ("bytes", "codepoints", "lines")


class _UsageError(Exception):
    """Bad flags or invalid input; reported on stderr with exit status 1."""


@dataclass
class ComparisonRequest:
    """A fully validated CLI request: two sources plus output options."""

    input_a: tuple[str, Optional[str]]  # ("text", literal) | ("file", path) | ("stdin", None)
    input_b: tuple[str, Optional[str]]
    tokenization: str = "bytes"
    modes: tuple[str, ...] = MODES
    algorithm: str = "linear"
    format: str = "plain"


class _SourceAction(argparse.Action):
    """Collect --text/--file occurrences in command-line order."""

    def __call__(self, parser, namespace, value, option_string=None):
        kind = "text" if option_string == "--text" else "file"
        if kind == "file" and value == "-":
            namespace.sources.append(("stdin", None))
        else:
            namespace.sources.append((kind, value))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _compare_parser(prog: str) -> _Parser:
    parser = _Parser(prog=prog, add_help=True)
    parser.set_defaults(sources=[])
    parser.add_argument(
        "--text",
        action=_SourceAction,
        metavar="STRING",
        help="inline input (give two sources total, in A, B order)",
    )
    parser.add_argument(
        "--file",
        action=_SourceAction,
        metavar="PATH",
        help="input from a file; '-' reads standard input (at most one side)",
    )
    parser.add_argument(
        "--mode",
        action="append",
        metavar="MODE",
        help="length, distinct, embeddings, or all; repeatable or comma-separated "
        "(default: all)",
    )
    parser.add_argument(
        "--tokenization",
        choices=TOKENIZATIONS,
        default="bytes",
        help="compare by bytes (default), Unicode code points, or whole lines",
    )
    parser.add_argument(
        "--algorithm",
        choices=("full", "linear"),
        default="linear",
        help="full table or rolling column (default: linear); results are identical "
        "(accepted but ignored by the oracle subcommand)",
    )
    parser.add_argument(
        "--format",
        choices=("plain", "json"),
        default="plain",
        help="output format (default: plain)",
    )
    return parser


def _parse_modes(raw: Optional[list[str]]) -> tuple[str, ...]:
    if not raw:
        return MODES
    requested = set()
    for chunk in raw:
        for token in chunk.split(","):
            token = token.strip()
            if token == "all":
                requested.update(MODES)
            elif token in MODES:
                requested.add(token)
            elif token:
                raise _UsageError(f"unknown mode: {token!r}")
            else:
                raise _UsageError("empty mode")
    if not requested:
        raise _UsageError("empty mode")
    return tuple(mode for mode in MODES if mode in requested)


def _build_request(args: argparse.Namespace, oracle: bool) -> ComparisonRequest:
    sources = args.sources
    if len(sources) != 2:
        raise _UsageError(f"exactly two inputs are required (got {len(sources)})")
    if sum(1 for kind, _ in sources if kind == "stdin") > 1:
        raise _UsageError("at most one input may come from standard input")
    return ComparisonRequest(
        input_a=sources[0],
        input_b=sources[1],
        tokenization=args.tokenization,
        modes=_parse_modes(args.mode),
        algorithm="oracle" if oracle else args.algorithm,
        format=args.format,
    )


def _load_bytes(source: tuple[str, Optional[str]]) -> bytes:
    kind, payload = source
    if kind == "text":
        try:
            return payload.encode("utf-8")
        except UnicodeEncodeError as exc:
            raise _UsageError(f"inline text is not encodable as UTF-8: {exc}") from None
    if kind == "stdin":
        return sys.stdin.buffer.read()
    with open(payload, "rb") as handle:
        return handle.read()


def tokenize(data: bytes, tokenization: str) -> Sequence:
    """Turn raw input bytes into the symbol sequence the core compares.

    ``bytes`` compares individual byte values, ``codepoints`` decodes UTF-8
    (invalid input is a validation error), and ``lines`` compares whole
    lines split on newline bytes, ignoring one trailing newline.
    """
    if tokenization == "bytes":
        return data
    if tokenization == "codepoints":
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise _UsageError(f"input is not valid UTF-8: {exc}") from None
    if tokenization == "lines":
        if not data:
            return []
        parts = data.split(b"\n")
        if parts and parts[-1] == b"":
            parts.pop()
        return parts
    raise _UsageError(f"unknown tokenization: {tokenization!r}")


def _compute(seq_a, seq_b, modes, algorithm):
    """Return (length, distinct or None, embeddings or None)."""
    length = None
    distinct = embeddings = None
    if "distinct" in modes:
        if algorithm == "oracle":
            length, distinct = oracle_distinct(seq_a, seq_b)
        elif algorithm == "full":
            length, distinct = count_distinct_full(seq_a, seq_b)
        else:
            length, distinct = count_linear_space(seq_a, seq_b, CountKind.DISTINCT)
    if "embeddings" in modes:
        if algorithm == "oracle":
            length, embeddings = oracle_embeddings(seq_a, seq_b)
        elif algorithm == "full":
            length, embeddings = count_embeddings_full(seq_a, seq_b)
        else:
            length, embeddings = count_linear_space(seq_a, seq_b, CountKind.EMBEDDINGS)
    if length is None:
        if algorithm == "oracle":
            length = oracle_distinct(seq_a, seq_b)[0]
        else:
            length = lcs_length(seq_a, seq_b)
    return length, distinct, embeddings


def _emit(request: ComparisonRequest, m: int, n: int, length, distinct, embeddings) -> str:
    if request.format == "json":
        payload = {"m": m, "n": n, "lcs_length": length}
        if distinct is not None:
            payload["distinct_lcs_count"] = str(distinct)
        if embeddings is not None:
            payload["embedding_count"] = str(embeddings)
        payload["algorithm"] = request.algorithm
        payload["tokenization"] = request.tokenization
        return json.dumps(payload) + "\n"
    lines = []
    if "length" in request.modes:
        lines.append(f"length: {length}")
    if distinct is not None:
        lines.append(f"distinct: {distinct}")
    if embeddings is not None:
        lines.append(f"embeddings: {embeddings}")
    return "".join(line + "\n" for line in lines)


def _run_compare(argv: list[str], oracle: bool) -> int:
    prog = "lcscount oracle" if oracle else "lcscount"
    parser = _compare_parser(prog)
    request = _build_request(parser.parse_args(argv), oracle=oracle)
    seq_a = tokenize(_load_bytes(request.input_a), request.tokenization)
    seq_b = tokenize(_load_bytes(request.input_b), request.tokenization)
    length, distinct, embeddings = _compute(seq_a, seq_b, request.modes, request.algorithm)
    sys.stdout.write(_emit(request, len(seq_a), len(seq_b), length, distinct, embeddings))
    return 0


def _run_bench(argv: list[str]) -> int:
    parser = _Parser(prog="lcscount bench")
    parser.add_argument("--len", dest="length", type=int, default=1000, metavar="N")
    parser.add_argument("--alphabet", type=int, default=4, metavar="K")
    parser.add_argument("--seed", type=int, default=0, metavar="S")
    args = parser.parse_args(argv)
    if args.length < 0:
        raise _UsageError("--len must be nonnegative")
    if args.alphabet < 1:
        raise _UsageError("--alphabet must be at least 1")

    rng = random.Random(args.seed)
    seq_a = [rng.randrange(args.alphabet) for _ in range(args.length)]
    seq_b = [rng.randrange(args.alphabet) for _ in range(args.length)]
    m = n = args.length
    sys.stdout.write(f"len={args.length} alphabet={args.alphabet} seed={args.seed}\n")

    full_cells = (m + 1) * (n + 1)
    for kind_name, full_fn, kind in (
        ("distinct", count_distinct_full, CountKind.DISTINCT),
        ("embeddings", count_embeddings_full, CountKind.EMBEDDINGS),
    ):
        start = time.perf_counter()
        full_fn(seq_a, seq_b)
        elapsed = time.perf_counter() - start
        sys.stdout.write(
            f"algorithm=full kind={kind_name} seconds={elapsed:.3f} count_cells={full_cells}\n"
        )

        workspace = []
        start = time.perf_counter()
        count_linear_space(seq_a, seq_b, kind, _state_probe=lambda _l, c: workspace.append(len(c)))
        elapsed = time.perf_counter() - start
        sys.stdout.write(
            f"algorithm=linear kind={kind_name} seconds={elapsed:.3f} count_cells={workspace[0]}\n"
        )
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    """Parse ``argv`` (default: ``sys.argv[1:]``), run, return the exit status."""
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        if argv and argv[0] == "oracle":
            return _run_compare(argv[1:], oracle=True)
        if argv and argv[0] == "bench":
            return _run_bench(argv[1:])
        return _run_compare(argv, oracle=False)
    except _UsageError as exc:
        print(f"lcscount: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"lcscount: i/o error: {exc}", file=sys.stderr)
        return 2
    except InputTooLargeError as exc:
        print(f"lcscount: oracle guard: {exc}", file=sys.stderr)
        return 3


def console_entry() -> None:
    raise SystemExit(main())
