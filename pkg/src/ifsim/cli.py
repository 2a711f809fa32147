"""Command line driver: ``ifsim rank | diagnose | compare``.

Exit codes: 0 ok, 1 usage, 2 parse/validation, 3 computation error.
The JSON report goes to ``--output`` (or stdout when omitted); when an
output file is given, a rounded table is printed to stdout.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from pathlib import Path
from typing import Sequence, TextIO

from . import fileio
from .diagnosis import compare_diagnosis_measures, diagnose
from .errors import IfsError, InputValidationError, ParseError
from .madm import compare_measures, rank
from .measures import MEASURE_NAMES, MeasureId, all_measures

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_COMPUTE = 3


class UsageError(Exception):
    pass


def _parse_weights(text: str | None) -> list[float] | None:
    if text is None:
        return None
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--weights must be comma-separated numbers, got {text!r}") from None


def _parse_measures(text: str, p: float) -> list[MeasureId]:
    try:
        if text.strip().lower() == "all":
            return list(all_measures(p))
        return [MeasureId.from_name(name, p) for name in text.split(",") if name.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(input_path: str | os.PathLike) -> fileio.InputDocument:
    try:
        data = Path(input_path).read_bytes()
    except OSError as exc:
        raise InputValidationError([f"cannot read {input_path}: {exc.strerror}"]) from None
    return fileio.parse_input(data)


def _write(report: dict, output_path, stdout: TextIO) -> None:
    text = fileio.dumps_report(report)
    if output_path is None:
        stdout.write(text)
        return
    path = Path(output_path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    stdout.write(fileio.render_table(report))


def _guard(action, stdout: TextIO | None, stderr: TextIO | None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        report, output_path = action()
        _write(report, output_path, stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except (ParseError, InputValidationError) as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_INPUT
    except IfsError as exc:
        print(f"computation error: {exc}", file=stderr)
        return EXIT_COMPUTE
    except OSError as exc:
        print(f"cannot write report: {exc}", file=stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def run_rank(
    input_path,
    measure_name: str = "projection",
    output_path=None,
    *,
    weights: str | None = None,
    p: float = 2.0,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    def action():
        measures = _parse_measures(measure_name, p)
        if len(measures) != 1 or measure_name.strip().lower() == "all":
            raise UsageError("rank takes exactly one measure; use compare for several")
        [measure] = measures
        override = _parse_weights(weights)
        matrix = _load(input_path).to_decision_matrix(override)
        return fileio.rank_report(rank(matrix, measure)), output_path

    return _guard(action, stdout, stderr)


def run_diagnose(
    input_path,
    weights: str | None = None,
    output_path=None,
    *,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    def action():
        override = _parse_weights(weights)
        case = _load(input_path).to_diagnosis_case(override)
        used = case.weights.weights if case.weights is not None else None
        return fileio.diagnosis_report(diagnose(case), used), output_path

    return _guard(action, stdout, stderr)


def run_compare(
    input_path,
    measure_names: str = "all",
    output_path=None,
    *,
    weights: str | None = None,
    p: float = 2.0,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    def action():
        measures = _parse_measures(measure_names, p)
        override = _parse_weights(weights)
        doc = _load(input_path)
        if doc.kind == fileio.DIAGNOSIS_CASE:
            case = doc.to_diagnosis_case(override)
            n = len(case.patient)
            w = case.weights.weights if case.weights is not None else (1.0 / n,) * n
            reports = compare_diagnosis_measures(case, measures, w)
            return fileio.diagnosis_comparison_report(reports, w), output_path
        matrix = doc.to_decision_matrix(override)
        return fileio.comparison_report(compare_measures(matrix, measures)), output_path

    return _guard(action, stdout, stderr)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ifsim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    names = ", ".join(MEASURE_NAMES)

    def common(cmd):
        cmd.add_argument("--input", required=True, help="input document (JSON)")
        cmd.add_argument("--output", help="report path; stdout when omitted")
        cmd.add_argument("--weights", help="comma-separated weights overriding the document")

    cmd = sub.add_parser("rank", help="rank alternatives against the ideal scheme")
    common(cmd)
    cmd.add_argument("--measure", default="projection", help=f"one of: {names}")
    cmd.add_argument("--p", type=float, default=2.0, help="Li-Cheng exponent (s6), default 2")

    cmd = sub.add_parser("diagnose", help="diagnose a patient by projection similarity")
    common(cmd)

    cmd = sub.add_parser("compare", help="compare several measures on one document")
    common(cmd)
    cmd.add_argument("--measure", default="all", help=f"'all' or comma-separated: {names}")
    cmd.add_argument("--p", type=float, default=2.0, help="Li-Cheng exponent (s6), default 2")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "rank":
        return run_rank(args.input, args.measure, args.output, weights=args.weights, p=args.p)
    if args.command == "diagnose":
        return run_diagnose(args.input, args.weights, args.output)
    return run_compare(args.input, args.measure, args.output, weights=args.weights, p=args.p)


if __name__ == "__main__":
    sys.exit(main())
