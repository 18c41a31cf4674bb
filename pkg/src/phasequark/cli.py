"""Command-line front end.

Subcommands: verify, transform, spectrum, conjugate, export.  All output
is deterministic JSON (or CSV for matrix export): identical invocations
with the same --seed produce byte-identical bytes.  Exit codes: 0 when
every check passes / the command succeeds, 1 when a verification check
fails, 2 for usage or input errors (malformed flags, unknown labels,
unreadable or invalid spec files).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .hamiltonian import HamiltonianSpec, conjugate_hamiltonian, build_hamiltonian, square_and_spectrum
from .phase_space import PhaseVector, apply_pairing, exp_generator, pairing, pairing_tags
from .serialize import dump_json, matrix_to_csv, resolve_export, resolve_generator6, to_jsonable
from .verify import DEFAULT_SEED, SUITES, run_suite

__all__ = ["main", "build_parser"]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_error(message: str, out: str | None = None) -> int:
    _emit(dump_json({"error": message}), out)
    return 2


def _parse_vector6(text: str) -> list[float]:
    try:
        values = [float(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError as exc:
        raise ValueError(f"--input must be six comma-separated numbers: {exc}") from exc
    if len(values) != 6 or not all(math.isfinite(v) for v in values):
        raise ValueError(
            f"--input must be six finite comma-separated numbers, got {len(values)}"
        )
    return values


def _load_spec(path: str) -> HamiltonianSpec:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read spec file {path!r}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"spec file {path!r} is not valid JSON: {exc}") from exc
    return HamiltonianSpec.from_dict(data)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phasequark",
        description="Exact checks and transforms for the phase-space "
        "generator algebra and its 8x8 Dirac-style Hamiltonians.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p_verify.add_argument("--tol", type=float, default=None,
                          help="override every check tolerance")
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--samples", type=int, default=None,
                          help="sample count for the distinctness search")
    p_verify.add_argument("--out", default=None, help="write the report here instead of stdout")

    p_tr = sub.add_parser("transform", help="apply a pairing or a generator exponential")
    group = p_tr.add_mutually_exclusive_group(required=True)
    group.add_argument("--pairing", default=None, metavar="TAG",
                       help=f"one of {', '.join(pairing_tags())}")
    group.add_argument("--generator", default=None, metavar="LABEL",
                       help="F1..F8, R, R1..R3, H1..H3, J1..J3, or G(m,n)")
    p_tr.add_argument("--angle", type=float, default=None,
                      help="rotation angle for --generator")
    p_tr.add_argument("--input", required=True,
                      help="six comma-separated numbers p1,p2,p3,x1,x2,x3")
    p_tr.add_argument("--out", default=None)

    p_sp = sub.add_parser("spectrum", help="eigenvalues and squared form of a spec")
    p_sp.add_argument("spec_file", help="JSON Hamiltonian spec")
    p_sp.add_argument("--out", default=None)

    p_cj = sub.add_parser("conjugate", help="charge conjugate a Dirac/colored spec")
    p_cj.add_argument("spec_file", help="JSON Hamiltonian spec")
    p_cj.add_argument("--out", default=None)

    p_ex = sub.add_parser("export", help="export a named matrix as JSON or CSV")
    p_ex.add_argument("label", help="e.g. F3, R, G(1,5), A1, B2, C, gamma5, pairing:R")
    p_ex.add_argument("--format", default="json", choices=("json", "csv"))
    p_ex.add_argument("--out", default=None)

    return parser


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, tol=args.tol, seed=args.seed, samples=args.samples)
    _emit(dump_json(report.to_dict()), args.out)
    return 0 if report.passed else 1


def _cmd_transform(args: argparse.Namespace) -> int:
    values = _parse_vector6(args.input)
    if args.pairing is not None:
        if args.angle is not None:
            raise ValueError("--angle applies to --generator, not --pairing")
        scheme = pairing(args.pairing)
        result = apply_pairing(scheme, PhaseVector.from_array(values))
        payload = {
            "pairing": scheme.describe(),
            "input": values,
            "generalized_p": list(result.p),
            "generalized_x": list(result.x),
        }
    else:
        if args.angle is None:
            raise ValueError("--generator requires --angle")
        gen = resolve_generator6(args.generator)
        moved = exp_generator(gen, args.angle) @ values
        payload = {
            "generator": gen.label,
            "angle": args.angle,
            "input": values,
            "output": [float(v) for v in moved],
        }
    _emit(dump_json(payload), args.out)
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec_file)
    report = square_and_spectrum(build_hamiltonian(spec))
    _emit(dump_json({"spec": spec.to_dict(), "spectrum": report.to_dict()}), args.out)
    return 0


def _cmd_conjugate(args: argparse.Namespace) -> int:
    spec = _load_spec(args.spec_file)
    matrix, conj_spec = conjugate_hamiltonian(spec)
    payload = {
        "input_spec": spec.to_dict(),
        "conjugated_spec": conj_spec.to_dict(),
        "matrix": to_jsonable(matrix),
    }
    _emit(dump_json(payload), args.out)
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    kind, matrix = resolve_export(args.label)
    if args.format == "csv":
        _emit(matrix_to_csv(matrix), args.out)
    else:
        payload = {
            "label": args.label,
            "kind": kind,
            "shape": list(matrix.shape),
            "matrix": to_jsonable(matrix),
        }
        _emit(dump_json(payload), args.out)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "transform": _cmd_transform,
    "spectrum": _cmd_spectrum,
    "conjugate": _cmd_conjugate,
    "export": _cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        return _emit_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
