"""Batch command line interface.

Problem files are JSON documents.  Scalars are {"v": valuation, "u":
"unit residue as a decimal string"}, with u = "0" denoting zero.
Matrices are row-major arrays of scalars under "entries", with "p" and
"m" at the top level and command-specific fields ("N", "depth") beside
them.  Extension scalars serialise as arrays of base scalars in
coordinate order, constant coordinate first; they appear in outputs
only.

Exit status: 0 on success, 1 on mathematical rejection (with a
structured reason), 2 on malformed input (with a diagnostic naming the
offending field).  Output is byte-identical across runs for identical
inputs; every randomised check takes an explicit seed and defaults to 0.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from typing import Optional, Sequence

from .ladders import (
    MahlerVector,
    TateVector,
    euler_operator,
    kochubei_lower,
    kochubei_raise,
    kochubei_shift,
    number_operator,
    position_operator,
    tate_derivative,
    tate_raise,
)
from .matrix import UMatrix, certify_orthogonal_projection, sample_unit_vector
from .padic import (
    INFINITE,
    PadicScalar,
    PrecisionContext,
    classify_orbit,
    scalar_from_rational,
    teichmuller_digits,
    teichmuller_lift,
)
from .spectral import (
    NotHermiteError,
    PeriodExceededError,
    hermite_digits_matrix,
    jordan_decompose,
    spectral_integral,
    spectral_measure,
    spectrum_diameter,
    teichmuller_spectral,
    uncertainty_check,
)
from .unramified import ExtScalar

MAX_DIMENSION = 64
MAX_PRECISION = 64
MAX_ENUMERATION = 2**20


class SchemaError(Exception):
    def __init__(self, fieldname: str, message: str):
        super().__init__(f"field '{fieldname}': {message}")
        self.fieldname = fieldname


class MathRejection(Exception):
    def __init__(self, reason: dict):
        super().__init__(reason.get("reason", "rejected"))
        self.reason = reason


# -- serialization -------------------------------------------------------------


def scalar_to_json(x) -> object:
    if isinstance(x, ExtScalar):
        return [scalar_to_json(c) for c in x.coords]
    if x.is_zero:
        return {"v": 0, "u": "0"}
    return {"v": int(x.valuation), "u": str(x.unit)}


def scalar_from_json(doc, ctx: PrecisionContext, fieldname: str) -> PadicScalar:
    if not isinstance(doc, dict):
        raise SchemaError(fieldname, "scalar must be an object with 'v' and 'u'")
    if "u" not in doc or "v" not in doc:
        raise SchemaError(fieldname, "scalar must carry 'v' and 'u'")
    u_raw = doc["u"]
    if not isinstance(u_raw, str) or not _is_decimal(u_raw):
        raise SchemaError(fieldname + ".u", "unit must be a decimal string")
    v_raw = doc["v"]
    if not isinstance(v_raw, int) or isinstance(v_raw, bool):
        raise SchemaError(fieldname + ".v", "valuation must be an integer")
    unit = int(u_raw)
    if unit == 0:
        return PadicScalar.zero(ctx)
    if unit % ctx.p == 0:
        raise SchemaError(fieldname + ".u", "unit residue is divisible by p")
    return PadicScalar(ctx, v_raw, unit % ctx.modulus)


def _is_decimal(s: str) -> bool:
    return s.isdigit()


def matrix_to_json(a: UMatrix) -> dict:
    return {
        "n": a.n,
        "entries": [scalar_to_json(e) for row in a.rows for e in row],
    }


def valuation_to_json(v):
    return None if v == INFINITE else int(v)


# -- input files ----------------------------------------------------------------


def _load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise SchemaError("in", f"cannot read file: {exc}")
    except json.JSONDecodeError as exc:
        raise SchemaError("in", f"invalid JSON: {exc}")
    if not isinstance(doc, dict):
        raise SchemaError("in", "top level must be a JSON object")
    return doc


def _context_from(doc: dict) -> PrecisionContext:
    p = doc.get("p")
    if not isinstance(p, int) or isinstance(p, bool):
        raise SchemaError("p", "prime p is required and must be an integer")
    m = doc.get("m")
    if not isinstance(m, int) or isinstance(m, bool):
        raise SchemaError("m", "precision m is required and must be an integer")
    if not 1 <= m <= MAX_PRECISION:
        raise SchemaError("m", f"precision must be in [1, {MAX_PRECISION}]")
    try:
        return PrecisionContext(p, m)
    except ValueError as exc:
        raise SchemaError("p", str(exc))


def _matrix_from(doc: dict, ctx: PrecisionContext, fieldname: str = "entries") -> UMatrix:
    entries = doc.get(fieldname)
    if not isinstance(entries, list) or not entries:
        raise SchemaError(fieldname, "a nonempty row-major array of scalars is required")
    n = math.isqrt(len(entries))
    if n * n != len(entries):
        raise SchemaError(fieldname, f"length {len(entries)} is not a perfect square")
    if n > MAX_DIMENSION:
        raise SchemaError(fieldname, f"dimension {n} exceeds the bound {MAX_DIMENSION}")
    declared = doc.get("n")
    if declared is not None and declared != n:
        raise SchemaError("n", f"declared dimension {declared} does not match {n}")
    scalars = [
        scalar_from_json(entry, ctx, f"{fieldname}[{i}]") for i, entry in enumerate(entries)
    ]
    rows = [scalars[i * n : (i + 1) * n] for i in range(n)]
    return UMatrix.from_scalars(rows)


def _vector_from(doc: dict, ctx: PrecisionContext, fieldname: str, length: int) -> tuple:
    raw = doc.get(fieldname)
    if not isinstance(raw, list) or len(raw) != length:
        raise SchemaError(fieldname, f"an array of {length} scalars is required")
    return tuple(
        scalar_from_json(entry, ctx, f"{fieldname}[{i}]") for i, entry in enumerate(raw)
    )


def _period_from(args, ctx: PrecisionContext, default: int = 1) -> int:
    period = args.N if args.N is not None else default
    if period < 1:
        raise SchemaError("N", "period must be >= 1")
    if ctx.p**period > MAX_ENUMERATION:
        raise SchemaError("N", f"p^N exceeds the enumeration bound {MAX_ENUMERATION}")
    return period


# -- subcommands -------------------------------------------------------------------


def _context_from_flags(args) -> PrecisionContext:
    return _context_from({"p": _flag_int(args.p, "p"), "m": _flag_int(args.m, "m")})


def _cmd_lift(args) -> dict:
    ctx = _context_from_flags(args)
    residue = _flag_int(args.residue, "residue")
    if not 0 <= residue < ctx.p:
        raise SchemaError("residue", f"must be in [0, {ctx.p})")
    value = teichmuller_lift(residue, ctx)
    return {"p": ctx.p, "m": ctx.m, "residue": residue, "value": scalar_to_json(value)}


def _cmd_digits(args) -> dict:
    ctx = _context_from_flags(args)
    num = _flag_int(args.num, "num")
    den = _flag_int(args.den, "den", default=1)
    if den == 0:
        raise SchemaError("den", "denominator must be nonzero")
    scalar = scalar_from_rational(num, den, ctx)
    expansion = teichmuller_digits(scalar)
    return {
        "p": ctx.p,
        "m": ctx.m,
        "value": scalar_to_json(scalar),
        "lead_valuation": expansion.lead_valuation,
        "digits": [scalar_to_json(d) for d in expansion.digits],
    }


def _cmd_classify(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    bound = args.N if args.N is not None else 8
    if bound < 1:
        raise SchemaError("N", "period bound must be >= 1")
    if "entries" in doc:
        subject = _matrix_from(doc, ctx)
    elif "scalar" in doc:
        subject = scalar_from_json(doc["scalar"], ctx, "scalar")
    else:
        raise SchemaError("entries", "provide 'entries' (matrix) or 'scalar'")
    try:
        report = classify_orbit(subject, bound)
    except ValueError as exc:
        raise MathRejection({"kind": "precondition", "reason": str(exc)})
    out = {
        "p": ctx.p,
        "m": ctx.m,
        "kind": report.kind.value,
        "steps": report.steps,
    }
    if report.period is not None:
        out["period"] = report.period
    if report.limit is not None:
        if isinstance(report.limit, UMatrix):
            out["limit"] = matrix_to_json(report.limit)
        else:
            out["limit"] = scalar_to_json(report.limit)
    return out


def _cmd_spectral(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    period = _period_from(args, ctx, default=doc.get("N", 1))
    matrix = _matrix_from(doc, ctx)
    try:
        decomposition = teichmuller_spectral(matrix, period)
    except ValueError as exc:
        raise MathRejection({"kind": "not_teichmuller", "reason": str(exc)})
    return {
        "p": ctx.p,
        "m": ctx.m,
        "period": decomposition.period,
        "residual_identity_defect": decomposition.residual_identity_defect,
        "points": [
            {"eigenvalue": scalar_to_json(lam), "projector": matrix_to_json(proj)}
            for lam, proj in decomposition.points
        ],
    }


def _measure_inputs(args):
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    depth = args.depth if args.depth is not None else doc.get("depth", ctx.m)
    if not isinstance(depth, int) or isinstance(depth, bool) or not 1 <= depth <= ctx.m:
        raise SchemaError("depth", f"depth must be an integer in [1, {ctx.m}]")
    matrix = _matrix_from(doc, ctx)
    try:
        measure = spectral_measure(matrix, depth)
    except NotHermiteError as exc:
        raise MathRejection(
            {
                "kind": "not_hermite",
                "stage": exc.stage,
                "defect_norm": exc.defect_norm,
                "reason": exc.reason,
            }
        )
    return ctx, matrix, measure


def _cmd_measure(args) -> dict:
    ctx, _, measure = _measure_inputs(args)
    nodes = []
    for address, projector in measure.nodes:
        nodes.append(
            {
                "address": list(address),
                "center": scalar_to_json(measure.ball_center(address, ctx)),
                "projector": matrix_to_json(projector),
            }
        )
    return {
        "p": ctx.p,
        "m": ctx.m,
        "depth": measure.depth,
        "lead_valuation": measure.lead_valuation,
        "nodes": nodes,
    }


def _cmd_integral(args) -> dict:
    ctx, matrix, measure = _measure_inputs(args)
    identity_check, reconstruction = spectral_integral(measure)
    error = reconstruction - matrix
    return {
        "p": ctx.p,
        "m": ctx.m,
        "depth": measure.depth,
        "identity_check": matrix_to_json(identity_check),
        "reconstruction": matrix_to_json(reconstruction),
        "error_valuation": valuation_to_json(error.valuation),
    }


def _cmd_jordan(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    bound = args.N if args.N is not None else 8
    if bound < 1:
        raise SchemaError("N", "period bound must be >= 1")
    matrix = _matrix_from(doc, ctx)
    try:
        pair = jordan_decompose(matrix, bound)
    except ValueError as exc:
        raise MathRejection({"kind": "precondition", "reason": str(exc)})
    except PeriodExceededError as exc:
        raise MathRejection(
            {"kind": "period_exceeded", "reason": str(exc), "period_bound": exc.period_bound}
        )
    return {
        "p": ctx.p,
        "m": ctx.m,
        "semisimple": matrix_to_json(pair.semisimple),
        "nilpotent": matrix_to_json(pair.nilpotent),
        "period": pair.period,
        "steps_to_kill": pair.steps_to_kill,
    }


def _cmd_hermite(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    period = _period_from(args, ctx, default=doc.get("N", 1))
    matrix = _matrix_from(doc, ctx)
    try:
        expansion = hermite_digits_matrix(matrix, period)
    except NotHermiteError as exc:
        raise MathRejection(
            {
                "kind": "not_hermite",
                "stage": exc.stage,
                "defect_norm": exc.defect_norm,
                "reason": exc.reason,
            }
        )
    return {
        "p": ctx.p,
        "m": ctx.m,
        "period": expansion.period,
        "lead_valuation": expansion.lead_valuation,
        "digits": [matrix_to_json(d) for d in expansion.digits],
    }


def _cmd_diam(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    period = _period_from(args, ctx, default=doc.get("N", 1))
    matrix = _matrix_from(doc, ctx)
    try:
        report = spectrum_diameter(matrix, period)
    except NotHermiteError as exc:
        raise MathRejection(
            {
                "kind": "not_hermite",
                "stage": exc.stage,
                "defect_norm": exc.defect_norm,
                "reason": exc.reason,
            }
        )
    return {
        "p": ctx.p,
        "m": ctx.m,
        "period": report.period,
        "diameter": report.diameter,
        "diameter_valuation": valuation_to_json(report.diameter_valuation),
        "operator_norm": report.operator_norm,
        "spectrum": [scalar_to_json(lam) for lam in report.spectrum],
    }


def _cmd_uncertainty(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    period = _period_from(args, ctx, default=doc.get("N", 1))
    a = _matrix_from(doc, ctx, "A")
    b = _matrix_from(doc, ctx, "B")
    if a.n != b.n:
        raise SchemaError("B", "A and B must have the same dimension")
    if "psi" in doc:
        vectors = [_vector_from(doc, ctx, "psi", a.n)]
    else:
        rng = random.Random(args.seed)
        vectors = [sample_unit_vector(ctx, a.n, rng) for _ in range(args.samples)]
    reports = []
    try:
        for psi in vectors:
            result = uncertainty_check(a, b, psi, period)
            reports.append(
                {
                    "psi": [scalar_to_json(c) for c in psi],
                    "lhs_norm": result.lhs_norm,
                    "rhs_norm": result.rhs_norm,
                    "holds": result.holds,
                }
            )
    except NotHermiteError as exc:
        raise MathRejection(
            {
                "kind": "not_hermite",
                "stage": exc.stage,
                "defect_norm": exc.defect_norm,
                "reason": exc.reason,
            }
        )
    except ValueError as exc:
        raise MathRejection({"kind": "precondition", "reason": str(exc)})
    return {
        "p": ctx.p,
        "m": ctx.m,
        "period": period,
        "holds": all(r["holds"] for r in reports),
        "checks": reports,
    }


_LADDER_OPS = {
    "raise": kochubei_raise,
    "lower": kochubei_lower,
    "shift": kochubei_shift,
    "number": number_operator,
    "position": position_operator,
}

_TATE_OPS = {
    "euler": euler_operator,
    "raise": tate_raise,
    "derivative": tate_derivative,
}


def _coeff_vector(doc: dict, ctx: PrecisionContext, cls):
    raw = doc.get("coeffs")
    if not isinstance(raw, list) or not raw:
        raise SchemaError("coeffs", "a nonempty array of scalars is required")
    coeffs = tuple(
        scalar_from_json(entry, ctx, f"coeffs[{i}]") for i, entry in enumerate(raw)
    )
    return cls(ctx, coeffs)


def _cmd_kochubei(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    op = _LADDER_OPS.get(args.op)
    if op is None:
        raise SchemaError("op", f"unknown ladder operation '{args.op}'")
    vector = _coeff_vector(doc, ctx, MahlerVector)
    result = op(vector)
    return {
        "p": ctx.p,
        "m": ctx.m,
        "op": args.op,
        "coeffs": [scalar_to_json(c) for c in result.coeffs],
        "truncated": result.truncated,
    }


def _cmd_euler(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    op = _TATE_OPS.get(args.op)
    if op is None:
        raise SchemaError("op", f"unknown Tate operation '{args.op}'")
    vector = _coeff_vector(doc, ctx, TateVector)
    result = op(vector)
    return {
        "p": ctx.p,
        "m": ctx.m,
        "op": args.op,
        "coeffs": [scalar_to_json(c) for c in result.coeffs],
        "truncated": result.truncated,
    }


def _cmd_certify(args) -> dict:
    doc = _load_document(args.infile)
    ctx = _context_from(doc)
    matrix = _matrix_from(doc, ctx)
    cert = certify_orthogonal_projection(matrix, samples=args.samples, seed=args.seed)
    return {
        "p": ctx.p,
        "m": ctx.m,
        "idempotency_defect": cert.idempotency_defect,
        "norm_of_pi": cert.norm_of_pi,
        "max_decomposition_checked": cert.max_decomposition_checked,
        "samples": cert.samples,
        "unit_ball_stable": cert.unit_ball_stable,
        "reduction_idempotent": cert.reduction_idempotent,
        "valid": cert.valid,
        "failures": list(cert.failures),
    }


def _flag_int(value, name: str, default: Optional[int] = None) -> int:
    if value is None:
        if default is not None:
            return default
        raise SchemaError(name, "flag is required")
    return value


_COMMANDS = {
    "lift": _cmd_lift,
    "digits": _cmd_digits,
    "classify": _cmd_classify,
    "spectral": _cmd_spectral,
    "measure": _cmd_measure,
    "integral": _cmd_integral,
    "jordan": _cmd_jordan,
    "hermite": _cmd_hermite,
    "diam": _cmd_diam,
    "uncertainty": _cmd_uncertainty,
    "kochubei": _cmd_kochubei,
    "euler": _cmd_euler,
    "certify-projection": _cmd_certify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padicspec",
        description="Batch interface to the p-adic spectral engine.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--in", dest="infile", help="JSON problem file")
        cmd.add_argument("--p", type=int)
        cmd.add_argument("--m", type=int)
        cmd.add_argument("--N", type=int)
        cmd.add_argument("--depth", type=int)
        cmd.add_argument("--seed", type=int, default=0)
        cmd.add_argument("--samples", type=int, default=10)
        cmd.add_argument("--out", dest="outfile")
        cmd.add_argument("--residue", type=int)
        cmd.add_argument("--num", type=int)
        cmd.add_argument("--den", type=int)
        cmd.add_argument("--op", default={"kochubei": "number", "euler": "euler"}.get(name))
    return parser


def run_command(argv: Sequence[str], stream=None) -> int:
    """Parse argv, run one subcommand, emit a JSON document.

    Returns the process exit status; the document goes to --out or the
    given stream (stdout by default).
    """
    stream = stream or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return 2 if exc.code else 0
    handler = _COMMANDS[args.command]
    try:
        if handler in (_cmd_classify, _cmd_spectral, _cmd_measure, _cmd_integral,
                       _cmd_jordan, _cmd_hermite, _cmd_diam, _cmd_uncertainty,
                       _cmd_kochubei, _cmd_euler, _cmd_certify):
            if not args.infile:
                raise SchemaError("in", "an input file is required for this command")
        document = handler(args)
        status = 0
    except SchemaError as exc:
        document = {"error": {"kind": "malformed_input", "field": exc.fieldname, "reason": str(exc)}}
        status = 2
    except MathRejection as exc:
        document = {"error": exc.reason}
        status = 1
    payload = json.dumps(document, sort_keys=True, indent=2) + "\n"
    if args.outfile:
        with open(args.outfile, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        stream.write(payload)
    return status


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
