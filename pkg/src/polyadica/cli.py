"""Command-line front end: JSON in, JSON out.

Exit status: 0 on success, 1 for a domain error (printed as
``{"error": ..., "detail": ...}``), 2 for malformed input or usage.
Rational mode is the default; ``--mode float`` or ``POLYADICA_MODE=float``
switches to tolerance floats.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import hypercomplex as hc
from . import imaginary as im
from . import norms, numeric, polyadization as pz, props, tower, vectoralg as va

# subcommand -> operations it exposes (checked by the coverage test)
COMMAND_TABLE = {
    "mul": ("nary_mul", "cd_mul", "dual_mul", "to_dense", "dense_mul"),
    "quer": ("querelement", "cd_inverse", "cd_conj"),
    "norm": ("polyadic_norm", "quer_norm", "cd_norm_sq"),
    "power": ("polyadic_power",),
    "identity-check": ("polyadic_identity", "is_idempotent", "is_nilpotent", "is_neutral_polyad"),
    "tower-shape": ("tower_dimension", "validate_arity_chain", "build_shape", "final_arity", "render_shape"),
    "vecmul": ("poly_product", "structure_constants", "shift_matrix", "reduced_vectorization"),
    "quervec": ("quervector",),
    "imaginary": (
        "ternary_mul_c", "ternary_mul_h", "ternary_mul_o",
        "quer_c", "quer_h", "quer_o",
        "norm_sq_c", "norm_sq_h", "norm_sq_o",
        "two_squares_identity",
    ),
    "props": ("run_suite",),
}

DOMAIN_ERRORS = (
    pz.NonInvertibleEntry,
    pz.ArityMismatch,
    pz.FactorCountError,
    pz.NonAssociativeAlgebra,
    pz.PatternViolation,
    va.ZeroCoordinate,
    va.DimensionMismatch,
    im.ZeroElement,
    im.SpanEscape,
    hc.UnnormedAlgebra,
    hc.LevelMismatch,
    numeric.DivisionByZero,
    numeric.ModeMismatch,
    tower.ChainBroken,
)


class Malformed(Exception):
    pass


def _read_input(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise Malformed(str(exc)) from None


def _factors(obj):
    if isinstance(obj, dict) and "factors" in obj:
        obj = obj["factors"]
    if not isinstance(obj, list):
        raise Malformed("expected a list of factors or {\"factors\": [...]}")
    return obj


def _element(obj, tag, mode):
    """A binary-algebra element: element object or coordinate list."""
    if isinstance(obj, dict):
        return hc.element_from_json(obj, mode)
    if tag is None:
        raise Malformed("bare coordinate lists need --algebra")
    coords = obj if isinstance(obj, list) else [obj]
    return hc.get_algebra(tag).from_coords([numeric.load_scalar(c, mode) for c in coords], mode)


def _zmatrix(obj, args):
    return pz.zmatrix_from_json(obj, args.mode, args.algebra, args.arity)


def _dense_json(d: pz.DenseMatrix):
    def cell(x):
        return hc.element_to_json(x) if hasattr(x, "coeffs") else numeric.dump_scalar(x)

    return [[cell(x) for x in row] for row in d.cells]


# -- subcommands --------------------------------------------------------------


def cmd_mul(args):
    facs = _factors(_read_input(args.input))
    if args.arity == 2:
        xs = [_element(f, args.algebra, args.mode) for f in facs]
        if len(xs) != 2:
            raise pz.FactorCountError(f"binary product needs 2 factors, got {len(xs)}")
        return hc.element_to_json(xs[0] * xs[1])
    zs = [_zmatrix(f, args) for f in facs]
    if args.dense:
        d = pz.dense_chain([pz.to_dense(z) for z in zs])
        return {"dense": _dense_json(d)}
    return pz.zmatrix_to_json(pz.nary_mul(zs))


def cmd_quer(args):
    obj = _read_input(args.input)
    if args.arity == 2:
        x = _element(obj, args.algebra, args.mode)
        return {"inverse": hc.element_to_json(x.inverse()), "conj": hc.element_to_json(x.conj())}
    return pz.zmatrix_to_json(pz.querelement(_zmatrix(obj, args)))


def cmd_norm(args):
    obj = _read_input(args.input)
    if args.arity == 2:
        return {"norm_sq": numeric.dump_scalar(_element(obj, args.algebra, args.mode).norm_sq())}
    z = _zmatrix(obj, args)
    return (norms.quer_norm(z) if args.quer else norms.polyadic_norm(z)).to_json()


def cmd_power(args):
    z = _zmatrix(_read_input(args.input), args)
    return pz.zmatrix_to_json(pz.polyadic_power(z, args.ell))


def cmd_identity_check(args):
    if args.input is None and args.arity is not None and args.algebra is not None:
        return {"identity": pz.zmatrix_to_json(pz.polyadic_identity(args.arity, args.algebra, args.mode))}
    z = _zmatrix(_read_input(args.input), args)
    e = pz.polyadic_identity(z.arity, z.algebra, args.mode)
    return {
        "identity": pz.zmatrix_to_json(e),
        "is_identity": z == e,
        "is_idempotent": pz.is_idempotent(z, args.ell),
        "is_nilpotent": pz.is_nilpotent(z, args.ell),
        "is_neutral_polyad": pz.is_neutral_polyad([z] * (z.arity - 1), e),
        "is_invertible": pz.is_invertible(z),
    }


def cmd_tower_shape(args):
    try:
        spec = tower.TowerSpec.parse(args.arities)
    except ValueError as exc:
        raise Malformed(str(exc)) from None
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", tower.ChainWarning)
        kappa = tower.validate_arity_chain(spec, strict=args.strict)
    shape = tower.build_shape(spec)
    fa = tower.final_arity(spec)
    out = {
        "stages": list(spec.stages),
        "size": shape.size,
        "dimension": tower.tower_dimension(spec),
        "coeff_dim": shape.coeff_dim,
        "kappa": kappa,
        "chain_warnings": [str(w.message) for w in caught],
        "final_arity": {"outer": fa.outer, "flat": fa.flat, "note": fa.note},
        "pattern": [list(p) for p in shape.pattern_1based()],
    }
    if args.render:
        return out, tower.render_shape(shape)
    return out


def cmd_vecmul(args):
    if args.structure_constants:
        if args.dim is None:
            raise Malformed("--structure-constants needs --dim")
        sc = va.structure_constants(args.dim)
        return {"dim": sc.dim, "nonzero": [{"indices": list(i), "output": j, "value": v} for i, j, v in sc.nonzero]}
    vs = [va.vector_from_json(f, args.mode) for f in _factors(_read_input(args.input))]
    if args.dim is not None and vs and vs[0].dim != args.dim:
        raise va.DimensionMismatch(f"--dim {args.dim} but factors have dimension {vs[0].dim}")
    if args.dense:
        return va.reduced_vectorization(pz.dense_chain([va.shift_matrix(v) for v in vs])).to_json()
    return va.poly_product(vs).to_json()


def cmd_quervec(args):
    return va.quervector(va.vector_from_json(_read_input(args.input), args.mode)).to_json()


def cmd_imaginary(args):
    obj = _read_input(args.input)
    if args.action == "mul":
        xs = [im.imaginary_from_json(f, args.mode) for f in _factors(obj)]
        if len(xs) != 3:
            raise pz.FactorCountError(f"ternary product needs 3 factors, got {len(xs)}")
        return im.ternary_mul(*xs).to_json()
    if args.action == "quer":
        return im.quer(im.imaginary_from_json(obj, args.mode)).to_json()
    if args.action == "norm":
        return {"norm_sq": numeric.dump_scalar(im.imaginary_from_json(obj, args.mode).norm_sq())}
    xs = [im.imaginary_from_json(f, args.mode) for f in _factors(obj)]
    if len(xs) != 3 or not all(isinstance(x, im.HalfQuaternion) for x in xs):
        raise Malformed("identity needs three half_quaternion factors")
    lhs, rhs = im.two_squares_identity(*xs)
    return {"lhs": numeric.dump_scalar(lhs), "rhs": numeric.dump_scalar(rhs), "holds": lhs == rhs}


def cmd_props(args):
    if args.list:
        return {"suites": {n: {"expected_to_hold": s.expected_to_hold, "about": s.about} for n, s in props.SUITES.items()}}
    if args.suite not in props.SUITES:
        raise Malformed(f"unknown suite {args.suite!r}; try --list")
    report = props.run_suite(args.suite, args.cases, args.seed, args.mode)
    return report, None, 1 if report["failed"] else 0


HANDLERS = {
    "mul": cmd_mul,
    "quer": cmd_quer,
    "norm": cmd_norm,
    "power": cmd_power,
    "identity-check": cmd_identity_check,
    "tower-shape": cmd_tower_shape,
    "vecmul": cmd_vecmul,
    "quervec": cmd_quervec,
    "imaginary": cmd_imaginary,
    "props": cmd_props,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=numeric.MODES, default=None, help="scalar mode (default: rational)")
    common.add_argument("--in", dest="input", default=None, help="JSON input file, '-' for stdin")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", choices=sorted(hc.ALGEBRAS), default=None)
    alg.add_argument("--arity", type=int, default=None, help="2 selects the binary coefficient algebra")

    p = argparse.ArgumentParser(prog="polyadica", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mul", parents=[common, alg], help="n-ary (or binary) product")
    s.add_argument("--dense", action="store_true", help="multiply the dense matrices instead")
    s = sub.add_parser("quer", parents=[common, alg], help="querelement (inverse and conjugate at arity 2)")
    s = sub.add_parser("norm", parents=[common, alg], help="polyadic norm")
    s.add_argument("--quer", action="store_true", help="closed-form norm of the querelement")
    s = sub.add_parser("power", parents=[common, alg], help="polyadic power")
    s.add_argument("--ell", type=int, default=1)
    s = sub.add_parser("identity-check", parents=[common, alg], help="polyadic identity and predicates")
    s.add_argument("--ell", type=int, default=1)
    s = sub.add_parser("tower-shape", parents=[common], help="polyadic Cayley-Dickson tower shape")
    s.add_argument("--arities", required=True, help="comma separated, e.g. 5,3,4")
    s.add_argument("--render", action="store_true")
    s.add_argument("--strict", action="store_true", help="non-integral arity steps are errors")
    s = sub.add_parser("vecmul", parents=[common], help="(m+1)-ary vector product")
    s.add_argument("--dim", type=int, default=None)
    s.add_argument("--dense", action="store_true", help="go through shift matrices")
    s.add_argument("--structure-constants", action="store_true")
    sub.add_parser("quervec", parents=[common], help="quervector")
    s = sub.add_parser("imaginary", parents=[common], help="imaginary tower ternary algebras")
    s.add_argument("action", choices=("mul", "quer", "norm", "identity"))
    s = sub.add_parser("props", parents=[common], help="seeded property sweep")
    s.add_argument("--suite", default=None)
    s.add_argument("--cases", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--list", action="store_true")
    return p


def _emit(obj, stream):
    stream.write(json.dumps(obj, sort_keys=True, ensure_ascii=False) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.mode is None:
            args.mode = numeric.default_mode()
        result = HANDLERS[args.command](args)
    except DOMAIN_ERRORS as exc:
        err = {"error": type(exc).__name__, "detail": str(exc)}
        if hasattr(exc, "index"):
            err["index"] = exc.index
        _emit(err, sys.stdout)
        return 1
    except (Malformed, ValueError, KeyError, TypeError) as exc:
        _emit({"error": "MalformedInput", "detail": str(exc)}, sys.stdout)
        return 2
    text, status = None, 0
    if isinstance(result, tuple):
        result, text, *rest = result
        status = rest[0] if rest else 0
    _emit(result, sys.stdout)
    if text:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
