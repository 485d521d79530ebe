"""Command-line interface: problem files in, one JSON document out.

Subcommands: gb, hilbert, bigraded-report, bigraded-e, ideal-mixed,
rees-mult, diagonal-degree, sv, selftest. Every integer in the output is
serialized as decimal text so arbitrarily large values survive any JSON
consumer. Exit codes: 0 success, 1 usage or parse error, 2 mathematical
assertion failure, 3 genericity exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Optional

from .bigraded import (BigradedAlgebra, degrees_report, e_table_full,
                       e_value_via_criterion, e_positivity)
from .config import RunConfig, load_config
from .errors import GenericityExhausted, InputError, MathInvariantError, MixmultError
from .groebner import Ideal
from .hilbert import polynomial_of, series_of
from .ideal_mixed import GradedSetting, mixed_report, order_of, rees_and_diagonal
from .problemfile import ProblemFile, parse_problem
from .selftest import run_selftest
from .sv_cycles import bezout_check, make_join, sv_degrees


def _encode(value):
    """Recursively stringify integers (bools stay bools)."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _encode(v) for k, v in value.items()}
    return value


def _emit(command: str, inputs: dict, config: RunConfig, result: dict,
          certificates: Optional[dict] = None) -> str:
    doc = {
        "command": command,
        "inputs": _encode(inputs),
        "config": {"seed": str(config.seed), "prime": str(config.prime),
                   "max_retries": str(config.max_retries)},
        "result": _encode(result),
        "certificates": _encode(certificates or {}),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _load_file(path: str) -> tuple[ProblemFile, dict]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    pf = parse_problem(raw.decode("utf-8"))
    digest = hashlib.sha256(raw).hexdigest()
    return pf, {"file": path, "sha256": digest}


def _pick_ideal(pf: ProblemFile, name: str) -> Ideal:
    if name not in pf.ideals:
        raise InputError(f"no ideal named {name!r} in the problem file")
    return pf.ideals[name]


def _span(pf: ProblemFile, config: RunConfig) -> Optional[int]:
    # over the rationals, random coefficients are drawn below the configured prime
    return config.prime if pf.field_spec.p is None else None


def _graded_setting(pf: ProblemFile, args, config: RunConfig) -> tuple[GradedSetting, dict]:
    J = _pick_ideal(pf, args.ideal)
    ring = J.ring
    names = {"ideal": args.ideal}
    if getattr(args, "ambient", None):
        defining = _pick_ideal(pf, args.ambient)
        if defining.ring != ring:
            raise InputError("ambient and ideal live in different rings")
        names["ambient"] = args.ambient
    else:
        defining = Ideal(ring)
    return GradedSetting(ring, defining, J), names


def _table_payload(table) -> dict:
    return {
        "r": table.r,
        "r1": table.r1,
        "r2": table.r2,
        "diagonal": table.diagonal(),
        "entries": {f"{i},{j}": v for (i, j), v in sorted(table.entries.items())},
    }


# -- command handlers ----------------------------------------------------------


def _cmd_gb(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    I = _pick_ideal(pf, args.ideal)
    basis = [str(g) for g in I.groebner()]
    inputs["ideal"] = args.ideal
    return _emit("gb", inputs, config,
                 {"order": "degrevlex", "basis": basis, "size": len(basis)})


def _cmd_hilbert(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    I = _pick_ideal(pf, args.ideal)
    inputs["ideal"] = args.ideal
    S = series_of(I)
    result: dict = {
        "numerator": {f"{a},{b}": c for (a, b), c in sorted(S.numerator.items())},
    }
    if I.ring.is_standard_bigraded and I.ring.first_kind and I.ring.second_kind:
        P = polynomial_of(S)
        from .hilbert import e_table

        result["polynomial"] = {
            "coeffs": {f"{i},{j}": c for (i, j), c in sorted(P.coeffs.items())},
            "total_degree": P.total_degree,
            "deg_u": P.deg_u,
            "deg_v": P.deg_v,
            "stability": [P.u_star, P.v_star],
        }
        result["table"] = _table_payload(e_table(P))
    if not I.is_unit:
        from .hilbert import total_multiplicity

        dim, mult = total_multiplicity(I)
        result["dimension"] = dim
        result["multiplicity"] = mult
    return _emit("hilbert", inputs, config, result)


def _cmd_bigraded_report(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    I = _pick_ideal(pf, args.ideal)
    inputs["ideal"] = args.ideal
    alg = BigradedAlgebra(I.ring, I)
    rep = degrees_report(alg)
    result = {
        "r": rep.r, "r1": rep.r1, "r2": rep.r2,
        "p_is_zero": rep.p_is_zero,
        "dims_saturated": [rep.dim_sat, rep.dim_sat_plus_r2, rep.dim_sat_plus_r1],
        "dim_total": rep.dim_total,
        "dim_mod_first_kind": rep.dim_mod_r1,
        "dim_mod_second_kind": rep.dim_mod_r2,
    }
    return _emit("bigraded-report", inputs, config, result)


def _cmd_bigraded_e(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    I = _pick_ideal(pf, args.ideal)
    inputs["ideal"] = args.ideal
    alg = BigradedAlgebra(I.ring, I)
    span = _span(pf, config)
    certificates: dict = {}
    if (args.i is None) != (args.j is None):
        raise InputError("--i and --j must be given together")
    if args.i is not None:
        positive, wdim, cert = e_positivity(alg, args.i, args.j, config.seed,
                                            config.max_retries, span=span)
        value = e_value_via_criterion(alg, args.i, args.j, config.seed,
                                      config.max_retries, span=span)
        table = e_table_full(alg)
        if table.entries.get((args.i, args.j), 0) != value:
            raise MathInvariantError("criterion and table disagree")
        result = {"i": args.i, "j": args.j, "e": value,
                  "positive": positive, "witness_dim": wdim}
        certificates["filter_regular"] = {
            "seed": cert.seed,
            "elements": [str(s.element) for s in cert.steps],
            "ok": cert.ok,
        }
    else:
        table = e_table_full(alg, verify=config.verify, seed=config.seed,
                             max_retries=config.max_retries, span=span)
        result = {"table": _table_payload(table), "verified": config.verify}
    return _emit("bigraded-e", inputs, config, result, certificates)


def _cmd_ideal_mixed(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    setting, names = _graded_setting(pf, args, config)
    inputs.update(names)
    span = _span(pf, config)
    rep = mixed_report(setting, config.seed, config.max_retries, span)
    result = {
        "e": rep.e, "rho": rep.rho, "spread": rep.spread, "height": rep.height,
        "dim": rep.dim_a, "dims_along_chain": rep.dims,
        "order": order_of(setting) if setting.defining.is_zero else None,
    }
    return _emit("ideal-mixed", inputs, config, result,
                 {"seed": rep.seed, "dims": rep.dims})


def _cmd_rees_mult(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    setting, names = _graded_setting(pf, args, config)
    inputs.update(names)
    span = _span(pf, config)
    rep = mixed_report(setting, config.seed, config.max_retries, span)
    rees, diag = rees_and_diagonal(setting, rep)
    return _emit("rees-mult", inputs, config,
                 {"rees_multiplicity": rees, "e": rep.e})


def _cmd_diagonal_degree(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    setting, names = _graded_setting(pf, args, config)
    inputs.update(names)
    span = _span(pf, config)
    rep = mixed_report(setting, config.seed, config.max_retries, span)
    rees, diag = rees_and_diagonal(setting, rep)
    if diag is None:
        raise InputError("diagonal degree needs a polynomial ambient ring and "
                         "an equigenerated ideal")
    return _emit("diagonal-degree", inputs, config,
                 {"diagonal_degree": diag, "e": rep.e})


def _cmd_sv(args, config: RunConfig) -> str:
    pf, inputs = _load_file(args.file)
    I_X = _pick_ideal(pf, args.x)
    I_Y = _pick_ideal(pf, args.y)
    inputs["x"] = args.x
    inputs["y"] = args.y
    js = make_join(I_X, I_Y)
    span = _span(pf, config)
    rep = sv_degrees(js, config.seed, config.max_retries, span)
    if not bezout_check(js, rep):
        raise MathInvariantError("telescoping identity failed")
    result = {
        "degrees": rep.degrees,
        "e": rep.e_list,
        "sum": sum(rep.degrees),
    }
    return _emit("sv", inputs, config, result, {"seeds": rep.seeds})


def _cmd_selftest(args, config: RunConfig) -> str:
    results = run_selftest(config.seed)
    failures = sum(r.failures for r in results)
    result = {
        "passed": sum(r.checks - r.failures for r in results),
        "failed": failures,
        "suites": {
            r.name: {"checks": r.checks, "failures": r.failures, "notes": r.notes}
            for r in results
        },
    }
    doc = _emit("selftest", {}, config, result)
    if failures:
        raise _SelftestFailed(doc)
    return doc


class _SelftestFailed(MathInvariantError):
    def __init__(self, doc: str):
        super().__init__("selftest reported failures")
        self.doc = doc


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mixmult",
                     description="exact bigraded Hilbert polynomials, mixed "
                                 "multiplicities, and intersection-cycle degrees")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("--file", required=True, help="problem file")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--prime", type=int, default=None)
        p.add_argument("--max-retries", type=int, default=None)
        p.add_argument("--verify", action="store_true")

    p = sub.add_parser("gb", help="reduced degrevlex Groebner basis")
    common(p)
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("hilbert", help="series numerator, polynomial, table")
    common(p)
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("bigraded-report", help="degree data of the Hilbert polynomial")
    common(p)
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("bigraded-e", help="mixed multiplicities of a bigraded algebra")
    common(p)
    p.add_argument("--ideal", required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)

    for name, helptext in (
        ("ideal-mixed", "mixed multiplicities e_i(m|J) via saturation chains"),
        ("rees-mult", "multiplicity of the Rees algebra"),
        ("diagonal-degree", "degree of the diagonal embedding"),
    ):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.add_argument("--ideal", required=True, help="the ideal J")
        p.add_argument("--ambient", default=None,
                       help="ideal defining the ambient quotient ring")
        p.add_argument("--upto", type=int, default=None,
                       help="accepted for compatibility; the chain always runs "
                            "to the analytic spread")

    p = sub.add_parser("sv", help="intersection cycle degrees on the ruled join")
    common(p)
    p.add_argument("--x", required=True, help="ideal of the first subscheme")
    p.add_argument("--y", required=True, help="ideal of the second subscheme")

    p = sub.add_parser("selftest", help="run the fixture and property suites")
    common(p, needs_file=False)
    return parser


_HANDLERS = {
    "gb": _cmd_gb,
    "hilbert": _cmd_hilbert,
    "bigraded-report": _cmd_bigraded_report,
    "bigraded-e": _cmd_bigraded_e,
    "ideal-mixed": _cmd_ideal_mixed,
    "rees-mult": _cmd_rees_mult,
    "diagonal-degree": _cmd_diagonal_degree,
    "sv": _cmd_sv,
    "selftest": _cmd_selftest,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = load_config(args.seed, args.prime, args.max_retries, args.verify)
        print(_HANDLERS[args.command](args, config))
        return 0
    except _SelftestFailed as exc:
        print(exc.doc)
        print("selftest reported failures", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GenericityExhausted as exc:
        print(f"genericity exhausted: {exc}", file=sys.stderr)
        return 3
    except MathInvariantError as exc:
        print(f"mathematical assertion failed: {exc}", file=sys.stderr)
        return 2
    except MixmultError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
