"""Command-line front end.

Exit status: 0 on success, 2 on domain errors (a JSON error object is
printed), 1 on usage errors.  Reports are written to a temporary file and
renamed into place, so a failed run never leaves a partial report.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import re
import sys
import tempfile

from . import __version__
from .elliptic import PendulumParams, critical_energies, invariants_from_params
from .errors import DomainError
from .exact import fmt_rational, parse_rational, qq, sqrt_rational
from .fuchsian import classify_lame, kimura_solvable, search_exponential_solutions, singular_exponents
from .fuchsian.ode import IrrationalExponentError
from .galois import (
    ALGEBRAIC_E0,
    build_nve,
    classical_verdict,
    energy_E0,
    generic_verdict,
    hove_obstruction,
    hove_verdict,
    riemann_confluence_1,
    riemann_confluence_2,
)
from .galois.verdicts import confluence1_witness, confluence2_witness
from .orbits import poincare_section, seed_grid, write_section_csv

DEFAULT_LAME_E = "-4/5"
DEFAULT_TOL = 1e-12
DEFAULT_GRID = 11
DEFAULT_CROSSINGS = 500
FIG1 = {"k": "4/3", "a": "-4/3", "E": "-0.8"}
DEFAULTS = {
    "lame_E": DEFAULT_LAME_E,
    "max_order": 2,
    "terms": "3*max_order + 9, extended by 6 up to 4 times",
    "poincare": {**FIG1, "tol": DEFAULT_TOL, "seeds": DEFAULT_GRID, "crossings": DEFAULT_CROSSINGS},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text):
    try:
        return parse_rational(text)
    except Exception as exc:  # RationalParseError and friends
        raise UsageError(str(exc)) from None


def _decimal(text):
    """Exact value of a decimal or ``p/q`` string (poincare only)."""
    try:
        return parse_rational(text, allow_decimal=True)
    except Exception as exc:
        raise UsageError(str(exc)) from None


_NEGATIVE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+([eE][-+]?\d+)?|\d+\.?\d*[eE][-+]?\d+)$")


def _join_negative_values(argv):
    """``--E -4/5`` -> ``--E=-4/5``: argparse would read ``-4/5`` as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("--") and "=" not in tok and i + 1 < len(argv) and _NEGATIVE.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="springpendulum", description="Integrability analysis of the spring pendulum with a cubic spring force.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, k=True, a=True, E=False):
        if k:
            p.add_argument("--k", required=True, help="spring constant, exact 'p/q'")
        if a:
            p.add_argument("--a", default=None, help="cubic coefficient, exact 'p/q'")
        if E:
            p.add_argument("--E", default=None, help="energy, exact 'p/q'")
        p.add_argument("--out", default=None, help="report path (default: stdout)")
        p.add_argument("--format", choices=["json"], default="json")

    common(sub.add_parser("invariants", help="Weierstrass invariants and critical energies"), E=True)
    common(sub.add_parser("kimura", help="Kimura test on the confluent Riemann equations (a = 0)"), a=False)
    common(sub.add_parser("expsol", help="exponential solutions of the normal variational equation"))
    p = sub.add_parser("verdict", help="integrability verdict for (k, a)")
    common(p, E=True)
    p.add_argument("--max-order", type=int, default=2, help="HOVE order when a = -k")
    p = sub.add_parser("hove", help="higher-order variational equations at a = -k")
    common(p, E=True)
    p.add_argument("--max-order", type=int, default=2)
    p.add_argument("--terms", type=int, default=None, help="seed terms of r_1 (default 3*order + 9)")
    p = sub.add_parser("poincare", help="Poincare section at r = 1")
    p.add_argument("--k", default=FIG1["k"])
    p.add_argument("--a", default=FIG1["a"])
    p.add_argument("--E", default=FIG1["E"])
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--seeds", type=int, default=DEFAULT_GRID, help="side of the (theta, p_theta) seed grid")
    p.add_argument("--crossings", type=int, default=DEFAULT_CROSSINGS)
    p.add_argument("--both-directions", action="store_true", help="also record descending crossings")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


# ---------------------------------------------------------------- commands


def _config(args):
    """Fully resolved run configuration (defaults filled in)."""
    if args.command in ("verdict", "hove") and args.E is None:
        if args.command == "hove" or (args.a is not None and PendulumParams(_rational(args.k), _rational(args.a)).regime == "lame"):
            args.E = DEFAULT_LAME_E
    if args.command == "hove" and args.a is None:
        args.a = fmt_rational(-_rational(args.k))
    cfg = {"subcommand": args.command}
    for key, value in vars(args).items():
        if key != "command":
            cfg[key.replace("_", "-")] = value
    return cfg


def _params(args, need_a=True):
    k = _rational(args.k)
    if args.a is None:
        if need_a:
            raise UsageError("--a is required")
        return k, None
    return k, _rational(args.a)


def cmd_invariants(args):
    k, a = _params(args)
    out = {"k": fmt_rational(k), "a": fmt_rational(a), "regime": PendulumParams(k, a).regime}
    if a == 0:
        out["note"] = "a = 0: the radial energy curve is rational; no Weierstrass data"
        return out
    out["critical_energies"] = critical_energies(k, a).to_json()
    if a != -k:
        out["E0"] = fmt_rational(energy_E0(k, a))
    if args.E is not None:
        E = _rational(args.E)
        ell = invariants_from_params(PendulumParams(k, a, E))
        out.update(E=fmt_rational(E), **ell.to_json(), degenerate=ell.degenerate)
        if a == -k and not ell.degenerate:
            out["lame"] = classify_lame(2, k / 2, ell.g2, ell.g3).to_json()
    return out


def cmd_kimura(args):
    k = _rational(args.k)
    if k == 0 or k == -1:
        raise DomainError(f"k = {fmt_rational(k)}: the confluent equations are undefined")
    out = {"k": fmt_rational(k)}
    if k < -1:
        out["confluence_1"] = {"note": "exponent difference 2/sqrt(1+k) is not real", "solvable": False}
    else:
        diffs = (sqrt_rational(qq(1)), sqrt_rational(qq(4)), sqrt_rational(4 / (1 + k)))
        out["confluence_1"] = {
            "exponents": [d.to_json() for d in singular_exponents(riemann_confluence_1(k))],
            "differences": [d.to_str() for d in diffs],
            "kimura": kimura_solvable(*diffs).to_json(),
            "family_m": confluence1_witness(k),
        }
    c2 = {"family_p": confluence2_witness(k)}
    try:
        data = singular_exponents(riemann_confluence_2(k), detect_logs=False)
    except IrrationalExponentError as exc:
        c2["exponents"] = str(exc)
    else:
        diffs = [d.difference for d in data]
        c2.update(
            exponents=[d.to_json() for d in data],
            differences=[d.to_str() for d in diffs],
            kimura=kimura_solvable(*diffs).to_json(),
        )
    out["confluence_2"] = c2
    return out


def cmd_expsol(args):
    k, a = _params(args)
    params = PendulumParams(k, a)
    if params.regime == "classical":
        ode = riemann_confluence_1(k)
        label = "riemann-confluence-1"
    elif params.regime == "generic":
        ode = build_nve(params, ALGEBRAIC_E0).ode
        label = ALGEBRAIC_E0
    else:
        raise DomainError("a = -k: the normal equation is of Lame type; use the hove subcommand")
    data = singular_exponents(ode)
    search = search_exponential_solutions(ode, data)
    return {
        "k": fmt_rational(k),
        "a": fmt_rational(a),
        "equation": label,
        "ode": ode.to_json(),
        "exponents": [d.to_json() for d in data],
        **search.to_json(),
    }


def cmd_verdict(args):
    k, a = _params(args)
    params = PendulumParams(k, a)
    if params.regime == "classical":
        v = classical_verdict(k)
    elif params.regime == "generic":
        v = generic_verdict(k, a)
    else:
        E = _rational(args.E)
        v = hove_verdict(hove_obstruction(k, E, args.max_order))
    return {"k": fmt_rational(k), "a": fmt_rational(a), "regime": params.regime, **v.to_json()}


def cmd_hove(args):
    k = _rational(args.k)
    if args.a is not None and _rational(args.a) != -k:
        raise DomainError("the hove pipeline needs a = -k")
    E = _rational(args.E)
    report = hove_obstruction(k, E, args.max_order, seeds=args.terms)
    return report.to_json()


def cmd_poincare(args):
    k, a, E = _decimal(args.k), _decimal(args.a), _decimal(args.E)
    if args.tol <= 0 or args.seeds < 1 or args.crossings < 1:
        raise UsageError("--tol, --seeds and --crossings must be positive")
    params = PendulumParams(k, a)
    seeds = seed_grid(float(E), args.seeds)
    if not seeds:
        raise DomainError(f"no seed of the {args.seeds}x{args.seeds} grid lifts at E = {args.E}")
    section = poincare_section(params, float(E), seeds, args.crossings, args.tol, args.both_directions)
    meta = {
        "k": fmt_rational(k),
        "a": fmt_rational(a),
        "E": float(E),
        "seed_grid": {"theta": [-math.pi / 2, math.pi / 2], "p_theta": [-1.0, 1.0], "side": args.seeds},
        "artifact_choices": ["seed grid", "crossing count", "ascending crossings (p_r > 0)"],
        "seeds": [s.to_json() for s in seeds],
        "per_seed": [r.to_json() for r in section.results],
        **section.summary(),
    }
    if args.format == "json":
        meta["points"] = [
            {"seed_index": i, "crossing_index": j, "theta": p.theta, "p_theta": p.p_theta, "t": p.t,
             "energy_residual": p.energy_residual}
            for i, j, p in section.points()
        ]
        return meta
    buf = io.StringIO()
    write_section_csv(section, buf)
    return {"_csv": buf.getvalue(), "_meta": meta}


COMMANDS = {
    "invariants": cmd_invariants,
    "kimura": cmd_kimura,
    "expsol": cmd_expsol,
    "verdict": cmd_verdict,
    "hove": cmd_hove,
    "poincare": cmd_poincare,
}


# ---------------------------------------------------------------- output


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _emit(args, config, result, stdout):
    if "_csv" in result:
        meta = {"config": config, "defaults": DEFAULTS, **result["_meta"]}
        if args.out:
            _atomic_write(args.out + ".meta.json", _dumps(meta))
            _atomic_write(args.out, result["_csv"])
        else:
            stdout.write(result["_csv"])
        return
    report = {"config": config, "defaults": DEFAULTS, "report": result}
    if args.out:
        _atomic_write(args.out, _dumps(report))
    else:
        stdout.write(_dumps(report))


def execute(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        config = _config(args)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        parser.print_usage(stderr)
        return 1
    except DomainError as exc:
        stdout.write(_dumps(exc.to_json()))
        return 2
    _emit(args, config, result, stdout)
    return 0


def config_argv(config: dict) -> list:
    """Argument list that re-runs a report's embedded config."""
    argv = [config["subcommand"]]
    for key, value in config.items():
        if key == "subcommand" or value is None or value is False:
            continue
        if value is True:
            argv.append(f"--{key}")
        else:
            argv += [f"--{key}", str(value)]
    return argv


def main():
    sys.exit(execute())


if __name__ == "__main__":
    main()
