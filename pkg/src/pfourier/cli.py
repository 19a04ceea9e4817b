"""Command-line front end: every subcommand prints one JSON report.

Exit status is 0 on success, 2 when a verification fails, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

import numpy as np

from . import anf, approx, depth2, fourier, nmqc, periodic
from ._transforms import int_vector
from .core import BooleanFunction, FunctionSpecError, is_symmetric, parse_function_spec
from .dyadic import Dyadic

EXIT_OK, EXIT_ERROR, EXIT_FAILED = 0, 1, 2

METHODS = ("fourier", "anf", "mod4", "and-combine", "xor-combine", "recipe")


class CliError(Exception):
    pass


def _jsonable(obj):
    if isinstance(obj, Dyadic):
        return obj.to_dict()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, set):
        return sorted(obj)
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        return float(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise CliError(f"cannot read {path}: {e}") from e


def _need_fn(args) -> BooleanFunction:
    if not args.fn:
        raise CliError("--fn is required")
    return parse_function_spec(args.fn)


def _bits(text: str, n: int) -> list[int]:
    text = text.replace(",", "").strip()
    if len(text) != n or any(c not in "01" for c in text):
        raise CliError(f"--input must be {n} characters of 0/1")
    return [int(c) for c in text]


# -- construction helpers ----------------------------------------------------

def _mod4_coeffs(f: BooleanFunction) -> dict[int, int]:
    """Integer coefficients whose weight-bit-1 is ``f``.

    Uses the Hamming weight when that already works (the CQ family);
    otherwise doubles the integer-valued multilinear expansion of ``f``.
    """
    weight = {1 << i: 1 for i in range(f.n)}
    if periodic.mod4_function(f.n, weight) == f:
        return weight
    # integer Moebius: a_S = sum_{T ⊆ S} (-1)^{|S - T|} f(T)
    a = int_vector([int(v) for v in f.table], f.n).astype(object)
    h = 1
    while h < a.size:
        for i in range(0, a.size, 2 * h):
            a[i + h:i + 2 * h] = a[i + h:i + 2 * h] - a[i:i + h]
        h *= 2
    return {m: (2 * int(v)) % 4 for m, v in enumerate(a) if (2 * int(v)) % 4}


def _recipe(f: BooleanFunction, spec: str, raw: bool = False) -> periodic.PeriodicRepresentation:
    name = spec.split(":", 1)[0].lower()
    if name == "cq":
        return periodic.cq_recipe(f.n, raw=raw)
    if name == "c3" and f.n >= 1:
        return periodic.c3_recipe(f.n)
    if name == "xor":
        return periodic.parity_rep(f.n, (1 << f.n) - 1)
    raise CliError(f"no named recipe for {name!r}; recipes exist for cq, c3, xor")


def _part_rep(spec: str) -> periodic.PeriodicRepresentation:
    g = parse_function_spec(spec)
    try:
        return _recipe(g, spec, raw=True)
    except CliError:
        return periodic.from_fourier(g)


def _construct(args, f: BooleanFunction | None) -> tuple[periodic.PeriodicRepresentation, BooleanFunction]:
    method = args.method
    if method in ("and-combine", "xor-combine"):
        reps = [_part_rep(s) for s in args.part or []]
        reps += [periodic.PeriodicRepresentation.from_dict(_load_json(p)) for p in args.rep or []]
        if len(reps) < 1:
            raise CliError(f"{method} needs --part specs or --rep files")
        combine = periodic.and_combine if method == "and-combine" else periodic.xor_combine
        rep = combine(reps)
        return rep, f if f is not None else periodic.represented_function(rep)
    if f is None:
        raise CliError("--fn is required")
    if method == "fourier":
        return periodic.from_fourier(f), f
    if method == "anf":
        return periodic.from_anf(f), f
    if method == "mod4":
        return periodic.from_mod4(f.n, _mod4_coeffs(f)), f
    if method == "recipe":
        return _recipe(f, args.fn), f
    raise CliError(f"unknown method {method!r}")


# -- subcommands ----------------------------------------------------------------

def cmd_analyze(args) -> tuple[dict, int]:
    f = _need_fn(args)
    spec = fourier.wht(f)
    sparsity, nonempty, degree = fourier.stats(spec)
    poly = anf.moebius(f)
    prof = is_symmetric(f)
    out = {
        "n": f.n,
        "truth_table_hex": f.to_hex(),
        "symmetric_accept": sorted(prof.accept) if prof is not None else None,
        "anf": str(poly),
        "deg_f2": poly.degree,
        "fourier": {"sparsity": sparsity, "nonempty_sparsity": nonempty,
                    "degree": degree, "dimension": fourier.dimension(spec),
                    "spectrum": spec.to_list()},
    }
    if not f.is_constant():
        out["lower_bounds"] = periodic.lower_bounds(f)
        out["lower_bound"] = periodic.lower_bound(f)
    return out, EXIT_OK


def cmd_construct(args) -> tuple[dict, int]:
    f = parse_function_spec(args.fn) if args.fn else None
    rep, target = _construct(args, f)
    report = periodic.verify(rep, target)
    out = {"method": args.method, "representation": rep.to_dict(), "pretty": str(rep),
           "sparsity": report.sparsity, "digits": report.digits,
           "verified": report.ok, "verification": report.to_dict()}
    return out, EXIT_OK if report.ok else EXIT_FAILED


def cmd_verify(args) -> tuple[dict, int]:
    f = _need_fn(args)
    if not args.rep:
        raise CliError("--rep is required")
    rep = periodic.PeriodicRepresentation.from_dict(_load_json(args.rep[0]))
    report = periodic.verify(rep, f)
    return {"verified": report.ok, "verification": report.to_dict()}, EXIT_OK if report.ok else EXIT_FAILED


def cmd_bounds(args) -> tuple[dict, int]:
    f = _need_fn(args)
    if f.is_constant():
        return {"lower_bound": 0, "lower_bounds": {}, "note": "constant function"}, EXIT_OK
    bounds = periodic.lower_bounds(f)
    upper = periodic.from_fourier(f).sparsity
    return {"lower_bounds": bounds, "lower_bound": max(bounds.values()),
            "upper_bound_fourier": upper, "pinned": upper == max(bounds.values())}, EXIT_OK


def cmd_oracle(args) -> tuple[dict, int]:
    f = _need_fn(args)
    budget = None if args.budget_ms is None else args.budget_ms / 1000.0
    try:
        res = periodic.brute_force_pfs(f, s_max=args.smax, time_budget=budget)
    except periodic.SearchBudgetExceeded as e:
        return {"status": "budget_exceeded", "searched_up_to": e.searched_up_to}, EXIT_FAILED
    if res is None:
        return {"status": "not_found", "smax": args.smax}, EXIT_FAILED
    pfs, rep = res
    return {"status": "found", "pfs": pfs, "witness": rep.to_dict(), "pretty": str(rep),
            "verified": periodic.verify(rep, f).ok}, EXIT_OK


def _game_for(args):
    if args.game:
        return nmqc.XorGame.from_dict(_load_json(args.game)), None
    if args.promise:
        k, n = (int(v) for v in args.promise.split(":"))
        return nmqc.promise_mod_game(k, n)
    return nmqc.game_from_function(_need_fn(args)), None


def cmd_nmqc_bias(args) -> tuple[dict, int]:
    game, phases = _game_for(args)
    cfg = nmqc.OptimizerConfig(restarts=args.restarts, tol=args.tol, seed=args.seed)
    best_ph, best = nmqc.optimize_bias(game, cfg)
    classical = nmqc.classical_bias(game) if game.k <= 20 else None
    out = {"k": game.k, "quantum_bias": best, "phases": [float(p) for p in best_ph],
           "classical_bias": classical}
    if phases is not None:
        out["representation_phases"] = [p if isinstance(p, Dyadic) else float(p) for p in phases]
        out["representation_bias"] = nmqc.quantum_bias(game, phases)
    return out, EXIT_OK


def cmd_depth2_sim(args) -> tuple[dict, int]:
    f = _need_fn(args)
    proto = depth2.build_for(f)
    out = {"n": f.n, "blocks": [b.offset for b in proto.blocks],
           "complemented": proto.complemented, "qubits": depth2.qubit_count(proto),
           "qubits_per_block": depth2.block_qubits(f.n)}
    if args.input:
        xs = [_bits(args.input, f.n)]
    else:
        xs = [[(m >> i) & 1 for i in range(f.n)] for m in range(1 << f.n)]
    verdicts, witness = [], None
    for bits in xs:
        _, outputs = depth2.simulate_support(proto, bits)
        want = int(f(bits))
        ok = outputs == {want}
        verdicts.append({"input": "".join(map(str, bits)), "outputs": sorted(outputs),
                         "expected": want, "ok": ok})
        if not ok and witness is None:
            witness = bits
    ok = witness is None
    out["verdicts"] = verdicts
    out["verification"] = {"ok": ok, "witness": witness, "sparsity": None, "digits": None,
                           "reason": "" if ok else "output set differs from f"}
    return out, EXIT_OK if ok else EXIT_FAILED


def cmd_identity_check(args) -> tuple[dict, int]:
    which = args.which
    ok = nmqc.check_distributive_identity(which, args.n, args.m)
    return {"identity": which, "n": args.n, "m": args.m, "holds": ok}, EXIT_OK if ok else EXIT_FAILED


def cmd_approx_check(args) -> tuple[dict, int]:
    f = _need_fn(args)
    if args.family:
        fam = approx.RandomizedPhaseFamily.from_dict(_load_json(args.family))
    elif args.rep:
        fam = approx.RandomizedPhaseFamily.single(
            periodic.PeriodicRepresentation.from_dict(_load_json(args.rep[0])))
    else:
        raise CliError("--family or --rep is required")
    errs = np.abs(f.signs() - approx.expected_values(fam))
    out = {"max_error": float(errs.max()), "mean_error": float(errs.mean()), "eps": args.eps}
    ok = approx.check_pointwise_error(fam, f, args.eps)
    out["pointwise_ok"] = ok
    if all(isinstance(c, Dyadic) for _, phi in fam.atoms for c in phi.values()):
        pp = approx.theorem3_polynomial(fam)
        out["polynomial_degree"] = pp.degree
        out["polynomial_error"] = approx.polynomial_error(pp, f)
    return out, EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    "analyze": cmd_analyze,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
    "nmqc-bias": cmd_nmqc_bias,
    "depth2-sim": cmd_depth2_sim,
    "identity-check": cmd_identity_check,
    "approx-check": cmd_approx_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fn", help="function spec, e.g. maj:3, mod:3:4, tt:2:8")
    common.add_argument("--pretty", action="store_true", help="indent the JSON report")
    common.add_argument("--timing", action="store_true", help="include wall time (breaks byte stability)")

    p = argparse.ArgumentParser(prog="pfourier", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common])
    c = sub.add_parser("construct", parents=[common])
    c.add_argument("--method", choices=METHODS, default="fourier")
    c.add_argument("--part", action="append", help="function spec to combine (repeatable)")
    c.add_argument("--rep", action="append", help="representation JSON to combine (repeatable)")
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("--rep", action="append")
    sub.add_parser("bounds", parents=[common])
    o = sub.add_parser("oracle", parents=[common])
    o.add_argument("--smax", type=int)
    o.add_argument("--budget-ms", type=int)
    b = sub.add_parser("nmqc-bias", parents=[common])
    b.add_argument("--game", help="game JSON file")
    b.add_argument("--promise", help="K:N promise game")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--restarts", type=int, default=32)
    b.add_argument("--tol", type=float, default=1e-12)
    d = sub.add_parser("depth2-sim", parents=[common])
    d.add_argument("--input", help="input bits, x1 first")
    i = sub.add_parser("identity-check", parents=[common])
    i.add_argument("--which", choices=("and2", "maj3", "cqm"), required=True)
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--m", type=int)
    a = sub.add_parser("approx-check", parents=[common])
    a.add_argument("--family", help="family JSON file")
    a.add_argument("--rep", action="append")
    a.add_argument("--eps", type=float, default=0.0)
    return p


def run(argv: Sequence[str] | None = None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    report: dict = {"command": args.command, "fn": args.fn}
    try:
        results, code = COMMANDS[args.command](args)
        report["results"] = results
    except FunctionSpecError as e:
        report["error"] = {"message": str(e), "position": e.pos}
        code = EXIT_ERROR
    except (CliError, ValueError, periodic.NotARepresentation) as e:
        report["error"] = {"message": str(e)}
        code = EXIT_ERROR
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 6)
    report["exit_code"] = code
    return report, code


def main(argv: Sequence[str] | None = None) -> int:
    args = sys.argv[1:] if argv is None else list(argv)
    report, code = run(args)
    pretty = "--pretty" in args
    print(json.dumps(report, default=_jsonable, indent=2 if pretty else None, sort_keys=pretty))
    return code


if __name__ == "__main__":
    sys.exit(main())
