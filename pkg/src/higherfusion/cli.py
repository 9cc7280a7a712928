"""Command-line interface.

    higherfusion --classical 3,1 quotient
    higherfusion --rank 2 --functor "0,1" generators
    higherfusion --grid specs.json --format text koszul

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

import argparse
import json
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor

from .errors import DimensionError, InvariantViolation, StructuralError
from .groebner import buchberger, localize_artinian, quotient_algebra
from .ideal import (
    FunctorSpec,
    ideal_presentation,
    potential,
    potential_derivative_check,
)
from .koszul import antisymmetric_dimension_check, regseq2_check, truncated_koszul_cohomology
from .poly import MPoly, UPoly, upoly_eval_subst
from .symmetric import to_elem_basis
from .verlinde import compare_with_quotient

SCHEMA = 1
THREADS_ENV = "HIGHERFUSION_THREADS"


class UsageError(Exception):
    pass


def _parse_pair(text, what):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must look like 'a,b', got {text!r}") from None
    return a, b


def spec_from_options(rank=None, functor=None, classical=None):
    if (functor is None) == (classical is None):
        raise UsageError("give exactly one of --functor and --classical")
    try:
        if classical is not None:
            n, k = _parse_pair(classical, "--classical") if isinstance(classical, str) else classical
            if rank is not None and int(rank) != n:
                raise UsageError(f"--rank {rank} disagrees with --classical {n},{k}")
            return FunctorSpec.classical(n, k)
        if rank is None:
            raise UsageError("--functor needs --rank")
        try:
            F = UPoly.parse(functor) if isinstance(functor, str) else UPoly(functor)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse functor coefficients: {exc}") from None
        return FunctorSpec(int(rank), F)
    except StructuralError as exc:
        raise UsageError(str(exc)) from None


def spec_from_entry(entry):
    if not isinstance(entry, dict):
        raise UsageError(f"grid entries must be objects, got {entry!r}")
    classical = entry.get("classical")
    if isinstance(classical, list):
        classical = tuple(classical)
    functor = entry.get("functor")
    if isinstance(functor, list):
        functor = ",".join(str(x) for x in functor)
    return spec_from_options(entry.get("rank"), functor, classical)


# -- commands ---------------------------------------------------------------

def cmd_generators(spec, cfg):
    pres = ideal_presentation(spec)
    gb = buchberger(pres.generators_elem_basis, spec.rank - 1)
    result = pres.to_json()
    result["unit_ideal"] = gb.is_unit()
    return result, True


def cmd_potential(spec, cfg):
    pot = potential(spec)
    check = potential_derivative_check(spec, pot)
    result = pot.to_json()
    result["derivative_check"] = check
    return result, check["pass"]


def _functor_product_elem(spec):
    n = spec.rank
    P = MPoly.const(n, 1)
    for t in MPoly.gens(n):
        P = P * upoly_eval_subst(spec.F, t)
    return to_elem_basis(P, n, check=False).drop_last_var(1)


def cmd_quotient(spec, cfg):
    pres = ideal_presentation(spec)
    gb = buchberger(pres.generators_elem_basis, spec.rank - 1)
    result = {"groebner_basis": gb.to_json()}
    try:
        A = quotient_algebra(gb)
    except DimensionError as exc:
        result["error"] = str(exc)
        result["witness"] = exc.witness
        return result, False
    result["dimension"] = A.dimension
    result["algebra"] = A.to_json()
    result["commuting"] = A.commute_check()
    loc = localize_artinian(A, _functor_product_elem(spec)) if A.dimension else None
    result["localization"] = {
        "kernel_dimension": len(loc.kernel) if loc else 0,
        "dimension": loc.dimension if loc else 0,
    }
    return result, result["commuting"]


def cmd_verlinde(spec, cfg):
    k = spec.classical_level()
    if k is None:
        raise UsageError("verlinde needs a classical spec F(t) = (-t)^(n+k)")
    n = spec.rank
    report = compare_with_quotient(n, k)
    return report, report["match"]


def cmd_koszul(spec, cfg):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        coh = truncated_koszul_cohomology(spec, cfg.get("window"))
    result = {
        "regularity": regseq2_check(spec),
        "cohomology": coh,
        "theorem": antisymmetric_dimension_check(spec),
        "warnings": [str(w.message) for w in caught],
    }
    ok = result["regularity"]["pass"] and coh["pass"] and result["theorem"]["pass"]
    return result, ok


COMMANDS = {
    "generators": cmd_generators,
    "potential": cmd_potential,
    "quotient": cmd_quotient,
    "verlinde": cmd_verlinde,
    "koszul": cmd_koszul,
}


def run_one(command, spec, cfg):
    try:
        result, ok = COMMANDS[command](spec, cfg)
    except InvariantViolation as exc:
        result, ok = {"error": str(exc)}, False
    return {"spec": spec.to_json(), "pass": bool(ok), "result": result}


def _run_job(job):
    command, entry, cfg = job
    return run_one(command, spec_from_entry(entry), cfg)


# -- rendering --------------------------------------------------------------

def _scalar(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if x is None:
        return "-"
    return str(x)


def _is_table(value):
    return (isinstance(value, list) and value and all(isinstance(r, dict) for r in value)
            and all(list(r) == list(value[0]) for r in value)
            and all(not isinstance(v, dict) for r in value for v in r.values()))


def render_text(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if _is_table(value):
                lines.append(f"{pad}{key}:")
                lines.extend(_table(value, pad + "  "))
            elif isinstance(value, (dict, list)) and value and not _flat_list(value):
                lines.append(f"{pad}{key}:")
                lines.extend(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)) and not _flat_list(item):
                lines.append(f"{pad}-")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(pad + _scalar(obj))
    return lines


def _flat_list(value):
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) or _flat_list(v)
                                           for v in value)


def _inline(value):
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}"
    return _scalar(value)


def _table(rows, pad):
    keys = list(rows[0])
    cells = [[_inline(r[k]) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    out = [pad + "  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip()]
    for c in cells:
        out.append(pad + "  ".join(v.ljust(w) for v, w in zip(c, widths)).rstrip())
    return out


def render(doc, fmt):
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    return "\n".join(render_text(doc)) + "\n"


# -- entry point ------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="higherfusion",
                                description="Fusion ideals of SU(n) for exponential functors.")
    p.add_argument("--rank", type=int, help="rank n of SU(n)")
    p.add_argument("--functor", help='coefficients "mu0,mu1,...,mud" of F(t)')
    p.add_argument("--classical", help='"n,k": use F(t) = (-t)^(n+k)')
    p.add_argument("--grid", help="JSON file with a list of specs (batch mode)")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--degree-window", help='"lo,hi" internal degrees for koszul')
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("command", choices=sorted(COMMANDS))
    return p


def _threads():
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = {}
        if args.degree_window:
            cfg["window"] = _parse_pair(args.degree_window, "--degree-window")
        if args.grid:
            if args.functor or args.classical or args.rank is not None:
                raise UsageError("--grid cannot be combined with a single spec")
            try:
                with open(args.grid) as fh:
                    entries = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"cannot read grid file: {exc}") from None
            if not isinstance(entries, list):
                raise UsageError("grid file must hold a JSON list")
            for e in entries:
                spec_from_entry(e)  # validate before any work
            jobs = [(args.command, e, cfg) for e in entries]
            threads = _threads()
            if threads > 1 and len(jobs) > 1:
                with ProcessPoolExecutor(max_workers=threads) as pool:
                    results = list(pool.map(_run_job, jobs))
            else:
                results = [_run_job(j) for j in jobs]
            doc = {"schema": SCHEMA, "command": args.command,
                   "pass": all(r["pass"] for r in results), "results": results}
        else:
            spec = spec_from_options(args.rank, args.functor, args.classical)
            one = run_one(args.command, spec, cfg)
            doc = {"schema": SCHEMA, "command": args.command, **one}
    except UsageError as exc:
        print(f"higherfusion: error: {exc}", file=sys.stderr)
        return 2
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.verbose:
        print(f"{args.command}: {'pass' if doc['pass'] else 'FAIL'}", file=sys.stderr)
    return 0 if doc["pass"] else 1
