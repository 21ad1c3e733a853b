"""Command-line surface with JSON output.

Every invocation prints one CommandResult object: command echo, the
mathematical parameters of the query, a status, the payload, and elapsed
wall time in milliseconds. Execution knobs (worker count, output format,
timing suppression) are not part of the result identity and are not
echoed, so runs that differ only in those knobs produce identical JSON.

Exit codes: 0 ok, 2 usage or validation, 3 capacity, 4 arithmetic
overflow. All numbers in the payload are exact integers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .abelian import GroupSpec, IntegerWindow
from .enumeration import (
    DEFAULT_BUDGET,
    SearchConfig,
    classify_cyclic,
    enumerate_multiplications,
    expand_to_full_table,
    full_table_oracle,
    rigidity_report,
)
from .errors import CapacityError, IntegerOverflowError, UsageError
from .matrices import (
    HADAMARD,
    STANDARD,
    mat_mul_standard,
    noncommutativity_witness,
    sample_axioms,
    unit_matrix,
)
from .scaled import (
    check_scaled_unitality,
    find_pm1_violation,
    find_unit_windowed,
    make_scaled,
    scaled_identity_suite,
    scaled_unit_sweep,
    unit_of_scaled,
    usual_cyclic_ring,
)

BUDGET_ENV_VAR = "RIGIDITY_BUDGET"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_OVERFLOW = 4


def _resolve_budget(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(
                f"{BUDGET_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_BUDGET


def _group_json(spec: GroupSpec) -> dict:
    return {
        "moduli": list(spec.moduli),
        "order": spec.order,
        "cyclic": spec.is_cyclic,
    }


def _run_enumerate(args) -> tuple[dict, dict]:
    spec = GroupSpec.parse(args.group)
    config = SearchConfig(
        workers=args.workers, budget=_resolve_budget(args.budget)
    )
    report = rigidity_report(spec, config)
    payload = {
        "group": _group_json(spec),
        "total": report.total,
        "commutative": report.commutative_count,
        "unital": report.unital_count,
        "unital_scales": (
            list(report.unital_scales) if report.unital_scales is not None else None
        ),
        "scaled_form_all": report.scaled_form_all,
        "search_space": report.search_space,
        "unital_examples": [
            {
                "table": [
                    [list(entry.coords) for entry in row]
                    for row in ring.mult.table
                ],
                "unit": list(ring.unit.coords),
            }
            for ring in report.unital_examples
        ],
    }
    return {"group": args.group}, payload


def _run_classify(args) -> tuple[dict, dict]:
    modulus = args.modulus
    config = SearchConfig(budget=_resolve_budget(None))
    entries = classify_cyclic(modulus, config)
    payload = {
        "modulus": modulus,
        "candidates": [
            {
                "scale": e.scale,
                "unital": e.unital,
                "unit": e.unit,
                "is_minus_one": e.is_minus_one,
            }
            for e in entries
        ],
        "unital_scales": [e.scale for e in entries if e.unital],
    }
    if modulus <= config.full_table_cap:
        oracle = full_table_oracle(modulus, config.full_table_cap)
        expanded = frozenset(
            expand_to_full_table(ring.mult)
            for ring in enumerate_multiplications(GroupSpec((modulus,)), config)
        )
        payload["oracle"] = "agree" if oracle == expanded else "disagree"
    return {"modulus": modulus}, payload


def _run_verify_scaled(args) -> tuple[dict, dict]:
    a = args.a
    window = IntegerWindow(args.bound)
    suite = scaled_identity_suite(a, args.bound, samples=args.samples)
    scanned = find_unit_windowed(make_scaled(a), window)
    closed = unit_of_scaled(a)
    note = {1: "usual ring", -1: "alternate ring"}.get(a)
    payload = {
        "scale": a,
        "bound": args.bound,
        "samples": suite.samples,
        "identities_ok": suite.ok,
        "failure": suite.failure,
        "unit": scanned,
        "closed_form_unit": closed,
        "unit_scan_agrees": scanned == closed,
        "note": note,
        "passed": suite.ok and scanned == closed,
    }
    params = {"a": a, "bound": args.bound, "samples": args.samples}
    return params, payload


def _run_matrix_demo(args) -> tuple[dict, dict]:
    n, modulus = args.n, args.mod
    units = {
        STANDARD: unit_matrix(STANDARD, n, modulus).to_lists(),
        HADAMARD: unit_matrix(HADAMARD, n, modulus).to_lists(),
    }
    witness = noncommutativity_witness(n, modulus)
    witness_json = None
    if witness is not None:
        a, b = witness
        witness_json = {
            "a": a.to_lists(),
            "b": b.to_lists(),
            "ab": mat_mul_standard(a, b).to_lists(),
            "ba": mat_mul_standard(b, a).to_lists(),
        }
    payload = {
        "n": n,
        "modulus": modulus,
        "units": units,
        "noncommutativity_witness": witness_json,
        "axiom_checks": {
            STANDARD: sample_axioms(STANDARD, n, modulus),
            HADAMARD: sample_axioms(HADAMARD, n, modulus),
        },
        "note": "modes coincide at n=1" if n == 1 else None,
    }
    return {"n": n, "mod": modulus}, payload


def _run_scaled_units(args) -> tuple[dict, dict]:
    modulus = args.modulus
    ring = usual_cyclic_ring(modulus)
    violation = find_pm1_violation(ring)
    if violation is None:
        entries = check_scaled_unitality(ring)
    else:
        entries = scaled_unit_sweep(ring)
    pm_one_scales = sorted({1 % modulus, (modulus - 1) % modulus})
    unital_scales = [
        e.scale.coords[0] for e in entries if e.unit is not None
    ]
    payload = {
        "modulus": modulus,
        "pm1_only_units": violation is None,
        "violation": (
            None
            if violation is None
            else {"a": violation[0].coords[0], "u": violation[1].coords[0]}
        ),
        "pm_one_scales": pm_one_scales,
        "entries": [
            {
                "scale": e.scale.coords[0],
                "unital": e.unit is not None,
                "unit": e.unit.coords[0] if e.unit is not None else None,
                "is_minus_one": e.scale.coords[0] == modulus - 1,
            }
            for e in entries
        ],
        "unital_scales": unital_scales,
        "departures": sorted(set(unital_scales) - set(pm_one_scales)),
        "matches_pm1_rule": unital_scales == pm_one_scales,
    }
    return {"modulus": modulus}, payload


_HANDLERS = {
    "enumerate": _run_enumerate,
    "classify": _run_classify,
    "verify-scaled": _run_verify_scaled,
    "matrix-demo": _run_matrix_demo,
    "scaled-units": _run_scaled_units,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringrigidity",
        description=(
            "Census of ring multiplications compatible with a fixed abelian "
            "addition"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument(
            "--json", dest="as_json", action="store_true", default=True,
            help="emit the result as JSON (default)",
        )
        fmt.add_argument(
            "--text", dest="as_json", action="store_false",
            help="emit a human-readable summary instead of JSON",
        )
        p.add_argument(
            "--no-timing", action="store_true",
            help="report elapsed_ms as 0, for reproducible output",
        )

    p = sub.add_parser("enumerate", help="census of ring multiplications on a group")
    p.add_argument("--group", required=True, help="comma-separated moduli, e.g. 2,2,3")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=None,
                   help=f"candidate budget (default {DEFAULT_BUDGET}, "
                        f"or ${BUDGET_ENV_VAR})")
    common(p)

    p = sub.add_parser("classify", help="per-scale classification on Z/N")
    p.add_argument("--modulus", type=int, required=True)
    common(p)

    p = sub.add_parser("verify-scaled", help="ring identities and unit of a*n*m")
    p.add_argument("--a", type=int, required=True, help="the scale factor")
    p.add_argument("--bound", type=int, required=True, help="window half-width")
    p.add_argument("--samples", type=int, default=10_000)
    common(p)

    p = sub.add_parser("matrix-demo", help="two ring structures on one matrix group")
    p.add_argument("--n", type=int, required=True, help="matrix dimension")
    p.add_argument("--mod", type=int, required=True, help="entry modulus")
    common(p)

    p = sub.add_parser("scaled-units", help="unitality of scaled rings over Z/N")
    p.add_argument("--modulus", type=int, required=True)
    common(p)

    return parser


def _render_text(result: dict) -> str:
    lines = [f"command: {result['command']}", f"status: {result['status']}"]
    for key, value in sorted(result["params"].items()):
        lines.append(f"  {key} = {value}")
    lines.append(json.dumps(result["payload"], indent=2, sort_keys=True))
    lines.append(f"elapsed_ms: {result['elapsed_ms']}")
    return "\n".join(lines)


def run(argv=None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    status, code = "ok", EXIT_OK
    try:
        params, payload = _HANDLERS[args.command](args)
    except UsageError as exc:
        params, payload = {}, {"message": str(exc)}
        status, code = "error", EXIT_USAGE
    except CapacityError as exc:
        params, payload = {}, {"message": str(exc)}
        status, code = "error", EXIT_CAPACITY
    except IntegerOverflowError as exc:
        params, payload = {}, {"message": str(exc)}
        status, code = "error", EXIT_OVERFLOW
    elapsed_ms = 0 if args.no_timing else int((time.perf_counter() - start) * 1000)
    result = {
        "command": args.command,
        "params": params,
        "status": status,
        "payload": payload,
        "elapsed_ms": elapsed_ms,
    }
    if args.as_json:
        print(json.dumps(result, indent=2, sort_keys=True), file=out)
    else:
        print(_render_text(result), file=out)
    return code


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
