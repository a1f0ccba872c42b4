"""Command-line front end: `multinom <subcommand>`.

Subcommands: coeff, triangle, fib, bell, pmf, verify, oeis, bench.
Every value is printed exactly (decimal digit strings and num/den
rationals, never floats or scientific notation); in JSON output all
result values are strings so integers above 2^53 survive any parser.
Exit codes: 0 success, 1 verification or benchmark failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from fractions import Fraction

from . import backend, bell, coefficients, distribution, oeis, sequences, verify

HOT_METHODS = ("gf", "longitudinal", "demoivre")


def _stringify(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return str(value)


def _emit_json(command: str, params: dict, result) -> str:
    doc = {
        "command": command,
        "params": _stringify({k: v for k, v in params.items() if v is not None}),
        "result": _stringify(result),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _emit_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_stringify(v) for v in row])
    return buf.getvalue()


def _print(text: str) -> None:
    sys.stdout.write(text)


# ---------------------------------------------------------------- coeff


def _cmd_coeff(args) -> int:
    value = coefficients.coeff(args.q, args.L, args.a, args.method)
    params = {"q": args.q, "L": args.L, "a": args.a, "method": args.method}
    if args.format == "json":
        _print(_emit_json("coeff", params, {"value": value}))
    elif args.format == "csv":
        _print(_emit_csv(["value"], [[value]]))
    else:
        _print(f"{value}\n")
    return 0


# ------------------------------------------------------------- triangle


def _cmd_triangle(args) -> int:
    if args.rows < 1:
        raise ValueError("rows must be positive")
    table = [
        list(coefficients.row_generating_function(args.q, L))
        for L in range(args.rows)
    ]
    params = {"q": args.q, "rows": args.rows}
    if args.format == "json":
        _print(_emit_json("triangle", params, {"rows": table}))
    elif args.format == "csv":
        rows = [(L, a, v) for L, row in enumerate(table) for a, v in enumerate(row)]
        _print(_emit_csv(["L", "a", "value"], rows))
    else:
        _print("".join(" ".join(str(v) for v in row) + "\n" for row in table))
    return 0


# ------------------------------------------------------------------ fib


def _cmd_fib(args, parser) -> int:
    q, n, method = args.q, args.n, args.method
    result: dict = {}
    warning = None
    if method == "recurrence":
        result["value"] = sequences.multibonacci(q, n)
    elif method == "diagonal":
        if n < 1:
            parser.error("--method diagonal requires --n >= 1")
        result["value"] = sequences.multibonacci_diagonal(q, n)
    elif method == "composition":
        if n < 0:
            parser.error("--method composition requires --n >= 0")
        result["value"] = sequences.multibonacci_compositions(q, n)
    else:  # alternating
        if n < 1:
            parser.error("--method alternating requires --n >= 1")
        value = sequences.alternating_sum(q + 1, n)
        expected = sequences.multibonacci(q, n)
        result["value"] = value
        if value != expected:
            warning = {
                "kind": "alternating-formula-discrepancy",
                "alternating": value,
                "recurrence": expected,
                "integral": value.denominator == 1,
            }
            result["warning"] = warning
    params = {"q": q, "n": n, "method": method}
    if args.format == "json":
        _print(_emit_json("fib", params, result))
    elif args.format == "csv":
        if warning is not None:
            _print(
                _emit_csv(
                    ["value", "recurrence", "agrees"],
                    [[result["value"], warning["recurrence"], False]],
                )
            )
        else:
            _print(_emit_csv(["value"], [[result["value"]]]))
    else:
        _print(f"{result['value']}\n")
        if warning is not None:
            _print(
                f"warning: alternating sum {warning['alternating']} "
                f"!= recurrence value {warning['recurrence']}\n"
            )
    return 0


# ----------------------------------------------------------------- bell


def _parse_t_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid --t list {text!r}: {exc}") from None


def _cmd_bell(args, parser) -> int:
    n, L = args.n, args.L
    result: dict = {}
    if args.t is not None:
        t = _parse_t_list(args.t)
        result["value"] = bell.bell_partial(n, L, t)
        preset = None
    else:
        preset = args.preset
        if preset == "stirling2":
            result["value"] = bell.stirling2(n, L)
        elif preset == "stirling1":
            result["value"] = bell.stirling1_unsigned(n, L)
        elif preset == "factorial":
            result["value"] = bell.bell_factorial_full(n, L)
        elif preset.startswith("truncated:"):
            try:
                q = int(preset.split(":", 1)[1])
            except ValueError:
                parser.error(f"invalid preset {preset!r}: expected truncated:<q>")
            value = bell.bell_truncated_factorial(n, L, q)
            closed = bell.truncated_factorial_closed_form(n, L, q)
            result["value"] = value
            result["closed_form"] = closed
            result["flag"] = "agree" if value == closed else "disagree"
        else:
            parser.error(
                f"unknown preset {preset!r} (expected stirling2, stirling1, "
                "factorial, or truncated:<q>)"
            )
    params = {"n": n, "L": L, "preset": preset, "t": args.t}
    if args.format == "json":
        _print(_emit_json("bell", params, result))
    elif args.format == "csv":
        if "flag" in result:
            _print(
                _emit_csv(
                    ["value", "closed_form", "flag"],
                    [[result["value"], result["closed_form"], result["flag"]]],
                )
            )
        else:
            _print(_emit_csv(["value"], [[result["value"]]]))
    else:
        _print(f"{result['value']}\n")
        if "flag" in result:
            _print(f"closed-form {result['closed_form']}\n{result['flag']}\n")
    return 0


# ------------------------------------------------------------------ pmf


def _cmd_pmf(args, parser) -> int:
    q, L = args.q, args.L
    if args.sample is not None and args.seed is None:
        parser.error("--sample requires --seed")
    result: dict = {}
    if args.a is not None:
        result["a"] = args.a
        result["probability"] = distribution.pmf_demoivre(q, L, args.a)
    else:
        table = distribution.pmf_from_coefficients(q, L)
        result["masses"] = list(table.masses)
    if args.moments is not None:
        if args.moments < 0:
            raise ValueError("--moments must be nonnegative")
        result["moments"] = distribution.raw_moments(q, L, args.moments)
    if args.sample is not None:
        counts = distribution.sample_sums(q, L, args.sample, args.seed)
        exact = distribution.pmf_from_coefficients(q, L)
        flags = [
            distribution.within_four_sigma(c, args.sample, exact.mass(a))
            for a, c in enumerate(counts)
        ]
        result["sample"] = {
            "count": args.sample,
            "seed": args.seed,
            "counts": counts,
            "within_four_sigma": flags,
            "all_within": all(flags),
        }
    params = {
        "q": q,
        "L": L,
        "a": args.a,
        "moments": args.moments,
        "sample": args.sample,
        "seed": args.seed,
    }
    if args.format == "json":
        _print(_emit_json("pmf", params, result))
    elif args.format == "csv":
        rows = []
        if "probability" in result:
            rows.append(("mass", result["a"], result["probability"]))
        else:
            rows.extend(("mass", a, p) for a, p in enumerate(result["masses"]))
        if "moments" in result:
            rows.extend(("moment", i, u) for i, u in enumerate(result["moments"]))
        if "sample" in result:
            sample = result["sample"]
            rows.extend(("sample_count", a, c) for a, c in enumerate(sample["counts"]))
            rows.extend(
                ("within_four_sigma", a, f)
                for a, f in enumerate(sample["within_four_sigma"])
            )
        _print(_emit_csv(["kind", "key", "value"], rows))
    else:
        if "probability" in result:
            _print(f"{result['probability']}\n")
        else:
            _print(",".join(str(p) for p in result["masses"]) + "\n")
        if "moments" in result:
            for i, u in enumerate(result["moments"]):
                _print(f"moment[{i}] {u}\n")
        if "sample" in result:
            sample = result["sample"]
            for a, c in enumerate(sample["counts"]):
                flag = "yes" if sample["within_four_sigma"][a] else "NO"
                _print(f"count[{a}] {c} within-4-sigma {flag}\n")
            _print(
                "all frequencies within 4 sigma\n"
                if sample["all_within"]
                else "some frequency outside 4 sigma\n"
            )
    return 0


# --------------------------------------------------------------- verify


def _cmd_verify(args) -> int:
    results = verify.run_all(args.q_max, args.L_max, args.n_max)
    ok = all(item.ok for item in results)
    params = {"q_max": args.q_max, "L_max": args.L_max, "n_max": args.n_max}
    payload = [
        {
            "check": item.name,
            "ok": item.ok,
            "cases": item.cases,
            "failure": item.failure or "",
            "note": item.note or "",
        }
        for item in results
    ]
    if args.format == "json":
        _print(_emit_json("verify", params, {"checks": payload, "ok": ok}))
    elif args.format == "csv":
        _print(
            _emit_csv(
                ["status", "check", "cases", "detail"],
                [
                    (
                        "PASS" if item.ok else "FAIL",
                        item.name,
                        item.cases,
                        item.failure or item.note or "",
                    )
                    for item in results
                ],
            )
        )
    else:
        for item in results:
            status = "PASS" if item.ok else "FAIL"
            detail = f" at {item.failure}" if item.failure else ""
            note = f" [{item.note}]" if item.note else ""
            _print(f"{status} {item.name} ({item.cases} cases){detail}{note}\n")
        failed = sum(1 for item in results if not item.ok)
        _print("all checks passed\n" if ok else f"{failed} check(s) failed\n")
    return 0 if ok else 1


# ----------------------------------------------------------------- oeis


def _cmd_oeis(args) -> int:
    report = oeis.compare(args.id, args.rows)
    ok = all(item["match"] for item in report)
    params = {"id": args.id, "rows": args.rows}
    if args.format == "json":
        payload = [
            {
                "L": item["L"],
                "match": item["match"],
                "expected": list(item["expected"]),
                "generated": list(item["generated"]),
            }
            for item in report
        ]
        _print(_emit_json("oeis", params, {"rows": payload, "ok": ok}))
    elif args.format == "csv":
        _print(
            _emit_csv(
                ["L", "match"], [(item["L"], item["match"]) for item in report]
            )
        )
    else:
        for item in report:
            verdict = "match" if item["match"] else "MISMATCH"
            _print(f"L={item['L']} {verdict}\n")
        matched = sum(1 for item in report if item["match"])
        _print(f"{matched}/{len(report)} rows match {args.id}\n")
    return 0 if ok else 1


# ---------------------------------------------------------------- bench


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"invalid {flag} list {text!r}") from None
    if not values:
        raise ValueError(f"{flag} list is empty")
    return values


def _cmd_bench(args, parser) -> int:
    L_values = _parse_int_list(args.L, "--L")
    methods = [part.strip() for part in args.methods.split(",") if part.strip()]
    for method in methods:
        if method not in coefficients.METHODS:
            parser.error(
                f"unknown method {method!r} (expected one of "
                f"{', '.join(coefficients.METHODS)})"
            )
    if args.reps < 1:
        parser.error("--reps must be positive")
    if args.backend == "both":
        backend_names = backend.available()
        if backend_names == ("python",):
            parser.error("--backend both: compiled kernels are not available")
    elif args.backend == "auto":
        backend_names = (backend.active_name,)
    else:
        if args.backend == "c" and "c" not in backend.available():
            parser.error("--backend c: compiled kernels are not available")
        backend_names = (args.backend,)

    def plans_for(method):
        # methods without kernel loops always run the pure interpreter
        return backend_names if method in HOT_METHODS else ("python",)

    rows = []
    for L in L_values:
        outputs = {}
        for method in methods:
            for bname in plans_for(method):
                kern = backend.get(bname)
                outputs[(method, bname)] = tuple(
                    coefficients.row(args.q, L, method, kernels=kern)
                )
        reference = next(iter(outputs.values()))
        for (method, bname), out in outputs.items():
            if out != reference:
                sys.stderr.write(
                    f"bench: output mismatch at q={args.q}, L={L}: "
                    f"{method}/{bname} disagrees with {methods[0]}\n"
                )
                return 1
        for method in methods:
            for bname in plans_for(method):
                kern = backend.get(bname)
                timings = []
                for _ in range(args.reps):
                    start = time.perf_counter()
                    coefficients.row(args.q, L, method, kernels=kern)
                    timings.append(time.perf_counter() - start)
                rows.append(
                    {
                        "q": args.q,
                        "L": L,
                        "method": method,
                        "backend": bname,
                        "reps": args.reps,
                        "median_seconds": f"{statistics.median(timings):.6f}",
                    }
                )
    rows.sort(key=lambda r: (r["L"], r["method"], r["backend"]))
    params = {
        "q": args.q,
        "L": args.L,
        "methods": args.methods,
        "reps": args.reps,
        "backend": args.backend,
    }
    if args.format == "json":
        _print(_emit_json("bench", params, {"timings": rows}))
    elif args.format == "csv":
        _print(
            _emit_csv(
                ["q", "L", "method", "backend", "reps", "median_seconds"],
                [
                    (r["q"], r["L"], r["method"], r["backend"], r["reps"], r["median_seconds"])
                    for r in rows
                ],
            )
        )
    else:
        _print("q L method backend reps median_seconds\n")
        for r in rows:
            _print(
                f"{r['q']} {r['L']} {r['method']} {r['backend']} "
                f"{r['reps']} {r['median_seconds']}\n"
            )
    return 0


# ----------------------------------------------------------------- main


def _add_format(sub) -> None:
    sub.add_argument(
        "--format", choices=("table", "csv", "json"), default="table",
        help="output format (default: table)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multinom",
        description="Exact multinomial coefficients, multibonacci numbers, "
        "Bell polynomials, and discrete uniform convolution powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="one coefficient C(L, a)_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument(
        "--method", choices=coefficients.METHODS + ("auto",), default="auto"
    )
    _add_format(p)

    p = sub.add_parser("triangle", help="rows L = 0..rows-1 of the coefficient triangle")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("fib", help="multibonacci number of order q at index n")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method",
        choices=("recurrence", "diagonal", "composition", "alternating"),
        default="recurrence",
    )
    _add_format(p)

    p = sub.add_parser("bell", help="partial Bell polynomial value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--preset", help="stirling2 | stirling1 | factorial | truncated:<q>"
    )
    group.add_argument("--t", help="comma-separated t values (integers or fractions)")
    _add_format(p)

    p = sub.add_parser("pmf", help="exact law of the sum of L uniform draws on {0..q}")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--a", type=int, help="report only P(sum = a)")
    p.add_argument("--moments", type=int, help="also print raw moments up to this order")
    p.add_argument("--sample", type=int, help="draw this many seeded Monte Carlo samples")
    p.add_argument("--seed", type=int, help="64-bit sampler seed (required with --sample)")
    _add_format(p)

    p = sub.add_parser("verify", help="run the cross-method identity suite")
    p.add_argument("--q-max", type=int, default=4)
    p.add_argument("--L-max", type=int, default=10)
    p.add_argument("--n-max", type=int, default=30)
    _add_format(p)

    p = sub.add_parser("oeis", help="compare rows against embedded OEIS data")
    p.add_argument("--id", required=True, choices=oeis.sequence_ids())
    p.add_argument("--rows", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("bench", help="time row computation per method")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--L", required=True, help="comma-separated list of L values")
    p.add_argument("--methods", default="gf,longitudinal,demoivre")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument(
        "--backend", choices=("auto", "c", "python", "both"), default="auto",
        help="kernel backend to time (both = compare compiled and pure)",
    )
    _add_format(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "coeff":
            return _cmd_coeff(args)
        if args.command == "triangle":
            return _cmd_triangle(args)
        if args.command == "fib":
            return _cmd_fib(args, parser)
        if args.command == "bell":
            return _cmd_bell(args, parser)
        if args.command == "pmf":
            return _cmd_pmf(args, parser)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "oeis":
            return _cmd_oeis(args)
        if args.command == "bench":
            return _cmd_bench(args, parser)
    except ValueError as exc:
        parser.exit(2, f"error: {exc}\n")
    except ArithmeticError as exc:
        sys.stderr.write(f"internal identity violation: {exc}\n")
        return 1
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
