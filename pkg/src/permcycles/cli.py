"""Command-line front end.

Subcommands::

    count       occurrences of a pattern in one permutation
    series      brute-force generating function truncation
    cf          continued-fraction expansion of a named weight scheme
    avoid-table avoiders counted by cycles, row per length
    biject      transport an object along the growth bijections
    delta       the flatten-invert-unflatten involution
    theta       the arc-diagram lattice path of a permutation
    verify      run the named verification suite

Exit status: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import CapExceeded, ParseError
from .operators import NotInClassError, get_family, transport
from .paths import SCHEME_NAMES, WeightScheme, builtin_scheme, cf_series, parse_path, weighted_sum_series
from .patterns import count_cyclic_occurrences, count_occurrences, parse_pattern
from .permutations import CycleForm, Permutation, parse_permutation, standard_cycle_form
from .polynomials import SeriesZ, format_series
from .reference_series import REFERENCE_SERIES
from .series import avoidance_table, brute_force_series, inversion_product_series
from .verification import run_verification

FAMILY_ALIASES = {
    "dyck-peaks": "dyck_peaks",
    "dyck-returns": "dyck_returns",
    "1-2-3": "avoid_123",
    "1-3-2": "avoid_132",
    "2-1-3": "avoid_213",
    "3-1-2": "avoid_312",
}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _series_output(series: SeriesZ, as_json: bool, out: str | None) -> None:
    if as_json:
        _emit(json.dumps(series.to_json(), indent=2), out)
    else:
        _emit(format_series(series, big_oh=True), out)


def _cmd_count(args) -> int:
    value = parse_permutation(args.perm)
    pattern = parse_pattern(args.pattern)
    if isinstance(value, CycleForm):
        print(count_cyclic_occurrences(value, pattern))
    else:
        print(count_occurrences(value.images, pattern))
    return 0


def _parse_marked(args) -> list:
    if args.patterns:
        marked = []
        for chunk in args.patterns.split(","):
            text, _, mark = chunk.partition(":")
            marked.append((parse_pattern(text.strip()), (mark or "q").strip()))
        return marked
    return [(parse_pattern(args.pattern), args.mark)]


def _cmd_series(args) -> int:
    marked = _parse_marked(args)
    series = brute_force_series(marked, args.n, cap=args.cap)
    _series_output(series, args.json, args.out)
    return 0


def _cmd_cf(args) -> int:
    scheme = builtin_scheme(args.scheme)
    series = cf_series(scheme, args.n)
    _series_output(series, args.json, args.out)
    if args.oracle:
        if isinstance(scheme, WeightScheme):
            oracle = weighted_sum_series(scheme, args.n)
            oracle_name = "weighted path enumeration"
        elif args.scheme == "inv_euler":
            oracle = inversion_product_series(args.n)
            oracle_name = "q-number product formula"
        else:
            oracle = brute_force_series(parse_pattern("2-13"), args.n, cap=args.cap)
            oracle_name = "brute-force 2-13 series"
        if series == oracle:
            print(f"oracle check: matches {oracle_name} to z^{args.n}")
        else:
            print(f"oracle check: MISMATCH against {oracle_name}", file=sys.stderr)
            return 1
    return 0


def _cmd_avoid_table(args) -> int:
    pattern = parse_pattern(args.pattern)
    table = avoidance_table(pattern, args.n, cap=args.cap)
    if args.json:
        _emit(json.dumps({str(n): list(row) for n, row in table.items()}, indent=2), args.out)
    else:
        lines = [f"avoiders of {pattern} by cycle count (m = 1..n)"]
        for n, row in table.items():
            lines.append(f"n={n}: " + " ".join(str(c) for c in row))
        _emit("\n".join(lines), args.out)
    return 0


def _resolve_family(text: str, other: str | None) -> str:
    key = text.strip().lower()
    if key in FAMILY_ALIASES:
        return FAMILY_ALIASES[key]
    if key in ("dyck", "path"):
        other_key = other.strip().lower() if other else None
        if other_key is None or other_key in ("dyck", "path"):
            raise ParseError("ambiguous family 'dyck'; use dyck-peaks or dyck-returns")
        sibling = FAMILY_ALIASES.get(other_key, other_key)
        triple = get_family(sibling).statistic_name
        return "dyck_peaks" if triple == "peaks" else "dyck_returns"
    if key in ("dyck_peaks", "dyck_returns", "avoid_123", "avoid_132", "avoid_213", "avoid_312"):
        return key
    raise ParseError(f"unknown bijection family {text!r}")


def _cmd_biject(args) -> int:
    from .operators import operator_sequence

    source = _resolve_family(args.from_family, args.to_family)
    target = _resolve_family(args.to_family, args.from_family)
    family = get_family(source)
    if family.domain == "path":
        obj = parse_path(args.input)
    else:
        parsed = parse_permutation(args.input)
        obj = parsed if isinstance(parsed, CycleForm) else standard_cycle_form(parsed)
    image = transport(obj, source, target)
    print(image)
    if args.show_sequence:
        print("sequence:", ",".join(str(i) for i in operator_sequence(source, obj)))
    return 0


def _as_cycle_form(text: str) -> CycleForm:
    parsed = parse_permutation(text)
    return parsed if isinstance(parsed, CycleForm) else standard_cycle_form(parsed)


def _cmd_delta(args) -> int:
    from .operators import flattened_inverse

    print(flattened_inverse(_as_cycle_form(args.perm)))
    return 0


def _cmd_theta(args) -> int:
    from .paths import arc_path

    print(arc_path(_as_cycle_form(args.perm)))
    return 0


def _cmd_verify(args) -> int:
    results = run_verification(args.suite, args.n_max)
    if args.json:
        payload = [
            {"name": r.name, "tier": r.tier, "passed": r.passed, "detail": r.detail}
            for r in results
        ]
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [r.line() for r in results]
        failures = sum(1 for r in results if r.failed)
        theorems = sum(1 for r in results if r.tier == "theorem")
        lines.append(f"-- {theorems} theorem checks, {failures} failed")
        _emit("\n".join(lines), args.out)
    return 1 if any(r.failed for r in results) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcycles",
        description="Exact pattern statistics of permutations in standard cycle form.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count pattern occurrences in one permutation")
    p_count.add_argument("--perm", required=True, help="one-line word or cycle form '(275368)(14)'")
    p_count.add_argument("--pattern", required=True, help="pattern text, e.g. '2-1' or \"2-1-2'\"")
    p_count.set_defaults(func=_cmd_count)

    p_series = sub.add_parser("series", help="brute-force generating function")
    group = p_series.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern", help="single pattern")
    group.add_argument("--patterns", help="comma list 'pat:mark,...', marks p or q")
    p_series.add_argument("--mark", default="q", choices=("p", "q"))
    p_series.add_argument("--n", type=int, required=True, help="truncation order")
    p_series.add_argument("--cap", type=int, default=10)
    p_series.add_argument("--json", action="store_true")
    p_series.add_argument("--out", help="write output to a file")
    p_series.set_defaults(func=_cmd_series)

    p_cf = sub.add_parser("cf", help="continued-fraction expansion of a named scheme")
    p_cf.add_argument("--scheme", required=True, choices=SCHEME_NAMES)
    p_cf.add_argument("--n", type=int, required=True)
    p_cf.add_argument("--oracle", action="store_true", help="cross-check against the scheme's oracle")
    p_cf.add_argument("--cap", type=int, default=10)
    p_cf.add_argument("--json", action="store_true")
    p_cf.add_argument("--out")
    p_cf.set_defaults(func=_cmd_cf)

    p_table = sub.add_parser("avoid-table", help="avoiders counted by cycles")
    p_table.add_argument("--pattern", required=True)
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--cap", type=int, default=10)
    p_table.add_argument("--json", action="store_true")
    p_table.add_argument("--out")
    p_table.set_defaults(func=_cmd_avoid_table)

    p_biject = sub.add_parser("biject", help="transport along the growth bijections")
    p_biject.add_argument("--from", dest="from_family", required=True,
                          help="dyck, dyck-peaks, dyck-returns, 1-2-3, 1-3-2, 2-1-3, 3-1-2")
    p_biject.add_argument("--to", dest="to_family", required=True)
    p_biject.add_argument("--input", required=True, help="path word (NNSS/UUDD) or permutation")
    p_biject.add_argument("--show-sequence", action="store_true",
                          help="also print the shared operator index sequence")
    p_biject.set_defaults(func=_cmd_biject)

    p_delta = sub.add_parser("delta", help="flatten-invert-unflatten involution")
    p_delta.add_argument("--perm", required=True)
    p_delta.set_defaults(func=_cmd_delta)

    p_theta = sub.add_parser("theta", help="arc-diagram lattice path of a permutation")
    p_theta.add_argument("--perm", required=True)
    p_theta.set_defaults(func=_cmd_theta)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--suite", default="all", choices=("all", "theorems", "conjectures"))
    p_verify.add_argument("--n-max", type=int, default=None, help="lower all check depths to this")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, NotInClassError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
