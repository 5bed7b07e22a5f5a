"""Command-line front door.

Data goes to standard output, diagnostics to the error stream, so the
tool is scriptable.  Exit codes: 0 success (and, for ``check``, the
property holds); 1 the checked property fails; 2 usage or input error;
3 internal invariant violation (always a bug).  JSON output is
deterministic: fixed key order, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arf, decomp, verify
from .errors import InputError, InternalError, NotArf
from .semigroup import NumericalSemigroup, enumerate_semigroups

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

DEFAULT_MAX_BOUND = 10**6


def _parse_int_list(text: str, what: str) -> list[int]:
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    if not items:
        raise InputError(f"empty {what} list")
    try:
        return [int(piece) for piece in items]
    except ValueError as exc:
        raise InputError(f"malformed {what} list {text!r}: {exc}") from exc


def _semigroup_from_args(args) -> NumericalSemigroup:
    if args.generators is not None and args.mult_seq is not None:
        raise InputError("give either generators or --mult-seq, not both")
    if args.mult_seq is not None:
        entries = _parse_int_list(args.mult_seq, "multiplicity sequence")
        return arf.from_multiplicity_sequence(entries)
    if args.generators is None:
        raise InputError("a semigroup is required: pass generators or --mult-seq")
    gens = _parse_int_list(args.generators, "generator")
    return NumericalSemigroup.from_generators(gens, max_window=args.max_bound)


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arfkit",
        description="Exact computations with Arf numerical semigroups: "
        "property checks, closures, blow-up towers, and decomposition of "
        "integrally closed ideals into products of maximal ideals.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(sp, semigroup_required=True):
        sp.add_argument(
            "generators",
            nargs=None if semigroup_required else "?",
            default=None,
            help="comma-separated positive integers generating the semigroup",
        )
        sp.add_argument("--mult-seq", help="comma-separated multiplicity sequence instead of generators")
        sp.add_argument("--json", action="store_true", help="emit JSON on standard output")
        sp.add_argument(
            "--max-bound",
            type=int,
            default=DEFAULT_MAX_BOUND,
            help="reject generator inputs whose membership scan window exceeds this cap",
        )

    sp = sub.add_parser("check", help="test the Arf property with both criteria")
    common(sp, semigroup_required=False)

    sp = sub.add_parser("closure", help="smallest Arf semigroup containing the input")
    common(sp, semigroup_required=False)

    sp = sub.add_parser("tower", help="blow-up tower and multiplicity sequence (Arf input)")
    common(sp, semigroup_required=False)

    sp = sub.add_parser("decompose", help="decompose the integrally closed ideal at a value")
    common(sp, semigroup_required=False)
    sp.add_argument("--value", type=int, required=True, help="minimum value of the ideal")

    sp = sub.add_parser("enumerate", help="integrally closed ideals not shared with the valuation ring")
    common(sp, semigroup_required=False)

    sp = sub.add_parser("stats", help="basic invariants of the semigroup")
    common(sp, semigroup_required=False)

    sp = sub.add_parser("verify", help="run the property battery")
    common(sp, semigroup_required=False)
    sp.add_argument(
        "--exhaustive-conductor",
        type=int,
        metavar="C",
        help="sweep every numerical semigroup with conductor <= C instead of one semigroup",
    )
    sp.add_argument("--seed", type=int, default=0, help="seed for the sampled oracle comparisons")

    return parser


def _cmd_check(args) -> int:
    sg = _semigroup_from_args(args)
    ok_s, wit_s = arf.is_arf_stability(sg)
    ok_p, wit_p = arf.is_arf_pattern(sg)
    if ok_s != ok_p:
        raise InternalError(f"Arf criteria disagree on {sg}: stability {ok_s}, pattern {ok_p}")
    if args.json:
        payload = {
            "semigroup": sg.to_json_dict(),
            "arf": ok_p,
            "witness": wit_p.to_json_dict() if wit_p else None,
            "stability_witness": wit_s.to_json_dict() if wit_s else None,
        }
        _emit(payload)
    elif ok_p:
        print(f"{sg} is an Arf semigroup")
    else:
        print(f"{sg} is not Arf; witness {wit_p.describe()}")
    return EXIT_OK if ok_p else EXIT_PROPERTY_FAILS


def _cmd_closure(args) -> int:
    sg = _semigroup_from_args(args)
    closed = arf.arf_closure(sg)
    if args.json:
        _emit(closed.to_json_dict())
    else:
        suffix = " (already Arf)" if closed == sg else ""
        print(f"arf closure of {sg}: {closed}{suffix}")
    return EXIT_OK


def _cmd_tower(args) -> int:
    sg = _semigroup_from_args(args)
    chain, seq = arf.lipman_tower(sg)
    if args.json:
        _emit(
            {
                "tower": [level.to_json_dict() for level in chain],
                "multiplicity_sequence": seq.to_json_list(),
            }
        )
    else:
        for i, level in enumerate(chain):
            print(f"level {i}: {level}")
        print("multiplicity sequence: " + ",".join(map(str, seq.entries)))
    return EXIT_OK


def _cmd_decompose(args) -> int:
    sg = _semigroup_from_args(args)
    result = decomp.decompose(sg, args.value)
    if args.json:
        _emit(result.to_json_dict())
    else:
        print(f"ideal at value {result.a} over {sg}: q = {result.q}")
        for i, factor in enumerate(result.factors):
            print(f"factor {i}: maximal ideal of {factor.ambient} = {factor!r}")
        print(f"endpoint ring: {result.endpoint_ring}")
        print(f"verified: {'yes' if result.verified else 'NO'}")
    if not result.verified:
        raise InternalError("decomposition failed to re-multiply to the input ideal")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    sg = _semigroup_from_args(args)
    ideals = decomp.enumerate_non_normal_ideals(sg)
    if args.json:
        _emit({"semigroup": sg.to_json_dict(), "ideals": [i.to_json_dict() for i in ideals]})
    else:
        print(f"{len(ideals)} integrally closed ideals of {sg} are not valuation-ring ideals")
        for ideal in ideals:
            label = "unit ideal" if ideal.min_value == 0 else repr(ideal)
            print(f"a={ideal.min_value}: {label}")
    return EXIT_OK


def _cmd_stats(args) -> int:
    sg = _semigroup_from_args(args)
    stats = sg.stats()
    if args.json:
        _emit(
            {
                "semigroup": sg.to_json_dict(),
                "multiplicity": stats.multiplicity,
                "conductor": stats.conductor,
                "frobenius": stats.frobenius,
                "genus": stats.genus,
                "embedding_dimension": stats.embedding_dimension,
                "minimal_generators": list(stats.minimal_generators),
            }
        )
    else:
        print(f"semigroup: {sg}")
        print(f"multiplicity: {stats.multiplicity}")
        print(f"conductor: {stats.conductor}")
        print(f"frobenius: {stats.frobenius}")
        print(f"genus: {stats.genus}")
        print(f"embedding dimension: {stats.embedding_dimension}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.exhaustive_conductor is not None:
        if args.generators is not None or args.mult_seq is not None:
            raise InputError("--exhaustive-conductor replaces the semigroup argument")
        family = enumerate_semigroups(args.exhaustive_conductor)
    else:
        family = [_semigroup_from_args(args)]
    report = verify.run_battery(family, seed=args.seed)
    if args.json:
        _emit(report)
    else:
        for prop in report["properties"]:
            status = "PASS" if prop["passed"] else "FAIL"
            print(f"{status} {prop['name']}: {prop['cases']} cases")
            for ce in prop["counterexamples"]:
                print(f"    counterexample: {ce}")
        print(f"semigroups checked: {report['semigroups']}")
        print("result: " + ("all properties hold" if report["ok"] else "violations found"))
    return EXIT_OK if report["ok"] else EXIT_PROPERTY_FAILS


_DISPATCH = {
    "check": _cmd_check,
    "closure": _cmd_closure,
    "tower": _cmd_tower,
    "decompose": _cmd_decompose,
    "enumerate": _cmd_enumerate,
    "stats": _cmd_stats,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.verb](args)
    except NotArf as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROPERTY_FAILS
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
