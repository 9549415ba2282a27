"""Command-line interface: machine-readable access to every subsystem.

Exit codes: 0 success, 1 verification failure (a construction that does not
back its claim), 2 usage or domain error. Results go to stdout, diagnostics
to stderr. JSON field names and CSV column order are frozen; see README.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import analysis, constructions, extendable, spectrum
from .cyclic import CyclicSet
from .deck import DeckBudgetError, IntFunction, deck, deck_fingerprint, deck_set

PRINT_LIMIT = 10**6


def _add_set_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="modulus")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", dest="elements", help="comma-separated residues, e.g. 0,3,4")
    group.add_argument("--mask", help="membership bitmask, e.g. 0x1B9")


def _parse_set(args, attr_elements="elements", attr_mask="mask") -> CyclicSet:
    n = args.n
    elements = getattr(args, attr_elements, None)
    mask = getattr(args, attr_mask, None)
    if elements is not None:
        if elements.strip() == "":
            return CyclicSet(n, 0)
        return CyclicSet.from_elements(n, (int(x) for x in elements.split(",")))
    return CyclicSet(n, int(mask, 0))


def _parse_elements(n: int, text: str) -> CyclicSet:
    return CyclicSet.from_elements(n, (int(x) for x in text.split(",")))


def _emit(obj) -> None:
    print(json.dumps(obj))


def _frac(x) -> str | None:
    return None if x is None else f"{Fraction(x).numerator}/{Fraction(x).denominator}"


def cmd_deck(args) -> int:
    e = _parse_set(args)
    if args.n ** (args.k - 1) > PRINT_LIMIT and not args.force:
        raise ValueError(
            f"deck has {args.n ** (args.k - 1)} entries; pass --force to print above {PRINT_LIMIT}"
        )
    d = deck_set(e, args.k) if args.k == 3 else deck(IntFunction.from_set(e), args.k)
    if args.digest:
        print(deck_fingerprint(d))
        return 0
    _emit({"n": d.n, "k": d.k, "values": list(d.values)})
    return 0


def cmd_spectrum(args) -> int:
    e = _parse_set(args)
    report = spectrum.zero_set(IntFunction.from_set(e))
    _emit(
        {
            "n": report.n,
            "support": list(report.support),
            "zero_frequencies": list(report.zero_frequencies),
            "support_divisors": list(report.support_divisors),
        }
    )
    return 0


def cmd_extendable(args) -> int:
    e = _parse_set(args)
    if args.from_set:
        a = spectrum.zero_set(IntFunction.from_set(e)).support_set()
    else:
        a = e
    verdict = extendable.is_extendable(a)
    out = {"n": a.n, "elements": list(a.elements), "extendable": verdict.extendable}
    if verdict.witness is not None:
        out["witness"] = {
            "elements": list(verdict.witness.elements),
            "numerators": list(verdict.witness.numerators),
            "denominator": verdict.witness.denominator,
        }
    else:
        out["witness"] = None
    out["slope"] = _frac(verdict.slope)
    _emit(out)
    return 0


def _emit_pair(pair) -> int:
    _emit(
        {
            "n": pair.n,
            "kind": pair.kind,
            "E": list(pair.e.elements),
            "F": list(pair.f.elements),
            "verified": {
                f"decks_equal_at_{pair.deck_order}": pair.decks_equal,
                "translates": pair.translates,
            },
        }
    )
    return 0 if pair.verified else 1


def cmd_construct_even(args) -> int:
    return _emit_pair(constructions.even_pair(args.k))


def cmd_construct_pqrd(args) -> int:
    return _emit_pair(constructions.pqrd_pair(args.p, args.q, args.r, args.d))


def cmd_construct_twodeck(args) -> int:
    a = _parse_elements(args.n, args.a)
    b = _parse_elements(args.n, args.b)
    return _emit_pair(constructions.two_deck_pair(a, b))


CSV_HEADER = "n,determined,predicate,translation_classes,deck_classes,exception_subsets,seconds"


def _csv_row(report) -> str:
    return (
        f"{report.n},{report.determined},{analysis.good_n_predicate(report.n)},"
        f"{report.num_translation_classes},{report.num_deck_classes},"
        f"{report.exception_subset_count},{report.elapsed:.3f}"
    )


def cmd_classify(args) -> int:
    report = analysis.classify(args.n, max_exceptions=args.max_exceptions, max_n=args.max_n)
    if args.csv:
        print(CSV_HEADER)
        print(_csv_row(report))
        return 0
    _emit(
        {
            "n": report.n,
            "num_subsets": report.num_subsets,
            "translation_classes": report.num_translation_classes,
            "deck_classes": report.num_deck_classes,
            "determined": report.determined,
            "exception_pairs": report.exception_pair_count,
            "exception_subsets": report.exception_subset_count,
            "exceptions": [
                {"E": list(e.elements), "F": list(f.elements)} for e, f in report.exceptions
            ],
            "elapsed_seconds": round(report.elapsed, 3),
        }
    )
    return 0


def cmd_sweep(args) -> int:
    print(CSV_HEADER)
    for n in range(args.from_n, args.to_n + 1):
        report = analysis.classify(n, max_n=max(n, analysis.DEFAULT_MAX_N))
        print(_csv_row(report), flush=True)
    return 0


def cmd_mc(args) -> int:
    report = analysis.zero_probability_mc(args.n, args.samples, args.seed)
    _emit(
        {
            "n": report.n,
            "samples": report.samples,
            "seed": report.seed,
            "generator": report.generator,
            "zero_counts": list(report.zero_counts),
            "any_zero_count": report.any_zero_count,
            "constant_sample_count": report.constant_sample_count,
            "zero_rates": [report.zero_rate(s) for s in range(report.n)],
            "standard_errors": [report.standard_error(s) for s in range(report.n)],
            "exact_half_probability": _frac(report.exact_half_probability),
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trideck",
        description="Exact k-decks, spectral zero sets and 3-deck determinacy on Z_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deck", help="print the k-deck of a set as JSON")
    _add_set_args(p)
    p.add_argument("--k", type=int, default=3, help="deck order (default 3)")
    p.add_argument("--digest", action="store_true", help="print the deck fingerprint only")
    p.add_argument("--force", action="store_true", help="allow printing very large decks")
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("spectrum", help="exact Fourier zero set of an indicator")
    _add_set_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("extendable", help="decide the extendable-domain property")
    _add_set_args(p)
    p.add_argument(
        "--from-set",
        action="store_true",
        help="treat the input as a set E and test the support of its transform",
    )
    p.set_defaults(func=cmd_extendable)

    p = sub.add_parser("construct", help="generate and verify counterexample pairs")
    csub = p.add_subparsers(dest="family", required=True)
    pe = csub.add_parser("even", help="n = 2k pair with equal 3-decks")
    pe.add_argument("--k", type=int, required=True)
    pe.set_defaults(func=cmd_construct_even)
    pp = csub.add_parser("pqrd", help="n = pqrd pair with equal 3-decks")
    pp.add_argument("--p", type=int, required=True)
    pp.add_argument("--q", type=int, required=True)
    pp.add_argument("--r", type=int, required=True)
    pp.add_argument("--d", type=int, required=True)
    pp.set_defaults(func=cmd_construct_pqrd)
    pt = csub.add_parser("twodeck", help="E = A+B, F = A-B pair with equal 2-decks")
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--a", required=True, help="comma-separated residues of A")
    pt.add_argument("--b", required=True, help="comma-separated residues of B")
    pt.set_defaults(func=cmd_construct_twodeck)

    p = sub.add_parser("classify", help="exhaustive 3-deck classification of Z_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-exceptions", type=int, default=analysis.MAX_EXCEPTIONS)
    p.add_argument("--max-n", type=int, default=analysis.DEFAULT_MAX_N)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true", help="single CSV row")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="classify a range of n, one CSV row per n")
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("mc", help="random-subset Fourier-zero probability experiment")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_mc)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, DeckBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
