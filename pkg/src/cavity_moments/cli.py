"""Command-line front end.

Subcommands: ``bases`` (enumerate or count base structures), ``moments``
(assemble a moment generating function), ``verify`` (run the built-in
check catalogue).  Exit codes: 0 success, 1 usage error, 2 verification
failure, 3 internal-consistency violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import basegen, summation, trees
from .algebra import (BasisError, ParityViolationError, Series,
                      format_rational)
from .basegen import ORTHOGONAL, UNITARY
from .trees import REFLECTION, TRANSMISSION

CACHE_ENV = "CAVITY_MOMENTS_CACHE_DIR"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_INTERNAL = 3

# Reference structure counts per (genus2, symmetry): {m: count}
TABLE_COUNTS = {
    (2, ORTHOGONAL): {2: 5, 3: 7},
    (2, UNITARY): {2: 1, 3: 1},
    (3, ORTHOGONAL): {3: 41, 4: 198, 5: 285, 6: 128},
    (3, UNITARY): {},
    (4, ORTHOGONAL): {4: 509, 5: 4508, 6: 14235, 7: 20867,
                      8: 14516, 9: 3885},
    (4, UNITARY): {4: 21, 5: 168, 6: 483, 7: 651, 8: 420, 9: 105},
}

# (genus2, symmetry, quantity) -> closed-form id, or None for a zero series
CLOSED_FORM_MAP = {
    (1, ORTHOGONAL, TRANSMISSION): "T1O",
    (1, ORTHOGONAL, REFLECTION): "R1O",
    (1, UNITARY, TRANSMISSION): None,
    (1, UNITARY, REFLECTION): None,
    (2, ORTHOGONAL, TRANSMISSION): "T2O",
    (2, ORTHOGONAL, REFLECTION): "R2O",
    (2, UNITARY, TRANSMISSION): "T2U",
    (2, UNITARY, REFLECTION): "R2U",
    (3, ORTHOGONAL, TRANSMISSION): "T3O",
    (3, ORTHOGONAL, REFLECTION): "R3O",
    (3, UNITARY, TRANSMISSION): None,
    (3, UNITARY, REFLECTION): None,
    (4, ORTHOGONAL, TRANSMISSION): "T4O",
    (4, ORTHOGONAL, REFLECTION): "R4O",
    (4, UNITARY, TRANSMISSION): "T4U",
    (4, UNITARY, REFLECTION): "R4U",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cavity-moments",
                     description="Transport moment generating functions of "
                                 "a chaotic cavity, order by order in 1/N.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, quantity=False):
        p.add_argument("--genus2", type=int, required=True, metavar="2G",
                       choices=(1, 2, 3, 4),
                       help="order 2g of the 1/N correction (1..4)")
        p.add_argument("--symmetry", choices=(UNITARY, ORTHOGONAL),
                       required=True)
        if quantity:
            p.add_argument("--quantity", choices=(TRANSMISSION, REFLECTION),
                           required=True)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--cache-dir", default=None,
                       help=f"structure cache directory (default ${CACHE_ENV})")

    p_bases = sub.add_parser("bases", help="enumerate base structures")
    common(p_bases)
    group = p_bases.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true",
                       help="print one canonical pairing per line")
    group.add_argument("--count", action="store_true",
                       help="print counts per edge number m")
    p_bases.set_defaults(func=cmd_bases)

    p_mom = sub.add_parser("moments", help="assemble a generating function")
    common(p_mom, quantity=True)
    p_mom.add_argument("-K", "--truncation", type=int, default=10,
                       dest="truncation", help="series truncation in s")
    p_mom.add_argument("--format", choices=("json", "csv"), default="json")
    p_mom.set_defaults(func=cmd_moments)

    p_ver = sub.add_parser("verify", help="run the built-in check catalogue")
    p_ver.add_argument("--genus2", type=int, default=2, choices=(1, 2, 3, 4),
                       metavar="2G", help="largest order to verify")
    p_ver.add_argument("-K", "--truncation", type=int, default=6,
                       dest="truncation")
    p_ver.add_argument("--threads", type=int, default=1)
    p_ver.add_argument("--cache-dir", default=None)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def _cache_dir(args) -> str | None:
    if args.cache_dir is not None:
        return args.cache_dir
    return os.environ.get(CACHE_ENV)


def cmd_bases(args) -> int:
    cache = _cache_dir(args)
    counts = {}
    listing = []
    for m in basegen.genus_m_range(args.genus2):
        structs = basegen.iter_structures(m, args.symmetry, args.genus2,
                                          cache)
        if args.count:
            c = sum(1 for _ in structs)
            if c:
                counts[m] = c
        else:
            listing.extend(s.half_pair_string() for s in structs)
    if args.count:
        print(", ".join(f"m={m}: {c}" for m, c in sorted(counts.items())))
    else:
        for line in listing:
            print(line)
    return EXIT_OK


def _series_json(result) -> dict:
    series = result.series
    coeffs = (series.xi_json_obj() if result.basis == "xi"
              else series.to_json_obj())
    obj = {
        "quantity": result.quantity,
        "symmetry": result.symmetry,
        "genus2": result.genus2,
        "truncation": result.truncation,
        "basis": result.basis,
        "coefficients": coeffs,
    }
    if result.conjecture is not None:
        rec = result.conjecture
        obj["conjecture"] = {
            "status": rec.status,
            "beta": rec.beta,
            "basis": list(rec.basis),
            "polynomial": [[i, j, format_rational(c)]
                           for i, j, c in rec.entries],
            "detail": rec.detail,
        }
    else:
        obj["conjecture"] = None
    return obj


def _series_csv(result) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(["s_power", f"{result.basis}_power", "coefficient"])
    coeffs = (result.series.xi_json_obj() if result.basis == "xi"
              else result.series.to_json_obj())
    for power, row in coeffs:
        for i, c in enumerate(row):
            if c != "0/1":
                writer.writerow([power, i, c])
    return out.getvalue()


def cmd_moments(args) -> int:
    if args.truncation < 2:
        print("truncation must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    result = summation.assemble(args.genus2, args.symmetry, args.quantity,
                                args.truncation, cache_dir=_cache_dir(args),
                                threads=args.threads)
    if args.format == "csv":
        sys.stdout.write(_series_csv(result))
    else:
        json.dump(_series_json(result), sys.stdout, indent=2)
        print()
    return EXIT_OK


def _verify_checks(args):
    """Yield (name, callable) pairs; each callable returns True on pass."""
    cache = _cache_dir(args)
    K = args.truncation

    def counts_check(genus2, symmetry):
        def run():
            got = basegen.count_by_genus(genus2, symmetry, cache)
            return got == TABLE_COUNTS[(genus2, symmetry)]
        return run

    def series_check(genus2, symmetry, quantity, formula_id):
        def run():
            result = summation.assemble(genus2, symmetry, quantity, K,
                                        cache_dir=cache,
                                        threads=args.threads)
            if formula_id is None:
                return result.series.is_zero()
            target = summation.closed_form_series(formula_id, K)
            ok = result.series == target
            if ok and result.conjecture is not None:
                ok = result.conjecture.status == "ok"
            return ok
        return run

    def leading_check(quantity):
        def run():
            tf = trees.solve_tree_functions(quantity, 2 * K)
            one = Series.const(1, "r", 2 * K)
            if quantity == TRANSMISSION:
                lead = tf.h * (one - tf.h).inverse()
            else:
                f2 = tf.f * tf.f
                lead = f2 * (one - f2).inverse()
            lead = lead.reindex_r_to_s()
            closed = trees.leading_order_closed_form(quantity, UNITARY, K)
            return lead == closed
        return run

    for quantity in (TRANSMISSION, REFLECTION):
        yield f"leading-order-{quantity}", leading_check(quantity)
    for genus2 in range(2, args.genus2 + 1):
        for symmetry in (ORTHOGONAL, UNITARY):
            if (genus2, symmetry) in TABLE_COUNTS:
                yield (f"counts-2g{genus2}-{symmetry}",
                       counts_check(genus2, symmetry))
    for genus2 in range(1, args.genus2 + 1):
        for symmetry in (UNITARY, ORTHOGONAL):
            for quantity in (TRANSMISSION, REFLECTION):
                fid = CLOSED_FORM_MAP[(genus2, symmetry, quantity)]
                yield (f"series-2g{genus2}-{symmetry}-{quantity}",
                       series_check(genus2, symmetry, quantity, fid))


def cmd_verify(args) -> int:
    failed = 0
    for name, run in _verify_checks(args):
        ok = run()
        print(f"{'PASS' if ok else 'FAIL'} {name}")
        if not ok:
            failed += 1
    print(f"{'OK' if not failed else 'FAILED'}: {failed} failure(s)")
    return EXIT_OK if not failed else EXIT_VERIFY


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParityViolationError, BasisError, AssertionError) as exc:
        print(f"internal consistency violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
