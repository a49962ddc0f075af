"""Batch verification front end.

JSON reports go to standard output; a one-line-per-check human summary
goes to standard error.  Exit status: 0 when every check passes, 1 for
a failed check or an inadmissible input, 2 for a usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import centralizer, elementary, minors, rmatrix, transvector
from .glrep import GlModule, SizeGuardError, branching_admissible
from .reports import Timer, all_pass, assemble

USAGE_ERROR = 2
CHECK_FAILED = 1


def parse_partition(text):
    if text.strip() in ("", "-"):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            "partitions are comma-separated integers, got %r" % text)
    if any(x < 0 for x in parts):
        raise argparse.ArgumentTypeError("partition entries must be >= 0")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise argparse.ArgumentTypeError(
            "partition entries must be weakly decreasing")
    return parts


def shift_product_text(shifts):
    """(u+4)(u+8)(u+9) style rendering of a multiset of shifts."""
    if not shifts:
        return "1"
    bits = []
    for c in sorted(shifts):
        if c == 0:
            bits.append("u")
        elif c > 0:
            bits.append("(u+%d)" % c)
        else:
            bits.append("(u-%d)" % -c)
    return "".join(bits)


def build_parser():
    top = argparse.ArgumentParser(
        prog="yangian",
        description="exact verification of quantum-minor identities")
    sub = top.add_subparsers(dest="command", required=True)

    ver = sub.add_parser("verify", help="run an identity suite")
    ver.add_argument("suite", choices=["sylvester", "comatrix", "minors",
                                       "rtt", "centralizer", "transvector"])
    ver.add_argument("--m", type=int)
    ver.add_argument("--n", type=int)
    ver.add_argument("--s", type=int)
    ver.add_argument("--lambda", dest="lam", type=parse_partition)
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--trials", type=int, default=10)
    ver.add_argument("--max-size", type=int, default=None)

    dr = sub.add_parser("drinfeld", help="clipped partitions and Drinfeld"
                                         " polynomials (combinatorics only)")
    dr.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    dr.add_argument("--mu", type=parse_partition, required=True)
    dr.add_argument("--n", type=int, required=True)

    ele = sub.add_parser("elementary", help="highest-vector data for the"
                                            " induced module")
    ele.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    ele.add_argument("--mu", type=parse_partition, required=True)
    ele.add_argument("--m", type=int, required=True)
    ele.add_argument("--n", type=int, required=True)
    ele.add_argument("--full", action="store_true",
                     help="run the module-level verification pipeline")
    ele.add_argument("--max-size", type=int, default=None)

    cap = sub.add_parser("capelli", help="determinant eigenvalue on a"
                                         " highest-weight module")
    cap.add_argument("--lambda", dest="lam", type=parse_partition, required=True)
    cap.add_argument("--n", type=int, required=True)
    cap.add_argument("--max-size", type=int, default=None)
    return top


def _usage(msg):
    print("error: %s" % msg, file=sys.stderr)
    return USAGE_ERROR


def _emit(report):
    json.dump(report, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")
    for c in report.get("checks", []):
        print("[%s] %s" % (c["status"], c["name"]), file=sys.stderr)
    status = "OK" if report.get("ok", True) else "FAILED"
    print("%s (%d checks, %.3fs)" % (status, len(report.get("checks", [])),
                                     report.get("elapsed_seconds", 0.0)),
          file=sys.stderr)
    return 0 if report.get("ok", True) else CHECK_FAILED


def run_verify(args):
    suite = args.suite
    seed = 0 if args.seed is None else args.seed
    with Timer() as t:
        if suite == "sylvester":
            m = args.m or 2
            n = args.n or 3
            if not 1 <= m <= n:
                return _usage("sylvester requires 1 <= m <= n")
            if n > 4:
                return _usage("sylvester suite is sized for n <= 4")
            checks = minors.check_sylvester(m, n)
        elif suite == "comatrix":
            n = args.n or 3
            if not 1 <= n <= 4:
                return _usage("comatrix suite is sized for 1 <= n <= 4")
            checks = minors.check_comatrix(n)
        elif suite == "minors":
            n = args.n or 3
            m = args.m or min(2, n)
            if not (1 <= m <= n <= 4):
                return _usage("minors suite requires 1 <= m <= n <= 4")
            checks = minors.check_minor_identities(n, m)
        elif suite == "rtt":
            n = args.n or 2
            s = args.s or 2
            if not (2 <= n <= 3 and 2 <= s <= 4):
                return _usage("rtt suite is sized for 2 <= n <= 3, 2 <= s <= 4")
            samples = [(Fraction(9), Fraction(7), Fraction(1)),
                       (Fraction(5), Fraction(2), Fraction(0)),
                       (Fraction(23, 2), Fraction(4), Fraction(3))]
            checks = rmatrix.check_rtt(n, s, samples)
            if n == 2:
                for k, l in [(1, 1), (1, 2), (2, 1), (2, 2)]:
                    checks.append(rmatrix.check_fused_specialization(
                        k, l, n, Fraction(15, 2), Fraction(3)))
        elif suite == "centralizer":
            n = args.n or 3
            m = args.m or 1
            if not (1 <= m < n <= 4):
                return _usage("centralizer suite requires 1 <= m < n <= 4")
            checks = []
            checks += centralizer.check_centralizer_projection(n)
            checks += centralizer.check_bordered_commutes(m, n)
            checks += centralizer.check_bordered_projection(m, n)
            checks += centralizer.check_projection_multiplicative(
                min(n, 3), pairs=max(20, args.trials), seed=seed)
            checks += centralizer.check_classical_sylvester(
                max(m, 2), n, trials=args.trials, seed=seed)
        elif suite == "transvector":
            if args.lam is None or args.m is None or args.n is None:
                return _usage("transvector requires --lambda, --m and --n")
            m, n = args.m, args.n
            if m < 1 or n < 1:
                return _usage("transvector requires m >= 1 and n >= 1")
            if len(args.lam) > m + n:
                return _usage("lambda has more than m + n parts")
            try:
                module = GlModule(args.lam, m + n, max_ambient=args.max_size)
            except SizeGuardError as exc:
                return _usage(str(exc))
            checks = transvector.check_z_relations(module, m)
            checks += transvector.check_minor_realization(module, m)
        else:  # pragma: no cover - argparse restricts choices
            return _usage("unknown suite %r" % suite)
    report = assemble("verify %s" % suite, checks, elapsed=t.elapsed,
                      seed=args.seed)
    return _emit(report)


def run_drinfeld(args):
    mu = args.mu
    m = max(1, len(mu))
    n = args.n
    with Timer() as t:
        if n < 1:
            return _usage("need n >= 1")
        if len(args.lam) > m + n:
            print("inadmissible: lambda has more than m + n parts",
                  file=sys.stderr)
            return CHECK_FAILED
        if not branching_admissible(args.lam, mu, n):
            print("inadmissible: mu must sit inside lambda with skew columns"
                  " at most n cells tall", file=sys.stderr)
            return CHECK_FAILED
        data = elementary.highest_weight_data(args.lam, mu, m, n)
        polys = elementary.drinfeld_polynomials(args.lam, mu, m, n)
    extra = {
        "lambda": list(args.lam),
        "mu": list(mu),
        "m": m,
        "n": n,
        "nu": [list(nu) for nu in data.nus],
        "eigenvalues": [
            {"numerator": shift_product_text(data.numerator_shifts[a - 1]),
             "numerator_shifts": list(data.numerator_shifts[a - 1]),
             "denominator": shift_product_text(data.denominator_shifts)}
            for a in range(1, n + 1)],
        "drinfeld": [
            {"index": a, "polynomial": shift_product_text(polys[a - 1]),
             "shifts": list(polys[a - 1]), "routes_agree": True}
            for a in range(1, n)],
    }
    report = assemble("drinfeld", [], elapsed=t.elapsed, extra=extra)
    return _emit(report)


def run_elementary(args):
    lam, mu, m, n = args.lam, args.mu, args.m, args.n
    with Timer() as t:
        if m < 1 or n < 1:
            return _usage("need m >= 1 and n >= 1")
        if len(mu) > m or len(lam) > m + n \
                or not branching_admissible(lam, mu, n):
            print("inadmissible pair", file=sys.stderr)
            return CHECK_FAILED
        sk = elementary.skew_diagram(lam, mu, m, n)
        data = elementary.highest_weight_data(lam, mu, m, n)
        polys = elementary.drinfeld_polynomials(lam, mu, m, n)
        checks = []
        if args.full:
            try:
                checks = elementary.verify_elementary(
                    lam, mu, m, n, max_ambient=args.max_size)
            except SizeGuardError as exc:
                print("size guard exceeded: %s (drop --full or raise"
                      " --max-size)" % exc, file=sys.stderr)
                return CHECK_FAILED
    extra = {
        "lambda": list(lam), "mu": list(mu), "m": m, "n": n,
        "highest_vector_word": [list(p) for p in sk.operator_word()],
        "highest_vector_text": sk.word_text(),
        "nu": [list(nu) for nu in data.nus],
        "drinfeld": [shift_product_text(p) for p in polys],
    }
    report = assemble("elementary", checks, elapsed=t.elapsed, extra=extra)
    return _emit(report)


def run_capelli(args):
    with Timer() as t:
        if args.n < 1:
            return _usage("need n >= 1")
        if len(args.lam) > args.n:
            print("inadmissible: lambda has more than n parts",
                  file=sys.stderr)
            return CHECK_FAILED
        try:
            checks = centralizer.check_capelli_eigenvalue(
                args.lam, args.n, max_ambient=args.max_size)
        except SizeGuardError as exc:
            print("size guard exceeded: %s" % exc, file=sys.stderr)
            return CHECK_FAILED
    lam_p = list(args.lam) + [0] * (args.n - len(args.lam))
    extra = {
        "lambda": list(args.lam), "n": args.n,
        "eigenvalue_numerator": shift_product_text(
            [lam_p[i - 1] - i + 1 for i in range(1, args.n + 1)]),
        "eigenvalue_denominator": shift_product_text(
            [-i + 1 for i in range(1, args.n + 1)]),
    }
    report = assemble("capelli", checks, elapsed=t.elapsed, extra=extra)
    return _emit(report)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return run_verify(args)
        if args.command == "drinfeld":
            return run_drinfeld(args)
        if args.command == "elementary":
            return run_elementary(args)
        if args.command == "capelli":
            return run_capelli(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return CHECK_FAILED
    return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
