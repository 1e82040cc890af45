"""Command line front end: ``cyclopair <command> [options]``.

Exit status: 0 success, 1 a verification failed, 2 bad input (including an
unreadable cache file).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import verify
from .bernoulli import IrregularPair, bernoulli_mod, iwasawa_coeffs, scan_irregular
from .cache import BernoulliCache, default_cache_path
from .cyclo_relations import (
    check_degenerate_candidate,
    check_vanishing_at_p_minus_r,
    solve_pairing,
    solve_pairing_mod_p2,
)
from .errors import CacheError, CyclopairError, DomainError
from .galois import ATTESTED_NONTRIVIAL, galois_relation, relation_report, render_relation
from .ihara import ihara_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _open_cache(path):
    path = path or default_cache_path()
    return BernoulliCache(path) if path else None


def _pair(args) -> IrregularPair:
    if args.p is None or args.r is None:
        raise DomainError("-p and -r are required")
    return IrregularPair(args.p, args.r)


def _write_csv(out, vectors):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["p", "r", "i", "e"])
    for v in vectors:
        for i, e in sorted(v.entries.items()):
            w.writerow([v.pair.p, v.pair.r, i, e])


def _status_ok(v) -> bool:
    return v.kernel_dimension == 1 and check_vanishing_at_p_minus_r(v)


def cmd_scan(args, out) -> int:
    cache = _open_cache(args.cache)
    table = scan_irregular(args.limit, cache=cache, workers=args.threads)
    pairs = [IrregularPair(p, r) for p, rs in table.items() for r in rs]
    with ThreadPoolExecutor(max_workers=max(args.threads, 1)) as pool:
        vectors = list(pool.map(solve_pairing, pairs))  # map preserves (p, r) order
    if args.format == "csv":
        _write_csv(out, vectors)
    elif args.format == "json":
        for v in vectors:
            rec = v.to_json()
            rec["x_p_minus_r_zero"] = check_vanishing_at_p_minus_r(v)
            out.write(json.dumps(rec) + "\n")
    else:
        for v in vectors:
            out.write(f"{v.pair.p} {v.pair.r} kernel_dim={v.kernel_dimension} "
                      f"x_(p-r)=0:{check_vanishing_at_p_minus_r(v)}\n")
    bad = [v for v in vectors if not _status_ok(v)]
    for v in bad:
        print(f"verification failed for {v.pair}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


def cmd_pair(args, out) -> int:
    pair = _pair(args)
    if args.precision == 2:
        kb = solve_pairing_mod_p2(pair, convention=args.convention)
        rec = {"p": pair.p, "r": pair.r, "precision": 2, "convention": args.convention,
               "order_exponent": kb.order_exponent, "order": kb.order}
        if args.format == "json":
            out.write(json.dumps(rec) + "\n")
        else:
            out.write(f"{pair}: solution module mod p^2 has order {pair.p}^{kb.order_exponent}\n")
        return EXIT_OK if kb.order <= pair.p else EXIT_FAIL
    v = solve_pairing(pair, include_odd_a=args.include_odd_a)
    if args.format == "json":
        out.write(json.dumps(v.to_json()) + "\n")
    elif args.format == "csv":
        _write_csv(out, [v])
    else:
        out.write(f"{pair}: kernel_dim={v.kernel_dimension}\n")
        for i, e in sorted(v.symmetric().items()):
            out.write(f"  e_{i} = {e}\n")
    return EXIT_OK if _status_ok(v) else EXIT_FAIL


def cmd_galois(args, out) -> int:
    pair = _pair(args)
    rel = galois_relation(pair, solve_pairing(pair), iwasawa_coeffs(pair))
    attested = args.attest or (pair.p, pair.r) in ATTESTED_NONTRIVIAL
    report = relation_report(rel, attested)
    if args.format == "json":
        out.write(json.dumps(report) + "\n")
    else:
        out.write(render_relation(rel) + "\n")
        out.write(f"# greenberg: {report['greenberg']}\n")
    return EXIT_OK


def cmd_ihara(args, out) -> int:
    report = ihara_report(solve_pairing(IrregularPair(691, 12)))
    if args.format == "json":
        out.write(json.dumps(report) + "\n")
    else:
        for key, value in report.items():
            out.write(f"{key}: {value}\n")
    return EXIT_OK if report["pairing_consistent"] and report["ratio"] == 50 else EXIT_FAIL


def cmd_degenerate(args, out) -> int:
    if args.p is None:
        raise DomainError("-p is required")
    r = args.r if args.r is not None else (args.p + 3) // 2
    rep = check_degenerate_candidate(args.p, r)
    if args.format == "json":
        out.write(json.dumps(rep.to_json()) + "\n")
    else:
        out.write(f"({rep.p}, {rep.r}): degeneracy {'present' if rep.present else 'absent'}\n")
    return EXIT_OK


def cmd_bernoulli(args, out) -> int:
    if args.p is None:
        raise DomainError("-p is required")
    p = args.p
    ks = [args.k] if args.k is not None else list(range(2, p - 2, 2))
    values = {k: bernoulli_mod(k, p, args.precision).value for k in ks}
    cache = _open_cache(args.cache)
    if cache is not None and args.k is None:
        cache.put_table(p, args.precision, values)
    if args.format == "json":
        out.write(json.dumps({"p": p, "prec": args.precision, "values": {str(k): v for k, v in values.items()}}) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["p", "prec", "k", "value"])
        for k, v in values.items():
            w.writerow([p, args.precision, k, v])
    else:
        for k, v in values.items():
            out.write(f"B_{k} = {v} mod {p}^{args.precision}\n")
    return EXIT_OK


def cmd_verify_all(args, out) -> int:
    results = verify.run_all(limit=args.limit, p2_limit=args.p2_limit)
    for res in results:
        out.write(res.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


COMMANDS = {
    "scan": cmd_scan,
    "pair": cmd_pair,
    "galois": cmd_galois,
    "ihara-check": cmd_ihara,
    "degenerate": cmd_degenerate,
    "bernoulli": cmd_bernoulli,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclopair", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("-p", type=int)
        sp.add_argument("-r", type=int)
        sp.add_argument("-k", type=int, help="single Bernoulli index (bernoulli command)")
        sp.add_argument("--limit", type=int, default=1000)
        sp.add_argument("--p2-limit", type=int, default=300)
        sp.add_argument("--precision", type=int, choices=(1, 2), default=1)
        sp.add_argument("--format", choices=("csv", "json", "text"), default="text")
        sp.add_argument("--cache", help="cache file (default: $CYCLOPAIR_CACHE, else none)")
        sp.add_argument("--include-odd-a", action="store_true")
        sp.add_argument("--convention", choices=("teichmuller", "naive"), default="teichmuller")
        sp.add_argument("--attest", action="store_true", help="treat the cup product as known nonzero")
        sp.add_argument("--threads", type=int, default=1)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (DomainError, CacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CyclopairError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
