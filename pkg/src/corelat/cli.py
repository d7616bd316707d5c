"""Command-line front end: enumeration, table reproduction, theorem sweeps.

Output is CSV or JSON on stdout, byte-deterministic for fixed inputs.  Exit
codes: 0 when everything requested PASSes, 1 on a verification FAIL (the
witness is in the output), 2 on usage errors.  Sweeps over N run on a
process pool capped by the CORELAT_THREADS environment variable.
"""

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import atomic, cores, param
from .diophantine import solve_diagonal
from .dynkin import lookup_type

FIGURES = {
    "8N+1": {"case": "C2L1", "default_max_n": 14,
             "header": ["N", "M_prime", "phi_M_prime", "L_minus_M_prime",
                        "phi_L_minus_M_prime", "solutions"]},
    "40N+10": {"case": "A42", "default_max_n": 6,
               "header": ["N", "B", "phi", "solutions"]},
    "6N+7": {"case": "G21", "default_max_n": 5,
             "header": ["N", "B", "phi", "solutions"]},
    "12N+7": {"case": "D43", "default_max_n": 19,
              "header": ["N", "partitions", "B", "phi", "solutions"]},
}

VERIFY_CASES = ("A2", "A2ext", "C2", "C2L1", "D3t", "A42", "G21", "D43", "A3")


def _fmt_frac(x):
    return str(Fraction(x))


def _fmt_tuple(t):
    return "(" + ",".join(_fmt_frac(x) for x in t) + ")"


def _cell(tuples):
    return ";".join(_fmt_tuple(t) for t in sorted(tuples))


def _partition_cell(partitions):
    return ";".join(cores.format_partition(p) for p in sorted(partitions))


def _free_pair(q):
    return tuple(q[:2])


def figure_rows(figure, max_n):
    spec = FIGURES[figure]
    case = param.get_case(spec["case"])
    rows = []
    for n in range(max_n + 1):
        sols = solve_diagonal(case.form, case.equation_value(n))
        points = param.lattice_points(case, n)
        if figure == "8N+1":
            rotated = sorted(tuple(map(param._as_int, param.u_rotate(q))) for q in points)
            in_m = [b for b in rotated if sum(b) % 2 == 0]
            outside = [b for b in rotated if sum(b) % 2 == 1]
            phi = lambda b: (4 * b[0], 4 * b[1] + 1)
            rows.append([str(n), _cell(in_m), _cell([phi(b) for b in in_m]),
                         _cell(outside), _cell([phi(b) for b in outside]),
                         _cell(sols)])
        elif figure == "12N+7":
            pairs = sorted(_free_pair(q) for q in points)
            flats = [cores.d4flat_from_lattice(q) for q in pairs]
            rows.append([str(n), _partition_cell(flats), _cell(pairs),
                         _cell([case.phi_map(q) for q in pairs]), _cell(sols)])
        else:
            pairs = sorted(_free_pair(q) for q in points)
            rows.append([str(n), _cell(pairs),
                         _cell([case.phi_map(q) for q in pairs]), _cell(sols)])
    return spec["header"], rows


def _emit_csv(header, rows, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_json(obj, out):
    json.dump(obj, out, separators=(",", ":"))
    out.write("\n")


def _workers():
    """Worker-pool size for sweeps: CORELAT_THREADS caps it when set."""
    env = os.environ.get("CORELAT_THREADS")
    if env is not None:
        try:
            return max(1, min(int(env), 8))
        except ValueError:
            return 1
    return min(os.cpu_count() or 1, 8)


def _verify_one(args):
    case_id, n = args
    return param.verify_case(case_id, n)


def _conjecture_one(n):
    return param.a3_conjecture_check(n)


def _sweep(func, jobs):
    workers = _workers()
    if workers <= 1 or len(jobs) <= 1:
        return [func(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, jobs, chunksize=max(1, len(jobs) // (4 * workers))))


def _report_output(reports, fmt, out):
    if fmt == "json":
        _emit_json([r.to_dict() for r in reports], out)
    else:
        header = ["case", "N", "status", "solutions", "orbits", "phi_images", "witness"]
        rows = [[r.case, str(r.N), r.status,
                 str(r.counts.get("solutions", "")),
                 str(r.counts.get("orbits", "")),
                 str(r.counts.get("phi_images", "")),
                 json.dumps(r.witness, separators=(",", ":")) if r.witness else ""]
                for r in reports]
        _emit_csv(header, rows, out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_atomic_length(args, out):
    t = lookup_type(args.type)
    coords = tuple(Fraction(tok) for tok in args.coords.split(","))
    weight = int(args.weight[1:])
    if weight == 0:
        value = atomic.atomic_length0(t, coords)
    else:
        value = atomic.atomic_length_i(t, weight, coords)
    if args.format == "json":
        _emit_json({"type": args.type, "weight": args.weight,
                    "coords": [_fmt_frac(x) for x in coords],
                    "value": _fmt_frac(value)}, out)
    else:
        _emit_csv(["type", "weight", "coords", "value"],
                  [[args.type, args.weight, _fmt_tuple(coords), _fmt_frac(value)]], out)
    return 0


def _cmd_enumerate(args, out):
    t = lookup_type(args.type)
    weight = int(args.weight[1:])
    target = Fraction(args.N)
    vectors = atomic.enumerate_atomic(t, weight, target, args.lattice)
    if args.format == "json":
        _emit_json({"type": args.type, "weight": args.weight, "lattice": args.lattice,
                    "N": args.N,
                    "elements": [[_fmt_frac(x) for x in v.coords] for v in vectors]}, out)
    else:
        _emit_csv(["type", "weight", "lattice", "N", "coords"],
                  [[args.type, args.weight, args.lattice, str(args.N), _fmt_tuple(v.coords)]
                   for v in vectors], out)
    return 0


def _cmd_solve(args, out):
    case = param.get_case(args.case)
    k = case.equation_value(args.N)
    sols = solve_diagonal(case.form, k)
    if args.format == "json":
        _emit_json({"case": args.case, "N": args.N, "k": k,
                    "form": list(case.form), "solutions": [list(s) for s in sols]}, out)
    else:
        _emit_csv(["case", "N", "k", "solutions"],
                  [[args.case, str(args.N), str(k), _cell(sols)]], out)
    return 0


def _cmd_table(args, out):
    spec = FIGURES[args.figure]
    max_n = args.max_N if args.max_N is not None else spec["default_max_n"]
    header, rows = figure_rows(args.figure, max_n)
    if args.format == "json":
        _emit_json({"figure": args.figure,
                    "rows": [dict(zip(header, row)) for row in rows]}, out)
    else:
        _emit_csv(header, rows, out)
    return 0


def _cmd_verify(args, out):
    if args.N is not None:
        ns = [args.N]
    else:
        max_n = args.max_N if args.max_N is not None else 20
        ns = list(range(max_n + 1))
    reports = _sweep(_verify_one, [(args.case, n) for n in ns])
    return _report_output(reports, args.format, out)


def _cmd_conjecture(args, out):
    max_n = args.max_N if args.max_N is not None else 20
    reports = _sweep(_conjecture_one, list(range(max_n + 1)))
    return _report_output(reports, args.format, out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="corelat",
        description="Atomic lengths, generalised cores, and Pell-type sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_format=True):
        p.add_argument("--seed", type=int, default=None,
                       help="accepted and ignored; computation is deterministic")
        if with_format:
            p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("atomic-length", help="evaluate the statistic on a vector")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", choices=("L0", "L1"), default="L0")
    p.add_argument("--coords", required=True,
                   help="comma-separated stored coordinates, e.g. '1,-3'")
    common(p)
    p.set_defaults(func=_cmd_atomic_length)

    p = sub.add_parser("enumerate", help="lattice points of a given atomic length")
    p.add_argument("--type", required=True)
    p.add_argument("--weight", choices=("L0", "L1"), default="L0")
    p.add_argument("--lattice", choices=("M", "L"), default=None)
    p.add_argument("--N", required=True)
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("solve", help="integer solutions of a case's equation")
    p.add_argument("--case", required=True)
    p.add_argument("--N", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("table", help="reproduce a solution table")
    p.add_argument("--figure", choices=tuple(FIGURES), required=True)
    p.add_argument("--max-N", dest="max_N", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="run a case verifier over a range of N")
    p.add_argument("--case", required=True,
                   help="one of %s or HYP:<type>" % (", ".join(VERIFY_CASES),))
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--max-N", dest="max_N", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture-a3", help="orbit-coverage conjecture sweep")
    p.add_argument("--max-N", dest="max_N", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "lattice", None) is None and args.command == "enumerate":
        args.lattice = "L" if getattr(args, "weight", "L0") == "L1" else "M"
    try:
        return args.func(args, sys.stdout)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
