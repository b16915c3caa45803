"""Command line interface.

Subcommands:
  compute     invariant table for one curve (text, json, csv or latex)
  verify      run the self-check suites
  oracle-p1   finite-field recount on the line vs the formula
  specialize  numeric values at explicit Frobenius eigenvalues

Exit status: 0 on success, 1 when a verification or comparison fails,
2 on usage errors (argparse's convention).
"""

import argparse
import json
import sys

from .dt import CurveParams, idt_star, moduli_volume, omega
from .oracle_p1 import SUPPORTED_Q, compare_with_formula
from .verify import SUITES, run_suites
from .zeta import ZetaData, specialize_integer

SCHEMA_VERSION = 1


def _coeff_str(c):
    try:
        if c == int(c):
            return str(int(c))
    except (TypeError, ValueError):
        pass
    return str(c)


_LATEX_NAMES = {"q": "q", "t": "t", "u": "u"}


def _latex_var(name):
    if name in _LATEX_NAMES:
        return _LATEX_NAMES[name]
    return "\\%s_{%s}" % ("alpha" if name[0] == "a" else "z", name[1:])


def _mono_latex(table, exps):
    bits = []
    for nm, e in zip(table.names, exps):
        if not e:
            continue
        v = _latex_var(nm)
        bits.append(v if e == 1 else "%s^{%d}" % (v, e))
    return " ".join(bits) if bits else "1"


def poly_text(poly):
    if not poly.terms:
        return "0"
    pieces = []
    for e, c in poly.sorted_terms():
        mono = poly.table.format_exps(e)
        mag = _coeff_str(abs(c))
        if mono == "1":
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = "%s %s" % (mag, mono)
        pieces.append(("-" if c < 0 else "+", body))
    head_sign, head = pieces[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


def poly_latex(poly):
    if not poly.terms:
        return "0"
    pieces = []
    for e, c in poly.sorted_terms():
        mono = _mono_latex(poly.table, e)
        mag = _coeff_str(abs(c))
        if mono == "1":
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = "%s \\, %s" % (mag, mono)
        pieces.append(("-" if c < 0 else "+", body))
    head_sign, head = pieces[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in pieces[1:]:
        out += " %s %s" % (sign, body)
    return out


def poly_pairs(poly):
    """Deterministic [monomial string, coefficient string] pairs."""
    return [[poly.table.format_exps(e), _coeff_str(c)]
            for e, c in poly.sorted_terms()]


def _curve_from_args(args, parser):
    if args.canonical:
        if args.genus < 1:
            parser.error("canonical mode needs genus at least 1")
        ell = 2 * args.genus - 2
        if args.ell is not None and args.ell != ell:
            parser.error("canonical twist degree is fixed at 2g - 2 = %d" % ell)
        return CurveParams(genus=args.genus, ell=ell, mode="canonical")
    if args.ell is None:
        parser.error("--ell is required in twisted mode")
    return CurveParams(genus=args.genus, ell=args.ell)


def _cmd_compute(args, parser):
    cp = _curve_from_args(args, parser)
    polys = idt_star(cp, args.rmax) if args.rmax >= 1 else {}
    rows = []
    for r in sorted(polys):
        poly = polys[r]
        t1 = poly.set_var_one("t")
        hp = omega(cp, r, idt_poly=poly)
        row = {
            "r": r,
            "idt": poly,
            "idt_t1": t1,
            "omega": hp,
            "volume": (moduli_volume(cp, r, 1, idt_poly=poly)
                       if cp.mode == "twisted" else None),
        }
        if cp.mode == "canonical":
            row["A"] = t1
        rows.append(row)

    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "params": {"genus": cp.genus, "ell": cp.ell, "mode": cp.mode,
                       "rmax": args.rmax},
            "results": [],
        }
        for row in rows:
            entry = {
                "r": row["r"],
                "idt": poly_pairs(row["idt"]),
                "idt_t1": poly_pairs(row["idt_t1"]),
                "omega": {
                    "sign": row["omega"].sign,
                    "half_power_exponent": row["omega"].half,
                    "poly": poly_pairs(row["omega"].body),
                },
                "volume": poly_pairs(row["volume"]) if row["volume"] is not None
                          else None,
            }
            if "A" in row:
                entry["A"] = poly_pairs(row["A"])
            payload["results"].append(entry)
        print(json.dumps(payload, indent=2))
        return 0

    if args.format == "csv":
        print("r,field,monomial,coefficient")
        for row in rows:
            for field in ("idt", "idt_t1", "volume"):
                poly = row.get(field)
                if poly is None:
                    continue
                for mono, c in poly_pairs(poly):
                    print("%d,%s,%s,%s" % (row["r"], field, mono, c))
        return 0

    render = poly_latex if args.format == "latex" else poly_text
    print("curve: genus %d, twist degree %d, %s mode"
          % (cp.genus, cp.ell, cp.mode))
    for row in rows:
        hp = row["omega"]
        print("rank %d" % row["r"])
        print("  invariant      %s" % render(row["idt"]))
        print("  at t = 1       %s" % render(row["idt_t1"]))
        print("  weighted       %sq^(%d/2) * [%s]"
              % ("-" if hp.sign < 0 else "", hp.half, render(hp.body)))
        if row["volume"] is not None:
            print("  volume (d=1)   %s" % render(row["volume"]))
        if "A" in row:
            print("  A value        %s" % render(row["A"]))
    if not rows:
        print("(empty table: rmax = %d)" % args.rmax)
    return 0


def _cmd_verify(args, parser):
    if args.list:
        for name in SUITES:
            print("%-14s %s" % (name, SUITES[name][0]))
        return 0
    names = args.suite or None
    try:
        results, failures = run_suites(names)
    except KeyError as e:
        parser.error(str(e))
    for r in results:
        tag = "PASS" if r.ok is True else ("FAIL" if r.ok is False else "INFO")
        line = "%s  [%s] %s" % (tag, r.suite, r.label)
        if r.detail:
            line += "  (%s)" % r.detail
        print(line)
    checked = sum(1 for r in results if r.ok is not None)
    print("%d checks, %d failed" % (checked, failures), file=sys.stderr)
    return 1 if failures else 0


def _cmd_oracle(args, parser):
    try:
        count, formula, equal = compare_with_formula(args.rank, args.deg,
                                                     args.ell, args.q)
    except (ValueError, NotImplementedError) as e:
        parser.error(str(e))
    print("groupoid count   %s" % count)
    print("formula value    %s" % formula)
    print("MATCH" if equal else "MISMATCH")
    return 0 if equal else 1


def _cmd_specialize(args, parser):
    if args.trace is not None:
        zd = ZetaData.from_trace(args.q0, args.trace)
    elif args.weil:
        alphas = [complex(w) for w in args.weil.split(",")]
        zd = ZetaData.numeric(args.q0, alphas)
    else:
        parser.error("give either --trace (genus 1) or --weil a1,a2,...")
    cp = (CurveParams(genus=zd.genus, ell=2 * zd.genus - 2, mode="canonical")
          if args.canonical else CurveParams(genus=zd.genus, ell=args.ell))
    print("curve over F_%d with point counts %s"
          % (args.q0, zd.point_counts(3)))
    polys = idt_star(cp, args.rmax)
    for r in sorted(polys):
        val = specialize_integer(polys[r].set_var_one("t"), zd)
        print("rank %d value at t = 1: %d" % (r, val))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="higgsdt",
        description="Exact invariants of twisted Higgs bundles on a curve.")
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="invariant table for one curve")
    pc.add_argument("--genus", type=int, required=True)
    pc.add_argument("--ell", type=int, default=None,
                    help="twist degree (required unless --canonical)")
    pc.add_argument("--canonical", action="store_true",
                    help="canonical twist 2g - 2 instead of a positive twist")
    pc.add_argument("--rmax", type=int, default=6, help="largest rank computed")
    pc.add_argument("--format", choices=("text", "json", "csv", "latex"),
                    default="text")
    pc.set_defaults(fn=_cmd_compute)

    pv = sub.add_parser("verify", help="run the self-check suites")
    pv.add_argument("--suite", action="append",
                    help="suite name, repeatable (default: all)")
    pv.add_argument("--list", action="store_true", help="list suites and exit")
    pv.set_defaults(fn=_cmd_verify)

    po = sub.add_parser("oracle-p1",
                        help="brute-force recount on the line vs the formula")
    po.add_argument("--rank", type=int, required=True, choices=(1, 2))
    po.add_argument("--deg", type=int, required=True)
    po.add_argument("--ell", type=int, required=True)
    po.add_argument("--q", type=int, required=True, choices=SUPPORTED_Q)
    po.set_defaults(fn=_cmd_oracle)

    ps = sub.add_parser("specialize",
                        help="numeric invariants at chosen Frobenius eigenvalues")
    ps.add_argument("--q0", type=int, required=True, help="base field size")
    ps.add_argument("--trace", type=int, default=None,
                    help="genus-1 Frobenius trace (Hasse bound enforced)")
    ps.add_argument("--weil", type=str, default=None,
                    help="comma-separated eigenvalues, one per pair, "
                         "e.g. '1+1j' for genus 1")
    ps.add_argument("--ell", type=int, default=1)
    ps.add_argument("--canonical", action="store_true")
    ps.add_argument("--rmax", type=int, default=2)
    ps.set_defaults(fn=_cmd_specialize)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args, parser)


if __name__ == "__main__":
    sys.exit(main())
