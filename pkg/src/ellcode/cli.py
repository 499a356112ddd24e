"""Command-line front-end: construct, verify, transform, eaqecc, search.

Exit codes: 0 success, 1 verification failure, 2 usage or schema error.
Output files are written atomically (temp file + rename) and are
byte-reproducible for identical configurations.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from typing import Optional, Sequence

from . import eaqecc, isodual, search
from ._version import __version__
from .gf import FieldError, FieldSpec
from .curve import Curve, CurveError
from .code import CodeError
from .isodual import (CertificateSchemaError, ConstructionError,
                      ConstructionInput, IsoDualCertificate, PairSelection,
                      VerificationError)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ellcode-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_certificate(path: str) -> IsoDualCertificate:
    with open(path) as handle:
        return IsoDualCertificate.from_json(handle.read())


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip() != ""]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ellcode",
        description="iso-dual MDS codes on elliptic curves over small fields")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="run a construction, write a certificate")
    p.add_argument("--field", required=True,
                   help="field spec, e.g. p=2,m=4,mod=1,1,0,0,1")
    p.add_argument("--curve", required=True,
                   help="a1,a2,a3,a4,a6 as canonical encodings")
    p.add_argument("--k", required=True, type=int, help="code dimension (even)")
    p.add_argument("--construction", required=True, type=int, choices=(1, 2))
    p.add_argument("--pairs-x", help="explicit pair x-coordinates, comma separated")
    p.add_argument("--p-torsion", type=int,
                   help="take the odd-order set from E[r] minus identity")
    p.add_argument("--torsion", help="construction 2: indices a,b of the "
                                     "2-torsion points to use (default 1,2)")
    p.add_argument("--out", default="certificate.json", help="certificate path")

    p = sub.add_parser("verify", help="re-run all invariants of a certificate")
    p.add_argument("certificate")

    p = sub.add_parser("transform", help="self-dual or LCD scaling of a certificate")
    p.add_argument("certificate")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--selfdual", action="store_true")
    group.add_argument("--lcd", action="store_true")
    p.add_argument("--budget", type=int, default=2000,
                   help="LCD search budget (hull evaluations)")
    p.add_argument("--out", help="write the transformed code as JSON")

    p = sub.add_parser("eaqecc", help="entanglement-assisted parameters of a certificate")
    p.add_argument("certificate", nargs="+")
    p.add_argument("--out", help="write the table")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("search", help="bound tables, curve census, lemma search")
    p.add_argument("--table", required=True, choices=("bounds", "census", "lemma-max"))
    p.add_argument("--q", help="comma-separated prime powers")
    p.add_argument("--achieve", action="store_true",
                   help="bounds: also construct achieving certificates")
    p.add_argument("--group", help="lemma-max: group as d1xd2, e.g. 2x6")
    p.add_argument("--n", type=int, help="lemma-max: subset size (even)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized reporting features")
    p.add_argument("--out", help="write the table")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        spec = FieldSpec.from_string(args.field)
        curve = Curve.from_string(spec, args.curve)
        if args.pairs_x and args.p_torsion:
            raise ConstructionError("--pairs-x and --p-torsion are exclusive")
        if args.pairs_x:
            selection = PairSelection("pairs_x", pairs_x=tuple(_int_list(args.pairs_x)))
        elif args.p_torsion:
            selection = PairSelection("torsion", r=args.p_torsion)
        else:
            selection = PairSelection()
        torsion_choice = None
        if args.torsion:
            pair = _int_list(args.torsion)
            if len(pair) != 2:
                raise ConstructionError("--torsion needs exactly two indices")
            torsion_choice = (pair[0], pair[1])
        inp = ConstructionInput(curve, args.k, args.construction,
                                torsion_choice=torsion_choice,
                                pair_selection=selection)
        cert = isodual.construct(inp)
    except (FieldError, CurveError, CodeError, ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    _atomic_write(args.out, cert.to_json())
    print(f"[{cert.n},{cert.k},{cert.min_distance}] hull={cert.hull_dim} "
          f"iso_dual={str(cert.iso_dual).lower()} "
          f"mds_witness={cert.mds_subset_count} -> {args.out}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        cert = _load_certificate(args.certificate)
        failures = isodual.verify_certificate(cert)
    except (OSError, CertificateSchemaError) as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if failures:
        print(f"verification failed: {failures[0]} "
              f"(all failures: {', '.join(failures)})", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    print("certificate verifies")
    return EXIT_OK


def _cmd_transform(args: argparse.Namespace) -> int:
    try:
        cert = _load_certificate(args.certificate)
    except (OSError, CertificateSchemaError) as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.selfdual:
            u, code = isodual.selfdual_transform(cert)
            kind = "selfdual"
            hull = code.hull_dim()
        else:
            result = isodual.lcd_transform(cert, budget=args.budget)
            if result is None:
                print("lcd: no scaling found within budget", file=sys.stderr)
                return EXIT_VERIFY_FAIL
            u, code = result
            kind = "lcd"
            hull = 0
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    print(f"{kind}: hull={hull} u={','.join(str(e) for e in u.entries)}")
    if args.out:
        import json
        doc = {"transform": kind, "source_certificate_n": cert.n,
               "u": list(u.entries), "hull_dim": hull,
               "generator_matrix": [list(r) for r in code.matrix]}
        _atomic_write(args.out,
                      json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    return EXIT_OK


def _cmd_eaqecc(args: argparse.Namespace) -> int:
    items = []
    try:
        for path in args.certificate:
            cert = _load_certificate(path)
            params = eaqecc.derive_from_certificate(cert)
            items.append((cert, params))
    except (OSError, CertificateSchemaError) as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except eaqecc.EaqeccError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for cert, params in items:
        print(f"{params.label()} mds={str(params.mds).lower()}")
    if args.out:
        rows = eaqecc.table_rows(items)
        text = eaqecc.rows_to_csv(rows) if args.format == "csv" \
            else eaqecc.rows_to_json(rows)
        _atomic_write(args.out, text)
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    try:
        if args.table == "bounds":
            if not args.q:
                raise ValueError("--q is required for the bounds table")
            qs = _int_list(args.q)
            rows = [r.to_dict() for r in
                    search.bound_table(qs, achieve=args.achieve, progress=True)]
            columns = ["q", "case", "bound_n", "achieved_n", "witness"]
        elif args.table == "census":
            if not args.q:
                raise ValueError("--q is required for the census table")
            rows = []
            for q in _int_list(args.q):
                for curve, order, structure in search.enumerate_curves(q, progress=True):
                    rows.append({"q": q, "curve": curve.to_string(), "order": order,
                                 "d1": structure.d1, "d2": structure.d2})
            columns = ["q", "curve", "order", "d1", "d2"]
        else:
            if not args.group or args.n is None:
                raise ValueError("lemma-max needs --group d1xd2 and --n")
            d1, d2 = (int(t) for t in args.group.lower().split("x"))
            hits = search.lemma_max_search(search.AbelianGroupSpec(d1, d2), args.n)
            rows = [{"group": f"{d1}x{d2}", "n": args.n,
                     "subset": ";".join(f"{i},{j}" for i, j in combo),
                     "g": f"{g[0]},{g[1]}"} for combo, g in hits]
            print(f"{len(rows)} counterexample(s)")
            columns = ["group", "n", "subset", "g"]
    except (ValueError, CurveError, ConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    if args.out:
        text = search.rows_to_csv(rows, columns) if args.format == "csv" \
            else search.rows_to_json(rows)
        _atomic_write(args.out, text)
    else:
        for row in rows:
            print(" ".join(f"{c}={row.get(c)}" for c in columns))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "transform": _cmd_transform,
        "eaqecc": _cmd_eaqecc,
        "search": _cmd_search,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
