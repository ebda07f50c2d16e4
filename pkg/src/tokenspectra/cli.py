"""Command-line interface.

Commands: orbits, matrix, spectrum, charpoly, verify.  Exit codes:
0 success, 1 verification mismatch or numeric failure, 2 bad arguments.
All configuration is by flags; no environment variables.  Eigenvalues
print with 4 decimals in text tables; CSV and JSON carry full precision.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import comb

import numpy as np

from . import twotoken
from .errors import (CountMismatchError, NumericFailureError,
                     ParameterDomainError, PhaseConsistencyError, PoleError,
                     SizeLimitError)
from .necklaces import count_burnside, count_moreau, count_polya, enumerate_orbits
from .polymatrix import build_poly_matrix
from .polymatrix import full_spectrum as overlift_spectrum
from .report import (SpectrumReport, max_multiset_deviation, multiset_contains,
                     multisets_close)
from .tokengraph import algebraic_connectivity, brute_spectrum


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _spectrum_by_method(method: str, n: int, k: int) -> SpectrumReport:
    if method == "brute":
        return brute_spectrum(n, k)
    if method == "overlift":
        return overlift_spectrum(n, k)
    if method == "contfrac":
        if k != 2:
            raise ParameterDomainError("method contfrac requires k = 2")
        return twotoken.spectrum_2token(n)
    raise ParameterDomainError(f"unknown method {method!r}")


def cmd_orbits(args) -> int:
    table = enumerate_orbits(args.n, args.k)
    burnside = count_burnside(args.n, args.k)
    polya = count_polya(args.n, args.k)
    moreau = count_moreau(args.n, args.k)
    aperiodic = sum(1 for p in table.periods if p == args.n)
    rows = [(i, "".join(map(str, rep)) if args.n <= 10 else str(rep), p)
            for i, (rep, p) in enumerate(zip(table.reps, table.periods))]
    if args.format == "json":
        _write(json.dumps({
            "n": args.n, "k": args.k,
            "representatives": [list(r) for r in table.reps],
            "periods": list(table.periods),
            "burnside": burnside, "polya": polya, "moreau": moreau,
            "enumerated": table.count,
        }, indent=2), args.out)
    elif args.format == "csv":
        lines = ["index,representative,period"]
        lines += [f"{i},{'-'.join(map(str, rep))},{p}"
                  for i, (rep, p) in enumerate(zip(table.reps, table.periods))]
        _write("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"orbits of {args.k}-subsets of Z_{args.n}: {table.count}"]
        lines += [f"  {i:3d}  {rep:<{args.n + 2}}  period {p}" for i, rep, p in rows]
        lines.append(f"counts: burnside={burnside} polya={polya} "
                     f"moreau={moreau}(aperiodic) enumerated={table.count}")
        _write("\n".join(lines) + "\n", args.out)
    if not (burnside == polya == table.count and moreau == aperiodic):
        print("error: counting routes disagree", file=sys.stderr)
        return 1
    return 0


def cmd_matrix(args) -> int:
    matrix = build_poly_matrix(args.n, args.k)
    balanced = args.exponents == "balanced"
    if args.format == "json":
        payload = {
            "n": args.n, "k": args.k, "order": matrix.order,
            "entries": [[{str(e): c for e, c in p.coeffs.items()}
                         for p in row] for row in matrix.entries],
            "text": [[p.render(balanced) for p in row] for row in matrix.entries],
        }
        _write(json.dumps(payload, indent=2), args.out)
    elif args.format == "latex":
        _write(matrix.render_latex(balanced) + "\n", args.out)
    elif args.format == "csv":
        lines = [",".join(f'"{p.render(balanced)}"' for p in row)
                 for row in matrix.entries]
        _write("\n".join(lines) + "\n", args.out)
    else:
        _write(matrix.render(balanced) + "\n", args.out)
    return 0


def _fmt4(value: float) -> str:
    text = f"{value:.4f}"
    return "0.0000" if text == "-0.0000" else text


def _audit_rows(report: SpectrumReport, n: int):
    """Per-sector table rows, conjugate sectors merged."""
    rows = []
    for r in range(n // 2 + 1):
        entries = sorted(report.sector_entries(r), key=lambda e: e.value)
        if not entries:
            continue
        label = f"r={r}"
        if 0 < r < n - r:
            label += f" (= r={n - r})"
        cells = [_fmt4(e.value) + ("" if e.kept else "*") for e in entries]
        rows.append((label, cells))
    return rows


def _spectrum_json(report: SpectrumReport) -> str:
    sectors = []
    if report.method != "brute":
        for r in range(report.n):
            entries = report.sector_entries(r)
            if not entries:
                continue
            sectors.append({
                "r": r,
                "eigenvalues": sorted(e.value for e in entries if e.kept),
                "discarded": sorted(e.value for e in entries if not e.kept),
            })
    return json.dumps({
        "n": report.n, "k": report.k, "method": report.method,
        "sectors": sectors, "kept": list(report.kept),
    }, indent=2)


def cmd_spectrum(args) -> int:
    if args.r is not None and not 0 <= args.r < args.n:
        raise ParameterDomainError(f"sector r={args.r} must lie in [0, {args.n})")
    report = _spectrum_by_method(args.method, args.n, args.k)
    status = 0
    check_note = ""
    if args.check_against:
        other = _spectrum_by_method(args.check_against, args.n, args.k)
        if multisets_close(report.kept, other.kept, args.tol):
            dev = max_multiset_deviation(report.kept, other.kept)
            check_note = (f"check {args.method} vs {args.check_against}: "
                          f"agree within {args.tol:g} (max deviation {dev:.2e})")
        else:
            check_note = (f"check {args.method} vs {args.check_against}: "
                          f"MISMATCH beyond {args.tol:g}")
            status = 1
    if args.format == "json":
        _write(_spectrum_json(report), args.out)
    elif args.format == "csv":
        lines = ["r,value,kept"]
        entries = report.entries
        if args.r is not None:
            entries = report.sector_entries(args.r)
        for e in sorted(entries, key=lambda e: (e.sector if e.sector is not None else -1, e.value)):
            sec = "" if e.sector is None else str(e.sector)
            lines.append(f"{sec},{e.value!r},{str(e.kept).lower()}")
        _write("\n".join(lines) + "\n", args.out)
    elif args.format == "latex":
        rows = _audit_rows(report, args.n)
        lines = ["\\begin{tabular}{l" + "c" * max((len(c) for _, c in rows), default=0) + "}"]
        lines += [label.replace("=", "$=$") + " & " + " & ".join(cells) + " \\\\"
                  for label, cells in rows]
        lines.append("\\end{tabular}")
        _write("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"F_{args.k}(C_{args.n}) spectrum, method {args.method}: "
                 f"{len(report.kept)} eigenvalues"]
        if args.audit and report.method != "brute":
            rows = _audit_rows(report, args.n)
            if args.r is not None:
                rows = [row for row in rows if row[0].startswith(f"r={args.r}")
                        or f"= r={args.r})" in row[0]]
            width = max(len(label) for label, _ in rows)
            for label, cells in rows:
                lines.append(f"  {label:<{width}}  " + "  ".join(cells))
            discarded = report.discarded
            lines.append(f"  discarded: {len(discarded)} "
                         f"({', '.join(f'{_fmt4(e.value)}@r={e.sector}' for e in discarded)})")
            lines.append("  values marked * are not eigenvalues of the token graph")
        elif args.r is not None:
            vals = sorted(e.value for e in report.sector_entries(args.r) if e.kept)
            lines.append(f"  r={args.r}: " + "  ".join(_fmt4(v) for v in vals))
        else:
            lines.append("  " + "  ".join(_fmt4(v) for v in report.kept))
        if check_note:
            lines.append(check_note)
        _write("\n".join(lines) + "\n", args.out)
    if status:
        print(check_note, file=sys.stderr)
    return status


def cmd_charpoly(args) -> int:
    coeffs = twotoken.charpoly_sector(args.n, args.r)
    roots = twotoken.sector_roots(args.n, args.r)
    lo = args.lo
    hi = args.hi if args.hi is not None else float(np.ceil(roots[-1]) + 1.0)
    samples = []
    if args.samples:
        poly = np.polynomial.Polynomial(coeffs[::-1])
        for x in np.linspace(lo, hi, args.samples):
            samples.append((float(x), float(poly(x))))
    if args.format == "json":
        _write(json.dumps({
            "n": args.n, "r": args.r,
            "coefficients": [float(c) for c in coeffs],
            "roots": [float(v) for v in roots],
            "samples": samples,
        }, indent=2), args.out)
    elif args.format == "csv":
        if samples:
            lines = ["lambda,phi"] + [f"{x!r},{y!r}" for x, y in samples]
        else:
            lines = ["degree,coefficient"]
            deg = len(coeffs) - 1
            lines += [f"{deg - i},{c!r}" for i, c in enumerate(coeffs)]
        _write("\n".join(lines) + "\n", args.out)
    else:
        lines = [f"sector polynomial for n={args.n}, r={args.r} "
                 f"(degree {len(coeffs) - 1}, monic)"]
        lines.append("coefficients: " + ", ".join(_fmt_coeff(c) for c in coeffs))
        lines.append("roots: " + "  ".join(f"{v:.4f}" for v in roots))
        lines.append(f"smallest root: {roots[0]:.4f}")
        if samples:
            lines.append("lambda,phi")
            lines += [f"{x!r},{y!r}" for x, y in samples]
        _write("\n".join(lines) + "\n", args.out)
    return 0


def _fmt_coeff(c: float) -> str:
    if c == int(c):
        return str(int(c))
    return repr(float(c))


def run_verification(n_max: int = 12, tol: float = 1e-8,
                     inject_defect: bool = False, echo=print):
    """Cross-method verification sweep up to n_max.

    Checks per (n, k): counting routes agree; orbit sizes add to
    C(n, k); over-lift kept spectrum equals brute force; discard count
    equals n*nu - C(n, k); for k = 2 the continued-fraction route agrees
    as well.  Per n: spectral containment along increasing k and equal
    algebraic connectivity.  Returns (failures, checks, spectra).
    """
    failures: list[str] = []
    checks = 0
    spectra = 0
    defect_pending = inject_defect

    def check(ok: bool, what: str):
        nonlocal checks
        checks += 1
        if not ok:
            failures.append(what)

    for n in range(3, n_max + 1):
        per_k: dict[int, SpectrumReport] = {}
        for k in range(1, n // 2 + 1):
            table = enumerate_orbits(n, k)
            nu = table.count
            check(count_burnside(n, k) == count_polya(n, k) == nu,
                  f"(n={n},k={k}) count identity")
            check(count_moreau(n, k) == sum(1 for p in table.periods if p == n),
                  f"(n={n},k={k}) aperiodic count")
            check(sum(table.periods) == comb(n, k),
                  f"(n={n},k={k}) orbit sizes")
            brute = brute_spectrum(n, k)
            spectra += 1
            per_k[k] = brute
            if defect_pending:
                lifted = _defective_spectrum(n, k)
                defect_pending = False
            else:
                lifted = overlift_spectrum(n, k)
            spectra += n
            check(multisets_close(brute.kept, lifted.kept, tol),
                  f"(n={n},k={k}) overlift vs brute")
            check(len(lifted.discarded) == n * nu - comb(n, k),
                  f"(n={n},k={k}) discard count")
            if k == 2:
                cf = twotoken.spectrum_2token(n)
                spectra += n
                check(multisets_close(brute.kept, cf.kept, tol),
                      f"(n={n},k={k}) contfrac vs brute")
        ks = sorted(per_k)
        for a, b in zip(ks, ks[1:]):
            check(multiset_contains(per_k[b].kept, per_k[a].kept, tol),
                  f"(n={n}) containment k={a} in k={b}")
        if len(ks) > 1:
            conns = [algebraic_connectivity(per_k[k]) for k in ks]
            check(max(conns) - min(conns) <= tol,
                  f"(n={n}) algebraic connectivity across k")
        echo(f"n={n}: checked k=1..{n // 2}"
             + ("" if not failures else f" ({len(failures)} failures so far)"))
    return failures, checks, spectra


def _defective_spectrum(n: int, k: int) -> SpectrumReport:
    """Over-lift spectrum with one matrix entry perturbed (negative control)."""
    report = overlift_spectrum(n, k)
    kept = list(report.kept)
    kept[0] += 1e-3
    return SpectrumReport(n, k, "overlift", report.entries, tuple(sorted(kept)))


def cmd_verify(args) -> int:
    failures, checks, spectra = run_verification(
        args.n_max, args.tol, inject_defect=args.inject_defect)
    print(f"{checks} checks, {spectra} spectra compared")
    if failures:
        print(f"FAILED: {failures[0]}" +
              (f" (and {len(failures) - 1} more)" if len(failures) > 1 else ""),
              file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tokenspectra",
        description="Laplacian spectra of k-token graphs of cycles")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_k=True):
        p.add_argument("--n", type=int, required=True, help="cycle length")
        if need_k:
            p.add_argument("--k", type=int, required=True, help="token count")
        p.add_argument("--format", choices=["text", "csv", "json", "latex"],
                       default="text")
        p.add_argument("--out", help="write output to this path")

    p = sub.add_parser("orbits", help="rotation orbits and the three counts")
    common(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("matrix", help="render the orbit polynomial matrix")
    common(p)
    p.add_argument("--exponents", choices=["canonical", "balanced"],
                   default="canonical",
                   help="canonical keeps exponents in [0,n); balanced shows "
                        "exponents above n/2 as negative powers")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("spectrum", help="compute the Laplacian spectrum")
    common(p)
    p.add_argument("--r", type=int, help="restrict output to one sector")
    p.add_argument("--method", choices=["brute", "overlift", "contfrac"],
                   default="overlift")
    p.add_argument("--audit", action="store_true",
                   help="per-sector table with discarded values marked *")
    p.add_argument("--check-against", choices=["brute", "overlift", "contfrac"],
                   help="exit 1 unless this method agrees within --tol")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("charpoly", help="two-token sector polynomial (k=2)")
    common(p, need_k=False)
    p.add_argument("--r", type=int, required=True, help="sector index")
    p.add_argument("--samples", type=int, default=0,
                   help="also emit this many (lambda, phi) samples")
    p.add_argument("--lo", type=float, default=0.0, help="sample range start")
    p.add_argument("--hi", type=float, default=None,
                   help="sample range end (default: past the largest root)")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="cross-method verification sweep")
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--inject-defect", action="store_true",
                   help=argparse.SUPPRESS)  # negative control for tests
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParameterDomainError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericFailureError, CountMismatchError, PoleError,
            PhaseConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
