"""Command-line front end.

Exit codes: 0 success, 1 usage or invalid input, 2 unsupported shape,
3 verification failure, 4 invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from .core import (
    BudgetExceeded,
    DomainError,
    Filling,
    FundExpansion,
    InvariantViolation,
    NotSymmetricError,
    SchurExpansion,
    UnsupportedShapeError,
    as_partition,
    as_perm,
    dumps,
    format_word,
)
from .dual_equivalence import KINDS, MU, ClassPartition, class_fund_gf, to_dot
from .enumeration import super_standard_table
from .folding import phi_mu
from .macdonald import BOTH, FOLDING, ORACLE, kostka_macdonald, macdonald_fund
from .schur import decompose_to_schur, enumerate_syt
from .stats import (
    inverse_descents,
    maj_mu,
    inv_mu,
    mu_descent_cells,
    mu_inversion_pairs,
    stats_fast,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2
EXIT_VERIFY = 3
EXIT_INVARIANT = 4

FORMATS = ("text", "json", "csv", "latex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ----------------------------------------------------------------------------
# rendering

def _lam_text(lam) -> str:
    return " ".join(str(p) for p in lam)


def _set_text(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def render_rows(header: list[str], rows: list[list[str]], fmt: str) -> str:
    """Tabular output shared by every command; ``json`` is handled by callers."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "latex":
        lines = ["\\begin{tabular}{" + "l" * len(header) + "}", " & ".join(header) + " \\\\", "\\hline"]
        lines += [" & ".join(f"${c}$" for c in r) + " \\\\" for r in rows]
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    widths = [max([len(h)] + [len(r[k]) for r in rows]) for k, h in enumerate(header)]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(out) + "\n"


def render_schur(s: SchurExpansion, fmt: str) -> str:
    if fmt == "json":
        return dumps(s) + "\n"
    if fmt == "latex":
        rows = [[_lam_text(lam), c.latex()] for lam, c in s.coeffs.items()]
    else:
        rows = [[_lam_text(lam), str(c)] for lam, c in s.coeffs.items()]
    return render_rows(["lambda", "coeff"], rows, fmt)


def render_fund(f: FundExpansion, fmt: str) -> str:
    if fmt == "json":
        return dumps(f) + "\n"
    rows = [[_set_text(D), c.latex() if fmt == "latex" else str(c)] for D, c in f.coeffs.items()]
    return render_rows(["D", "coeff"], rows, fmt)


def parse_table(text: str, fmt: str = "json") -> SchurExpansion:
    """Read back what :func:`render_schur` wrote in JSON."""
    if fmt != "json":
        raise DomainError("only JSON tables can be parsed")
    return SchurExpansion.from_json(json.loads(text))


# ----------------------------------------------------------------------------
# commands

def cmd_stats(args) -> tuple[int, str]:
    mu = as_partition(args.mu)
    f = Filling(mu, as_perm(args.word))
    inv, maj = inv_mu(f), maj_mu(f)
    data = {
        "mu": list(mu),
        "word": format_word(f.word),
        "ides": sorted(inverse_descents(f.word)),
        "descent_cells": [{"row": c.row, "col": c.col, "entry": f.entry(c)} for c in mu_descent_cells(f)],
        "inversion_pairs": [list(p) for p in mu_inversion_pairs(f)],
        "maj": maj,
        "inv": inv,
        "weight": {"q": inv, "t": maj},
    }
    if args.format == "json":
        return EXIT_OK, json.dumps(data, sort_keys=True) + "\n"
    rows = [
        ["shape", _lam_text(mu)],
        ["word", data["word"]],
        ["iDes", _set_text(data["ides"])],
        ["descent cells", " ".join(str(d["entry"]) for d in data["descent_cells"])],
        ["inversion pairs", " ".join(f"({a},{b})" for a, b in data["inversion_pairs"])],
        ["maj", str(maj)],
        ["inv", str(inv)],
        ["weight", f"q^{inv}*t^{maj}"],
    ]
    return EXIT_OK, render_rows(["field", "value"], rows, args.format)


def cmd_hmu(args) -> tuple[int, str]:
    mu = as_partition(args.mu)
    f = macdonald_fund(mu, args.threads, args.max_n)
    if args.basis == "fundamental":
        return EXIT_OK, render_fund(f, args.format)
    try:
        s = decompose_to_schur(f)
    except NotSymmetricError as exc:
        raise InvariantViolation(str(exc)) from exc
    return EXIT_OK, render_schur(s, args.format)


def cmd_kostka(args) -> tuple[int, str]:
    table = kostka_macdonald(as_partition(args.mu), args.method, args.threads, args.max_n)
    if args.format == "json":
        return EXIT_OK, dumps(table) + "\n"
    return EXIT_OK, render_schur(table.entries, args.format)


def cmd_classes(args) -> tuple[int, str]:
    mu = as_partition(args.mu) if args.mu else None
    if args.kind == MU and mu is None:
        raise UsageError("--kind mu needs --mu")
    n = args.n if args.n is not None else (sum(mu) if mu else None)
    if n is None:
        raise UsageError("classes needs --n or --mu")
    if n > (args.max_n or 8):
        raise BudgetExceeded(f"listing classes of S_{n} exceeds the limit n <= {args.max_n or 8}")
    classes = ClassPartition(n, args.kind, mu, keep_edges=bool(args.dot)).classes()
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(classes))
    records = []
    for c in classes:
        weights = sorted({stats_fast(mu, w) for w in c.members}) if mu else []
        try:
            schur = decompose_to_schur(class_fund_gf(c, mu if args.kind == MU else None))
        except NotSymmetricError:
            schur = None
        records.append((c, weights, schur))
    if args.format == "json":
        data = [
            {
                "representative": format_word(c.representative),
                "size": len(c),
                "members": [format_word(w) for w in c.members],
                "weights": [{"q": a, "t": b} for a, b in weights],
                "schur": schur.to_json() if schur is not None else None,
            }
            for c, weights, schur in records
        ]
        return EXIT_OK, json.dumps(data, sort_keys=True) + "\n"
    rows = [
        [
            format_word(c.representative),
            str(len(c)),
            " ".join(f"q^{a}t^{b}" for a, b in weights) or "-",
            str(schur) if schur is not None else "not symmetric",
        ]
        for c, weights, schur in records
    ]
    return EXIT_OK, render_rows(["representative", "size", "weights", "schur"], rows, args.format)


def cmd_fold(args) -> tuple[int, str]:
    mu = as_partition(args.mu)
    w = as_perm(args.word)
    steps = phi_mu(mu, w, trace=True)
    if not args.trace:
        final = steps[-1].word
        if args.format == "json":
            return EXIT_OK, json.dumps({"mu": list(mu), "word": format_word(final)}) + "\n"
        return EXIT_OK, format_word(final) + "\n"
    records = []
    for s in steps:
        inv, maj = stats_fast(s.shape, s.word)
        records.append((s, inv, maj, sorted(inverse_descents(s.word))))
    if args.format == "json":
        data = [
            {"label": s.label, "word": format_word(s.word), "shape": list(s.shape),
             "inv": inv, "maj": maj, "ides": ides}
            for s, inv, maj, ides in records
        ]
        return EXIT_OK, json.dumps(data, sort_keys=True) + "\n"
    rows = [
        [s.label, format_word(s.word), _lam_text(s.shape), str(inv), str(maj), _set_text(ides)]
        for s, inv, maj, ides in records
    ]
    return EXIT_OK, render_rows(["step", "word", "shape", "inv", "maj", "iDes"], rows, args.format)


def cmd_schur(args) -> tuple[int, str]:
    if (args.decompose is None) == (args.syt is None):
        raise UsageError("schur needs exactly one of --decompose or --syt")
    if args.syt is not None:
        tableaux = enumerate_syt(as_partition(args.syt))
        if args.format == "json":
            data = [{"rows": [list(r) for r in T.rows], "reading_word": format_word(T.reading_word)}
                    for T in tableaux]
            return EXIT_OK, json.dumps(data, sort_keys=True) + "\n"
        rows = [[format_word(T.reading_word), " / ".join(" ".join(map(str, r)) for r in T.rows)]
                for T in tableaux]
        return EXIT_OK, render_rows(["reading word", "rows (bottom first)"], rows, args.format)
    text = args.decompose
    if text == "-":
        text = sys.stdin.read()
    try:
        f = FundExpansion.from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"--decompose expects a JSON fundamental expansion: {exc}") from exc
    return EXIT_OK, render_schur(decompose_to_schur(f), args.format)


def cmd_superstandard(args) -> tuple[int, str]:
    lam = as_partition(args.lam)
    perms = super_standard_table(sum(lam), args.max_n).get(lam, [])
    if args.format == "json":
        return EXIT_OK, json.dumps({"lambda": list(lam), "perms": [format_word(w) for w in perms]}) + "\n"
    return EXIT_OK, render_rows(["word"], [[format_word(w)] for w in perms], args.format)


def cmd_verify(args) -> tuple[int, str]:
    suites = args.suite or list(SUITES)
    lines, ok = [], True
    t0 = time.perf_counter()
    for name in suites:
        for check in run_suite(name, args.max_n or 8, args.threads):
            ok &= check.passed
            lines.append(f"[{name}] {check.line()}")
    lines.append(f"{'PASS' if ok else 'FAIL'} overall ({time.perf_counter() - t0:.2f}s)")
    return (EXIT_OK if ok else EXIT_VERIFY), "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: MACFOLD_THREADS or 1)")
    common.add_argument("--max-n", type=int, default=None, help="enumeration limit on n")
    common.add_argument("--output", "-o", default=None, help="write output here instead of stdout")

    p = _Parser(prog="macfold", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("stats", parents=[common], help="statistics of one filling")
    s.add_argument("--mu", required=True)
    s.add_argument("--word", required=True)

    s = sub.add_parser("hmu", parents=[common], help="H~_mu by enumeration")
    s.add_argument("--mu", required=True)
    s.add_argument("--basis", choices=("fundamental", "schur"), default="schur")

    s = sub.add_parser("kostka", parents=[common], help="Schur coefficients of H~_mu")
    s.add_argument("--mu", required=True)
    s.add_argument("--method", choices=(ORACLE, FOLDING, BOTH), default=ORACLE)

    s = sub.add_parser("classes", parents=[common], help="equivalence classes of S_n")
    s.add_argument("--n", type=int)
    s.add_argument("--kind", choices=KINDS, default="standard")
    s.add_argument("--mu")
    s.add_argument("--dot", help="also write a Graphviz file")

    s = sub.add_parser("fold", parents=[common], help="fold a permutation into a shape")
    s.add_argument("--mu", required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--trace", action="store_true")

    s = sub.add_parser("schur", parents=[common], help="Schur decomposition and tableaux")
    s.add_argument("--decompose", help="JSON fundamental expansion, or - for stdin")
    s.add_argument("--syt", help="list standard tableaux of this shape")

    s = sub.add_parser("superstandard", parents=[common], help="super-standard permutations")
    s.add_argument("--lam", required=True)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", action="append", choices=sorted(SUITES))
    return p


COMMANDS = {
    "stats": cmd_stats,
    "hmu": cmd_hmu,
    "kostka": cmd_kostka,
    "classes": cmd_classes,
    "fold": cmd_fold,
    "schur": cmd_schur,
    "superstandard": cmd_superstandard,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads is not None and args.threads < 1:
            raise UsageError("--threads must be positive")
        code, text = COMMANDS[args.command](args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except UnsupportedShapeError as exc:
        err.write(f"unsupported shape: {exc}\n")
        return EXIT_UNSUPPORTED
    except (ValueError, BudgetExceeded) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InvariantViolation as exc:
        err.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
