"""
Command-line front end: statistics on single inputs, table reproduction,
verification suites, and scatter-data generation.

Exit codes: 0 all checks pass, 1 an assertion failed, 2 usage or parse
error, 3 a sampled stability scan found a counterexample (a finding, not
a failure: the full witness is in the output).

Every command is deterministic given its flags; JSON output carries a
schema version and canonical ordering so reruns are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import factorial

from . import bijections as bj
from . import binwords as bw
from . import perms
from . import realroot as rr
from . import series as sr
from . import stats as st
from .polynomials import peak_poly, runsorted_descent_poly

SCHEMA = 1


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _csv_text(header: list[str], rows: list[list]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_report(
    report: dict,
    fmt: str,
    out: str | None,
    human: str,
    csv_data: tuple[list[str], list[list]] | None = None,
) -> None:
    if fmt == "json":
        _emit(json.dumps(report, sort_keys=True), out)
    elif fmt == "csv" and csv_data is not None:
        _emit(_csv_text(*csv_data), out)
    else:
        _emit(human, out)


# ---------------------------------------------------------------------------
# stat
# ---------------------------------------------------------------------------

_PERM_STATS = ("runs", "runsort", "des", "pkv", "spv", "rs", "maj", "inv")
_WORD_STATS = ("runs", "runsort", "des", "maj", "inv")


def cmd_stat(args: argparse.Namespace) -> int:
    which = args.which
    try:
        if args.perm is not None:
            p = perms.parse_perm(args.perm)
            values: dict[str, object] = {
                "runs": "|".join(",".join(map(str, r)) for r in perms.runs(p)),
                "runsort": perms.format_perm(perms.runsort(p)),
                "des": perms.format_int_set(perms.descent_set(p)),
                "pkv": perms.format_int_set(perms.peak_values(p)),
                "spv": perms.format_int_set(perms.spv(p)),
                "rs": perms.format_int_set(perms.run_starts(p)),
                "maj": str(perms.maj(p)),
                "inv": str(perms.inversions(p)),
            }
            source = args.perm
        else:
            w = args.word.strip()
            if w and set(w) - {"0", "1"}:
                raise ValueError(f"not a binary word: {w!r}")
            letters = tuple(int(c) for c in w)
            values = {
                "runs": "|".join(bw.bw_runs(w)),
                "runsort": bw.bw_runsort(w),
                "des": perms.format_int_set(perms.descent_set(letters)),
                "maj": str(perms.maj(letters)),
                "inv": str(perms.inversions(letters)),
            }
            source = w
        if which not in values:
            raise ValueError(f"--which {which} not available for this input")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"schema": SCHEMA, "input": source, "which": which, "value": values[which]}
    _emit_report(
        report,
        args.format,
        args.out,
        str(values[which]),
        csv_data=(["input", "which", "value"], [[source, which, values[which]]]),
    )
    return 0


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def cmd_tables(args: argparse.Namespace) -> int:
    make = runsorted_descent_poly if args.which == "A" else peak_poly
    rows = {n: make(n) for n in range(1, args.max_n + 1)}
    report = {
        "schema": SCHEMA,
        "which": args.which,
        "rows": {str(n): {"human": p.human(), "coeffs": p.to_json()} for n, p in rows.items()},
    }
    human = "\n".join(f"{n}  {p.human()}" for n, p in rows.items())
    csv_rows = [[n, p.human(), json.dumps(p.to_json())] for n, p in rows.items()]
    _emit_report(
        report, args.format, args.out, human,
        csv_data=(["n", "polynomial", "coeffs"], csv_rows),
    )
    return 0


# ---------------------------------------------------------------------------
# figure
# ---------------------------------------------------------------------------

def cmd_figure(args: argparse.Namespace) -> int:
    _emit(st.figure_csv(args.n, args.seed), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _suite_eta(args) -> dict:
    n = args.n or 7
    table = bj.build_peak_transport(n)
    bad = []
    for sig, img in table.items():
        if perms.peak_values(sig) != perms.spv(img) or perms.run_starts(sig) != perms.run_starts(img):
            bad.append([list(sig), list(img)])
    ok = not bad and len(table) == factorial(n) and len(set(table.values())) == factorial(n)
    return {"schema": SCHEMA, "suite": "eta", "n": n, "verdict": ok, "failures": bad[:10]}


def _suite_interlacing(args) -> dict:
    rep = rr.verify_interlacing_family(args.family or "R", args.max_n or 25)
    rep["suite"] = "interlacing"
    return rep


def _suite_same_phase(args) -> dict:
    family = args.family or "Q"
    n_max = args.max_n or 8
    samples = args.samples
    if args.parallel > 1:
        from multiprocessing import Pool

        chunk = (samples + args.parallel - 1) // args.parallel
        jobs = [
            (family, n_max, min(chunk, samples - start), args.seed, start)
            for start in range(0, samples, chunk)
        ]
        with Pool(args.parallel) as pool:
            parts = pool.starmap(rr.conjecture_scan, jobs)
        failures = sorted(
            (f for part in parts for f in part["failures"]),
            key=lambda d: (d["n"], d["sample"]),
        )
        rep = {
            "schema": SCHEMA,
            "family": family,
            "max_n": n_max,
            "samples": samples,
            "seed": args.seed,
            "verdict": not failures,
            "failures": failures,
        }
    else:
        rep = rr.conjecture_scan(family, n_max, samples, args.seed)
    rep["suite"] = "same-phase"
    return rep


def _suite_egf(args) -> dict:
    order = args.order or 11
    reports = {
        "runsorted": sr.egf_runsorted_report(order),
        "peaks": sr.egf_peaks_report(min(order, 10)),
        "binary": sr.egf_binary_report(max(order, 12)),
        "sheffer": sr.sheffer_product_check(min(order, 10)),
    }
    means = sr.expected_peaks_series(10)
    ok = (
        reports["runsorted"]["ok"]
        and reports["peaks"]["ok"]
        and reports["binary"]["ok"]
        and reports["sheffer"]["identity_holds"]
        and means[5] == 1
    )
    return {"schema": SCHEMA, "suite": "egf", "verdict": ok, "reports": reports}


def _suite_binary(args) -> dict:
    top = args.max_n or 10
    problems = []
    table = bw.product_count_table(top, top)
    for tot in range(0, top + 1):
        for a in range(tot + 1):
            b = tot - a
            cnt = bw.count_runsorted_words(a, b)
            mip = bw.maj_pair_count(a, b)
            want = table[a][b]
            if (a >= 1 and b >= 1) or tot == 0:
                if not (cnt == want == mip):
                    problems.append({"a": a, "b": b, "rsw": cnt, "gf": want, "mip": mip})
            elif not (cnt == 1 and want == 0 and mip == 0):
                problems.append({"a": a, "b": b, "rsw": cnt, "gf": want, "mip": mip})
    for n in range(0, 13):
        if len(bw.symmetric_fixed_words(n)) != bw.partition_count(n):
            problems.append({"fixed_points_n": n})
    roselle = bw.roselle_identity_check(4, 6, 6)
    if not roselle["ok"]:
        problems.append({"roselle": roselle})
    return {
        "schema": SCHEMA,
        "suite": "binary",
        "max_n": top,
        "verdict": not problems,
        "failures": problems,
        "note": "pure words 0^a and 1^b are run-sorted but lie outside the "
        "positive-pair product formula; both sides are asserted as such",
    }


def _suite_mip(args) -> dict:
    bad = []
    if args.a is not None and args.b is not None:
        pairs = [(args.a, args.b)]
        top = args.a + args.b
    else:
        top = args.max_n or 10
        pairs = [(a, tot - a) for tot in range(top + 1) for a in range(tot + 1)]
    table = bw.product_count_table(top, top)
    for a, b in pairs:
        want = table[a][b] if ((a >= 1 and b >= 1) or a + b == 0) else 0
        got = bw.maj_pair_count(a, b)
        if got != want:
            bad.append({"a": a, "b": b, "got": got, "want": want})
    return {"schema": SCHEMA, "suite": "mip", "max_n": top, "verdict": not bad, "failures": bad}


def _suite_golden(args) -> dict:
    ids = [args.id] if args.id else sorted(st.GOLDEN)
    reports = [st.golden_check(i) for i in ids]
    return {
        "schema": SCHEMA,
        "suite": "golden",
        "verdict": all(r["ok"] for r in reports),
        "reports": reports,
    }


def _suite_admissibility(args) -> dict:
    top = (args.max_n or 7) - 1
    bad = []
    for m in range(2, top + 1):
        for p in perms.enumerate_sn(m):
            for a in range(1, m + 1):
                i = p.index(a)
                if i + 1 < m and p[i + 1] in perms.spv(p):
                    if bj.is_peak_admissible(p, a) != bj.peak_admissible_by_definition(p, a):
                        bad.append({"kind": "peak", "p": list(p), "a": a})
                if a in perms.slope_set(p):
                    if bj.is_slope_admissible(p, a) != bj.slope_admissible_by_definition(p, a):
                        bad.append({"kind": "slope", "p": list(p), "a": a})
    return {
        "schema": SCHEMA,
        "suite": "admissibility",
        "max_n": top + 1,
        "verdict": not bad,
        "failures": bad[:10],
    }


_SUITES = {
    "eta": _suite_eta,
    "interlacing": _suite_interlacing,
    "same-phase": _suite_same_phase,
    "egf": _suite_egf,
    "binary": _suite_binary,
    "mip": _suite_mip,
    "golden": _suite_golden,
    "admissibility": _suite_admissibility,
}


def cmd_verify(args: argparse.Namespace) -> int:
    report = _SUITES[args.suite](args)
    ok = report["verdict"]
    human = f"{args.suite}: {'pass' if ok else 'FAIL'}"
    if not ok:
        human += "\n" + json.dumps(report.get("failures", report), sort_keys=True, default=str)
    n_fail = len(report.get("failures", [])) if isinstance(report.get("failures"), list) else 0
    _emit_report(
        report, args.format, args.out, human,
        csv_data=(["suite", "verdict", "failures"], [[args.suite, ok, n_fail]]),
    )
    if ok:
        return 0
    return 3 if args.suite == "same-phase" else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rslab",
        description="Exact run-sorting toolkit: statistics, tables, verification suites.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("human", "json", "csv"), default="human")
        p.add_argument("--out", metavar="PATH", default=None)

    p_stat = sub.add_parser("stat", help="one statistic of one permutation or binary word")
    src = p_stat.add_mutually_exclusive_group(required=True)
    src.add_argument("--perm", help="comma-separated one-line permutation")
    src.add_argument("--word", help="binary word over 0/1")
    p_stat.add_argument("--which", required=True, choices=sorted(set(_PERM_STATS) | set(_WORD_STATS)))
    common(p_stat)
    p_stat.set_defaults(func=cmd_stat)

    p_tab = sub.add_parser("tables", help="descent/peak polynomial tables")
    p_tab.add_argument("--which", required=True, choices=("A", "peaks"))
    p_tab.add_argument("--max-n", type=int, default=9)
    common(p_tab)
    p_tab.set_defaults(func=cmd_tables)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=sorted(_SUITES))
    p_ver.add_argument("--n", type=int, default=None)
    p_ver.add_argument("--max-n", type=int, default=None)
    p_ver.add_argument("--a", type=int, default=None)
    p_ver.add_argument("--b", type=int, default=None)
    p_ver.add_argument("--order", type=int, default=None)
    p_ver.add_argument("--samples", type=int, default=100)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--family", default=None)
    p_ver.add_argument("--id", default=None)
    p_ver.add_argument("--parallel", type=int, default=1)
    common(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_fig = sub.add_parser("figure", help="scatter CSV of a run-sorted random permutation")
    p_fig.add_argument("--n", type=int, required=True)
    p_fig.add_argument("--seed", type=int, default=0)
    common(p_fig)
    p_fig.set_defaults(func=cmd_figure)

    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, perms.CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
