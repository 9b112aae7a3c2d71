"""Command-line interface.

Usage:
    cartdet det torus 3 3 --method all
    cartdet nullity grid 3 3
    cartdet spectrum mobius 2 --format json
    cartdet table grid --range 1 3 --methods closed --format csv
    cartdet verify --suite mobius --max 24
    cartdet bench grid --sizes 10x10 7x7 --format json

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import timeit
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import verify
from .closed_forms import closed_det
from .exact import bareiss_det, nullity_of
from .graphs import FAMILIES, GraphFamily, adjacency_matrix, make_family, realize
from .report import METHODS, DetReport, det_report
from .spectra import family_spectrum, spectral_det

TWO_PARAM = ("grid", "torus", "cylinder")
FORMATS = ("csv", "json", "markdown")


class UsageError(Exception):
    """Bad parameters; reported on stderr with exit code 2."""


def fmt_float(x: float) -> str:
    """12 significant digits, negative zero printed as 0."""
    if x == 0:
        x = 0.0
    return format(x, ".12g")


def fmt_eigenvalue(x: float) -> str:
    # cos() residue around exact zeros (e.g. 2cos(pi/2)) is below 1e-12
    return fmt_float(round(x, 12))


def _json_float(x: float | None) -> float | None:
    return None if x is None else float(fmt_float(x))


def _family(kind: str, params: Sequence[int]) -> GraphFamily:
    try:
        return make_family(kind, *params)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


# ---------------------------------------------------------------- det


def cmd_det(args) -> int:
    f = _family(args.family, args.params)
    methods = METHODS if args.method == "all" else (args.method,)
    rep = det_report(f, methods)
    if args.format == "json":
        _emit_json({"family": f.kind, "params": list(f.params), "results": _report_dict(rep)})
        return 0
    if len(methods) == 1:
        print(_single_value(rep))
        return 0
    print(f"closed: {rep.closed.value} ({rep.closed.case_label})")
    print(f"exact: {rep.exact}")
    print(f"spectral: {fmt_float(rep.spectral)}")
    print(f"agree: {str(rep.agree).lower()}")
    return 0


def _single_value(rep: DetReport) -> str:
    if rep.closed is not None:
        return str(rep.closed.value)
    if rep.exact is not None:
        return str(rep.exact)
    return fmt_float(rep.spectral)


def _report_dict(rep: DetReport) -> dict:
    out: dict = {}
    if rep.closed is not None:
        out["closed"] = {"value": rep.closed.value, "case": str(rep.closed.case_label)}
    if rep.exact is not None:
        out["exact"] = rep.exact
    if rep.spectral is not None:
        out["spectral"] = _json_float(rep.spectral)
    if rep.agree is not None:
        out["agree"] = rep.agree
    return out


# ---------------------------------------------------------------- nullity


def cmd_nullity(args) -> int:
    f = _family(args.family, args.params)
    r = nullity_of(realize(f))
    if args.format == "json":
        _emit_json({
            "family": f.kind,
            "params": list(f.params),
            "results": {"order": r.order, "rank": r.rank, "nullity": r.nullity},
        })
    else:
        print(f"order: {r.order}")
        print(f"rank: {r.rank}")
        print(f"nullity: {r.nullity}")
    return 0


# ---------------------------------------------------------------- spectrum


def cmd_spectrum(args) -> int:
    f = _family(args.family, args.params)
    spec = family_spectrum(f)
    if args.format == "json":
        _emit_json({
            "family": f.kind,
            "params": list(f.params),
            "results": [
                {
                    "offset": e.offset,
                    "cosine_terms": [list(t) for t in e.cosine_terms],
                    "value": float(fmt_eigenvalue(e.value())),
                }
                for e in spec
            ],
        })
    else:
        for e in spec:
            print(f"{fmt_eigenvalue(e.value())}\t{e}")
    return 0


# ---------------------------------------------------------------- table


@dataclass(frozen=True)
class TableSpec:
    kind: str
    ranges: tuple[tuple[int, int], ...]
    methods: tuple[str, ...]
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if self.kind not in FAMILIES:
            raise UsageError(f"unknown family {self.kind!r}")
        if not self.methods:
            raise UsageError("no methods selected")
        bad = [m for m in self.methods if m not in METHODS]
        if bad:
            raise UsageError(f"unknown method(s) {', '.join(bad)}; choose from {', '.join(METHODS)}")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")
        arity = 2 if self.kind in TWO_PARAM else 1
        if len(self.ranges) != arity:
            raise UsageError(f"{self.kind} needs {arity} range(s), got {len(self.ranges)}")
        for lo, hi in self.ranges:
            if lo > hi:
                raise UsageError(f"empty range [{lo}, {hi}]")
        # range minimums are enforced by constructing the lower corner
        _family(self.kind, [lo for lo, _ in self.ranges])

    def parameter_grid(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(lo, hi + 1) for lo, hi in self.ranges)))

    def header(self) -> list[str]:
        cols = [f"param{i + 1}" for i in range(len(self.ranges))]
        names = {"closed": "det_closed", "exact": "det_exact", "spectral": "spectral"}
        cols += [names[m] for m in METHODS if m in self.methods]
        if len(self.methods) > 1:
            cols.append("agree")
        return cols


def _table_row(job: tuple[str, tuple[int, ...], tuple[str, ...]]) -> list:
    kind, params, methods = job
    rep = det_report(make_family(kind, *params), methods)
    row: list = list(params)
    if rep.closed is not None:
        row.append(rep.closed.value)
    if rep.exact is not None:
        row.append(rep.exact)
    if rep.spectral is not None:
        row.append(fmt_float(rep.spectral))
    if rep.agree is not None:
        row.append("true" if rep.agree else "false")
    return row


def build_table(spec: TableSpec, jobs: int = 1) -> list[list]:
    work = [(spec.kind, params, spec.methods) for params in spec.parameter_grid()]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_table_row, work, chunksize=4))
    else:
        rows = [_table_row(w) for w in work]
    n = len(spec.ranges)
    rows.sort(key=lambda r: tuple(r[:n]))
    return rows


def render_table(spec: TableSpec, rows: list[list]) -> str:
    header = spec.header()
    if spec.fmt == "csv":
        lines = [",".join(header)] + [",".join(str(x) for x in r) for r in rows]
        return "\n".join(lines) + "\n"
    if spec.fmt == "markdown":
        lines = [
            "| " + " | ".join(header) + " |",
            "|" + "|".join("---" for _ in header) + "|",
        ]
        lines += ["| " + " | ".join(str(x) for x in r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    results = []
    for r in rows:
        rec = dict(zip(header, r))
        if "spectral" in rec:
            rec["spectral"] = float(rec["spectral"])
        if "agree" in rec:
            rec["agree"] = rec["agree"] == "true"
        results.append(rec)
    obj = {
        "family": spec.kind,
        "params": [list(rg) for rg in spec.ranges],
        "results": results,
    }
    return json.dumps(obj, ensure_ascii=False) + "\n"


def cmd_table(args) -> int:
    arity = 2 if args.family in TWO_PARAM else 1
    ranges = [tuple(r) for r in (args.range or [])]
    if len(ranges) == 1 and arity == 2:
        ranges = ranges * 2
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    spec = TableSpec(args.family, tuple(ranges), methods, args.format)
    sys.stdout.write(render_table(spec, build_table(spec, args.jobs)))
    return 0


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    if args.max is not None:
        if len(suites) > 1:
            raise UsageError("--max needs a single --suite")
        (name,) = suites
        if not verify.MIN_MAX[name] <= args.max <= verify.LIMIT_MAX[name]:
            raise UsageError(
                f"--max for {name} must lie in [{verify.MIN_MAX[name]}, {verify.LIMIT_MAX[name]}]"
            )
        if args.max > verify.DEFAULT_MAX[name]:
            print(
                f"warning: --max {args.max} exceeds the default {verify.DEFAULT_MAX[name]}; "
                "expect a longer run",
                file=sys.stderr,
            )
    all_ok = True
    for name in suites:
        res = verify.run_suite(name, args.max, jobs=args.jobs)
        status = "ok" if res.ok else "FAIL"
        print(f"{name}: {len(res.cases)} cases, {res.passed} passed [{status}]")
        if not res.ok:
            bad = res.first_failure
            print(f"  first failure: {bad.label}: {bad.detail}")
            all_ok = False
    return 0 if all_ok else 1


# ---------------------------------------------------------------- bench


def _parse_size(kind: str, text: str) -> GraphFamily:
    try:
        params = [int(x) for x in text.lower().split("x")]
    except ValueError:
        raise UsageError(f"bad size {text!r}; expected e.g. 10x10 or 7") from None
    return _family(kind, params)


def _per_call(fn) -> float:
    timer = timeit.Timer(fn)
    number, total = timer.autorange()
    best = min([total] + timer.repeat(repeat=2, number=number))
    return best / number


def bench_one(f: GraphFamily) -> dict:
    def exact():
        return bareiss_det(adjacency_matrix(realize(f)))

    def spectral():
        return spectral_det(family_spectrum(f))

    times = {
        "closed": _per_call(lambda: closed_det(f)),
        "exact": _per_call(exact),
        "spectral": _per_call(spectral),
    }
    return {
        "params": list(f.params),
        "vertices": f.order,
        "det_closed": closed_det(f).value,
        "det_exact": exact(),
        "spectral": _json_float(spectral()),
        "seconds": times,
        "closed_faster_than_exact": times["closed"] < times["exact"],
    }


def cmd_bench(args) -> int:
    families = [_parse_size(args.family, s) for s in args.sizes]
    results = [bench_one(f) for f in families]
    if args.format == "json":
        _emit_json({"family": args.family, "params": args.sizes, "results": results})
        return 0
    header = ["params", "vertices", "det_closed", "det_exact", "spectral",
              "t_closed_s", "t_exact_s", "t_spectral_s"]
    print("\t".join(header))
    for r in results:
        t = r["seconds"]
        print("\t".join([
            "x".join(map(str, r["params"])), str(r["vertices"]), str(r["det_closed"]),
            str(r["det_exact"]), fmt_float(r["spectral"]),
            f"{t['closed']:.3e}", f"{t['exact']:.3e}", f"{t['spectral']:.3e}",
        ]))
    return 0


# ---------------------------------------------------------------- parser


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="+", type=int, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cartdet",
        description="Determinants, spectra and nullities of grids, tori, cylinders "
        "and Möbius ladders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="adjacency determinant")
    _add_family_args(p)
    p.add_argument("--method", choices=(*METHODS, "all"), default="closed")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("nullity", help="exact order, rank and nullity")
    _add_family_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_nullity)

    p = sub.add_parser("spectrum", help="closed-form eigenvalues")
    _add_family_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table", help="determinants over a parameter range")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--range", nargs=2, type=int, action="append", metavar=("LO", "HI"),
                   help="inclusive range; give once per parameter (once means both)")
    p.add_argument("--methods", default="closed", help="comma list from closed,exact,spectral")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check closed forms against the oracles")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time closed form vs elimination vs spectral product")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--sizes", nargs="+", required=True, help="e.g. 10x10 7x7, or 8 for 1-parameter families")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.exit(2, "cartdet: error: --jobs must be >= 1\n")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cartdet: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
