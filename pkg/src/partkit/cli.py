"""Command-line interface.

Exit status: 0 when output was produced and every check passed, 1 when a
verification found violations, 2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

from . import bijections as bij
from . import qseries
from .partition import (
    UNBOUNDED,
    FamilyParams,
    enumerate_partitions,
    parse_partition,
    render_partition,
    satisfies_A,
    satisfies_B,
    satisfies_C,
    satisfies_E,
)
from .reports import VerificationReport
from .verify import (
    run_scan,
    verify_andrews,
    verify_corollary,
    verify_mac,
    verify_recurrence_report,
    verify_subbarao,
    verify_thm1,
)

__all__ = ["main", "parse_partition", "run"]


class UsageError(Exception):
    pass


# -- flag parsing ----------------------------------------------------------------


def _int_values(text: str | None, name: str, allow_inf: bool = False) -> list[Any] | None:
    if text is None:
        return None
    out: list[Any] = []
    for item in text.split(","):
        item = item.strip()
        if allow_inf and item.lower() in ("inf", "infinity"):
            out.append(UNBOUNDED)
            continue
        try:
            out.append(int(item))
        except ValueError:
            raise UsageError(f"--{name}: expected an integer, got {item!r}") from None
    return out


def _param_lists(args) -> dict[str, list[Any]]:
    values = {}
    for name in ("p", "r", "a", "m", "v"):
        vals = _int_values(getattr(args, name, None), name, allow_inf=(name == "m"))
        if vals is not None:
            values[name] = vals
    return values


def _single(args) -> dict[str, Any]:
    out = {}
    for name, vals in _param_lists(args).items():
        if len(vals) != 1:
            raise UsageError(f"--{name} takes a single value unless --grid is given")
        out[name] = vals[0]
    return out


def _require(values: dict[str, Any], *names: str) -> None:
    missing = [n for n in names if n not in values]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + n for n in missing))


def _family(values: dict[str, Any], m_default: Any = None) -> FamilyParams:
    if "m" not in values and m_default is not None:
        values = values | {"m": m_default}
    _require(values, "p", "r", "a", "m")
    return FamilyParams(values["p"], values["r"], values["a"], values["m"], values.get("v"))


# -- subcommands ----------------------------------------------------------------


def cmd_enumerate(args) -> VerificationReport:
    values = _single(args)
    cls = args.cls
    if cls in ("A", "C"):
        _require(values, "r")
        r = values["r"]
        pred = (lambda lam: satisfies_A(lam, r)) if cls == "A" else (lambda lam: satisfies_C(lam, r))
        params: dict[str, Any] = {"class": cls, "r": r}
    elif cls in ("B", "E"):
        fam = _family(values)
        pred = (lambda lam: satisfies_B(lam, fam)) if cls == "B" else (lambda lam: satisfies_E(lam, fam))
        params = {"class": cls} | fam.as_dict()
    else:
        pred = lambda lam: True  # noqa: E731
        params = {"class": "all"}
    found = [lam for lam in enumerate_partitions(args.n) if pred(lam)]
    report = VerificationReport("enumerate", params, (args.n, args.n), checked=len(found))
    report.extra["partitions"] = [render_partition(lam) for lam in found]
    report.extra["table"] = [(args.n, len(found))]
    return report


_MAPS: dict[str, tuple[str, Callable]] = {
    "beta": ("r", bij.beta_forward),
    "beta-inv": ("r", bij.beta_inverse),
    "gamma": ("finite", bij.gamma_forward),
    "gamma-inv": ("finite", bij.gamma_inverse),
    "sf": ("infinite", bij.sellers_fu_forward),
    "sf-inv": ("infinite", bij.sellers_fu_inverse),
    "glaisher": ("p", bij.glaisher_distinctify),
    "glaisher-inv": ("p", bij.glaisher_regularize),
}


def cmd_map(args) -> VerificationReport:
    values = _single(args)
    lam = parse_partition(args.input)
    needs, fn = _MAPS[args.bijection]
    if needs == "r":
        _require(values, "r")
        params: dict[str, Any] = {"r": values["r"]}
        image = fn(lam, values["r"])
    elif needs == "p":
        _require(values, "p")
        params = {"p": values["p"]}
        image = fn(lam, values["p"])
    elif needs == "finite":
        fam = _family(values)
        params = fam.as_dict()
        image = fn(lam, fam)
    else:
        fam = _family(values | {"m": UNBOUNDED})
        params = fam.as_dict()
        image = fn(lam, fam)
    report = VerificationReport("map", {"bijection": args.bijection} | params,
                                (lam.weight, lam.weight), checked=1)
    report.extra["input"] = render_partition(lam)
    report.extra["output"] = render_partition(image)
    return report


def cmd_series(args) -> VerificationReport:
    values = _single(args)
    N = args.N
    if N < 0:
        raise UsageError("--N must be non-negative")
    family = args.family
    params: dict[str, Any] = {"family": family}
    if family == "partition":
        series = qseries.partition_numbers(N)
    elif family == "pentagonal":
        series = qseries.pentagonal_expansion(N)
    else:
        _require(values, "p", "r", "a", "m")
        v = values.pop("v", None)
        if family == "b":
            # v may exceed p here: the product makes sense for every v >= 1
            fam = _family(values)
            params |= fam.as_dict()
            if fam.finite:
                params["v"] = fam.v if v is None else v
                series = qseries.gf_b(fam, N, v)
            else:
                if v is not None and v != fam.p:
                    raise UsageError("m = inf requires v = p")
                series = qseries.gf_b_infinite(fam, N)
        else:
            fam = _family(values)
            params |= fam.as_dict()
            series = qseries.gf_e(fam, N) if fam.finite else qseries.gf_e_infinite(fam, N)
    report = VerificationReport("series", params, (0, N), checked=len(series))
    report.extra["coefficients"] = [str(c) for c in series]
    report.extra["table"] = list(enumerate(series))
    if args.expect:
        with open(args.expect) as fh:
            expected = [int(x) for x in json.load(fh)]
        if len(expected) != len(series):
            report.violations.append({"kind": "length-mismatch", "expected": len(expected),
                                      "actual": len(series)})
        for n, (want, got) in enumerate(zip(expected, series)):
            if want != got:
                report.violations.append({"n": n, "kind": "coefficient-mismatch",
                                          "expected": str(want), "actual": str(got)})
    return report


_THEOREM_FLAGS = {
    "mac": (),
    "andrews": ("r",),
    "thm1": ("p", "r", "a", "m"),
    "subbarao": ("m", "r"),
    "corollary": ("p", "r", "a"),
    "recurrence": ("p", "r", "a", "m"),
}


def _run_cell(theorem: str, cell: dict[str, Any], n_max: int) -> VerificationReport:
    if theorem == "mac":
        return verify_mac(n_max)
    if theorem == "andrews":
        return verify_andrews(cell["r"], n_max)
    if theorem == "subbarao":
        return verify_subbarao(cell["m"], cell["r"], n_max)
    if theorem == "corollary":
        return verify_corollary(_family(cell, m_default=UNBOUNDED), n_max)
    if theorem == "thm1":
        return verify_thm1(_family(cell), n_max)
    if theorem == "recurrence":
        # v may exceed p; validate the family with v = p and pass v separately
        v = cell.get("v")
        fam = _family({k: x for k, x in cell.items() if k != "v"})
        return verify_recurrence_report(fam, n_max, v)
    raise UsageError(f"unknown theorem {theorem!r}")


def _cell_key(cell: dict[str, Any]) -> tuple:
    return tuple((k, float("inf") if x is UNBOUNDED else x) for k, x in sorted(cell.items()))


def _json_value(x: Any) -> Any:
    return "inf" if x is UNBOUNDED else x


def cmd_verify(args) -> VerificationReport:
    theorem = args.theorem
    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    if not args.grid:
        values = _single(args)
        _require(values, *_THEOREM_FLAGS[theorem])
        return _run_cell(theorem, values, args.n_max)

    lists = _param_lists(args)
    _require(lists, *_THEOREM_FLAGS[theorem])
    names = sorted(lists)
    cells = [dict(zip(names, combo)) for combo in itertools.product(*(lists[n] for n in names))]
    runnable, skipped = [], []
    for cell in cells:
        try:
            if theorem in ("thm1", "recurrence", "corollary"):
                _family({k: x for k, x in cell.items() if not (theorem == "recurrence" and k == "v")},
                        m_default=UNBOUNDED)
            runnable.append(cell)
        except ValueError as exc:
            skipped.append({"cell": {k: _json_value(x) for k, x in cell.items()}, "reason": str(exc)})
    runnable.sort(key=_cell_key)

    start = time.perf_counter()
    if args.jobs > 1 and len(runnable) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_cell, itertools.repeat(theorem), runnable,
                                    itertools.repeat(args.n_max)))
    else:
        results = [_run_cell(theorem, cell, args.n_max) for cell in runnable]

    report = VerificationReport(
        f"grid:{theorem}",
        {k: [_json_value(x) for x in lists[k]] for k in names},
        (0, args.n_max),
    )
    cell_dicts = []
    for cell, res in zip(runnable, results):
        report.checked += res.checked
        for v in res.violations:
            report.violations.append({"cell": res.params} | v)
        d = res.to_dict()
        del d["elapsed_ms"]
        cell_dicts.append(d)
    report.elapsed_ms = round((time.perf_counter() - start) * 1000.0, 3)
    report.extra["cells"] = cell_dicts
    report.extra["skipped"] = skipped
    return report


def cmd_scan(args) -> VerificationReport:
    return run_scan(args.theorem, args.p, args.r, args.a, args.m, args.N)


# -- output -----------------------------------------------------------------------


def _format_text(command: str, report: VerificationReport) -> str:
    if command == "enumerate":
        return "\n".join(report.extra["partitions"]) + "\n"
    if command == "map":
        return report.extra["output"] + "\n"
    if command == "series":
        text = " ".join(report.extra["coefficients"]) + "\n"
        if report.violations:
            text += _violation_lines(report)
        return text
    params = " ".join(f"{k}={_json_value(v) if not isinstance(v, list) else ','.join(map(str, v))}"
                      for k, v in report.params.items())
    lo, hi = report.range
    status = "PASS" if report.ok else "FAIL"
    text = (f"{report.kind} {params} range={lo}..{hi}: checked {report.checked}, "
            f"violations {len(report.violations)} -> {status}\n")
    return text + _violation_lines(report)


def _violation_lines(report: VerificationReport, limit: int = 20) -> str:
    lines = [f"  {json.dumps(v)}" for v in report.violations[:limit]]
    if len(report.violations) > limit:
        lines.append(f"  ... {len(report.violations) - limit} more")
    return "".join(line + "\n" for line in lines)


def _format_csv(command: str, report: VerificationReport) -> str:
    if "table" in report.extra:
        rows = report.extra["table"]
    elif "counts" in report.extra:
        rows = [(int(n), c[0]) for n, c in report.extra["counts"].items()]
    else:
        raise UsageError(f"csv output is only available for count and coefficient tables, not {command}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "value"])
    writer.writerows(rows)
    return buf.getvalue()


def _format_json(report: VerificationReport) -> str:
    d = report.to_dict()
    d.pop("table", None)
    return json.dumps(d, indent=2) + "\n"


# -- entry points -----------------------------------------------------------------


def _add_param_flags(sp: argparse.ArgumentParser) -> None:
    for name, what in (("r", "r"), ("p", "p"), ("a", "a"), ("m", "m (integer or inf)"), ("v", "v")):
        sp.add_argument(f"--{name}", metavar="INT", help=f"parameter {what}; comma list with --grid")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="partkit", allow_abbrev=False,
                                     description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--out", metavar="PATH", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", parents=[common], allow_abbrev=False,
                        help="list the partitions of n in a class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--class", dest="cls", choices=("all", "A", "C", "B", "E"), default="all")
    _add_param_flags(sp)

    sp = sub.add_parser("map", parents=[common], allow_abbrev=False, help="apply a bijection")
    sp.add_argument("--bijection", choices=sorted(_MAPS), required=True)
    sp.add_argument("--input", required=True, help="partition such as 5^2,1^7")
    _add_param_flags(sp)

    sp = sub.add_parser("series", parents=[common], allow_abbrev=False,
                        help="expand a generating function")
    sp.add_argument("--family", choices=("b", "e", "pentagonal", "partition"), required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--expect", metavar="PATH",
                    help="JSON array of decimal-string coefficients to compare against")
    _add_param_flags(sp)

    sp = sub.add_parser("verify", parents=[common], allow_abbrev=False,
                        help="check a theorem exhaustively over a range")
    sp.add_argument("--theorem", choices=tuple(_THEOREM_FLAGS), required=True)
    sp.add_argument("--n-max", dest="n_max", type=int, required=True)
    sp.add_argument("--grid", action="store_true", help="expand comma lists into a parameter grid")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for grid cells")
    _add_param_flags(sp)

    sp = sub.add_parser("scan", parents=[common], allow_abbrev=False,
                        help="check a mod-2 congruence family")
    sp.add_argument("--theorem", choices=("thm3", "thm4"), required=True)
    for name in ("p", "r", "a", "m", "N"):
        sp.add_argument(f"--{name}", type=int, required=True)
    return parser


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "series": cmd_series,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def run(args: argparse.Namespace) -> tuple[int, str]:
    """Execute a parsed command; returns ``(exit status, rendered output)``."""
    report = _COMMANDS[args.command](args)
    if args.format == "json":
        text = _format_json(report)
    elif args.format == "csv":
        text = _format_csv(args.command, report)
    else:
        text = _format_text(args.command, report)
    return (0 if report.ok else 1), text


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = run(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"partkit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
