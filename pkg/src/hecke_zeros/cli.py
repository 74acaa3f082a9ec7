"""Command-line entry point: ``hecke-zeros <command> ...``.

Exit codes: 0 success, 2 bad input, 3 internal invariant broken, 4 a
contracted check failed in ``verify``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import DegreeMismatch, HeckeZerosError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_CONTRACT = 4


@dataclass(frozen=True)
class RunConfig:
    command: str
    form: str = "R"
    ns: tuple = ()
    precision: int | None = None
    cmax: int = 10_000
    grid: int = 200
    fmt: str = "json"
    out: str | None = None


def parse_range(text: str) -> tuple[int, ...]:
    try:
        a, b = text.split("..")
        a, b = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return tuple(range(a, b + 1))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HECKE_ZEROS_THREADS", "1")))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    """Results in input order whatever the worker count."""
    items = list(items)
    workers = min(_threads(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- commands


def _poly_job(args):
    from .heckepoly import hecke_polynomial, load_spec

    form, n, precision = args
    return hecke_polynomial(load_spec(form), n, precision).to_json()


def cmd_hecke_poly(cfg: RunConfig) -> int:
    from .heckepoly import load_spec

    load_spec(cfg.form)  # fail fast on a bad spec
    results = _map_ordered(_poly_job, [(cfg.form, n, cfg.precision) for n in cfg.ns])
    if cfg.fmt == "csv":
        rows = [(r["n"], r["degree"], i, c) for r in results for i, c in enumerate(r["coeffs"])]
        _emit(_csv(["n", "degree", "power", "coeff"], rows), cfg.out)
    else:
        _emit(_dump(results[0] if len(results) == 1 else results), cfg.out)
    return EXIT_OK


def _verify_job(args) -> dict:
    from . import arcbounds as ab
    from . import roots
    from .heckepoly import hecke_polynomial, load_spec

    form, n, grid = args
    spec = load_spec(form)
    hecke_polynomial(spec, n)  # DegreeMismatch surfaces here
    contracted = n >= max(7, ab.min_valid_n(spec))
    rep = ab.bound_report(spec, n, grid)
    signs = ab.verify_sign_changes(spec, n)
    rr = roots.root_report(spec, n)
    one_each = roots.one_per_subinterval(spec, n, rr)
    checks = {
        "gap_below_2": rep.max_gap < 2,
        "sign_changes": signs["found"] == signs["expected"],
        "roots_in_interval": rr.count_in_interval == rr.degree,
        "all_simple": rr.all_simple,
        "one_per_subinterval": one_each,
    }
    return {
        "n": n,
        "contracted": contracted,
        "passed": all(checks.values()),
        "checks": checks,
        "bounds": rep.to_json(),
        "sign_changes": {"expected": signs["expected"], "found": signs["found"]},
        "roots": rr.to_json(),
        "roots_csv": rr.csv_rows(),
    }


def cmd_verify(cfg: RunConfig, roots_out: str | None = None) -> int:
    from .heckepoly import load_spec

    load_spec(cfg.form)
    for n in cfg.ns:
        if n < 2:
            raise ValueError("verify needs n >= 2")
    results = _map_ordered(_verify_job, [(cfg.form, n, cfg.grid) for n in cfg.ns])
    failed = [r["n"] for r in results if r["contracted"] and not r["passed"]]

    if cfg.fmt == "csv":
        header = ["theta", "j", "re_hstar", "f", "gap"]
        multi = len(results) > 1
        rows = []
        for r in results:
            for row in r["bounds"]["per_theta"]:
                vals = [row["theta"], row["j"], row["re_hstar"], row["f"], row["lhs_gap"]]
                rows.append(([r["n"]] if multi else []) + vals)
        _emit(_csv((["n"] if multi else []) + header, rows), cfg.out)
    else:
        docs = [{k: v for k, v in r.items() if k != "roots_csv"} for r in results]
        body = docs[0] if len(docs) == 1 else {"runs": docs, "failed": failed, "passed": not failed}
        _emit(_dump(body), cfg.out)

    if roots_out:
        rows = [row for r in results for row in r["roots_csv"]]
        with open(roots_out, "w", newline="") as fh:
            fh.write(_csv(["n", "root_index", "x_lo", "x_hi", "x_refined", "theta"], rows))

    for r in results:
        status = "pass" if r["passed"] else ("FAIL" if r["contracted"] else "info")
        note = "" if r["contracted"] else " (below threshold, informational)"
        print(f"n={r['n']}: {status}{note}", file=sys.stderr)
    return EXIT_CONTRACT if failed else EXIT_OK


def cmd_poincare(cfg: RunConfig, k: int, l: int, n: int | None, part: str) -> int:
    from . import specialfn as sf

    if part == "const":
        val = sf.poincare_const(k, l, cfg.cmax)
    elif n is None:
        raise ValueError("--n is required for the plus and minus parts")
    elif part == "minus":
        val = sf.poincare_cminus(k, l, n, cfg.cmax)
    else:
        val = sf.poincare_cplus(k, l, n, cfg.cmax)
    _emit(_dump({**val.to_json(), "cmax": cfg.cmax}), cfg.out)
    return EXIT_OK


def cmd_mock_delta(cfg: RunConfig) -> int:
    from .specialfn import mock_delta_coeff

    rows = []
    for n in cfg.ns:
        v = mock_delta_coeff(n, cfg.cmax)
        rows.append({"n": n, **v.to_json(), "cmax": cfg.cmax})
    if cfg.fmt == "csv":
        _emit(_csv(["n", "value", "abs_err", "cmax"], [list(r.values()) for r in rows]), cfg.out)
    else:
        _emit(_dump(rows[0] if len(rows) == 1 else rows), cfg.out)
    return EXIT_OK


def cmd_faber(cfg: RunConfig) -> int:
    from .modforms import faber

    out = []
    for n in cfg.ns:
        prec = cfg.precision if cfg.precision is not None else 5
        series, J = faber(n, prec)
        out.append({"n": n, "polynomial": str(J), "coeffs": J.to_json(), "series": series.to_json()})
    if cfg.fmt == "csv":
        _emit(_csv(["n", "power", "coeff"], [(o["n"], i, c) for o in out for i, c in enumerate(o["coeffs"])]), cfg.out)
    else:
        _emit(_dump(out[0] if len(out) == 1 else out), cfg.out)
    return EXIT_OK


def cmd_eisenstein(cfg: RunConfig, k: int) -> int:
    from .modforms import eisenstein

    s = eisenstein(k, cfg.precision if cfg.precision is not None else 10)
    if cfg.fmt == "csv":
        _emit(_csv(["exponent", "coeff"], [(e, str(c)) for e, c in s.terms().items()]), cfg.out)
    else:
        _emit(_dump(s.to_json()), cfg.out)
    return EXIT_OK


def cmd_divisor_poly(cfg: RunConfig, k: int, series_path: str | None, of: str) -> int:
    from .modforms import cusp_eigenform, divisor_polynomial, eisenstein
    from .qseries import QSeries

    N = cfg.precision if cfg.precision is not None else k // 12 + 10
    if series_path:
        with open(series_path) as fh:
            f = QSeries.from_json(fh.read())
    elif of == "cusp":
        f = cusp_eigenform(k, N)
    else:
        f = eisenstein(k, N)
    P = divisor_polynomial(f, k)
    _emit(_dump({"k": k, "polynomial": str(P), "coeffs": P.to_json()}), cfg.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecke-zeros", description="Hecke polynomials of weak Hecke eigenforms")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_required=True):
        g = sp.add_mutually_exclusive_group(required=n_required)
        g.add_argument("--n", type=int)
        g.add_argument("--n-range", type=parse_range)
        sp.add_argument("--precision", type=int)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out")

    sp = sub.add_parser("hecke-poly", help="the polynomial P_n(F; x)")
    sp.add_argument("--form", default="R", help="spec JSON path or the alias R")
    common(sp)

    sp = sub.add_parser("verify", help="gap, sign-change and root checks on the arc")
    sp.add_argument("--form", default="R")
    sp.add_argument("--grid", type=int, default=200)
    sp.add_argument("--csv", action="store_true", help="per-theta rows instead of JSON")
    sp.add_argument("--roots-out", help="write the roots CSV here")
    common(sp)

    sp = sub.add_parser("poincare", help="Maass-Poincare coefficient")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, default=1)
    sp.add_argument("--n", type=int)
    sp.add_argument("--part", choices=("plus", "minus", "const"), default="plus")
    sp.add_argument("--cmax", type=int, default=10_000)
    sp.add_argument("--out")

    sp = sub.add_parser("mock-delta", help="coefficients of the mock modular form attached to Delta")
    sp.add_argument("--cmax", type=int, default=10_000)
    common(sp)

    sp = sub.add_parser("faber", help="Faber polynomial J_n")
    common(sp)

    sp = sub.add_parser("eisenstein", help="q-expansion of E_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--precision", type=int)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out")

    sp = sub.add_parser("divisor-poly", help="divisor polynomial of a holomorphic form")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--series", help="QSeries JSON of the form (default: E_k)")
    sp.add_argument("--of", choices=("eisenstein", "cusp"), default="eisenstein")
    sp.add_argument("--precision", type=int)
    sp.add_argument("--out")
    return p


def _config(a) -> RunConfig:
    ns = ()
    if getattr(a, "n_range", None):
        ns = a.n_range
    elif getattr(a, "n", None) is not None and a.command != "poincare":
        ns = (a.n,)
    fmt = getattr(a, "format", "json")
    if getattr(a, "csv", False):
        fmt = "csv"
    return RunConfig(
        command=a.command,
        form=getattr(a, "form", "R"),
        ns=ns,
        precision=getattr(a, "precision", None),
        cmax=getattr(a, "cmax", 10_000),
        grid=getattr(a, "grid", 200),
        fmt=fmt,
        out=a.out,
    )


def main(argv=None) -> int:
    a = build_parser().parse_args(argv)
    cfg = _config(a)
    if cfg.cmax < 1 or cfg.grid < 1 or (cfg.precision is not None and cfg.precision < 0):
        print("error: cmax and grid must be positive, precision nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        if a.command == "hecke-poly":
            return cmd_hecke_poly(cfg)
        if a.command == "verify":
            return cmd_verify(cfg, a.roots_out)
        if a.command == "poincare":
            return cmd_poincare(cfg, a.k, a.l, a.n, a.part)
        if a.command == "mock-delta":
            return cmd_mock_delta(cfg)
        if a.command == "faber":
            return cmd_faber(cfg)
        if a.command == "eisenstein":
            return cmd_eisenstein(cfg, a.k)
        if a.command == "divisor-poly":
            return cmd_divisor_poly(cfg, a.k, a.series, a.of)
    except DegreeMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (HeckeZerosError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
