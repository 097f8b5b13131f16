"""Batch driver: JSON job documents in, tables and CSV out.

Usage::

    indextrace run JOBFILE [--bundled] [--csv PATH] [--quiet]
    indextrace sweep --nmax N [--csv PATH] [--quiet]
    indextrace verify --rank-max R --weight-max W [--csv PATH] [--quiet]

Exit codes: 0 success, 1 domain error, 2 parse/schema error, 3 property
suite failure.

Rationals are read and written as ``"p/q"`` strings (integers without
``/1``).  Vectors in CSV cells are ``;``-separated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product
from typing import Any, Iterator, Sequence

from .dseries import check_factorization, formal_degree, trace_factor, weyl_dim
from .errors import (
    FactorizationViolation,
    IndexTraceError,
    JobError,
    ParseError,
    SchemaError,
)
from .genera import AHAT, L_GENUS, TODD, exp_twist, hattori_range, product_genus, twisted_ahat_cpn
from .pairs import STANDARD_PAIRS, CompactPair, make_pair, rho_c
from .rootkit import Weight, build_root_system, inner_product, rescale_form

__all__ = [
    "JobSpec",
    "Report",
    "parse_job",
    "run_job",
    "emit_csv",
    "render_csv",
    "render_table",
    "format_rational",
    "parse_rational",
    "main",
]

EXIT_OK, EXIT_DOMAIN, EXIT_SCHEMA, EXIT_PROPERTY = 0, 1, 2, 3

HEADERS = {
    "trace": ("mu", "dim_V", "formal_degree", "tau_G", "factor", "regular"),
    "genus": ("genus", "dims", "twists", "value"),
    "sweep": ("n", "k", "twisted_ahat"),
    "verify": ("pair", "noncompact_simple", "weights_checked", "singular",
               "factorization", "singular_vanishing", "rescaling"),
}

_COMMON = {"kind", "output", "csv_path"}
_FIELDS: dict[str, tuple[set[str], set[str]]] = {
    "trace": ({"cartan", "noncompact_simple", "weight"}, set()),
    "genus": ({"genus", "dims", "twists"}, {"k"}),
    "sweep": ({"n_max"}, set()),
    "verify": ({"weight_max"}, {"rank_max", "cartan", "noncompact_simple"}),
}
_GENERA = {"ahat": AHAT, "l": L_GENUS, "todd": TODD}
_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.fullmatch(text.strip()):
        raise ValueError(f"malformed rational {text!r}")
    return Fraction(text.strip())


def _vec(values: Sequence[Any]) -> str:
    return ";".join(format_rational(v) for v in values)


@dataclass(frozen=True)
class JobSpec:
    kind: str
    cartan: tuple[tuple[int, ...], ...] | None = None
    noncompact_simple: tuple[int, ...] | None = None
    weight: tuple[Fraction, ...] | None = None
    genus: str | None = None
    k: Fraction | None = None
    dims: tuple[int, ...] | None = None
    twists: tuple[Fraction, ...] | None = None
    n_max: int | None = None
    rank_max: int | None = None
    weight_max: int | None = None
    output: str = "table"
    csv_path: str | None = None


@dataclass
class Report:
    kind: str
    inputs: dict[str, str]
    header: tuple[str, ...]
    rows: list[tuple[str, ...]] = field(default_factory=list)
    summary: list[str] = field(default_factory=list)
    ok: bool = True


# parsing

def _int(doc: dict, name: str, lo: int | None = None) -> int:
    v = doc[name]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"field '{name}': expected an integer, got {v!r}")
    if lo is not None and v < lo:
        raise SchemaError(f"field '{name}': must be >= {lo}, got {v}")
    return v


def _int_list(doc: dict, name: str) -> tuple[int, ...]:
    v = doc[name]
    if not isinstance(v, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
        raise SchemaError(f"field '{name}': expected a list of integers, got {v!r}")
    return tuple(v)


def _rational_list(doc: dict, name: str) -> tuple[Fraction, ...]:
    v = doc[name]
    if not isinstance(v, list):
        raise SchemaError(f"field '{name}': expected a list of \"p/q\" strings, got {v!r}")
    out = []
    for i, x in enumerate(v):
        try:
            out.append(parse_rational(x))
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"field '{name}[{i}]': malformed rational {x!r} (use \"p/q\" strings)") from None
    return tuple(out)


def _cartan(doc: dict) -> tuple[tuple[int, ...], ...]:
    v = doc["cartan"]
    if (not isinstance(v, list) or not v
            or any(not isinstance(row, list) or len(row) != len(v) for row in v)
            or any(isinstance(x, bool) or not isinstance(x, int) for row in v for x in row)):
        raise SchemaError(f"field 'cartan': expected a square integer matrix, got {v!r}")
    return tuple(tuple(row) for row in v)


def parse_job(document: str) -> JobSpec:
    """Validate a JSON job document.

    Raises :class:`ParseError` for malformed JSON (with line and column) and
    :class:`SchemaError` for unknown kinds, missing or extra fields, wrong
    arity and malformed rationals.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise SchemaError("job document must be a JSON object")
    kind = doc.get("kind")
    if kind not in _FIELDS:
        raise SchemaError(f"field 'kind': unknown job kind {kind!r}; expected one of {sorted(_FIELDS)}")
    required, optional = _FIELDS[kind]
    missing = sorted(required - doc.keys())
    if missing:
        raise SchemaError(f"{kind} job: missing field(s) {missing}")
    extra = sorted(doc.keys() - required - optional - _COMMON)
    if extra:
        raise SchemaError(f"{kind} job: unexpected field(s) {extra}")

    spec: dict[str, Any] = {"kind": kind}
    output = doc.get("output", "table")
    if output not in ("table", "csv"):
        raise SchemaError(f"field 'output': expected 'table' or 'csv', got {output!r}")
    spec["output"] = output
    if "csv_path" in doc:
        if not isinstance(doc["csv_path"], str) or not doc["csv_path"]:
            raise SchemaError("field 'csv_path': expected a non-empty string")
        spec["csv_path"] = doc["csv_path"]

    if "cartan" in doc:
        spec["cartan"] = _cartan(doc)
    if "noncompact_simple" in doc:
        spec["noncompact_simple"] = _int_list(doc, "noncompact_simple")
    if ("cartan" in doc) != ("noncompact_simple" in doc):
        raise SchemaError(f"{kind} job: 'cartan' and 'noncompact_simple' must be given together")

    if kind == "trace":
        spec["weight"] = _rational_list(doc, "weight")
        if len(spec["weight"]) != len(spec["cartan"]):
            raise SchemaError(f"field 'weight': length {len(spec['weight'])} != rank {len(spec['cartan'])}")
    elif kind == "genus":
        name = doc["genus"]
        if not isinstance(name, str) or name.lower() not in {*_GENERA, "exptwist"}:
            raise SchemaError(f"field 'genus': unknown genus {name!r}; expected ahat, L, todd or exptwist")
        spec["genus"] = name.lower()
        if spec["genus"] == "exptwist":
            if "k" not in doc:
                raise SchemaError("genus job: 'exptwist' requires field 'k'")
            try:
                spec["k"] = parse_rational(doc["k"])
            except (ValueError, ZeroDivisionError):
                raise SchemaError(f"field 'k': malformed rational {doc['k']!r}") from None
        elif "k" in doc:
            raise SchemaError("genus job: field 'k' only applies to genus 'exptwist'")
        spec["dims"] = _int_list(doc, "dims")
        spec["twists"] = _rational_list(doc, "twists")
        if not spec["dims"]:
            raise SchemaError("field 'dims': need at least one factor")
        if len(spec["dims"]) != len(spec["twists"]):
            raise SchemaError(f"field 'twists': length {len(spec['twists'])} != number of dims {len(spec['dims'])}")
    elif kind == "sweep":
        spec["n_max"] = _int(doc, "n_max", lo=0)
    elif kind == "verify":
        spec["weight_max"] = _int(doc, "weight_max", lo=0)
        if "rank_max" in doc:
            spec["rank_max"] = _int(doc, "rank_max", lo=1)
    return JobSpec(**spec)


# running

@contextmanager
def _field(name: str) -> Iterator[None]:
    try:
        yield
    except IndexTraceError as e:
        raise type(e)(f"{name}: {e}") from e


def _pair_from_job(job: JobSpec) -> CompactPair:
    with _field("cartan"):
        rs = build_root_system(job.cartan)
    with _field("noncompact_simple"):
        return make_pair(rs, job.noncompact_simple)


def _run_trace(job: JobSpec) -> Report:
    p = _pair_from_job(job)
    mu = Weight(job.weight)
    with _field("weight"):
        r = check_factorization(p, mu)
    rep = Report("trace", _echo(job), HEADERS["trace"])
    rep.rows.append((_vec(mu.coords), str(r.dim_V), format_rational(r.formal_degree),
                     format_rational(r.tau_G), format_rational(r.factor), "true" if r.regular else "false"))
    rep.summary.append(f"sign (-1)^(d/2) = {r.sign:+d}; tau_G = factor * dim_V holds exactly")
    return rep


def _run_genus(job: JobSpec) -> Report:
    spec = exp_twist(job.k) if job.genus == "exptwist" else _GENERA[job.genus]
    with _field("dims"):
        value = product_genus(spec, job.dims, job.twists)
    rep = Report("genus", _echo(job), HEADERS["genus"])
    rep.rows.append((spec.name, _vec(job.dims), _vec(job.twists), format_rational(value)))
    return rep


def _run_sweep(job: JobSpec) -> Report:
    rep = Report("sweep", _echo(job), HEADERS["sweep"])
    nonzero = 0
    for n in range(1, job.n_max + 1):
        for k in hattori_range(n):
            v = twisted_ahat_cpn(n, k)
            nonzero += v != 0
            rep.rows.append((str(n), str(k), format_rational(v)))
    rep.ok = nonzero == 0
    rep.summary.append(f"hattori vanishing: {'PASS' if rep.ok else 'FAIL'} "
                       f"({len(rep.rows)} (n,k) pairs, {nonzero} nonzero)")
    return rep


def _regular_by_scan(p: CompactPair, mu: Weight) -> bool:
    lam = mu + rho_c(p)
    return all(inner_product(p.rs, lam, a) != 0 for a in p.rs.positive)


def _verify_pair(name: str, p: CompactPair, weight_max: int) -> tuple[tuple[str, ...], dict[str, int]]:
    scaled = make_pair(rescale_form(p.rs, 7), p.noncompact_simple)
    counts = {"checked": 0, "singular": 0, "factorization": 0, "singular_vanishing": 0, "rescaling": 0}
    for coords in product(range(weight_max + 1), repeat=p.rs.rank):
        mu = Weight(coords)
        counts["checked"] += 1
        try:
            rep = check_factorization(p, mu)
        except FactorizationViolation:
            counts["factorization"] += 1
            continue
        if not _regular_by_scan(p, mu):
            counts["singular"] += 1
            if rep.tau_G != 0:
                counts["singular_vanishing"] += 1
        if (formal_degree(scaled, mu), trace_factor(scaled, mu), weyl_dim(scaled, mu)) != \
                (rep.formal_degree, rep.factor, rep.dim_V):
            counts["rescaling"] += 1

    def status(key: str) -> str:
        return "PASS" if counts[key] == 0 else f"FAIL({counts[key]})"

    row = (name, _vec(sorted(p.noncompact_simple)), str(counts["checked"]), str(counts["singular"]),
           status("factorization"), status("singular_vanishing"), status("rescaling"))
    return row, counts


def _run_verify(job: JobSpec) -> Report:
    if job.cartan is not None:
        pairs = [("custom", _pair_from_job(job))]
    else:
        rank_max = job.rank_max if job.rank_max is not None else 3
        pairs = [(name, make_pair(build_root_system(c), marks))
                 for name, (c, marks) in STANDARD_PAIRS.items() if len(c) <= rank_max]
    rep = Report("verify", _echo(job), HEADERS["verify"])
    totals = {"checked": 0, "singular": 0, "factorization": 0, "singular_vanishing": 0, "rescaling": 0}
    for name, p in pairs:
        row, counts = _verify_pair(name, p, job.weight_max)
        rep.rows.append(row)
        for key in totals:
            totals[key] += counts[key]
    for key, label in (("factorization", "factorization"), ("singular_vanishing", "singular vanishing"),
                       ("rescaling", "rescaling invariance")):
        ok = totals[key] == 0
        rep.ok &= ok
        rep.summary.append(f"{label}: {'PASS' if ok else 'FAIL'} ({totals['checked']} weights checked"
                           f"{'' if ok else f', {totals[key]} failures'})")
    return rep


def _echo(job: JobSpec) -> dict[str, str]:
    out = {}
    for name in ("kind", "cartan", "noncompact_simple", "weight", "genus", "k", "dims", "twists",
                 "n_max", "rank_max", "weight_max"):
        v = getattr(job, name)
        if v is None:
            continue
        if name == "cartan":
            out[name] = "/".join(_vec(row) for row in v)
        elif isinstance(v, tuple):
            out[name] = _vec(v)
        elif isinstance(v, Fraction):
            out[name] = format_rational(v)
        else:
            out[name] = str(v)
    return out


_RUNNERS = {"trace": _run_trace, "genus": _run_genus, "sweep": _run_sweep, "verify": _run_verify}


def run_job(job: JobSpec) -> Report:
    return _RUNNERS[job.kind](job)


# output

def render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.header)
    writer.writerows(report.rows)
    return buf.getvalue()


def emit_csv(report: Report, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_csv(report))


def render_table(report: Report) -> str:
    cells = [report.header, *report.rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(report.header))]
    lines = [f"# {k} = {v}" for k, v in report.inputs.items()]
    lines.append("  ".join(h.ljust(w) for h, w in zip(report.header, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in report.rows]
    lines += report.summary
    return "\n".join(lines) + "\n"


def _load_bundled(name: str) -> str:
    fname = name if name.endswith(".json") else f"{name}.json"
    return resources.files("indextrace").joinpath("jobs", fname).read_text(encoding="utf-8")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", metavar="PATH", help="write CSV to PATH")
    common.add_argument("--quiet", action="store_true", help="suppress the table on stdout")

    parser = argparse.ArgumentParser(prog="indextrace", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", parents=[common], help="run a JSON job document ('-' for stdin)")
    run.add_argument("jobfile")
    run.add_argument("--bundled", action="store_true", help="treat JOBFILE as the name of a bundled job")
    sweep = sub.add_parser("sweep", parents=[common], help="twisted A-hat vanishing sweep on CP^n")
    sweep.add_argument("--nmax", type=int, required=True)
    verify = sub.add_parser("verify", parents=[common], help="factorization property suite")
    verify.add_argument("--rank-max", type=int, default=3)
    verify.add_argument("--weight-max", type=int, default=5)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            if args.bundled:
                document = _load_bundled(args.jobfile)
            elif args.jobfile == "-":
                document = sys.stdin.read()
            else:
                with open(args.jobfile, encoding="utf-8") as fh:
                    document = fh.read()
            job = parse_job(document)
        elif args.command == "sweep":
            job = parse_job(json.dumps({"kind": "sweep", "n_max": args.nmax}))
        else:
            job = parse_job(json.dumps({"kind": "verify", "rank_max": args.rank_max,
                                        "weight_max": args.weight_max}))
        report = run_job(job)
        csv_path = args.csv or job.csv_path
        if csv_path:
            emit_csv(report, csv_path)
        if not args.quiet:
            if job.output == "csv" and not csv_path:
                sys.stdout.write(render_csv(report))
            else:
                sys.stdout.write(render_table(report))
    except JobError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except IndexTraceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if report.ok else EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
