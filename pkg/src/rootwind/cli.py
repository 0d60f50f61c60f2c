"""Command-line front end.

Every command prints one JSON document (or a plain table with
``--format table``).  Exit status: 0 on success, 1 for malformed input or
usage, 2 when the input is well formed but violates a precondition.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .bench import bench_chains
from .bounds import BoundViolation, bound_check
from .cauchy import CommonRoot, DegreeOrder, NotCoprime, index_trace
from .exact import ComplexPoly, Gaussian, Poly, format_rational, parse_rational, to_str
from .subres import StructureTheoremViolation, ZeroInput, subresultants
from .winding import (
    ConstantPolynomial,
    PointIsRoot,
    Rectangle,
    RootOnBoundary,
    SoundnessViolation,
    count_all_roots,
    count_roots_in_rectangle,
    edge_restrictions,
    isolate_roots,
    sufficient_radius,
    winding_number,
)

DOMAIN_ERRORS = (
    RootOnBoundary,
    ConstantPolynomial,
    PointIsRoot,
    NotCoprime,
    DegreeOrder,
    CommonRoot,
    ZeroInput,
    BoundViolation,
    SoundnessViolation,
    StructureTheoremViolation,
)

BOUNDS_CAP = 16
BENCH_CAP = 14


class UsageError(Exception):
    pass


# -- parsing ---------------------------------------------------------------


def _reject_float(text):
    raise UsageError(f"floating point literal {text} is not allowed; use an integer or 'p/q' string")


def load_json(text: str):
    try:
        return json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from None


def rational(v) -> Fraction:
    if isinstance(v, bool):
        raise UsageError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return parse_rational(v)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"not a rational literal: {v!r}")


def complex_poly(v) -> ComplexPoly:
    """Ascending list of [re, im] pairs (a bare rational means a real coefficient)."""
    if not isinstance(v, list):
        raise UsageError("complex polynomial must be a JSON list")
    coeffs = []
    for c in v:
        if isinstance(c, list):
            if len(c) != 2:
                raise UsageError(f"coefficient {c!r} is not an [re, im] pair")
            coeffs.append(Gaussian(rational(c[0]), rational(c[1])))
        else:
            coeffs.append(Gaussian(rational(c)))
    return ComplexPoly(coeffs)


def real_poly(v) -> Poly:
    """Ascending coefficient list; nested lists give an element of Q[Y][X]."""
    if not isinstance(v, list):
        raise UsageError("polynomial must be a JSON list")
    return Poly([real_poly(c) if isinstance(c, list) else rational(c) for c in v])


def _field(v, kind):
    if isinstance(v, str):
        if kind is rational:
            return rational(v)
        v = load_json(v)
    return kind(v)


# -- formatting ------------------------------------------------------------


def jsonable(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, bool) or v is None or isinstance(v, (str, float)):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Poly):
        return [jsonable(c) for c in v.coeffs]
    if isinstance(v, ComplexPoly):
        return [[format_rational(c.re), format_rational(c.im)] for c in v.coeffs]
    if isinstance(v, Rectangle):
        return [format_rational(t) for t in (v.x0, v.x1, v.y0, v.y1)]
    if isinstance(v, dict):
        return {(format_rational(k) if isinstance(k, Fraction) else str(k)): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    raise TypeError(f"cannot serialize {type(v).__name__}")


def render_table(doc: dict) -> str:
    lines = []
    for key, val in doc.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            cols = list(val[0])
            lines.append(f"{key}:")
            lines.append("  " + "\t".join(cols))
            for row in val:
                lines.append("  " + "\t".join(json.dumps(row[c]) if not isinstance(row[c], str) else row[c] for c in cols))
        elif isinstance(val, (list, dict)):
            lines.append(f"{key}: {json.dumps(val)}")
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


# -- commands --------------------------------------------------------------


def _rect(opts) -> Rectangle:
    r = opts.get("rect")
    if r is None:
        raise UsageError("--rect x0 x1 y0 y1 is required")
    if isinstance(r, str):
        r = load_json(r)
    if not isinstance(r, list) or len(r) != 4:
        raise UsageError("rectangle needs four bounds x0 x1 y0 y1")
    x0, x1, y0, y1 = (rational(t) for t in r)
    if not (x0 < x1 and y0 < y1):
        raise UsageError("inconsistent rectangle: need x0 < x1 and y0 < y1")
    return Rectangle(x0, x1, y0, y1)


def _required(opts, key, kind):
    v = opts.get(key)
    if v is None:
        raise UsageError(f"--{key.replace('_', '-')} is required")
    return _field(v, kind)


def _winding_input(opts):
    if opts.get("poly") is not None:
        return _required(opts, "poly", complex_poly)
    if opts.get("re") is not None and opts.get("im") is not None:
        return _required(opts, "re", real_poly), _required(opts, "im", real_poly)
    raise UsageError("--poly, or both --re and --im, are required")


def _edge_trace(F, G):
    names = ("bottom", "right", "top", "left")
    out = []
    for name, (re, im, a, b) in zip(names, edge_restrictions(F, G)):
        t = index_trace(re, im, a, b)
        out.append({
            "edge": name,
            "from": a,
            "to": b,
            "re": to_str(re),
            "im": to_str(im),
            "index": t["index"],
            "chain": [to_str(S) for S in t["chain"]],
            "sigma": t["sigma"],
            "tau": t["tau"],
            "epsilon": t["epsilon"],
            "signs": t["signs"],
        })
    return out


def cmd_count(opts):
    F, G = _required(opts, "poly", complex_poly), _rect(opts)
    doc = {"count": count_roots_in_rectangle(F, G)}
    if opts.get("trace"):
        doc["edges"] = _edge_trace(F, G)
    return doc


def cmd_count_all(opts):
    F = _required(opts, "poly", complex_poly)
    return {"count": count_all_roots(F), "radius": sufficient_radius(F)}


def cmd_isolate(opts):
    F, G = _required(opts, "poly", complex_poly), _rect(opts)
    width = _required(opts, "min_width", rational)
    if width <= 0:
        raise UsageError("--min-width must be positive")
    boxes = isolate_roots(F, G, width)
    return {
        "boxes": [
            {"rect": b.rectangle, "multiplicity": b.multiplicity, "squarefree_certified": b.squarefree_certified}
            for b in boxes
        ]
    }


def cmd_winding(opts):
    F, G = _winding_input(opts), _rect(opts)
    rep = winding_number(F, G)
    doc = {
        "value": rep.value,
        "edges": {"bottom": rep.bottom, "right": rep.right, "top": rep.top, "left": rep.left},
        "boundary_vanishes": rep.boundary_vanishes,
    }
    if opts.get("trace"):
        doc["trace"] = _edge_trace(F, G)
    return doc


def cmd_index(opts):
    Qp, Pp = _required(opts, "q", real_poly), _required(opts, "p", real_poly)
    if Qp.is_nested() or Pp.is_nested():
        raise UsageError("index needs univariate polynomials")
    a, b = _required(opts, "a", rational), _required(opts, "b", rational)
    t = index_trace(Qp, Pp, a, b)
    doc = {"index": t["index"]}
    if opts.get("trace"):
        doc.update({k: t[k] for k in ("chain", "sigma", "tau", "epsilon", "signs")})
    return doc


def cmd_subres(opts):
    P, Qp = _required(opts, "p", real_poly), _required(opts, "q", real_poly)
    method = opts.get("method") or "structured"
    if method not in ("naive", "structured"):
        raise UsageError("--method must be naive or structured")
    seq = subresultants(P, Qp, method)
    return {
        "method": method,
        "degrees": list(seq.degrees),
        "sres": [seq.sres[j] for j in range(len(seq.sres))],
        "polys": [seq.polys[j] for j in range(len(seq.polys))],
    }


def _int(opts, key, default=None):
    v = opts.get(key, default)
    if v is None:
        raise UsageError(f"--{key.replace('_', '-')} is required")
    if isinstance(v, bool):
        raise UsageError(f"--{key} must be an integer")
    try:
        return int(v)
    except (TypeError, ValueError):
        raise UsageError(f"--{key.replace('_', '-')} must be an integer") from None


def cmd_bounds(opts):
    d = _int(opts, "d")
    if d < 1:
        raise UsageError("--d must be at least 1")
    if d > BOUNDS_CAP and not opts.get("allow_large"):
        raise UsageError(f"--d above {BOUNDS_CAP} needs --allow-large")
    r = bound_check(d)
    return {
        "d": d,
        "beta": str(r.beta),
        "gamma": str(r.gamma),
        "beta_lower": r.beta_lower,
        "beta_upper": r.beta_upper,
        "gamma_upper": str(r.gamma_upper),
        "d_squared": r.d_squared,
    }


def cmd_bench(opts):
    max_deg = _int(opts, "max_deg", 8)
    if not 2 <= max_deg <= BENCH_CAP:
        raise UsageError(f"--max-deg must lie in [2, {BENCH_CAP}]")
    trials, seed = _int(opts, "trials", 5), _int(opts, "seed", 0)
    if trials < 1:
        raise UsageError("--trials must be positive")
    rows = bench_chains(max_deg, trials, seed)
    return {
        "seed": seed,
        "rows": [
            {
                "degree": r.degree,
                "trials": r.trials,
                "structured_s": round(r.structured_seconds, 6),
                "naive_s": round(r.naive_seconds, 6),
                "identical": r.identical,
                "max_num_bits": r.max_num_bits,
                "max_den_bits": r.max_den_bits,
            }
            for r in rows
        ],
    }


COMMANDS = {
    "count": cmd_count,
    "count-all": cmd_count_all,
    "isolate": cmd_isolate,
    "winding": cmd_winding,
    "index": cmd_index,
    "subres": cmd_subres,
    "bounds": cmd_bounds,
    "bench": cmd_bench,
}


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-2/3" through as a value, like "-2"
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--input", help="JSON file whose keys supply any of the options")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--trace", action="store_true", default=None)

    parser = _Parser(prog="rootwind", description="Exact root counting by winding numbers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        return sub.add_parser(name, parents=[common], help=help)

    for name, help in (
        ("count", "roots inside a rectangle"),
        ("isolate", "boxes separating the roots inside a rectangle"),
        ("winding", "winding number on a rectangle boundary"),
    ):
        p = add(name, help)
        p.add_argument("--poly", help="complex polynomial as JSON [[re, im], ...]")
        p.add_argument("--rect", nargs=4, metavar=("X0", "X1", "Y0", "Y1"))
        if name == "isolate":
            p.add_argument("--min-width", dest="min_width")
        if name == "winding":
            p.add_argument("--re", help="real part as X-major nested JSON lists")
            p.add_argument("--im", help="imaginary part as X-major nested JSON lists")
    p = add("count-all", "all complex roots")
    p.add_argument("--poly")
    p = add("index", "Cauchy index of q/p on [a, b]")
    for opt in ("--q", "--p", "--a", "--b"):
        p.add_argument(opt)
    p = add("subres", "signed subresultant sequence")
    p.add_argument("--p")
    p.add_argument("--q")
    p.add_argument("--method", choices=("naive", "structured"))
    p = add("bounds", "degree functions beta and gamma")
    p.add_argument("--d")
    p.add_argument("--allow-large", dest="allow_large", action="store_true", default=None)
    p = add("bench", "structured vs naive subresultants")
    p.add_argument("--max-deg", dest="max_deg")
    p.add_argument("--trials")
    p.add_argument("--seed")
    return parser


def _options(ns) -> dict:
    opts = {}
    if ns.input:
        try:
            with open(ns.input, encoding="utf-8") as fh:
                loaded = load_json(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {ns.input}: {exc}") from None
        if not isinstance(loaded, dict):
            raise UsageError("input file must hold a JSON object")
        opts.update({k.replace("-", "_"): v for k, v in loaded.items()})
    for k, v in vars(ns).items():
        if v is not None and k not in ("input", "command"):
            opts[k] = v
    return opts


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    fmt = "json"
    try:
        ns = build_parser().parse_args(argv)
        fmt = ns.format
        opts = _options(ns)
        doc = {"command": ns.command, **COMMANDS[ns.command](opts)}
        code = 0
    except UsageError as exc:
        doc, code = {"error": "UsageError", "message": str(exc)}, 1
    except DOMAIN_ERRORS as exc:
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, 2
    doc = jsonable(doc)
    print(render_table(doc) if fmt == "table" else json.dumps(doc, indent=2), file=out)
    if code:
        print(f"rootwind: {doc['error']}: {doc['message']}", file=sys.stderr)
    return code


def main():
    sys.exit(run_cli())
