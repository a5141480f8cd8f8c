"""Command line front end.

Subcommands: compute, classify, verify, oracle, gen, bench.  Reports go to
stdout as a single JSON document (or an indented text rendering with
--format text); diagnostics go to stderr.  Exit status: 0 success / verdict
holds, 2 a verify verdict fails, 1 any error.  Integers inside reports are
decimal strings so arbitrary-precision values survive every JSON consumer.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .classify import DEFAULT_CYCLE_BUDGET, classify
from .engine import EngineConfig, chromatic_polynomial
from .generate import FAMILIES, GenerationError, GenSpec, random_family_member
from .hypergraph import Hypergraph, build
from .oracle import (GUARD_LIMIT, StateSpaceError, available_backends,
                     count_colorings, default_backend, interpolate_polynomial)
from .polyring import Poly
from .roots import certify_negative_ray_poly, certify_unit_interval_poly

__all__ = ["main"]

_PIVOT_FLAG = {"largest": "largest_edge", "smallest": "smallest_big_edge",
               "first": "first_edge"}


class CliError(Exception):
    pass


# -- input ------------------------------------------------------------------


def _parse_text_format(text: str):
    lines = [ln for ln in text.splitlines()]
    # first non-empty line: "n m", then m edge lines of vertex ids (1-based)
    idx = 0
    while idx < len(lines) and not lines[idx].split():
        idx += 1
    if idx == len(lines):
        raise CliError("empty hypergraph file")
    head = lines[idx].split()
    if len(head) != 2:
        raise CliError(f"line {idx + 1}: expected 'n m', got {lines[idx]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise CliError(f"line {idx + 1}: 'n m' must be integers, got {lines[idx]!r}")
    edges = []
    lineno = idx + 1
    for raw in lines[idx + 1:]:
        lineno += 1
        parts = raw.split()
        if not parts:
            continue
        try:
            edges.append([int(tok) for tok in parts])
        except ValueError:
            raise CliError(f"line {lineno}: edge must be whitespace-separated ints, got {raw!r}")
        if len(edges) > m:
            raise CliError(f"line {lineno}: more than the declared {m} edges")
    if len(edges) != m:
        raise CliError(f"declared {m} edges but found {len(edges)}")
    return n, edges, None


def _parse_json_format(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON hypergraph file: {exc}")
    if not isinstance(obj, dict):
        raise CliError("JSON hypergraph file must be an object")
    for field in ("n", "edges"):
        if field not in obj:
            raise CliError(f"JSON hypergraph file is missing {field!r}")
    n = obj["n"]
    edges = obj["edges"]
    if not isinstance(n, int):
        raise CliError("'n' must be an integer")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise CliError("'edges' must be a list of vertex lists")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise CliError("'name' must be a string")
    return n, edges, name


def load_hypergraph(path: str):
    """Read a hypergraph file (JSON object or 'n m' text form)."""
    try:
        raw = open(path, "rb").read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise CliError(f"{path} is not UTF-8 text")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        n, edges, name = _parse_json_format(text)
    else:
        n, edges, name = _parse_text_format(text)
    try:
        h = build(n, edges)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}")
    return h, name, raw


def _digest(raw: bytes) -> str:
    return "sha256:" + hashlib.sha256(raw).hexdigest()


# -- output -----------------------------------------------------------------


def _fr(x) -> str:
    if x is None:
        return "null"
    return f"{x.numerator}/{x.denominator}"


def _bound(x, sign: str) -> str:
    return sign + "inf" if x is None else _fr(x)


def _render_text(obj, indent=0, out=None):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                out.append(f"{pad}{k}:")
                _render_text(v, indent + 1, out)
            else:
                out.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                out.append(f"{pad}-")
                _render_text(v, indent + 1, out)
            else:
                out.append(f"{pad}- {v}")
    else:
        out.append(f"{pad}{obj}")
    return out


def emit(doc: dict, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(_render_text(doc, 0, [])) + "\n")


def _envelope(command: str, arguments: dict, input_desc=None) -> dict:
    doc = {"tool": "hychro", "version": __version__, "command": command,
           "arguments": arguments}
    if input_desc is not None:
        doc["input"] = input_desc
    return doc


def _input_desc(path, h, name, raw) -> dict:
    desc = {"path": path, "digest": _digest(raw), "n": str(h.n), "m": str(h.m)}
    if name:
        desc["name"] = name
    return desc


def _stats_doc(stats) -> dict:
    return {"recursive_calls": str(stats.recursive_calls),
            "memo_hits": str(stats.memo_hits),
            "max_depth": str(stats.max_depth),
            "elapsed_seconds": round(stats.elapsed_seconds, 6)}


def _engine_config(ns) -> EngineConfig:
    return EngineConfig(pivot_rule=_PIVOT_FLAG[ns.pivot], memo=(ns.memo == "on"))


def _witness_doc(w) -> dict:
    return {"vertices": [str(v) for v in w.vertices],
            "edges": [[str(v) for v in e] for e in w.edges]}


def _verdict_doc(v) -> dict:
    doc = {"value": v.value, "reason": v.reason}
    if v.odd_edge is not None:
        doc["odd_edge"] = [str(x) for x in v.odd_edge]
    if v.witness is not None:
        doc["witness"] = _witness_doc(v.witness)
    doc["cycles_examined"] = str(v.cycles_examined)
    return doc


def _root_report_doc(r) -> dict:
    return {
        "interval": [_bound(r.lower, "-"), _bound(r.upper, "+")],
        "distinct_root_count": str(r.distinct_root_count),
        "isolating_intervals": [[_fr(a), _fr(b)] for a, b in r.isolating_intervals],
        "multiplicity_at_zero": str(r.multiplicity_at_zero),
    }


# -- subcommands ------------------------------------------------------------


def cmd_compute(ns) -> int:
    h, name, raw = load_hypergraph(ns.file)
    p, stats = chromatic_polynomial(h, _engine_config(ns))
    doc = _envelope("compute", {"pivot": ns.pivot, "memo": ns.memo},
                    _input_desc(ns.file, h, name, raw))
    doc["degree"] = str(p.degree)
    doc["coefficients"] = list(p.to_decimal_strings())
    if p.is_zero:
        doc["multiplicity_at_zero"] = None
        doc["warning"] = "zero polynomial: a size-1 edge forbids every coloring"
    else:
        doc["multiplicity_at_zero"] = str(p.multiplicity_at_zero())
    doc["stats"] = _stats_doc(stats)
    emit(doc, ns.format)
    return 0


def cmd_classify(ns) -> int:
    h, name, raw = load_hypergraph(ns.file)
    rep = classify(h, ns.budget)
    doc = _envelope("classify", {"budget": str(ns.budget)},
                    _input_desc(ns.file, h, name, raw))
    doc["is_graph"] = rep.is_graph
    doc["is_sperner"] = rep.is_sperner
    doc["all_even"] = rep.all_even
    doc["big_edge_count"] = str(rep.big_edge_count)
    doc["in_l1"] = _verdict_doc(rep.in_l1)
    doc["in_l0"] = _verdict_doc(rep.in_l0)
    doc["in_l0_prime"] = _verdict_doc(rep.in_l0_prime)
    doc["witness"] = _witness_doc(rep.witness) if rep.witness else None
    doc["cycles_examined"] = str(rep.cycles_examined)
    emit(doc, ns.format)
    return 0


def _parse_width(text: str) -> Fraction:
    try:
        w = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(f"invalid width {text!r}; use a fraction like 1/128")
    if w <= 0:
        raise CliError("width must be positive")
    return w


def cmd_verify(ns) -> int:
    width = _parse_width(ns.width)
    if (ns.file is None) == (ns.poly is None):
        raise CliError("provide exactly one input: a hypergraph file or --poly")
    if ns.poly is not None:
        if ns.n is None:
            raise CliError("--poly needs --n, the vertex count behind the polynomial")
        try:
            coeffs = [int(tok) for tok in ns.poly.split(",")]
        except ValueError:
            raise CliError(f"--poly must be comma-separated integers, got {ns.poly!r}")
        p = Poly(coeffs)
        nverts = ns.n
        input_desc = {"poly": ns.poly, "digest": _digest(ns.poly.encode()),
                      "n": str(nverts)}
        stats = None
    else:
        h, name, raw = load_hypergraph(ns.file)
        p, stats = chromatic_polynomial(h, _engine_config(ns))
        nverts = h.n
        input_desc = _input_desc(ns.file, h, name, raw)
    if p.is_zero:
        raise CliError("the polynomial is identically zero; nothing to certify")
    certify = certify_negative_ray_poly if ns.interval == "neg" \
        else certify_unit_interval_poly
    cert = certify(p, nverts, width)
    doc = _envelope("verify", {"interval": ns.interval, "width": ns.width,
                               "pivot": ns.pivot, "memo": ns.memo}, input_desc)
    doc["verdict"] = "holds" if cert.holds else "fails"
    doc["nvertices"] = str(nverts)
    doc["degree"] = str(p.degree)
    doc["coefficients"] = list(p.to_decimal_strings())
    doc["root_count_in_interval"] = str(cert.root_count)
    doc["multiplicity_at_zero"] = str(cert.multiplicity_at_zero)
    doc["sign_checks"] = [{"probe": label, "sign": str(sign)}
                          for label, sign in cert.sign_checks]
    doc["root_report"] = _root_report_doc(cert.root_report)
    if stats is not None:
        doc["stats"] = _stats_doc(stats)
    emit(doc, ns.format)
    return 0 if cert.holds else 2


def cmd_oracle(ns) -> int:
    h, name, raw = load_hypergraph(ns.file)
    backend = ns.backend or default_backend()
    doc = _envelope("oracle", {"backend": backend,
                               "k": str(ns.k) if ns.k is not None else None},
                    _input_desc(ns.file, h, name, raw))
    if ns.k is not None:
        res = count_colorings(h, ns.k, backend)
        doc["k"] = str(res.k)
        doc["count"] = str(res.count)
    else:
        p = interpolate_polynomial(h, backend)
        doc["degree"] = str(p.degree)
        doc["coefficients"] = list(p.to_decimal_strings())
    emit(doc, ns.format)
    return 0


def cmd_gen(ns) -> int:
    sizes = ()
    if ns.big_sizes:
        try:
            sizes = tuple(int(tok) for tok in ns.big_sizes.split(","))
        except ValueError:
            raise CliError(f"--big-sizes must be comma-separated ints, got {ns.big_sizes!r}")
    try:
        spec = GenSpec(n=ns.n, m2=ns.m2, big_sizes=sizes, family=ns.family,
                       seed=ns.seed, max_tries=ns.max_tries)
    except ValueError as exc:
        raise CliError(str(exc))
    h = random_family_member(spec)
    name = f"{spec.family}-n{spec.n}-s{spec.seed}"
    payload = json.dumps({"name": name, "n": h.n,
                          "edges": [list(e) for e in h.edges]}, indent=1) + "\n"
    if ns.out:
        with open(ns.out, "w") as fh:
            fh.write(payload)
        doc = _envelope("gen", {"family": spec.family, "n": str(spec.n),
                                "m2": str(spec.m2), "big_sizes": ns.big_sizes,
                                "seed": str(spec.seed)})
        doc["seed"] = str(spec.seed)
        doc["out"] = ns.out
        doc["digest"] = _digest(payload.encode())
        doc["n"] = str(h.n)
        doc["m"] = str(h.m)
        emit(doc, ns.format)
    else:
        sys.stdout.write(payload)
    return 0


def _expand_corpus(paths) -> list:
    """Positional bench arguments may be instance files or corpus directories;
    a directory contributes its *.json and *.txt entries in sorted order."""
    out = []
    for path in paths:
        if os.path.isdir(path):
            found = sorted(name for name in os.listdir(path)
                           if name.endswith((".json", ".txt")))
            if not found:
                raise CliError(f"corpus directory {path!r} holds no .json or .txt files")
            out.extend(os.path.join(path, name) for name in found)
        else:
            out.append(path)
    return out


def cmd_bench(ns) -> int:
    rows = []
    for path in _expand_corpus(ns.files):
        h, name, raw = load_hypergraph(path)
        row = {"path": path, "n": str(h.n), "m": str(h.m)}
        engine_rows = []
        for pivot in ("largest", "smallest", "first"):
            for memo in ("on", "off"):
                cfg = EngineConfig(pivot_rule=_PIVOT_FLAG[pivot], memo=(memo == "on"))
                p, stats = chromatic_polynomial(h, cfg)
                engine_rows.append({"pivot": pivot, "memo": memo,
                                    **_stats_doc(stats)})
        row["engine"] = engine_rows
        # oracle backend comparison at the largest k the guard allows (capped)
        k = 0
        for cand in range(min(6, max(2, h.n)), 1, -1):
            if h.n == 0 or cand ** max(h.n, 1) <= GUARD_LIMIT:
                k = cand
                break
        oracle_rows = []
        if k >= 2:
            for backend in available_backends():
                t0 = time.perf_counter()
                res = count_colorings(h, k, backend)
                dt = time.perf_counter() - t0
                oracle_rows.append({"backend": backend, "k": str(res.k),
                                    "count": str(res.count),
                                    "elapsed_seconds": round(dt, 6)})
        row["oracle"] = oracle_rows
        rows.append(row)
    doc = _envelope("bench", {"files": list(ns.files)})
    doc["instances"] = rows
    emit(doc, ns.format)
    return 0


# -- parser -----------------------------------------------------------------


def _add_engine_flags(sp):
    sp.add_argument("--pivot", choices=sorted(_PIVOT_FLAG), default="largest",
                    help="pivot edge rule for deletion-contraction")
    sp.add_argument("--memo", choices=("on", "off"), default="on",
                    help="memoize on canonical keys")


def _add_format_flag(sp):
    sp.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hychro",
        description="Exact chromatic polynomials of hypergraphs (every edge "
                    "must see at least two colors), family classification, "
                    "and real-root certificates.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compute", help="chromatic polynomial of a hypergraph file")
    sp.add_argument("file")
    _add_engine_flags(sp)
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("classify", help="family membership report")
    sp.add_argument("file")
    sp.add_argument("--budget", type=int, default=DEFAULT_CYCLE_BUDGET,
                    help="cycle enumeration budget (partial states)")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="interval sign certificate for P")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--interval", choices=("neg", "unit"), required=True)
    sp.add_argument("--poly", help="ascending comma-separated integer coefficients")
    sp.add_argument("--n", type=int, help="vertex count when using --poly")
    sp.add_argument("--width", default="1/128", help="isolating interval width, e.g. 1/128")
    _add_engine_flags(sp)
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force count or interpolated polynomial")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, help="count colorings at this k instead of interpolating")
    sp.add_argument("--backend", choices=("python", "cython"))
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="deterministic seeded hypergraph generation")
    sp.add_argument("--family", choices=FAMILIES, default="any")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m2", type=int, default=0, help="number of size-2 edges")
    sp.add_argument("--big-sizes", default="", help="comma-separated big edge sizes, e.g. 4,4")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-tries", type=int, default=200)
    sp.add_argument("--out", help="write the hypergraph file here instead of stdout")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench",
                        help="engine and oracle timings over instance files "
                             "or corpus directories")
    sp.add_argument("files", nargs="+",
                    help="hypergraph files, or directories of .json/.txt instances")
    _add_format_flag(sp)
    sp.set_defaults(func=cmd_bench)

    return ap


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, GenerationError, StateSpaceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
