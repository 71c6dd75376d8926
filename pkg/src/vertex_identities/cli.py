"""Command-line interface: ``vertex-identities {verify,enumerate,table,selftest,list}``.

Exit codes: 0 success, 1 a verification failed (first mismatch on stderr),
2 usage error.  Rationals are read and written as exact literals ``p/q``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .exact import rational_literal
from .latticepf import build_lattice, enumerate_lattice, lattice_configurations, lattice_vertex_types
from .planepart import (
    CENTRAL_CONDITIONS,
    enumerate_pp,
    enumerate_symmetric_pp,
    enumerate_symplectic_pp,
    gs_lhs,
    path_stats,
    path_weight,
)
from .symfunc import DegenerateSample
from .verify import (
    REGISTRY,
    Report,
    list_identities,
    report_line,
    reports_to_csv,
    reports_to_json,
    verify_identity,
)
from .verify.engine import get_spec, resolve_params

SEED_ENV = "VERTEX_IDENTITIES_SEED"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DOMAINS = ("asm", "uasm", "osasm", "pp", "spp", "sympp")
TABLE_SERIES = ("macmahon", "vuletic", "vol-pp", "symp-pp-vol", "asm")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


_RATIONAL_LITERAL = re.compile(r"\s*[+-]?\d+(/\d+)?\s*")


def _rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q``; decimal and exponent forms are refused."""
    if not _RATIONAL_LITERAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not an exact rational literal p/q: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}") from None


def _rational_list(text: str) -> List[Fraction]:
    return [_rational(part) for part in text.split(",") if part.strip()]


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vertex-identities", description="Exact verification of six-vertex and plane-partition identities.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    v = sub.add_parser("verify", help="verify registered identities")
    v.add_argument("--id", action="append", dest="ids", help="identity id, comma list, or 'all' (repeatable)")
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--degree", type=int, dest="D")
    v.add_argument("--order", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--t", type=_rational)
    v.add_argument("--timing", action="store_true", help="include wall-clock times (breaks byte-identical output)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(v)

    e = sub.add_parser("enumerate", help="enumerate lattice configurations or plane partitions")
    e.add_argument("--domain", choices=DOMAINS, required=True)
    e.add_argument("--n", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--order", type=int, help="maximal volume (pp, spp) or central weight (sympp)")
    e.add_argument("--condition", choices=CENTRAL_CONDITIONS, default="none", help="central condition for spp")
    e.add_argument("--x", type=_rational_list, help="comma-separated rational rapidities")
    e.add_argument("--y", type=_rational_list, help="comma-separated rational rapidities")
    e.add_argument("--t", type=_rational)
    e.add_argument("--q", type=_rational, help="volume weight for pp/spp weighted sums")
    e.add_argument("--count-only", action="store_true")
    common(e)

    t = sub.add_parser("table", help="print q-coefficient tables")
    t.add_argument("--series", choices=TABLE_SERIES, required=True)
    t.add_argument("--order", type=int, required=True)
    t.add_argument("--m", type=int)
    t.add_argument("--n", type=int)
    t.add_argument("--t", type=_rational)
    common(t)

    s = sub.add_parser("selftest", help="run the acceptance suite")
    s.add_argument("--criterion", type=int, choices=range(1, 11), help="run a single criterion")
    common(s)

    ls = sub.add_parser("list", help="print the identity registry")
    common(ls)
    return p


# -- output ---------------------------------------------------------------------------------


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- verify ---------------------------------------------------------------------------------


def _requested_ids(raw: Optional[List[str]]) -> List[str]:
    if not raw:
        raise UsageError("verify needs --id (an identity id, a comma list, or 'all')")
    ids: List[str] = []
    for chunk in raw:
        for part in chunk.split(","):
            part = part.strip()
            if not part:
                continue
            if part == "all":
                ids.extend(REGISTRY)
            elif part not in REGISTRY:
                raise UsageError(f"unknown identity {part!r}; run 'list' to see the registry")
            else:
                ids.append(part)
    return list(dict.fromkeys(ids))


def _verify_task(task) -> Report:
    identity_id, kwargs = task
    return verify_identity(identity_id, **kwargs)


def cmd_verify(args) -> int:
    ids = _requested_ids(args.ids)
    seed = args.seed if args.seed is not None else _default_seed()
    kwargs = {"n": args.n, "m": args.m, "D": args.D, "order": args.order, "t": args.t, "seed": seed, "samples": args.samples}
    if args.samples is not None and args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    # validate sizes up front so a bad size is a usage error, not a crash
    for identity_id in ids:
        try:
            resolve_params(get_spec(identity_id), {k: kwargs[k] for k in ("n", "m", "D", "order", "t")})
        except ValueError as exc:
            raise UsageError(f"{identity_id}: {exc}") from None
    tasks = [(i, kwargs) for i in ids]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))
    else:
        reports = [_verify_task(task) for task in tasks]

    config = {
        "command": "verify",
        "ids": ids,
        "n": args.n,
        "m": args.m,
        "degree": args.D,
        "order": args.order,
        "t": rational_literal(args.t) if args.t is not None else None,
        "seed": seed,
        "samples": args.samples,
    }
    if args.format == "json":
        text = reports_to_json(reports, config, timing=args.timing)
    elif args.format == "csv":
        text = reports_to_csv(reports, timing=args.timing)
    else:
        text = "".join(report_line(r, args.timing) + "\n" for r in reports)
        passed = sum(r.passed for r in reports)
        text += f"{passed}/{len(reports)} passed (seed {seed})\n"
    _emit(text, args.out)

    failed = [r for r in reports if not r.passed]
    for r in failed:
        detail = json.dumps(r.first_mismatch) if r.first_mismatch else r.note
        print(f"{r.id}: {r.status}: {detail}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# -- enumerate ------------------------------------------------------------------------------


def _need(value, flag: str, domain: str):
    if value is None:
        raise UsageError(f"--domain {domain} needs {flag}")
    return value


def _rapidities(values, count: int, flag: str) -> List[Fraction]:
    if values is None:
        return [Fraction(0)] * count
    if len(values) != count:
        raise UsageError(f"{flag} needs exactly {count} values, got {len(values)}")
    return values


def _asm_matrix(types: List[str], rows: int, cols: int) -> List[List[int]]:
    """Read an (partial) ASM off a square-lattice configuration (c vertices are the nonzero entries)."""
    grid = [types[r * cols:(r + 1) * cols] for r in range(rows)][::-1]  # vertices are stored bottom row first
    out = []
    for row in grid:
        sign = 1
        entries = []
        for name in row:
            if name.startswith("c"):
                entries.append(sign)
                sign = -sign
            else:
                entries.append(0)
        out.append(entries)
    return out


def _lattice_domain(args):
    domain = args.domain
    if domain == "asm":
        n = _need(args.n, "--n", domain)
        m = args.m if args.m is not None else n
        kind = "square" if m == n else "partialSquare"
        x = _rapidities(args.x, m, "--x")
        y = _rapidities(args.y, n, "--y")
    elif domain == "uasm":
        n = _need(args.n, "--n", domain)
        m = args.m if args.m is not None else n
        kind = "uTurn" if m == n else "partialUTurn"
        x = _rapidities(args.x, m, "--x")
        y = _rapidities(args.y, n, "--y") if args.y is not None else [Fraction(2)] * n
    else:
        n = _need(args.n, "--n (number of lines)", domain)
        kind = "offDiagonal" if n % 2 == 0 else "offDiagonalOdd"
        x = _rapidities(args.x, n, "--x")
        y = []
        m = n
    if n < 1 or m < 1 or m > n:
        raise UsageError("need 1 <= m <= n")
    if n > 6:
        raise UsageError("lattice enumeration is limited to n <= 6")
    return kind, m, n, x, y


def _enumerate_lattice(args) -> str:
    kind, m, n, x, y = _lattice_domain(args)
    t = args.t if args.t is not None else Fraction(0)
    weighted = args.x is not None or args.y is not None or args.t is not None
    try:
        build_lattice(kind, x, y)
        count, total = enumerate_lattice(kind, x, y, t)
    except DegenerateSample as exc:
        raise UsageError(f"degenerate parameters: {exc}") from None
    if args.count_only:
        return _count_output(args, count, total if weighted else None)
    configs = lattice_configurations(kind, x, y, t)
    types = lattice_vertex_types(kind, x, y, t)
    objects = []
    for cfg, names in zip(configs, types):
        item: Dict[str, object] = {}
        if args.domain == "asm":
            item["matrix"] = _asm_matrix(names, m, n)
        else:
            item["vertices"] = names
        if weighted:
            item["weight"] = rational_literal(cfg.weight)
        objects.append(item)
    return _objects_output(args, objects, count, total if weighted else None)


def _pp_objects(args):
    domain = args.domain
    order = _need(args.order, "--order", domain)
    if order < 0 or order > 12:
        raise UsageError("--order must be in 0..12")
    if domain == "pp":
        n = _need(args.n, "--n", domain)
        m = args.m if args.m is not None else n
        return [("pp", pi) for pi in enumerate_pp(m, n, order)]
    if domain == "spp":
        n = _need(args.n, "--n", domain)
        return [("pp", pi) for pi in enumerate_symmetric_pp(n, order, args.condition)]
    n = _need(args.n, "--n", domain)
    m = args.m if args.m is not None else n
    if m > n:
        raise UsageError("sympp needs m <= n")
    return [("sympp", ch) for ch in enumerate_symplectic_pp(m, n, order)]


def _enumerate_pp(args) -> str:
    items = _pp_objects(args)
    weighted = args.domain != "sympp" and (args.t is not None or args.q is not None)
    t = args.t if args.t is not None else Fraction(0)
    q = args.q if args.q is not None else Fraction(1)
    total = Fraction(0)
    objects = []
    for kind, obj in items:
        if kind == "pp":
            w = path_weight(path_stats(obj).by_depth, t) * q ** obj.volume if weighted else None
            if weighted:
                total += w
            item: Dict[str, object] = {"entries": [list(r) for r in obj.entries], "volume": obj.volume}
            if w is not None:
                item["weight"] = rational_literal(w)
        else:
            item = {"left": [list(p) for p in obj.left], "right": [list(p) for p in obj.right]}
        objects.append(item)
    if args.count_only:
        return _count_output(args, len(items), total if weighted else None)
    return _objects_output(args, objects, len(items), total if weighted else None)


def _count_output(args, count: int, total: Optional[Fraction]) -> str:
    if args.format == "json":
        doc: Dict[str, object] = {"domain": args.domain, "count": count}
        if total is not None:
            doc["weightSum"] = rational_literal(total)
        return _json(doc)
    if args.format == "csv":
        if total is None:
            return _csv(["domain", "count"], [[args.domain, count]])
        return _csv(["domain", "count", "weightSum"], [[args.domain, count, rational_literal(total)]])
    if total is None:
        return f"{count}\n"
    return f"{count} {rational_literal(total)}\n"


def _render(item: Dict[str, object]) -> str:
    if "matrix" in item:
        body = "\n".join(" ".join(f"{v:>2}" for v in row) for row in item["matrix"])
    elif "vertices" in item:
        body = " ".join(item["vertices"])
    elif "entries" in item:
        body = "\n".join(" ".join(map(str, row)) for row in item["entries"]) or "(empty)"
    else:
        body = f"left {item['left']}\nright {item['right']}"
    if "weight" in item:
        body += f"\nweight {item['weight']}"
    return body


def _objects_output(args, objects, count: int, total: Optional[Fraction]) -> str:
    if args.format == "json":
        doc: Dict[str, object] = {"domain": args.domain, "count": count, "objects": objects}
        if total is not None:
            doc["weightSum"] = rational_literal(total)
        return _json(doc)
    if args.format == "csv":
        keys = sorted({k for o in objects for k in o})
        rows = [[json.dumps(o.get(k), separators=(",", ":")) if not isinstance(o.get(k), (str, int)) else o.get(k)
                 for k in keys] for o in objects]
        return _csv(keys, rows)
    chunks = [_render(o) for o in objects]
    text = "\n\n".join(chunks) + ("\n\n" if chunks else "")
    text += f"count {count}\n"
    if total is not None:
        text += f"weight sum {rational_literal(total)}\n"
    return text


def cmd_enumerate(args) -> int:
    if args.domain in ("asm", "uasm", "osasm"):
        text = _enumerate_lattice(args)
    else:
        text = _enumerate_pp(args)
    _emit(text, args.out)
    return EXIT_OK


# -- table ----------------------------------------------------------------------------------


def table_coefficients(series: str, order: int, m=None, n=None, t=None) -> List[object]:
    if order < 0 or order > 12:
        raise UsageError("--order must be in 0..12")
    if series == "asm":
        from .latticepf import asm_count

        if order > 6:
            raise UsageError("asm table is limited to order <= 6")
        return [asm_count(k) for k in range(1, order + 1)]
    if series == "macmahon":
        s = gs_lhs("macmahon", order=order)
    elif series == "vuletic":
        if t is None:
            raise UsageError("--series vuletic needs --t")
        s = gs_lhs("vuletic-gs", order=order, t=t)
    else:
        if m is None or n is None:
            raise UsageError(f"--series {series} needs --m and --n")
        if series == "symp-pp-vol" and m > n:
            raise UsageError("symp-pp-vol needs m <= n")
        s = gs_lhs(series, m=m, n=n, order=order)
    coeffs = dict(s.items())
    return [coeffs.get((k,), Fraction(0)) for k in range(order + 1)]


def cmd_table(args) -> int:
    coeffs = table_coefficients(args.series, args.order, args.m, args.n, args.t)
    literals = [rational_literal(Fraction(c)) for c in coeffs]
    start = 1 if args.series == "asm" else 0
    if args.format == "json":
        text = _json({"series": args.series, "order": args.order, "coefficients": literals})
    elif args.format == "csv":
        text = _csv(["n" if start else "power", "coefficient"], [[k + start, c] for k, c in enumerate(literals)])
    else:
        text = ", ".join(literals) + "\n"
    _emit(text, args.out)
    return EXIT_OK


# -- selftest / list ------------------------------------------------------------------------


def cmd_selftest(args) -> int:
    from .acceptance import run_all, run_one

    if args.criterion:
        results = [run_one(args.criterion)]
    else:
        results = run_all(progress=(lambda r: print(r.line(), file=sys.stderr, flush=True)) if args.out else None)
    if args.format == "json":
        text = _json({"criteria": [{"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
                                   for r in results]})
    elif args.format == "csv":
        text = _csv(["criterion", "title", "passed", "detail"], [[r.number, r.title, r.passed, r.detail] for r in results])
    else:
        text = "".join(r.line() + "\n" for r in results)
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_list(args) -> int:
    rows = list_identities()
    if args.format == "json":
        text = _json([{"id": i, "equation": eq, "mode": mode, "kind": REGISTRY[i].status, "defaults": d,
                       "summary": REGISTRY[i].summary} for i, eq, mode, d in rows])
    elif args.format == "csv":
        text = _csv(["id", "equation", "mode", "kind", "defaults"],
                    [[i, eq, mode, REGISTRY[i].status, json.dumps(d, separators=(",", ":"))] for i, eq, mode, d in rows])
    else:
        text = "".join(
            f"{i:<20} {eq:<22} {mode:<14} {REGISTRY[i].status:<11} "
            + " ".join(f"{k}={v}" for k, v in d.items()) + "\n"
            for i, eq, mode, d in rows
        )
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "table": cmd_table,
    "selftest": cmd_selftest,
    "list": cmd_list,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv`` and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        if args.command is None:
            raise UsageError("missing subcommand; choose one of " + ", ".join(COMMANDS))
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
