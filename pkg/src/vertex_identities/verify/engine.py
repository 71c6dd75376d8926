"""Verification engine: run builders over seeded samples and produce Reports."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from ..exact import TruncSeries, rational_literal
from ..symfunc import DegenerateSample
from .identities import REGISTRY, IdentitySpec, Outcome, _b_cb

SCHEMA_VERSION = 1
MAX_RETRIES = 25
MAX_DEGREE = 12
# largest n accepted per identity id (desk-scale guards)
SIZE_GUARDS = {"default": 4, "conj1": 3, "conj1prime": 3, "thm3": 3, "thm4": 3, "conj2": 3, "conj2prime": 3,
               "sym-pp-OSASM": 2, "osasm-lattice": 3, "uasm-lattice": 3, "dwpf-lattice": 5}
DEFAULT_SAMPLES = 3


@dataclass
class Report:
    id: str
    equation: str
    mode: str
    kind: str
    params: Dict[str, object]
    seed: int
    status: str  # pass | fail | skipped-degenerate
    samples: List[Dict[str, object]] = field(default_factory=list)
    lhs_digest: str = ""
    rhs_digest: str = ""
    first_mismatch: Optional[Dict[str, object]] = None
    elapsed_ms: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = False) -> Dict[str, object]:
        out: Dict[str, object] = {
            "id": self.id,
            "equation": self.equation,
            "mode": self.mode,
            "kind": self.kind,
            "params": self.params,
            "seed": self.seed,
            "status": self.status,
            "samples": self.samples,
            "lhsDigest": self.lhs_digest,
            "rhsDigest": self.rhs_digest,
        }
        if self.first_mismatch is not None:
            out["firstMismatch"] = self.first_mismatch
        if self.note:
            out["note"] = self.note
        if timing:
            out["elapsedMs"] = self.elapsed_ms
        return out


def canonical(value) -> str:
    if isinstance(value, TruncSeries):
        body = ";".join(
            "(" + ",".join(map(str, e)) + "):" + rational_literal(c) for e, c in value.items()
        )
        return f"series[k={value.k},D={value.cutoff}]{{{body}}}"
    return rational_literal(Fraction(value))


def _digest(parts: Iterable[str]) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode())
        h.update(b"\n")
    return h.hexdigest()


def _mismatch(out: Outcome, index: int) -> Optional[Dict[str, object]]:
    if isinstance(out.lhs, TruncSeries) or isinstance(out.rhs, TruncSeries):
        diff = out.lhs.first_difference(out.rhs)
        if diff is None:
            return None
        exp, a, b = diff
        return {"sample": index, "exponent": list(exp), "lhs": rational_literal(a), "rhs": rational_literal(b)}
    if out.lhs == out.rhs:
        return None
    return {"sample": index, "lhs": rational_literal(out.lhs), "rhs": rational_literal(out.rhs)}


def get_spec(identity_id: str) -> IdentitySpec:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}; run 'list' to see the registry") from None


def resolve_params(spec: IdentitySpec, overrides: Dict[str, object]) -> Dict[str, object]:
    params: Dict[str, object] = dict(spec.defaults)
    for key, val in overrides.items():
        if val is None:
            continue
        if key == "t":
            params["t"] = Fraction(val)
        elif key in params:
            params[key] = int(val)
    if "D" in params and not 0 <= params["D"] <= MAX_DEGREE:
        raise ValueError(f"degree must be in 0..{MAX_DEGREE}")
    guard = SIZE_GUARDS.get(spec.id, SIZE_GUARDS["default"])
    for key in ("n", "m"):
        if key in params and not 1 <= params[key] <= guard:
            raise ValueError(f"{key} = {params[key]} is outside the guard 1..{guard} for {spec.id}")
    if "m" in params and "n" in params and spec.id not in ("s-cauch", "hl-cauch2", "s-pp-gs", "hl-pp-gs", "vol-pp"):
        if params["m"] > params["n"]:
            raise ValueError("need m <= n")
    if "M" in params and not params["m"] <= params["M"] <= 8:
        raise ValueError("need m <= M <= 8")
    return params


def _params_out(params: Dict[str, object]) -> Dict[str, object]:
    return {k: (rational_literal(v) if isinstance(v, Fraction) else v) for k, v in params.items()}


def verify_identity(
    identity_id: str,
    n: Optional[int] = None,
    m: Optional[int] = None,
    D: Optional[int] = None,
    seed: int = 0,
    samples: Optional[int] = None,
    t=None,
    order: Optional[int] = None,
    **extra,
) -> Report:
    """Check one registered identity at ``samples`` seeded sample points."""
    spec = get_spec(identity_id)
    overrides = {"n": n, "m": m, "D": D, "t": t, "order": order}
    overrides.update(extra)
    params = resolve_params(spec, overrides)
    count = samples if samples is not None else DEFAULT_SAMPLES
    if not spec.randomized:
        count = 1
    if count < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(f"{seed}:{identity_id}")
    start = time.perf_counter()
    lhs_parts: List[str] = []
    rhs_parts: List[str] = []
    records: List[Dict[str, object]] = []
    status = "pass"
    mismatch = None
    note = ""
    for index in range(count):
        out = None
        for _ in range(MAX_RETRIES):
            try:
                out = spec.builder(params, rng)
                break
            except (DegenerateSample, ZeroDivisionError):
                continue
        if out is None:
            status = "skipped-degenerate"
            note = f"no admissible sample after {MAX_RETRIES} draws"
            break
        records.append(out.sample)
        lhs_parts.append(canonical(out.lhs))
        rhs_parts.append(canonical(out.rhs))
        mismatch = _mismatch(out, index)
        if mismatch is not None:
            status = "fail"
            break
    elapsed = int((time.perf_counter() - start) * 1000)
    return Report(
        id=spec.id,
        equation=spec.equation,
        mode=spec.mode,
        kind=spec.status,
        params=_params_out(params),
        seed=seed,
        status=status,
        samples=records,
        lhs_digest=_digest(lhs_parts),
        rhs_digest=_digest(rhs_parts),
        first_mismatch=mismatch,
        elapsed_ms=elapsed,
        note=note,
    )


def verify_pfaffian_cauchy_binet(m: int, M: int, seed: int = 0) -> Report:
    """Both Pfaffian Cauchy-Binet forms (general T and T_ij = x_i^(j-1)) at one seed."""
    if m % 2 or m < 0 or not m <= M <= 8:
        raise ValueError("need m even and m <= M <= 8")
    rng = random.Random(f"{seed}:cb-analog")
    start = time.perf_counter()
    params = {"m": m, "M": M}
    lhs_parts, rhs_parts, records = [], [], []
    status, mismatch = "pass", None
    for index, vand in enumerate((False, True)):
        out = _b_cb(params, rng, vand)
        records.append({"form": "cb-analog2" if vand else "cb-analog1", **out.sample})
        lhs_parts.append(canonical(out.lhs))
        rhs_parts.append(canonical(out.rhs))
        mismatch = _mismatch(out, index)
        if mismatch is not None:
            status = "fail"
            break
    return Report(
        id="cb-analog",
        equation="cb-analog1,cb-analog2",
        mode="rationalPoint",
        kind="classical",
        params=params,
        seed=seed,
        status=status,
        samples=records,
        lhs_digest=_digest(lhs_parts),
        rhs_digest=_digest(rhs_parts),
        first_mismatch=mismatch,
        elapsed_ms=int((time.perf_counter() - start) * 1000),
    )


def list_identities() -> List[Tuple[str, str, str, Dict[str, int]]]:
    """(id, equation tag, mode, default sizes) in registry order."""
    return [(s.id, s.equation, s.mode, dict(s.defaults)) for s in REGISTRY.values()]


# -- serialisation ------------------------------------------------------------------------


def reports_to_json(reports: List[Report], config: Dict[str, object], timing: bool = False) -> str:
    doc = {
        "schemaVersion": SCHEMA_VERSION,
        "config": config,
        "reports": [r.to_dict(timing) for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


CSV_FIELDS = ["id", "equation", "mode", "kind", "status", "seed", "params", "lhsDigest", "rhsDigest", "firstMismatch"]


def reports_to_csv(reports: List[Report], timing: bool = False) -> str:
    buf = io.StringIO()
    fields = CSV_FIELDS + (["elapsedMs"] if timing else [])
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = {
            "id": r.id,
            "equation": r.equation,
            "mode": r.mode,
            "kind": r.kind,
            "status": r.status,
            "seed": r.seed,
            "params": json.dumps(r.params, sort_keys=True, separators=(",", ":")),
            "lhsDigest": r.lhs_digest,
            "rhsDigest": r.rhs_digest,
            "firstMismatch": json.dumps(r.first_mismatch, separators=(",", ":")) if r.first_mismatch else "",
        }
        if timing:
            row["elapsedMs"] = r.elapsed_ms
        writer.writerow(row)
    return buf.getvalue()


def report_line(r: Report, timing: bool = False) -> str:
    params = " ".join(f"{k}={v}" for k, v in r.params.items())
    line = f"{r.status.upper():<18} {r.id:<20} [{r.equation}] {params}"
    if timing:
        line += f" ({r.elapsed_ms} ms)"
    if r.first_mismatch:
        line += f"  first mismatch: {json.dumps(r.first_mismatch)}"
    return line
