"""Deterministic JSON and CSV rendering of command results.

Exact rationals are always written as ``"p/q"`` strings, monomials in the
ring's text syntax, and JSON keys are sorted, so two runs of the same
session differ only in ``duration``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .lab import ArtinReesReport, DecompositionRow, SweepReport
from .monomial import MonomialIdeal, MonomialPrime, PrimaryComponent
from .regseq import PermutabilityVerdict, RegularSequence, RegularityVerdict

VERSION_TAG = f"regdecomp {__version__}"


@dataclass
class ReportDocument:
    command: str
    payload: dict
    exit_code: int = 0
    duration: float = 0.0
    version: str = VERSION_TAG

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "version": self.version,
            "exit_code": self.exit_code,
            "duration": self.duration,
            "payload": self.payload,
        }


def ratio_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def prime_json(P: MonomialPrime) -> str:
    return str(P)


def ideal_json(I: MonomialIdeal):
    return I.generator_strings()


def component_json(c: PrimaryComponent) -> dict:
    ring = c.component.ring
    return {
        "component": ideal_json(c.component),
        "radical": prime_json(c.radical),
        "containment_exponent": c.containment_exponent,
        "witness": None if c.witness is None else ring.format_monomial(c.witness),
    }


def row_json(row: DecompositionRow) -> dict:
    return {
        "n": list(row.n.entries),
        "total": row.total,
        "length": row.length,
        "k_max": row.k_max,
        "ratio": ratio_text(row.ratio),
        "components": [component_json(c) for c in row.components],
    }


def source_json(source):
    if isinstance(source, RegularSequence):
        return [str(x) for x in source.elements]
    return ideal_json(source)


def sweep_json(rep: SweepReport, kind: str) -> dict:
    return {
        "kind": kind,
        "source": source_json(rep.source),
        "max_total": rep.max_total,
        "rows": [row_json(r) for r in rep.rows],
        "lambda": [prime_json(P) for P in rep.lambda_],
        "lambda_stable_from": rep.lambda_stable_from,
        "C_estimate": rep.C_estimate,
        "max_ratio": ratio_text(max(r.ratio for r in rep.rows)),
        "bound_holds": rep.bound_holds,
        "note": f"empirical: exponent vectors with total <= {rep.max_total} only",
    }


def artin_rees_json(rep: ArtinReesReport) -> dict:
    return {
        "kind": "artin-rees",
        "element": str(rep.element),
        "prime": str(rep.prime),
        "method": rep.method,
        "h_max": rep.h_max,
        "c_per_h": list(rep.c_per_h),
        "stabilized_C": rep.stabilized_C,
        "note": f"empirical up to h_max = {rep.h_max}",
    }


def regularity_json(v: RegularityVerdict) -> dict:
    return {
        "is_regular": v.is_regular,
        "index": v.index,
        "witness": None if v.witness is None else str(v.witness),
        "reason": v.reason,
    }


def permutability_json(v: PermutabilityVerdict) -> dict:
    return {
        "is_permutable": v.is_permutable,
        "permutation": None if v.permutation is None else list(v.permutation),
        "failure": None if v.failure is None else regularity_json(v.failure),
    }


def to_json(report: ReportDocument) -> str:
    return json.dumps(report.as_dict(), sort_keys=True, indent=2) + "\n"


ROW_COLUMNS = ["n", "total", "length", "k_max", "ratio", "radicals"]


def _csv_rows(payload: dict):
    if "rows" in payload:
        yield ROW_COLUMNS
        for r in payload["rows"]:
            radicals = sorted({c["radical"] for c in r["components"]})
            yield [";".join(map(str, r["n"])), r["total"], r["length"], r["k_max"],
                   r["ratio"], ";".join(radicals)]
    elif "c_per_h" in payload:
        yield ["h", "C_h"]
        for h, c in enumerate(payload["c_per_h"], start=1):
            yield [h, c]
    elif "checks" in payload:
        yield ["n", "i", "holds"]
        for c in payload["checks"]:
            yield [";".join(map(str, c["n"])), c["i"], str(c["holds"]).lower()]
    else:
        scalars = {k: v for k, v in sorted(payload.items()) if not isinstance(v, (dict, list))}
        yield list(scalars)
        yield ["" if v is None else (str(v).lower() if isinstance(v, bool) else v)
               for v in scalars.values()]


def to_csv(report: ReportDocument) -> str:
    """One line per decomposition row (or per ``h`` / per check); witnesses are omitted."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in _csv_rows(report.payload):
        writer.writerow(row)
    return buf.getvalue()


def emit(report: ReportDocument, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    raise ValueError(f"unknown format {fmt!r}")
