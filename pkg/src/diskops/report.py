"""Structured verification reports and their serialization.

Every named check in the package produces a ``VerificationReport``:
what was computed, what it was compared against (with a provenance tag),
the tolerance, and a status.  ``consistent`` is reserved for one-sided
checks where only a bound violation would be refutable.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
CONSISTENT = "consistent"
ERROR = "error"

PAPER = "PAPER"
TRIVIAL = "TRIVIAL"
DERIVED = "DERIVED"

_STATUSES = (PASS, FAIL, CONSISTENT, ERROR)
_PROVENANCES = (PAPER, TRIVIAL, DERIVED)


@dataclass(frozen=True)
class LabeledValue:
    label: str
    value: complex


@dataclass(frozen=True)
class ReferenceValue:
    label: str
    value: complex
    provenance: str

    def __post_init__(self):
        if self.provenance not in _PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


@dataclass
class VerificationReport:
    check_id: str
    status: str
    computed: tuple[LabeledValue, ...] = ()
    reference: tuple[ReferenceValue, ...] = ()
    tolerance: float = 0.0
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        self.computed = tuple(
            v if isinstance(v, LabeledValue) else LabeledValue(*v) for v in self.computed
        )
        self.reference = tuple(
            v if isinstance(v, ReferenceValue) else ReferenceValue(*v) for v in self.reference
        )

    @property
    def ok(self) -> bool:
        return self.status in (PASS, CONSISTENT)


def make_report(check_id, computed, reference, tolerance, status):
    """Uniform constructor taking (label, value) / (label, value, tag) tuples."""
    return VerificationReport(
        check_id=check_id,
        status=status,
        computed=tuple(LabeledValue(l, complex(v)) for l, v in computed),
        reference=tuple(ReferenceValue(l, complex(v), p) for l, v, p in reference),
        tolerance=float(tolerance),
    )


def compare_report(check_id, triples, tolerance, relative=False):
    """Pass/fail report from (label, computed, reference, provenance) rows.

    Passes iff every |computed - reference| is within the tolerance
    (scaled by |reference| when ``relative``).
    """
    computed, reference = [], []
    ok = True
    for label, got, want, prov in triples:
        got, want = complex(got), complex(want)
        bound = tolerance * max(1.0, abs(want)) if relative else tolerance
        ok = ok and abs(got - want) <= bound
        computed.append((label, got))
        reference.append((label, want, prov))
    return make_report(check_id, computed, reference, tolerance, PASS if ok else FAIL)


def format_quantity(value) -> str:
    """Numeric rendering with 15 significant digits; complex as re+imj."""
    z = complex(value)
    if z.imag == 0.0:
        return f"{z.real:.15g}"
    return f"{z.real:.15g}{z.imag:+.15g}j"


def _value_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def report_to_dict(r: VerificationReport) -> dict:
    return {
        "check_id": r.check_id,
        "status": r.status,
        "computed": [{"label": v.label, "value": _value_pair(v.value)} for v in r.computed],
        "reference": [
            {"label": v.label, "value": _value_pair(v.value), "provenance": v.provenance}
            for v in r.reference
        ],
        "tolerance": r.tolerance,
        "elapsed_ms": r.elapsed_ms,
    }


def report_from_dict(d: dict) -> VerificationReport:
    return VerificationReport(
        check_id=d["check_id"],
        status=d["status"],
        computed=tuple(
            LabeledValue(v["label"], complex(v["value"][0], v["value"][1])) for v in d["computed"]
        ),
        reference=tuple(
            ReferenceValue(v["label"], complex(v["value"][0], v["value"][1]), v["provenance"])
            for v in d["reference"]
        ),
        tolerance=d["tolerance"],
        elapsed_ms=d["elapsed_ms"],
    )


def emit_reports(reports, fmt: str = "text") -> bytes:
    """Render a report list as a byte stream in json/csv/text form."""
    if fmt == "json":
        return json.dumps([report_to_dict(r) for r in reports], indent=2).encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["check_id", "status", "tolerance", "elapsed_ms", "computed", "reference"])
        for r in reports:
            writer.writerow(
                [
                    r.check_id,
                    r.status,
                    f"{r.tolerance:.15g}",
                    f"{r.elapsed_ms:.15g}",
                    ";".join(f"{v.label}={format_quantity(v.value)}" for v in r.computed),
                    ";".join(
                        f"{v.label}={format_quantity(v.value)}[{v.provenance}]"
                        for v in r.reference
                    ),
                ]
            )
        return buf.getvalue().encode()
    if fmt == "text":
        lines = []
        width = max((len(r.check_id) for r in reports), default=10)
        for r in reports:
            lines.append(
                f"[{r.status.upper():>10s}] {r.check_id:<{width}s}"
                f"  tol={r.tolerance:.3g}  ({r.elapsed_ms:.1f} ms)"
            )
            refs = {v.label: v for v in r.reference}
            for v in r.computed:
                line = f"    {v.label} = {format_quantity(v.value)}"
                if v.label in refs:
                    ref = refs[v.label]
                    line += f"  vs {format_quantity(ref.value)} [{ref.provenance}]"
                lines.append(line)
            for label, ref in refs.items():
                if not any(v.label == label for v in r.computed):
                    lines.append(
                        f"    {label} (reference) = {format_quantity(ref.value)} [{ref.provenance}]"
                    )
        counts = {}
        for r in reports:
            counts[r.status] = counts.get(r.status, 0) + 1
        summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
        lines.append(f"-- {len(reports)} checks ({summary})")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown output format {fmt!r}")


def parse_reports(data: bytes) -> list[VerificationReport]:
    """Inverse of ``emit_reports(..., 'json')``."""
    return [report_from_dict(d) for d in json.loads(data.decode())]


def reports_ok(reports) -> bool:
    """Exit-code contract: true iff no report failed or errored."""
    return all(r.ok for r in reports)
