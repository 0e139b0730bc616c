"""Certificate pipelines, table verification reports, and serialization.

A certificate records, for one (family, n, X) triple, the ordered gate
verdicts and the conclusion they support. A run report bundles the
certificates of a parameter sweep. Serialization is deterministic except for
an explicit generation timestamp.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional, Sequence, Union

from . import fusion, gates, tables
from .groups import REE, SUBFIELD, CaseFamily, OuterOption, get_family, outer_subgroup_options

VERSION = "0.1.0"

NO_DTG = "no_dtg"
UNDETERMINED = "undetermined"

ASSUMPTION_MULTIPLICITY_FREE = (
    "multiplicity-free classification of the subfield coset action taken as external input"
)
ASSUMPTION_OUTER_EVEN = (
    "outer subgroup descriptors for even field-automorphism order come from the cyclic model, unverified"
)
ASSUMPTION_BCN = (
    "absence of a feasible intersection array at 2808 vertices taken from published tables"
)
ASSUMPTION_KERNEL = (
    "nontrivial kernel on every suborbit (proper-divisor premise) assumed for the kernel chain"
)

_VERDICT_TEXT = {
    gates.EXCLUDES: "Excludes",
    gates.INCONCLUSIVE: "Inconclusive",
    gates.NOT_APPLICABLE: "NotApplicable",
    gates.ASSUMED_EXTERNAL: "AssumedExternal",
}

XFilter = Optional[Sequence[tuple[int, bool]]]


@dataclass(frozen=True)
class Certificate:
    case: str
    n: int
    q: int
    x_order: int
    x_graph: bool
    gates: tuple[gates.GateVerdict, ...]
    conclusion: str
    assumptions: tuple[str, ...]


@dataclass(frozen=True)
class RunReport:
    tool_version: str
    case: str
    n_min: int
    n_max: int
    strict: bool
    certificates: tuple[Certificate, ...]

    @property
    def summary(self) -> dict[str, int]:
        no_dtg = sum(1 for c in self.certificates if c.conclusion == NO_DTG)
        return {
            "total": len(self.certificates),
            "no_dtg": no_dtg,
            "undetermined": len(self.certificates) - no_dtg,
        }


@dataclass(frozen=True)
class ParamCheck:
    param: int
    index: int = 0
    mass_total: int = 0
    mass_ok: bool = False
    lengths_divide: bool = False
    proper_divisors: bool = False
    suborbit_total: int = 0
    suborbit_expected: int = 0
    suborbit_ok: bool = False
    table: Optional[tables.ConcreteTable] = None
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error and self.mass_ok and self.lengths_divide and self.suborbit_ok


@dataclass(frozen=True)
class TableCheckReport:
    case: str
    checks: tuple[ParamCheck, ...]
    symbolic_checked: bool
    symbolic_ok: Optional[bool]

    @property
    def ok(self) -> bool:
        if self.symbolic_checked and not self.symbolic_ok:
            return False
        return all(check.ok for check in self.checks)


def conclude(verdicts: Sequence[gates.GateVerdict], strict: bool = False) -> str:
    """Fold gate verdicts into a conclusion.

    Any excluding gate settles the case. A terminal externally-assumed gate
    settles it too unless strict mode demands fully computed exclusions.
    """
    if any(v.outcome == gates.EXCLUDES for v in verdicts):
        return NO_DTG
    if verdicts and verdicts[-1].outcome == gates.ASSUMED_EXTERNAL and not strict:
        return NO_DTG
    return UNDETERMINED


def _checked_table(family: CaseFamily, param: int) -> tables.ConcreteTable:
    ct = tables.instantiate(tables.build_table(family), param)
    ok, residual = tables.verify_mass(ct)
    if not ok:
        raise tables.TranscriptionError(
            f"mass identity failed at parameter {param}: residual {residual}"
        )
    return ct


def _certificate_subfield(n: int, option: OuterOption, strict: bool) -> Certificate:
    r = SUBFIELD.param_for_n(n)
    q = r * r
    verdicts = [gates.multiplicity_free_gate(q, option)]
    if not verdicts[0].excludes:
        ct = _checked_table(SUBFIELD, r)
        constraint = fusion.FusionConstraint(option.order)
        sigma = gates.sigma_in_x_gate(ct, constraint)
        verdicts.append(sigma)
        if sigma.outcome == gates.INCONCLUSIVE:
            verdicts.append(gates.involution_gate(r, ct, constraint))
    return Certificate(
        case="subfield",
        n=n,
        q=q,
        x_order=option.order,
        x_graph=option.contains_graph_auto,
        gates=tuple(verdicts),
        conclusion=conclude(verdicts, strict),
        assumptions=(ASSUMPTION_MULTIPLICITY_FREE, ASSUMPTION_OUTER_EVEN),
    )


def _certificate_ree(n: int, option: OuterOption, strict: bool) -> Certificate:
    q = REE.param_for_n(n)
    ct = _checked_table(REE, q)
    constraint = fusion.FusionConstraint(option.order)
    assumptions: list[str] = []
    if q == 3:
        verdicts = [gates.bcn_small_case_gate(ct, constraint)]
        assumptions.append(ASSUMPTION_BCN)
    else:
        verdicts = [gates.bhk_gate(REE, q, constraint)]
        if not verdicts[0].excludes:
            chain = gates.kernel_chain_gate(ct, q, constraint)
            verdicts.append(chain)
            if chain.excludes:
                assumptions.append(ASSUMPTION_KERNEL)
    return Certificate(
        case="ree",
        n=n,
        q=q,
        x_order=option.order,
        x_graph=option.contains_graph_auto,
        gates=tuple(verdicts),
        conclusion=conclude(verdicts, strict),
        assumptions=tuple(assumptions),
    )


def _select_options(family: CaseFamily, param: int, x_filter: XFilter) -> tuple[OuterOption, ...]:
    options = outer_subgroup_options(family, param)
    if x_filter is None:
        return options
    chosen = []
    for option in options:
        for order, require_graph in x_filter:
            if option.order == order and (not require_graph or option.contains_graph_auto):
                chosen.append(option)
                break
    return tuple(chosen)


def analyze_subfield(
    n_min: int, n_max: int, x_filter: XFilter = None, strict: bool = False
) -> RunReport:
    """Run the subfield pipeline for every n in range and every X descriptor."""
    if n_min < SUBFIELD.min_n:
        raise ValueError(f"subfield analysis requires n >= {SUBFIELD.min_n}")
    certificates = []
    for n in range(n_min, n_max + 1):
        r = SUBFIELD.param_for_n(n)
        for option in _select_options(SUBFIELD, r, x_filter):
            certificates.append(_certificate_subfield(n, option, strict))
    return RunReport(VERSION, "subfield", n_min, n_max, strict, tuple(certificates))


def analyze_ree(
    n_min: int, n_max: int, x_filter: XFilter = None, strict: bool = False
) -> RunReport:
    """Run the ree pipeline for every n in range and every X descriptor."""
    if n_min < REE.min_n:
        raise ValueError(f"ree analysis requires n >= {REE.min_n}")
    certificates = []
    for n in range(n_min, n_max + 1):
        q = REE.param_for_n(n)
        for option in _select_options(REE, q, x_filter):
            certificates.append(_certificate_ree(n, option, strict))
    return RunReport(VERSION, "ree", n_min, n_max, strict, tuple(certificates))


def verify_tables(
    case: str,
    params: Sequence[int],
    symbolic: bool = False,
    table: Optional[tables.SuborbitTable] = None,
) -> TableCheckReport:
    """Mass, divisibility, integrality, and count checks per parameter.

    The optional table override exists for fault-injection tests; by default
    the canonical table of the named family is checked.
    """
    family = get_family(case)
    tab = table if table is not None else tables.build_table(family)
    checks = []
    for param in params:
        try:
            ct = tables.instantiate(tab, param)
        except (tables.TranscriptionError, ValueError) as exc:
            checks.append(ParamCheck(param=param, error=str(exc)))
            continue
        mass_ok, residual = tables.verify_mass(ct)
        lengths_divide = all(ct.h_order % row.length == 0 for row in ct.rows)
        total = tables.suborbit_count(ct)
        if family.kind == "ree":
            expected = param + 6
        else:
            expected = param * param + 2 * param + 6
        checks.append(
            ParamCheck(
                param=param,
                index=ct.index,
                mass_total=ct.index + residual,
                mass_ok=mass_ok,
                lengths_divide=lengths_divide,
                proper_divisors=tables.proper_divisor_premise(ct),
                suborbit_total=total,
                suborbit_expected=expected,
                suborbit_ok=total == expected,
                table=ct,
            )
        )
    symbolic_ok = tables.verify_mass_symbolic(tab) if symbolic else None
    return TableCheckReport(case, tuple(checks), symbolic, symbolic_ok)


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _witness_str(value: Union[int, str]) -> str:
    return str(value)


def certificate_jsonable(cert: Certificate) -> dict:
    return {
        "case": cert.case,
        "n": cert.n,
        "q": str(cert.q),
        "x_order": cert.x_order,
        "x_graph": cert.x_graph,
        "gates": [
            {
                "name": verdict.gate_name,
                "verdict": verdict.outcome,
                "witnesses": {k: _witness_str(v) for k, v in verdict.witnesses.items()},
                "paper_anchor": verdict.narrative,
            }
            for verdict in cert.gates
        ],
        "conclusion": cert.conclusion,
        "assumptions": list(cert.assumptions),
    }


def gate_text(verdict: gates.GateVerdict) -> str:
    """One-line rendering: gate name, verdict, then each witness, two-space separated."""
    parts = [f"gate: {verdict.gate_name}", f"verdict: {_VERDICT_TEXT[verdict.outcome]}"]
    parts.extend(f"{k}: {_witness_str(v)}" for k, v in verdict.witnesses.items())
    return "  ".join(parts)


def certificate_text(cert: Certificate) -> str:
    flag = "true" if cert.x_graph else "false"
    lines = [f"certificate: case={cert.case} n={cert.n} q={cert.q} x_order={cert.x_order} x_graph={flag}"]
    for verdict in cert.gates:
        lines.append(f"  {gate_text(verdict)}")
    lines.append(f"  conclusion: {cert.conclusion}")
    if cert.assumptions:
        for assumption in cert.assumptions:
            lines.append(f"  assumption: {assumption}")
    return "\n".join(lines)


def _run_report_jsonable(report: RunReport) -> dict:
    return {
        "tool_version": report.tool_version,
        "case": report.case,
        "n_min": report.n_min,
        "n_max": report.n_max,
        "strict": report.strict,
        "generated_at": _timestamp(),
        "summary": report.summary,
        "certificates": [certificate_jsonable(c) for c in report.certificates],
    }


def _run_report_text(report: RunReport) -> str:
    summary = report.summary
    lines = [
        f"dtgcert {report.tool_version}",
        f"case: {report.case}  n: {report.n_min}..{report.n_max}  strict: {'true' if report.strict else 'false'}",
        f"generated_at: {_timestamp()}",
        f"summary: total={summary['total']} no_dtg={summary['no_dtg']} undetermined={summary['undetermined']}",
    ]
    for cert in report.certificates:
        lines.append("")
        lines.append(certificate_text(cert))
    return "\n".join(lines) + "\n"


def _table_report_text(report: TableCheckReport) -> str:
    lines = [f"verify-tables case={report.case} params={','.join(str(c.param) for c in report.checks)}"]
    for check in report.checks:
        lines.append("")
        if check.error:
            lines.append(f"param={check.param}\terror={check.error}")
            continue
        assert check.table is not None
        lines.append(tables.dump(check.table).rstrip("\n"))
        lines.append(
            f"mass: {'ok' if check.mass_ok else 'FAIL'} total={check.mass_total} residual={check.mass_total - check.index}"
        )
        lines.append(f"divisibility: {'ok' if check.lengths_divide else 'FAIL'}")
        lines.append(f"proper_divisors: {'true' if check.proper_divisors else 'false'}")
        lines.append(
            f"suborbits: {'ok' if check.suborbit_ok else 'FAIL'} total={check.suborbit_total} expected={check.suborbit_expected}"
        )
    if report.symbolic_checked:
        lines.append("")
        lines.append(f"symbolic mass identity: {'ok' if report.symbolic_ok else 'FAIL'}")
    lines.append("")
    lines.append(f"result: {'PASS' if report.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _table_report_jsonable(report: TableCheckReport) -> dict:
    return {
        "tool_version": VERSION,
        "case": report.case,
        "generated_at": _timestamp(),
        "symbolic_checked": report.symbolic_checked,
        "symbolic_ok": report.symbolic_ok,
        "ok": report.ok,
        "checks": [
            {
                "param": str(check.param),
                "error": check.error,
                "index": str(check.index),
                "mass_total": str(check.mass_total),
                "mass_ok": check.mass_ok,
                "lengths_divide": check.lengths_divide,
                "proper_divisors": check.proper_divisors,
                "suborbit_total": check.suborbit_total,
                "suborbit_expected": check.suborbit_expected,
                "ok": check.ok,
            }
            for check in report.checks
        ],
    }


def emit(report: Union[RunReport, TableCheckReport], format: str = "json") -> bytes:
    """Deterministic serialization (modulo the generated_at timestamp)."""
    if format not in ("json", "text"):
        raise ValueError(f"unknown format: {format!r}")
    if isinstance(report, RunReport):
        if format == "json":
            return (json.dumps(_run_report_jsonable(report), indent=2) + "\n").encode()
        return _run_report_text(report).encode()
    if isinstance(report, TableCheckReport):
        if format == "json":
            return (json.dumps(_table_report_jsonable(report), indent=2) + "\n").encode()
        return _table_report_text(report).encode()
    raise TypeError(f"cannot emit {type(report).__name__}")
