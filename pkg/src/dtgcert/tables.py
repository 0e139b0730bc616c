"""Suborbit tables for the two coset actions, as exact polynomial data.

Each table lists, per class of suborbits, the suborbit length and the number
of suborbits in the class, both as polynomials in the family's table
variable. Rows whose defining class element z has a known order carry that
order as a tag; it feeds the commuting-involution gate.

Rows that the source table prints as one cell split across two equal halves
are stored as two distinct rows with a #1/#2 suffix: fusion logic must see
them as distinct suborbits of equal length.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Poly
from .groups import REE, SUBFIELD, CaseFamily, h_order_at

Z_ONE = "one"
Z_TWO = "two"
Z_THREE = "three"
Z_UNKNOWN = "unknown"
Z_GAMMA = "torus:gamma"
Z_ETA = "torus:eta"
Z_THETA = "torus:theta"
Z_SIGMA = "torus:sigma"
Z_TAU = "torus:tau"


class TranscriptionError(ValueError):
    """A table failed an exactness check that only a transcription bug causes."""


@dataclass(frozen=True)
class ZClassDescriptor:
    """Opaque class label plus the known order tag of the class element."""

    label: str
    z_order: str


@dataclass(frozen=True)
class SuborbitRow:
    z: ZClassDescriptor
    length: Poly
    count: Poly


@dataclass(frozen=True)
class SuborbitTable:
    family: CaseFamily
    rows: tuple[SuborbitRow, ...]


@dataclass(frozen=True)
class ConcreteRow:
    label: str
    z_order: str
    length: int
    count: int


@dataclass(frozen=True)
class ConcreteTable:
    """A table instantiated at one parameter, zero-count rows dropped."""

    family: CaseFamily
    param: int
    index: int
    h_order: int
    rows: tuple[ConcreteRow, ...]

    def row(self, label: str) -> ConcreteRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)

    @property
    def nontrivial_rows(self) -> tuple[ConcreteRow, ...]:
        return tuple(r for r in self.rows if r.length > 1)


def _row(label: str, z_order: str, length: Poly, count: Poly) -> SuborbitRow:
    return SuborbitRow(ZClassDescriptor(label, z_order), length, count)


def _subfield_rows() -> tuple[SuborbitRow, ...]:
    r = Poly.var()
    one = Poly.const(1)
    half = Fraction(1, 2)
    unipotent_pair = r**2 * (r**6 - 1) * (r**2 - 1) * half
    mixed_pair = r**4 * (r**6 - 1) * (r**2 - 1) * half
    return (
        _row("1", Z_ONE, one, one),
        _row("x_{3a+2b}(1)", Z_THREE, r**6 - 1, one),
        _row("x_{2a+b}(1)", Z_THREE, r**6 - 1, one),
        _row("x_{2a+b}(1)x_{3a+2b}(1)", Z_THREE, (r**6 - 1) * (r**2 - 1), one),
        _row("x_{a+b}(1)x_{3a+b}(1)#1", Z_THREE, unipotent_pair, one),
        _row("x_{a+b}(1)x_{3a+b}(1)#2", Z_THREE, unipotent_pair, one),
        _row("x_a(1)x_b(1)", Z_THREE, r**4 * (r**6 - 1) * (r**2 - 1), one),
        _row("h(-1,-1,1)", Z_TWO, r**4 * (r**4 + r**2 + 1), one),
        _row("h(-1,-1,1)x_b(1)", Z_UNKNOWN, r**4 * (r**6 - 1), one),
        _row("h(-1,-1,1)x_{2a+b}(1)", Z_UNKNOWN, r**4 * (r**6 - 1), one),
        _row("h(-1,-1,1)x_b(1)x_{2a+b}(1)#1", Z_UNKNOWN, mixed_pair, one),
        _row("h(-1,-1,1)x_b(1)x_{2a+b}(1)#2", Z_UNKNOWN, mixed_pair, one),
        _row("h_gamma(i,-2i,i)", Z_GAMMA, r**5 * (r**3 - 1) * (r**2 - r + 1), (r - 3) / 2),
        _row("h_gamma(i,-2i,i)x_{3a+2b}(1)", Z_GAMMA, r**5 * (r**6 - 1) * (r - 1), (r - 3) / 2),
        _row("h_gamma(i,-i,0)", Z_GAMMA, r**5 * (r**3 - 1) * (r**2 - r + 1), (r - 3) / 2),
        _row("h_gamma(i,-i,0)x_{2a+b}(1)", Z_GAMMA, r**5 * (r**6 - 1) * (r - 1), (r - 3) / 2),
        _row("h_gamma(i,j,-i-j)", Z_GAMMA, r**6 * (r**3 - 1) * (r**2 - r + 1) * (r - 1), (r**2 - 8 * r + 15) / 12),
        _row("h_eta(i,-2i,i)", Z_ETA, r**5 * (r**3 + 1) * (r**2 + r + 1), (r - 1) / 2),
        _row("h_eta(i,-2i,i)x_{3a+2b}(1)", Z_ETA, r**5 * (r**6 - 1) * (r + 1), (r - 1) / 2),
        _row("h_eta(i,-i,0)", Z_ETA, r**5 * (r**3 + 1) * (r**2 + r + 1), (r - 1) / 2),
        _row("h_eta(i,-i,0)x_{2a+b}(1)", Z_ETA, r**5 * (r**6 - 1) * (r + 1), (r - 1) / 2),
        _row("h_eta(i,j,-i-j)", Z_ETA, r**6 * (r**3 + 1) * (r**2 + r + 1) * (r + 1), (r**2 - 4 * r + 3) / 12),
        _row("h_theta(i,(r-1)i,-ri)", Z_THETA, r**6 * (r**6 - 1), (r - 1) ** 2 / 4),
        _row("h_theta(i,ri,-(r+1)i)", Z_THETA, r**6 * (r**6 - 1), (r - 1) ** 2 / 4),
        _row("h_tau(i,ri,r^2i)", Z_TAU, r**6 * (r**3 - 1) * (r**2 - 1) * (r + 1), r * (r + 1) / 6),
        _row("h_sigma(i,-ri,r^2i)", Z_SIGMA, r**6 * (r**3 + 1) * (r**2 - 1) * (r - 1), r * (r - 1) / 6),
    )


def _ree_rows() -> tuple[SuborbitRow, ...]:
    m = Poly.var()
    q = 3 * m**2
    one = Poly.const(1)
    half = Fraction(1, 2)
    r3_pair = q * (q**3 + 1) * (q - 1) * half
    r7_pair = q**2 * (q**3 + 1) * (q - 1) * half
    return (
        _row("R1", Z_ONE, one, one),
        _row("R2", Z_UNKNOWN, (q**3 + 1) * (q - 1), one),
        _row("R3", Z_UNKNOWN, r3_pair, one),
        _row("R4", Z_UNKNOWN, r3_pair, one),
        _row("R5", Z_UNKNOWN, q**2 * (q**3 + 1) * (q - 1), one),
        _row("R6", Z_UNKNOWN, q**2 * (q**2 - q + 1), one),
        _row("R7", Z_UNKNOWN, r7_pair, one),
        _row("R8", Z_UNKNOWN, r7_pair, one),
        _row("R9", Z_UNKNOWN, q**3 * (q**3 + 1), (q - 3) / 2),
        _row("R10", Z_UNKNOWN, q**3 * (q**2 - q + 1) * (q - 1), (q - 3) / 6),
        _row("R11", Z_UNKNOWN, q**3 * (q**2 - 1) * (q - 3 * m + 1), (q - 3 * m) / 6),
        _row("R12", Z_UNKNOWN, q**3 * (q**2 - 1) * (q + 3 * m + 1), (q + 3 * m) / 6),
    )


def build_table(family: CaseFamily) -> SuborbitTable:
    """The full parametrized suborbit table for a family."""
    if family.kind == "subfield":
        return SuborbitTable(family, _subfield_rows())
    if family.kind == "ree":
        return SuborbitTable(family, _ree_rows())
    raise ValueError(f"unknown family kind: {family.kind!r}")


def instantiate(table: SuborbitTable, param: int) -> ConcreteTable:
    """Evaluate every row at an admissible parameter, dropping zero counts.

    Counts must evaluate to nonnegative integers and lengths of surviving
    rows to positive integers; anything else raises TranscriptionError.
    """
    family = table.family
    var = family.table_variable(param)
    rows = []
    for row in table.rows:
        count = row.count(var)
        if count.denominator != 1 or count < 0:
            raise TranscriptionError(f"count of row {row.z.label!r} is {count} at parameter {param}")
        if count == 0:
            continue
        length = row.length(var)
        if length.denominator != 1 or length < 1:
            raise TranscriptionError(f"length of row {row.z.label!r} is {length} at parameter {param}")
        rows.append(ConcreteRow(row.z.label, row.z.z_order, length.numerator, count.numerator))
    trivial = [r for r in rows if r.length == 1]
    if len(trivial) != 1 or trivial[0].count != 1:
        raise TranscriptionError(f"expected exactly one trivial suborbit at parameter {param}")
    return ConcreteTable(
        family=family,
        param=param,
        index=family.index.eval_int(var),
        h_order=family.h_order.eval_int(var),
        rows=tuple(rows),
    )


def verify_mass(ct: ConcreteTable) -> tuple[bool, int]:
    """Check sum(length * count) == coset index; returns (ok, residual)."""
    total = sum(r.length * r.count for r in ct.rows)
    return total == ct.index, total - ct.index


def verify_mass_symbolic(table: SuborbitTable) -> bool:
    """Check the mass identity at the polynomial level, coefficient by coefficient."""
    total = Poly()
    for row in table.rows:
        total = total + row.length * row.count
    return total == table.family.index


def stabilizer_order(ct: ConcreteTable, row: ConcreteRow | str) -> int:
    """Point-stabilizer order |H| / length; the division must be exact."""
    if isinstance(row, str):
        row = ct.row(row)
    if ct.h_order % row.length != 0:
        raise TranscriptionError(f"length of row {row.label!r} does not divide |H| at parameter {ct.param}")
    return ct.h_order // row.length


def suborbit_count(ct: ConcreteTable) -> int:
    """Total number of suborbits, the trivial one included."""
    return sum(r.count for r in ct.rows)


def distinct_nontrivial_lengths(ct: ConcreteTable) -> tuple[int, ...]:
    """Sorted distinct suborbit lengths, the trivial row excluded."""
    return tuple(sorted({r.length for r in ct.nontrivial_rows}))


def proper_divisor_premise(ct: ConcreteTable) -> bool:
    """Whether every nontrivial length strictly divides |H|.

    This is the premise of the kernel-chain argument. It holds for the ree
    family from q = 27 on; at q = 3 one suborbit has length exactly |H|.
    """
    return all(ct.h_order % r.length == 0 and r.length < ct.h_order for r in ct.nontrivial_rows)


def dump(ct: ConcreteTable) -> str:
    """Tab-separated dump: header with parameter and index, one row per line."""
    lines = [f"param={ct.param}\tindex={ct.index}"]
    for r in ct.rows:
        lines.append(f"{r.label}\t{r.length}\t{r.count}")
    return "\n".join(lines) + "\n"
