import pytest

from dtgcert.exact import Poly
from dtgcert.groups import REE, SUBFIELD
from dtgcert.tables import (
    ConcreteRow,
    ConcreteTable,
    SuborbitRow,
    SuborbitTable,
    TranscriptionError,
    Z_THREE,
    build_table,
    distinct_nontrivial_lengths,
    dump,
    instantiate,
    proper_divisor_premise,
    stabilizer_order,
    suborbit_count,
    verify_mass,
    verify_mass_symbolic,
)

# oracle-frozen coset indices, also recomputed from the order formulas below
SUBFIELD_MASS = {
    3: 5321700,
    9: 23159265569604,
    27: 109569084049626315300,
    81: 523427399472290712341763204,
}
REE_MASS = {
    3: 2808,
    27: 10847222568,
    243: 50237432729961048,
    2187: 239408748196861789141128,
}


def test_row_counts():
    assert len(build_table(SUBFIELD).rows) == 26
    assert len(build_table(REE).rows) == 12


def test_symbolic_mass_identity():
    assert verify_mass_symbolic(build_table(SUBFIELD))
    assert verify_mass_symbolic(build_table(REE))


def test_symbolic_mass_detects_mutation():
    table = build_table(REE)
    row = table.rows[5]
    bumped = Poly(tuple(row.length.coeffs) + (1,))
    rows = table.rows[:5] + (SuborbitRow(row.z, bumped, row.count),) + table.rows[6:]
    assert not verify_mass_symbolic(SuborbitTable(REE, rows))


def test_concrete_mass_subfield():
    table = build_table(SUBFIELD)
    for r, expected in SUBFIELD_MASS.items():
        assert expected == r**6 * (r**6 + 1) * (r**2 + 1)
        ct = instantiate(table, r)
        ok, residual = verify_mass(ct)
        assert ok and residual == 0
        assert ct.index == expected


def test_concrete_mass_ree():
    table = build_table(REE)
    for q, expected in REE_MASS.items():
        assert expected == q**3 * (q**3 - 1) * (q + 1)
        ct = instantiate(table, q)
        ok, residual = verify_mass(ct)
        assert ok and residual == 0
        assert ct.index == expected


def test_ree_q3_concrete_rows():
    ct = instantiate(build_table(REE), 3)
    q, m = 3, 1
    expected = {
        "R1": (1, 1),
        "R2": ((q**3 + 1) * (q - 1), 1),
        "R3": (q * (q**3 + 1) * (q - 1) // 2, 1),
        "R4": (q * (q**3 + 1) * (q - 1) // 2, 1),
        "R5": (q**2 * (q**3 + 1) * (q - 1), 1),
        "R6": (q**2 * (q**2 - q + 1), 1),
        "R7": (q**2 * (q**3 + 1) * (q - 1) // 2, 1),
        "R8": (q**2 * (q**3 + 1) * (q - 1) // 2, 1),
        "R12": (q**3 * (q**2 - 1) * (q + 3 * m + 1), 1),
    }
    assert {r.label: (r.length, r.count) for r in ct.rows} == expected
    assert expected["R2"][0] == 56 and expected["R6"][0] == 63 and expected["R12"][0] == 1512
    # the three rows with zero count at q = 3 are gone
    for absent in ("R9", "R10", "R11"):
        with pytest.raises(KeyError):
            ct.row(absent)


def test_ree_q27_counts():
    ct = instantiate(build_table(REE), 27)
    counts = {r.label: r.count for r in ct.rows}
    assert counts == {
        "R1": 1, "R2": 1, "R3": 1, "R4": 1, "R5": 1, "R6": 1, "R7": 1, "R8": 1,
        "R9": 12, "R10": 4, "R11": 3, "R12": 6,
    }


def test_suborbit_count():
    ree = build_table(REE)
    assert suborbit_count(instantiate(ree, 3)) == 9
    assert suborbit_count(instantiate(ree, 27)) == 33
    sub = build_table(SUBFIELD)
    assert suborbit_count(instantiate(sub, 3)) == 21
    assert suborbit_count(instantiate(sub, 9)) == 105


def test_subfield_r3_survivors():
    ct = instantiate(build_table(SUBFIELD), 3)
    assert len(ct.rows) == 20
    assert len(ct.nontrivial_rows) == 19
    assert distinct_nontrivial_lengths(ct) == (
        728, 5824, 7371, 26208, 58968, 88452,
        235872, 326592, 471744, 530712, 606528, 707616,
    )


def test_instantiate_rejects_inadmissible_param():
    with pytest.raises(ValueError):
        instantiate(build_table(REE), 9)
    with pytest.raises(ValueError):
        instantiate(build_table(SUBFIELD), 10)


def test_instantiate_rejects_fractional_count():
    t = Poly.var()
    rows = (
        SuborbitRow(build_table(REE).rows[0].z, Poly.const(1), Poly.const(1)),
        SuborbitRow(build_table(REE).rows[1].z, Poly.const(2), (t - 4) / 2),
    )
    with pytest.raises(TranscriptionError):
        instantiate(SuborbitTable(REE, rows), 3)


def test_instantiate_rejects_negative_count():
    t = Poly.var()
    rows = (
        SuborbitRow(build_table(REE).rows[0].z, Poly.const(1), Poly.const(1)),
        SuborbitRow(build_table(REE).rows[1].z, Poly.const(2), t - 5),
    )
    with pytest.raises(TranscriptionError):
        instantiate(SuborbitTable(REE, rows), 3)


def test_instantiate_requires_unique_trivial_row():
    base = build_table(REE)
    with pytest.raises(TranscriptionError):
        instantiate(SuborbitTable(REE, base.rows[1:]), 3)
    doubled = (base.rows[0],) + base.rows
    with pytest.raises(TranscriptionError):
        instantiate(SuborbitTable(REE, doubled), 3)


def test_stabilizer_orders_ree_q27():
    ct = instantiate(build_table(REE), 27)
    stabs = sorted({stabilizer_order(ct, r) for r in ct.nontrivial_rows})
    assert stabs == [19, 26, 27, 28, 37, 54, 1458, 19656, 19683]


def test_stabilizer_orders_ree_large():
    expect = {
        243: [217, 242, 243, 244, 271, 486, 118098, 14348664, 14348907],
        2187: [2107, 2186, 2187, 2188, 2269, 4374, 9565938, 10460351016, 10460353203],
    }
    table = build_table(REE)
    for q, stabs in expect.items():
        ct = instantiate(table, q)
        assert sorted({stabilizer_order(ct, r) for r in ct.nontrivial_rows}) == stabs


def test_stabilizer_order_by_label_and_error():
    ct = instantiate(build_table(SUBFIELD), 3)
    assert stabilizer_order(ct, "x_{3a+2b}(1)") == 5832
    broken = ConcreteTable(SUBFIELD, 3, ct.index, ct.h_order, (ConcreteRow("bad", Z_THREE, 5, 1),))
    with pytest.raises(TranscriptionError):
        stabilizer_order(broken, "bad")


def test_proper_divisor_premise():
    ree = build_table(REE)
    assert not proper_divisor_premise(instantiate(ree, 3))
    assert proper_divisor_premise(instantiate(ree, 27))
    assert proper_divisor_premise(instantiate(ree, 243))
    sub = build_table(SUBFIELD)
    assert proper_divisor_premise(instantiate(sub, 3))
    assert proper_divisor_premise(instantiate(sub, 9))


def test_dump_format():
    ct = instantiate(build_table(REE), 3)
    text = dump(ct)
    lines = text.splitlines()
    assert lines[0] == "param=3\tindex=2808"
    assert lines[1] == "R1\t1\t1"
    assert lines[2] == "R2\t56\t1"
    assert len(lines) == 1 + len(ct.rows)
    assert text.endswith("\n")


def test_build_table_unknown_family():
    from dtgcert.groups import CaseFamily

    fake = CaseFamily("other", Poly.const(1), Poly.const(1), Poly.const(1), 0)
    with pytest.raises(ValueError):
        build_table(fake)
