import pytest

from dtgcert.groups import (
    REE,
    SUBFIELD,
    coset_index,
    g_order_at,
    get_family,
    h_order_at,
    outer_subgroup_options,
    torus_orders,
)


def test_get_family():
    assert get_family("ree") is REE
    assert get_family("subfield") is SUBFIELD
    with pytest.raises(ValueError):
        get_family("weyl")


def test_order_product_identity_symbolic():
    for fam in (SUBFIELD, REE):
        assert fam.h_order * fam.index == fam.g_order


def test_subfield_orders_concrete():
    # |G2(q)| with q = r^2 against the generic order formula, written out
    for r in (3, 9, 27):
        q = r * r
        assert g_order_at(SUBFIELD, r) == q**6 * (q**6 - 1) * (q**2 - 1)
        assert h_order_at(SUBFIELD, r) == r**6 * (r**6 - 1) * (r**2 - 1)
        assert coset_index(SUBFIELD, r) == r**6 * (r**6 + 1) * (r**2 + 1)
    assert coset_index(SUBFIELD, 3) == 5321700


def test_ree_orders_concrete():
    for q in (3, 27, 243, 2187):
        assert g_order_at(REE, q) == q**6 * (q**6 - 1) * (q**2 - 1)
        assert h_order_at(REE, q) == q**3 * (q**3 + 1) * (q - 1)
        assert coset_index(REE, q) == q**3 * (q**3 - 1) * (q + 1)
    assert coset_index(REE, 3) == 2808
    assert coset_index(REE, 27) == 10847222568


def test_param_roundtrip():
    for n in range(1, 8):
        assert SUBFIELD.n_of_param(SUBFIELD.param_for_n(n)) == n
    for n in range(0, 8):
        assert REE.n_of_param(REE.param_for_n(n)) == n


def test_param_admissibility():
    with pytest.raises(ValueError):
        SUBFIELD.param_for_n(0)
    with pytest.raises(ValueError):
        REE.param_for_n(-1)
    for bad in (1, 2, 5, 12):
        with pytest.raises(ValueError):
            SUBFIELD.n_of_param(bad)
    # 9 = 3^2 has even exponent, inadmissible for the ree family
    for bad in (1, 9, 81, 5):
        with pytest.raises(ValueError):
            REE.n_of_param(bad)


def test_table_variable_and_q():
    assert SUBFIELD.table_variable(27) == 27
    assert SUBFIELD.q_value(27) == 729
    assert SUBFIELD.field_exponent(27) == 6
    assert REE.table_variable(27) == 3
    assert REE.q_value(27) == 27
    assert REE.field_exponent(27) == 3
    assert REE.table_variable(2187) == 27


def test_outer_subgroup_options_ree():
    opts = outer_subgroup_options(REE, 27)
    assert [(o.order, o.contains_graph_auto) for o in opts] == [
        (1, False),
        (2, True),
        (3, False),
        (6, True),
    ]
    opts3 = outer_subgroup_options(REE, 3)
    assert [(o.order, o.contains_graph_auto) for o in opts3] == [(1, False), (2, True)]


def test_outer_subgroup_options_subfield():
    # orders with the graph involution: the 2-adic valuation must match 2f
    expect = {3: {4}, 9: {8}, 27: {4, 12}}
    for r, graph_orders in expect.items():
        opts = outer_subgroup_options(SUBFIELD, r)
        two_f = 2 * SUBFIELD.field_exponent(r)
        assert [o.order for o in opts] == sorted(d for d in range(1, two_f + 1) if two_f % d == 0)
        assert {o.order for o in opts if o.contains_graph_auto} == graph_orders


def test_torus_orders_frozen_r3():
    data = torus_orders(3)
    assert data.kappa_order == 728
    assert data.theta_order == 8
    assert data.eta_order == 4
    assert data.gamma_order == 2
    assert data.sigma_order == 7
    assert data.tau_order == 13


def test_torus_order_relations():
    for r in (3, 9, 27, 81):
        data = torus_orders(r)
        q = r * r
        assert data.theta_order == q - 1
        assert data.eta_order * data.gamma_order == q - 1
        assert data.sigma_order * data.tau_order == q * q + q + 1
        assert data.kappa_order == q**3 - 1


def test_torus_orders_rejects_bad_parameter():
    with pytest.raises(ValueError):
        torus_orders(5)
    with pytest.raises(ValueError):
        torus_orders(1)
