"""Order formulas and structural data for the two coset-action families.

Two families are covered, named by the vertex stabilizer inside G2(q):

* ``subfield``: G2(q) acting on cosets of a subfield subgroup G2(r), q = r*r,
  r a power of 3. Polynomials are univariate in r.
* ``ree``: G2(q) acting on cosets of a twisted subgroup 2G2(q), q = 3**(2n+1).
  Polynomials are univariate in m, where q = 3*m*m and m = 3**n.

Outer automorphisms enter the arguments only through the order of a subgroup
X of Out and whether X contains the graph involution, so X is modeled by
(order, contains_graph_auto) descriptors rather than by explicit maps.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact import Poly, cyclic_order, is_power_of


@dataclass(frozen=True)
class CaseFamily:
    """One coset-action family with exact order polynomials.

    g_order, h_order, and index are polynomials in the family's table
    variable (r for subfield, m for ree) satisfying g_order = h_order * index.
    """

    kind: str
    g_order: Poly
    h_order: Poly
    index: Poly
    min_n: int

    def param_for_n(self, n: int) -> int:
        """Public parameter for step n: subfield r = 3**n, ree q = 3**(2n+1)."""
        if n < self.min_n:
            raise ValueError(f"{self.kind} family requires n >= {self.min_n}")
        return 3**n if self.kind == "subfield" else 3 ** (2 * n + 1)

    def n_of_param(self, param: int) -> int:
        """Inverse of param_for_n; validates admissibility."""
        e = is_power_of(param, 3)
        if self.kind == "subfield":
            if e is None or e < 1:
                raise ValueError(f"subfield parameter must be 3**n, n >= 1: {param}")
            return e
        if e is None or e % 2 == 0:
            raise ValueError(f"ree parameter must be 3**(2n+1): {param}")
        return (e - 1) // 2

    def table_variable(self, param: int) -> int:
        """Evaluation point for the family's polynomials: r itself, or m."""
        n = self.n_of_param(param)
        return param if self.kind == "subfield" else 3**n

    def q_value(self, param: int) -> int:
        """The host group parameter q of G2(q)."""
        self.n_of_param(param)
        return param * param if self.kind == "subfield" else param

    def field_exponent(self, param: int) -> int:
        """f with q = 3**f; the field automorphism has order f."""
        n = self.n_of_param(param)
        return 2 * n if self.kind == "subfield" else 2 * n + 1


def _subfield_family() -> CaseFamily:
    r = Poly.var()
    g = r**12 * (r**12 - 1) * (r**4 - 1)
    h = r**6 * (r**6 - 1) * (r**2 - 1)
    index = r**6 * (r**6 + 1) * (r**2 + 1)
    return CaseFamily("subfield", g, h, index, min_n=1)


def _ree_family() -> CaseFamily:
    m = Poly.var()
    q = 3 * m**2
    g = q**6 * (q**6 - 1) * (q**2 - 1)
    h = q**3 * (q**3 + 1) * (q - 1)
    index = q**3 * (q**3 - 1) * (q + 1)
    return CaseFamily("ree", g, h, index, min_n=0)


SUBFIELD = _subfield_family()
REE = _ree_family()

_FAMILIES = {SUBFIELD.kind: SUBFIELD, REE.kind: REE}


def get_family(kind: str) -> CaseFamily:
    try:
        return _FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown case family: {kind!r}") from None


def coset_index(family: CaseFamily, param: int) -> int:
    """Number of vertices |G|/|H| at a concrete admissible parameter."""
    return family.index.eval_int(family.table_variable(param))


def h_order_at(family: CaseFamily, param: int) -> int:
    return family.h_order.eval_int(family.table_variable(param))


def g_order_at(family: CaseFamily, param: int) -> int:
    return family.g_order.eval_int(family.table_variable(param))


@dataclass(frozen=True)
class OuterOption:
    """Subgroup descriptor for X <= Out: order and graph-involution membership."""

    order: int
    contains_graph_auto: bool


def _v2(n: int) -> int:
    return (n & -n).bit_length() - 1


def outer_subgroup_options(family: CaseFamily, param: int) -> tuple[OuterOption, ...]:
    """All (order, contains_graph_auto) descriptors of subgroups of Out.

    Out is cyclic of order 2f generated by an automorphism whose square is
    the field automorphism (order f, q = 3**f). The unique subgroup of each
    order d | 2f contains the unique involution (the graph automorphism times
    a field twist) exactly when d has the same 2-adic valuation as 2f.
    """
    two_f = 2 * family.field_exponent(param)
    divisors = sorted(d for d in range(1, two_f + 1) if two_f % d == 0)
    return tuple(OuterOption(d, _v2(d) == _v2(two_f)) for d in divisors)


@dataclass(frozen=True)
class TorusData:
    """Orders of the named torus elements for the subfield family at r."""

    r: int
    kappa_order: int
    theta_order: int
    eta_order: int
    gamma_order: int
    sigma_order: int
    tau_order: int


def torus_orders(r: int) -> TorusData:
    """Torus element orders at r, from exponent definitions over a cyclic group.

    kappa generates the multiplicative group of GF(q**3), q = r*r, so it has
    order q**3 - 1; the rest are explicit powers of kappa. Each computed
    order is checked against its closed form before being returned.
    """
    e = is_power_of(r, 3)
    if e is None or e < 1:
        raise ValueError(f"torus parameter must be 3**n, n >= 1: {r}")
    q = r * r
    kappa = q**3 - 1
    theta_exp = q * q + q + 1
    orders = {
        "theta": (cyclic_order(kappa, theta_exp), q - 1),
        "eta": (cyclic_order(kappa, theta_exp * (r - 1)), r + 1),
        "gamma": (cyclic_order(kappa, theta_exp * (r + 1)), r - 1),
        "sigma": (cyclic_order(kappa, (r + 1) * (r**3 - 1)), r * r - r + 1),
        "tau": (cyclic_order(kappa, (r - 1) * (r**3 + 1)), r * r + r + 1),
    }
    for name, (computed, closed) in orders.items():
        if computed != closed:
            raise ArithmeticError(f"torus order mismatch for {name} at r={r}: {computed} != {closed}")
    return TorusData(
        r=r,
        kappa_order=kappa,
        theta_order=orders["theta"][0],
        eta_order=orders["eta"][0],
        gamma_order=orders["gamma"][0],
        sigma_order=orders["sigma"][0],
        tau_order=orders["tau"][0],
    )
