"""Exact-arithmetic certificates ruling out primitive distance-transitive
graphs on two exceptional coset-action families.

The package transcribes the suborbit tables of the two actions (a subfield
family and a twisted ree family inside G2(q)), verifies them by exact mass
and divisibility identities, and replays the elimination arguments as
decision procedures producing machine-checkable certificates.
"""
from .exact import Poly, cyclic_order, exp_compare, factorize, is_power_of, is_prime
from .fusion import (
    FusionConstraint,
    LengthGroup,
    excludes_diameter_two,
    exhaustive_min_fused_classes,
    length_groups,
    min_fused_classes,
    fused_diameter_bound,
    smallest_fused_candidates,
)
from .gates import (
    GateVerdict,
    KernelPrimeData,
    Order4Witness,
    bcn_small_case_gate,
    bhk_gate,
    involution_gate,
    kernel_chain_gate,
    kernel_prime_data,
    multiplicity_free_gate,
    order4_witness,
    sigma_in_x_gate,
)
from .groups import (
    REE,
    SUBFIELD,
    CaseFamily,
    OuterOption,
    TorusData,
    coset_index,
    get_family,
    h_order_at,
    outer_subgroup_options,
    torus_orders,
)
from .pipeline import (
    VERSION,
    Certificate,
    RunReport,
    TableCheckReport,
    analyze_ree,
    analyze_subfield,
    conclude,
    emit,
    verify_tables,
)
from .tables import (
    ConcreteTable,
    SuborbitTable,
    TranscriptionError,
    build_table,
    distinct_nontrivial_lengths,
    dump,
    instantiate,
    stabilizer_order,
    suborbit_count,
    verify_mass,
    verify_mass_symbolic,
)

__version__ = VERSION

__all__ = [
    "Poly",
    "cyclic_order",
    "exp_compare",
    "factorize",
    "is_power_of",
    "is_prime",
    "FusionConstraint",
    "LengthGroup",
    "excludes_diameter_two",
    "exhaustive_min_fused_classes",
    "length_groups",
    "min_fused_classes",
    "fused_diameter_bound",
    "smallest_fused_candidates",
    "GateVerdict",
    "KernelPrimeData",
    "Order4Witness",
    "bcn_small_case_gate",
    "bhk_gate",
    "involution_gate",
    "kernel_chain_gate",
    "kernel_prime_data",
    "multiplicity_free_gate",
    "order4_witness",
    "sigma_in_x_gate",
    "REE",
    "SUBFIELD",
    "CaseFamily",
    "OuterOption",
    "TorusData",
    "coset_index",
    "get_family",
    "h_order_at",
    "outer_subgroup_options",
    "torus_orders",
    "VERSION",
    "Certificate",
    "RunReport",
    "TableCheckReport",
    "analyze_ree",
    "analyze_subfield",
    "conclude",
    "emit",
    "verify_tables",
    "ConcreteTable",
    "SuborbitTable",
    "TranscriptionError",
    "build_table",
    "distinct_nontrivial_lengths",
    "dump",
    "instantiate",
    "stabilizer_order",
    "suborbit_count",
    "verify_mass",
    "verify_mass_symbolic",
    "__version__",
]
