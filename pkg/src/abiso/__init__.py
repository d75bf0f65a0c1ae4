"""Exact computations on finite abelian groups: sum of element orders,
subgroup lattices, and isolated subgroups, with cross-checked verification
suites."""

from .groups import (
    AbelianGroup,
    BoundExceededError,
    Element,
    PPartition,
    Subgroup,
    cyclic_subgroup,
    element_order,
    group_op,
    intersect,
    make_group,
    omega1,
    quotient_type,
    relative_order,
    subgroup_type,
)
from .isolation import (
    IsolationVerdict,
    SocleOfRadical,
    count_isolated,
    count_isolated_order_p,
    enumerate_isolated,
    is_isolated_brute,
    is_isolated_psi,
    is_isolated_structural,
    socle_of_radical,
)
from .lattice import (
    SubgroupLattice,
    all_cyclic_subgroups,
    all_subgroups,
    goursat_subgroups,
    subgroups_of_order,
)
from .literals import format_group_literal, parse_group_literal
from .psi import (
    f_alpha,
    psi_alt_p,
    psi_brute,
    psi_closed,
    psi_closed_p,
    psi_degree,
    psi_relative,
)
from .report import VerificationReport
from .snf import smith_normal_form
from .suites import run_suite, suite_names

__version__ = "0.1.0"
