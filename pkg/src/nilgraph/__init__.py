"""Finite-group engine for nilpotent and commuting graphs.

Builds small finite groups as explicit Cayley tables, computes their
structural invariants (central series, Sylow and Fitting subgroups, normal
subgroup lattice), constructs the nilpotent graph, its reduction outside the
hypercenter, and the commuting graph, and verifies a battery of structural
statements about those graphs over a catalog of groups.
"""

from .groups import (
    DEFAULT_ORDER_CAP,
    ConcreteGroup,
    GroupError,
    OrderCapError,
    SubgroupSet,
    build_alternating,
    build_cyclic,
    build_dicyclic,
    build_dihedral,
    build_from_cayley_table,
    build_from_permutations,
    build_semidirect_cyclic,
    build_semidirect_table,
    build_symmetric,
    direct_product,
    from_spec,
    quotient,
    subgroup_closure,
)
from .structure import (
    SeriesResult,
    center,
    centralizer,
    conjugacy_classes,
    derived_series,
    fitting,
    hypercenter,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    nilpotency_class,
    normal_closure,
    normal_subgroups,
    normalizer,
    p_core,
    pi,
    primary_decomposition,
    sylow_subgroup,
    upper_central_series,
)
from .graphs import (
    KIND_COMMUTING,
    KIND_FULL,
    KIND_REDUCED,
    GroupGraph,
    build_graph,
    is_nilpotent_pair,
    nil_neighborhood,
    universal_vertices,
)
from .classify import (
    FrobeniusWitness,
    TwoFrobeniusWitness,
    has_nilpotent_neighborhood_property,
    is_2frobenius,
    is_A_group,
    is_AC_group,
    is_frobenius,
    is_n_group,
    nil_closed,
)
from .checks import CHECKS, GroupAnalysis, classification_report
from .catalog import Catalog, default_catalog, run_catalog
from .witness import find_order54_witness

__version__ = "0.1.0"
