"""Finite ordered Gamma-semigroups: ideals, filters, regularity and the
characterization theorems, checked exhaustively on small models."""

from .errors import CapacityError, InputError, InvalidStructure, ParseError
from .structure import (
    Candidate,
    GammaSemigroup,
    ValidationReport,
    build,
    fixture,
    from_tables,
    validate,
)
from .subsets import Subset, down_closure, gamma_product, gamma_product_via, up_closure
from .ideals import (
    enumerate_ideals,
    generated_ideal,
    generated_left_ideal,
    generated_right_ideal,
    is_ideal,
    is_left_duo,
    is_left_ideal,
    is_right_duo,
    is_right_ideal,
    is_semiprime,
)
from .filters import (
    enumerate_filters,
    is_filter,
    is_subsemigroup,
    principal_filter,
    principal_filter_oracle,
)
from .regularity import (
    is_intra_regular,
    is_intra_regular_weak,
    is_left_regular,
    is_left_regular_weak,
    is_right_regular,
    is_right_regular_weak,
)
from .theorems import (
    TheoremReport,
    check_all,
    check_proposition5,
    check_theorem2,
    check_theorem3,
    check_theorem6,
    check_theorem7,
    check_theorem8,
)
from .enumeration import (
    EnumerationSpec,
    Stats,
    SweepSummary,
    WitnessReport,
    enumerate_structures,
    enumerate_with_stats,
    search_witness,
    sweep_theorems,
)
from .textformat import parse, serialize

__version__ = "0.1.0"
