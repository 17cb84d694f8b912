"""Sorting finite sequences in lattices by meets of joins over index subsets."""

from .combinatorics import DEFAULT_CAP, KSubsetCursor, binomial, k_subsets
from .errors import (
    AxiomError,
    CapExceededError,
    DomainError,
    EmptySequenceError,
    LatticeError,
    LatticeOverflowError,
    LatticeParseError,
    NotDistributiveError,
    NotTotalOrderError,
)
from .instances import (
    DivisibilityLattice,
    FiniteLattice,
    InstanceSpec,
    IntLattice,
    PowersetLattice,
    ProductLattice,
    build_descriptor,
    format_element,
    format_table,
    lattice_from_spec,
    load_table,
    m3,
    n5,
    parse_element,
    parse_lattice_spec,
    parse_table,
)
from .lattice import LawReport, Lattice, check_axioms, check_distributive, join, join_all, leq, meet, meet_all
from .sort import (
    Permutation,
    PropertyReport,
    Sequence,
    SortReport,
    apply_permutation,
    check_sorting_properties,
    classical_sort,
    is_nondecreasing,
    preserves_multiset,
    sort_auto,
    sort_sequence,
    weak_sort_bruteforce,
    weak_sort_distributive_dp,
)

__version__ = "0.1.0"
