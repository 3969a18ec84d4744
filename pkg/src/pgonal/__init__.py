"""Strata, boundary degenerations and connectivity of cyclic p-gonal loci."""

__version__ = "0.1.0"

from .boundary_graph import (
    BoundaryPoint,
    StrataGraph,
    boundary_set,
    build_graph,
    connected_components,
    isolation_report,
    one_curve_degenerations,
)
from .connector import arrange, case_formula, connector_surface
from .degeneration import (
    LiftedComponent,
    NodalSurface,
    QuotientPiece,
    class_stabilizer,
    collar_bound,
    curve_monodromy,
    lift_piece,
    node_multiplicity,
    p_class,
    pinch_chain,
)
from .monodromy import (
    MonodromyTuple,
    SignedCounts,
    admissible_mplus_set,
    branch_count,
    genus_of,
    signed_counts,
    validate,
)
from .residue import PrimeModulus, Residue, normalize, scale_tuple, unit_inverse
from .strata import (
    R4TypeTag,
    StratumClass,
    canonical_form,
    classify_r4_type,
    count_type5,
    enumerate_strata,
)
