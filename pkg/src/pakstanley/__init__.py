"""Regions, Pak-Stanley labels and centers of (k, l)-Coxeter arrangements."""
from .arrangement import CoxeterSpec, Hyperplane, hyperplanes, normalize
from .center import (
    CenterVector,
    center_vector,
    increasing_from_center,
    is_m_catalan,
    is_m_parking,
    is_prime_m_catalan,
    min_center_index,
    p_center,
)
from .errors import (
    DomainError,
    InfeasibleRegionError,
    InternalConsistencyError,
    InvalidPairError,
    InvalidTableError,
    NotALabelError,
    OnBoundaryError,
    ResourceLimitError,
    UnsupportedActionError,
)
from .inverse import fiber_of_center, invert_label, invert_record, region_of_label
from .paklabel import collision_points, format_label, label_map_bfs, label_of_region, parse_label
from .permtools import (
    adjacent_step,
    chamber_extremes,
    from_inversion_table,
    inversion_table,
    ld_lu,
    orbit_label,
)
from .regions import (
    RegionSig,
    apply_permutation,
    census,
    chamber_of,
    enumerate_regions,
    is_feasible,
    is_relatively_bounded,
    region_of_point,
    representative_point,
)
from .render import render_dyck, render_labeled_dyck

__version__ = "0.1.0"
