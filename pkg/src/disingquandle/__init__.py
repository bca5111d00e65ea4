"""Oriented disingquandles and coloring invariants of oriented dichromatic singular links."""

from ._validation import StructureError
from .algebra import (
    AxiomError,
    AxiomReport,
    AxiomResult,
    OrientedDisingquandle,
    OrientedSingquandle,
    right_inverse_table,
    validate_oriented_disingquandle,
    validate_oriented_singquandle,
    validate_quandle,
)
from .audit import AuditReport, audit_table, audit_tables
from .catalog import CatalogEntry, catalog, get_link
from .coloring import (
    CeilingExceeded,
    ColoringResult,
    PsiTuple,
    count_colorings,
    count_colorings_exhaustive,
    enumerate_colorings,
    psi,
)
from .enumeration import enumerate_disingquandles
from .estimator import ColoringInvariant
from .families import (
    AffineQuadraticParams,
    ParameterError,
    affine_quadratic_disingquandle,
    builtin,
    parse_params,
)
from .groups import GroupTable, conjugation_singquandle
from .links import (
    Crossing,
    LinkDiagram,
    RelationSystem,
    parse_diagram,
    parse_relation_dsl,
    relations_from_diagram,
    validate_diagram,
)
from .morphisms import closure, find_isomorphism, is_homomorphism, is_subdisingquandle
from .presentation import from_presentation_matrix, to_presentation_matrix

__version__ = "0.1.0"
