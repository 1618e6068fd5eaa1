"""Exact tools for square-free monomial ideals read two ways: as facet
ideals of simplicial complexes and as Stanley-Reisner ideals."""

from .core import (
    FacetIdealError,
    MonomialIdeal,
    ParseError,
    PreconditionError,
    SimplicialComplex,
    VariableSet,
    facet_complex,
    facet_ideal,
    format_object,
    minimalize,
    parse,
)
from .duality import (
    CoverComplex,
    NonfaceComplexView,
    alexander_dual,
    complement_complex,
    component,
    cover_complex,
    covering_number,
    dual_ideal,
    is_unmixed,
    minimal_covers,
    nonface_complex,
    nonface_ideal,
    variable_covers_of_size,
)
from .homalg import (
    QQ,
    BettiTable,
    FieldSpec,
    betti_table,
    eagon_reiner_check,
    has_linear_resolution,
    is_cohen_macaulay,
    is_componentwise_linear,
    is_sequentially_cm,
    krull_dimension,
    link,
    pure_skeleton_ideal,
    reduced_homology,
)
from .linquo import (
    colon,
    componentwise_linear_via_quotients,
    find_linear_quotient_order,
    is_linear_step,
    shelling_from_quotients,
)
from .trees import free_vertices, has_leaf_order, is_forest, is_leaf, is_tree, localize, remove_facet

__version__ = "0.1.0"
