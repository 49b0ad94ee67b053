"""Exact verification toolkit for Type II codes over Z_2k, their
Construction A unimodular lattices, and extremal theta series."""

__version__ = "0.1.0"

from .codes import (
    LinearCode,
    SWEPolynomial,
    cardinality,
    dual,
    extremal_bound,
    is_extremal,
    is_self_dual,
    is_self_orthogonal,
    is_type_ii,
    min_euclidean_weight_bruteforce,
    swe,
)
from .constructions import (
    CatalogEntry,
    NegacirculantSpec,
    catalog_lookup,
    four_negacirculant_code,
    load_catalog,
    negacirculant,
    search_negacirculant,
)
from .errors import (
    CatalogError,
    ConstructionError,
    DomainError,
    InputError,
    ResourceError,
    Z2klatError,
)
from .lattice import (
    Frame,
    LatticeBasis,
    LatticeInvariants,
    ShellTable,
    WeightCertificate,
    code_from_frame,
    construction_a,
    double_frame,
    even_neighbors,
    even_sublattice,
    export_lattice,
    frame_coordinate_image,
    import_lattice,
    integer_lattice,
    lattice_invariants,
    lll_reduce,
    min_euclidean_weight_via_lattice,
    min_norm,
    shell_sizes,
    standard_frame,
)
from .qseries import (
    DecompositionResult,
    QSeries,
    decompose_e4_delta,
    delta24,
    e4,
    extremal_defect,
    extremal_theta,
    f_series,
    theta_from_swe,
)
from .ring import Modulus, ResidueVector, euclidean_weight, inner_product, rho

__all__ = [
    "CatalogEntry",
    "CatalogError",
    "ConstructionError",
    "DecompositionResult",
    "DomainError",
    "Frame",
    "InputError",
    "LatticeBasis",
    "LatticeInvariants",
    "LinearCode",
    "Modulus",
    "NegacirculantSpec",
    "QSeries",
    "ResidueVector",
    "ResourceError",
    "SWEPolynomial",
    "ShellTable",
    "WeightCertificate",
    "Z2klatError",
    "cardinality",
    "catalog_lookup",
    "code_from_frame",
    "construction_a",
    "decompose_e4_delta",
    "delta24",
    "double_frame",
    "dual",
    "e4",
    "euclidean_weight",
    "even_neighbors",
    "even_sublattice",
    "export_lattice",
    "extremal_bound",
    "extremal_defect",
    "extremal_theta",
    "f_series",
    "four_negacirculant_code",
    "frame_coordinate_image",
    "import_lattice",
    "inner_product",
    "integer_lattice",
    "is_extremal",
    "is_self_dual",
    "is_self_orthogonal",
    "is_type_ii",
    "lattice_invariants",
    "lll_reduce",
    "load_catalog",
    "min_euclidean_weight_bruteforce",
    "min_euclidean_weight_via_lattice",
    "min_norm",
    "negacirculant",
    "rho",
    "search_negacirculant",
    "shell_sizes",
    "standard_frame",
    "swe",
    "theta_from_swe",
]
