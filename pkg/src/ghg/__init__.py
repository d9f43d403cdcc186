"""Homotopy groups of gauge groups of principal bundles.

The package computes pi_n of the gauge group of a principal K-bundle
over a sphere or a closed orientable surface from catalogued homotopy
groups of K and Samelson pairing data, by running the evaluation
fibration's long exact sequence with the connecting map given by a
negated Samelson product, plus closed rational forms.
"""
from .fgab import (
    CapacityError,
    FgAbGroup,
    GroupElement,
    Homomorphism,
    IntMatrix,
    Presentation,
    canonicalize,
    direct_sum,
    direct_sum_with_injections,
    enumerate_elements,
    hom_decompose,
    is_isomorphic,
    snf,
    tensor_q,
)
from .catalog import (
    Catalog,
    CatalogError,
    CatalogParseError,
    CatalogValidationError,
    GroupCatalogEntry,
    PairingMatrix,
    TableDepthError,
    UnknownGroupError,
    default_catalog,
    default_catalog_path,
    load_catalog,
    samelson_apply,
)
from .exactseq import SequenceResult, middle_group, resolve_extension
from .gaugecalc import (
    BundleSpec,
    PairingUnavailable,
    Sphere,
    Surface,
    connecting_hom_sphere,
    connecting_hom_surface,
    gauge_homotopy,
    gauge_homotopy_rational,
    rational_via_zero_sequence,
    su2_s4_pi2,
)

__version__ = "0.1.0"
