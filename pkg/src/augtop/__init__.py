"""Augmented simplicial complexes with exact homology, manifold boundaries,
join/product Kunneth checks and face-ring properties."""

from .complex import (
    EMPTY_SIMPLEX, NEG_INF, Complex, Simplex, closure, codim1_skeleton, cone_points, core,
    costar, delete_vertices, f_vector, from_facets, from_json, intersection, is_full_subcomplex,
    is_poset_connected, is_pure, is_strongly_connected, join, link, parse_text,
    product_ordered, simplex, skeleton, star_closed, to_json, union,
)
from .homology import (
    GF, QQ, ZZ, ChainComplex, CoefficientRing, GradedModule, Group, augmental_chain,
    homology, homology_pair, local_homology, parse_ring, tensor, tor1,
)
from .snf import invariant_factors, smith_normal_form
from .manifolds import (
    ManifoldReport, boundary, boundary_components, classify, is_homology_manifold,
    is_homology_sphere, is_pseudomanifold, is_quasi_manifold, orientable,
    verify_boundary_formula,
)
from .ring_props import (
    hilbert_function, ideal_membership, is_buchsbaum, is_cohen_macaulay, is_gorenstein,
    is_k_cm, is_two_cm, non_simplices,
)
from .kunneth import (
    ez_join_map, kunneth_join_predict, kunneth_join_verify, kunneth_product_predict,
    kunneth_product_verify, link_formula_verify,
)
from .corpus import corpus

__version__ = "0.1.0"
