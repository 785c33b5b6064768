"""Exact intersection theory for hyperplane sections of complex reductive groups.

Brion-Kazarnovskii degrees of weight polytopes, their polarizations, the
computable Chern-class degrees, and Euler characteristics and genera of
generic complete intersections.
"""
from .adjunction import (AdjunctionTerm, ChiResult, CurveInvariants, adjunction_series,
                         chi_complete_intersection, curve_chi, curve_genus, curve_invariants,
                         hypersurface_chi, inclusion_exclusion_identity_check)
from .degrees import (IntersectionNumber, bk_degree, boundary_count, chern1_polytope,
                      chern_top_degree, mixed_degree, polarize, torus_degree,
                      torus_mixed_degree)
from .errors import BKError, InternalError, PreconditionError, ResourceCapError, SchemaError
from .integrate import (LinearFormProduct, MultivariatePolynomial, bk_integrand,
                        bk_linear_forms, integrate_over_facet, integrate_over_polytope,
                        integrate_over_simplex)
from .polytope import (Facet, RationalPolytope, RepresentationSpec, Simplex, Summand,
                       convex_hull, facet_orbits, irreducible, lattice_volume, minkowski_sum,
                       triangulate, weight_polytope)
from .rootsys import (GroupSpec, RootSystemData, build_root_system, group, is_dominant,
                      weyl_orbit)

__version__ = "0.1.0"
