"""Knitting toolkit for repetitive algebras of Dynkin quivers.

Computes the Auslander-Reiten quiver of the repetitive algebra over a
finite window, exact Hom and projectively-stable dimensions, the bijection
between module classes, dominant pairs and strata labels, the dominant
Laurent-monomial dictionary, corner-algebra dimension tables, and a
brute-force matrix oracle that double-checks all of it.
"""

from .arquiver import (ARWindow, degree_shift, knit, omega, omega_inv,
                       psi_inv, psi_of_projective, seed_section, tau, tau_inv)
from .dimvec import DimVector, RepVertex, parse_rep_vertex, unit
from .homs import (expand_in_r_basis, h_eval, hom_dim, hom_module, hom_table,
                   proj_dim, r_element)
from .monomials import (LaurentMonomial, a_monomial, composition_candidates,
                        module_of_monomial, monomial_of_module,
                        pair_to_monomial)
from .orbits import (DominantPair, ModuleClass, StrataPoset, check_dominance,
                     degeneration_order, enumerate_dominant_pairs,
                     enumerate_modules, module_to_pair, pair_to_module,
                     verify_bijection)
from .projectivize import (convex_hull, corner_presentation,
                           graded_basis_dims, verify_repetitive_iso)
from .quiver import DynkinQuiver, Slot, build_slot_quiver, validate_height_function
from .repetitive import (build_repetitive_presentation, maximal_paths,
                         projective_dim_vector)
from .roots import positive_root_count, positive_roots

__version__ = "0.1.0"

__all__ = [
    "ARWindow", "DimVector", "DominantPair", "DynkinQuiver", "LaurentMonomial",
    "ModuleClass", "RepVertex", "Slot", "StrataPoset", "a_monomial",
    "build_repetitive_presentation", "build_slot_quiver", "check_dominance",
    "composition_candidates", "convex_hull", "corner_presentation",
    "degeneration_order", "degree_shift", "enumerate_dominant_pairs",
    "enumerate_modules", "expand_in_r_basis", "graded_basis_dims", "h_eval",
    "hom_dim", "hom_module", "hom_table", "knit", "maximal_paths",
    "module_of_monomial", "module_to_pair", "monomial_of_module", "omega",
    "omega_inv", "pair_to_module", "pair_to_monomial", "parse_rep_vertex",
    "positive_root_count", "positive_roots", "proj_dim",
    "projective_dim_vector", "psi_inv", "psi_of_projective", "r_element",
    "seed_section", "tau", "tau_inv", "unit", "validate_height_function",
    "verify_bijection", "verify_repetitive_iso",
]
