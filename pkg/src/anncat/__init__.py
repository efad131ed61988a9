"""Finite Ann-categories (categorical rings), their duals and centers, certified by diagram evaluation."""

from .algebra import (AbelianGroup, Bimodule, FiniteRing, make_bimodule, make_group_hom, make_ring_hom,
                      make_table_ring, make_zn, regular_bimodule, zn_bimodule)
from .config import DEFAULT_CAPS, Caps
from .dual import (DualCategory, DualObject, build_dual_category, center, enumerate_dual_objects,
                   forgetful_functor, is_dual_object_closed_form, is_dual_object_diagrammatic,
                   oracle_agreement)
from .errors import (AnnCatError, AxiomError, CompositionError, FixtureError, InternalInconsistency,
                     NotCertified, ResourceRefusal, StructureError)
from .functor import AnnFunctor, check_functor, compose_functors, identity_functor, make_functor, make_pq_functor
from .presentation import AnnPresentation, check_axioms, check_braiding, from_rm, make_presentation, pi0, pi1

__version__ = "0.1.0"
