"""Fundamental crossed complexes of simplicial sets and their coherence data.

Main entry points:

* ``pi`` builds the free crossed complex of a simplicial set; ``tensor`` the
  monoidal product.
* ``split_a``, ``split_b``, ``split_h`` form the Eilenberg-Zilber deformation
  retraction; ``multi_a``/``multi_h`` iterate it.
* ``nerve_set``, ``zeta``, ``nerve_enriched`` give the nerve side of the
  adjunction; ``a_star``/``b_star`` the enriched adjunction maps.
* ``pi_coherent`` builds the homotopy coherent action of pi on chains of maps.
* ``run_suite`` runs the verification suites.
"""

from .adjunction import a_star, b_star, coherent_a_star, coherent_b_star
from .coherence import composition_homotopy, phi, pi_coherent, witness_noncommutativity
from .coherent_end import coh_space
from .corpus import corpus_ids, get as corpus_get, register as corpus_register
from .crossed import CxElement, CxMorphism, FreeCrossedComplex
from .errors import (BudgetExceeded, CapOverflow, CrossedError, EndpointMismatch, InfiniteHom, ParseError,
                     UnsupportedSolver)
from .ez import split_a, split_b, split_h
from .homotopy import RNHomotopy, convolve
from .multi import Splitting, multi_a, multi_b, multi_h
from .nerve import counit_eps, nerve_enriched, nerve_set, unit_eta, zeta
from .pi import pi, pi_map
from .scategory import FiniteCategory, SFunctor, coherent_pi_diagram, s_resolution
from .simplicial import FiniteSimplicialSet, Simplex, SimplicialMap, product, std_simplex
from .suites import Report, SuiteConfig, run_suite
from .tensor import interval, tensor

__all__ = [name for name in dir() if not name.startswith("_")]
