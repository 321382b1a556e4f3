"""Classification of real Bott manifolds through Bott matrices and acyclic digraphs."""

from .canon import (BottClassRep, IsoCanonForm, bott_canon, bott_equivalent, iso_canon,
                    orbit_forms)
from .classify import (ClassificationSummary, ClassRecord, classify_all, classify_stream,
                       delta_family, nonisomorphic_dags)
from .cohomology import (CohomElement, CohomRing, EigenData, eigen_elements,
                         eigen_space_bruteforce, graded_iso_bruteforce, rings_isomorphic)
from .core import (BottMatrix, Permutation, is_bott, local_complement, relabel, slide,
                   slide_pairs)
from .decompose import (Decomposition, connected_components, decompose, is_indecomposable,
                        max_components_oracle, roots)
from .errors import (BottError, BudgetExceeded, DomainError, EmptyInput, MalformedD6,
                     MalformedInput, NotAcyclic, NotBottMatrix, OrbitBudgetExceeded,
                     PreconditionViolated, SizeMismatch)
from .formats import encode_digraph6, parse_digraph6, parse_matrix
from .gf2 import Gf2Matrix, rank_gf2, rref_gf2
from .invariants import (INFINITY, InvariantFingerprint, LevelStructure, betti, cutrank_profile,
                         fingerprint, level_structure, odd_height, orientable, sibling_profile,
                         symplectic)

__version__ = "0.1.0"
