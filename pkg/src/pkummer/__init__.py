"""Exact partial Kummer theory over split cyclotomic algebras.

The package computes, entirely in exact rational arithmetic:

  * the cyclotomic field K = Q(zeta_n) (`cyclotomic`),
  * the split algebra S = K^m with its subspace lattice (`split_algebra`),
  * partial actions of finite abelian groups on S, their invariants,
    traces and Galois coordinates (`partial_action`),
  * partial group cohomology in low degrees (`cohomology`),
  * the invertible modules Q_f of one-cocycles, character decompositions
    of S and their laws (`kummer`),
  * radical and I-radical extensions with the classification pipeline
    (`radical`),
  * the `pk` command line interface over JSON instance files (`cli`).
"""

from .cyclotomic import CycNum, cyclotomic_polynomial, phi_degree
from .split_algebra import (AlgElem, IdempotentIdeal, SplitAlgebra, Subspace,
                            blocks_of, is_unit, is_unital_subalgebra,
                            module_product, rank_over)
from .partial_action import (FinAbGroup, NoTraceOneError, NotGaloisError,
                             PartialAction, g_isomorphic, induced_from_global)
from .cohomology import (Cochain, EnumerationLimitError, NotACocycleError,
                         coboundary, cohomologous, enumerate_torsion_cocycles,
                         h1_torsion, is_coboundary1, is_cocycle1)
from .kummer import (Character, KummerData, NotKummerianError, QModule,
                     SumNotSError, char_p, character_sum_check, characters,
                     decompose, f_hat, f_tilde, find_direct_subsets,
                     is_kummerian, ker_mu_p, q_module, unit_generator,
                     verify_pic_hom, verify_projector, verify_q_laws)
from .radical import (ClassificationRecord, GradedElem, IRadical,
                      NotSaturatedError, PhiNotLinearError, RadicalExtension,
                      RankNotOneError, build_radical, i_radical,
                      i_radical_to_radical, is_saturated, mu_action,
                      parametrize, verify_lambda_iso)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
