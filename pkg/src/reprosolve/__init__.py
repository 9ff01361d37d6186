"""Exact general and reproductive solutions of linear matrix equations.

Covers Cline's equation ``A^m X B^n = C``, the generalized Penrose system
``A^m X = B, X D^n = E`` and the k-commutative {1}-inverse system
``A X A = A, A^k X = X A^k`` over the rationals and prime fields, with an
independent vectorized linear solver as ground truth.
"""

from .cline import (ClineContext, ClineProblem, cline_consistent, cline_context, cline_f_generator,
                    cline_g_generator, cline_particular)
from .errors import *  # noqa: F401,F403
from .field import GF, QQ, ExactScalar, FieldSpec, enumerate_field, parse_field, scalar_arith
from .generator import AffineGenerator, ReproVerdict, apply, image_of, is_reproductive, linear_matrix_of
from .inverse import OneInverseCertificate, all_one_inverses, index, one_inverse
from .kcomm import (KCommContext, KCommProblem, find_kcomm_inverse, kcomm_consistent, kcomm_context,
                    kcomm_f_generator, kcomm_g_generator, kcomm_lemma_report, kcomm_xhat)
from .matrix import Matrix, RrefResult, kron, multiply, nullspace_basis, power, rank, rref, unvec, vec
from .oracle import (AffineSolutionSet, Constraint, LinearMatrixSystem, LinearTerm, contains,
                     enumerate_solutions, sets_equal, solve, system_of)
from .penrose import (PenroseContext, PenroseProblem, penrose_consistent, penrose_context,
                      penrose_f_generator, penrose_g_generator, penrose_x1)
from .report import ConsistencyReport

__version__ = "0.1.0"
