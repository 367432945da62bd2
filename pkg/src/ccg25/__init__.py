"""Constantly curved holomorphic 2-spheres of degree 6 in G(2,5).

Exact construction of the diagonal family from moduli parameters
(t0, t1, t6), certification of Plucker membership / constant curvature /
ramification, the closed-form and quadrature bending-energy functional,
and scans of the 2-dimensional semialgebraic moduli set.
"""

from .errors import (CertificationError, ContractViolationError,
                     DegenerateInputError, FeasibilityError, QuadratureError,
                     TranscriptionFaultError)
from .grassmann import (Certificate, GenericityResult, PencilCurve,
                        PlueckerCurve, center_genericity, center_map, certify,
                        gram_and_defect, jp_checks, pluecker_residual,
                        ramification, second_ff_norm, w_numeric, wedge_pencil)
from .moduli import (ConstructedCurve, DiagonalSolution, ModuliPoint,
                     ScanSample, TauChart, WValue, construct_curve,
                     count_solutions, derive_data, f_value, family33_curve,
                     feasibility, generators, level_set_s1, omega_from_orbit,
                     perturbed_residual, reconstruct_angles, scan, sigma,
                     solve_uvw, tangential_curve, tau_chart, tau_inverse,
                     transversal_curve, verify_f_identity, w_closed)
from .polynomials import (MultiPoly, UniPoly, eval_and_gradient, isolate_roots,
                          resultant, sturm_count)
from .scalars import Cyclo8, SqrtSum
from .sl2 import (BinaryForm, GroupElement, SkewTensor, commutation_check,
                  e_basis, form_to_skew, invariant_quadric, isotropy24,
                  orbit_point, rep_matrix, transvectant)

__version__ = "1.0.0"
