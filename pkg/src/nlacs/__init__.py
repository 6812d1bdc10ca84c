"""nlacs: exact computations on nilpotent Lie algebras with complex structures.

All arithmetic is over Q or Q(i) via exact rationals; every dimension
count, series term and classification below is a theorem about the
input, not an approximation.
"""

from .ceq import (ComplexEquations, RealEquations, bidegree_split,
                  complex_equations, d_square_defect, real_equations, realify)
from .cpx import (Acs, JClassification, JKind, adapt_frame,
                  doubly_adapted_check, induced_quotient, integrability_defect,
                  j_compatible_series, largest_j_invariant, nijenhuis,
                  standard_acs, validate_acs)
from .errors import NlacsError
from .exactlin import (GaussRational, Matrix, Scalar, Subspace, apply_map,
                       intersect, kernel_basis, member, rref, sum_span)
from .families import (COMMITTED_INSTANCES, CaseReport, FamilyParams,
                       brute_force_case_search, family_case_check,
                       family_instantiate)
from .liealg import (LieAlgebra, SeriesReport, ascending_central_series,
                     ascending_type, bracket, center, change_basis,
                     direct_product, is_ideal, jacobi_defect, quotient)
from .nlaformat import NlaDocument, parse_nla, print_nla
from .obstruct import (AuditCheck, ObstructionVerdict, obstruction_report,
                       snn_admissible_types, theorem_audit)

__version__ = "0.1.0"
