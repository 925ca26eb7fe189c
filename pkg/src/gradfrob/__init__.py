"""Exact decision procedures for graded Frobenius and graded symmetric algebras.

An algebra is given by a homogeneous basis, its degrees in a grading
group, its structure constants and its unit.  The deciders answer, with
a checkable certificate or witness, whether it is sigma-graded Frobenius,
graded symmetric or left sigma-faithful.
"""

from .algebra import GradedAlgebra, ValidationReport, component, multiply, support, validate
from .constructors import (
    QMatrix,
    aq_symmetric_condition,
    koszul_dual_q,
    make_aq,
    make_exterior,
    make_good_matrix,
    make_twisted_group_algebra,
    with_trivial_grading,
)
from .decide import (
    Decision,
    check_theorem_a,
    decide_dual_component_iso,
    decide_dual_module_iso,
    decide_frobenius_ungraded,
    decide_graded_symmetric,
    decide_sigma_frobenius,
    is_sigma_faithful,
    scan_sigma,
    verify_decision,
)
from .paratrophic import block, build_cg, build_p

__version__ = "0.1.0"
