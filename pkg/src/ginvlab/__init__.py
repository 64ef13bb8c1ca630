"""Exact generalized-inverse computations in small finite rings."""

from .errors import (BadTensorShape, BudgetExceeded, GinvError, InvalidModulus,
                     NoUnity, NotAssociative, NotInnerInverse, NotReflexiveInverse,
                     NotRegular, ParseError, RingMismatch, UnknownCheck, WrongRing)
from .fixture import build_example_ring, is_example_ring
from .ginv import (IdempotentFrame, InverseReport, additive_span,
                   idempotent_frame, iann_decomposition, inner_annihilator,
                   inner_inverses, inner_inverses_param, inner_translate,
                   inverse_report, left_annihilator, outer_inverses, phi,
                   principal_left_ideal, principal_right_ideal,
                   ref_decomposition, reflexive_inverses, reflexive_via_product,
                   right_annihilator, scaled_set, singleton_conjugate_test,
                   sumset)
from .parsing import parse_element, render_elem
from .rings import (DEFAULT_BUDGET, TABLE_CAP, Elem, ElemSet, MatrixRing, Ring,
                    TableRing, ZmodRing, build_matrix_ring, build_table_algebra,
                    build_zmod, is_regular, is_semiprime, regular_elements,
                    squarefree)
from .theoremlab import (CHECK_NAMES, CheckVerdict, SuiteReport,
                         check_decomposition, check_example_claims,
                         check_hartwig, check_inner_param, check_invariance,
                         check_jain_prasad, check_nielsen, check_refl_map,
                         check_subset_criterion, check_theorem_inner,
                         check_theorem_reflexive, run_suite)

__version__ = "0.1.0"
