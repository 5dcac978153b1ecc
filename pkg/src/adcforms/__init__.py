"""Exact arithmetic for Euclidean quadratic forms over the integers,
polynomial rings over finite fields, and localizations of the integers:
norms, Euclidean steps, descent from rational to integral representations,
Euclideanity search, and local representability checks.
"""

from .rings import (Element, Fraction, Integers, LocalizedIntegers,
                    PolyOverFq, RingContext, elem, euclidean_step_scalar,
                    frac, is_squarefree, norm, norm_fraction, valuation)
from .forms import (FractionVector, GramHalfMatrix, IsotropyResult,
                    Maximality, QuadraticForm, anisotropic_constant_reduction,
                    bilinear, diagonal_form, discriminant, discriminant_degree,
                    evaluate, evaluate_elements, fraction_vector, gram,
                    is_isotropic_bounded, is_positive_definite,
                    maximality_special_z, quadratic_form)
from .euclid import (EuclideanClass, EuclideanityReport, SplitForm,
                     classify_euclidean_diagonal_z, euclidean_family,
                     euclidean_step_form, euclideanity_diagonal_z,
                     euclideanity_search, is_euclidean, split_euclidean_step)
from .descent import (AdcAuditReport, DescentStep, DescentTrace, NotFoundUpTo,
                      RepresentationResult, Witness, adc_descend, descent_step,
                      descent_step_detailed, is_adc_empirical, make_witness,
                      non_adc_certificate_check, non_adc_certificate_search,
                      represents_integrally, witness_search)
from .localglobal import (LocalVerdict, binary_aq_adc_z,
                          local_maximality_nondyadic, real_place_verdict,
                          sign_universal_check_290, sum_three_squares,
                          three_squares_predicate, unary_adc,
                          zp_represents_diagonal)
from .fixtures import fixture_names, load_fixture
from .lattice import Budget

__version__ = "0.1.0"
