"""Cohomology of line bundles and tangent sheaves on BSDH and G-twisted
Schubert varieties, computed on weight characters."""

from .charring import Bounds, FormalCharacter, GradedCharacter, demazure_char, demazure_op, weyl_character, weyl_dim
from .cohomology import h_flag_modules, h_full_flag, h_line_bundle, h_module_coefficients
from .rootsys import CartanType, RootSystem, build
from .strings import AlphaString, decompose, sl2_cohomology
from .tangent import BWeightModule, bsdh_tangent, j_set, lemma46_check, p_J_weights, schubert_stabilizer
from .twisted import (
    ExactlyG,
    FiberData,
    Inconclusive,
    NotDetermined,
    TwistedReport,
    check_twisted,
    twisted_bsdh_report,
    twisted_schubert_report,
)
from .weyl import WeylElt, from_word, longest_element

__version__ = "0.1.0"
