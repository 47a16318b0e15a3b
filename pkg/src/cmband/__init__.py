"""Cohen-Macaulay modules over k[[x,y,z]]/(xy,z^2), its overring A and k[[a,b]]/(a^2b^2):
string and band combinatorics, generator presentations and matrix factorizations."""

from .ring import A_RING, FREE2, FREE4, P_RING, T_RING, PolyMatrix, RingElem, RingSpec
from .bunch import (
    BandDatum, CyclicWord, FullWord, StringDatum, bunch_to_module, module_to_bunch,
    parse_datum, validate_band, validate_string,
)
from .canon import canonical_form, essential_image_predicate, regularity_check
from .modpres import (
    build, build_band_module, build_string_module, induce_to_T, involution_tau, merge_rows,
    restrict_to_P, same_submodule,
)
from .mf import MatrixFactorization, golden_mf, knorrer_double, verify_mf

__version__ = "0.1.0"
