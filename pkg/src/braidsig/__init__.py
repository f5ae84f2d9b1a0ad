"""Signatures, Garside forms and Murasugi classes of braid closures and 2-bridge links."""
from .braid import BraidParseError, BraidWord, ClosureStats, closure_stats, format_braid, mirror, parse_braid, word_flags
from .garside3 import (
    GarsideNormalForm,
    MurasugiClass,
    conjugacy_test,
    conjugate_to_positive,
    inf_sup,
    left_canonical_form,
    murasugi_class,
)
from .seifert import link_signature, seifert_matrix, signature_nullity_of_closure
from .symform import SymBilinearForm, signature_nullity
from .theorems import LinkReport, link_report, murasugi_erle_sigma
from .twobridge import ConwayDiagram, gl_signature, parse_conway

__all__ = [
    "BraidParseError",
    "BraidWord",
    "ClosureStats",
    "ConwayDiagram",
    "GarsideNormalForm",
    "LinkReport",
    "MurasugiClass",
    "SymBilinearForm",
    "closure_stats",
    "conjugacy_test",
    "conjugate_to_positive",
    "format_braid",
    "gl_signature",
    "inf_sup",
    "left_canonical_form",
    "link_report",
    "link_signature",
    "mirror",
    "murasugi_class",
    "murasugi_erle_sigma",
    "parse_braid",
    "parse_conway",
    "seifert_matrix",
    "signature_nullity",
    "signature_nullity_of_closure",
    "word_flags",
]
