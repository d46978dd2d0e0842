"""Graded roots, local equivalence classes and r0 certificates for Brieskorn spheres."""
from .errors import *  # noqa: F401,F403
from .seifert import (
    BrieskornTriple,
    PlumbingGraph,
    SeifertData,
    build_plumbing,
    fintushel_stern_R,
    grading_shift_sigma,
    neg_continued_fraction,
    normalize_seifert,
    parse_triple,
    plumbing_of,
)
from .graded_root import GradedRoot, TauProfile, d_invariant, delta_value, graded_root_of
from .scan import BACKEND

__version__ = "0.1.0"
