"""Finite frames, dual-frame multipliers and localization of their spectra."""

from .errors import (
    CriterionVoidError,
    DimensionError,
    DualityError,
    FrameSpecError,
    HypothesisError,
    NotAFrameError,
    NotARieszBasisError,
    SingularMatrixError,
    ValidationError,
)
from .frames import (
    DualPair,
    Family,
    Frame,
    FrameBounds,
    GaborParams,
    alternate_dual,
    bessel_bound,
    canonical_dual,
    canonical_parseval,
    frame_bounds,
    gabor_frame,
    gabor_riesz_split,
    is_dual_pair,
    onb,
    random_riesz,
    riesz_lower_bound,
    scaled_onb_union,
    subfamily,
)
from .multipliers import Multiplier, Symbol, assemble, norm_bound, spectrum_of

__version__ = "0.1.0"
