"""Concrete presentations, maps, twists, R-matrices and actions."""

from .registry import (
    ALGEBRA_MODELS,
    HOPF_MODELS,
    MODEL_MODES,
    MODES,
    IncompatibleMode,
    UnknownModel,
    get_model,
    model_names,
)
from .spacetime import CHARTS, UnknownChart, basis_change, get_chart
