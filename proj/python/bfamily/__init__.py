"""b-family peakon equations: pseudospectral solver and complex-singularity tracker."""

from ._core import (
    BFamilyError,
    fit_spectrum,
    forward_transform,
    inverse_transform,
    oracle_field,
    oracle_spectrum,
    run_cli,
    simulate,
    track,
)

__all__ = [
    "BFamilyError",
    "fit_spectrum",
    "forward_transform",
    "inverse_transform",
    "oracle_field",
    "oracle_spectrum",
    "run_cli",
    "simulate",
    "track",
]
