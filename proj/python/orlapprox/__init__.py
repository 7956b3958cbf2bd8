"""Musielak-Orlicz approximation toolkit."""

from ._core import (
    ConfigError,
    DomainError,
    Error,
    Multiplier,
    NonConvergenceError,
    NormKind,
    OrliczFamily,
    Spectrum,
    best_approx,
    best_approx_sequence,
    luxemburg_norm,
    modulus,
    norm,
    orlicz_norm,
    run_criterion,
    sharp_constant,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "Error",
    "Multiplier",
    "NonConvergenceError",
    "NormKind",
    "OrliczFamily",
    "Spectrum",
    "best_approx",
    "best_approx_sequence",
    "luxemburg_norm",
    "modulus",
    "norm",
    "orlicz_norm",
    "run_criterion",
    "sharp_constant",
]
