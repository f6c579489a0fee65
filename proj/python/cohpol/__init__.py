"""Coherence and polarization of photons passing two slits."""

from ._core import (
    DensityMatrix,
    DomainError,
    InputError,
    KrausChannel,
    SlitGeometry,
    birefringent_dephasing,
    coherence_from_pattern,
    decay_report,
    degree_of_coherence,
    degree_of_polarization,
    evolve_continuous,
    evolve_discrete,
    extract_visibility,
    path_dephasing,
    pattern,
    polarization_curve,
    slit_population,
    stokes,
)

__all__ = [
    "DensityMatrix",
    "DomainError",
    "InputError",
    "KrausChannel",
    "SlitGeometry",
    "birefringent_dephasing",
    "coherence_from_pattern",
    "decay_report",
    "degree_of_coherence",
    "degree_of_polarization",
    "evolve_continuous",
    "evolve_discrete",
    "extract_visibility",
    "path_dephasing",
    "pattern",
    "polarization_curve",
    "slit_population",
    "stokes",
]
