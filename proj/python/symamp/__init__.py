"""Perfect amplification of symmetric coherent-state sets.

Thin wrapper around the compiled extension: spectra of circulant Gram
matrices, USD bounds, optimal leakless/leaky transform plans, spectral
property checks, and seeded Monte-Carlo simulation of the linear-optics
amplifier.
"""

from ._core import (
    __version__,
    beamsplitter,
    check_lemma1,
    check_logconcavity,
    check_property1,
    check_property2,
    circular_convolve,
    click_probability,
    displace,
    gram,
    is_valid_spectrum,
    leaky_optimum,
    leakless_optimum,
    monte_carlo,
    overlap,
    redundancy,
    small_amplitude_popt,
    spectrum,
    upper_bound,
    usd_success,
)

__all__ = [
    "__version__",
    "beamsplitter",
    "check_lemma1",
    "check_logconcavity",
    "check_property1",
    "check_property2",
    "circular_convolve",
    "click_probability",
    "displace",
    "gram",
    "is_valid_spectrum",
    "leaky_optimum",
    "leakless_optimum",
    "monte_carlo",
    "overlap",
    "redundancy",
    "small_amplitude_popt",
    "spectrum",
    "upper_bound",
    "usd_success",
]
