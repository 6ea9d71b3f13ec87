"""Multiscale Constant-Q analysis/synthesis filterbank with mask-based enhancement."""

from ._msae import (
    Codec,
    MsaeError,
    design_bands,
    make_noise,
    measured_q,
    mix_at_snr,
    mse,
    mu_law,
    pmse,
    read_wav,
    reconstruction_error_db,
    snr_db,
    wiener_target,
    write_wav,
)

__all__ = [
    "Codec",
    "MsaeError",
    "design_bands",
    "make_noise",
    "measured_q",
    "mix_at_snr",
    "mse",
    "mu_law",
    "pmse",
    "read_wav",
    "reconstruction_error_db",
    "snr_db",
    "wiener_target",
    "write_wav",
]

__version__ = "0.1.0"
