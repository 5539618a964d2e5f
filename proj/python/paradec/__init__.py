"""Exact non-Archimedean valuations, free-group trace polynomials, and
machine-checked paradoxical-decomposition certificates."""

from ._core import (  # noqa: F401
    __version__,
    arith,
    build_certificate,
    canonical_class,
    cover_ball,
    enumerate_reduced,
    magnitude,
    magnus,
    make_field,
    phi,
    psi_magnitude,
    reduce_concat,
    verify_certificate,
    verify_fricke,
)
