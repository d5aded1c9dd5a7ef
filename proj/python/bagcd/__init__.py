"""Approximate GCD of polynomials in Bernstein bases by root matching."""

from ._core import (
    AgcdResult,
    BagcdError,
    BernsteinPoly,
    Interval,
    RootCluster,
    agcd,
    agcd_report,
    approximate_polynomial,
    cluster_roots,
    distance,
    from_roots,
    read_polynomial,
    roots,
)

__all__ = [
    "AgcdResult",
    "BagcdError",
    "BernsteinPoly",
    "Interval",
    "RootCluster",
    "agcd",
    "agcd_report",
    "approximate_polynomial",
    "cluster_roots",
    "distance",
    "from_roots",
    "read_polynomial",
    "roots",
]
