"""Exact computations for hyperplane arrangements.

Every analysis function takes an :class:`Arrangement` and returns plain
Python data (dicts, lists, strings). Rationals are rendered as strings such
as ``"-2/3"`` so nothing is lost to floating point.
"""

from ._hyparr import (
    Arrangement,
    bs_lower,
    charpoly,
    corpus_names,
    dense_edges,
    free_roots,
    freeness,
    lattice,
    lct,
    report,
    verify_smc,
    zeta,
)

__all__ = [
    "Arrangement",
    "bs_lower",
    "charpoly",
    "corpus_names",
    "dense_edges",
    "free_roots",
    "freeness",
    "lattice",
    "lct",
    "report",
    "verify_smc",
    "zeta",
]
