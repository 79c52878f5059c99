"""Exact computations with p-adic Hodge complexes over Q."""

from ._synco import (
    Complex,
    Datum,
    DimensionError,
    DoubleComplex,
    FilteredComplex,
    ParseError,
    PHodgeComplex,
    PreconditionError,
    ProperMap,
    Site,
    ValidationError,
    charpoly,
    ext,
    ext_table,
    load,
    tate,
    unit,
)

__all__ = [
    "Complex",
    "Datum",
    "DimensionError",
    "DoubleComplex",
    "FilteredComplex",
    "ParseError",
    "PHodgeComplex",
    "PreconditionError",
    "ProperMap",
    "Site",
    "ValidationError",
    "charpoly",
    "ext",
    "ext_table",
    "load",
    "tate",
    "unit",
]
