"""Forests of rooted (Greg) hypertrees, their operads, differentials and series.

Main entry points::

    from hypertrees import parse_forest, compose, reduce, differential, betti
    compose(parse_forest("1<2>"), 1, parse_forest("1<2>"), "RT")
"""

from .cohomology import CochainComplex, betti, euler_char, h0_basis
from .differential import Convention, d0, d_partition, differential
from .enumeration import count_bigraded, enumerate_family, shape_decompose, shape_reconstruct, shapes
from .forest import (
    Family,
    InvalidStructure,
    ParseError,
    canonicalize,
    format_forest,
    grading,
    height,
    is_reduced,
    parse_forest,
)
from .lincomb import LinComb
from .operad import act, compose, compose_lin, generator, insert, reduce
from .relations import check_relations, relator_values
from .series import PowerSeries, hilbert, koszul_check
from .suboperad import suboperad_dims

__version__ = "0.1.0"

__all__ = [
    "CochainComplex",
    "Convention",
    "Family",
    "InvalidStructure",
    "LinComb",
    "ParseError",
    "PowerSeries",
    "act",
    "betti",
    "canonicalize",
    "check_relations",
    "compose",
    "compose_lin",
    "count_bigraded",
    "d0",
    "d_partition",
    "differential",
    "enumerate_family",
    "euler_char",
    "format_forest",
    "generator",
    "grading",
    "h0_basis",
    "height",
    "hilbert",
    "insert",
    "is_reduced",
    "koszul_check",
    "parse_forest",
    "reduce",
    "relator_values",
    "shape_decompose",
    "shape_reconstruct",
    "shapes",
    "suboperad_dims",
]
