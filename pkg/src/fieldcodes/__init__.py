"""Algebraic channel coding over finite fields.

Submodules: ``gf`` (fields), ``poly`` (polynomials), ``matf`` (matrices),
``channel`` (discrete channels), ``linear``, ``cyclic``, ``rs`` and ``bch``
(codes), ``cli`` (command line).
"""

from .errors import CodingError, Uncorrectable
from .gf import Elem, Field, make_extension_field, make_field, make_prime_field, parse_field_spec
from .poly import NEG_INF, Poly
from .matf import MatF
from .channel import Dmc, bec, bsc, q_sym
from .linear import LinearCode
from .cyclic import CyclicCode
from .rs import RsCode
from .bch import BchCode, make_bch
from .report import DecodeReport

__all__ = [
    "BchCode", "CodingError", "CyclicCode", "DecodeReport", "Dmc", "Elem", "Field",
    "LinearCode", "MatF", "NEG_INF", "Poly", "RsCode", "Uncorrectable", "bec", "bsc",
    "make_bch", "make_extension_field", "make_field", "make_prime_field",
    "parse_field_spec", "q_sym",
]
