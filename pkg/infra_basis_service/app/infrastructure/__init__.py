"""Infraestructura: gramática, parser de texto, codec JSON y tablas de referencia."""

from .codec import dumps, loads, parse_payload, read_polynomial, serialize
from .lark_parser import PolynomialParseError, get_parser
from .reference_tables import ReferenceEntry, ReferenceTableLoader
from .text_format import parse_text, render_text

__all__ = [
    "PolynomialParseError",
    "ReferenceEntry",
    "ReferenceTableLoader",
    "dumps",
    "get_parser",
    "loads",
    "parse_payload",
    "parse_text",
    "read_polynomial",
    "render_text",
    "serialize",
]
