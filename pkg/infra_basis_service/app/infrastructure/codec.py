"""Codificación JSON de polinomios, expansiones y matrices de Gram.

Esquema de polinomios:
    {"terms": [{"exp": [a, b, c], "coeff": [q0, q1, q2, q3]}, ...]}
con racionales canónicos "p" o "p/q" y términos en orden lexicográfico.
"""

from __future__ import annotations

import json
from typing import Any, Dict

from pydantic import ValidationError

from ..domain.qpoly import QPolynomial, format_rational, parse_rational
from ..schemas import PolynomialDocument, TermModel
from .lark_parser import PolynomialParseError
from .text_format import parse_text


def to_document(f: QPolynomial) -> PolynomialDocument:
    return PolynomialDocument(
        terms=[
            TermModel(exp=list(monom), coeff=[format_rational(q) for q in coeffs])
            for monom, coeffs in f.terms()
        ]
    )


def from_document(document: PolynomialDocument) -> QPolynomial:
    return QPolynomial.from_terms(
        {tuple(t.exp): [parse_rational(q) for q in t.coeff] for t in document.terms}
    )


def serialize(f: QPolynomial) -> Dict[str, Any]:
    return to_document(f).model_dump()


def dumps(f: QPolynomial) -> str:
    return json.dumps(serialize(f), ensure_ascii=False)


def _validation_path(error: ValidationError) -> str:
    first = error.errors()[0]
    return ".".join(str(part) for part in first["loc"]) or "$"


def parse_payload(payload: Any) -> QPolynomial:
    """Valida un objeto ya decodificado contra el esquema.

    Raises:
        PolynomialParseError: `position` es la ruta del campo inválido (p. ej. "terms.0.coeff").
    """
    try:
        document = PolynomialDocument.model_validate(payload)
    except ValidationError as e:
        path = _validation_path(e)
        raise PolynomialParseError(f"Esquema inválido: {e.errors()[0]['msg']}", path) from e
    return from_document(document)


def loads(text: str) -> QPolynomial:
    """Decodifica JSON en el esquema de polinomios.

    Raises:
        PolynomialParseError: `position` es el desplazamiento del error de sintaxis
            o la ruta del campo que viola el esquema.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolynomialParseError(f"JSON inválido: {e.msg}", e.pos) from e
    return parse_payload(payload)


def read_polynomial(text: str) -> QPolynomial:
    """JSON si el primer carácter no blanco es "{", si no la notación de tablas."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return loads(text)
    return parse_text(text)
