"""Lectura y escritura de polinomios en la notación de las tablas.

Formato de salida: primero los términos escalares y luego un grupo por
unidad e1, e2, e3 (entre paréntesis si tiene más de un término). Dentro de
cada componente: grado total descendente, luego exponente de x2 ascendente,
luego exponente de x1 ascendente.
"""

from __future__ import annotations

from typing import List, Tuple

from lark import Token, Transformer
from lark.exceptions import VisitError

from ..domain.qpoly import Monomial, QPolynomial, format_rational, monomial_poly, parse_rational
from .lark_parser import PolynomialParseError, get_parser


def _unit_index(token: Token) -> int:
    return int(token.value[-1])


class BuildPolynomial(Transformer):
    """Transformer del parse tree al `QPolynomial` correspondiente."""

    def start(self, children):
        return children[0]

    def sum(self, children):
        total = children[0]
        for op, item in zip(children[1::2], children[2::2]):
            total = total + item if op == "+" else total - item
        return total

    def addop(self, children):
        return children[0].value

    def item(self, children):
        if isinstance(children[0], Token) and children[0].type == "MINUS":
            return -children[1]
        return children[0]

    def group(self, children):
        inner = children[0]
        if len(children) > 1:
            return inner * QPolynomial.unit(_unit_index(children[1]))
        return inner

    def factor(self, children):
        var = children[0]
        exponent = 1
        if len(children) > 1:
            text = children[1].value
            if "/" in text:
                raise PolynomialParseError(
                    f"Exponente no entero {text!r}", children[1].start_pos
                )
            exponent = int(text)
        return int(var.value[-1]), exponent

    def _term(self, coefficient, factors: List[Tuple[int, int]], unit) -> QPolynomial:
        exponents = [0, 0, 0]
        for axis, power in factors:
            exponents[axis] += power
        parts = [0, 0, 0, 0]
        parts[_unit_index(unit) if unit is not None else 0] = monomial_poly(
            tuple(exponents), coefficient
        )
        return QPolynomial.from_components(*parts)

    def coefficient_term(self, children):
        number, rest = children[0], children[1:]
        unit = rest.pop() if rest and isinstance(rest[-1], Token) else None
        try:
            coefficient = parse_rational(number.value)
        except ValueError as e:
            raise PolynomialParseError(str(e), number.start_pos) from e
        return self._term(coefficient, rest, unit)

    def monomial_term(self, children):
        rest = list(children)
        unit = rest.pop() if isinstance(rest[-1], Token) else None
        return self._term(1, rest, unit)

    def unit_term(self, children):
        return QPolynomial.unit(_unit_index(children[0]))


def parse_text(text: str) -> QPolynomial:
    """Convierte la notación de tablas en un `QPolynomial`.

    Raises:
        PolynomialParseError: Con la posición del primer carácter inválido.
    """
    if not text.strip():
        raise PolynomialParseError("Texto vacío", 0)
    tree = get_parser().parse(text)
    try:
        return BuildPolynomial().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, PolynomialParseError):
            raise e.orig_exc from e
        raise PolynomialParseError(f"Error construyendo el polinomio: {e.orig_exc}") from e


# --- Renderizado -------------------------------------------------------------


def _order_key(monom: Monomial) -> Tuple[int, int, int]:
    a, b, c = monom
    return (-(a + b + c), c, b)


def _monomial_text(monom: Monomial) -> str:
    parts = []
    for axis, power in enumerate(monom):
        if power:
            parts.append(f"x{axis}" if power == 1 else f"x{axis}^{power}")
    return " ".join(parts)


def _term_body(coefficient, monom: Monomial, unit_suffix: str = "") -> str:
    magnitude = abs(coefficient)
    monomial = _monomial_text(monom)
    pieces = []
    if not monomial or magnitude != 1:
        pieces.append(format_rational(magnitude))
    if monomial:
        pieces.append(monomial)
    if unit_suffix:
        if pieces == ["1"]:
            pieces = []
        pieces.append(unit_suffix)
    return " ".join(pieces)


def _component_terms(f: QPolynomial, k: int) -> List[Tuple[Monomial, object]]:
    return sorted(f.components[k].items(), key=lambda item: _order_key(item[0]))


def _join(pieces: List[Tuple[bool, str]]) -> str:
    out = ""
    for i, (negative, body) in enumerate(pieces):
        if i == 0:
            out = f"-{body}" if negative else body
        else:
            out += f" - {body}" if negative else f" + {body}"
    return out


def render_text(f: QPolynomial) -> str:
    """Representación canónica en la notación de tablas ("0" para el cero)."""
    pieces: List[Tuple[bool, str]] = [
        (coeff < 0, _term_body(coeff, monom)) for monom, coeff in _component_terms(f, 0)
    ]
    for k in (1, 2, 3):
        terms = _component_terms(f, k)
        if not terms:
            continue
        if len(terms) == 1:
            monom, coeff = terms[0]
            pieces.append((coeff < 0, _term_body(coeff, monom, f"e{k}")))
            continue
        inner = _join([(coeff < 0, _term_body(coeff, monom)) for monom, coeff in terms])
        pieces.append((False, f"({inner}) e{k}"))
    return _join(pieces) if pieces else "0"


def normalize_for_comparison(text: str) -> str:
    """Quita espacios y guiones bajos para comparar texto de tablas."""
    return "".join(text.replace("_", "").replace("−", "-").split())
