"""Parser LALR de la notación de tablas.

El árbol resultante lo transforma `text_format.BuildPolynomial`; aquí solo
se compila la gramática y se traducen los errores de Lark a
`PolynomialParseError` con la posición del primer carácter inválido.
"""

from functools import lru_cache
from typing import Optional

from lark import Lark, Tree
from lark.exceptions import LarkError, UnexpectedEOF, UnexpectedInput

from .resources import read_resource

GRAMMAR_FILE = ("grammar", "polynomial.lark")


class PolynomialParseError(ValueError):
    """Entrada de polinomio inválida.

    `position` es el desplazamiento en caracteres para errores de sintaxis
    (texto o JSON) o la ruta con puntos del campo para errores de esquema.
    """

    def __init__(self, message: str, position: Optional[object] = None):
        super().__init__(message if position is None else f"{message} (posición {position})")
        self.position = position


class PolynomialTextParser:
    """Envuelve un `Lark` compilado una vez con `parser="lalr"`."""

    def __init__(self, grammar: str):
        self._lark = Lark(grammar, start="start", parser="lalr", lexer="contextual")

    def parse(self, text: str) -> Tree:
        """Texto a parse tree; el signo menos tipográfico cuenta como "-".

        Raises:
            PolynomialParseError: con el desplazamiento del error.
        """
        normalized = text.replace("−", "-")
        try:
            return self._lark.parse(normalized)
        except UnexpectedEOF as e:
            raise PolynomialParseError("Fin de entrada inesperado", len(normalized)) from e
        except UnexpectedInput as e:
            position = getattr(e, "pos_in_stream", None)
            detail = e.get_context(normalized).strip() if position is not None else str(e)
            raise PolynomialParseError(f"Símbolo inesperado: {detail}", position) from e
        except LarkError as e:
            raise PolynomialParseError(f"Error de sintaxis: {e}") from e


@lru_cache(maxsize=1)
def get_parser() -> PolynomialTextParser:
    return PolynomialTextParser(read_resource(*GRAMMAR_FILE))
