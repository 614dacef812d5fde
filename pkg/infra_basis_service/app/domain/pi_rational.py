"""Múltiplos racionales exactos de π: el tipo de valor de todos los productos internos."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict

from sympy.polys.domains import QQ

from .qpoly import Rational, format_rational, parse_rational, to_rational


@dataclass(frozen=True)
class PiRational:
    """Valor `coefficient · π` con coeficiente racional canónico."""

    coefficient: Rational

    @classmethod
    def of(cls, value: Any) -> "PiRational":
        return cls(to_rational(value))

    @classmethod
    def zero(cls) -> "PiRational":
        return cls(QQ.zero)

    def __add__(self, other: "PiRational") -> "PiRational":
        return PiRational(self.coefficient + other.coefficient)

    def __sub__(self, other: "PiRational") -> "PiRational":
        return PiRational(self.coefficient - other.coefficient)

    def __neg__(self) -> "PiRational":
        return PiRational(-self.coefficient)

    def __mul__(self, factor: Any) -> "PiRational":
        return PiRational(self.coefficient * to_rational(factor))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Any:
        """PiRational / PiRational es racional (π se cancela); / racional sigue en π."""
        if isinstance(other, PiRational):
            if not other.coefficient:
                raise ZeroDivisionError("División por un producto interno nulo")
            return self.coefficient / other.coefficient
        return PiRational(self.coefficient / to_rational(other))

    def __bool__(self) -> bool:
        return bool(self.coefficient)

    @property
    def is_zero(self) -> bool:
        return not self.coefficient

    @property
    def is_positive(self) -> bool:
        return self.coefficient > 0

    def to_json(self) -> Dict[str, str]:
        return {"pi_coeff": format_rational(self.coefficient)}

    @classmethod
    def from_json(cls, payload: Dict[str, str]) -> "PiRational":
        return cls(parse_rational(payload["pi_coeff"]))

    def __str__(self) -> str:
        numerator = int(QQ.numer(self.coefficient))
        denominator = int(QQ.denom(self.coefficient))
        if numerator == 0:
            return "0"
        head = "π" if abs(numerator) == 1 else f"{abs(numerator)}π"
        sign = "-" if numerator < 0 else ""
        return f"{sign}{head}" if denominator == 1 else f"{sign}{head}/{denominator}"
