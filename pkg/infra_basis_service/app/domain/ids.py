"""Índices validados de armónicos sólidos y de elementos de la base.

Modelos Pydantic congelados: son hashables y sirven como claves de caché.
"""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class InvalidIndexError(ValueError):
    """Índices fuera del rango permitido."""


class Parity(str, Enum):
    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self) -> int:
        return 1 if self is Parity.PLUS else -1


class Family(str, Enum):
    """Familias de la base. `B` es la enumeración plana de los grados 0 y 1."""

    B = "B"
    X = "X"
    Y = "Y"
    ZU = "Zu"
    Z = "Z"


class LegendrePhase(str, Enum):
    HOBSON = "hobson"
    CONDON_SHORTLEY = "condon-shortley"

    def factor(self, m: int) -> int:
        """Factor que convierte un objeto de orden m de Hobson a esta fase."""
        return -1 if self is LegendrePhase.CONDON_SHORTLEY and m % 2 else 1


class HarmonicId(BaseModel):
    """
    Selecciona el armónico sólido U±ₙ,ₘ.

    Atributos:
        n: Grado (≥ 0).
        m: Orden en {−1, 0, …, n}; m = −1 es el elemento de la regla de sustitución.
        parity: "+" (coseno) o "−" (seno); (−, 0) denota la función cero.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    m: int = Field(ge=-1)
    parity: Parity = Parity.PLUS

    @model_validator(mode="after")
    def _check_order(self) -> "HarmonicId":
        if self.m > self.n:
            raise ValueError(f"Orden m={self.m} mayor que el grado n={self.n}")
        if self.m == -1 and self.n == 0:
            raise ValueError("U_{0,-1} no está definido")
        return self


# Tamaño de la enumeración plana por grado
FLAT_SIZES = {0: 3, 1: 9}


def _order_range(n: int, family: Family, parity: Parity) -> range:
    low = 1 if parity is Parity.MINUS else 0
    if family is Family.B:
        return range(0, FLAT_SIZES.get(n, 0)) if parity is Parity.PLUS else range(0)
    if family is Family.X:
        return range(low, n + 2)
    if family is Family.Y:
        return range(low, n) if n >= 2 else range(0)
    return range(low, n + 1) if n >= 2 else range(0)


class BasisId(BaseModel):
    """
    Selecciona un elemento de la base: grado, familia, paridad y orden.

    Atributos:
        n: Grado del polinomio homogéneo.
        family: B (grados 0 y 1), X, Y, Zu (sin ortogonalizar) o Z.
        parity: "+" o "−".
        m: Orden (o posición en la lista plana para la familia B).
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    family: Family
    parity: Parity = Parity.PLUS
    m: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_ranges(self) -> "BasisId":
        if self.m not in _order_range(self.n, self.family, self.parity):
            raise ValueError(
                f"Índice fuera de rango para {self.family.value}: n={self.n}, "
                f"paridad={self.parity.value}, m={self.m}"
            )
        return self

    @property
    def key(self) -> str:
        return f"{self.n}:{self.family.value}:{self.parity.value}:{self.m}"

    @classmethod
    def parse(cls, text: str) -> "BasisId":
        """Lee la forma "n:familia:paridad:m"."""
        parts = text.strip().split(":")
        if len(parts) != 4:
            raise InvalidIndexError(f"Identificador inválido {text!r}; se espera n:familia:paridad:m")
        try:
            return cls(n=int(parts[0]), family=Family(parts[1]), parity=Parity(parts[2]), m=int(parts[3]))
        except ValueError as e:
            raise InvalidIndexError(f"Identificador inválido {text!r}: {e}") from e

    def __str__(self) -> str:
        return self.key


def basis_id(n: int, family: str, parity: str = "+", m: int = 0) -> BasisId:
    """Atajo para construir y validar un BasisId."""
    try:
        return BasisId(n=n, family=Family(family), parity=Parity(parity), m=m)
    except ValueError as e:
        raise InvalidIndexError(str(e)) from e


def order_range(n: int, family: Family, parity: Parity) -> range:
    return _order_range(n, family, parity)
