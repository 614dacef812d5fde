"""Carga de las tablas de referencia de polinomios de grado 2, 3 y 4.

Las entradas están transcritas en la notación de tablas y se validan con
Pydantic al cargar el archivo.
"""

from functools import lru_cache
from typing import List, Literal

from pydantic import BaseModel

from ..domain.ids import BasisId, Family, Parity
from ..domain.qpoly import QPolynomial
from .resources import read_resource
from .text_format import parse_text

TABLES_FILE = ("data", "reference_tables.json")


class ReferenceEntry(BaseModel):
    """
    Una fila de una tabla de referencia.

    Atributos:
        table: Número de tabla (1 a 5).
        family: "Y" o "Zu" (polinomio básico de tipo 1 o 2).
        parity: "+" o "-".
        n: Grado.
        m: Orden.
        text: Polinomio tal como aparece impreso.
    """

    table: int
    family: Literal["Y", "Zu"]
    parity: Literal["+", "-"]
    n: int
    m: int
    text: str

    @property
    def basis_id(self) -> BasisId:
        return BasisId(n=self.n, family=Family(self.family), parity=Parity(self.parity), m=self.m)

    def polynomial(self) -> QPolynomial:
        return parse_text(self.text)


class ReferenceTables(BaseModel):
    """
    Conjunto de tablas.

    Atributos:
        phase: Fase de Legendre en la que están impresas.
        entries: Filas en el orden de impresión.
    """

    phase: Literal["hobson", "condon-shortley"]
    entries: List[ReferenceEntry]

    def for_degree(self, n: int) -> List[ReferenceEntry]:
        return [e for e in self.entries if e.n == n]


class ReferenceTableLoader:
    """Tablas validadas, leídas una vez por proceso."""

    @staticmethod
    @lru_cache(maxsize=1)
    def load() -> ReferenceTables:
        """
        Raises:
            FileNotFoundError: Si el archivo no está en el paquete.
            pydantic.ValidationError: Si alguna fila no cumple el esquema.
        """
        return ReferenceTables.model_validate_json(read_resource(*TABLES_FILE))
