"""Modelos de datos de los documentos que el servicio lee y escribe.

Define los esquemas JSON de polinomios, expansiones, matrices de Gram,
resultados de verificación y el reporte de discrepancias, además de la
configuración validada de cada comando de la CLI.
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .domain.qpoly import format_rational, parse_rational


class TermModel(BaseModel):
    """
    Un término del polinomio: monomio x0^a x1^b x2^c con coeficiente cuaterniónico.

    Atributos:
        exp: Exponentes [a, b, c], enteros no negativos.
        coeff: Coeficientes [q0, q1, q2, q3] como cadenas "p" o "p/q" en forma canónica.
    """

    exp: List[int] = Field(min_length=3, max_length=3)
    coeff: List[str] = Field(min_length=4, max_length=4)

    @field_validator("exp")
    @classmethod
    def _non_negative(cls, value: List[int]) -> List[int]:
        if any(e < 0 for e in value):
            raise ValueError(f"Exponentes negativos no permitidos: {value}")
        return value

    @field_validator("coeff")
    @classmethod
    def _canonical(cls, value: List[str]) -> List[str]:
        for text in value:
            canonical = format_rational(parse_rational(text))
            if canonical != text.strip():
                raise ValueError(f"Racional no canónico {text!r} (se espera {canonical!r})")
        return value


class PolynomialDocument(BaseModel):
    """
    Polinomio con valores en cuaterniones en el esquema JSON de intercambio.

    Atributos:
        terms: Términos ordenados lexicográficamente por `exp`, sin repetidos;
            los términos omitidos valen cero.
    """

    terms: List[TermModel] = Field(default_factory=list)

    @model_validator(mode="after")
    def _sorted(self) -> "PolynomialDocument":
        keys = [tuple(t.exp) for t in self.terms]
        for previous, current in zip(keys, keys[1:]):
            if not previous < current:
                raise ValueError(f"Términos desordenados o repetidos en {list(current)}")
        return self


class ExpansionDocument(BaseModel):
    """
    Expansión de Fourier exacta.

    Atributos:
        max_degree: Grado máximo de la proyección.
        coefficients: Coeficiente racional por id "n:familia:paridad:m".
    """

    max_degree: int = Field(ge=0)
    coefficients: Dict[str, str] = Field(default_factory=dict)


class GramMatrixDocument(BaseModel):
    """
    Matriz de Gram serializada.

    Atributos:
        ids: Ids de la base en el orden de filas y columnas.
        entries: Coeficientes de π de cada producto interno.
    """

    ids: List[str]
    entries: List[List[str]]


class IdentityResult(BaseModel):
    """
    Resultado de una identidad del arnés.

    Atributos:
        identity: Nombre de la identidad.
        status: "pass", "fail" o "n/a" (la hipótesis no se cumple).
    """

    identity: str
    status: Literal["pass", "fail", "n/a"]


class RecurrenceResult(BaseModel):
    """
    Evaluación de una recurrencia de Legendre en forma cartesiana.

    Atributos:
        name: rec1, rec2, rec3, rec4a o rec4b.
        n: Grado.
        m: Orden.
        phase: Fase usada para las funciones asociadas.
        holds: True si ambos lados coinciden exactamente.
    """

    name: str
    n: int
    m: int
    phase: str
    holds: bool


DiscrepancyStatus = Literal["match", "mismatch", "out_of_range", "unparseable"]


class DiscrepancyEntry(BaseModel):
    """
    Comparación de una fórmula o tabla de referencia contra el cálculo exacto.

    Atributos:
        formula_name: Familia de la fórmula (p. ej. "norm_X", "table_Y", "appell").
        indices: Índices de la instancia, p. ej. "n=2,m=1,+".
        reference_value: Valor impreso ("unparseable" si no existe forma legible).
        computed_value: Valor calculado exactamente.
        status: match, mismatch, out_of_range o unparseable.
        note: Observación opcional (escala encontrada, constante eliminada, etc.).
    """

    formula_name: str
    indices: str
    reference_value: str
    computed_value: str
    status: DiscrepancyStatus
    note: Optional[str] = None


class DiscrepancyReport(BaseModel):
    """
    Reporte completo generado por `report`.

    Atributos:
        max_degree: Grado máximo cubierto.
        phase: Fase de construcción de la base.
        entries: Entradas en orden determinista.
    """

    max_degree: int
    phase: str
    entries: List[DiscrepancyEntry] = Field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        totals: Dict[str, int] = {}
        for entry in self.entries:
            totals[entry.status] = totals.get(entry.status, 0) + 1
        return totals


class CheckResult(BaseModel):
    """
    Resultado de un invariante duro.

    Atributos:
        invariant: Nombre del invariante.
        degree: Grado al que se refiere (None si es global).
        passed: True si se cumple.
        detail: Descripción del fallo.
    """

    invariant: str
    degree: Optional[int] = None
    passed: bool
    detail: Optional[str] = None


class CheckSummary(BaseModel):
    """
    Resumen de `check`.

    Atributos:
        max_degree: Grado máximo verificado.
        dims: dim Infrₙ calculada para n = 0..max_degree.
        results: Todos los invariantes evaluados.
    """

    max_degree: int
    dims: List[int]
    results: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]


class CommandConfig(BaseModel):
    """
    Configuración validada de una invocación de la CLI.

    Atributos:
        command: Subcomando.
        degree: Grado para `basis` y `tables`.
        max_degree: Grado máximo para `dim`, `gram`, `check`, `project` y `report`.
        family: Filtro de familia (X, Y, Zu, Z).
        parity: Filtro de paridad.
        order: Filtro de orden m.
        id: Id completo "n:familia:paridad:m".
        format: "json" o "text".
        out: Ruta de salida opcional.
        phase: Fase de Legendre para esta invocación.
    """

    command: Literal["basis", "dim", "gram", "check", "project", "tables", "report"]
    degree: Optional[int] = Field(default=None, ge=0)
    max_degree: Optional[int] = Field(default=None, ge=0)
    family: Optional[Literal["X", "Y", "Zu", "Z"]] = None
    parity: Optional[Literal["+", "-"]] = None
    order: Optional[int] = Field(default=None, ge=0)
    id: Optional[str] = None
    format: Literal["json", "text"] = "json"
    out: Optional[str] = None
    phase: Optional[Literal["hobson", "condon-shortley"]] = None
