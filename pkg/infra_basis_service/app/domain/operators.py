"""Operadores de Cauchy–Riemann generalizados y el operador sándwich.

Convención de unidades: la aplicación por la izquierda coloca e1, e2 a la
izquierda de la derivada (∂̄f = ∂0f + e1∂1f + e2∂2f) y por la derecha a la
derecha (f∂̄ = ∂0f + (∂1f)e1 + (∂2f)e2). El operador conjugado ∂ cambia el
signo de la parte vectorial.
"""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from .qpoly import E1, E2, QPolynomial


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    SANDWICH = "sandwich"


class OperatorSpec(BaseModel):
    """
    Selección de operador.

    Atributos:
        conjugated: True para ∂ = ∂0 − vec∂, False para ∂̄ = ∂0 + vec∂.
        side: Lado de aplicación (izquierda, derecha o sándwich).
    """

    model_config = ConfigDict(frozen=True)

    conjugated: bool = False
    side: Side = Side.LEFT


DBAR_LEFT = OperatorSpec(conjugated=False, side=Side.LEFT)
DBAR_RIGHT = OperatorSpec(conjugated=False, side=Side.RIGHT)
D_LEFT = OperatorSpec(conjugated=True, side=Side.LEFT)
D_RIGHT = OperatorSpec(conjugated=True, side=Side.RIGHT)


def vec_derivative(f: QPolynomial, side: Side) -> QPolynomial:
    """vec∂ aplicado a un lado: e1∂1f + e2∂2f o (∂1f)e1 + (∂2f)e2."""
    if side is Side.SANDWICH:
        raise ValueError("vec∂ solo se aplica por un lado")
    d1, d2 = f.partial(1), f.partial(2)
    if side is Side.LEFT:
        return E1 * d1 + E2 * d2
    return d1 * E1 + d2 * E2


def apply_cr(spec: OperatorSpec, f: QPolynomial) -> QPolynomial:
    """Aplica ∂̄ o ∂ por la izquierda o por la derecha."""
    if spec.side is Side.SANDWICH:
        raise ValueError("apply_cr no acepta side=sandwich; use sandwich()")
    vector = vec_derivative(f, spec.side)
    return f.partial(0) - vector if spec.conjugated else f.partial(0) + vector


def sandwich(conjugated: bool, f: QPolynomial) -> QPolynomial:
    """∂̄f∂̄ (o ∂f∂): izquierda primero y luego derecha."""
    left = OperatorSpec(conjugated=conjugated, side=Side.LEFT)
    right = OperatorSpec(conjugated=conjugated, side=Side.RIGHT)
    return apply_cr(right, apply_cr(left, f))


def sandwich_right_first(conjugated: bool, f: QPolynomial) -> QPolynomial:
    left = OperatorSpec(conjugated=conjugated, side=Side.LEFT)
    right = OperatorSpec(conjugated=conjugated, side=Side.RIGHT)
    return apply_cr(left, apply_cr(right, f))


def laplacian(f: QPolynomial, iterations: int = 1) -> QPolynomial:
    """Δ3 por componentes, aplicado 1 o 2 veces."""
    if iterations not in (1, 2):
        raise ValueError(f"iterations debe ser 1 o 2, no {iterations}")
    for _ in range(iterations):
        f = f.partial(0).partial(0) + f.partial(1).partial(1) + f.partial(2).partial(2)
    return f


class ClassFlags(BaseModel):
    """
    Clasificación de un polinomio por anulación exacta de operadores.

    Atributos:
        harmonic: Δf = 0.
        biharmonic: Δ²f = 0.
        monogenic: ∂̄f = 0 (izquierda).
        antimonogenic: ∂f = 0 (izquierda).
        inframonogenic: ∂̄f∂̄ = 0.
        antiinframonogenic: ∂f∂ = 0.
        reduced: componente e3 nula.
    """

    harmonic: bool
    biharmonic: bool
    monogenic: bool
    antimonogenic: bool
    inframonogenic: bool
    antiinframonogenic: bool
    reduced: bool

    @model_validator(mode="after")
    def _consistent(self) -> "ClassFlags":
        implications = (
            ("monogenic", "inframonogenic"),
            ("antimonogenic", "antiinframonogenic"),
            ("harmonic", "biharmonic"),
        )
        for premise, conclusion in implications:
            if getattr(self, premise) and not getattr(self, conclusion):
                raise ValueError(f"Clasificación inconsistente: {premise} sin {conclusion}")
        return self


def classify(f: QPolynomial) -> ClassFlags:
    return ClassFlags(
        harmonic=laplacian(f).is_zero,
        biharmonic=laplacian(f, 2).is_zero,
        monogenic=apply_cr(DBAR_LEFT, f).is_zero,
        antimonogenic=apply_cr(D_LEFT, f).is_zero,
        inframonogenic=sandwich(False, f).is_zero,
        antiinframonogenic=sandwich(True, f).is_zero,
        reduced=f.is_reduced,
    )


def is_inframonogenic(f: QPolynomial) -> bool:
    return sandwich(False, f).is_zero
