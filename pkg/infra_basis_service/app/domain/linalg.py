"""Álgebra lineal exacta sobre QQ (DomainMatrix de sympy)."""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .operators import sandwich
from .qpoly import Monomial, QPolynomial, Rational, monomial_poly

REDUCED_UNITS = (0, 1, 2)
ALL_UNITS = (0, 1, 2, 3)


@lru_cache(maxsize=None)
def homogeneous_monomials(n: int) -> Tuple[Monomial, ...]:
    """Monomios de grado total n en orden lexicográfico ascendente."""
    if n < 0:
        return ()
    return tuple(sorted((a, b, n - a - b) for a in range(n + 1) for b in range(n + 1 - a)))


def to_matrix(rows: Sequence[Sequence[Rational]], width: int) -> DomainMatrix:
    return DomainMatrix([list(r) for r in rows], (len(rows), width), QQ)


def exact_rank(rows: Sequence[Sequence[Rational]]) -> int:
    """Rango exacto de una familia de vectores fila."""
    if not rows:
        return 0
    return to_matrix(rows, len(rows[0])).rank()


def coefficient_rows(polys: Sequence[QPolynomial], n: int, units=REDUCED_UNITS) -> List[list]:
    monomials = homogeneous_monomials(n)
    return [p.coefficient_vector(monomials, units) for p in polys]


@lru_cache(maxsize=None)
def sandwich_matrix(n: int) -> DomainMatrix:
    """Matriz de f ↦ ∂̄f∂̄ desde los polinomios reducidos homogéneos de grado n.

    Columnas: x^α e_k (k = 0, 1, 2) con |α| = n, unidad mayor. Filas: las
    cuatro componentes del espacio de grado n − 2.
    """
    inputs = homogeneous_monomials(n)
    outputs = homogeneous_monomials(n - 2)
    columns = []
    for k in REDUCED_UNITS:
        for monom in inputs:
            parts = [0, 0, 0, 0]
            parts[k] = monomial_poly(monom)
            image = sandwich(False, QPolynomial.from_components(*parts))
            columns.append(image.coefficient_vector(outputs, ALL_UNITS))
    height = len(outputs) * len(ALL_UNITS)
    if height == 0:
        return DomainMatrix.zeros((0, len(columns)), QQ)
    return DomainMatrix(columns, (len(columns), height), QQ).transpose()


def sandwich_nullity(n: int) -> int:
    matrix = sandwich_matrix(n)
    rows, cols = matrix.shape
    return cols if rows == 0 else cols - matrix.rank()


def in_sandwich_nullspace(f: QPolynomial, n: int) -> bool:
    """Comprueba M·v = 0 para el vector de coeficientes de f en grado n."""
    matrix = sandwich_matrix(n)
    if matrix.shape[0] == 0:
        return f.is_reduced and f.is_homogeneous(n)
    vector = f.coefficient_vector(homogeneous_monomials(n), REDUCED_UNITS)
    column = DomainMatrix([[c] for c in vector], (len(vector), 1), QQ)
    return f.is_reduced and f.is_homogeneous(n) and (matrix * column).is_zero_matrix
