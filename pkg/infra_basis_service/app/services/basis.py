"""Construcción de la base inframonogénica: familias X, Y, Z̲ y Z.

Flujo por grado n ≥ 2:
    1. X±ₙ,ₘ = ∂U±ₙ₊₁,ₘ (monogénicos; ∂ = ∂0 − vec∂)
    2. Y y Z̲ a partir de X de grados n−1 y n−2
    3. Z = Z̲ + αX + βY por Gram–Schmidt exacto
Los grados 0 y 1 se enumeran de forma plana (familia B).
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..config import settings
from ..domain.harmonics import harmonic_or_zero, inner_product, norm2
from ..domain.ids import BasisId, Family, LegendrePhase, Parity, order_range
from ..domain.linalg import coefficient_rows, exact_rank, in_sandwich_nullspace, sandwich_nullity
from ..domain.operators import D_LEFT, apply_cr, sandwich
from ..domain.pi_rational import PiRational
from ..domain.qpoly import E1, E2, RHO2, X_BAR, QPolynomial, Rational

logger = logging.getLogger(__name__)


class BasisConstructionError(RuntimeError):
    """Un elemento construido viola reducción, homogeneidad o anulación."""


def resolve_phase(phase: Optional[LegendrePhase | str] = None) -> LegendrePhase:
    if phase is None:
        return LegendrePhase(settings.LEGENDRE_PHASE)
    return LegendrePhase(phase)


# --- Familias en fase de Hobson ----------------------------------------------


@lru_cache(maxsize=None)
def monogenic_x(n: int, m: int, parity: Parity) -> QPolynomial:
    """X±ₙ,ₘ = ∂U±ₙ₊₁,ₘ; cero cuando n < 0 o m > n + 1."""
    if n < 0 or m < 0 or m > n + 1:
        return QPolynomial.zero()
    return apply_cr(D_LEFT, harmonic_or_zero(n + 1, m, parity))


def _bilateral_x(n: int, m: int, parity: Parity) -> QPolynomial:
    """x̄X + Xx̄ con X = X±ₙ₋₁,ₘ."""
    x = monogenic_x(n - 1, m, parity)
    return X_BAR * x + x * X_BAR


def _type1(n: int, m: int, parity: Parity) -> QPolynomial:
    lower = monogenic_x(n - 2, m, parity)
    return _bilateral_x(n, m, parity) + lower * (RHO2 * (2 * (n + m)))


def _type2(n: int, m: int, parity: Parity) -> QPolynomial:
    if m == 0:
        return harmonic_or_zero(n, 1, Parity.MINUS) * E1 - harmonic_or_zero(n, 1, Parity.PLUS) * E2
    lower = monogenic_x(n - 2, m, parity)
    return (
        _bilateral_x(n, m, parity)
        - harmonic_or_zero(n, m, parity)
        + lower * (RHO2 * (n + m))
    )


def _flat(n: int, j: int) -> QPolynomial:
    if n == 0:
        return QPolynomial.unit(j)
    unit, axis = divmod(j, 3)
    return QPolynomial.variable(axis) * QPolynomial.unit(unit)


@lru_cache(maxsize=None)
def ortho_constants(n: int, m: int) -> Tuple[Rational, Optional[Rational]]:
    """(α, β) por Gram–Schmidt exacto; β es None cuando m = n."""
    if n < 2 or not 1 <= m <= n:
        raise ValueError(f"Constantes de ortogonalización fuera de rango: n={n}, m={m}")
    parity = Parity.PLUS
    z = _type2(n, m, parity)
    x = monogenic_x(n, m, parity)
    alpha = -(inner_product(z, x) / norm2(x))
    if m == n:
        return alpha, None
    y = _type1(n, m, parity)
    beta = -(inner_product(z + x * alpha, y) / norm2(y))
    return alpha, beta


def alpha_closed_form(n: int, m: int) -> Rational:
    return QQ(n - m + 1, (n + 1) * (2 * n + 1))


def _orthogonalized(n: int, m: int, parity: Parity) -> QPolynomial:
    z = _type2(n, m, parity)
    if m == 0:
        return z
    alpha, beta = ortho_constants(n, m)
    z = z + monogenic_x(n, m, parity) * alpha
    if beta is not None:
        z = z + _type1(n, m, parity) * beta
    return z


_BUILDERS = {
    Family.X: lambda b: monogenic_x(b.n, b.m, b.parity),
    Family.Y: lambda b: _type1(b.n, b.m, b.parity),
    Family.ZU: lambda b: _type2(b.n, b.m, b.parity),
    Family.Z: lambda b: _orthogonalized(b.n, b.m, b.parity),
    Family.B: lambda b: _flat(b.n, b.m),
}


@lru_cache(maxsize=None)
def _hobson_element(bid: BasisId) -> QPolynomial:
    element = _BUILDERS[bid.family](bid)
    if not element.is_reduced:
        raise BasisConstructionError(f"{bid.key}: componente e3 no nula")
    if not element.is_homogeneous(bid.n):
        raise BasisConstructionError(f"{bid.key}: no es homogéneo de grado {bid.n}")
    if not sandwich(False, element).is_zero:
        raise BasisConstructionError(f"{bid.key}: no es inframonogénico")
    return element


def phase_sign(bid: BasisId, phase: LegendrePhase) -> int:
    """Relación entre el elemento en `phase` y el de Hobson."""
    if bid.family is Family.B:
        return 1
    if bid.family in (Family.ZU, Family.Z) and bid.m == 0:
        return phase.factor(1)
    return phase.factor(bid.m)


def basis_element(bid: BasisId, phase: Optional[LegendrePhase | str] = None) -> QPolynomial:
    """Elemento de la base; verifica reducción, homogeneidad y anulación."""
    resolved = resolve_phase(phase)
    element = _hobson_element(bid)
    return element if phase_sign(bid, resolved) == 1 else -element


def enumerate_basis(n: int) -> List[BasisId]:
    """Orden determinista: bloque X, luego Y, luego Z; m ascendente, + antes que −."""
    if n < 0:
        raise ValueError(f"Grado negativo: {n}")
    if n <= 1:
        return [BasisId(n=n, family=Family.B, parity=Parity.PLUS, m=j) for j in order_range(n, Family.B, Parity.PLUS)]
    ids: List[BasisId] = []
    for family in (Family.X, Family.Y, Family.Z):
        top = max(order_range(n, family, Parity.PLUS))
        for m in range(0, top + 1):
            for parity in (Parity.PLUS, Parity.MINUS):
                if m in order_range(n, family, parity):
                    ids.append(BasisId(n=n, family=family, parity=parity, m=m))
    return ids


# --- Matrices de Gram ----------------------------------------------------------


@dataclass(frozen=True)
class GramMatrix:
    """Matriz simétrica de productos internos sobre una lista ordenada de ids."""

    ids: Tuple[BasisId, ...]
    entries: Tuple[Tuple[PiRational, ...], ...]

    @property
    def diagonal(self) -> List[PiRational]:
        return [self.entries[i][i] for i in range(len(self.ids))]

    def is_symmetric(self) -> bool:
        size = len(self.ids)
        return all(self.entries[i][j] == self.entries[j][i] for i in range(size) for j in range(i))

    def is_diagonal(self) -> bool:
        size = len(self.ids)
        return all(not self.entries[i][j] for i in range(size) for j in range(size) if i != j)

    def off_diagonal_nonzero(self) -> List[Tuple[BasisId, BasisId, PiRational]]:
        size = len(self.ids)
        return [
            (self.ids[i], self.ids[j], self.entries[i][j])
            for i in range(size)
            for j in range(i + 1, size)
            if self.entries[i][j]
        ]

    def to_json(self) -> Dict[str, object]:
        return {
            "ids": [bid.key for bid in self.ids],
            "entries": [[entry.to_json()["pi_coeff"] for entry in row] for row in self.entries],
        }


def _gram_row(args: Tuple[Tuple[str, ...], int, str]) -> List[str]:
    """Fila i (columnas j ≥ i) serializada; se ejecuta en procesos hijos."""
    keys, i, phase = args
    ids = [BasisId.parse(k) for k in keys]
    left = basis_element(ids[i], phase)
    return [
        inner_product(left, basis_element(ids[j], phase)).to_json()["pi_coeff"]
        for j in range(i, len(ids))
    ]


def gram(
    ids: Sequence[BasisId],
    phase: Optional[LegendrePhase | str] = None,
    workers: Optional[int] = None,
) -> GramMatrix:
    """Matriz de Gram exacta; con workers > 1 las filas se calculan en paralelo."""
    resolved = resolve_phase(phase)
    workers = workers or settings.GRAM_WORKERS
    keys = tuple(bid.key for bid in ids)
    jobs = [(keys, i, resolved.value) for i in range(len(ids))]
    if workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_gram_row, jobs))
    else:
        rows = [_gram_row(job) for job in jobs]

    size = len(ids)
    table = [[PiRational.zero()] * size for _ in range(size)]
    for i, row in enumerate(rows):
        for offset, text in enumerate(row):
            value = PiRational.from_json({"pi_coeff": text})
            table[i][i + offset] = value
            table[i + offset][i] = value
    logger.info("Gram de %d elementos calculada (workers=%d)", size, workers)
    return GramMatrix(ids=tuple(ids), entries=tuple(tuple(row) for row in table))


def cross_degree_gram(n: int, n2: int, phase: Optional[LegendrePhase | str] = None) -> GramMatrix:
    """Productos internos entre los bloques de dos grados (submatriz rectangular en la Gram)."""
    return gram(enumerate_basis(n) + enumerate_basis(n2), phase)


# --- Dimensión -----------------------------------------------------------------


def infr_dimension(n: int) -> int:
    """dim Infrₙ como nulidad exacta de la matriz del operador sándwich."""
    nullity = sandwich_nullity(n)
    logger.info("dim Infr_%d = %d", n, nullity)
    return nullity


def basis_rank(n: int) -> int:
    elements = [basis_element(bid) for bid in enumerate_basis(n)]
    return exact_rank(coefficient_rows(elements, n))


def basis_in_nullspace(n: int) -> bool:
    return all(in_sandwich_nullspace(basis_element(bid), n) for bid in enumerate_basis(n))
