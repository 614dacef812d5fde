"""Generadores de muestras exactas para el arnés de identidades y la expansión.

Todas las funciones reciben un `random.Random` explícito; la semilla por
defecto viene de `settings.RANDOM_SEED` para que las corridas sean
reproducibles.
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import QQ

from ..config import settings
from ..domain.harmonics import harmonic_or_zero, plane_harmonic
from ..domain.ids import BasisId, Parity
from ..domain.operators import DBAR_LEFT, apply_cr, sandwich
from ..domain.qpoly import POLY_RING, RHO2, X0, X1, X2, QPolynomial, Rational
from .basis import basis_element, enumerate_basis, monogenic_x


def make_rng(seed: Optional[int] = None) -> random.Random:
    return random.Random(settings.RANDOM_SEED if seed is None else seed)


def random_rational(rng: random.Random, bound: int = 9) -> Rational:
    return QQ(rng.randint(-bound, bound), rng.randint(1, 4))


def random_polynomial(
    rng: random.Random, max_degree: int = 4, terms: int = 4, reduced: bool = True
) -> QPolynomial:
    """Polinomio aleatorio de grado ≤ max_degree; sin componente e3 si `reduced`."""
    units = 3 if reduced else 4
    table: Dict[Tuple[int, int, int], List[Rational]] = {}
    for _ in range(terms):
        degree = rng.randint(0, max_degree)
        a = rng.randint(0, degree)
        b = rng.randint(0, degree - a)
        coeffs = table.setdefault((a, b, degree - a - b), [QQ.zero] * 4)
        coeffs[rng.randrange(units)] += random_rational(rng)
    return QPolynomial.from_terms(table)


def random_harmonic_plane(degree: int, rng: random.Random) -> QPolynomial:
    """h(x1, x2) armónico de grado ≤ degree como combinación de Re/Im((x1 + i x2)^k)."""
    h = POLY_RING.zero
    for k in range(degree + 1):
        re, im = plane_harmonic(k)
        h += re * random_rational(rng) + im * random_rational(rng)
    return QPolynomial.scalar(h)


def scalar_inframonogenic(c0, c1, c2, h: QPolynomial) -> QPolynomial:
    """c0(2x0² + x1² + x2²) + c1x0 + c2 + h(x1, x2)."""
    quadric = X0**2 * 2 + X1**2 + X2**2
    base = quadric * QQ.convert(c0) + X0 * QQ.convert(c1) + POLY_RING(QQ.convert(c2))
    return QPolynomial.scalar(base) + h


def biharmonic_generator(u: QPolynomial, conjugated: bool) -> QPolynomial:
    """∂(|x|²U)∂ si `conjugated`, si no ∂̄(|x|²U)∂̄."""
    return sandwich(conjugated, u * RHO2)


def random_monogenic(rng: random.Random, degree: int) -> QPolynomial:
    """Combinación racional de X±ₙ,ₘ (∂̄-anulados por la izquierda)."""
    total = QPolynomial.zero()
    for m in range(degree + 2):
        for parity in (Parity.PLUS, Parity.MINUS):
            total = total + monogenic_x(degree, m, parity) * random_rational(rng)
    return total


def random_antimonogenic(rng: random.Random, degree: int) -> QPolynomial:
    """Combinación de ∂̄U±ₙ₊₁,ₘ, anulada por ∂ a la izquierda."""
    total = QPolynomial.zero()
    for m in range(degree + 2):
        for parity in (Parity.PLUS, Parity.MINUS):
            u = harmonic_or_zero(degree + 1, m, parity)
            total = total + apply_cr(DBAR_LEFT, u) * random_rational(rng)
    return total


def random_basis_combination(
    rng: random.Random, max_degree: int, count: int = 4
) -> Tuple[Dict[BasisId, Rational], QPolynomial]:
    """Combinación de `count` elementos distintos con coeficientes no nulos."""
    pool = [bid for n in range(max_degree + 1) for bid in enumerate_basis(n)]
    chosen = rng.sample(pool, min(count, len(pool)))
    coefficients: Dict[BasisId, Rational] = {}
    total = QPolynomial.zero()
    for bid in chosen:
        value = random_rational(rng)
        while not value:
            value = random_rational(rng)
        coefficients[bid] = value
        total = total + basis_element(bid) * value
    return coefficients, total
