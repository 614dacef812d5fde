"""Arnés de identidades de los operadores de Cauchy–Riemann y recurrencias de Legendre.

Cada identidad se evalúa por diferencia exacta de ambos lados; las que
requieren f monogénica se marcan "n/a" cuando f no lo es.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional

from ..domain.harmonics import meridian_legendre
from ..domain.ids import LegendrePhase
from ..domain.operators import (
    D_LEFT,
    D_RIGHT,
    DBAR_LEFT,
    DBAR_RIGHT,
    Side,
    apply_cr,
    laplacian,
    sandwich,
    sandwich_right_first,
    vec_derivative,
)
from ..domain.qpoly import E1, E2, E3, RHO2, X0, X1, X_BAR, QPolynomial
from ..schemas import IdentityResult, RecurrenceResult

logger = logging.getLogger(__name__)

Check = Callable[[QPolynomial, QPolynomial], bool]


def _scalar(p) -> QPolynomial:
    return QPolynomial.scalar(p)


def _leibniz_correction(f: QPolynomial, g: QPolynomial, left: bool) -> QPolynomial:
    """2e3(f1∂2g − f2∂1g) por la izquierda; −2(g1∂2f − g2∂1f)e3 por la derecha."""
    if left:
        f1, f2 = f.component(1), f.component(2)
        return E3 * (g.partial(2) * f1 - g.partial(1) * f2) * 2
    g1, g2 = g.component(1), g.component(2)
    return (f.partial(2) * g1 - f.partial(1) * g2) * E3 * (-2)


def _leibniz_left(conjugated: bool) -> Check:
    spec = D_LEFT if conjugated else DBAR_LEFT
    sign = 1 if conjugated else -1

    def check(f: QPolynomial, g: QPolynomial) -> bool:
        defect = apply_cr(spec, f * g) - apply_cr(spec, f) * g - f * apply_cr(spec, g)
        return defect == _leibniz_correction(f, g, left=True) * sign

    return check


def _leibniz_right(conjugated: bool) -> Check:
    spec = D_RIGHT if conjugated else DBAR_RIGHT
    sign = 1 if conjugated else -1

    def check(f: QPolynomial, g: QPolynomial) -> bool:
        defect = apply_cr(spec, f * g) - apply_cr(spec, f) * g - f * apply_cr(spec, g)
        return defect == _leibniz_correction(f, g, left=False) * sign

    return check


def _d(p: QPolynomial, *axes: int) -> QPolynomial:
    for axis in axes:
        p = p.partial(axis)
    return p


def _vec_sandwich(f: QPolynomial) -> QPolynomial:
    return vec_derivative(vec_derivative(f, Side.LEFT), Side.RIGHT)


def _bilateral_anticommutator(f: QPolynomial, _: QPolynomial) -> bool:
    vec_f = f.vector_part
    lhs = vec_derivative(vec_f, Side.LEFT) + vec_derivative(vec_f, Side.RIGHT)
    divergence = _scalar(f.component(1)).partial(1) + _scalar(f.component(2)).partial(2)
    return lhs == divergence * (-2)


def _bilateral_scalar(f: QPolynomial, _: QPolynomial) -> bool:
    f0 = f.scalar_part
    return _vec_sandwich(f0) == -(f0.partial(1).partial(1) + f0.partial(2).partial(2))


def _bilateral_vector(f: QPolynomial, _: QPolynomial) -> bool:
    f1 = _scalar(f.component(1))
    f2 = _scalar(f.component(2))
    e1_part = _d(f1, 2, 2) - _d(f1, 1, 1) - _d(f2, 1, 2) * 2
    e2_part = _d(f2, 1, 1) - _d(f2, 2, 2) - _d(f1, 1, 2) * 2
    return _vec_sandwich(f.vector_part) == e1_part * E1 + e2_part * E2


def _dbar_vector_sandwich(f: QPolynomial, _: QPolynomial) -> bool:
    f1 = _scalar(f.component(1))
    f2 = _scalar(f.component(2))
    scalar = (_d(f1, 0, 1) + _d(f2, 0, 2)) * (-2)
    e1_part = _d(f1, 0, 0) - _d(f1, 1, 1) + _d(f1, 2, 2) - _d(f2, 1, 2) * 2
    e2_part = _d(f2, 0, 0) + _d(f2, 1, 1) - _d(f2, 2, 2) - _d(f1, 1, 2) * 2
    return sandwich(False, f.vector_part) == scalar + e1_part * E1 + e2_part * E2


def _two_sided_dbar(f: QPolynomial, _: QPolynomial) -> bool:
    """∂̄f + f∂̄ = 2(∂₀f₀ − ∂₁f₁ − ∂₂f₂) + 2(∂₀f₁ + ∂₁f₀)e₁ + 2(∂₀f₂ + ∂₂f₀)e₂."""
    f0, f1, f2 = (_scalar(f.component(k)) for k in range(3))
    scalar = _d(f0, 0) - _d(f1, 1) - _d(f2, 2)
    rhs = scalar + (_d(f1, 0) + _d(f0, 1)) * E1 + (_d(f2, 0) + _d(f0, 2)) * E2
    return apply_cr(DBAR_LEFT, f) + apply_cr(DBAR_RIGHT, f) == rhs * 2


def _two_sided_d(f: QPolynomial, _: QPolynomial) -> bool:
    """∂f + f∂ = 2(∂₀f₀ + ∂₁f₁ + ∂₂f₂) + 2(∂₀f₁ − ∂₁f₀)e₁ + 2(∂₀f₂ − ∂₂f₀)e₂."""
    f0, f1, f2 = (_scalar(f.component(k)) for k in range(3))
    scalar = _d(f0, 0) + _d(f1, 1) + _d(f2, 2)
    rhs = scalar + (_d(f1, 0) - _d(f0, 1)) * E1 + (_d(f2, 0) - _d(f0, 2)) * E2
    return apply_cr(D_LEFT, f) + apply_cr(D_RIGHT, f) == rhs * 2


def _dbar_scalar_piece(f: QPolynomial, _: QPolynomial) -> bool:
    """∂̄f₀∂̄ = (∂₀² − ∂₁² − ∂₂²)f₀ + 2∂₀∂₁f₀ e₁ + 2∂₀∂₂f₀ e₂."""
    f0 = f.scalar_part
    mixed = (_d(f0, 0, 1) * E1 + _d(f0, 0, 2) * E2) * 2
    rhs = _d(f0, 0, 0) - _d(f0, 1, 1) - _d(f0, 2, 2) + mixed
    return sandwich(False, f0) == rhs


def _dbar_e1_piece(f: QPolynomial, _: QPolynomial) -> bool:
    """∂̄(f₁e₁)∂̄ = −2∂₀∂₁f₁ + (∂₀² − ∂₁² + ∂₂²)f₁ e₁ − 2∂₁∂₂f₁ e₂."""
    f1 = _scalar(f.component(1))
    e1_part = _d(f1, 0, 0) - _d(f1, 1, 1) + _d(f1, 2, 2)
    rhs = _d(f1, 0, 1) * (-2) + e1_part * E1 - _d(f1, 1, 2) * E2 * 2
    return sandwich(False, f1 * E1) == rhs


def _dbar_e2_piece(f: QPolynomial, _: QPolynomial) -> bool:
    """∂̄(f₂e₂)∂̄ = −2∂₀∂₂f₂ − 2∂₁∂₂f₂ e₁ + (∂₀² + ∂₁² − ∂₂²)f₂ e₂."""
    f2 = _scalar(f.component(2))
    e2_part = _d(f2, 0, 0) + _d(f2, 1, 1) - _d(f2, 2, 2)
    rhs = _d(f2, 0, 2) * (-2) - _d(f2, 1, 2) * E1 * 2 + e2_part * E2
    return sandwich(False, f2 * E2) == rhs


def _sandwich_decomposition(f: QPolynomial, _: QPolynomial) -> bool:
    """∂̄f∂̄ separado en parte escalar y vectorial de f."""
    f0, vec_f = f.scalar_part, f.vector_part

    def vl(p: QPolynomial) -> QPolynomial:
        return vec_derivative(p, Side.LEFT)

    def vr(p: QPolynomial) -> QPolynomial:
        return vec_derivative(p, Side.RIGHT)

    scalar_side = f0.partial(0).partial(0) + vl(vr(f0)) + vl(f0).partial(0) * 2
    vector_side = vec_f.partial(0).partial(0) + (vl(vec_f) + vr(vec_f)).partial(0) + vl(vr(vec_f))
    return sandwich(False, f) == scalar_side + vector_side


def _r3_preservation(f: QPolynomial, _: QPolynomial) -> bool:
    return sandwich(False, f).is_reduced and sandwich(True, f).is_reduced


def _order_independence(f: QPolynomial, _: QPolynomial) -> bool:
    return all(sandwich(c, f) == sandwich_right_first(c, f) for c in (False, True))


def _laplacian_factorization(f: QPolynomial, _: QPolynomial) -> bool:
    delta = laplacian(f)
    return apply_cr(D_LEFT, apply_cr(DBAR_LEFT, f)) == delta == apply_cr(
        DBAR_LEFT, apply_cr(D_LEFT, f)
    )


def _conjugate_symmetry(f: QPolynomial, _: QPolynomial) -> bool:
    """conj(∂̄f∂̄) = ∂ f̄ ∂: inframonogénica ⟺ conjugada antiinframonogénica."""
    return sandwich(False, f).conjugate() == sandwich(True, f.conjugate())


def _left_right_equivalence(f: QPolynomial, _: QPolynomial) -> bool:
    """−e3(∂̄f)e3 = conj(f∂̄)."""
    return -(E3 * apply_cr(DBAR_LEFT, f) * E3) == apply_cr(DBAR_RIGHT, f).conjugate()


def _two_sided_monogenic(f: QPolynomial, _: QPolynomial) -> bool:
    return apply_cr(D_LEFT, f) + apply_cr(D_RIGHT, f) == f.partial(0) * 4


def _bilateral_x_monogenic(f: QPolynomial, _: QPolynomial) -> bool:
    return sandwich(False, X_BAR * f + f * X_BAR) == apply_cr(DBAR_LEFT, f.scalar_part) * 4


def _radial_monogenic(f: QPolynomial, _: QPolynomial) -> bool:
    return sandwich(False, f * RHO2) == f.conjugate() * (-2)


GENERAL_IDENTITIES: Dict[str, Check] = {
    "leibniz_d_left": _leibniz_left(True),
    "leibniz_dbar_left": _leibniz_left(False),
    "leibniz_d_right": _leibniz_right(True),
    "leibniz_dbar_right": _leibniz_right(False),
    "bilateral_vec_anticommutator": _bilateral_anticommutator,
    "bilateral_vec_scalar": _bilateral_scalar,
    "bilateral_vec_vector": _bilateral_vector,
    "bilateral_dbar_vector": _dbar_vector_sandwich,
    "bilateral_dbar_scalar_piece": _dbar_scalar_piece,
    "bilateral_dbar_e1_piece": _dbar_e1_piece,
    "bilateral_dbar_e2_piece": _dbar_e2_piece,
    "two_sided_dbar": _two_sided_dbar,
    "two_sided_d": _two_sided_d,
    "sandwich_decomposition": _sandwich_decomposition,
    "r3_preservation": _r3_preservation,
    "sandwich_order_independence": _order_independence,
    "laplacian_factorization": _laplacian_factorization,
    "conjugate_symmetry": _conjugate_symmetry,
    "monogenic_left_right_equivalence": _left_right_equivalence,
}

MONOGENIC_IDENTITIES: Dict[str, Check] = {
    "two_sided_monogenic": _two_sided_monogenic,
    "bilateral_x_monogenic": _bilateral_x_monogenic,
    "radial_monogenic": _radial_monogenic,
}


def check_identities(f: QPolynomial, g: QPolynomial) -> List[IdentityResult]:
    """Evalúa todas las identidades sobre el par (f, g).

    Las reglas de Leibniz y las expansiones bilaterales suponen f y g reducidas;
    si no lo son, esas identidades se reportan "n/a".
    """
    results: List[IdentityResult] = []
    reduced = f.is_reduced and g.is_reduced
    for name, check in GENERAL_IDENTITIES.items():
        if not reduced:
            results.append(IdentityResult(identity=name, status="n/a"))
            continue
        results.append(IdentityResult(identity=name, status="pass" if check(f, g) else "fail"))

    monogenic = reduced and apply_cr(DBAR_LEFT, f).is_zero
    for name, check in MONOGENIC_IDENTITIES.items():
        if not monogenic:
            status = "n/a"
        else:
            status = "pass" if check(f, g) else "fail"
        results.append(IdentityResult(identity=name, status=status))
    return results


def monogenic_left_right_equivalence(f: QPolynomial) -> bool:
    return _left_right_equivalence(f, f)


# --- Recurrencias de Legendre en forma cartesiana ------------------------------


def _recurrence_sides(name: str, n: int, m: int, phase: LegendrePhase):
    def v(deg: int, order: int):
        return meridian_legendre(deg, order, phase)

    rho2 = X0**2 + X1**2
    if name == "rec1":
        return v(n, m) * (2 * m), -(v(n - 1, m + 1) + v(n - 1, m - 1) * ((n + m - 1) * (n + m))) * X1
    if name == "rec2":
        return v(n, m + 1) * X1, v(n, m) * X0 * (n - m) - v(n - 1, m) * rho2 * (n + m)
    if name == "rec3":
        return v(n + 1, m) * (n - m + 1), v(n, m) * X0 * (2 * n + 1) - v(n - 1, m) * rho2 * (n + m)
    if name == "rec4a":
        lhs = v(n, m) * X1 * (2 * n + 1)
        rhs = v(n + 1, m - 1) * ((n - m + 1) * (n - m + 2)) - v(n - 1, m - 1) * rho2 * (
            (n + m - 1) * (n + m)
        )
        return lhs, rhs
    if name == "rec4b":
        return v(n, m) * X1 * (2 * n + 1), -(v(n + 1, m + 1) - v(n - 1, m + 1) * rho2)
    raise ValueError(f"Recurrencia desconocida: {name}")


# orden mínimo de m por recurrencia
_RECURRENCE_LOW = {"rec1": 1, "rec2": 0, "rec3": 0, "rec4a": 1, "rec4b": 0}


def check_legendre_recurrences(
    max_n: int, phase: Optional[LegendrePhase] = None
) -> List[RecurrenceResult]:
    """Las cinco recurrencias para 1 ≤ n ≤ max_n sobre ρⁿPₙᵐ(x0/ρ)."""
    phase = phase or LegendrePhase.CONDON_SHORTLEY
    results: List[RecurrenceResult] = []
    for name, low in _RECURRENCE_LOW.items():
        for n in range(1, max_n + 1):
            for m in range(low, n + 1):
                lhs, rhs = _recurrence_sides(name, n, m, phase)
                results.append(RecurrenceResult(name=name, n=n, m=m, phase=phase.value, holds=lhs == rhs))
    failed = sum(not r.holds for r in results)
    logger.info("Recurrencias (%s): %d evaluadas, %d fallan", phase.value, len(results), failed)
    return results
