"""Invariantes duros ejecutados por `check`.

Cada invariante produce un `CheckResult` con su nombre; el proceso falla si
alguno no se cumple. Los elementos se obtienen de un `provider` inyectable
para poder verificar que una mutación se detecta.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List, Optional

from ..domain.harmonics import inner_product
from ..domain.ids import BasisId, Family, LegendrePhase, Parity, order_range
from ..domain.linalg import coefficient_rows, exact_rank, in_sandwich_nullspace
from ..domain.operators import D_LEFT, D_RIGHT, DBAR_LEFT, apply_cr, sandwich
from ..domain.qpoly import QPolynomial
from ..schemas import CheckResult, CheckSummary
from .basis import (
    BasisConstructionError,
    alpha_closed_form,
    basis_element,
    enumerate_basis,
    infr_dimension,
    monogenic_x,
    ortho_constants,
    resolve_phase,
)

logger = logging.getLogger(__name__)

ElementProvider = Callable[[BasisId], QPolynomial]


def expected_dimension(n: int) -> int:
    return 6 * n + 3


class BasisVerifier:
    """Ejecuta los invariantes duros hasta un grado máximo.

    Flujo por grado:
        1. dimensión del núcleo del operador sándwich
        2. construcción, anulación, reducción y homogeneidad de cada elemento
        3. independencia lineal y pertenencia al núcleo
        4. Gram diagonal con diagonal positiva
        5. monogenicidad y propiedad de Appell de X; constantes α
    Al final, ortogonalidad entre grados de diferencia impar.
    """

    def __init__(
        self,
        phase: Optional[LegendrePhase | str] = None,
        provider: Optional[ElementProvider] = None,
    ):
        self.phase = resolve_phase(phase)
        self.provider = provider or (lambda bid: basis_element(bid, self.phase))
        self._elements: Dict[int, List[QPolynomial]] = {}

    def run(self, max_n: int) -> CheckSummary:
        results: List[CheckResult] = []
        dims: List[int] = []
        for n in range(max_n + 1):
            dim = infr_dimension(n)
            dims.append(dim)
            results.append(
                CheckResult(
                    invariant="dimension",
                    degree=n,
                    passed=dim == expected_dimension(n),
                    detail=None if dim == expected_dimension(n) else f"nulidad {dim} ≠ {expected_dimension(n)}",
                )
            )
            results.extend(self._check_degree(n))
        results.extend(self._check_cross_degree(max_n))
        summary = CheckSummary(max_degree=max_n, dims=dims, results=results)
        logger.info("check hasta grado %d: %d invariantes, %d fallos", max_n, len(results), len(summary.failures))
        return summary

    # --- Por grado --------------------------------------------------------

    def _elements_of(self, n: int) -> List[QPolynomial]:
        if n not in self._elements:
            self._elements[n] = [self.provider(bid) for bid in enumerate_basis(n)]
        return self._elements[n]

    def _check_degree(self, n: int) -> List[CheckResult]:
        ids = enumerate_basis(n)
        try:
            elements = self._elements_of(n)
        except BasisConstructionError as e:
            return [CheckResult(invariant="construction", degree=n, passed=False, detail=str(e))]

        results = [
            _result("count", n, len(ids) == expected_dimension(n), f"{len(ids)} ids"),
            self._annihilation(n, ids, elements),
            _result(
                "independence",
                n,
                exact_rank(coefficient_rows(elements, n)) == expected_dimension(n),
                "rango incompleto",
            ),
            _first_failure(
                "nullspace", n, ((bid, in_sandwich_nullspace(e, n)) for bid, e in zip(ids, elements))
            ),
            self._gram_diagonal(n, ids, elements),
        ]
        if n >= 2:
            results.append(self._monogenic(n, ids, elements))
            results.append(self._alpha(n))
        results.append(self._appell(n))
        return results

    def _annihilation(self, n: int, ids: List[BasisId], elements: List[QPolynomial]) -> CheckResult:
        pairs = (
            (bid, e.is_reduced and e.is_homogeneous(n) and sandwich(False, e).is_zero)
            for bid, e in zip(ids, elements)
        )
        return _first_failure("annihilation", n, pairs)

    def _gram_diagonal(self, n: int, ids: List[BasisId], elements: List[QPolynomial]) -> CheckResult:
        for i, left in enumerate(elements):
            if not inner_product(left, left).is_positive:
                return _result("gram_diagonal", n, False, f"‖{ids[i].key}‖² no positiva")
            for j in range(i + 1, len(elements)):
                value = inner_product(left, elements[j])
                if value:
                    return _result(
                        "gram_diagonal", n, False, f"⟨{ids[i].key}, {ids[j].key}⟩ = {value}"
                    )
        return _result("gram_diagonal", n, True)

    def _monogenic(self, n: int, ids: List[BasisId], elements: List[QPolynomial]) -> CheckResult:
        pairs = (
            (bid, apply_cr(DBAR_LEFT, e).is_zero)
            for bid, e in zip(ids, elements)
            if bid.family is Family.X
        )
        return _first_failure("x_monogenic", n, pairs)

    def _alpha(self, n: int) -> CheckResult:
        for m in range(1, n + 1):
            alpha, _ = ortho_constants(n, m)
            if alpha != alpha_closed_form(n, m):
                return _result("alpha", n, False, f"m={m}")
        return _result("alpha", n, True)

    def _appell(self, n: int) -> CheckResult:
        """∂X = X∂ = 2(n+m+1)Xₙ₋₁,ₘ (cero para m = n+1), ambas paridades."""
        for bid in _x_ids(n):
            x = monogenic_x(n, bid.m, bid.parity)
            target = monogenic_x(n - 1, bid.m, bid.parity) * (2 * (n + bid.m + 1))
            if apply_cr(D_LEFT, x) != target or apply_cr(D_RIGHT, x) != target:
                return _result("appell", n, False, bid.key)
        return _result("appell", n, True)

    # --- Entre grados -----------------------------------------------------

    def _check_cross_degree(self, max_n: int) -> List[CheckResult]:
        results = []
        for n in range(max_n + 1):
            for n2 in range(n + 1, max_n + 1, 2):
                ids, ids2 = enumerate_basis(n), enumerate_basis(n2)
                try:
                    block, block2 = self._elements_of(n), self._elements_of(n2)
                except BasisConstructionError:
                    continue  # ya reportado como "construction"
                offending = next(
                    (
                        (a, b)
                        for a, e in zip(ids, block)
                        for b, e2 in zip(ids2, block2)
                        if inner_product(e, e2)
                    ),
                    None,
                )
                results.append(
                    CheckResult(
                        invariant="cross_degree_odd",
                        degree=n2,
                        passed=offending is None,
                        detail=None if offending is None else f"⟨{offending[0].key}, {offending[1].key}⟩ ≠ 0",
                    )
                )
        return results


def _x_ids(n: int) -> List[BasisId]:
    return [
        BasisId(n=n, family=Family.X, parity=parity, m=m)
        for parity in (Parity.PLUS, Parity.MINUS)
        for m in order_range(n, Family.X, parity)
    ]


def _result(name: str, n: int, passed: bool, detail: Optional[str] = None) -> CheckResult:
    return CheckResult(invariant=name, degree=n, passed=passed, detail=None if passed else detail)


def _first_failure(name: str, n: int, pairs) -> CheckResult:
    for bid, ok in pairs:
        if not ok:
            return _result(name, n, False, bid.key)
    return _result(name, n, True)


def run_checks(
    max_n: int,
    phase: Optional[LegendrePhase | str] = None,
    provider: Optional[ElementProvider] = None,
) -> CheckSummary:
    return BasisVerifier(phase, provider).run(max_n)


def format_summary(summary: CheckSummary) -> str:
    lines = [f"dims: {','.join(str(d) for d in summary.dims)}"]
    for failure in summary.failures:
        where = "" if failure.degree is None else f" (n={failure.degree})"
        lines.append(f"FALLO {failure.invariant}{where}: {failure.detail or ''}".rstrip())
    lines.append("OK" if summary.passed else f"{len(summary.failures)} invariante(s) fallidos")
    return "\n".join(lines)
