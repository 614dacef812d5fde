"""Reporte de discrepancias: fórmulas y tablas impresas contra el cálculo exacto.

Ninguna discrepancia es un error del proceso; cada comparación produce una
entrada `match`, `mismatch`, `out_of_range` o `unparseable`.
"""

from __future__ import annotations

import logging
from math import factorial
from typing import Callable, Iterator, List, Optional

from sympy.polys.domains import QQ

from ..config import settings
from ..domain.harmonics import harmonic_or_zero, inner_product, norm2
from ..domain.ids import BasisId, Family, LegendrePhase, Parity, order_range
from ..domain.operators import D_LEFT, D_RIGHT, DBAR_LEFT, apply_cr, classify, sandwich
from ..domain.pi_rational import PiRational
from ..domain.qpoly import QPolynomial, format_rational
from ..infrastructure.reference_tables import ReferenceEntry, ReferenceTableLoader
from ..infrastructure.text_format import normalize_for_comparison, render_text
from ..schemas import DiscrepancyEntry, DiscrepancyReport
from .basis import (
    alpha_closed_form,
    basis_element,
    enumerate_basis,
    monogenic_x,
    ortho_constants,
    resolve_phase,
)
from .components import components_expansion, describe_relation, expected_scale, proportionality
from .identities import check_legendre_recurrences, monogenic_left_right_equivalence

logger = logging.getLogger(__name__)


def _pi(value) -> PiRational:
    return PiRational(QQ.convert(value))


def _ratio(a: int, b: int):
    return QQ(factorial(a), factorial(b))


# --- Fórmulas cerradas impresas -------------------------------------------------


def norm_x_formula(n: int, m: int) -> PiRational:
    if m == 0:
        return _pi(QQ(4 * (n + 1), 2 * n + 3))
    return _pi(QQ(2 * (n + 1), 2 * n + 3) * _ratio(n + 1 + m, n + 1 - m))


def norm_y_formula(n: int, m: int) -> PiRational:
    if m == 0:
        bracket = (2 * n - 3) * (3 * n + 1) + (2 * n + 1) ** 3 * n * (n - 1) * (3 * n - 4)
        return _pi(QQ(8 * n * bracket, (2 * n - 3) * (2 * n + 1) * (2 * n + 3)))
    bracket = (
        (2 * n + 1) ** 3 * (n * n - m * m) * (n - 1)
        + 2 * (n - 2 * m * m) ** 2
        + (n + m) * (n - m + 1) ** 2 * (2 * m - 1) ** 2
        + (n - m) * (n + m + 1) ** 2 * (2 * m + 1) ** 2
    )
    scale = QQ(4, (2 * n - 1) ** 2 * (2 * n + 1) * (2 * n + 3))
    return _pi(scale * _ratio(n + m, n - m) * bracket)


def norm_zu_formula(n: int, m: int) -> PiRational:
    if m == 0:
        return _pi(QQ(4 * n * (n + 1), (2 * n + 1) * (2 * n + 3)))
    bracket = (
        (2 * m - 1) ** 2 * (8 * m + (2 * n + 1) ** 2)
        - (2 * m + 1) ** 2 * (8 * m - (2 * n + 1) ** 2)
        + (n - 1) * (2 * n + 1) * (2 * n + 3) ** 2 * (n * n - m * m)
    )
    scale = QQ(1, (2 * n - 1) ** 2 * (2 * n + 1) * (2 * n + 3))
    return _pi(scale * _ratio(n + m, n - m) * bracket)


def inner_x_zu_formula(n: int, m: int) -> PiRational:
    return _pi(QQ(-2, (2 * n + 1) * (2 * n + 3)) * _ratio(n + m + 1, n - m))


def inner_y_zu_formula(n: int, m: int) -> PiRational:
    bracket = (2 * n - 3) * (4 * (n - 1) * m * m + n) + (2 * n + 1) ** 2 * (n * n - m * m) * (
        (n - 1) ** 2 + m * (m - 1)
    )
    scale = QQ(4, (2 * n - 3) * (2 * n - 1) ** 2 * (2 * n + 1))
    return _pi(scale * _ratio(n + m, n - m) * bracket)


# --- Construcción del reporte ----------------------------------------------------


def _entry(
    name: str, indices: str, reference: str, computed: str, status: str, note: Optional[str] = None
) -> DiscrepancyEntry:
    if status == "mismatch":
        logger.debug("Discrepancia %s[%s]: %s vs %s", name, indices, reference, computed)
    return DiscrepancyEntry(
        formula_name=name,
        indices=indices,
        reference_value=reference,
        computed_value=computed,
        status=status,
        note=note,
    )


def _compare(name: str, indices: str, reference: PiRational, computed: PiRational) -> DiscrepancyEntry:
    return _entry(name, indices, str(reference), str(computed), "match" if reference == computed else "mismatch")


def _idx(n: int, m: int, parity: Parity) -> str:
    return f"n={n},m={m},{parity.value}"


def _parities(n: int, family: Family) -> Iterator[tuple]:
    for parity in (Parity.PLUS, Parity.MINUS):
        for m in order_range(n, family, parity):
            yield m, parity


class ReportBuilder:
    """Reúne todas las comparaciones hasta `max_n` en orden determinista."""

    def __init__(self, max_n: int, phase: Optional[LegendrePhase | str] = None):
        if max_n < 2:
            raise ValueError(f"El reporte requiere max_degree ≥ 2 (recibido {max_n})")
        self.max_n = max_n
        self.phase = resolve_phase(phase)
        self.entries: List[DiscrepancyEntry] = []

    def element(self, family: Family, n: int, m: int, parity: Parity, phase=None) -> QPolynomial:
        bid = BasisId(n=n, family=family, parity=parity, m=m)
        return basis_element(bid, phase or self.phase)

    def build(self) -> DiscrepancyReport:
        sections: List[Callable[[], None]] = [
            self._norms,
            self._products,
            self._constants,
            self._appell,
            self._x_operator,
            self._components,
            self._tables,
            self._cross_degree,
            self._recurrences,
            self._claims,
        ]
        for section in sections:
            section()
        logger.info("Reporte hasta grado %d: %d entradas", self.max_n, len(self.entries))
        return DiscrepancyReport(max_degree=self.max_n, phase=self.phase.value, entries=self.entries)

    # --- Normas y productos -----------------------------------------------

    def _norms(self) -> None:
        for n in range(0, self.max_n + 1):
            for m, parity in _parities(n, Family.X):
                x = monogenic_x(n, m, parity)
                self.entries.append(_compare("norm_X", _idx(n, m, parity), norm_x_formula(n, m), norm2(x)))
        for n in range(2, self.max_n + 1):
            for m, parity in _parities(n, Family.Y):
                y = self.element(Family.Y, n, m, parity)
                self.entries.append(_compare("norm_Y", _idx(n, m, parity), norm_y_formula(n, m), norm2(y)))
            for m, parity in _parities(n, Family.ZU):
                z = self.element(Family.ZU, n, m, parity)
                self.entries.append(_compare("norm_Zu", _idx(n, m, parity), norm_zu_formula(n, m), norm2(z)))

    def _products(self) -> None:
        zero = PiRational.zero()
        for n in range(2, self.max_n + 1):
            self.entries.append(
                _entry("inner_X_Y_diagonal", f"n={n},m={n}", "0", "sin elemento", "out_of_range",
                       f"Y±ₙ,ₙ no existe: el orden de Y llega a n−1={n - 1}")
            )
            zu0 = self.element(Family.ZU, n, 0, Parity.PLUS)
            x0 = self.element(Family.X, n, 0, Parity.PLUS)
            self.entries.append(_compare("inner_X_Zu0", _idx(n, 0, Parity.PLUS), zero, inner_product(x0, zu0)))
            for m, parity in _parities(n, Family.Y):
                y = self.element(Family.Y, n, m, parity)
                self.entries.append(_compare("inner_Y_Zu0", _idx(n, m, parity), zero, inner_product(y, zu0)))
                x = self.element(Family.X, n, m, parity)
                self.entries.append(_compare("inner_X_Y", _idx(n, m, parity), zero, inner_product(x, y)))
            for m in range(1, n + 1):
                for parity in (Parity.PLUS, Parity.MINUS):
                    x = self.element(Family.X, n, m, parity)
                    zu = self.element(Family.ZU, n, m, parity)
                    self.entries.append(
                        _compare("inner_X_Zu", _idx(n, m, parity), inner_x_zu_formula(n, m), inner_product(x, zu))
                    )
                    if m <= n - 1:
                        y = self.element(Family.Y, n, m, parity)
                        self.entries.append(
                            _compare("inner_Y_Zu", _idx(n, m, parity), inner_y_zu_formula(n, m), inner_product(y, zu))
                        )
            self._other_products(n)

    def _other_products(self, n: int) -> None:
        """Productos fuera de los pares (X,Zu), (Y,Zu) de mismos índices: deben anularse."""
        ids = [
            BasisId(n=n, family=family, parity=parity, m=m)
            for family in (Family.X, Family.Y, Family.ZU)
            for m, parity in _parities(n, family)
        ]
        allowed = {Family.X: {Family.ZU}, Family.Y: {Family.ZU}, Family.ZU: {Family.X, Family.Y}}
        offending = None
        for i, a in enumerate(ids):
            for b in ids[i + 1:]:
                same = (a.m, a.parity) == (b.m, b.parity)
                if same and b.family in allowed[a.family]:
                    continue
                value = inner_product(basis_element(a, self.phase), basis_element(b, self.phase))
                if value:
                    offending = (a, b, value)
                    break
            if offending:
                break
        if offending is None:
            self.entries.append(_entry("other_products_zero", f"n={n}", "0", "0", "match"))
        else:
            a, b, value = offending
            self.entries.append(
                _entry("other_products_zero", f"n={n}", "0", str(value), "mismatch", f"⟨{a.key}, {b.key}⟩")
            )

    # --- Constantes ----------------------------------------------------------

    def _constants(self) -> None:
        for n in range(2, self.max_n + 1):
            for m in range(1, n + 1):
                alpha, beta = ortho_constants(n, m)
                reference = alpha_closed_form(n, m)
                self.entries.append(
                    _entry(
                        "alpha", f"n={n},m={m}", format_rational(reference), format_rational(alpha),
                        "match" if alpha == reference else "mismatch",
                    )
                )
                if beta is not None:
                    self.entries.append(
                        _entry(
                            "beta", f"n={n},m={m}", "unparseable", format_rational(beta), "unparseable",
                            "la forma cerrada impresa tiene paréntesis desbalanceados",
                        )
                    )

    # --- Appell y operador de construcción -------------------------------------

    def _appell(self) -> None:
        for n in range(0, self.max_n + 1):
            for m, parity in _parities(n, Family.X):
                x = monogenic_x(n, m, parity)
                target = monogenic_x(n - 1, m, parity) * (2 * (n + m + 1))
                holds = apply_cr(D_LEFT, x) == target and apply_cr(D_RIGHT, x) == target
                self.entries.append(
                    _entry(
                        "appell", _idx(n, m, parity), f"{2 * (n + m + 1)}·X(n-1,m)" if m <= n else "0",
                        "se cumple" if holds else "no se cumple", "match" if holds else "mismatch",
                    )
                )

    def _x_operator(self) -> None:
        """Con ∂̄U (operador impreso) el resultado no es monogénico."""
        for n in range(0, self.max_n + 1):
            printed = apply_cr(DBAR_LEFT, harmonic_or_zero(n + 1, 0, Parity.PLUS))
            defect = apply_cr(DBAR_LEFT, printed)
            self.entries.append(
                _entry(
                    "x_printed_operator_monogenic", _idx(n, 0, Parity.PLUS), "0", render_text(defect),
                    "match" if defect.is_zero else "mismatch",
                    "X se construye con ∂U; la forma ∂̄U difiere en el signo de la parte vectorial",
                )
            )

    # --- Expansión en armónicos ---------------------------------------------------

    def _components(self) -> None:
        for phase in (LegendrePhase.HOBSON, LegendrePhase.CONDON_SHORTLEY):
            for n in range(0, self.max_n + 1):
                families = [Family.X] + ([Family.Y, Family.ZU] if n >= 2 else [])
                for family in families:
                    for m, parity in _parities(n, family):
                        bid = BasisId(n=n, family=family, parity=parity, m=m)
                        element = basis_element(bid, phase)
                        expansion = components_expansion(bid, phase)
                        scale = expected_scale(bid)
                        holds = expansion == element * scale
                        self.entries.append(
                            _entry(
                                f"components_{family.value}",
                                f"{_idx(n, m, parity)},{phase.value}",
                                f"{scale}·elemento",
                                describe_relation(expansion, element) or "sin relación de escala",
                                "match" if holds else "mismatch",
                            )
                        )

    # --- Tablas de referencia -------------------------------------------------------

    def _tables(self, degree: Optional[int] = None) -> None:
        tables = ReferenceTableLoader.load()
        table_phase = LegendrePhase(settings.TABLE_PHASE)
        if table_phase.value != tables.phase:
            logger.warning(
                "TABLE_PHASE=%s difiere de la fase de las tablas impresas (%s)", table_phase.value, tables.phase
            )
        for entry in tables.entries:
            if entry.n > self.max_n or (degree is not None and entry.n != degree):
                continue
            if entry.family == "Y":
                self._table_y(entry, table_phase)
            else:
                self._table_zu(entry, table_phase)

    def _table_y(self, entry: ReferenceEntry, phase: LegendrePhase) -> None:
        element = self.element(Family.Y, entry.n, entry.m, Parity(entry.parity), phase)
        printed = entry.polynomial()
        rendered = render_text(element)
        text_match = normalize_for_comparison(rendered) == normalize_for_comparison(entry.text)
        self.entries.append(
            _entry(
                f"table{entry.table}_Y", _idx(entry.n, entry.m, Parity(entry.parity)), entry.text, rendered,
                "match" if printed == element else "mismatch",
                "texto idéntico" if text_match else "texto distinto, mismo polinomio" if printed == element else None,
            )
        )

    def _table_zu(self, entry: ReferenceEntry, phase: LegendrePhase) -> None:
        parity = Parity(entry.parity)
        printed = entry.polynomial()
        stripped = printed.homogeneous_part(entry.n)
        stray = printed - stripped
        notes = []
        ratio = None
        for family in (Family.Z, Family.ZU):
            candidate = self.element(family, entry.n, entry.m, parity, phase)
            ratio = proportionality(stripped, candidate)
            if ratio is not None:
                notes.append(f"= {format_rational(ratio)}·{family.value}")
                rendered = render_text(candidate)
                break
        else:
            rendered = render_text(self.element(Family.Z, entry.n, entry.m, parity, phase))
        if not stray.is_zero:
            notes.append(f"constante eliminada: {render_text(stray)}")
        self.entries.append(
            _entry(
                f"table{entry.table}_Zu", _idx(entry.n, entry.m, parity), entry.text, rendered,
                "match" if ratio is not None else "mismatch", "; ".join(notes) or None,
            )
        )
        if not stray.is_zero and entry.m >= 1:
            constant = next(c for _, coeffs in stray.terms() for c in coeffs if c)
            alpha = alpha_closed_form(entry.n, entry.m)
            self.entries.append(
                _entry(
                    f"table{entry.table}_stray_constant", _idx(entry.n, entry.m, parity),
                    format_rational(constant), format_rational(alpha),
                    "match" if constant == alpha else "mismatch", "constante impresa comparada con αₙ,ₘ",
                )
            )

    # --- Ortogonalidad entre grados ----------------------------------------------

    def _cross_degree(self) -> None:
        for n in range(0, self.max_n + 1):
            for n2 in range(n + 1, self.max_n + 1):
                found = None
                for a in enumerate_basis(n):
                    for b in enumerate_basis(n2):
                        value = inner_product(basis_element(a, self.phase), basis_element(b, self.phase))
                        if value:
                            found = (a, b, value)
                            break
                    if found:
                        break
                if found is None:
                    self.entries.append(_entry("cross_degree_orthogonality", f"n={n},n'={n2}", "0", "0", "match"))
                else:
                    a, b, value = found
                    self.entries.append(
                        _entry(
                            "cross_degree_orthogonality", f"n={n},n'={n2}", "0", str(value), "mismatch",
                            f"⟨{a.key}, {b.key}⟩",
                        )
                    )

    # --- Recurrencias y afirmaciones ------------------------------------------------

    def _recurrences(self) -> None:
        for phase in (LegendrePhase.CONDON_SHORTLEY, LegendrePhase.HOBSON):
            results = check_legendre_recurrences(self.max_n, phase)
            for name in ("rec1", "rec2", "rec3", "rec4a", "rec4b"):
                subset = [r for r in results if r.name == name]
                failed = [r for r in subset if not r.holds]
                note = None if not failed else f"primer fallo n={failed[0].n}, m={failed[0].m}; {len(failed)}/{len(subset)} fallan"
                self.entries.append(
                    _entry(
                        f"legendre_{name}", f"n≤{self.max_n},{phase.value}", "identidad",
                        "se cumple" if not failed else "no se cumple",
                        "mismatch" if failed else "match", note,
                    )
                )

    def _claims(self) -> None:
        # antimonogénica ⟹ inframonogénica: contraejemplo conj(X⁺₂,₀)
        sample = monogenic_x(2, 0, Parity.PLUS).conjugate()
        flags = classify(sample)
        image = sandwich(False, sample)
        self.entries.append(
            _entry(
                "antimonogenic_implies_inframonogenic", "conj(X(2,0,+))", "0", render_text(image),
                "match" if flags.inframonogenic or not flags.antimonogenic else "mismatch",
                "antimonogénica pero no inframonogénica" if flags.antimonogenic and not flags.inframonogenic else None,
            )
        )
        holds = all(
            monogenic_left_right_equivalence(self.element(Family.X, n, m, parity))
            for n in range(0, self.max_n + 1)
            for m, parity in _parities(n, Family.X)
        )
        self.entries.append(
            _entry(
                "monogenic_left_right_equivalence", f"X, n≤{self.max_n}", "−e3(∂̄f)e3 = conj(f∂̄)",
                "se cumple" if holds else "no se cumple", "match" if holds else "mismatch",
            )
        )


def verify_reference_formulas(max_n: int, phase: Optional[LegendrePhase | str] = None) -> DiscrepancyReport:
    """Genera el reporte de discrepancias hasta el grado `max_n`."""
    return ReportBuilder(max_n, phase).build()


def render_report(report: DiscrepancyReport) -> str:
    """Versión de texto del reporte, una línea por entrada."""
    lines = [f"{settings.APP_NAME}: reporte hasta grado {report.max_degree} (fase {report.phase})"]
    counts = report.counts()
    lines.append(", ".join(f"{status}={counts[status]}" for status in sorted(counts)))
    for entry in report.entries:
        line = (
            f"[{entry.status}] {entry.formula_name}({entry.indices}): "
            f"referencia={entry.reference_value} calculado={entry.computed_value}"
        )
        if entry.note:
            line += f"  # {entry.note}"
        lines.append(line)
    return "\n".join(lines)


def compare_tables(degree: int) -> List[DiscrepancyEntry]:
    """Solo las comparaciones con las tablas impresas para un grado."""
    builder = ReportBuilder(max(degree, 2))
    builder._tables(degree)
    return builder.entries
