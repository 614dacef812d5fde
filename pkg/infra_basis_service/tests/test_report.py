"""Pruebas del reporte de discrepancias."""

import pytest
from sympy.polys.domains import QQ

from app.domain.pi_rational import PiRational
from app.services.report import (
    compare_tables,
    norm_x_formula,
    norm_y_formula,
    norm_zu_formula,
    render_report,
    verify_reference_formulas,
)


@pytest.fixture(scope="module")
def report():
    return verify_reference_formulas(4)


def _find(report, name, indices):
    matches = [e for e in report.entries if e.formula_name == name and e.indices == indices]
    assert matches, f"sin entrada {name}({indices})"
    return matches[0]


def test_closed_forms():
    assert norm_x_formula(1, 0) == PiRational(QQ(8, 5))
    assert norm_y_formula(2, 0) == PiRational(QQ(8112, 35))
    assert norm_zu_formula(2, 0) == PiRational(QQ(24, 35))


def test_norm_x10_matches(report):
    entry = _find(report, "norm_X", "n=1,m=0,+")
    assert entry.status == "match"
    assert entry.computed_value == "8π/5"


def test_norm_zu20_matches(report):
    entry = _find(report, "norm_Zu", "n=2,m=0,+")
    assert entry.status == "match"
    assert entry.computed_value == "24π/35"


def test_norm_y20_mismatch(report):
    """Ambos valores quedan registrados."""
    entry = _find(report, "norm_Y", "n=2,m=0,+")
    assert entry.status == "mismatch"
    assert entry.reference_value == "8112π/35"
    assert entry.computed_value == "544π/21"


def test_out_of_range_and_unparseable(report):
    assert _find(report, "inner_X_Y_diagonal", "n=2,m=2").status == "out_of_range"
    beta = _find(report, "beta", "n=2,m=1")
    assert beta.status == "unparseable"
    assert beta.reference_value == "unparseable"


def test_alpha_entries(report):
    entry = _find(report, "alpha", "n=2,m=1")
    assert entry.status == "match"
    assert entry.computed_value == "2/15"


def test_table_entries(report):
    assert _find(report, "table1_Y", "n=2,m=0,+").status == "match"
    assert _find(report, "table1_Zu", "n=2,m=0,+").status == "match"
    stray = _find(report, "table1_stray_constant", "n=2,m=1,+")
    assert stray.reference_value == stray.computed_value == "2/15"
    assert stray.status == "match"


def test_cross_degree_entries(report):
    assert _find(report, "cross_degree_orthogonality", "n=0,n'=1").status == "match"
    assert _find(report, "cross_degree_orthogonality", "n=0,n'=2").status == "mismatch"


def test_recurrence_entries(report):
    assert _find(report, "legendre_rec3", "n≤4,hobson").status == "match"
    assert _find(report, "legendre_rec2", "n≤4,hobson").status == "mismatch"
    assert _find(report, "legendre_rec2", "n≤4,condon-shortley").status == "match"


def test_claim_entries(report):
    assert _find(report, "antimonogenic_implies_inframonogenic", "conj(X(2,0,+))").status == "mismatch"
    assert _find(report, "monogenic_left_right_equivalence", "X, n≤4").status == "match"


def test_appell_entries_all_match(report):
    appell = [e for e in report.entries if e.formula_name == "appell"]
    assert appell and all(e.status == "match" for e in appell)


def test_counts_and_rendering(report):
    counts = report.counts()
    assert sum(counts.values()) == len(report.entries)
    text = render_report(report)
    assert "[mismatch] norm_Y(n=2,m=0,+): referencia=8112π/35 calculado=544π/21" in text


def test_report_requires_degree_two():
    with pytest.raises(ValueError):
        verify_reference_formulas(1)


def test_compare_tables_single_degree():
    entries = compare_tables(2)
    assert entries
    assert all("n=2" in e.indices for e in entries)


def _table_status(entries, indices):
    return next(e.status for e in entries if e.formula_name == "table1_Y" and e.indices == indices)


def test_table_phase_setting_drives_comparison(monkeypatch):
    """Con TABLE_PHASE=hobson el signo de orden impar deja de coincidir."""
    from app.config import settings

    entries = compare_tables(2)
    assert _table_status(entries, "n=2,m=1,+") == "match"

    monkeypatch.setattr(settings, "TABLE_PHASE", "hobson")
    entries = compare_tables(2)
    assert _table_status(entries, "n=2,m=1,+") == "mismatch"
    assert _table_status(entries, "n=2,m=0,+") == "match"


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
