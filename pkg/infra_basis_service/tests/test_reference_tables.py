"""Pruebas de las tablas de referencia transcritas."""

import pytest

from app.domain.ids import LegendrePhase
from app.infrastructure.reference_tables import ReferenceTableLoader
from app.infrastructure.resources import read_resource
from app.services.basis import basis_element


def test_tables_load():
    tables = ReferenceTableLoader.load()
    assert tables.phase == "condon-shortley"
    assert len(tables.entries) == 36
    assert sum(e.family == "Y" for e in tables.entries) == 15
    assert {e.n for e in tables.entries} == {2, 3, 4}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_every_entry_parses(n):
    for entry in ReferenceTableLoader.load().for_degree(n):
        f = entry.polynomial()
        assert f.is_reduced
        assert f.degree == n


def test_degree_two_type_one_entries_match_construction():
    """Las entradas de tipo 1 de grado 2 coinciden exactamente en la fase de las tablas."""
    for entry in ReferenceTableLoader.load().for_degree(2):
        if entry.family == "Y":
            assert entry.polynomial() == basis_element(entry.basis_id, LegendrePhase.CONDON_SHORTLEY)


def test_zu20_entry_is_condon_shortley():
    entry = next(e for e in ReferenceTableLoader.load().for_degree(2) if e.family == "Zu" and e.m == 0)
    assert entry.polynomial() == basis_element(entry.basis_id, LegendrePhase.CONDON_SHORTLEY)


def test_missing_resource():
    with pytest.raises(FileNotFoundError):
        read_resource("data", "no_existe.json")


def test_grammar_is_packaged():
    assert "start: sum" in read_resource("grammar", "polynomial.lark")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
