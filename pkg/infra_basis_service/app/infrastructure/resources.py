"""Archivos empaquetados con la aplicación (gramática y tablas de referencia)."""

from functools import lru_cache
from pathlib import Path

PACKAGE_ROOT = Path(__file__).parents[1]


def resource_path(*parts: str) -> Path:
    return PACKAGE_ROOT.joinpath(*parts)


@lru_cache(maxsize=None)
def read_resource(*parts: str) -> str:
    """Contenido de `app/<parts...>`, leído una sola vez por proceso.

    Raises:
        FileNotFoundError: Si el recurso no está en el paquete.
    """
    path = resource_path(*parts)
    if not path.is_file():
        raise FileNotFoundError(f"Recurso no encontrado: {path}")
    return path.read_text(encoding="utf-8")
