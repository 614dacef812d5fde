"""Infra Basis Service.

Librería y CLI de aritmética exacta para la base ortogonal de polinomios
inframonogénicos con valores en cuaterniones reducidos sobre la bola unidad.

Arquitectura:
    - domain/: Álgebra pura (polinomios cuaterniónicos, operadores, armónicos)
    - services/: Construcción de la base, identidades, reporte y expansión
    - infrastructure/: Dependencias externas (Lark, JSON, tablas de referencia)
    - cli/: Comandos de línea de órdenes (argparse)
    - schemas.py: Documentos de entrada/salida (Pydantic)

Usage:
    python -m app.main check --max-degree 6
"""

__version__ = "1.0.0"
