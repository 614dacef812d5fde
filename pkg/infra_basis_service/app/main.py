"""Punto de entrada de la CLI.

Usage:
    infra-basis check --max-degree 6
    python -m app.main basis --degree 2 --family Y --format text

Códigos de salida: 0 éxito, 1 fallo de verificación, 2 uso, error de lectura o error
interno de construcción (este último se registra con su traza en el logger).
"""

from __future__ import annotations

import logging
import sys
from typing import Optional, Sequence

from .cli.commands import EXIT_USAGE, build_parser, config_from_args, dispatch
from .config import settings
from .infrastructure.lark_parser import PolynomialParseError
from .services.basis import BasisConstructionError

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse sale con 2 en errores de uso y con 0 en --help
        return EXIT_USAGE if e.code not in (0, None) else 0

    configure_logging(args.verbose)
    try:
        config = config_from_args(args)
        return dispatch(config, getattr(args, "input", None))
    except PolynomialParseError as e:
        sys.stderr.write(f"error de lectura: {e}\n")
        return EXIT_USAGE
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except BasisConstructionError as e:
        logger.exception("No se pudo construir un elemento de la base")
        sys.stderr.write(f"error de construcción: {e}\n")
        return EXIT_USAGE
    except RuntimeError as e:
        # no debe confundirse con el código 1 de "verificación fallida"
        logger.exception("Error interno durante %s", args.command)
        sys.stderr.write(f"error interno: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
