"""Interfaz de línea de comandos (argparse)."""

from .commands import build_parser, config_from_args, dispatch

__all__ = ["build_parser", "config_from_args", "dispatch"]
