"""Subcomandos de la CLI.

Cada comando recibe un `CommandConfig` validado y devuelve el código de
salida; la salida va a `--out` si se indica, si no a stdout.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from ..config import settings
from ..domain.harmonics import biharmonic_dimension, harmonic_dimension
from ..domain.ids import BasisId, Family, Parity, order_range
from ..domain.pi_rational import PiRational
from ..infrastructure.codec import read_polynomial, serialize
from ..infrastructure.text_format import render_text
from ..schemas import CommandConfig
from ..services.basis import basis_element, enumerate_basis, gram, infr_dimension
from ..services.fourier import project, residual_norm2
from ..services.report import compare_tables, render_report, verify_reference_formulas
from ..services.verification import expected_dimension, format_summary, run_checks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2

COMMANDS = ("basis", "dim", "gram", "check", "project", "tables", "report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infra-basis",
        description="Base ortogonal exacta de polinomios inframonogénicos en la bola unitaria.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Logging en nivel DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--degree", type=int)
        cmd.add_argument("--max-degree", type=int, dest="max_degree")
        cmd.add_argument("--format", choices=["json", "text"], default="json")
        cmd.add_argument("--out")
        cmd.add_argument("--phase", choices=["hobson", "condon-shortley"])
        if name == "basis":
            cmd.add_argument("--family", choices=["X", "Y", "Zu", "Z"])
            cmd.add_argument("--parity", choices=["+", "-"])
            cmd.add_argument("--order", type=int)
            cmd.add_argument("--id")
        if name == "project":
            cmd.add_argument("input", help="Archivo JSON o en notación de tablas ('-' para stdin)")
    return parser


def config_from_args(args: argparse.Namespace) -> CommandConfig:
    """Valida los flags; un ValidationError (ValueError) termina con código 2."""
    return CommandConfig(
        command=args.command,
        degree=args.degree,
        max_degree=args.max_degree,
        family=getattr(args, "family", None),
        parity=getattr(args, "parity", None),
        order=getattr(args, "order", None),
        id=getattr(args, "id", None),
        format=args.format,
        out=args.out,
        phase=args.phase,
    )


def _emit(config: CommandConfig, text: str) -> None:
    if config.out:
        Path(config.out).write_text(text + "\n", encoding="utf-8")
        logger.info("Salida escrita en %s", config.out)
    else:
        sys.stdout.write(text + "\n")


def _dump(payload: object) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2)


def _max_degree(config: CommandConfig) -> int:
    if config.max_degree is not None:
        return config.max_degree
    return settings.DEFAULT_MAX_DEGREE


# --- basis -----------------------------------------------------------------------


def _selected_ids(config: CommandConfig) -> List[BasisId]:
    if config.id:
        bid = BasisId.parse(config.id)
        if config.degree is not None and bid.n != config.degree:
            raise ValueError(f"El id {bid.key} no es de grado {config.degree}")
        return [bid]
    if config.degree is None:
        raise ValueError("basis requiere --degree o --id")
    n = config.degree
    if config.family == "Zu":
        ids = [
            BasisId(n=n, family=Family.ZU, parity=parity, m=m)
            for m in range(0, n + 1)
            for parity in (Parity.PLUS, Parity.MINUS)
            if m in order_range(n, Family.ZU, parity)
        ]
    else:
        ids = enumerate_basis(n)
        if config.family:
            ids = [bid for bid in ids if bid.family.value == config.family]
    if config.parity:
        ids = [bid for bid in ids if bid.parity.value == config.parity]
    if config.order is not None:
        ids = [bid for bid in ids if bid.m == config.order]
    return ids


def cmd_basis(config: CommandConfig) -> int:
    ids = _selected_ids(config)
    elements = [(bid, basis_element(bid, config.phase)) for bid in ids]
    if config.format == "text":
        _emit(config, "\n".join(f"{bid.key}: {render_text(f)}" for bid, f in elements))
    else:
        _emit(config, _dump({bid.key: serialize(f) for bid, f in elements}))
    return EXIT_OK


# --- dim ---------------------------------------------------------------------------


def cmd_dim(config: CommandConfig) -> int:
    rows = [
        {
            "n": n,
            "infr": infr_dimension(n),
            "expected": expected_dimension(n),
            "harmonic": harmonic_dimension(n),
            "biharmonic": biharmonic_dimension(n),
        }
        for n in range(_max_degree(config) + 1)
    ]
    if config.format == "text":
        lines = [f"dims: {','.join(str(r['infr']) for r in rows)}"]
        lines += [
            f"n={r['n']}: infr={r['infr']} (6n+3={r['expected']}) armónicos={r['harmonic']} "
            f"biarmónicos={r['biharmonic']}"
            for r in rows
        ]
        _emit(config, "\n".join(lines))
    else:
        _emit(config, _dump(rows))
    return EXIT_OK


# --- gram ---------------------------------------------------------------------------


def cmd_gram(config: CommandConfig) -> int:
    if config.degree is not None:
        ids = enumerate_basis(config.degree)
    else:
        ids = [bid for n in range(_max_degree(config) + 1) for bid in enumerate_basis(n)]
    matrix = gram(ids, config.phase)
    if config.format == "text":
        lines = [f"{bid.key}: ‖·‖² = {value}" for bid, value in zip(matrix.ids, matrix.diagonal)]
        off = matrix.off_diagonal_nonzero()
        lines.append("diagonal" if not off else f"{len(off)} entradas fuera de la diagonal no nulas")
        lines += [f"⟨{a.key}, {b.key}⟩ = {value}" for a, b, value in off]
        _emit(config, "\n".join(lines))
    else:
        _emit(config, _dump(matrix.to_json()))
    return EXIT_OK


# --- check --------------------------------------------------------------------------


def cmd_check(config: CommandConfig) -> int:
    summary = run_checks(_max_degree(config), config.phase)
    if config.format == "json" and config.out:
        _emit(config, summary.model_dump_json(indent=2))
    sys.stdout.write(format_summary(summary) + "\n")
    return EXIT_OK if summary.passed else EXIT_VERIFICATION


# --- project ------------------------------------------------------------------------


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ValueError(f"No se pudo leer {path}: {e}") from e


def cmd_project(config: CommandConfig, input_path: str) -> int:
    f = read_polynomial(_read_input(input_path))
    max_degree = config.max_degree
    if max_degree is None:
        max_degree = f.degree if f.degree is not None else 0
    expansion = project(f, max_degree, config.phase)
    residual: PiRational = residual_norm2(f, expansion)
    document = expansion.to_document()

    if config.out:
        _emit(config, document.model_dump_json(indent=2))
        sys.stdout.write(f"residual: {residual}\n")
    elif config.format == "text":
        lines = [f"{key}: {value}" for key, value in document.coefficients.items()]
        lines.append(f"residual: {residual}")
        _emit(config, "\n".join(lines))
    else:
        _emit(config, _dump({"expansion": document.model_dump(), "residual": residual.to_json()}))
    return EXIT_OK


# --- tables -------------------------------------------------------------------------


def cmd_tables(config: CommandConfig) -> int:
    if config.degree is None:
        raise ValueError("tables requiere --degree")
    entries = compare_tables(config.degree)
    if config.format == "text":
        lines = []
        for entry in entries:
            lines.append(f"[{entry.status}] {entry.formula_name}({entry.indices})")
            lines.append(f"  tabla:     {entry.reference_value}")
            lines.append(f"  calculado: {entry.computed_value}")
            if entry.note:
                lines.append(f"  nota:      {entry.note}")
        _emit(config, "\n".join(lines) if lines else f"Sin tablas para grado {config.degree}")
    else:
        _emit(config, _dump([entry.model_dump() for entry in entries]))
    return EXIT_OK


# --- report -------------------------------------------------------------------------


def cmd_report(config: CommandConfig) -> int:
    report = verify_reference_formulas(_max_degree(config), config.phase)
    directory = Path(config.out or settings.REPORT_DIR)
    directory.mkdir(parents=True, exist_ok=True)
    text = render_report(report)
    (directory / "report.json").write_text(
        _dump([entry.model_dump() for entry in report.entries]) + "\n", encoding="utf-8"
    )
    (directory / "report.txt").write_text(text + "\n", encoding="utf-8")
    counts = report.counts()
    sys.stdout.write(
        f"reporte en {directory}: "
        + ", ".join(f"{status}={counts[status]}" for status in sorted(counts))
        + "\n"
    )
    if config.format == "text":
        sys.stdout.write(text + "\n")
    return EXIT_OK


HANDLERS: Dict[str, Callable[[CommandConfig], int]] = {
    "basis": cmd_basis,
    "dim": cmd_dim,
    "gram": cmd_gram,
    "check": cmd_check,
    "tables": cmd_tables,
    "report": cmd_report,
}


def dispatch(config: CommandConfig, input_path: Optional[str] = None) -> int:
    if config.command == "project":
        return cmd_project(config, input_path or "-")
    return HANDLERS[config.command](config)
