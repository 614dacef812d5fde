"""Polinomios con valores en cuaterniones y coeficientes racionales exactos.

Sustrato algebraico del servicio: cada componente escalar es un elemento del
anillo `QQ[x0, x1, x2]` de sympy (forma canónica mantenida por el propio
anillo: sin coeficientes cero y fracciones reducidas), y un `QPolynomial`
agrupa las cuatro componentes de las unidades e0..e3.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

POLY_RING, X0, X1, X2 = ring("x0,x1,x2", QQ)
GENERATORS: Tuple[PolyElement, PolyElement, PolyElement] = (X0, X1, X2)

# Tipo de los elementos de QQ: PythonMPQ o gmpy2.mpq según el entorno
Rational = QQ.dtype
Monomial = Tuple[int, int, int]
Quaternion = Tuple[Rational, Rational, Rational, Rational]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

# e_i * e_j = sign * e_k, indexado por (i, j)
_UNIT_PRODUCT: Dict[Tuple[int, int], Tuple[int, int]] = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}  # fmt: skip


def parse_rational(text: str) -> Rational:
    """Convierte "p" o "p/q" en un racional exacto.

    Raises:
        ValueError: Si el texto no es un racional o el denominador es cero.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"Racional inválido: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Denominador cero en {text!r}")
    return QQ(numerator, denominator)


def to_rational(value: Any) -> Rational:
    """Normaliza int, str, Fraction o racional de sympy a un elemento de QQ."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def format_rational(value: Rational) -> str:
    """Forma canónica "p" o "p/q" con q > 0."""
    numerator = int(QQ.numer(value))
    denominator = int(QQ.denom(value))
    return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"


def monomial_poly(exponents: Monomial, coefficient: Any = 1) -> PolyElement:
    """Polinomio escalar c·x0^a·x1^b·x2^c."""
    if any(e < 0 for e in exponents):
        raise ValueError(f"Exponentes negativos no permitidos: {exponents}")
    return POLY_RING.from_dict({tuple(exponents): to_rational(coefficient)})


def scalar_degree(p: PolyElement) -> Optional[int]:
    """Grado total; None para el polinomio cero."""
    if not p:
        return None
    return max(sum(monom) for monom in p.keys())


def eval_scalar(p: PolyElement, point: Sequence[Rational]) -> Rational:
    a, b, c = (to_rational(v) for v in point)
    total = QQ.zero
    for (i, j, k), coeff in p.items():
        total += coeff * a**i * b**j * c**k
    return total


def quaternion_product(p: Quaternion, q: Quaternion) -> Quaternion:
    """Producto de cuaterniones con coeficientes racionales."""
    out = [QQ.zero] * 4
    for i in range(4):
        for j in range(4):
            sign, k = _UNIT_PRODUCT[(i, j)]
            out[k] += sign * p[i] * q[j]
    return tuple(out)  # type: ignore[return-value]


@dataclass(frozen=True)
class QPolynomial:
    """Polinomio f = f0 e0 + f1 e1 + f2 e2 + f3 e3 en x0, x1, x2.

    La componente e3 siempre se almacena, aunque sea cero, para que la
    preservación de R³ del operador sándwich sea verificable.
    """

    components: Tuple[PolyElement, PolyElement, PolyElement, PolyElement]

    # --- Constructores -------------------------------------------------

    @classmethod
    def from_components(cls, *parts: Any) -> "QPolynomial":
        padded = list(parts) + [0] * (4 - len(parts))
        if len(padded) != 4:
            raise ValueError("Un QPolynomial tiene exactamente cuatro componentes")
        return cls(tuple(POLY_RING(p) if not isinstance(p, PolyElement) else p for p in padded))

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls.from_components()

    @classmethod
    def constant(cls, value: Any) -> "QPolynomial":
        return cls.from_components(POLY_RING(to_rational(value)))

    @classmethod
    def unit(cls, k: int) -> "QPolynomial":
        parts = [POLY_RING.zero] * 4
        parts[k] = POLY_RING.one
        return cls(tuple(parts))  # type: ignore[arg-type]

    @classmethod
    def variable(cls, axis: int) -> "QPolynomial":
        return cls.from_components(GENERATORS[axis])

    @classmethod
    def scalar(cls, p: PolyElement) -> "QPolynomial":
        return cls.from_components(p)

    @classmethod
    def from_terms(cls, terms: Dict[Monomial, Sequence[Any]]) -> "QPolynomial":
        """Construye desde {exponentes: (q0, q1, q2, q3)}."""
        parts = [dict() for _ in range(4)]
        for exponents, coeffs in terms.items():
            if any(e < 0 for e in exponents):
                raise ValueError(f"Exponentes negativos no permitidos: {exponents}")
            for k, value in enumerate(coeffs):
                q = to_rational(value)
                if q:
                    parts[k][tuple(exponents)] = parts[k].get(tuple(exponents), QQ.zero) + q
        return cls(tuple(POLY_RING.from_dict(part) for part in parts))  # type: ignore[arg-type]

    # --- Aritmética ----------------------------------------------------

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        return QPolynomial(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return QPolynomial(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-a for a in self.components))

    def __mul__(self, other: Any) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return qp_mul(self, other)
        if isinstance(other, PolyElement):
            return QPolynomial(tuple(a * other for a in self.components))
        factor = to_rational(other)
        return QPolynomial(tuple(a * factor for a in self.components))

    def __rmul__(self, other: Any) -> "QPolynomial":
        if isinstance(other, PolyElement):
            return QPolynomial(tuple(other * a for a in self.components))
        return self.__mul__(other)

    def conjugate(self) -> "QPolynomial":
        return qp_conjugate(self)

    def partial(self, axis: int) -> "QPolynomial":
        return qp_partial(self, axis)

    def evaluate(self, point: Sequence[Any]) -> Quaternion:
        return qp_eval(self, point)

    # --- Predicados y consultas ----------------------------------------

    def __bool__(self) -> bool:
        return any(bool(a) for a in self.components)

    @property
    def is_zero(self) -> bool:
        return not self

    @property
    def is_reduced(self) -> bool:
        return not self.components[3]

    @property
    def degree(self) -> Optional[int]:
        degrees = [d for d in (scalar_degree(a) for a in self.components) if d is not None]
        return max(degrees) if degrees else None

    def is_homogeneous(self, n: int) -> bool:
        return all(sum(monom) == n for part in self.components for monom in part.keys())

    def homogeneous_part(self, n: int) -> "QPolynomial":
        return QPolynomial(
            tuple(
                POLY_RING.from_dict({m: c for m, c in part.items() if sum(m) == n})
                for part in self.components
            )
        )

    def degrees(self) -> list[int]:
        """Grados totales presentes, ascendentes."""
        return sorted({sum(m) for part in self.components for m in part.keys()})

    def component(self, k: int) -> PolyElement:
        return self.components[k]

    @property
    def scalar_part(self) -> "QPolynomial":
        return QPolynomial.from_components(self.components[0])

    @property
    def vector_part(self) -> "QPolynomial":
        return QPolynomial((POLY_RING.zero,) + self.components[1:])

    def terms(self) -> Iterator[Tuple[Monomial, Quaternion]]:
        """Términos (exponentes, (q0, q1, q2, q3)) en orden lexicográfico ascendente."""
        monomials = sorted({m for part in self.components for m in part.keys()})
        for monom in monomials:
            yield monom, tuple(part.get(monom, QQ.zero) for part in self.components)

    def coefficient_vector(self, monomials: Sequence[Monomial], units: Sequence[int]) -> list:
        """Coordenadas en la base {x^monom · e_unit}, unidad mayor."""
        return [self.components[k].get(tuple(m), QQ.zero) for k in units for m in monomials]

    def __repr__(self) -> str:
        from ..infrastructure.text_format import render_text

        return f"QPolynomial({render_text(self)})"


def qp_mul(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    """Producto cuaterniónico no conmutativo extendido a los coeficientes."""
    out = [POLY_RING.zero] * 4
    for i, fi in enumerate(f.components):
        if not fi:
            continue
        for j, gj in enumerate(g.components):
            if not gj:
                continue
            sign, k = _UNIT_PRODUCT[(i, j)]
            product = fi * gj
            out[k] = out[k] + product if sign > 0 else out[k] - product
    return QPolynomial(tuple(out))  # type: ignore[arg-type]


def qp_conjugate(f: QPolynomial) -> QPolynomial:
    f0, f1, f2, f3 = f.components
    return QPolynomial((f0, -f1, -f2, -f3))


def qp_partial(f: QPolynomial, axis: int) -> QPolynomial:
    if axis not in (0, 1, 2):
        raise ValueError(f"Eje inválido: {axis}")
    generator = GENERATORS[axis]
    return QPolynomial(tuple(part.diff(generator) for part in f.components))


def qp_eval(f: QPolynomial, point: Sequence[Any]) -> Quaternion:
    if len(point) != 3:
        raise ValueError("El punto de evaluación debe tener tres coordenadas")
    return tuple(eval_scalar(part, point) for part in f.components)  # type: ignore[return-value]


# Objetos de uso frecuente
E0 = QPolynomial.unit(0)
E1 = QPolynomial.unit(1)
E2 = QPolynomial.unit(2)
E3 = QPolynomial.unit(3)
RHO2 = X0**2 + X1**2 + X2**2  # |x|² como polinomio escalar
X_VAR = QPolynomial.from_components(X0, X1, X2)  # x = x0 + x1 e1 + x2 e2
X_BAR = X_VAR.conjugate()
