"""
Ternary Forms
Polynomials in x, y, z over a FieldDescriptor, with sympy text I/O
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple

import sympy as sp

from src.fields import FieldDescriptor, FieldKind, Scalar
from src.geometry import Point2, linalg
from src.utils.exceptions import ParseError, ZeroForm

X, Y, Z = sp.symbols('x y z')

Monomial = Tuple[int, int, int]


def _from_sympy(coeff, field: FieldDescriptor) -> Scalar:
    rational = sp.Rational(coeff)
    return field.element(Fraction(int(rational.p), int(rational.q)))


def _to_sympy(value: Scalar):
    if value.field.is_extension:
        a, b = value.components
        return _to_sympy(a) + _to_sympy(b) * sp.sqrt(_to_sympy(value.field.base.element(value.field.d)))
    if value.field.kind is FieldKind.RATIONALS:
        return sp.Rational(value.value.numerator, value.value.denominator)
    return sp.Integer(value.value)


@dataclass(frozen=True, eq=False)
class TernaryForm:
    """Sparse polynomial in x, y, z; zero coefficients are never stored"""

    field: FieldDescriptor
    terms: Tuple[Tuple[Monomial, Scalar], ...]

    def __post_init__(self):
        merged: Dict[Monomial, Scalar] = {}
        for mono, coeff in self.terms:
            merged[mono] = merged[mono] + coeff if mono in merged else coeff
        kept = tuple(sorted(((m, c) for m, c in merged.items() if not c.is_zero()), reverse=True))
        object.__setattr__(self, 'terms', kept)

    @classmethod
    def from_dict(cls, field: FieldDescriptor, coeffs: Mapping[Monomial, object]) -> "TernaryForm":
        return cls(field, tuple((tuple(m), field.element(c)) for m, c in coeffs.items()))

    @classmethod
    def parse(cls, text: str, field: FieldDescriptor = None) -> "TernaryForm":
        """
        Parse a polynomial such as "y**2 - x*z" or "y^2 - x*z"

        Args:
            text: Polynomial in x, y, z with rational coefficients
            field: Coefficient field, rationals by default
        """
        field = field or FieldDescriptor.rationals()
        try:
            expr = sp.sympify(text.replace('^', '**'), locals={'x': X, 'y': Y, 'z': Z})
            poly = sp.Poly(expr, X, Y, Z)
            terms = tuple((m, _from_sympy(c, field)) for m, c in poly.as_dict().items())
        except (sp.SympifyError, sp.PolynomialError, TypeError, ValueError) as e:
            raise ParseError(f"Not a polynomial in x, y, z: '{text}' ({e})")
        return cls(field, terms)

    def as_dict(self) -> Dict[Monomial, Scalar]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def evaluate(self, p: Point2) -> Scalar:
        F = p.field
        x, y, z = p.coords
        total = F.zero()
        for (a, b, c), coeff in self.terms:
            total = total + coeff.lift(F) * x ** a * y ** b * z ** c
        return total

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term"""
        if not self.terms:
            raise ZeroForm("The zero form has no monomial content")
        return tuple(min(m[i] for m, _ in self.terms) for i in range(3))

    def divide_monomial(self, mono: Monomial) -> "TernaryForm":
        return TernaryForm(self.field, tuple((tuple(e - d for e, d in zip(m, mono)), c)
                                             for m, c in self.terms))

    def proportional(self, other: "TernaryForm") -> bool:
        """Same form up to a nonzero scalar"""
        monos = sorted(set(self.as_dict()) | set(other.as_dict()))
        mine, theirs = self.as_dict(), other.as_dict()
        u = [mine.get(m, self.field.zero()) for m in monos]
        v = [theirs.get(m, other.field.zero()) for m in monos]
        return bool(monos) and linalg.proportional(u, v)

    def to_sympy(self):
        return sum((_to_sympy(c) * X ** a * Y ** b * Z ** e for (a, b, e), c in self.terms), sp.Integer(0))

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, tuple((m, c.value) for m, c in self.terms)))

    def __str__(self) -> str:
        return str(sp.expand(self.to_sympy()))

    def __repr__(self) -> str:
        return f"TernaryForm({self})"
