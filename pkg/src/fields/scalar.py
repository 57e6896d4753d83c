"""
Scalar Module
Immutable exact field elements and the field-level operations on them
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple, Union

from src.utils.exceptions import ExtensionDepthExceeded, FieldMismatch

from .descriptor import FieldDescriptor, FieldKind, squarefree_decompose


@dataclass(frozen=True, eq=False)
class Scalar:
    """An element of a FieldDescriptor in canonical raw form"""

    field: FieldDescriptor
    value: Any

    @classmethod
    def of(cls, field: FieldDescriptor, value: Any) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != field:
                raise FieldMismatch(f"{value} lives in {value.field}, expected {field}")
            return value
        return cls(field, field.coerce_raw(value))

    def _coerce(self, other: Any) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"Cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Scalar(self.field, self.field.coerce_raw(other))
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field.raw_add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field.raw_sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field.raw_sub(other.value, self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self.field, self.field.raw_mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return Scalar(self.field, self.field.raw_neg(self.value))

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.raw_one()
        base = self.value
        while exponent:
            if exponent & 1:
                result = self.field.raw_mul(result, base)
            base = self.field.raw_mul(base, base)
            exponent >>= 1
        return Scalar(self.field, result)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.raw_inv(self.value))

    # comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.value == other.value

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, self.value))

    def is_zero(self) -> bool:
        return self.field.raw_is_zero(self.value)

    def is_one(self) -> bool:
        return self.value == self.field.raw_one()

    # structure

    @property
    def components(self) -> Tuple["Scalar", "Scalar"]:
        """(a, b) of a + b*sqrt(d) as base scalars; (self, 0) off an extension"""
        if self.field.is_extension:
            B = self.field.base
            return Scalar(B, self.value[0]), Scalar(B, self.value[1])
        return self, Scalar(self.field, self.field.raw_zero())

    def in_base(self) -> bool:
        """True when the element lies in the ground field"""
        return not self.field.is_extension or self.field.base.raw_is_zero(self.value[1])

    def lift(self, field: FieldDescriptor) -> "Scalar":
        """Embed into field (this field itself, or an extension of it)"""
        if field == self.field:
            return self
        if field.is_extension and field.base == self.field:
            return Scalar(field, (self.value, self.field.raw_zero()))
        raise FieldMismatch(f"{self.field} does not embed into {field}")

    def conjugate(self) -> "Scalar":
        return Scalar(self.field, self.field.raw_conjugate(self.value))

    def norm(self) -> "Scalar":
        """a^2 - d*b^2 in the base field; a^2 for base elements"""
        if self.field.is_extension:
            return Scalar(self.field.base, self.field.raw_norm(self.value))
        return self * self

    def key(self) -> bytes:
        return self.field.tag() + b":" + self.field.raw_key(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"

    def __str__(self) -> str:
        if not self.field.is_extension:
            return str(self.value)
        a, b = self.components
        return f"{a} + {b}*sqrt({self.field.d})"


def element(field: FieldDescriptor, value: Any) -> Scalar:
    """Coerce an int, Fraction, numeric string, pair or Scalar into field"""
    return Scalar.of(field, value)


def zero(field: FieldDescriptor) -> Scalar:
    return Scalar(field, field.raw_zero())


def one(field: FieldDescriptor) -> Scalar:
    return Scalar(field, field.raw_one())


def arith(op: str, a: Scalar, b: Optional[Scalar] = None) -> Union[Scalar, bool]:
    """
    Dispatch one field operation by name

    Args:
        op: One of add, sub, mul, div, neg, inv, eq
        a: First operand
        b: Second operand for binary operations

    Returns:
        The resulting Scalar, or a boolean for eq
    """
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f"Operation '{op}' needs two operands")
    if isinstance(b, Scalar) and b.field != a.field:
        raise FieldMismatch(f"Cannot combine elements of {a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"Unknown operation: {op}")


def _smaller(root: Scalar) -> Scalar:
    other = -root
    return root if root.key() <= other.key() else other


def sqrt(a: Scalar) -> Tuple[Scalar, FieldDescriptor]:
    """
    Square root of a, adjoining one quadratic layer when needed

    Args:
        a: Element of Q, F_p, or an extension layer

    Returns:
        (root, field) where field is a.field when a is a square there, and
        otherwise the quadratic extension the root lives in

    Raises:
        ExtensionDepthExceeded: a lives in an extension and has no root there
    """
    F = a.field
    raw = F.raw_sqrt(a.value)
    if raw is not None:
        root = Scalar(F, raw)
        return (_smaller(root) if F.is_extension else root), F
    if F.is_extension:
        raise ExtensionDepthExceeded(f"{a} has no square root in {F}")
    if F.kind is FieldKind.RATIONALS:
        x = a.value
        s, k = squarefree_decompose(x.numerator * x.denominator)
        E = FieldDescriptor.quadratic(F, s)
        return Scalar(E, (Fraction(0), Fraction(k, x.denominator))), E
    E = FieldDescriptor.quadratic(F, a.value)
    # a = n * t^2 with t in F_p, so sqrt(a) = t * sqrt(n)
    t = F.raw_sqrt(F.raw_mul(a.value, F.raw_inv(E.d)))
    return Scalar(E, (0, t)), E


def conjugate(a: Scalar) -> Scalar:
    return a.conjugate()


def norm(a: Scalar) -> Scalar:
    return a.norm()


def canonical_key(a: Scalar) -> bytes:
    return a.key()
