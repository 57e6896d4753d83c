"""
Field Descriptor Module
Rationals, prime fields and one quadratic extension layer
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Any, List, Optional, Tuple

from sympy import primerange
from sympy.ntheory.residue_ntheory import is_quad_residue, sqrt_mod

from src.utils.exceptions import DivisionByZero, FieldMismatch, InvalidField


# Deterministic Miller-Rabin witnesses, sufficient for n < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PRIME_LIMIT = 1 << 64
_TRIAL_PRIMES: List[int] = list(primerange(2, 10_000))


def is_prime(n: int) -> bool:
    """
    Deterministic primality test for n < 2^64

    Args:
        n: Integer to test

    Returns:
        True if n is prime
    """
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    s, m = 0, n - 1
    while m % 2 == 0:
        s += 1
        m //= 2
    for a in _MR_BASES:
        x = pow(a, m, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """
    Write n = s * k^2 with s carrying the sign of n

    Primes below 10^4 are divided out; a remaining cofactor that is not a
    perfect square is kept whole in s.

    Args:
        n: Nonzero integer

    Returns:
        (s, k) with k > 0
    """
    sign = -1 if n < 0 else 1
    r = abs(n)
    s, k = 1, 1
    for q in _TRIAL_PRIMES:
        if q * q > r:
            break
        if r % q:
            continue
        e = 0
        while r % q == 0:
            r //= q
            e += 1
        k *= q ** (e // 2)
        if e % 2:
            s *= q
    root = isqrt(r)
    if root * root == r:
        k *= root
    else:
        s *= r
    return sign * s, k


class FieldKind(Enum):
    RATIONALS = "rational"
    PRIME = "prime"
    QUADRATIC = "quadratic"


@dataclass(frozen=True)
class FieldDescriptor:
    """
    An exact field: Q, F_p, or base(sqrt(d)) over one of those

    Raw values are Fraction (Q), int in [0, p) (F_p) and pairs (a, b) of base
    raw values meaning a + b*sqrt(d). The raw_* methods implement arithmetic on
    those representations; Scalar wraps them.
    """

    kind: FieldKind
    p: Optional[int] = None
    base: Optional["FieldDescriptor"] = None
    d: Any = None

    # construction

    @classmethod
    def rationals(cls) -> "FieldDescriptor":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldDescriptor":
        p = int(p)
        if p <= 3 or p >= _PRIME_LIMIT:
            raise InvalidField(f"Prime field characteristic must satisfy 3 < p < 2^64, got {p}")
        if not is_prime(p):
            raise InvalidField(f"{p} is not prime")
        return cls(FieldKind.PRIME, p=p)

    @classmethod
    def quadratic(cls, base: "FieldDescriptor", d: Any) -> "FieldDescriptor":
        """
        Adjoin sqrt(d) to base

        Over F_p all non-squares give the same field, which is returned as
        F_p(sqrt(n)) for the smallest non-residue n. Values written over
        sqrt(d) must be rescaled with sqrt(d) = t*sqrt(n) (see scalar.sqrt).

        Args:
            base: Rationals or a prime field
            d: Non-square of base (any value base.element accepts); over the
               rationals it must be a squarefree integer other than 1
        """
        if base.kind is FieldKind.QUADRATIC:
            raise InvalidField("Quadratic extensions of quadratic extensions are not supported")
        raw = base.coerce_raw(d)
        if base.kind is FieldKind.RATIONALS:
            if raw.denominator != 1 or squarefree_decompose(raw.numerator) != (raw.numerator, 1) \
                    or raw.numerator == 1 or raw.numerator == 0:
                raise InvalidField(f"Rational discriminant must be a squarefree integer, got {raw}")
        if base.raw_is_zero(raw) or base.raw_sqrt(raw) is not None:
            raise InvalidField(f"{raw} is a square in {base}")
        if base.kind is FieldKind.PRIME:
            raw = canonical_non_residue(base.p)
        return cls(FieldKind.QUADRATIC, base=base, d=raw)

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        if self.kind is FieldKind.PRIME:
            return f"F_{self.p}"
        return f"{self.base}(sqrt({self.d}))"

    @property
    def is_extension(self) -> bool:
        return self.kind is FieldKind.QUADRATIC

    @property
    def ground(self) -> "FieldDescriptor":
        """The non-extension field underneath"""
        return self.base if self.is_extension else self

    @property
    def characteristic(self) -> int:
        return self.ground.p or 0

    def tag(self) -> bytes:
        if self.kind is FieldKind.RATIONALS:
            return b"Q"
        if self.kind is FieldKind.PRIME:
            return b"F" + str(self.p).encode()
        return b"E(" + self.base.tag() + b"," + self.base.raw_key(self.d) + b")"

    # elements

    def element(self, value: Any):
        """Coerce an int, Fraction, numeric string, pair or Scalar into this field"""
        from .scalar import Scalar
        return Scalar.of(self, value)

    def zero(self):
        from .scalar import Scalar
        return Scalar(self, self.raw_zero())

    def one(self):
        from .scalar import Scalar
        return Scalar(self, self.raw_one())

    def embed(self, scalar):
        """Embed a scalar of this field's base (or of this field) into this field"""
        return scalar.lift(self)

    def random_element(self, rng, height: int = 10_000):
        """
        Draw an element with a SplitMix64-style generator

        Args:
            rng: Object with randint(low, high) and randbelow(n)
            height: Numerator bound for rationals

        Returns:
            Scalar in this field; rationals have denominator 1
        """
        from .scalar import Scalar
        if self.kind is FieldKind.RATIONALS:
            return Scalar(self, Fraction(rng.randint(-height, height)))
        if self.kind is FieldKind.PRIME:
            return Scalar(self, rng.randbelow(self.p))
        a = self.base.random_element(rng, height).value
        b = self.base.random_element(rng, height).value
        return Scalar(self, (a, b))

    # coercion

    def coerce_raw(self, value: Any) -> Any:
        """Convert an int, Fraction, numeric string or pair to a raw value"""
        if isinstance(value, bool):
            raise FieldMismatch(f"Cannot coerce bool into {self}")
        if self.kind is FieldKind.QUADRATIC:
            if isinstance(value, tuple):
                a, b = value
                return (self.base.coerce_raw(a), self.base.coerce_raw(b))
            return (self.base.coerce_raw(value), self.base.raw_zero())
        if isinstance(value, tuple):
            raise FieldMismatch(f"Pairs only coerce into quadratic extensions, not {self}")
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind is FieldKind.RATIONALS:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise FieldMismatch(f"Cannot coerce {type(value).__name__} into {self}")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"Denominator {value.denominator} vanishes in {self}")
            return value.numerator * pow(den, -1, self.p) % self.p
        raise FieldMismatch(f"Cannot coerce {type(value).__name__} into {self}")

    # raw arithmetic

    def raw_zero(self) -> Any:
        if self.kind is FieldKind.RATIONALS:
            return Fraction(0)
        if self.kind is FieldKind.PRIME:
            return 0
        return (self.base.raw_zero(), self.base.raw_zero())

    def raw_one(self) -> Any:
        if self.kind is FieldKind.RATIONALS:
            return Fraction(1)
        if self.kind is FieldKind.PRIME:
            return 1
        return (self.base.raw_one(), self.base.raw_zero())

    def raw_is_zero(self, x: Any) -> bool:
        if self.kind is FieldKind.QUADRATIC:
            return self.base.raw_is_zero(x[0]) and self.base.raw_is_zero(x[1])
        return x == 0

    def raw_add(self, x: Any, y: Any) -> Any:
        if self.kind is FieldKind.RATIONALS:
            return x + y
        if self.kind is FieldKind.PRIME:
            return (x + y) % self.p
        B = self.base
        return (B.raw_add(x[0], y[0]), B.raw_add(x[1], y[1]))

    def raw_neg(self, x: Any) -> Any:
        if self.kind is FieldKind.RATIONALS:
            return -x
        if self.kind is FieldKind.PRIME:
            return (-x) % self.p
        return (self.base.raw_neg(x[0]), self.base.raw_neg(x[1]))

    def raw_sub(self, x: Any, y: Any) -> Any:
        return self.raw_add(x, self.raw_neg(y))

    def raw_mul(self, x: Any, y: Any) -> Any:
        if self.kind is FieldKind.RATIONALS:
            return x * y
        if self.kind is FieldKind.PRIME:
            return x * y % self.p
        B = self.base
        a, b = x
        c, e = y
        real = B.raw_add(B.raw_mul(a, c), B.raw_mul(self.d, B.raw_mul(b, e)))
        imag = B.raw_add(B.raw_mul(a, e), B.raw_mul(b, c))
        return (real, imag)

    def raw_norm(self, x: Any) -> Any:
        """a^2 - d*b^2 as a base raw value"""
        B = self.base
        a, b = x
        return B.raw_sub(B.raw_mul(a, a), B.raw_mul(self.d, B.raw_mul(b, b)))

    def raw_inv(self, x: Any) -> Any:
        if self.raw_is_zero(x):
            raise DivisionByZero(f"Inverse of zero in {self}")
        if self.kind is FieldKind.RATIONALS:
            return 1 / x
        if self.kind is FieldKind.PRIME:
            return pow(x, -1, self.p)
        B = self.base
        n_inv = B.raw_inv(self.raw_norm(x))
        return (B.raw_mul(x[0], n_inv), B.raw_neg(B.raw_mul(x[1], n_inv)))

    def raw_conjugate(self, x: Any) -> Any:
        if self.kind is FieldKind.QUADRATIC:
            return (x[0], self.base.raw_neg(x[1]))
        return x

    def raw_key(self, x: Any) -> bytes:
        if self.kind is FieldKind.RATIONALS:
            return f"{x.numerator}/{x.denominator}".encode()
        if self.kind is FieldKind.PRIME:
            return x.to_bytes((self.p.bit_length() + 7) // 8, 'big')
        return self.base.raw_key(x[0]) + b"|" + self.base.raw_key(x[1])

    # square roots

    def raw_sqrt(self, x: Any) -> Optional[Any]:
        """A square root of x inside this field, or None when x is a non-square"""
        if self.kind is FieldKind.RATIONALS:
            if x < 0:
                return None
            rn, rd = isqrt(x.numerator), isqrt(x.denominator)
            if rn * rn == x.numerator and rd * rd == x.denominator:
                return Fraction(rn, rd)
            return None
        if self.kind is FieldKind.PRIME:
            return _sqrt_mod_prime(x, self.p)
        return self._sqrt_in_extension(x)

    def _sqrt_in_extension(self, x: Any) -> Optional[Any]:
        B = self.base
        a, b = x
        if B.raw_is_zero(b):
            r = B.raw_sqrt(a)
            if r is not None:
                return (r, B.raw_zero())
            t = B.raw_sqrt(B.raw_mul(a, B.raw_inv(self.d)))
            if t is not None:
                return (B.raw_zero(), t)
            return None
        n = B.raw_sqrt(self.raw_norm(x))
        if n is None:
            return None
        half = B.raw_inv(B.coerce_raw(2))
        for s in (n, B.raw_neg(n)):
            u = B.raw_sqrt(B.raw_mul(B.raw_add(a, s), half))
            if u is not None and not B.raw_is_zero(u):
                v = B.raw_mul(b, B.raw_inv(B.raw_mul(B.coerce_raw(2), u)))
                return (u, v)
        return None


def _sqrt_mod_prime(x: int, p: int) -> Optional[int]:
    """The smaller of the two roots of x mod p, or None for a non-residue"""
    r = sqrt_mod(x % p, p)
    if r is None:
        return None
    return min(r, p - r)


@lru_cache(maxsize=None)
def canonical_non_residue(p: int) -> int:
    """Smallest quadratic non-residue mod p; every F_p(sqrt(d)) is written over it"""
    n = 2
    while is_quad_residue(n, p):
        n += 1
    return n
