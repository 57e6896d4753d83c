"""
Projective Objects
Points, lines, conics and projectivities with equality up to scale
"""

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence, Tuple, Union

from src.fields import FieldDescriptor, Scalar
from src.utils.exceptions import DegenerateFrame, FieldMismatch, ZeroVector

from . import linalg


class Infinity:
    """The point at infinity of the affine chart on P^1"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()

AffineValue = Union[Scalar, Infinity]


def common_field(fields: Iterable[FieldDescriptor]) -> FieldDescriptor:
    """
    Smallest field containing all of fields

    Only a base field and one extension of it may meet.
    """
    result = None
    for f in fields:
        if result is None or result == f:
            result = f
        elif f.is_extension and f.base == result:
            result = f
        elif result.is_extension and result.base == f:
            continue
        else:
            raise FieldMismatch(f"{result} and {f} have no common field")
    if result is None:
        raise FieldMismatch("No fields given")
    return result


def _canonical(coords: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    """Scale so the first nonzero coordinate is 1"""
    fields = {c.field for c in coords}
    if len(fields) != 1:
        raise FieldMismatch(f"Coordinates from several fields: {sorted(map(str, fields))}")
    for c in coords:
        if not c.is_zero():
            inv = c.inverse()
            return tuple(x * inv for x in coords)
    raise ZeroVector("Homogeneous coordinates cannot all vanish")


@dataclass(frozen=True, eq=False)
class ProjectiveVector:
    """Nonzero coordinate vector up to scale, stored in canonical scale"""

    coords: Tuple[Scalar, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coords', _canonical(self.coords))

    @classmethod
    def of(cls, field: FieldDescriptor, *values):
        return cls(tuple(field.element(v) for v in values))

    @property
    def field(self) -> FieldDescriptor:
        return self.coords[0].field

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.field != self.field:
            try:
                F = common_field((self.field, other.field))
            except FieldMismatch:
                return False
            return self.lift(F) == other.lift(F)
        return linalg.proportional(self.coords, other.coords)

    def __hash__(self):
        # base-field values hash alike whether or not they were lifted
        return hash((type(self).__name__,
                     tuple(c.components[0].value if c.in_base() else c.value for c in self.coords)))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def key(self) -> bytes:
        return b",".join(c.key() for c in self.coords)

    def lift(self, field: FieldDescriptor):
        if field == self.field:
            return self
        return type(self)(tuple(c.lift(field) for c in self.coords))

    def __repr__(self) -> str:
        return f"{type(self).__name__}[{', '.join(str(c) for c in self.coords)}]"


class Point2(ProjectiveVector):
    """A point of P^2"""

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ValueError(f"Point2 needs 3 coordinates, got {len(self.coords)}")
        super().__post_init__()


class Line(ProjectiveVector):
    """A line of P^2 in dual coordinates"""

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ValueError(f"Line needs 3 coordinates, got {len(self.coords)}")
        super().__post_init__()

    def contains(self, p: Point2) -> bool:
        F = common_field((self.field, p.field))
        return linalg.dot(self.lift(F).coords, p.lift(F).coords).is_zero()


class Point1(ProjectiveVector):
    """A point of P^1; affine value coords[1] / coords[0]"""

    def __post_init__(self):
        if len(self.coords) != 2:
            raise ValueError(f"Point1 needs 2 coordinates, got {len(self.coords)}")
        super().__post_init__()

    @classmethod
    def from_affine(cls, field: FieldDescriptor, value) -> "Point1":
        if value is INFINITY:
            return cls((field.zero(), field.one()))
        return cls((field.one(), field.element(value)))

    def affine(self) -> AffineValue:
        if self.coords[0].is_zero():
            return INFINITY
        return self.coords[1] / self.coords[0]


def _matrix_tuple(m: Sequence[Sequence[Scalar]]) -> Tuple[Tuple[Scalar, ...], ...]:
    return tuple(tuple(row) for row in m)


def _canonical_matrix(m: Sequence[Sequence[Scalar]]) -> Tuple[Tuple[Scalar, ...], ...]:
    n = len(m)
    flat = _canonical([x for row in m for x in row])
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


@dataclass(frozen=True, eq=False)
class Conic:
    """
    Symmetric 3x3 gram matrix up to scale

    evaluate(p) = p^T G p; the form a x^2 + b y^2 + c z^2 + d xy + e xz + f yz
    has G = [[a, d/2, e/2], [d/2, b, f/2], [e/2, f/2, c]].
    """

    gram: Tuple[Tuple[Scalar, ...], ...]
    rank: int = dc_field(init=False)

    def __post_init__(self):
        g = _canonical_matrix(self.gram)
        for i in range(3):
            for j in range(i + 1, 3):
                if g[i][j] != g[j][i]:
                    raise ValueError("Conic gram matrix must be symmetric")
        object.__setattr__(self, 'gram', g)
        object.__setattr__(self, 'rank', linalg.rank(g))

    @classmethod
    def from_coefficients(cls, field: FieldDescriptor, a, b, c, d, e, f) -> "Conic":
        """Conic of a x^2 + b y^2 + c z^2 + d xy + e xz + f yz"""
        a, b, c, d, e, f = (field.element(v) for v in (a, b, c, d, e, f))
        half = field.element(2).inverse()
        return cls(((a, d * half, e * half),
                    (d * half, b, f * half),
                    (e * half, f * half, c)))

    @classmethod
    def veronese(cls, field: FieldDescriptor) -> "Conic":
        """y^2 - xz"""
        return cls.from_coefficients(field, 0, 1, 0, 0, -1, 0)

    @property
    def field(self) -> FieldDescriptor:
        return self.gram[0][0].field

    @property
    def is_irreducible(self) -> bool:
        return self.rank == 3

    def coefficients(self) -> Tuple[Scalar, ...]:
        """(a, b, c, d, e, f) of the quadratic form"""
        g = self.gram
        return (g[0][0], g[1][1], g[2][2], g[0][1] * 2, g[0][2] * 2, g[1][2] * 2)

    def bilinear(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        return linalg.dot(u, linalg.mat_vec(self.gram, v))

    def evaluate(self, p: Point2) -> Scalar:
        F = common_field((self.field, p.field))
        c = self.lift(F)
        q = p.lift(F).coords
        return c.bilinear(q, q)

    def contains(self, p: Point2) -> bool:
        return self.evaluate(p).is_zero()

    def lift(self, field: FieldDescriptor) -> "Conic":
        if field == self.field:
            return self
        return Conic(tuple(tuple(x.lift(field) for x in row) for row in self.gram))

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        F = common_field((self.field, other.field))
        a = [x for row in self.lift(F).gram for x in row]
        b = [x for row in other.lift(F).gram for x in row]
        return linalg.proportional(a, b)

    def __hash__(self):
        return hash(tuple(x.value for row in self.gram for x in row))

    def __repr__(self) -> str:
        return f"Conic({', '.join(str(c) for c in self.coefficients())})"


@dataclass(frozen=True, eq=False)
class _ProjectiveMap:
    matrix: Tuple[Tuple[Scalar, ...], ...]

    size = 0

    def __post_init__(self):
        if len(self.matrix) != self.size or any(len(r) != self.size for r in self.matrix):
            raise ValueError(f"{type(self).__name__} needs a {self.size}x{self.size} matrix")
        m = _canonical_matrix(self.matrix)
        if linalg.rank(m) != self.size:
            raise DegenerateFrame(f"{type(self).__name__} matrix is singular")
        object.__setattr__(self, 'matrix', m)

    @classmethod
    def identity(cls, field: FieldDescriptor):
        return cls(_matrix_tuple(linalg.identity(field, cls.size)))

    @classmethod
    def of(cls, field: FieldDescriptor, rows):
        return cls(tuple(tuple(field.element(v) for v in row) for row in rows))

    @property
    def field(self) -> FieldDescriptor:
        return self.matrix[0][0].field

    def lift(self, field: FieldDescriptor):
        if field == self.field:
            return self
        return type(self)(tuple(tuple(x.lift(field) for x in row) for row in self.matrix))

    def compose(self, other):
        """self after other"""
        F = common_field((self.field, other.field))
        return type(self)(_matrix_tuple(linalg.mat_mul(self.lift(F).matrix, other.lift(F).matrix)))

    def inverse(self):
        return type(self)(_matrix_tuple(linalg.inverse(self.matrix)))

    def _apply_vector(self, p: ProjectiveVector):
        F = common_field((self.field, p.field))
        image = linalg.mat_vec(self.lift(F).matrix, p.lift(F).coords)
        return type(p)(tuple(image))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        F = common_field((self.field, other.field))
        a = [x for row in self.lift(F).matrix for x in row]
        b = [x for row in other.lift(F).matrix for x in row]
        return linalg.proportional(a, b)

    def __hash__(self):
        return hash(tuple(x.value for row in self.matrix for x in row))

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.matrix)
        return f"{type(self).__name__}[{rows}]"


class Map3(_ProjectiveMap):
    """Element of PGL_3"""

    size = 3

    def apply(self, p: Point2) -> Point2:
        return self._apply_vector(p)

    def apply_line(self, line: Line) -> Line:
        """Image of a line: coordinates transform by the inverse transpose"""
        F = common_field((self.field, line.field))
        inv = self.inverse().lift(F).matrix
        return Line(tuple(linalg.mat_vec(linalg.transpose(inv), line.lift(F).coords)))

    def apply_conic(self, conic: Conic) -> Conic:
        """Image conic: gram M^-T G M^-1"""
        F = common_field((self.field, conic.field))
        inv = self.inverse().lift(F).matrix
        g = linalg.mat_mul(linalg.transpose(inv), linalg.mat_mul(conic.lift(F).gram, inv))
        return Conic(_matrix_tuple(g))


class Map2(_ProjectiveMap):
    """Element of PGL_2 (a Moebius map)"""

    size = 2

    def apply(self, p: Point1) -> Point1:
        return self._apply_vector(p)
