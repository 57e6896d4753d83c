"""
Cremona Words
Token sequences, the swap action on six-point configurations and the
F_2 solver that writes every swap set as a word in based Cremona transforms
"""

import itertools
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.fields import FieldDescriptor
from src.geometry import (
    Map3,
    PlaneConfig,
    Point2,
    conic_through_five,
    second_intersection,
)
from src.utils.exceptions import (
    CubicBridgeError,
    InvalidConfiguration,
    NotGeneric,
    ParseError,
    WordApplicationError,
)
from src.utils.logger import get_logger

from .transforms import based_cremona

logger = get_logger(__name__)

SWAP_LABELS = (1, 2, 3, 4, 5)


# tokens

@dataclass(frozen=True)
class BasedCremona:
    """psi(i,j,k): quadratic transform based at three labels"""

    labels: Tuple[int, int, int]

    def __post_init__(self):
        labels = tuple(sorted(self.labels))
        if len(set(labels)) != 3 or not all(1 <= i <= 6 for i in labels):
            raise ValueError(f"Based Cremona needs three distinct labels in 1..6, got {self.labels}")
        object.__setattr__(self, 'labels', labels)

    def apply(self, points: Sequence[Point2]) -> Tuple[Point2, ...]:
        return based_cremona(points, self.labels)

    def __str__(self) -> str:
        return f"psi({','.join(map(str, self.labels))})"


@dataclass(frozen=True)
class Relabel:
    """tau(i,j): exchange the labels i and j"""

    i: int
    j: int

    def __post_init__(self):
        a, b = sorted((self.i, self.j))
        if a == b or not (1 <= a and b <= 6):
            raise ValueError(f"Relabel needs two distinct labels in 1..6, got ({self.i}, {self.j})")
        object.__setattr__(self, 'i', a)
        object.__setattr__(self, 'j', b)

    def apply(self, points: Sequence[Point2]) -> Tuple[Point2, ...]:
        pts = list(points)
        pts[self.i - 1], pts[self.j - 1] = pts[self.j - 1], pts[self.i - 1]
        return tuple(pts)

    def __str__(self) -> str:
        return f"tau({self.i},{self.j})"


@dataclass(frozen=True)
class Projectivity:
    """proj(...): a projective change of coordinates"""

    map: Map3

    def apply(self, points: Sequence[Point2]) -> Tuple[Point2, ...]:
        return tuple(self.map.apply(p) for p in points)

    def __str__(self) -> str:
        rows = ";".join(",".join(str(x) for x in row) for row in self.map.matrix)
        return f"proj({rows})"


CremonaToken = Union[BasedCremona, Relabel, Projectivity]

_TOKEN = re.compile(r'^(psi|tau|proj)\((.*)\)$')


def parse_token(text: str, field: Optional[FieldDescriptor] = None) -> CremonaToken:
    match = _TOKEN.match(text.strip())
    if not match:
        raise ParseError(f"Unknown Cremona token '{text}'")
    name, args = match.groups()
    try:
        if name == 'psi':
            return BasedCremona(tuple(int(a) for a in args.split(',')))
        if name == 'tau':
            i, j = (int(a) for a in args.split(','))
            return Relabel(i, j)
        field = field or FieldDescriptor.rationals()
        rows = [[field.element(x) for x in row.split(',')] for row in args.split(';')]
        return Projectivity(Map3(tuple(tuple(r) for r in rows)))
    except CubicBridgeError:
        raise
    except ValueError as e:
        raise ParseError(f"Malformed Cremona token '{text}': {e}")


@dataclass(frozen=True)
class CremonaWord:
    """Tokens applied right to left, so "psi(3,4,6)*psi(1,2,6)" runs psi(1,2,6) first"""

    tokens: Tuple[CremonaToken, ...] = ()

    @classmethod
    def parse(cls, text: str, field: Optional[FieldDescriptor] = None) -> "CremonaWord":
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(parse_token(t, field) for t in text.split('*')))

    def __mul__(self, other: "CremonaWord") -> "CremonaWord":
        """self after other"""
        return CremonaWord(self.tokens + other.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def application_order(self) -> Iterator[CremonaToken]:
        return reversed(self.tokens)

    def __str__(self) -> str:
        return "*".join(str(t) for t in self.tokens)


def apply_word(cfg: Union[PlaneConfig, Sequence[Point2]], word: CremonaWord):
    """
    Apply a word to six labeled points

    Args:
        cfg: A PlaneConfig or a raw tuple of six points
        word: Tokens, applied right to left

    Returns:
        Image of the same kind as cfg

    Raises:
        WordApplicationError: a token failed; token_index counts applications from 0
    """
    points = tuple(cfg)
    for index, token in enumerate(word.application_order()):
        try:
            points = token.apply(points)
        except CubicBridgeError as e:
            raise WordApplicationError(f"{token}: {e}", index, e) from e
    if isinstance(cfg, PlaneConfig):
        try:
            return PlaneConfig(points)
        except InvalidConfiguration as e:
            raise WordApplicationError(f"result is not a configuration: {e}", len(word), e) from e
    return points


# swap sets

@dataclass(frozen=True)
class SwapSet:
    """Labels among 1..5 whose point is exchanged with its partner on the conic"""

    members: FrozenSet[int] = frozenset()

    def __post_init__(self):
        members = frozenset(self.members)
        if not members <= set(SWAP_LABELS):
            raise ValueError(f"Swap sets are subsets of 1..5, got {sorted(members)}")
        object.__setattr__(self, 'members', members)

    @classmethod
    def of(cls, *labels: int) -> "SwapSet":
        return cls(frozenset(labels))

    @classmethod
    def all_subsets(cls) -> List["SwapSet"]:
        """All 32 swap sets, ordered by size then lexicographically"""
        return [cls(frozenset(c)) for r in range(6) for c in itertools.combinations(SWAP_LABELS, r)]

    def vector(self) -> np.ndarray:
        return np.array([1 if i in self.members else 0 for i in SWAP_LABELS], dtype=np.uint8)

    @classmethod
    def from_vector(cls, v: Iterable[int]) -> "SwapSet":
        return cls(frozenset(i for i, bit in zip(SWAP_LABELS, v) if int(bit) % 2))

    def complement(self) -> "SwapSet":
        return SwapSet(frozenset(SWAP_LABELS) - self.members)

    def __xor__(self, other: "SwapSet") -> "SwapSet":
        return SwapSet(self.members ^ other.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"


def geometric_swap(cfg: PlaneConfig, swap: SwapSet) -> PlaneConfig:
    """
    Replace m_i (i in swap) by the second point of line(m_i, m6) on the conic

    Raises:
        NotGeneric: m1..m5 are not on a rank 3 conic avoiding m6
    """
    try:
        conic = conic_through_five(cfg.points[:5])
    except CubicBridgeError as e:
        raise NotGeneric(f"No irreducible conic through m1..m5: {e}") from e
    m6 = cfg[6]
    if conic.contains(m6):
        raise NotGeneric("m6 lies on the conic through m1..m5")
    points = list(cfg.points)
    for i in swap:
        points[i - 1] = second_intersection(conic, points[i - 1], m6)
    try:
        return PlaneConfig(tuple(points))
    except InvalidConfiguration as e:
        raise NotGeneric(f"Swap {swap} collapses two points: {e}") from e


# F_2 words

GENERATOR_PAIRS: Tuple[Tuple[int, int], ...] = tuple(itertools.combinations(SWAP_LABELS, 2))


def generator_word(i: int, j: int) -> CremonaWord:
    """tau(i,j)*psi(i,j,6), realizing the swap set {1..5} minus {i,j}"""
    return CremonaWord((Relabel(i, j), BasedCremona((i, j, 6))))


def generator_swap_set(i: int, j: int) -> SwapSet:
    return SwapSet(frozenset(SWAP_LABELS) - {i, j})


def generator_matrix() -> np.ndarray:
    """Columns: the ten generator swap vectors, then the all-ones diagonal"""
    columns = [generator_swap_set(i, j).vector() for i, j in GENERATOR_PAIRS]
    columns.append(np.ones(len(SWAP_LABELS), dtype=np.uint8))
    return np.stack(columns, axis=1)


def gauss_solve_mod2(M: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """One solution of M x = b over F_2 (free variables zero), or None"""
    A = (M.astype(np.uint8) & 1).copy()
    y = (b.astype(np.uint8) & 1).copy()
    m, n = A.shape
    piv_cols, piv_rows = [], []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if A[i, c]), -1)
        if pivot == -1:
            continue
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
            y[r], y[pivot] = y[pivot], y[r]
        piv_cols.append(c)
        piv_rows.append(r)
        for i in range(m):
            if i != r and A[i, c]:
                A[i, :] ^= A[r, :]
                y[i] ^= y[r]
        r += 1
        if r == m:
            break
    for i in range(m):
        if not A[i].any() and y[i]:
            return None
    x = np.zeros(n, dtype=np.uint8)
    for row, c in zip(piv_rows, piv_cols):
        x[c] = y[row]
    return x


def nullspace_mod2(M: np.ndarray) -> List[np.ndarray]:
    A = (M.astype(np.uint8) & 1).copy()
    m, n = A.shape
    piv_cols: List[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if A[i, c]), -1)
        if pivot == -1:
            continue
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        for i in range(m):
            if i != r and A[i, c]:
                A[i, :] ^= A[r, :]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    basis = []
    for f in (c for c in range(n) if c not in piv_cols):
        v = np.zeros(n, dtype=np.uint8)
        v[f] = 1
        for row, c in enumerate(piv_cols):
            v[c] = A[row, f]
        basis.append(v)
    return basis


def rank_mod2(M: np.ndarray) -> int:
    return M.shape[1] - len(nullspace_mod2(M))


def swap_word(swap: SwapSet) -> CremonaWord:
    """
    Shortest word over the generators realizing swap modulo the diagonal

    All F_2 solutions of generator_matrix() x = swap are enumerated from one
    particular solution and the null space; the diagonal column is free. The
    solution using fewest generators wins, ties broken by the sorted generator
    indices. The first generator is applied first (rightmost in the word).
    """
    M = generator_matrix()
    particular = gauss_solve_mod2(M, swap.vector())
    if particular is None:
        raise ValueError(f"Swap set {swap} is outside the generator span")
    kernel = nullspace_mod2(M)
    best = None
    for coeffs in itertools.product((0, 1), repeat=len(kernel)):
        x = particular.copy()
        for c, v in zip(coeffs, kernel):
            if c:
                x ^= v
        used = tuple(int(i) for i in np.flatnonzero(x[:len(GENERATOR_PAIRS)]))
        candidate = (len(used), used)
        if best is None or candidate < best:
            best = candidate
    word = CremonaWord()
    for index in best[1]:
        word = generator_word(*GENERATOR_PAIRS[index]) * word
    logger.debug(f"swap_word({swap}) = {word or 'identity'}")
    return word
