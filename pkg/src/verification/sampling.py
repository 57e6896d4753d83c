"""
Seeded Sampling
Random plane configurations in each stratum, driven by SplitMix64
"""

import itertools
from typing import Callable, Optional, Tuple, TypeVar

from src.bridge import StratumKind, classify, collinear_triples
from src.fields import FieldDescriptor
from src.geometry import Map3, PlaneConfig, Point2
from src.utils.exceptions import CubicBridgeError, ExhaustedRetries
from src.utils.helpers import SplitMix64
from src.utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")

DEFAULT_HEIGHT = 10_000
DEFAULT_MAX_RETRIES = 10_000


def _rejection(draw: Callable[[], Optional[T]], what: str, max_retries: int) -> T:
    for attempt in range(max_retries):
        try:
            result = draw()
        except CubicBridgeError:
            result = None
        if result is not None:
            if attempt:
                logger.debug(f"Sampled {what} after {attempt} rejections")
            return result
    raise ExhaustedRetries(f"No {what} after {max_retries} attempts")


def random_point(rng: SplitMix64, field: FieldDescriptor, height: int = DEFAULT_HEIGHT) -> Point2:
    return Point2(tuple(field.random_element(rng, height) for _ in range(3)))


def random_projectivity(rng: SplitMix64, field: FieldDescriptor, height: int = DEFAULT_HEIGHT,
                        max_retries: int = DEFAULT_MAX_RETRIES) -> Map3:
    def draw():
        return Map3(tuple(tuple(field.random_element(rng, height) for _ in range(3)) for _ in range(3)))
    return _rejection(draw, "invertible matrix", max_retries)


def random_generic_config(seed: int, field: FieldDescriptor, height: int = DEFAULT_HEIGHT,
                          max_retries: int = DEFAULT_MAX_RETRIES) -> PlaneConfig:
    """
    Rejection-sample a GenericSmooth configuration

    Args:
        seed: SplitMix64 seed
        field: Rationals (integer coordinates in [-height, height]) or a prime field
        height: Coordinate bound over the rationals
        max_retries: Rejections allowed before giving up

    Raises:
        ExhaustedRetries: no generic configuration found (tiny fields)
    """
    rng = SplitMix64(seed)

    def draw():
        cfg = PlaneConfig(tuple(random_point(rng, field, height) for _ in range(6)))
        return cfg if classify(cfg).kind is StratumKind.GENERIC_SMOOTH else None

    return _rejection(draw, "GenericSmooth configuration", max_retries)


def random_collinear_config(seed: int, field: FieldDescriptor, pair: Optional[Tuple[int, int]] = None,
                            height: int = DEFAULT_HEIGHT, max_retries: int = DEFAULT_MAX_RETRIES) -> PlaneConfig:
    """A CollinearThrough6 configuration; m6 is drawn on the line through the pair"""
    rng = SplitMix64(seed)
    pairs = list(itertools.combinations(range(1, 6), 2))

    def draw():
        i, j = pair if pair is not None else rng.choice(pairs)
        points = [random_point(rng, field, height) for _ in range(5)]
        t = field.random_element(rng, height)
        if t.is_zero():
            return None
        mi, mj = points[i - 1], points[j - 1]
        points.append(Point2(tuple(a + t * b for a, b in zip(mi.coords, mj.coords))))
        cfg = PlaneConfig(tuple(points))
        stratum = classify(cfg)
        if stratum.kind is StratumKind.COLLINEAR_THROUGH_6 and stratum.pair == (min(i, j), max(i, j)):
            return cfg
        return None

    return _rejection(draw, "CollinearThrough6 configuration", max_retries)


def random_on_conic_config(seed: int, field: FieldDescriptor, height: int = DEFAULT_HEIGHT,
                           max_retries: int = DEFAULT_MAX_RETRIES) -> PlaneConfig:
    """Six distinct Veronese points [1, t, t^2] moved by a random projectivity"""
    rng = SplitMix64(seed)

    def draw():
        g = random_projectivity(rng, field, height, max_retries)
        points = []
        for _ in range(6):
            t = field.random_element(rng, height)
            points.append(g.apply(Point2((field.one(), t, t * t))))
        cfg = PlaneConfig(tuple(points))
        return cfg if classify(cfg).kind is StratumKind.ON_CONIC else None

    return _rejection(draw, "OnConic configuration", max_retries)


def random_degenerate_limit_witness(seed: int, field: FieldDescriptor, height: int = DEFAULT_HEIGHT,
                                    max_retries: int = DEFAULT_MAX_RETRIES) -> PlaneConfig:
    """
    m_i, m_j, m6 collinear with m_i also on the line through two of the
    other three points of m1..m5

    The configuration has exactly two collinear triples: {i, j, 6} and the
    base edge through m_i.
    """
    rng = SplitMix64(seed)
    pairs = list(itertools.combinations(range(1, 6), 2))

    def draw():
        i, j = rng.choice(pairs)
        base = [b for b in range(1, 6) if b not in (i, j)]
        b1, b2 = sorted(rng.shuffled(base)[:2])
        points = [random_point(rng, field, height) for _ in range(6)]
        s = field.random_element(rng, height)
        t = field.random_element(rng, height)
        if s.is_zero() or t.is_zero():
            return None
        p1, p2 = points[b1 - 1], points[b2 - 1]
        mi = Point2(tuple(a + s * b for a, b in zip(p1.coords, p2.coords)))
        points[i - 1] = mi
        mj = points[j - 1]
        points[5] = Point2(tuple(a + t * b for a, b in zip(mi.coords, mj.coords)))
        cfg = PlaneConfig(tuple(points))
        expected = sorted([tuple(sorted((b1, b2, i))), (i, j, 6)])
        return cfg if collinear_triples(cfg.points) == expected else None

    return _rejection(draw, "degenerate-limit witness", max_retries)
