"""
Moduli Equality
Exact comparison of weighted configurations modulo PGL_2 and label symmetries
"""

import hashlib
from typing import Optional, Sequence, Tuple

from src.geometry import Map2, Point1, common_field, map2_from_triples
from src.utils.exceptions import TooFewDistinctPoints

from .weights import P1Config, SymmetryGroup


def first_distinct_triple(points: Sequence[Point1]) -> Tuple[int, int, int]:
    """Indices of the first three pairwise distinct points"""
    chosen = []
    for i, p in enumerate(points):
        if all(points[j] != p for j in chosen):
            chosen.append(i)
            if len(chosen) == 3:
                return tuple(chosen)
    raise TooFewDistinctPoints(f"Only {len(chosen)} distinct points")


def moduli_witness(a: P1Config, b: P1Config, sigma_group: SymmetryGroup) -> Optional[Tuple[Tuple[int, ...], Map2]]:
    """
    A (sigma, g) with g(a_i) = b_sigma(i) for all i, or None

    Raises:
        TooFewDistinctPoints: a or b has fewer than three distinct points
    """
    if len(a) != len(b):
        return None
    triple = first_distinct_triple(a.points)
    first_distinct_triple(b.points)
    F = common_field((a.field, b.field))
    a, b = a.lift(F), b.lift(F)
    for sigma in sigma_group.elements(len(a)):
        if any(a.weights[i] != b.weights[sigma[i]] for i in range(len(a))):
            continue
        targets = [b.points[sigma[i]] for i in triple]
        if targets[0] == targets[1] or targets[1] == targets[2] or targets[0] == targets[2]:
            continue
        g = map2_from_triples([a.points[i] for i in triple], targets)
        if all(g.apply(p) == b.points[sigma[i]] for i, p in enumerate(a.points)):
            return sigma, g
    return None


def moduli_equal(a: P1Config, b: P1Config, sigma_group: SymmetryGroup = None) -> bool:
    """
    Whether a and b define the same point of the weighted moduli space

    Args:
        a: First configuration
        b: Second configuration
        sigma_group: Allowed label permutations; trivial by default
    """
    return moduli_witness(a, b, sigma_group or SymmetryGroup.trivial()) is not None


def _normal_form_key(points: Sequence[Point1], weights: Sequence[int]) -> bytes:
    i, j, k = first_distinct_triple(points)
    F = points[0].field
    g = map2_from_triples((points[i], points[j], points[k]),
                          (Point1.from_affine(F, 0), Point1.from_affine(F, 1),
                           Point1((F.zero(), F.one()))))
    parts = [f"{w}".encode() + b"@" + g.apply(p).key() for p, w in zip(points, weights)]
    return b";".join(parts)


def fingerprint(cfg: P1Config, sigma_group: SymmetryGroup = None) -> bytes:
    """
    Sigma-orbit-minimal key of the Moebius normal form

    Each relabeling is normalized by sending its first three distinct points
    to 0, 1, infinity; equal moduli points give equal fingerprints.
    """
    sigma_group = sigma_group or SymmetryGroup.trivial()
    first_distinct_triple(cfg.points)
    n = len(cfg)
    best = None
    for sigma in sigma_group.elements(n):
        relabeled = cfg.permute(sigma)
        key = _normal_form_key(relabeled.points, relabeled.weights)
        if best is None or key < best:
            best = key
    return hashlib.sha256(best).digest()
