"""
GIT Strata
Stability, coincidence strata and stable descendants of weight vectors
"""

from typing import Dict, List, Set, Tuple, Union

from src.utils.logger import get_logger

from .weights import P1Config, Stability, Stratum, WeightVector

logger = get_logger(__name__)

WeightSpec = Union[str, Tuple[int, ...], WeightVector]


def collision_stratum(cfg: P1Config) -> Stratum:
    """Blocks of equal points, ordered by first index, with descending merged weights"""
    blocks: List[List[int]] = []
    for i, p in enumerate(cfg.points):
        for block in blocks:
            if cfg.points[block[0]] == p:
                block.append(i)
                break
        else:
            blocks.append([i])
    merged = WeightVector(tuple(sorted((sum(cfg.weights[i] for i in b) for b in blocks), reverse=True)))
    return Stratum(tuple(tuple(b) for b in blocks), merged)


def classify_weight(weight: int, total: int) -> Stability:
    if 2 * weight < total:
        return Stability.STABLE
    if 2 * weight == total:
        return Stability.STRICTLY_SEMISTABLE
    return Stability.UNSTABLE


def stability(cfg: P1Config) -> Stability:
    """
    GIT stability of a weighted configuration

    Stable when every coincidence class weighs less than half the total,
    unstable when one weighs more, strictly semistable otherwise.
    """
    total = cfg.weights.total
    heaviest = collision_stratum(cfg).merged[0]
    return classify_weight(heaviest, total)


def descendants(mu: WeightSpec, m: int) -> Set[WeightVector]:
    """
    Stable merged weight vectors with m entries

    Args:
        mu: Weight vector
        m: Number of classes, at least 3

    Returns:
        Descending-sorted vectors from partitions of the indices of mu into
        m nonempty classes, each of weight below half the total
    """
    mu = WeightVector.of(mu)
    if m < 3:
        raise ValueError(f"descendants needs m >= 3, got {m}")
    total = mu.total
    states = {()}
    for w in mu:
        grown = set()
        for state in states:
            if len(state) < m and 2 * w < total:
                grown.add(tuple(sorted(state + (w,), reverse=True)))
            for k, s in enumerate(state):
                if k and state[k - 1] == s:
                    continue
                if 2 * (s + w) < total:
                    grown.add(tuple(sorted(state[:k] + (s + w,) + state[k + 1:], reverse=True)))
        states = grown
    result = {WeightVector(s) for s in states if len(s) == m}
    logger.debug(f"descendants({mu}, {m}): {len(result)} vectors")
    return result


def stable_strata(mu: WeightSpec) -> Dict[int, Set[WeightVector]]:
    """Descendant sets keyed by point count, from len(mu) down to 3"""
    mu = WeightVector.of(mu)
    return {m: descendants(mu, m) for m in range(len(mu), 2, -1)}


def collision_poset(mu: WeightSpec) -> List[Tuple[WeightVector, WeightVector]]:
    """
    Covering edges of the descendant poset

    (v, w) is an edge when w arises from v by merging two entries into a
    class that stays stable.
    """
    mu = WeightVector.of(mu)
    strata = stable_strata(mu)
    total = mu.total
    edges = set()
    for m, vectors in strata.items():
        targets = strata.get(m - 1, set())
        for v in vectors:
            for i in range(len(v)):
                for j in range(i + 1, len(v)):
                    if 2 * (v[i] + v[j]) >= total:
                        continue
                    rest = [v[k] for k in range(len(v)) if k not in (i, j)]
                    w = WeightVector(tuple(sorted(rest + [v[i] + v[j]], reverse=True))) if len(v) > 3 else None
                    if w is not None and w in targets:
                        edges.add((v, w))
    return sorted(edges, key=lambda e: (-len(e[0]), e[0].weights, e[1].weights))


def ball_dimension(mu: WeightSpec) -> int:
    return len(WeightVector.of(mu)) - 3
