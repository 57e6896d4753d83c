"""
Boundary Identifications
Cremona transforms carrying the collinear-through-m6 stratum onto the
on-conic stratum, and the weight-4 degenerate limit
"""

import itertools
from typing import Any, Dict, List, Sequence, Tuple

from src.cremona import based_cremona
from src.geometry import PlaneConfig, Point2, common_field
from src.moduli import collision_stratum
from src.utils.exceptions import CubicBridgeError, WrongDegeneracy, WrongStratum
from src.utils.logger import get_logger

from .classification import StratumKind, classify, collinear_triples
from .phi import conic_through_six, phi67_on_conic

logger = get_logger(__name__)

DEGENERATE_LIMIT_STRATUM = (4, 2, 2, 2, 2)


def cremona_base_for(pair: Tuple[int, int]) -> Tuple[int, ...]:
    """The three of m1..m5 outside pair"""
    return tuple(label for label in range(1, 6) if label not in pair)


def collinear_to_conic(cfg: PlaneConfig) -> PlaneConfig:
    """
    Based Cremona at the three of m1..m5 off the line through m6

    The line through m_i, m_j and m6 avoids the base vertices, so its image
    is a conic through all six image points.

    Raises:
        WrongStratum: cfg is not CollinearThrough6
    """
    stratum = classify(cfg)
    if stratum.kind is not StratumKind.COLLINEAR_THROUGH_6:
        raise WrongStratum(f"Expected CollinearThrough6, got {stratum}")
    base = cremona_base_for(stratum.pair)
    logger.debug(f"Collinear pair {stratum.pair}, Cremona base {base}")
    return PlaneConfig(based_cremona(cfg.points, base))


def _degeneracy(points: Sequence[Point2]) -> Tuple[Tuple[int, int], int, Tuple[int, int]]:
    """
    Pair {i, j} collinear with m6, the degenerate label among them and the
    two base labels it is collinear with
    """
    triples = collinear_triples(points)
    through_6 = [t for t in triples if 6 in t]
    if len(through_6) != 1:
        raise WrongDegeneracy(f"Need exactly one collinear triple through m6, found {len(through_6)}")
    pair = through_6[0][:2]
    base = cremona_base_for(pair)
    edges = []
    for t in triples:
        if 6 in t:
            continue
        members = set(t)
        movers = members & set(pair)
        if len(movers) != 1 or len(members & set(base)) != 2:
            raise WrongDegeneracy(f"Collinear triple {t} is not of the degenerate-limit kind")
        edges.append((movers.pop(), tuple(sorted(members & set(base)))))
    if len(edges) != 1:
        raise WrongDegeneracy(f"Need one of m{pair[0]}, m{pair[1]} on exactly one base edge, found {len(edges)}")
    label, edge = edges[0]
    return pair, label, edge


def degenerate_limit_check_I(cfg) -> Dict[str, Any]:
    """
    Check the weight-4 limit where m_i, m_j, m6 are collinear and m_i also
    lies on the line through two base points

    The Cremona transform sends m_i to the opposite base vertex, leaving five
    distinct points on the image conic; projecting from m6 merges that
    class into a weight-4 point.

    Args:
        cfg: PlaneConfig or six points

    Returns:
        Report with the pair, base, the doubled label and vertex, the number of
        distinct image classes, whether all lie on one conic, the merged
        stratum of the projection and an overall "passed" flag

    Raises:
        WrongDegeneracy: the collinearity pattern is not the expected one
    """
    points = tuple(cfg)
    if len(points) != 6:
        raise WrongDegeneracy(f"Need six points, got {len(points)}")
    F = common_field(p.field for p in points)
    points = tuple(p.lift(F) for p in points)
    for a, b in itertools.combinations(range(6), 2):
        if points[a] == points[b]:
            raise WrongDegeneracy(f"m{a + 1} and m{b + 1} coincide")
    pair, label, edge = _degeneracy(points)
    base = cremona_base_for(pair)
    opposite = next(b for b in base if b not in edge)

    image = based_cremona(points, base)
    classes: List[List[int]] = []
    for i, p in enumerate(image, start=1):
        for block in classes:
            if image[block[0] - 1] == p:
                block.append(i)
                break
        else:
            classes.append([i])
    doubled = [block for block in classes if len(block) > 1]

    report: Dict[str, Any] = {
        "pair": list(pair),
        "base": list(base),
        "degenerate_label": label,
        "opposite_vertex": opposite,
        "classes": len(classes),
        "doubled": doubled[0] if len(doubled) == 1 else None,
        "on_conic": False,
        "merged_stratum": None,
    }
    try:
        conic_through_six(image)
        report["on_conic"] = True
        projected = phi67_on_conic(image)
        report["merged_stratum"] = list(collision_stratum(projected).merged)
    except CubicBridgeError as e:
        logger.warning(f"Degenerate limit image failed the conic check: {e}")
        report["error"] = str(e)

    report["passed"] = (
        report["classes"] == 5
        and report["doubled"] == sorted([label, opposite])
        and report["on_conic"]
        and report["merged_stratum"] == list(DEGENERATE_LIMIT_STRATUM)
    )
    return report
