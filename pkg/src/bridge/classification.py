"""
Stratum Classification
Where a six-point configuration sits relative to the discriminant
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.geometry import PlaneConfig, Point2, collinear, conic_through_five
from src.utils.exceptions import CubicBridgeError


class StratumKind(Enum):
    GENERIC_SMOOTH = "GenericSmooth"
    ON_CONIC = "OnConic"
    COLLINEAR_THROUGH_6 = "CollinearThrough6"
    EXCLUDED = "Excluded"


@dataclass(frozen=True)
class StratumClass:
    kind: StratumKind
    pair: Optional[Tuple[int, int]] = None
    reason: Optional[str] = None

    @classmethod
    def generic(cls) -> "StratumClass":
        return cls(StratumKind.GENERIC_SMOOTH)

    @classmethod
    def on_conic(cls) -> "StratumClass":
        return cls(StratumKind.ON_CONIC)

    @classmethod
    def collinear_through_6(cls, i: int, j: int) -> "StratumClass":
        return cls(StratumKind.COLLINEAR_THROUGH_6, pair=tuple(sorted((i, j))))

    @classmethod
    def excluded(cls, reason: str) -> "StratumClass":
        return cls(StratumKind.EXCLUDED, reason=reason)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"stratum": self.kind.value}
        if self.pair is not None:
            data["pair"] = list(self.pair)
        if self.reason is not None:
            data["reason"] = self.reason
        return data

    def __str__(self) -> str:
        if self.pair is not None:
            return f"{self.kind.value}({self.pair[0]},{self.pair[1]})"
        if self.reason is not None:
            return f"{self.kind.value}({self.reason})"
        return self.kind.value


def collinear_triples(points: Sequence[Point2]) -> List[Tuple[int, int, int]]:
    """Label triples (1-based, lexicographic) whose points are collinear"""
    return [t for t in itertools.combinations(range(1, len(points) + 1), 3)
            if collinear(*(points[i - 1] for i in t))]


def classify(cfg: PlaneConfig) -> StratumClass:
    """
    GenericSmooth, OnConic, CollinearThrough6({i,j}) or Excluded(reason)

    A configuration without collinear triples is OnConic or GenericSmooth
    according to whether m6 lies on the conic through m1..m5. A single
    collinear triple through m6 gives CollinearThrough6; anything else is
    Excluded with a diagnostic.
    """
    triples = collinear_triples(cfg.points)
    if not triples:
        try:
            conic = conic_through_five(cfg.points[:5])
        except CubicBridgeError as e:
            return StratumClass.excluded(f"no irreducible conic through m1..m5: {e}")
        if conic.contains(cfg[6]):
            return StratumClass.on_conic()
        return StratumClass.generic()
    if len(triples) == 1 and 6 in triples[0]:
        i, j, _ = triples[0]
        return StratumClass.collinear_through_6(i, j)
    if len(triples) > 1:
        listed = ", ".join("{" + ",".join(map(str, t)) + "}" for t in triples)
        return StratumClass.excluded(f"several collinear triples: {listed}")
    return StratumClass.excluded(f"three of m1..m5 collinear: {{{','.join(map(str, triples[0]))}}}")
