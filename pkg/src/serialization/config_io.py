"""
Configuration Files
JSON encoding of fields, scalars, plane configurations and weighted P^1
configurations
"""

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from src.fields import FieldDescriptor, FieldKind, Scalar, sqrt
from src.geometry import PlaneConfig, Point1, Point2, common_field
from src.moduli import P1Config, WeightVector
from src.utils.exceptions import CubicBridgeError, ParseError
from src.utils.helpers import JsonProcessor
from src.utils.logger import get_logger

logger = get_logger(__name__)

_NUMBER = re.compile(r'^\s*-?\d+(?:\s*/\s*\d+)?\s*$')


def parse_field_choice(text: str) -> FieldDescriptor:
    """
    Field from its command-line form

    Args:
        text: "rational" or "prime:<p>"
    """
    text = text.strip()
    if text in ("rational", "rationals", "Q"):
        return FieldDescriptor.rationals()
    if text.startswith("prime:"):
        digits = text[len("prime:"):].strip()
        if not digits.isdigit():
            raise ParseError(f"Malformed prime '{digits}'", path="--field")
        try:
            return FieldDescriptor.prime(int(digits))
        except CubicBridgeError as e:
            raise ParseError(str(e), path="--field") from e
    raise ParseError(f"Unknown field '{text}', expected rational or prime:<p>", path="--field")


def field_choice_text(field: FieldDescriptor) -> str:
    if field.kind is FieldKind.RATIONALS:
        return "rational"
    return f"prime:{field.ground.p}"


def encode_field(field: FieldDescriptor) -> Dict[str, str]:
    ground = field.ground
    if ground.kind is FieldKind.RATIONALS:
        return {"kind": "rational"}
    return {"kind": "prime", "p": str(ground.p)}


def decode_field(data: Any, path: str = "field") -> FieldDescriptor:
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError("Field must be an object with a 'kind'", path=path)
    kind = data["kind"]
    if kind == "rational":
        return FieldDescriptor.rationals()
    if kind == "prime":
        p = data.get("p")
        if isinstance(p, int) and not isinstance(p, bool):
            p = str(p)
        if not isinstance(p, str) or not p.strip().isdigit():
            raise ParseError(f"Prime must be a decimal string, got {p!r}", path=f"{path}.p")
        try:
            return FieldDescriptor.prime(int(p))
        except CubicBridgeError as e:
            raise ParseError(str(e), path=f"{path}.p") from e
    raise ParseError(f"Unknown field kind {kind!r}", path=f"{path}.kind")


def _encode_base(value: Any, field: FieldDescriptor) -> str:
    if field.kind is FieldKind.RATIONALS:
        v = Fraction(value)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(value)


def encode_scalar(x: Scalar) -> Union[str, Dict[str, str]]:
    """
    Decimal string, "a/b", or {"a", "b", "d"} for a + b*sqrt(d)

    Extension elements that lie in the base field are written as base values.
    """
    F = x.field
    if not F.is_extension:
        return _encode_base(x.value, F)
    a, b = x.value
    if F.base.raw_is_zero(b):
        return _encode_base(a, F.base)
    return {"a": _encode_base(a, F.base), "b": _encode_base(b, F.base), "d": _encode_base(F.d, F.base)}


def _decode_number(text: Any, field: FieldDescriptor, path: str) -> Scalar:
    if isinstance(text, int) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str) or not _NUMBER.match(text):
        raise ParseError(f"Malformed number {text!r}", path=path)
    try:
        return field.element(Fraction(text.replace(" ", "")))
    except (ZeroDivisionError, CubicBridgeError) as e:
        raise ParseError(f"Cannot read {text!r} in {field}: {e}", path=path) from e


def decode_scalar(data: Any, field: FieldDescriptor, path: str = "value") -> Scalar:
    """
    Scalar from its text encoding

    Args:
        data: Decimal or "a/b" string, or {"a", "b", "d"}
        field: Base field the file declares
        path: Location used in error messages
    """
    if isinstance(data, dict):
        missing = [k for k in ("a", "b", "d") if k not in data]
        if missing:
            raise ParseError(f"Extension element lacks {missing}", path=path)
        d = _decode_number(data["d"], field, f"{path}.d")
        try:
            E = FieldDescriptor.quadratic(field, d.value)
        except CubicBridgeError as e:
            raise ParseError(str(e), path=f"{path}.d") from e
        a = _decode_number(data["a"], field, f"{path}.a")
        b = _decode_number(data["b"], field, f"{path}.b")
        root, _ = sqrt(d)
        return E.embed(a) + E.embed(b) * root
    return _decode_number(data, field, path)


def _decode_vector(row: Any, field: FieldDescriptor, size: int, path: str) -> List[Scalar]:
    if not isinstance(row, list) or len(row) != size:
        raise ParseError(f"Expected {size} coordinates", path=path)
    coords = [decode_scalar(v, field, f"{path}[{k}]") for k, v in enumerate(row)]
    try:
        F = common_field(c.field for c in coords)
    except CubicBridgeError as e:
        raise ParseError(str(e), path=path) from e
    return [c.lift(F) for c in coords]


def decode_points(rows: Any, field: FieldDescriptor, size: int, path: str) -> List[Union[Point1, Point2]]:
    if not isinstance(rows, list):
        raise ParseError("Points must be a list", path=path)
    cls = Point2 if size == 3 else Point1
    points = []
    for i, row in enumerate(rows):
        coords = _decode_vector(row, field, size, f"{path}[{i}]")
        try:
            points.append(cls(tuple(coords)))
        except CubicBridgeError as e:
            raise ParseError(str(e), path=f"{path}[{i}]") from e
    return points


def encode_points(points: Sequence[Union[Point1, Point2]]) -> List[List[Any]]:
    return [[encode_scalar(c) for c in p.coords] for p in points]


@dataclass(frozen=True)
class ConfigFile:
    """Contents of a configuration file"""

    field: FieldDescriptor
    plane_config: Optional[PlaneConfig] = None
    p1_config: Optional[P1Config] = None
    # six plane points kept as read, coincidences allowed
    raw_points: Optional[tuple] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"field": encode_field(self.field)}
        if self.plane_config is not None:
            data["plane_config"] = {"points": encode_points(self.plane_config.points)}
        elif self.raw_points is not None:
            data["plane_config"] = {"points": encode_points(self.raw_points)}
        if self.p1_config is not None:
            data["p1_config"] = {
                "points": encode_points(self.p1_config.points),
                "weights": list(self.p1_config.weights),
            }
        return data


def config_from_dict(data: Any) -> ConfigFile:
    """
    Build a ConfigFile from decoded JSON

    Raises:
        ParseError: missing or malformed members; path names the member
    """
    if not isinstance(data, dict):
        raise ParseError("Configuration must be a JSON object", path="$")
    if "field" not in data:
        raise ParseError("Missing field declaration", path="field")
    field = decode_field(data["field"])
    if "plane_config" not in data and "p1_config" not in data:
        raise ParseError("Need plane_config or p1_config", path="$")

    plane = raw = None
    if "plane_config" in data:
        section = data["plane_config"]
        if not isinstance(section, dict) or "points" not in section:
            raise ParseError("plane_config needs points", path="plane_config")
        points = decode_points(section["points"], field, 3, "plane_config.points")
        if len(points) != 6:
            raise ParseError(f"Expected 6 points, got {len(points)}", path="plane_config.points")
        raw = tuple(points)
        try:
            plane = PlaneConfig(raw)
        except CubicBridgeError as e:
            logger.debug(f"Plane points kept raw: {e}")

    p1 = None
    if "p1_config" in data:
        section = data["p1_config"]
        if not isinstance(section, dict) or "points" not in section or "weights" not in section:
            raise ParseError("p1_config needs points and weights", path="p1_config")
        points = decode_points(section["points"], field, 2, "p1_config.points")
        try:
            weights = WeightVector.of(section["weights"])
        except (TypeError, ValueError) as e:
            raise ParseError(str(e), path="p1_config.weights") from e
        try:
            p1 = P1Config(tuple(points), weights)
        except (TypeError, ValueError) as e:
            raise ParseError(str(e), path="p1_config") from e

    return ConfigFile(field=field, plane_config=plane, p1_config=p1, raw_points=raw)


def parse_config(text: str) -> ConfigFile:
    """
    Parse configuration JSON text

    Raises:
        ParseError: invalid JSON (with its line) or invalid contents
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno) from e
    return config_from_dict(data)


def serialize_config(cfg: ConfigFile, indent: int = 2) -> str:
    """Canonical JSON text: sorted keys, canonical point scale, trailing newline"""
    return JsonProcessor.dumps(cfg.to_dict(), indent=indent)


def load_config(file_path: Union[str, Path]) -> ConfigFile:
    logger.info(f"Loading configuration file: {file_path}")
    try:
        text = Path(file_path).read_text(encoding='utf-8')
    except OSError as e:
        raise ParseError(f"Cannot read {file_path}: {e.strerror}") from e
    return parse_config(text)


def plane_config_file(cfg: Union[PlaneConfig, Sequence[Point2]]) -> ConfigFile:
    """Wrap six plane points for serialization"""
    points = tuple(cfg)
    F = common_field(p.field for p in points)
    if isinstance(cfg, PlaneConfig):
        return ConfigFile(field=F.ground, plane_config=cfg, raw_points=points)
    return ConfigFile(field=F.ground, raw_points=points)


def p1_config_file(cfg: P1Config) -> ConfigFile:
    return ConfigFile(field=cfg.field.ground, p1_config=cfg)
