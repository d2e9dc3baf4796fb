"""
JSON documents for tree profiles

{"kind": "D|C|F", "depth": "p/q", "top": <radians, F only>, "support": [["p/q", value], ...]}

For C profiles the support lists the breakpoints (x, f(x)), starting at
["0", 0]. Values may be JSON numbers or "p/q" strings; strings and integers
are read exactly.
"""
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, Field, ValidationError

from ..models.profiles import Profile, ProfileC, ProfileD, ProfileF, ProfileKind
from ..utils.errors import ProfileFormatError

logger = logging.getLogger(__name__)

JsonScalar = Union[int, float, str]


class ProfileDocument(BaseModel):
    """Raw JSON shape before conversion to a profile"""

    kind: ProfileKind
    depth: Union[int, str]
    top: Optional[float] = Field(None, allow_inf_nan=False)
    support: list[tuple[JsonScalar, JsonScalar]] = []


def _read_value(value: JsonScalar):
    if isinstance(value, str):
        return Fraction(value)
    return value


def _write_value(value) -> JsonScalar:
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    return value


def profile_from_document(document: dict) -> Profile:
    """
    Build a profile from a decoded JSON object

    Raises:
        ProfileFormatError: wrong shape, bad numbers or violated profile invariants
    """
    try:
        doc = ProfileDocument.model_validate(document)
        depth = Fraction(doc.depth)
        pairs = [(Fraction(x), _read_value(v)) for x, v in doc.support]
        if doc.kind is ProfileKind.F:
            return ProfileF(depth=depth, top=doc.top or 0.0, support=pairs)
        if doc.top is not None:
            raise ProfileFormatError(f"Profiles of kind {doc.kind.value} have no top angle")
        if doc.kind is ProfileKind.D:
            return ProfileD(depth=depth, support=pairs)
        return ProfileC(depth=depth, breakpoints=pairs)
    except (ValidationError, ValueError, ZeroDivisionError, TypeError) as e:
        if isinstance(e, ProfileFormatError):
            raise
        raise ProfileFormatError(f"Invalid profile document: {e}") from e


def profile_to_document(profile: Profile) -> dict:
    """Inverse of profile_from_document"""
    document: dict = {"kind": profile.kind.value, "depth": str(profile.depth)}
    if isinstance(profile, ProfileF):
        document["top"] = profile.top
    pairs = profile.breakpoints if isinstance(profile, ProfileC) else profile.support
    document["support"] = [[str(x), _write_value(v)] for x, v in pairs]
    return document


def load_profile(path: Union[str, Path]) -> Profile:
    """
    Read one profile from a JSON file

    Raises:
        OSError: the file cannot be read
        ProfileFormatError: the content is not a valid profile
    """
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except UnicodeDecodeError as e:
        raise ProfileFormatError(f"{path}: not UTF-8 text (byte {e.start})") from e
    except json.JSONDecodeError as e:
        raise ProfileFormatError(f"{path}: not valid JSON ({e.msg} at position {e.pos})") from e
    profile = profile_from_document(document)
    logger.debug(f"Loaded {profile.kind.value}-profile of depth {profile.depth} from {path}")
    return profile


def dump_profile(profile: Profile, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(profile_to_document(profile), indent=2) + "\n", encoding="utf-8")
