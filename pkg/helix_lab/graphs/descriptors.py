"""Parsing of family descriptors such as ``KG:5,2`` or ``H:5,1,2``."""

import re

from pydantic import ValidationError

from ..core.constants.family_kinds import FamilyKind
from ..core.errors import DescriptorError
from ..core.models.family_models import FamilyDescriptor

_DESCRIPTOR_RE = re.compile(r"^(?P<kind>[A-Za-z]+)(?::(?P<params>\d+(?:,\d+)*))?$")


def parse_descriptor(text: str) -> FamilyDescriptor:
    """Parse ``KIND[:p1,p2,...]`` into a descriptor."""
    match = _DESCRIPTOR_RE.match(text.strip())
    if not match:
        raise DescriptorError(f"malformed family descriptor {text!r}", text)
    try:
        kind = FamilyKind(match.group("kind"))
    except ValueError as exc:
        known = ", ".join(k.value for k in FamilyKind)
        raise DescriptorError(
            f"unknown family {match.group('kind')!r} (expected one of {known})", text
        ) from exc
    params = match.group("params")
    values = tuple(int(p) for p in params.split(",")) if params else ()
    try:
        return FamilyDescriptor(kind=kind, params=values)
    except ValidationError as exc:
        raise DescriptorError(exc.errors()[0]["msg"], text) from exc


def looks_like_descriptor(text: str) -> bool:
    return bool(_DESCRIPTOR_RE.match(text.strip()))
