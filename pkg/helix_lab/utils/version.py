"""Format version checks for packaged data files."""

from typing import Optional

from packaging.specifiers import SpecifierSet
from packaging.version import Version


def supported_range(
    min_version: Optional[str] = None, max_version: Optional[str] = None
) -> SpecifierSet:
    """``>=min_version,<max_version``; a missing bound leaves that side open."""
    clauses = []
    if min_version is not None:
        clauses.append(f">={min_version}")
    if max_version is not None:
        clauses.append(f"<{max_version}")
    return SpecifierSet(",".join(clauses))


def is_compatible_version(
    current_version: str,
    min_version: Optional[str] = None,
    max_version: Optional[str] = None,
) -> bool:
    """Raises ``InvalidVersion`` when ``current_version`` does not parse."""
    return supported_range(min_version, max_version).contains(Version(current_version))
