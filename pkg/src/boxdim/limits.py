"""Size guards for the exhaustive oracles."""

from __future__ import annotations

from dataclasses import dataclass


class OracleLimitError(Exception):
    """Raised when an input exceeds the size guard of an exhaustive oracle."""


@dataclass(frozen=True)
class OracleLimits:
    """Default size caps for the exhaustive searches.

    Every oracle accepts an explicit ``max_n`` argument (CLI: ``--limit``)
    that overrides its default cap for one call.  Exceeding a cap raises
    :class:`OracleLimitError`; nothing is ever silently approximated.
    """

    chromatic_max_n: int = 16
    extensions_max_n: int = 9
    dimension_max_n: int = 10
    boxicity_max_n: int = 7
    supergraphs_max_n: int = 7
    recognition_max_n: int = 20
    recognition_max_cliques: int = 24


DEFAULT_LIMITS = OracleLimits()


def check_limit(what: str, n: int, default_cap: int, max_n: int | None) -> int:
    """Return the effective cap, raising OracleLimitError if ``n`` exceeds it."""
    cap = default_cap if max_n is None else max_n
    if n > cap:
        raise OracleLimitError(
            f"{what}: input size {n} exceeds the oracle limit {cap} "
            f"(pass max_n / --limit to raise it)")
    return cap
