"""Size guards and runtime settings.

Values come from the environment (a ``.env`` file is honoured) and can be
overridden per call, e.g. by CLI flags. Nothing is required to be set.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_MAX_EXACT_CHROMATIC = 20
DEFAULT_MAX_EXACT_MINOR = 16
DEFAULT_MAX_MINOR_K = 8
DEFAULT_MAX_KL_K = 4
DEFAULT_MAX_BRANCHES = 2**16
# is_kl_connected only enforces the k cap above this many vertices
KL_GUARD_MIN_VERTICES = 12


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r (not an integer), using %d", name, raw, default)
        return default
    if value < 0:
        logger.warning("Ignoring %s=%d (negative), using %d", name, value, default)
        return default
    return value


@dataclass(frozen=True)
class Limits:
    """Instance-size guards for the exact solvers."""

    max_exact_chromatic: int = DEFAULT_MAX_EXACT_CHROMATIC
    max_exact_minor: int = DEFAULT_MAX_EXACT_MINOR
    max_minor_k: int = DEFAULT_MAX_MINOR_K
    max_kl_k: int = DEFAULT_MAX_KL_K
    max_branches: int = DEFAULT_MAX_BRANCHES

    @classmethod
    def from_env(cls) -> Limits:
        return cls(
            max_exact_chromatic=_env_int("TGRAPH_MAX_EXACT_CHROMATIC", DEFAULT_MAX_EXACT_CHROMATIC),
            max_exact_minor=_env_int("TGRAPH_MAX_EXACT_MINOR", DEFAULT_MAX_EXACT_MINOR),
            max_minor_k=_env_int("TGRAPH_MAX_MINOR_K", DEFAULT_MAX_MINOR_K),
            max_kl_k=_env_int("TGRAPH_MAX_KL_K", DEFAULT_MAX_KL_K),
            max_branches=_env_int("TGRAPH_MAX_BRANCHES", DEFAULT_MAX_BRANCHES),
        )

    def with_overrides(self, **overrides: int | None) -> Limits:
        """Copy with every non-None override applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes)


def log_level() -> str:
    return os.getenv("TGRAPH_LOG_LEVEL", "WARNING").upper()
