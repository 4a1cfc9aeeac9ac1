"""Small numeric and seeding helpers shared across modules."""

from __future__ import annotations

import hashlib
import math

# The closed-form sample sizes are ratios of logarithms that land exactly on
# integers for round inputs (log(2048)/log(2) = 11).  Floating point may
# overshoot such values by a few ulps, and a plain ceiling would then round
# an exact 11 up to 12, so every ceiling here forgives a tiny overshoot.
_SNAP_EPS = 1e-9


def ceil_snapped(x: float, eps: float = _SNAP_EPS) -> int:
    """Ceiling of ``x`` that ignores float noise just above an integer."""
    return math.ceil(x - eps)


def derive_seed(*parts: object) -> int:
    """Derive a stable 63-bit sub-seed from ``parts`` (order-sensitive).

    Used to split one user-facing seed into independent named streams
    (instance generation, root sampling) without any cross-talk.
    """
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1
