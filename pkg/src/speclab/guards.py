import os

from .errors import GuardError

DEFAULT_SUBSET_GUARD = 18
DEFAULT_CLOSED_SET_GUARD = 1 << 20


def guard_bits(default: int = DEFAULT_SUBSET_GUARD) -> int:
    """Maximum number of bits for exhaustive subset enumeration.

    ``SPECLAB_GUARD`` raises (never lowers) the default.
    """
    raw = os.environ.get("SPECLAB_GUARD")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return max(default, value)


def check_bits(k: int, what: str, default: int = DEFAULT_SUBSET_GUARD) -> None:
    limit = guard_bits(default)
    if k > limit:
        raise GuardError(f"{what}: {k} items exceeds guard of {limit} (set SPECLAB_GUARD to raise)")
