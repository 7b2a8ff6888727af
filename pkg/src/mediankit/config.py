import os

#: default enumeration bound, as a power of two on the size of a search space
DEFAULT_LIMIT = 20


def enumeration_limit(override=None):
    """Resolve the bound: explicit argument, then ``MEDIANKIT_LIMIT``, then default."""
    if override is not None:
        return int(override)
    env = os.environ.get("MEDIANKIT_LIMIT")
    if env:
        return int(env)
    return DEFAULT_LIMIT


def check_space(what, size, limit=None):
    from .errors import SizeLimit

    limit = enumeration_limit(limit)
    if size > (1 << limit):
        raise SizeLimit(what, size, limit)
