# Simple validation decorators for complex operations
import functools

from ..errors import InvalidAmplitude
from ..models.chain_map import check_compatible


def amplitude_range(top_offset=0):
    """Check 1 <= r <= N + top_offset for functions called as f(X, i, r, ...)"""
    def decorator(func):
        @functools.wraps(func)
        def wrapper(X, i, r, *args, **kwargs):
            if not 1 <= r <= X.N + top_offset:
                raise InvalidAmplitude(
                    f"amplitude {r} outside 1..{X.N + top_offset} for N={X.N}"
                )
            return func(X, i, r, *args, **kwargs)
        return wrapper
    return decorator


def same_category(func):
    """Both complex arguments must share N and field"""
    @functools.wraps(func)
    def wrapper(X, Y, *args, **kwargs):
        check_compatible(X, Y)
        return func(X, Y, *args, **kwargs)
    return wrapper
