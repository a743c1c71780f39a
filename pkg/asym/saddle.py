"""
Saddle point of the Bell generating function.

xi_n is the positive root of xi * e^xi = n + 1. It is found by Newton
iteration in the overflow-free form xi <- xi - (xi - c e^{-xi}) / (1 + xi).
"""

import logging
import math

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE: float = 1e-12
MAX_ITERATIONS: int = 100


class XiConvergenceError(RuntimeError):
    """Raised when Newton iteration does not reach the residual tolerance."""


class AsymDomainError(ValueError):
    """Raised when an asymptotic quantity is requested outside its range."""


def _relative_residual(xi: float, target: float) -> float:
    return abs(xi * math.exp(xi) - target) / target


def solve_xi(n: int) -> float:
    """
    Unique positive root of xi * e^xi = n + 1.

    Args:
        n: Index (n >= 0)

    Returns:
        xi with |xi e^xi - (n+1)| / (n+1) <= 1e-12

    Raises:
        AsymDomainError: If n < 0
        XiConvergenceError: If the iteration cap is reached
    """
    if n < 0:
        raise AsymDomainError(f"need n >= 0, got n={n}")
    target = float(n + 1)
    xi = max(1.0, math.log(n + 1) - math.log(math.log(n + 2)))
    for _ in range(MAX_ITERATIONS):
        if _relative_residual(xi, target) <= RESIDUAL_TOLERANCE:
            return xi
        step = (xi - target * math.exp(-xi)) / (1.0 + xi)
        if step == 0.0:
            break
        xi -= step
    if _relative_residual(xi, target) <= RESIDUAL_TOLERANCE:
        return xi
    raise XiConvergenceError(f"Newton iteration for n={n} stalled at xi={xi!r}")


def xi_expansion(n: int) -> float:
    """
    Three-term expansion log n - log log n + log log n / log n.

    Args:
        n: Index (n >= 3, so that log log n > 0)

    Returns:
        The expansion value
    """
    if n < 3:
        raise AsymDomainError(f"need n >= 3, got n={n}")
    log_n = math.log(n)
    log_log_n = math.log(log_n)
    return log_n - log_log_n + log_log_n / log_n


def bell_ratio(n: int, h: int) -> float:
    """
    Leading factor (n+h)! / (n! xi_n^h) of B_{n+h} / B_n.

    Args:
        n: Index (n >= 2)
        h: Offset with |h| <= ceil(log n) + 3

    Returns:
        The ratio; exactly 1.0 for h = 0
    """
    if n < 2:
        raise AsymDomainError(f"need n >= 2, got n={n}")
    limit = math.ceil(math.log(n)) + 3
    if abs(h) > limit:
        raise AsymDomainError(f"|h|={abs(h)} exceeds {limit} for n={n}")
    if h == 0:
        return 1.0
    xi = solve_xi(n)
    ratio = 1.0
    if h > 0:
        for i in range(1, h + 1):
            ratio *= (n + i) / xi
    else:
        for i in range(-h):
            ratio *= xi / (n - i)
    return ratio
