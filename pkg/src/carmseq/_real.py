"""Sign decisions for real expressions via mpmath interval arithmetic.

Thresholds like 7*sqrt(n log k) are irrational, so comparisons are decided
on an enclosing interval; precision is raised until the interval excludes 0.
"""
from __future__ import annotations

import threading
from typing import Callable

from mpmath import iv

PRECISIONS = (128, 256, 1024)
_lock = threading.Lock()  # iv.prec is process-global


def sign(expr: Callable[[object], object]) -> int:
    """Sign of ``expr(iv)`` where expr builds an mpmath interval.

    Returns 0 only if the value is exactly zero at every precision tried
    (i.e. the enclosure collapses to the point 0).
    """
    with _lock:
        return _sign(expr)


def _sign(expr):
    saved = iv.prec
    try:
        for prec in PRECISIONS:
            iv.prec = prec
            x = expr(iv)
            if x.a > 0:
                return 1
            if x.b < 0:
                return -1
            if x.a == 0 and x.b == 0:
                return 0
    finally:
        iv.prec = saved
    raise ArithmeticError("sign undecided at maximum precision")


def less(lhs: Callable[[object], object], rhs: Callable[[object], object]) -> bool:
    return sign(lambda ctx: rhs(ctx) - lhs(ctx)) > 0
