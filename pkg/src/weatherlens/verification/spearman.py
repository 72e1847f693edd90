"""Spearman rank correlation with a Student-t significance test.

The p-value uses the standard t approximation: t = rho * sqrt((n-2) /
(1-rho^2)) referred to a t distribution with n-2 degrees of freedom. The
t tail is evaluated through the regularized incomplete beta function
(continued-fraction form), so the package needs no external stats library.
"""

from __future__ import annotations

import math

import numpy as np

from ..exceptions import UndefinedStatisticError


def midranks(values) -> np.ndarray:
    """Ranks 1..n with ties given the average of their positions."""
    v = np.asarray(values, dtype=float)
    order = np.argsort(v, kind="stable")
    ranks = np.empty(len(v), dtype=float)
    sv = v[order]
    i = 0
    while i < len(sv):
        j = i
        while j + 1 < len(sv) and sv[j + 1] == sv[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def spearman_rho(x, y) -> float:
    """Pearson correlation of mid-ranks."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError("x and y must be 1-D with equal length")
    n = len(x)
    if n < 3:
        raise UndefinedStatisticError(f"need at least 3 pairs, got {n}")
    rx, ry = midranks(x), midranks(y)
    rx -= rx.mean()
    ry -= ry.mean()
    sx2 = float(rx @ rx)
    sy2 = float(ry @ ry)
    if sx2 == 0.0 or sy2 == 0.0:
        raise UndefinedStatisticError("zero rank variance")
    rho = float(rx @ ry) / math.sqrt(sx2 * sy2)
    return max(-1.0, min(1.0, rho))


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta function (Lentz's method)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 300):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            return h
    raise UndefinedStatisticError("incomplete beta continued fraction did not converge")


def betainc_regularized(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def student_t_two_sided(t: float, df: float) -> float:
    """P(|T_df| >= |t|)."""
    if df <= 0:
        raise ValueError("degrees of freedom must be positive")
    t = abs(float(t))
    return betainc_regularized(df / 2.0, 0.5, df / (df + t * t))


def spearman_pvalue(rho: float, n: int) -> float:
    """Two-sided p-value for an observed Spearman rho with n pairs."""
    if n < 4:
        raise UndefinedStatisticError(f"p-value needs n >= 4, got {n}")
    if not -1.0 <= rho <= 1.0:
        raise ValueError(f"rho {rho} outside [-1, 1]")
    if abs(rho) == 1.0:
        return 0.0
    t = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
    return student_t_two_sided(t, n - 2)
