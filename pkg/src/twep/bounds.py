"""Closed-form coding bounds, the adaptive-protocol guarantee, and rate curves.

Everything integer-valued here is computed with exact big-integer
arithmetic; the only floating point is in the asymptotic rate table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errorspace import count_errors

LOG2_3 = math.log2(3)


def _ceil_log2(value: int) -> int:
    """Smallest j with 2^j >= value, for value >= 1."""
    return (value - 1).bit_length()


def hamming_max_k(n: int, t: int) -> int:
    """Largest k >= 1 with 2^k * (number of weight<=t errors) <= 2^n, the
    sphere-packing limit; -1 when not even one protected pair fits."""
    if t > n:
        raise ValueError(f"t={t} exceeds n={n}")
    total = count_errors(n, t, 2)
    for k in range(n, 0, -1):
        if (total << k) <= (1 << n):
            return k
    return -1


def singleton_max_k(n: int, t: int) -> int:
    """Linear-bound limit n - 4t, floored at the -1 sentinel."""
    k = n - 4 * t
    return k if k >= 0 else -1


def gv_k(n: int, t: int) -> int:
    """Existence guarantee for one-way codes: largest k with
    2^(n-k) >= number of weight<=2t errors."""
    if 2 * t > n:
        raise ValueError(f"gv_k needs 2t <= n, got t={t}, n={n}")
    return n - _ceil_log2(count_errors(n, 2 * t, 2))


def thm2_k(n: int, t: int) -> int:
    """Guarantee of the greedy two-way protocol: n - ceil(log2 |errors|) - 2.

    May be negative, meaning the generic guarantee is vacuous for these
    parameters; callers must treat negatives as 'no guarantee'.
    """
    if t > n:
        raise ValueError(f"t={t} exceeds n={n}")
    return n - _ceil_log2(count_errors(n, t, 2)) - 2


def mi_sequence(length: int) -> list[int]:
    """Worst-case survivor-count thresholds for the greedy bisection.

    m_0 = 1 and m_i is the largest integer m with (m + sqrt(m))/2 at most
    m_{i-1} + 1.  The square root is eliminated: with B = 2 m_{i-1} + 2 the
    test is m <= B and m <= (B - m)^2, exact in integers (the boundary case
    m=4, B=6 is an equality a float sqrt could misclassify).
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    seq = [1]
    while len(seq) < length:
        bound = 2 * seq[-1] + 2

        def feasible(m: int) -> bool:
            return m <= (bound - m) * (bound - m)

        lo, hi = 1, bound
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if feasible(mid):
                lo = mid
            else:
                hi = mid - 1
        seq.append(lo)
    return seq


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def two_way_rate_raw(x: float) -> float:
    """Unclamped asymptotic two-way rate 1 - x log2 3 - h(x)."""
    return 1.0 - x * LOG2_3 - binary_entropy(x)


def one_way_gv_rate_raw(x: float) -> float:
    """Unclamped one-way existence rate 1 - 2x log2 3 - h(2x)."""
    return 1.0 - 2.0 * x * LOG2_3 - binary_entropy(2.0 * x)


@dataclass(frozen=True)
class RatePoint:
    """Asymptotic achievable-rate sample at error fraction x = t/n."""

    x: float
    rate_2epp: float
    rate_gv: float
    h: float


def rate_table(points: int) -> list[RatePoint]:
    """Evenly spaced samples of the two rate curves on [0, 1/2], clamped to
    [0, 1]: the adaptive two-way rate 1 - x log2 3 - h(x) and the one-way
    existence rate 1 - 2x log2 3 - h(2x)."""
    if points < 2:
        raise ValueError("points must be >= 2")
    table = []
    for i in range(points):
        x = 0.5 * i / (points - 1)
        r2 = min(1.0, max(0.0, two_way_rate_raw(x)))
        rg = min(1.0, max(0.0, one_way_gv_rate_raw(x)))
        table.append(
            RatePoint(x=x, rate_2epp=r2, rate_gv=rg, h=binary_entropy(x))
        )
    return table


@dataclass(frozen=True)
class BoundsRow:
    """All bound values for one (n, t); gv_k is None where 2t > n."""

    n: int
    t: int
    hamming_k: int
    singleton_k: int
    gv_k: int | None
    thm2_k: int


def bounds_table(n_values: list[int], t_values: list[int]) -> list[BoundsRow]:
    """Grid of bounds, n-major then t-minor order."""
    rows = []
    for n in n_values:
        for t in t_values:
            if t > n:
                continue
            rows.append(
                BoundsRow(
                    n=n,
                    t=t,
                    hamming_k=hamming_max_k(n, t),
                    singleton_k=singleton_max_k(n, t),
                    gv_k=gv_k(n, t) if 2 * t <= n else None,
                    thm2_k=thm2_k(n, t),
                )
            )
    return rows


def bounds_csv(rows: list[BoundsRow]) -> str:
    lines = ["n,t,hamming_k,singleton_k,gv_k,thm2_k"]
    for r in rows:
        gv = "" if r.gv_k is None else str(r.gv_k)
        lines.append(f"{r.n},{r.t},{r.hamming_k},{r.singleton_k},{gv},{r.thm2_k}")
    return "\n".join(lines) + "\n"


def rates_csv(table: list[RatePoint]) -> str:
    lines = ["x,rate_2epp,rate_gv"]
    for p in table:
        lines.append(f"{p.x!r},{p.rate_2epp!r},{p.rate_gv!r}")
    return "\n".join(lines) + "\n"
