"""Ball sizes, packing and greedy-existence bounds for Kendall's tau metric.

Everything here is exact: Python ints for counts, ``Fraction`` for ratios.
The left side of the greedy-existence inequality outgrows 64-bit integers
already for moderate ``k`` and ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InvalidArgument


def max_distance(n: int) -> int:
    return n * (n - 1) // 2


def ball_size_exact(n: int, r: int) -> int:
    """Permutations of S_n within Kendall distance ``r`` of a fixed center.

    Partial coefficient sum of prod_{i=1}^{n} (1 + x + ... + x^{i-1}), with
    every intermediate polynomial truncated at degree ``r``.
    """
    if n < 1 or not 0 <= r <= max_distance(n):
        raise InvalidArgument(f"radius {r} outside 0..{max_distance(n)} for n = {n}")
    coeffs = [1] + [0] * r
    for i in range(2, n + 1):
        # multiply by 1 + x + ... + x^{i-1} via a sliding window sum
        new = [0] * (r + 1)
        window = 0
        for deg in range(r + 1):
            window += coeffs[deg]
            if deg >= i:
                window -= coeffs[deg - i]
            new[deg] = window
        coeffs = new
    return sum(coeffs)


def ball_size_upper(n: int, r: int) -> int:
    if n < 1 or not 0 <= r <= max_distance(n):
        raise InvalidArgument(f"radius {r} outside 0..{max_distance(n)} for n = {n}")
    return comb(n + r - 1, n - 1)


def _packing_radius(n: int, d: int) -> int:
    return min((d - 1) // 2, max_distance(n))


def packing_bound(n: int, d: int) -> int:
    if d < 1:
        raise InvalidArgument("d must be positive")
    return factorial(n) // ball_size_exact(n, _packing_radius(n, d))


def greedy_lhs(n: int, k: int, d: int) -> int:
    """Union-bound count of blocked completions for one information order."""
    red = n - k
    return sum(
        comb(k + i - 2, i) * comb(d - i - 1 + red, red) * 2 ** min(d - i - 1, red)
        for i in range(1, d)
    )


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    d: int
    r: int
    ball_exact: int
    ball_upper: int
    packing_bound: int
    gv_lhs: int
    gv_rhs: int
    gv_satisfied: bool

    def as_row(self) -> dict[str, int | bool]:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "r": self.r,
            "ball_exact": self.ball_exact,
            "ball_upper": self.ball_upper,
            "packing_bound": self.packing_bound,
            "gv_lhs": self.gv_lhs,
            "gv_rhs": self.gv_rhs,
            "gv_satisfied": self.gv_satisfied,
        }


def theorem2_check(n: int, k: int, d: int) -> BoundReport:
    """Evaluate the greedy-existence inequality ``lhs < n!/k!`` for [n, k, d]."""
    if not 2 <= k < n or d < 1:
        raise InvalidArgument("need 2 <= k < n and d >= 1")
    r = _packing_radius(n, d)
    exact = ball_size_exact(n, r)
    lhs = greedy_lhs(n, k, d)
    rhs = factorial(n) // factorial(k)
    return BoundReport(
        n=n,
        k=k,
        d=d,
        r=r,
        ball_exact=exact,
        ball_upper=ball_size_upper(n, r),
        packing_bound=factorial(n) // exact,
        gv_lhs=lhs,
        gv_rhs=rhs,
        gv_satisfied=lhs < rhs,
    )


def max_k_theorem2(n: int, d: int) -> int:
    """Largest ``k < n`` the greedy-existence inequality certifies, or 0."""
    if n <= 2 or d < 1:
        raise InvalidArgument("need n > 2 and d >= 1")
    for k in range(n - 1, 1, -1):
        if greedy_lhs(n, k, d) < factorial(n) // factorial(k):
            return k
    return 0


def psi(d: int, k: int) -> Fraction:
    if d < 2 or k < 2:
        raise InvalidArgument("need d >= 2 and k >= 2")
    s = sum(comb(k + i, i) * comb(2 * d - 1 - i, d) * 2 ** (d - i - 1) for i in range(1, d))
    return Fraction(factorial(k) * s, factorial(k + d))


def xi(d: int) -> Fraction:
    if d < 2:
        raise InvalidArgument("need d >= 2")
    return Fraction(comb(2 * d - 2, d) * 2 ** (d - 2), factorial(d - 1))


def capacity(regime: str, epsilon: Fraction | float | None = None) -> Fraction:
    """Capacity of systematic codes in the three distance regimes.

    ``linear``: d = O(n); ``polynomial``: d = Theta(n^{1+epsilon});
    ``quadratic``: d = Theta(n^2).
    """
    if regime == "linear":
        return Fraction(1)
    if regime == "quadratic":
        return Fraction(0)
    if regime == "polynomial":
        if epsilon is None:
            raise InvalidArgument("polynomial regime needs epsilon")
        eps = Fraction(epsilon)
        if not 0 < eps < 1:
            raise InvalidArgument("epsilon must lie strictly between 0 and 1")
        return 1 - eps
    raise InvalidArgument(f"unknown regime {regime!r}")
