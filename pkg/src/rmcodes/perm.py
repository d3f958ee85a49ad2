"""Permutation algebra for rank modulation.

Permutations are tuples of 1-based values in single-line notation, so
``(6, 1, 3, 5, 2, 4)`` sends 1 to 6, 2 to 1 and so on.  Factoradic vectors
are tuples ``(v_1, ..., v_n)`` with ``0 <= v_i <= i - 1``; the always-zero
leading digit is kept so that digit ``i`` sits at index ``i - 1``.

Ranks are 0-based and lexicographic on single-line notation.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from itertools import permutations as _itertools_permutations
from math import factorial

from .errors import InvalidArgument

Perm = tuple[int, ...]
Factoradic = tuple[int, ...]


def as_perm(seq: Iterable[int]) -> Perm:
    """Validate ``seq`` as a permutation of ``[n]`` and return it as a tuple."""
    f = tuple(int(x) for x in seq)
    n = len(f)
    if n < 1:
        raise InvalidArgument("a permutation needs at least one entry")
    if sorted(f) != list(range(1, n + 1)):
        raise InvalidArgument(f"{list(f)} is not a permutation of 1..{n}")
    return f


def as_index_set(members: Iterable[int], n: int) -> tuple[int, ...]:
    a = tuple(sorted(set(int(x) for x in members)))
    if not a:
        raise InvalidArgument("index set must be nonempty")
    if a[0] < 1 or a[-1] > n:
        raise InvalidArgument(f"index set {list(a)} not contained in 1..{n}")
    return a


def as_factoradic(digits: Iterable[int]) -> Factoradic:
    v = tuple(int(x) for x in digits)
    if not v:
        raise InvalidArgument("factoradic vector must be nonempty")
    for i, vi in enumerate(v, start=1):
        if not 0 <= vi <= i - 1:
            raise InvalidArgument(f"digit {i} = {vi} outside Z_{i}")
    return v


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_perms(n: int) -> Iterator[Perm]:
    """S_n in lexicographic order."""
    return _itertools_permutations(range(1, n + 1))


def inverse(f: Sequence[int]) -> Perm:
    inv = [0] * len(f)
    for i, v in enumerate(f, start=1):
        inv[v - 1] = i
    return tuple(inv)


def _relabel(values: Sequence[int]) -> Perm:
    """Replace each value by its rank among ``values`` (1-based)."""
    order = {v: r for r, v in enumerate(sorted(values), start=1)}
    return tuple(order[v] for v in values)


def project_coords(f: Sequence[int], a: Iterable[int]) -> Perm:
    """Keep the coordinates of ``f`` listed in ``a`` and relabel to ``[m]``."""
    idx = as_index_set(a, len(f))
    return _relabel([f[i - 1] for i in idx])


def project_values(f: Sequence[int], a: Iterable[int]) -> Perm:
    """Keep the values of ``f`` that lie in ``a`` (in their order) and relabel."""
    keep = set(as_index_set(a, len(f)))
    return _relabel([v for v in f if v in keep])


def info_part(f: Sequence[int], k: int) -> Perm:
    """``project_values(f, [k])`` without building the index set."""
    return tuple(v for v in f if v <= k)


def _count_inversions(seq: list[int]) -> int:
    """Merge sort that counts inversions; sorts ``seq`` in place."""
    n = len(seq)
    if n < 2:
        return 0
    mid = n // 2
    left, right = seq[:mid], seq[mid:]
    count = _count_inversions(left) + _count_inversions(right)
    i = j = k = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            seq[k] = left[i]
            i += 1
        else:
            seq[k] = right[j]
            j += 1
            count += len(left) - i
        k += 1
    seq[k:] = left[i:] + right[j:]
    return count


def _check_same_length(f: Sequence[int], g: Sequence[int]) -> None:
    if len(f) != len(g):
        raise InvalidArgument(f"length mismatch: {len(f)} vs {len(g)}")


def kendall_distance(f: Sequence[int], g: Sequence[int]) -> int:
    """Number of adjacent transpositions needed to turn ``f`` into ``g``.

    Counts inversions of ``g^{-1} o f``, i.e. value pairs whose relative order
    differs, in O(n log n).
    """
    _check_same_length(f, g)
    pos_in_g = inverse(g)
    return _count_inversions([pos_in_g[v - 1] for v in f])


def linf_distance(f: Sequence[int], g: Sequence[int]) -> int:
    _check_same_length(f, g)
    return max((abs(a - b) for a, b in zip(f, g)), default=0)


def l1_distance(u: Sequence[int], w: Sequence[int]) -> int:
    _check_same_length(u, w)
    return sum(abs(a - b) for a, b in zip(u, w))


def phi(f: Sequence[int]) -> Factoradic:
    """Factoradic (inversion table) of ``f``.

    Digit ``i`` counts the values smaller than ``i`` that appear to the right
    of ``i``.  Uses a Fenwick tree over values seen while scanning right to
    left.
    """
    n = len(f)
    tree = [0] * (n + 1)
    v = [0] * n
    for x in reversed(f):
        # smaller values already seen (i.e. to the right)
        s, j = 0, x - 1
        while j > 0:
            s += tree[j]
            j -= j & -j
        v[x - 1] = s
        j = x
        while j <= n:
            tree[j] += 1
            j += j & -j
    return tuple(v)


def phi_inverse(v: Sequence[int]) -> Perm:
    """Insert 1, 2, ..., n so that value ``i`` has ``v_i`` placed values to its right."""
    v = as_factoradic(v)
    out: list[int] = []
    for i, vi in enumerate(v, start=1):
        out.insert(len(out) - vi, i)
    return tuple(out)


def rank(f: Sequence[int]) -> int:
    """Lexicographic rank of ``f`` in S_n (0-based)."""
    f = as_perm(f)
    n = len(f)
    r = 0
    for i, x in enumerate(f):
        smaller_right = sum(1 for y in f[i + 1:] if y < x)
        r += smaller_right * factorial(n - 1 - i)
    return r


def unrank(r: int, n: int) -> Perm:
    if n < 1:
        raise InvalidArgument("n must be positive")
    if not 0 <= r < factorial(n):
        raise InvalidArgument(f"rank {r} outside 0..{n}!-1")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        q, r = divmod(r, factorial(i))
        out.append(pool.pop(q))
    return tuple(out)


def adjacent_swap(f: Sequence[int], i: int) -> Perm:
    """Swap entries at 1-based positions ``i`` and ``i + 1``."""
    g = list(f)
    g[i - 1], g[i] = g[i], g[i - 1]
    return tuple(g)


def ball_enumerate(center: Sequence[int], r: int, metric: str = "kendall") -> set[Perm]:
    """All permutations within distance ``r`` of ``center``.

    Exponential in general; meant for small ``n`` as a ground-truth oracle.
    The Kendall variant grows the ball breadth-first over adjacent
    transpositions, the l-infinity variant filters S_n.
    """
    center = as_perm(center)
    if r < 0:
        raise InvalidArgument("radius must be nonnegative")
    if metric == "kendall":
        seen = {center}
        frontier = deque([(center, 0)])
        while frontier:
            f, dist = frontier.popleft()
            if dist == r:
                continue
            for i in range(1, len(f)):
                g = adjacent_swap(f, i)
                if g not in seen:
                    seen.add(g)
                    frontier.append((g, dist + 1))
        return seen
    if metric == "linf":
        return {g for g in all_perms(len(center)) if linf_distance(center, g) <= r}
    raise InvalidArgument(f"unknown metric {metric!r}")
