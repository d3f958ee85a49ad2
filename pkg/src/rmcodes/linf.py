"""Systematic codes under the l-infinity metric.

Information lives in the relative order of the first ``k`` coordinates.
The spread code (``c6``) puts those coordinates on the values
``1, 1+d, 1+2d, ...``.  The concatenated code (``c7``) prefixes a permutation
of ``{n+1, ..., n+k}`` to a codeword of the residue code
``{f : f(i) = i (mod d)}``, pairing the two by rank.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from math import factorial

from .codebook import Codebook, build_from_encoder
from .errors import InvalidArgument, UncorrectableError
from .perm import Perm, as_perm, project_coords, rank, unrank


def _nearest(x: int, candidates: Sequence[int]) -> int:
    """Index of the candidate closest to ``x``; ties are uncorrectable."""
    best = sorted(range(len(candidates)), key=lambda j: abs(candidates[j] - x))
    if len(best) > 1 and abs(candidates[best[0]] - x) == abs(candidates[best[1]] - x):
        raise UncorrectableError(f"value {x} is midway between two candidates")
    return best[0]


@dataclass(frozen=True)
class SpreadCodeSpec:
    n: int
    d: int
    k: int

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise InvalidArgument("need 1 <= d <= n")
        if not 1 <= self.k <= -(-self.n // self.d):
            raise InvalidArgument(f"k must lie in 1..ceil(n/d) = {-(-self.n // self.d)}")

    @property
    def anchor_set(self) -> tuple[int, ...]:
        return tuple(1 + j * self.d for j in range(self.k))

    @property
    def radius(self) -> int:
        return (self.d - 1) // 2


def c6_encode(f_info: Perm, spec: SpreadCodeSpec) -> Perm:
    f_info = as_perm(f_info)
    if len(f_info) != spec.k:
        raise InvalidArgument(f"information permutation must have length {spec.k}")
    anchors = spec.anchor_set
    head = [anchors[v - 1] for v in f_info]
    used = set(head)
    return tuple(head + [v for v in range(1, spec.n + 1) if v not in used])


def c6_decode(g: Perm, spec: SpreadCodeSpec) -> Perm:
    g = as_perm(g)
    if len(g) != spec.n:
        raise InvalidArgument(f"received word must lie in S_{spec.n}")
    anchors = spec.anchor_set
    idx = [_nearest(x, anchors) for x in g[: spec.k]]
    if len(set(idx)) != spec.k:
        raise UncorrectableError("two information coordinates round to the same anchor")
    return tuple(j + 1 for j in idx)


def c6_build(spec: SpreadCodeSpec) -> Codebook:
    return build_from_encoder(
        lambda f: c6_encode(f, spec),
        n=spec.n,
        k=spec.k,
        d=spec.d,
        metric="linf",
        construction_id="c6",
    )


def inner_code_size(n: int, d: int) -> int:
    """Size of ``{f in S_n : f(i) = i (mod d)}``."""
    if not 1 <= d <= n:
        raise InvalidArgument("need 1 <= d <= n")
    q, rem = divmod(n, d)
    return factorial(q + 1) ** rem * factorial(q) ** (d - rem)


def largest_k(size: int) -> int:
    """Largest ``k`` with ``k! <= size``, by exact factorial growth."""
    k, fact = 1, 1
    while fact * (k + 1) <= size:
        k += 1
        fact *= k
    return k


@dataclass(frozen=True)
class ConcatCodeSpec:
    n: int
    d: int

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise InvalidArgument("need 1 <= d <= n")

    @cached_property
    def inner_size(self) -> int:
        return inner_code_size(self.n, self.d)

    @cached_property
    def k(self) -> int:
        return largest_k(self.inner_size)

    @property
    def length(self) -> int:
        return self.n + self.k

    @property
    def radius(self) -> int:
        return (self.d - 1) // 2

    def residue_class(self, r: int) -> list[int]:
        """Positions (equivalently values) congruent to ``r`` mod d, ``r`` in 1..d."""
        return list(range(r, self.n + 1, self.d))


def inner_rank(c: Perm, spec: ConcatCodeSpec) -> int:
    """Mixed-radix rank over residue classes 1..d; class 1 is most significant."""
    c = as_perm(c)
    if len(c) != spec.n or any((v - i) % spec.d for i, v in enumerate(c, start=1)):
        raise InvalidArgument("word violates f(i) = i (mod d)")
    total = 0
    for r in range(1, spec.d + 1):
        positions = spec.residue_class(r)
        total = total * factorial(len(positions)) + rank(project_coords(c, positions))
    return total


def inner_unrank(i: int, spec: ConcatCodeSpec) -> Perm:
    if not 0 <= i < spec.inner_size:
        raise InvalidArgument(f"index {i} outside 0..{spec.inner_size - 1}")
    out = [0] * spec.n
    for r in range(spec.d, 0, -1):
        positions = spec.residue_class(r)
        i, local = divmod(i, factorial(len(positions)))
        for pos, rel in zip(positions, unrank(local, len(positions))):
            out[pos - 1] = positions[rel - 1]
    return tuple(out)


def c7_encode(f_info: Perm, spec: ConcatCodeSpec) -> Perm:
    f_info = as_perm(f_info)
    if len(f_info) != spec.k:
        raise InvalidArgument(f"information permutation must have length {spec.k}")
    i = rank(f_info)
    return tuple(v + spec.n for v in unrank(i, spec.k)) + inner_unrank(i, spec)


def c7_decode(g: Perm, spec: ConcatCodeSpec) -> Perm:
    g = as_perm(g)
    if len(g) != spec.length:
        raise InvalidArgument(f"received word must lie in S_{spec.length}")
    suffix = []
    for j, x in enumerate(g[spec.k:], start=1):
        cls = spec.residue_class((j - 1) % spec.d + 1)
        suffix.append(cls[_nearest(x, cls)])
    if sorted(suffix) != list(range(1, spec.n + 1)):
        raise UncorrectableError("rounded suffix is not a permutation")
    i = inner_rank(tuple(suffix), spec)
    if i >= factorial(spec.k):
        raise UncorrectableError(f"inner index {i} is not paired with any information word")
    return unrank(i, spec.k)


def c7_build(spec: ConcatCodeSpec) -> Codebook:
    return build_from_encoder(
        lambda f: c7_encode(f, spec),
        n=spec.length,
        k=spec.k,
        d=spec.d,
        metric="linf",
        construction_id="c7",
        params={"inner_n": spec.n},
    )


def code_rate(size: int, n: int) -> float:
    """``log2(size) / n`` in double precision; ``math.log2`` is exact enough for big ints."""
    if size < 1 or n < 1:
        raise InvalidArgument("need size >= 1 and n >= 1")
    return math.log2(size) / n
