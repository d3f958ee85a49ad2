"""[n+1, k+1, 2t+2] codes from a Lee-metric BCH code lifted by Construction A.

The parity-check matrix has rows ``alpha_i^j`` for ``j = 0..t``, each field
entry expanded to an m-column over Z_p.  Codewords are the permutations whose
factoradic reads ``(0 | u | uA mod p)`` where ``[I_k | A]`` generates the
p-ary code.  Decoding is a bounded-distance search over l1 error patterns of
weight at most ``t``, exact at the sizes this package is used for.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from ..codebook import Codebook, build_from_encoder
from ..errors import InvalidArgument, UncorrectableError
from ..perm import Perm, all_perms, as_perm, phi, phi_inverse
from .field import FieldContext, rref_mod_p
from .rho import is_prime


@dataclass(frozen=True)
class BchLatticeCodeSpec:
    context: FieldContext
    t: int
    n: int
    alphas: tuple[int, ...]
    H_expanded: tuple[tuple[int, ...], ...]
    k: int
    A: tuple[tuple[int, ...], ...]
    column_order: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.context.p

    @property
    def length(self) -> int:
        """Permutation length of a codeword."""
        return self.n + 1

    @property
    def redundancy(self) -> int:
        return self.n - self.k


def _expanded_parity_check(ctx: FieldContext, alphas: Sequence[int], t: int) -> list[list[int]]:
    rows = []
    for j in range(t + 1):
        cols = [ctx.to_vector(ctx.pow(a, j)) for a in alphas]
        rows.extend([col[c] for col in cols] for c in range(ctx.m))
    return rows


def c3_build(p: int, m: int, t: int, n: int, alphas: Sequence[int] | None = None) -> BchLatticeCodeSpec:
    if not is_prime(p):
        raise InvalidArgument(f"p = {p} is not prime")
    if m < 2:
        raise InvalidArgument("extension degree m must be at least 2")
    if not 1 <= t or 2 * t > p - 3:
        raise InvalidArgument(f"t = {t} outside 1..(p-3)/2 for p = {p}")
    lo, hi = max(p ** (m - 1), p + t * m - 1), p**m - 1
    if not lo <= n <= hi:
        raise InvalidArgument(f"n = {n} outside {lo}..{hi}")

    ctx = FieldContext.default(p, m)
    alphas = tuple(range(1, n + 1)) if alphas is None else tuple(alphas)
    if len(alphas) != n or len(set(alphas)) != n or not all(0 < a < ctx.order for a in alphas):
        raise InvalidArgument("alphas must be n distinct nonzero field elements")

    # Pivot from the right so the redundancy block lands in the trailing
    # coordinates whenever it can.
    H = _expanded_parity_check(ctx, alphas, t)
    _, pivots = rref_mod_p(H, p, range(n - 1, -1, -1))
    rank_h = len(pivots)
    k = n - rank_h
    free = sorted(set(range(n)) - set(pivots))
    column_order = tuple(free + sorted(pivots))
    alphas = tuple(alphas[c] for c in column_order)
    H = _expanded_parity_check(ctx, alphas, t)

    reduced, pivots = rref_mod_p(H, p, list(range(k, n)) + list(range(k)))
    assert sorted(pivots) == list(range(k, n))
    A = [[0] * rank_h for _ in range(k)]
    for row, c in zip(reduced, pivots):
        for j in range(k):
            A[j][c - k] = -row[j] % p
    if p > k + 2:
        raise InvalidArgument(f"p = {p} exceeds k + 2 = {k + 2}; redundancy digits would overflow")
    return BchLatticeCodeSpec(
        context=ctx,
        t=t,
        n=n,
        alphas=alphas,
        H_expanded=tuple(tuple(r) for r in H),
        k=k,
        A=tuple(tuple(r) for r in A),
        column_order=column_order,
    )


def c3_encode_digits(u: Sequence[int], spec: BchLatticeCodeSpec) -> Perm:
    """Encode the integer information vector ``u`` (digits 2..k+1)."""
    if len(u) != spec.k:
        raise InvalidArgument(f"information vector must have length {spec.k}")
    p = spec.p
    red = [sum(ui * spec.A[i][j] for i, ui in enumerate(u)) % p for j in range(spec.redundancy)]
    return phi_inverse([0, *u, *red])


def c3_encode(f_info: Perm, spec: BchLatticeCodeSpec) -> Perm:
    f_info = as_perm(f_info)
    if len(f_info) != spec.k + 1:
        raise InvalidArgument(f"information permutation must have length {spec.k + 1}")
    return c3_encode_digits(phi(f_info)[1:], spec)


def syndrome(x: Sequence[int], spec: BchLatticeCodeSpec) -> tuple[int, ...]:
    p = spec.p
    return tuple(sum(h * xi for h, xi in zip(row, x)) % p for row in spec.H_expanded)


def l1_error_patterns(n: int, t: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors of length ``n`` and l1 weight at most ``t``, lightest first."""
    yield (0,) * n
    for w in range(1, t + 1):
        for s in range(1, w + 1):
            for support in combinations(range(n), s):
                for mags in _compositions(w, s):
                    for signs in product((1, -1), repeat=s):
                        e = [0] * n
                        for pos, mag, sg in zip(support, mags, signs):
                            e[pos] = mag * sg
                        yield tuple(e)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def c3_decode(g: Perm, spec: BchLatticeCodeSpec) -> Perm:
    g = as_perm(g)
    if len(g) != spec.length:
        raise InvalidArgument(f"received word must lie in S_{spec.length}")
    y = phi(g)[1:]
    target = syndrome(y, spec)
    survivors = set()
    for e in l1_error_patterns(spec.n, spec.t):
        if syndrome(e, spec) != target:
            continue
        c = tuple(a - b for a, b in zip(y, e))
        # y[j-1] is factoradic digit j+1
        if all(0 <= cj <= j for j, cj in enumerate(c, start=1)):
            survivors.add(c)
    if len(survivors) != 1:
        raise UncorrectableError(f"{len(survivors)} codewords within l1 radius {spec.t}")
    (c,) = survivors
    return phi_inverse([0, *c[: spec.k]])


def c3_codebook(spec: BchLatticeCodeSpec) -> Codebook:
    return build_from_encoder(
        lambda f: c3_encode(f, spec),
        n=spec.length,
        k=spec.k + 1,
        d=2 * spec.t + 2,
        metric="kendall",
        construction_id="c3",
        params={"p": spec.p, "m": spec.context.m, "t": spec.t, "bch_n": spec.n},
        infos=all_perms(spec.k + 1),
    )


def min_lee_weight(spec: BchLatticeCodeSpec) -> int:
    """Minimum nonzero Lee weight of the p-ary code generated by ``[I_k | A]``.

    Enumerates all ``p**k`` codewords; keep ``k`` small.
    """
    p, k = spec.p, spec.k
    info = np.array(list(product(range(p), repeat=k)), dtype=np.int64)[1:]
    words = np.concatenate([info, info @ np.array(spec.A, dtype=np.int64) % p], axis=1)
    lee = np.minimum(words, p - words).sum(axis=1)
    return int(lee.min())
