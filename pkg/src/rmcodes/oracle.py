"""Brute-force ground truth for codebooks.

The pairwise Kendall scan does not reuse :func:`rmcodes.perm.kendall_distance`:
each codeword becomes a bitset over value pairs ``a < b`` (bit set when ``a``
precedes ``b``), and the distance of two codewords is the popcount of the XOR
of their bitsets.  That keeps the oracle independent of the merge-count path
it is used to check.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .codebook import Codebook
from .errors import InvalidArgument, RMCodesError
from .perm import Perm, ball_enumerate, kendall_distance, linf_distance

Decoder = Callable[[Perm], Perm]


def pair_order_bits(codewords) -> np.ndarray:
    """Pack the pairwise value order of each codeword into uint64 words."""
    words = np.asarray(codewords, dtype=np.int64)
    m, n = words.shape
    pos = np.empty_like(words)
    pos[np.arange(m)[:, None], words - 1] = np.arange(n)
    a, b = np.triu_indices(n, k=1)
    bits = pos[:, a] < pos[:, b]
    pad = (-bits.shape[1]) % 64
    if pad:
        bits = np.concatenate([bits, np.zeros((m, pad), dtype=bool)], axis=1)
    packed = np.packbits(bits, axis=1, bitorder="little")
    return packed.view(np.uint64)


def _row_minima(start: int, stop: int, data: np.ndarray, metric: str) -> int:
    best = np.iinfo(np.int64).max
    for i in range(start, stop):
        rest = data[i + 1:]
        if not len(rest):
            continue
        if metric == "kendall":
            dist = np.bitwise_count(rest ^ data[i]).sum(axis=1, dtype=np.int64)
        else:
            dist = np.abs(rest - data[i]).max(axis=1)
        best = min(best, int(dist.min()))
    return best


def min_distance(cb: Codebook, workers: int = 1) -> int:
    """Exact minimum pairwise distance under ``cb.metric``.

    With ``workers > 1`` the rows are split into contiguous chunks scanned in
    threads; the result is a plain minimum so it does not depend on the split.
    """
    if len(cb) < 2:
        raise InvalidArgument("minimum distance needs at least two codewords")
    if cb.metric == "kendall":
        data = pair_order_bits(cb.codewords)
    else:
        data = np.asarray(cb.codewords, dtype=np.int64)
    m = len(data)
    if workers <= 1 or m < 256:
        return _row_minima(0, m, data, cb.metric)
    # later rows are cheaper, so cut at equal pair counts rather than rows
    total = m * (m - 1) // 2
    cuts, acc = [0], 0
    for i in range(m):
        acc += m - 1 - i
        if len(cuts) < workers and acc * workers >= total * len(cuts):
            cuts.append(i + 1)
    cuts.append(m)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda ab: _row_minima(ab[0], ab[1], data, cb.metric), zip(cuts, cuts[1:]))
        return min(parts)


def sampled_min_distance(cb: Codebook, pairs: int, seed: int = 0) -> int:
    """Minimum over ``pairs`` random distinct pairs (for codebooks too big to scan)."""
    rng = np.random.default_rng(seed)
    m = len(cb)
    i = rng.integers(0, m, size=pairs)
    j = (i + rng.integers(1, m, size=pairs)) % m
    if cb.metric == "kendall":
        bits = pair_order_bits(cb.codewords)
        return int(np.bitwise_count(bits[i] ^ bits[j]).sum(axis=1).min())
    data = np.asarray(cb.codewords, dtype=np.int64)
    return int(np.abs(data[i] - data[j]).max(axis=1).min())


def check_systematic(cb: Codebook) -> bool:
    if len(cb) != factorial(cb.k):
        return False
    infos = {cb.information(c) for c in cb}
    return len(infos) == len(cb) and len(cb.codewords) == len(set(cb.codewords))


def linf_neighbourhood(center: Perm, r: int) -> Iterator[Perm]:
    """Permutations with every coordinate within ``r`` of ``center``."""
    n = len(center)
    used = [False] * (n + 1)
    out = [0] * n

    def extend(i: int):
        if i == n:
            yield tuple(out)
            return
        for v in range(max(1, center[i] - r), min(n, center[i] + r) + 1):
            if not used[v]:
                used[v] = True
                out[i] = v
                yield from extend(i + 1)
                used[v] = False

    return extend(0)


def neighbourhood(center: Perm, r: int, metric: str):
    if metric == "kendall":
        return sorted(ball_enumerate(center, r, "kendall"))
    return linf_neighbourhood(center, r)


@dataclass
class VerificationReport:
    construction_id: str
    n: int
    k: int
    d_claimed: int
    checks: list[str] = field(default_factory=list)
    measured_min_distance: int | None = None
    systematic_ok: bool | None = None
    decode_trials: int = 0
    decode_failures: list[tuple[Perm, Perm, object]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def distance_ok(self) -> bool | None:
        if self.measured_min_distance is None:
            return None
        return self.measured_min_distance >= self.d_claimed

    @property
    def decode_ok(self) -> bool | None:
        return None if "decode" not in self.checks else not self.decode_failures

    @property
    def passed(self) -> bool:
        return all(v is not False for v in (self.distance_ok, self.systematic_ok, self.decode_ok))


def exhaustive_decode_test(
    cb: Codebook,
    decoder: Decoder,
    radius: int,
    codewords=None,
    report: VerificationReport | None = None,
) -> VerificationReport:
    """Decode every word within ``radius`` of every codeword; failures are data.

    ``codewords`` restricts the sweep to a subset (e.g. a random sample).
    Failure entries are ``(codeword, received, decoder output or exception)``.
    """
    if report is None:
        report = VerificationReport(cb.construction_id, cb.n, cb.k, cb.d_claimed)
    start = time.perf_counter()
    report.checks.append("decode")
    for c in cb.codewords if codewords is None else codewords:
        want = cb.information(c)
        for g in neighbourhood(c, radius, cb.metric):
            report.decode_trials += 1
            try:
                got = decoder(g)
            except RMCodesError as exc:
                got = exc
            if got != want:
                report.decode_failures.append((c, g, got))
    report.elapsed += time.perf_counter() - start
    return report


def verify(
    cb: Codebook,
    checks=("distance", "systematic", "decode"),
    decoder: Decoder | None = None,
    radius: int | None = None,
    workers: int = 1,
) -> VerificationReport:
    report = VerificationReport(cb.construction_id, cb.n, cb.k, cb.d_claimed)
    start = time.perf_counter()
    if "distance" in checks:
        report.checks.append("distance")
        report.measured_min_distance = min_distance(cb, workers) if len(cb) > 1 else None
    if "systematic" in checks:
        report.checks.append("systematic")
        report.systematic_ok = check_systematic(cb)
    report.elapsed += time.perf_counter() - start
    if "decode" in checks:
        if decoder is None:
            decoder = nearest_decoder(cb)
        r = (cb.d_claimed - 1) // 2 if radius is None else radius
        exhaustive_decode_test(cb, decoder, r, report=report)
    return report


def nearest_codeword(g: Perm, cb: Codebook) -> Perm:
    dist = kendall_distance if cb.metric == "kendall" else linf_distance
    # min() keeps the first of equal keys, i.e. the lowest information rank
    return min(cb.codewords, key=lambda c: dist(c, g))


def nearest_decoder(cb: Codebook) -> Decoder:
    return lambda g: cb.information(nearest_codeword(g, cb))

