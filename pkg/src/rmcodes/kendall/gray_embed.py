"""Systematic binary Hamming-metric codes pushed into S_n through two embeddings.

Each factoradic digit is Gray-mapped to ``lambda(i)`` bits (ceil(log2 i) for
information digits, floor(log2 i) for redundancy digits).  The concatenated
bits of a codeword form a codeword of the binary code, so Kendall distance
dominates Hamming distance of the bit images.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from ..codebook import Codebook, build_from_encoder
from ..errors import InfeasibleParameters, InvalidArgument, UncorrectableError
from ..perm import Perm, as_perm, phi, phi_inverse

Bits = tuple[int, ...]


def gray_map(value: int, m: int) -> Bits:
    """Binary-reflected Gray code of ``value`` as ``m`` bits, most significant first."""
    if not 0 <= value < 2**m:
        raise InvalidArgument(f"{value} outside Z_2^{m}")
    g = value ^ (value >> 1)
    return tuple((g >> (m - 1 - b)) & 1 for b in range(m))


def gray_unmap(bits: Sequence[int]) -> int:
    value = 0
    acc = 0
    for b in bits:
        acc ^= b
        value = (value << 1) | acc
    return value


def ceil_log2(i: int) -> int:
    return (i - 1).bit_length()


def floor_log2(i: int) -> int:
    return i.bit_length() - 1


@dataclass(frozen=True)
class BinaryCodeSpec:
    """Systematic binary linear code ``c = (u | u P)``, optionally shortened.

    ``parity`` is the k x (n-k) matrix ``P`` of the unshortened code.  With
    ``shorten_count = s`` the first ``s`` information bits are fixed to zero
    and dropped, giving an ``(n - s, k - s)`` code with the same ``d_min``.
    """

    parity: tuple[tuple[int, ...], ...]
    d_min: int
    shorten_count: int = 0
    name: str = "binary"

    @property
    def base_k(self) -> int:
        return len(self.parity)

    @property
    def r(self) -> int:
        return len(self.parity[0]) if self.parity else 0

    @property
    def k_bits(self) -> int:
        return self.base_k - self.shorten_count

    @property
    def n_bits(self) -> int:
        return self.k_bits + self.r

    def shortened(self, s: int) -> BinaryCodeSpec:
        if not 0 <= s < self.base_k:
            raise InvalidArgument(f"cannot shorten {s} of {self.base_k} information bits")
        return BinaryCodeSpec(self.parity, self.d_min, s, self.name)

    def encode(self, info: Sequence[int]) -> Bits:
        if len(info) != self.k_bits:
            raise InvalidArgument(f"expected {self.k_bits} information bits")
        rows = self.parity[self.shorten_count:]
        checks = [0] * self.r
        for bit, row in zip(info, rows):
            if bit:
                checks = [c ^ x for c, x in zip(checks, row)]
        return tuple(info) + tuple(checks)

    @cached_property
    def _coset_leaders(self) -> dict[Bits, Bits]:
        """Syndrome -> minimum-weight error, for weights up to (d_min-1)//2."""
        table: dict[Bits, Bits] = {}
        n = self.n_bits
        for w in range(0, (self.d_min - 1) // 2 + 1):
            for support in combinations(range(n), w):
                e = [0] * n
                for i in support:
                    e[i] = 1
                table.setdefault(self.syndrome(e), tuple(e))
        return table

    def syndrome(self, word: Sequence[int]) -> Bits:
        info, checks = word[: self.k_bits], word[self.k_bits:]
        return tuple(a ^ b for a, b in zip(self.encode(info)[self.k_bits:], checks))

    def decode(self, word: Sequence[int]) -> Bits:
        """Correct up to (d_min-1)//2 bit errors; returns the information bits."""
        if len(word) != self.n_bits:
            raise InvalidArgument(f"expected {self.n_bits} bits")
        e = self._coset_leaders.get(self.syndrome(word))
        if e is None:
            raise UncorrectableError("syndrome has no coset leader within the decoding radius")
        return tuple(a ^ b for a, b in zip(word, e))[: self.k_bits]


def hamming_code(r: int) -> BinaryCodeSpec:
    """The systematic (2^r - 1, 2^r - 1 - r, 3) Hamming code."""
    if r < 2:
        raise InvalidArgument("Hamming codes need r >= 2")
    # information columns: every r-bit pattern of weight >= 2
    cols = [
        tuple((x >> (r - 1 - b)) & 1 for b in range(r))
        for x in range(1, 2**r)
        if bin(x).count("1") >= 2
    ]
    return BinaryCodeSpec(tuple(cols), 3, 0, f"hamming{r}")


def repetition_code(n: int) -> BinaryCodeSpec:
    return BinaryCodeSpec(((1,) * (n - 1),), n, 0, f"repetition{n}")


@dataclass(frozen=True)
class GrayEmbedSpec:
    binary: BinaryCodeSpec
    n: int
    k: int

    def width(self, i: int) -> int:
        return ceil_log2(i) if i <= self.k else floor_log2(i)

    @property
    def d(self) -> int:
        return self.binary.d_min


def c4_find_params(binary: BinaryCodeSpec) -> GrayEmbedSpec:
    """Smallest shortening for which both length equations have a solution (k >= 2)."""
    base = binary.shortened(0) if binary.shorten_count else binary
    for s in range(base.base_k):
        code = base.shortened(s) if s else base
        k, total = 1, 0
        while total < code.k_bits:
            k += 1
            total += ceil_log2(k)
        if total != code.k_bits:
            continue
        n, red = k, 0
        while red < code.r:
            n += 1
            red += floor_log2(n)
        if red == code.r:
            return GrayEmbedSpec(code, n, k)
    raise InfeasibleParameters(f"no (k, n) matches {binary.name} under any shortening")


def bit_image(f: Perm, spec: GrayEmbedSpec, clamp: bool = False) -> Bits:
    bits: list[int] = []
    for i, v in enumerate(phi(f), start=1):
        w = spec.width(i)
        if clamp:
            v = min(v, 2**w - 1)
        bits.extend(gray_map(v, w))
    return tuple(bits)


def c4_encode(f_info: Perm, spec: GrayEmbedSpec) -> Perm:
    f_info = as_perm(f_info)
    if len(f_info) != spec.k:
        raise InvalidArgument(f"information permutation must have length {spec.k}")
    prefix = bit_image(f_info, spec)
    checks = spec.binary.encode(prefix)[len(prefix):]
    digits = list(phi(f_info))
    pos = 0
    for i in range(spec.k + 1, spec.n + 1):
        w = spec.width(i)
        digits.append(gray_unmap(checks[pos:pos + w]))
        pos += w
    return phi_inverse(digits)


def c4_decode(g: Perm, spec: GrayEmbedSpec) -> Perm:
    g = as_perm(g)
    if len(g) != spec.n:
        raise InvalidArgument(f"received word must lie in S_{spec.n}")
    info_bits = spec.binary.decode(bit_image(g, spec, clamp=True))
    digits, pos = [], 0
    for i in range(1, spec.k + 1):
        w = spec.width(i)
        v = gray_unmap(info_bits[pos:pos + w])
        if v > i - 1:
            raise UncorrectableError(f"corrected digit {i} = {v} exceeds radix")
        digits.append(v)
        pos += w
    return phi_inverse(digits)


def c4_build(spec: GrayEmbedSpec) -> Codebook:
    return build_from_encoder(
        lambda f: c4_encode(f, spec),
        n=spec.n,
        k=spec.k,
        d=spec.d,
        metric="kendall",
        construction_id="c4",
        params={"binary": spec.binary.name, "shorten": spec.binary.shorten_count},
    )
