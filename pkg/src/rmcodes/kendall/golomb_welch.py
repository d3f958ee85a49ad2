"""[k+2, k, 3] codes embedded from the perfect Golomb-Welch Lee-sphere code.

The trailing k+1 factoradic digits ``x`` of every codeword satisfy
``sum i * x_i = 0 (mod 2k+3)``; the first k-1 of them are free and the last
two are the quotient and remainder of ``s_{k-1}(2x)`` by 3.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..codebook import Codebook, build_from_encoder
from ..errors import InvalidArgument, UncorrectableError
from ..perm import Perm, as_perm, phi, phi_inverse


@dataclass(frozen=True)
class GW2CodeSpec:
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise InvalidArgument("the c2 code needs k >= 2")

    @property
    def modulus(self) -> int:
        return 2 * self.k + 3

    @property
    def n(self) -> int:
        return self.k + 2


def gw_syndrome(x: Sequence[int], k: int, upto: int | None = None) -> int:
    """``s_upto(x) = sum_{i <= upto} i * x_i mod (2k+3)``; ``upto`` defaults to ``len(x)``."""
    upto = len(x) if upto is None else upto
    return sum(i * xi for i, xi in enumerate(x[:upto], start=1)) % (2 * k + 3)


def c2_encode(f_info: Perm, spec: GW2CodeSpec) -> Perm:
    f_info = as_perm(f_info)
    k = spec.k
    if len(f_info) != k:
        raise InvalidArgument(f"information permutation must have length {k}")
    free = list(phi(f_info)[1:])
    s = gw_syndrome([2 * xi for xi in free], k, k - 1)
    return phi_inverse([0, *free, s // 3, s % 3])


def c2_decode(g: Perm, spec: GW2CodeSpec) -> Perm:
    g = as_perm(g)
    k = spec.k
    if len(g) != spec.n:
        raise InvalidArgument(f"received word must lie in S_{spec.n}")
    y = list(phi(g)[1:])
    sigma = gw_syndrome(y, k)
    if 1 <= sigma <= k + 1:
        y[sigma - 1] -= 1
        pos = sigma
    elif sigma:
        pos = spec.modulus - sigma
        y[pos - 1] += 1
    if sigma and not 0 <= y[pos - 1] <= pos:
        # y_j is factoradic digit j+1, radix j+1
        raise UncorrectableError(f"correction pushes digit {pos + 1} out of range")
    return phi_inverse([0, *y[: k - 1]])


def c2_build(spec: GW2CodeSpec) -> Codebook:
    return build_from_encoder(
        lambda f: c2_encode(f, spec),
        n=spec.n,
        k=spec.k,
        d=3,
        metric="kendall",
        construction_id="c2",
    )
