"""Single-error-correcting [k+2, k, 3] codes from weighted-sum redundancy.

Codeword ``f`` in S_{k+r} carries its information order ``f|^[k]`` in the
values 1..k; the factoradic digit of value ``k + j`` is pinned to
``rho_j(f|^[k]) = sum (2i-1)^j f(i) mod m`` with ``m`` the prime in
``{k, k+1}``.  ``r = 2`` gives the distance-3 code with the O(k) decoder;
larger ``r`` gives the generalized family whose distance is only measured.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..codebook import Codebook, build_from_encoder
from ..errors import InvalidArgument, UncorrectableError
from ..perm import (
    Perm,
    adjacent_swap,
    as_perm,
    info_part,
    kendall_distance,
    phi,
    phi_inverse,
)


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    i = 2
    while i * i <= x:
        if x % i == 0:
            return False
        i += 1
    return True


def choose_modulus(k: int) -> int:
    if is_prime(k):
        return k
    if is_prime(k + 1):
        return k + 1
    raise InvalidArgument(f"neither {k} nor {k + 1} is prime")


@dataclass(frozen=True)
class RhoCodeSpec:
    k: int
    r: int = 2
    m: int | None = None

    def __post_init__(self):
        if self.k < 1 or self.r < 1:
            raise InvalidArgument("k and r must be positive")
        if self.m is None:
            object.__setattr__(self, "m", choose_modulus(self.k))
        if self.m not in (self.k, self.k + 1) or not is_prime(self.m):
            raise InvalidArgument(f"modulus {self.m} must be a prime in {{k, k+1}}")
        if self.r == 2 and self.k < 3:
            raise InvalidArgument("the two-redundancy code needs k >= 3")

    @property
    def n(self) -> int:
        return self.k + self.r


def rho(f_info: Perm, j: int, m: int) -> int:
    return sum((2 * i - 1) ** j * v for i, v in enumerate(f_info, start=1)) % m


def rho_encode(f_info: Perm, spec: RhoCodeSpec) -> Perm:
    f_info = as_perm(f_info)
    if len(f_info) != spec.k:
        raise InvalidArgument(f"information permutation must have length {spec.k}")
    digits = phi(f_info) + tuple(rho(f_info, j, spec.m) for j in range(1, spec.r + 1))
    return phi_inverse(digits)


def rho_code_build(spec: RhoCodeSpec) -> Codebook:
    """Enumerate all k! codewords.

    Only ``r = 2`` has a proved distance (3).  For other ``r`` the claimed
    distance is the measured one, marked ``d_source=measured`` in ``params``.
    """
    from ..oracle import min_distance

    cb = build_from_encoder(
        lambda f: rho_encode(f, spec),
        n=spec.n,
        k=spec.k,
        d=3,
        metric="kendall",
        construction_id="c1" if spec.r == 2 else "rho",
        params={"m": spec.m, "r": spec.r},
    )
    if spec.r == 2 or len(cb) < 2:
        return cb
    return replace(cb, d_claimed=min_distance(cb), params={**cb.params, "d_source": "measured"})


def c1_encode(f_info: Perm, spec: RhoCodeSpec) -> Perm:
    if spec.r != 2:
        raise InvalidArgument("c1 uses exactly two redundancy symbols")
    return rho_encode(f_info, spec)


@dataclass(frozen=True)
class C1Diagnosis:
    """Intermediate values of the fast decoder, kept for inspection.

    ``position`` is the recovered transposition index ``i`` (swap of info
    positions i, i+1), or ``None`` when the re-encoded word was already
    within distance 1.
    """

    received_info: Perm
    reencoded: Perm
    received_digits: tuple[int, int]
    reencoded_digits: tuple[int, int]
    position: int | None
    decoded: Perm


def c1_diagnose(g: Perm, spec: RhoCodeSpec) -> C1Diagnosis:
    g = as_perm(g)
    if spec.r != 2 or len(g) != spec.n:
        raise InvalidArgument(f"received word must lie in S_{spec.k + 2}")
    k, m = spec.k, spec.m
    g_info = info_part(g, k)
    g_hat = c1_encode(g_info, spec)
    dg, dh = phi(g)[k:], phi(g_hat)[k:]
    if kendall_distance(g_hat, g) <= 1:
        return C1Diagnosis(g_info, g_hat, dg, dh, None, g_info)

    diff1 = (dg[0] - dh[0]) % m
    diff2 = (dg[1] - dh[1]) % m
    if diff1 == 0:
        raise UncorrectableError("redundancy difference is zero; cannot locate the error")
    # diff2 = 4 i diff1 (mod m)
    i = diff2 * pow(4 * diff1, -1, m) % m
    if not 1 <= i <= k - 1:
        raise UncorrectableError(f"recovered transposition index {i} outside 1..{k - 1}")
    decoded = adjacent_swap(g_info, i)
    if kendall_distance(c1_encode(decoded, spec), g) > 1:
        raise UncorrectableError("corrected word is not within one transposition of the input")
    return C1Diagnosis(g_info, g_hat, dg, dh, i, decoded)


def c1_decode(g: Perm, spec: RhoCodeSpec) -> Perm:
    return c1_diagnose(g, spec).decoded
