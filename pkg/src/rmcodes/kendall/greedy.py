"""Gilbert-Varshamov style greedy search for [n, k, d] systematic codes."""

from __future__ import annotations

from math import factorial

from ..codebook import Codebook
from ..errors import ConstructionFailure, InvalidArgument
from ..perm import Perm, all_perms, info_part, kendall_distance, rank


def c5_greedy(n: int, k: int, d: int) -> Codebook:
    """Scan S_n lexicographically, keeping each permutation that is at distance
    >= d from every kept codeword and carries a fresh information order.

    A single pass is the same as restarting the scan at every step: a
    rejected candidate stays rejected once more codewords are added.
    """
    if not 2 <= k < n or d < 1:
        raise InvalidArgument("need 2 <= k < n and d >= 1")
    target = factorial(k)
    chosen: list[Perm] = []
    used_infos: set[Perm] = set()
    for f in all_perms(n):
        info = info_part(f, k)
        if info in used_infos:
            continue
        if all(kendall_distance(f, g) >= d for g in chosen):
            chosen.append(f)
            used_infos.add(info)
            if len(chosen) == target:
                break
    if len(chosen) < target:
        raise ConstructionFailure(
            f"greedy search stalled at {len(chosen)} of {target} codewords for [{n},{k},{d}]"
        )
    chosen.sort(key=lambda c: rank(info_part(c, k)))
    return Codebook(n, k, d, "kendall", "c5", tuple(chosen), {})


def c5_decode(g: Perm, codebook: Codebook) -> Perm:
    """Greedy codes have no structure to exploit; decode to the nearest codeword."""
    from ..oracle import nearest_codeword

    return info_part(nearest_codeword(g, codebook), codebook.k)
