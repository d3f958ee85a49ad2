from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field

from .errors import InvalidArgument
from .perm import Perm, all_perms, as_perm, info_part, project_coords

METRICS = ("kendall", "linf")


@dataclass(frozen=True)
class Codebook:
    """An explicit permutation code plus the metadata it was built with.

    ``params`` carries construction-specific values (prime modulus, field
    size, ...) so a decoder can be rebuilt from a codebook file.  Content is
    not validated beyond each codeword being a permutation of ``[n]``:
    the oracle module is what decides whether a codebook is any good.
    """

    n: int
    k: int
    d_claimed: int
    metric: str
    construction_id: str
    codewords: tuple[Perm, ...]
    params: Mapping[str, int | str] = field(default_factory=dict)

    def __post_init__(self):
        if self.metric not in METRICS:
            raise InvalidArgument(f"metric must be one of {METRICS}")
        for c in self.codewords:
            if len(c) != self.n:
                raise InvalidArgument(f"codeword {list(c)} does not have length {self.n}")
            as_perm(c)

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def information(self, c: Perm) -> Perm:
        """The information permutation carried by ``c`` under this metric."""
        if self.metric == "kendall":
            return info_part(c, self.k)
        return project_coords(c, range(1, self.k + 1))


def build_from_encoder(
    encode: Callable[[Perm], Perm],
    *,
    n: int,
    k: int,
    d: int,
    metric: str,
    construction_id: str,
    params: Mapping[str, int | str] | None = None,
    infos: Iterable[Perm] | None = None,
) -> Codebook:
    """Encode every information permutation of S_k, in lexicographic order."""
    words = tuple(encode(f) for f in (all_perms(k) if infos is None else infos))
    return Codebook(n, k, d, metric, construction_id, words, dict(params or {}))
