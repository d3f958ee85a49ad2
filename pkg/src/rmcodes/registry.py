"""Uniform handles over every construction, keyed by construction id.

The CLI and the codebook verifier both need "give me the encoder and decoder
for construction X with these parameters"; the parameter names here are the
ones written to codebook file headers.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from math import factorial

from . import kendall, linf
from .codebook import Codebook, build_from_encoder
from .errors import InvalidArgument
from .perm import Perm

CONSTRUCTIONS = ("c1", "c2", "rho", "c3", "c4", "c5", "c6", "c7")
ENUMERATION_LIMIT = factorial(8)


@dataclass
class CodeHandle:
    construction: str
    n: int
    k: int
    d: int
    metric: str
    params: dict[str, int | str]
    encode: Callable[[Perm], Perm] | None
    decode: Callable[[Perm], Perm] | None
    builder: Callable[[], Codebook] | None = field(default=None, repr=False)

    @property
    def enumerable(self) -> bool:
        return factorial(self.k) <= ENUMERATION_LIMIT

    def build(self) -> Codebook:
        if self.builder is not None:
            return self.builder()
        return build_from_encoder(
            self.encode,
            n=self.n,
            k=self.k,
            d=self.d,
            metric=self.metric,
            construction_id=self.construction,
            params=self.params,
        )

    def core(self) -> dict[str, int | str]:
        return {"metric": self.metric, "construction": self.construction, "n": self.n, "k": self.k, "d": self.d}


def parse_binary(name: str) -> kendall.BinaryCodeSpec:
    m = re.fullmatch(r"(hamming|repetition)(\d+)", name)
    if not m:
        raise InvalidArgument(f"unknown binary code {name!r}; use hammingR or repetitionN")
    family, size = m.group(1), int(m.group(2))
    return kendall.hamming_code(size) if family == "hamming" else kendall.repetition_code(size)


def _need(params: Mapping[str, object], *keys: str) -> list[int]:
    missing = [key for key in keys if params.get(key) is None]
    if missing:
        raise InvalidArgument(f"missing parameter(s): {', '.join(missing)}")
    try:
        return [int(params[key]) for key in keys]
    except (TypeError, ValueError):
        raise InvalidArgument(f"parameters {keys} must be integers") from None


def make_handle(construction: str, params: Mapping[str, object]) -> CodeHandle:
    if construction in ("c1", "rho"):
        (k,) = _need(params, "k")
        r = 2 if construction == "c1" else _need(params, "r")[0]
        spec = kendall.RhoCodeSpec(k, r, params.get("m") and int(params["m"]))
        handle = CodeHandle(construction, spec.n, k, 3, "kendall", {"m": spec.m, "r": r},
                            lambda f: kendall.rho_encode(f, spec), None)
        if r == 2:
            handle.decode = lambda g: kendall.c1_decode(g, spec)
        else:
            handle.builder = lambda: kendall.rho_code_build(spec)
            if "d" in params and params.get("d_source") == "measured":
                handle.d = int(params["d"])
        return handle
    if construction == "c2":
        (k,) = _need(params, "k")
        spec = kendall.GW2CodeSpec(k)
        return CodeHandle("c2", spec.n, k, 3, "kendall", {},
                          lambda f: kendall.c2_encode(f, spec), lambda g: kendall.c2_decode(g, spec))
    if construction == "c3":
        p, m, t, bch_n = _need(params, "p", "m", "t", "bch_n")
        spec = kendall.c3_build(p, m, t, bch_n)
        return CodeHandle("c3", spec.length, spec.k + 1, 2 * t + 2, "kendall",
                          {"p": p, "m": m, "t": t, "bch_n": bch_n},
                          lambda f: kendall.c3_encode(f, spec), lambda g: kendall.c3_decode(g, spec))
    if construction == "c4":
        name = params.get("binary")
        if not name:
            raise InvalidArgument("missing parameter: binary")
        spec = kendall.c4_find_params(parse_binary(str(name)))
        return CodeHandle("c4", spec.n, spec.k, spec.d, "kendall",
                          {"binary": str(name), "shorten": spec.binary.shorten_count},
                          lambda f: kendall.c4_encode(f, spec), lambda g: kendall.c4_decode(g, spec))
    if construction == "c5":
        n, k, d = _need(params, "n", "k", "d")
        if not 2 <= k < n or d < 1:
            raise InvalidArgument("need 2 <= k < n and d >= 1")
        handle = CodeHandle("c5", n, k, d, "kendall", {}, None, None,
                            builder=lambda: kendall.c5_greedy(n, k, d))
        return handle
    if construction == "c6":
        n, d, k = _need(params, "n", "d", "k")
        spec = linf.SpreadCodeSpec(n, d, k)
        return CodeHandle("c6", n, k, d, "linf", {},
                          lambda f: linf.c6_encode(f, spec), lambda g: linf.c6_decode(g, spec))
    if construction == "c7":
        inner_n, d = _need(params, "inner_n", "d")
        spec = linf.ConcatCodeSpec(inner_n, d)
        return CodeHandle("c7", spec.length, spec.k, d, "linf", {"inner_n": inner_n},
                          lambda f: linf.c7_encode(f, spec), lambda g: linf.c7_decode(g, spec))
    raise InvalidArgument(f"unknown construction {construction!r}; choose from {', '.join(CONSTRUCTIONS)}")


def handle_for_codebook(cb: Codebook) -> CodeHandle:
    """Rebuild the handle a codebook file was written from.

    Constructions without a structured decoder (greedy) fall back to
    nearest-codeword decoding over the codebook itself.
    """
    params = dict(cb.params)
    if cb.construction_id in ("c1", "c2", "rho"):
        params["k"] = cb.k
    elif cb.construction_id in ("c5", "c6"):
        params.update(n=cb.n, k=cb.k, d=cb.d_claimed)
    elif cb.construction_id == "c7":
        params["d"] = cb.d_claimed
    if cb.construction_id == "rho":
        params["d"] = cb.d_claimed
    if cb.construction_id == "c5":
        from .oracle import nearest_decoder

        return CodeHandle("c5", cb.n, cb.k, cb.d_claimed, cb.metric, {}, None, nearest_decoder(cb))
    return make_handle(cb.construction_id, params)
