"""Plain-text codebook and spec files.

Codebook file::

    # rmcodes codebook v1
    # metric=kendall
    # construction=c1
    # n=6
    # k=4
    # d=3
    # m=5
    # order=lex
    1 2 3 4 5 6
    ...

A spec file has the same header under ``# rmcodes spec v1`` and no body; it
is written when a code is too large to enumerate.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from .codebook import Codebook
from .errors import InvalidArgument

CODEBOOK_MAGIC = "# rmcodes codebook v1"
SPEC_MAGIC = "# rmcodes spec v1"
_CORE_KEYS = ("metric", "construction", "n", "k", "d")


class MalformedFile(InvalidArgument):
    pass


def format_perm(f: Iterable[int]) -> str:
    return " ".join(str(x) for x in f)


def _header_lines(core: Mapping[str, object], params: Mapping[str, object]) -> list[str]:
    lines = [f"# {key}={core[key]}" for key in _CORE_KEYS]
    lines += [f"# {key}={params[key]}" for key in sorted(params)]
    lines.append("# order=lex")
    return lines


def dump_codebook(cb: Codebook) -> str:
    core = {"metric": cb.metric, "construction": cb.construction_id, "n": cb.n, "k": cb.k, "d": cb.d_claimed}
    lines = [CODEBOOK_MAGIC, *_header_lines(core, cb.params)]
    lines += [format_perm(c) for c in cb.codewords]
    return "\n".join(lines) + "\n"


def dump_spec(core: Mapping[str, object], params: Mapping[str, object]) -> str:
    return "\n".join([SPEC_MAGIC, *_header_lines(core, params)]) + "\n"


def _coerce(value: str) -> int | str:
    try:
        return int(value)
    except ValueError:
        return value


def parse_header(lines: list[str]) -> tuple[dict[str, int | str], int]:
    """Return header key/values and the index of the first body line."""
    header: dict[str, int | str] = {}
    i = 1
    while i < len(lines) and lines[i].startswith("#"):
        body = lines[i][1:].strip()
        if "=" not in body:
            raise MalformedFile(f"line {i + 1}: header line without key=value")
        key, value = body.split("=", 1)
        header[key.strip()] = _coerce(value.strip())
        i += 1
    missing = [key for key in _CORE_KEYS if key not in header]
    if missing:
        raise MalformedFile(f"header lacks {', '.join(missing)}")
    return header, i


def load_codebook(text: str) -> Codebook:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CODEBOOK_MAGIC:
        if lines and lines[0].strip() == SPEC_MAGIC:
            raise MalformedFile("this is a spec file; it has no codewords to load")
        raise MalformedFile(f"first line must be {CODEBOOK_MAGIC!r}")
    header, start = parse_header(lines)
    words = []
    for lineno, line in enumerate(lines[start:], start=start + 1):
        if not line.strip():
            continue
        try:
            words.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise MalformedFile(f"line {lineno}: non-integer entry") from None
    params = {key: v for key, v in header.items() if key not in _CORE_KEYS and key != "order"}
    try:
        return Codebook(
            n=int(header["n"]),
            k=int(header["k"]),
            d_claimed=int(header["d"]),
            metric=str(header["metric"]),
            construction_id=str(header["construction"]),
            codewords=tuple(words),
            params=params,
        )
    except (InvalidArgument, ValueError) as exc:
        raise MalformedFile(str(exc)) from None
