"""Group spec mini-language: cyclic:N, dihedral:N, sym:N, semidirect:P,M,K,
product:<spec>,<spec>, file:<path>."""

from __future__ import annotations

from pathlib import Path

from .cayley import from_cayley_table
from .groups import (
    FiniteGroup,
    GroupError,
    SemidirectParams,
    direct_product,
    make_cyclic,
    make_dihedral,
    make_semidirect_cyclic,
    make_symmetric,
)


class GroupSpecError(GroupError):
    """Malformed group spec string."""


def parse_group_spec(spec: str) -> FiniteGroup:
    group, rest = _parse(spec.strip())
    if rest:
        raise GroupSpecError(f"trailing text {rest!r} after group spec")
    return group


def _take_int(s: str) -> tuple[int, str]:
    i = 0
    while i < len(s) and s[i].isdigit():
        i += 1
    if i == 0:
        raise GroupSpecError(f"expected an integer at {s!r}")
    return int(s[:i]), s[i:]


def _expect(s: str, ch: str) -> str:
    if not s.startswith(ch):
        raise GroupSpecError(f"expected {ch!r} at {s!r}")
    return s[len(ch):]


def _parse(s: str) -> tuple[FiniteGroup, str]:
    if s.startswith("cyclic:"):
        n, rest = _take_int(s[len("cyclic:"):])
        return make_cyclic(n), rest
    if s.startswith("dihedral:"):
        n, rest = _take_int(s[len("dihedral:"):])
        return make_dihedral(n), rest
    if s.startswith("sym:"):
        n, rest = _take_int(s[len("sym:"):])
        return make_symmetric(n), rest
    if s.startswith("semidirect:"):
        p, rest = _take_int(s[len("semidirect:"):])
        rest = _expect(rest, ",")
        m, rest = _take_int(rest)
        rest = _expect(rest, ",")
        k, rest = _take_int(rest)
        return make_semidirect_cyclic(SemidirectParams(p, m, k)), rest
    if s.startswith("product:"):
        left, rest = _parse(s[len("product:"):])
        rest = _expect(rest, ",")
        right, rest = _parse(rest)
        return direct_product(left, right), rest
    if s.startswith("file:"):
        # paths may not contain commas (a comma ends the spec inside products)
        body = s[len("file:"):]
        cut = body.find(",")
        path, rest = (body, "") if cut < 0 else (body[:cut], body[cut:])
        if not path:
            raise GroupSpecError("file: spec needs a path")
        text = Path(path).read_text()
        return from_cayley_table(text, name=f"file:{path}"), rest
    raise GroupSpecError(
        f"unknown group spec {s!r}; use cyclic:N, dihedral:N, sym:N, "
        f"semidirect:P,M,K, product:<spec>,<spec>, or file:<path>"
    )
