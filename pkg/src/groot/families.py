"""The Brieskorn families B(n), Y1(n), Y2(n), Y3(n) and their known subroots."""
from __future__ import annotations

import re

from .errors import InvalidInput
from .monotone import MonotoneSubroot
from .seifert import BrieskornTriple, parse_triple


def B(n: int) -> BrieskornTriple:
    if n < 0:
        raise InvalidInput("B(n) needs n >= 0")
    if n == 0:
        return BrieskornTriple(2, 3, 5)
    return BrieskornTriple(2 * n + 1, 4 * n + 1, 4 * n + 3)


def Y1(n: int) -> BrieskornTriple:
    _positive(n, "Y1")
    return BrieskornTriple(4 * n + 1, 6 * n + 2, 12 * n + 1)


def Y2(n: int) -> BrieskornTriple:
    _positive(n, "Y2")
    return BrieskornTriple(4 * n - 1, 6 * n - 2, 12 * n - 1)


def Y3(n: int) -> BrieskornTriple:
    _positive(n, "Y3")
    return BrieskornTriple(8 * n + 1, 12 * n + 1, 24 * n + 5)


def _positive(n, name):
    if n < 1:
        raise InvalidInput(f"{name}(n) needs n >= 1")


FAMILIES = {"B": B, "Y1": Y1, "Y2": Y2, "Y3": Y3}


def closed_form_params(family: str, n: int) -> list[tuple[int, int]]:
    """Subroot parameters as listed in the literature (possibly non-reduced)."""
    if family == "B":
        return [(2, 2)] if n == 0 else [(2 * n, 0)]
    if family == "Y1":
        return [(4 * n, 0), (2 * n, 2 * n)]
    if family == "Y2":
        return [(4 * n - 2, 0), (2 * n, 2 * n)]
    if family == "Y3":
        return [(8 * n, 0)]
    raise InvalidInput(f"unknown family {family!r}")


def closed_form_subroot(family: str, n: int) -> MonotoneSubroot:
    FAMILIES[family](n)  # range check
    return MonotoneSubroot.reduced(closed_form_params(family, n))


_TOKEN_RE = re.compile(r"^(B|Y1|Y2|Y3)\(\s*(\d+)\s*\)$")


def parse_member(text: str):
    """``"Y1(3)"`` -> ``("Y1", 3, triple)``; raw triples give ``(None, None, triple)``."""
    text = text.strip()
    m = _TOKEN_RE.match(text)
    if m:
        fam, n = m.group(1), int(m.group(2))
        return fam, n, FAMILIES[fam](n)
    inner = text
    for prefix in ("Sigma", "S", "Σ"):
        if inner.startswith(prefix + "("):
            inner = inner[len(prefix):]
            break
    return None, None, parse_triple(inner)


def kernel_family_1(n: int):
    """``Y1(n) # -B(2n) # B(n) # -n B(0)`` as ``(member, multiplicity)`` pairs."""
    return [(("Y1", n), 1), (("B", 2 * n), -1), (("B", n), 1), (("B", 0), -n)]


def kernel_family_2(n: int):
    return [(("Y2", n), 1), (("B", 2 * n - 1), -1), (("B", n), 1), (("B", 0), -n)]


def kernel_family_3(n: int):
    return [(("Y3", n), 1), (("B", 4 * n), -1)]


def independence_family_a(n_max: int) -> list[BrieskornTriple]:
    return (
        [B(n) for n in range(0, n_max + 1)]
        + [Y1(n) for n in range(1, n_max + 1)]
        + [Y2(n) for n in range(1, n_max + 1)]
    )


def independence_family_b(n_max: int) -> list[BrieskornTriple]:
    return [B(4 * n) for n in range(0, n_max + 1)] + [Y3(n) for n in range(1, n_max + 1)]
