"""The type-A positive-root poset and the antichain complement involution.

Roots are intervals [i, j] with 1 <= i < j <= n; [i, j] is covered by
[i, j+1] and [i-1, j], so the order is containment of intervals.  The
complement involution sends a size-k antichain to the size-(n-1-k)
antichain built from the complements of its shifted endpoint sets; it is
validated on every call rather than trusted, since its well-definedness
is itself one of the facts under test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadParameters, NotAnAntichain
from .poset import Antichain, Poset

_ROOT_RE = re.compile(r"\[(\d+),(\d+)\]")


@dataclass(frozen=True, order=True)
class Root:
    """The interval root [i, j], 1 <= i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise BadParameters(f"need 1 <= i < j, got [{self.i},{self.j}]")

    @property
    def label(self) -> str:
        return f"[{self.i},{self.j}]"


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


@lru_cache(maxsize=None)
def type_a_root_poset(n: int) -> Poset:
    """All intervals [i, j] inside [1, n], ordered by containment."""
    if n < 2:
        raise BadParameters(f"need n >= 2, got {n}")
    roots = positive_roots(n)
    count = len(roots)
    lt = np.zeros((count, count), dtype=bool)
    for p, r in enumerate(roots):
        for q, s in enumerate(roots):
            if p != q and s.i <= r.i and r.j <= s.j:
                lt[p, q] = True
    return Poset([r.label for r in roots], lt, _validated=True)


def parse_root_label(label: str) -> Root:
    m = _ROOT_RE.fullmatch(label.strip())
    if not m:
        raise BadParameters(f"not a root label: {label!r}")
    return Root(int(m.group(1)), int(m.group(2)))


def _rank_of(P: Poset) -> int:
    """Recover n from the host; the root count is n(n-1)/2."""
    count = P.n
    n = round((1 + (1 + 8 * count) ** 0.5) / 2)
    if n < 2 or n * (n - 1) // 2 != count or P != type_a_root_poset(n):
        raise BadParameters("host is not a type-A root poset")
    return n


def panyushev_complement(A: Antichain) -> Antichain:
    """The complement involution on antichains of a type-A root poset.

    For members [i_t, j_t], the image pairs the sorted complements
    {1..n-1} \\ {j_t - 1} and {2..n} \\ {i_t + 1} positionally.  The
    result is checked to be a genuine antichain of the expected size and
    the call fails loudly otherwise.
    """
    n = _rank_of(A.poset)
    members = sorted(parse_root_label(lab) for lab in A.member_labels)
    k = len(members)
    new_i = sorted(set(range(1, n)) - {r.j - 1 for r in members})
    new_j = sorted(set(range(2, n + 1)) - {r.i + 1 for r in members})
    if len(new_i) != n - 1 - k or len(new_j) != n - 1 - k:
        raise NotAnAntichain("complement sets have the wrong size")
    roots = []
    for i, j in zip(new_i, new_j):
        if not i < j:
            raise NotAnAntichain(f"complement pairing produced [{i},{j}]")
        roots.append(Root(i, j))
    return A.poset.antichain([r.label for r in roots])


def narayana_table(n: int) -> list[int]:
    """Antichain counts by size, (|A_0|, ..., |A_{n-1}|), for rank n-1."""
    if n < 2:
        raise BadParameters(f"need n >= 2, got {n}")
    P = type_a_root_poset(n)
    return [len(P._antichain_masks(k)) for k in range(n)]
