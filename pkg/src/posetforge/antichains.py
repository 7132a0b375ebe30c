"""Partial orders on the size-k antichains of a poset.

Two orders are materialized.  The ideal order compares antichains by
containment of the ideals they generate.  The exchange order is the
reflexive transitive closure of single-element replacement: A steps to B
when B = A \\ {a} u {b} for a strictly below b.  The exchange order is
coarser than the ideal order in general, and its covering pairs are
exactly the single replacements along covering pairs of the host poset;
that characterization drives the default edge generation, with the
all-replacements closure kept alongside as an independent route.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CycleDetected, SizeMismatch
from .poset import Antichain, Poset, _bits, transitive_closure


def ideal_leq(A: Antichain, B: Antichain) -> bool:
    """True when every member of A lies below (or equals) a member of B."""
    if A.poset is not B.poset and A.poset != B.poset:
        raise ValueError("antichains live in different posets")
    P = A.poset
    covered = 0
    for b in _bits(B.mask):
        covered |= P._below_eq[b]
    return A.mask & ~covered == 0


def is_exchange_cover(A: Antichain, B: Antichain) -> bool:
    """True when B replaces exactly one member of A by an upper cover of it."""
    if len(A) != len(B):
        raise SizeMismatch(f"antichain sizes differ: {len(A)} vs {len(B)}")
    if A.poset is not B.poset and A.poset != B.poset:
        raise ValueError("antichains live in different posets")
    a_only = A.mask & ~B.mask
    b_only = B.mask & ~A.mask
    if a_only.bit_count() != 1 or b_only.bit_count() != 1:
        return False
    a = next(_bits(a_only))
    b = next(_bits(b_only))
    return bool(A.poset.cover_matrix[a, b])


def _exchange_edges(P: Poset, masks: list[int], *, covers_only: bool) -> np.ndarray:
    pos = {m: i for i, m in enumerate(masks)}
    count = len(masks)
    step_from = P._cover_up if covers_only else P._above
    comp = P._comp
    adj = np.zeros((count, count), dtype=bool)
    for row, m in enumerate(masks):
        for a in _bits(m):
            rest = m & ~(1 << a)
            for b in _bits(step_from[a]):
                if comp[b] & rest:
                    continue
                adj[row, pos[rest | (1 << b)]] = True
    return adj


def antichain_exchange_poset(P: Poset, k: int, *, edges: str = "covers") -> Poset:
    """The size-k antichains under the exchange order.

    ``edges="covers"`` generates only replacements along covering pairs
    (sufficient, since every exchange-order cover has that shape);
    ``edges="all"`` closes over every strict replacement and exists as
    an independent cross-check.  Empty poset when k exceeds the width.
    """
    if edges not in ("covers", "all"):
        raise ValueError(f"edges must be 'covers' or 'all', not {edges!r}")
    masks = P._antichain_masks(k)
    adj = _exchange_edges(P, masks, covers_only=(edges == "covers"))
    lt = transitive_closure(adj)
    if lt.diagonal().any():
        raise CycleDetected("exchange relation closed into a cycle")
    labels = [P.subset_label(_bits(m)) for m in masks]
    return Poset(labels, lt)


def antichain_ideal_poset(P: Poset, k: int) -> Poset:
    """The size-k antichains under the ideal (containment) order."""
    masks = P._antichain_masks(k)
    closure = []
    for m in masks:
        c = m
        for i in _bits(m):
            c |= P._below[i]
        closure.append(c)
    count = len(masks)
    lt = np.zeros((count, count), dtype=bool)
    for i in range(count):
        for j in range(count):
            if i != j and closure[i] & ~closure[j] == 0:
                lt[i, j] = True
    labels = [P.subset_label(_bits(m)) for m in masks]
    return Poset(labels, lt, _validated=True)


@dataclass
class RefinementReport:
    """How the exchange order sits inside the ideal order at size k."""

    k: int
    antichain_count: int
    exchange_pairs: int
    ideal_pairs: int
    violations: list[tuple[str, str]] = field(default_factory=list)
    coarsening_witnesses: list[tuple[str, str]] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        """Every exchange-order relation must also be an ideal-order relation."""
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "antichains": self.antichain_count,
            "exchange_pairs": self.exchange_pairs,
            "ideal_pairs": self.ideal_pairs,
            "violations": [list(p) for p in self.violations],
            "coarsening_witnesses": [list(p) for p in self.coarsening_witnesses],
        }


def refinement_report(P: Poset, k: int) -> RefinementReport:
    """Compare the two orders pairwise; witnesses are strict ideal-order
    pairs that the exchange order does not relate."""
    exchange = antichain_exchange_poset(P, k)
    ideal = antichain_ideal_poset(P, k)
    count = exchange.n
    report = RefinementReport(
        k=k,
        antichain_count=count,
        exchange_pairs=int(exchange.lt.sum()),
        ideal_pairs=int(ideal.lt.sum()),
    )
    for i in range(count):
        for j in range(count):
            if exchange.lt[i, j] and not ideal.lt[i, j]:
                report.violations.append((exchange.labels[i], exchange.labels[j]))
            if ideal.lt[i, j] and not exchange.lt[i, j]:
                report.coarsening_witnesses.append((ideal.labels[i], ideal.labels[j]))
    return report


def has_order_matching(P: Poset, A: Antichain, B: Antichain) -> bool:
    """Whether A and B admit a perfect matching with each a_i <= b_i."""
    left = list(_bits(A.mask))
    right = list(_bits(B.mask))
    if len(left) != len(right):
        raise SizeMismatch(f"antichain sizes differ: {len(left)} vs {len(right)}")
    rpos = {v: p for p, v in enumerate(right)}
    match_to = [-1] * len(right)

    def augment(u: int, seen: list[bool]) -> bool:
        for v in right:
            p = rpos[v]
            if P.leq[u, v] and not seen[p]:
                seen[p] = True
                if match_to[p] == -1 or augment(match_to[p], seen):
                    match_to[p] = u
                    return True
        return False

    return all(augment(u, [False] * len(right)) for u in left)
