"""Finite posets over a dense strict-order matrix.

A poset is an immutable tuple of distinct string labels together with an
n x n boolean matrix ``lt`` over canonical indices 0..n-1, where
``lt[i, j]`` means "element i is strictly below element j".  The matrix
is always irreflexive, antisymmetric and transitively closed; public
constructors either verify this or compute the closure themselves.

Labels are opaque at the API boundary.  All internal computation runs on
indices, with subsets of the ground set handled as Python int bitmasks.
Every object in this module is immutable after construction, so values
can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    BadParameters,
    CycleDetected,
    DuplicateLabel,
    NotAnAntichain,
    NotAnIdeal,
    SizeLimitExceeded,
    UnknownLabel,
)

DEFAULT_IDEAL_CAP = 1_000_000
DEFAULT_ISO_CAP = 200


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.uint8) @ b.astype(np.uint8)) > 0


def transitive_closure(adj: np.ndarray) -> np.ndarray:
    """Reachability matrix of a directed graph, by repeated squaring."""
    reach = adj.copy()
    while True:
        grown = reach | _bool_matmul(reach, reach)
        if np.array_equal(grown, reach):
            return reach
        reach = grown


def point_label(i: int, j: int) -> str:
    return f"({i},{j})"


def parse_point(label: str) -> tuple[int, int]:
    """Inverse of :func:`point_label`; raises ValueError on other shapes."""
    body = label.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"not a point label: {label!r}")
    parts = body[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"not a point label: {label!r}")
    return int(parts[0]), int(parts[1])


class Poset:
    """An immutable finite poset.

    >>> P = chain_poset(3)
    >>> P.covers()
    [('1', '2'), ('2', '3')]
    >>> P.width()
    1
    """

    def __init__(self, labels: Sequence[str], lt: np.ndarray, *, _validated: bool = False):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            seen: set[str] = set()
            for lab in labels:
                if lab in seen:
                    raise DuplicateLabel(f"duplicate element label {lab!r}")
                seen.add(lab)
        n = len(labels)
        lt = np.array(lt, dtype=bool)
        if lt.shape != (n, n):
            raise ValueError(f"relation matrix must be {n}x{n}, got {lt.shape}")
        if not _validated:
            if lt.diagonal().any() or (lt & lt.T).any():
                raise CycleDetected("strict order must be irreflexive and antisymmetric")
            if (_bool_matmul(lt, lt) & ~lt).any():
                raise ValueError("strict order must be transitively closed")
        lt.setflags(write=False)
        self.labels = labels
        self.lt = lt

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Poset({self.n} elements, {int(self.cover_matrix.sum())} covers)"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.lt, other.lt)

    __hash__ = None  # type: ignore[assignment]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"no element labelled {label!r}") from None

    @cached_property
    def leq(self) -> np.ndarray:
        out = self.lt | np.eye(self.n, dtype=bool)
        out.setflags(write=False)
        return out

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        out = self.lt & ~_bool_matmul(self.lt, self.lt)
        out.setflags(write=False)
        return out

    def covers(self) -> list[tuple[str, str]]:
        """Covering pairs (x, y) with x below y, ordered by canonical index."""
        cm = self.cover_matrix
        return [
            (self.labels[i], self.labels[j])
            for i in range(self.n)
            for j in range(self.n)
            if cm[i, j]
        ]

    # -- bitmask views of the relation -----------------------------------

    @cached_property
    def _below(self) -> tuple[int, ...]:
        """_below[i] = bitmask of elements strictly below i."""
        cols = []
        for i in range(self.n):
            m = 0
            for j in range(self.n):
                if self.lt[j, i]:
                    m |= 1 << j
            cols.append(m)
        return tuple(cols)

    @cached_property
    def _above(self) -> tuple[int, ...]:
        rows = []
        for i in range(self.n):
            m = 0
            for j in range(self.n):
                if self.lt[i, j]:
                    m |= 1 << j
            rows.append(m)
        return tuple(rows)

    @cached_property
    def _comp(self) -> tuple[int, ...]:
        """Mask of elements comparable to i (strictly; excludes i itself)."""
        return tuple(b | a for b, a in zip(self._below, self._above))

    @cached_property
    def _below_eq(self) -> tuple[int, ...]:
        return tuple(m | (1 << i) for i, m in enumerate(self._below))

    @cached_property
    def _above_eq(self) -> tuple[int, ...]:
        return tuple(m | (1 << i) for i, m in enumerate(self._above))

    @cached_property
    def _cover_up(self) -> tuple[int, ...]:
        cm = self.cover_matrix
        out = []
        for i in range(self.n):
            m = 0
            for j in range(self.n):
                if cm[i, j]:
                    m |= 1 << j
            out.append(m)
        return tuple(out)

    @cached_property
    def _cover_down(self) -> tuple[int, ...]:
        cm = self.cover_matrix
        out = []
        for i in range(self.n):
            m = 0
            for j in range(self.n):
                if cm[j, i]:
                    m |= 1 << j
            out.append(m)
        return tuple(out)

    # -- derived statistics ----------------------------------------------

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain strictly below each element."""
        order = sorted(range(self.n), key=lambda i: self._below[i].bit_count())
        h = [0] * self.n
        for i in order:
            down = self._cover_down[i]
            h[i] = 1 + max((h[j] for j in _bits(down)), default=-1)
        return tuple(h)

    @cached_property
    def depths(self) -> tuple[int, ...]:
        order = sorted(range(self.n), key=lambda i: self._above[i].bit_count())
        d = [0] * self.n
        for i in order:
            up = self._cover_up[i]
            d[i] = 1 + max((d[j] for j in _bits(up)), default=-1)
        return tuple(d)

    def width(self) -> int:
        """Maximum antichain size, via the chain-cover matching bound."""
        n = self.n
        above = self._above
        match_to: list[int] = [-1] * n

        def augment(u: int, seen: list[bool]) -> bool:
            for v in _bits(above[u]):
                if not seen[v]:
                    seen[v] = True
                    if match_to[v] == -1 or augment(match_to[v], seen):
                        match_to[v] = u
                        return True
            return False

        matched = 0
        for u in range(n):
            if augment(u, [False] * n):
                matched += 1
        return n - matched

    # -- subsets -----------------------------------------------------------

    def subset_label(self, members: Iterable[int]) -> str:
        return "{" + ",".join(self.labels[i] for i in sorted(members)) + "}"

    def _resolve(self, members: Iterable[int | str]) -> int:
        mask = 0
        for m in members:
            i = m if isinstance(m, int) else self.index(m)
            if not 0 <= i < self.n:
                raise UnknownLabel(f"element index {i} out of range")
            mask |= 1 << i
        return mask

    def antichain(self, members: Iterable[int | str]) -> "Antichain":
        return Antichain(self, members)

    def ideal(self, members: Iterable[int | str]) -> "Ideal":
        return Ideal(self, members)

    def is_antichain_mask(self, mask: int) -> bool:
        comp = self._comp
        return all(comp[i] & mask == 0 for i in _bits(mask))

    def _antichain_masks(self, k: int) -> list[int]:
        """All size-k antichains as bitmasks, in index-lexicographic order."""
        if k < 0:
            return []
        if k == 0:
            return [0]
        n = self.n
        comp = self._comp
        out: list[int] = []

        def extend(start: int, mask: int, need: int) -> None:
            if need == 0:
                out.append(mask)
                return
            for i in range(start, n - need + 1):
                if comp[i] & mask == 0:
                    extend(i + 1, mask | (1 << i), need - 1)

        extend(0, 0, k)
        return out

    def antichains_of_size(self, k: int) -> list["Antichain"]:
        """All antichains of size k; empty when k exceeds the width."""
        return [Antichain(self, tuple(_bits(m))) for m in self._antichain_masks(k)]

    # -- ideals ------------------------------------------------------------

    def ideal_masks(self, cap: int = DEFAULT_IDEAL_CAP) -> list[int]:
        """All downward-closed subsets as bitmasks, smallest first."""
        below = self._below
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(self.n):
                    if not (m >> i) & 1 and below[i] & ~m == 0:
                        m2 = m | (1 << i)
                        if m2 not in seen:
                            seen.add(m2)
                            if len(seen) > cap:
                                raise SizeLimitExceeded(
                                    f"more than {cap} ideals; raise the cap to continue"
                                )
                            nxt.append(m2)
            frontier = nxt
        return sorted(seen, key=lambda m: (m.bit_count(), tuple(_bits(m))))

    def ideals(self, cap: int = DEFAULT_IDEAL_CAP) -> list["Ideal"]:
        return [Ideal(self, tuple(_bits(m))) for m in self.ideal_masks(cap)]

    def ideals_poset(self, cap: int = DEFAULT_IDEAL_CAP) -> "Poset":
        """The poset of all ideals ordered by containment."""
        masks = self.ideal_masks(cap)
        count = len(masks)
        member = np.zeros((count, self.n), dtype=bool)
        for r, m in enumerate(masks):
            for i in _bits(m):
                member[r, i] = True
        # subset test: nothing in row r misses from row s
        leq = (member.astype(np.uint8) @ (~member).astype(np.uint8).T) == 0
        lt = leq & ~np.eye(count, dtype=bool)
        labels = [self.subset_label(_bits(m)) for m in masks]
        return Poset(labels, lt, _validated=True)

    # -- constructions -----------------------------------------------------

    def product(self, other: "Poset") -> "Poset":
        """Componentwise order on pairs; labels are "(p,q)"."""
        leq = np.kron(self.leq.astype(np.uint8), other.leq.astype(np.uint8)).astype(bool)
        n = self.n * other.n
        lt = leq & ~np.eye(n, dtype=bool)
        labels = [f"({p},{q})" for p in self.labels for q in other.labels]
        return Poset(labels, lt, _validated=True)

    def induced(self, indices: Sequence[int]) -> "Poset":
        """Sub-poset on the given indices, keeping their labels."""
        idx = list(indices)
        lt = self.lt[np.ix_(idx, idx)] if idx else np.zeros((0, 0), dtype=bool)
        return Poset([self.labels[i] for i in idx], lt, _validated=True)

    def relabeled(self, labels: Sequence[str] | None = None, prefix: str = "p") -> "Poset":
        if labels is None:
            labels = [f"{prefix}{i}" for i in range(self.n)]
        if len(labels) != self.n:
            raise ValueError("need exactly one new label per element")
        return Poset(labels, self.lt, _validated=True)


class _Subset:
    """A subset of a host poset, stored as a bitmask."""

    def __init__(self, poset: Poset, members: Iterable[int | str]):
        self.poset = poset
        self.mask = poset._resolve(members)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    @property
    def member_labels(self) -> tuple[str, ...]:
        return tuple(self.poset.labels[i] for i in _bits(self.mask))

    @property
    def label(self) -> str:
        return self.poset.subset_label(_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Subset):
            return NotImplemented
        return type(self) is type(other) and self.mask == other.mask and self.poset == other.poset

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.mask, self.poset.labels))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label})"


class Antichain(_Subset):
    """A pairwise-incomparable subset of a host poset."""

    def __init__(self, poset: Poset, members: Iterable[int | str]):
        super().__init__(poset, members)
        comp = poset._comp
        for i in _bits(self.mask):
            if comp[i] & self.mask:
                j = next(_bits(comp[i] & self.mask))
                raise NotAnAntichain(
                    f"{poset.labels[i]!r} and {poset.labels[j]!r} are comparable"
                )

    def ideal(self) -> "Ideal":
        """The ideal generated by this antichain (downward closure)."""
        mask = self.mask
        for i in _bits(self.mask):
            mask |= self.poset._below[i]
        return Ideal(self.poset, tuple(_bits(mask)))


class Ideal(_Subset):
    """A downward-closed subset of a host poset."""

    def __init__(self, poset: Poset, members: Iterable[int | str]):
        super().__init__(poset, members)
        for i in _bits(self.mask):
            if poset._below[i] & ~self.mask:
                j = next(_bits(poset._below[i] & ~self.mask))
                raise NotAnIdeal(
                    f"{poset.labels[j]!r} lies below member {poset.labels[i]!r} but is missing"
                )

    def max_elements(self) -> Antichain:
        """The maximal members; inverse of :meth:`Antichain.ideal`."""
        mask = self.mask
        tops = [i for i in _bits(mask) if self.poset._above[i] & mask == 0]
        return Antichain(self.poset, tops)


# -- constructors ----------------------------------------------------------


def build_poset(labels: Sequence[str], relations: Iterable[Sequence[str]]) -> Poset:
    """Build a poset from generator pairs, taking the transitive closure.

    Raises CycleDetected when the closure of the generators has a cycle,
    UnknownLabel when a pair mentions a label not in ``labels``.
    """
    labels = tuple(str(x) for x in labels)
    seen: set[str] = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"duplicate element label {lab!r}")
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    adj = np.zeros((n, n), dtype=bool)
    for pair in relations:
        a, b = pair
        a, b = str(a), str(b)
        for end in (a, b):
            if end not in index:
                raise UnknownLabel(f"relation endpoint {end!r} is not an element")
        adj[index[a], index[b]] = True
    lt = transitive_closure(adj)
    if lt.diagonal().any():
        where = int(np.flatnonzero(lt.diagonal())[0])
        raise CycleDetected(f"relation has a cycle through {labels[where]!r}")
    return Poset(labels, lt, _validated=True)


def chain_poset(n: int) -> Poset:
    """The chain 1 < 2 < ... < n."""
    if n < 0:
        raise BadParameters(f"chain length must be nonnegative, got {n}")
    lt = np.triu(np.ones((n, n), dtype=bool), k=1)
    return Poset([str(i) for i in range(1, n + 1)], lt, _validated=True)


def discrete_poset(labels: Sequence[str] | int) -> Poset:
    """An antichain: no two elements comparable."""
    if isinstance(labels, int):
        labels = [str(i) for i in range(1, labels + 1)]
    n = len(labels)
    return Poset(labels, np.zeros((n, n), dtype=bool), _validated=True)


def grid_poset(a: int, b: int) -> Poset:
    """The a x b grid: product of two chains, labels "(i,j)"."""
    return chain_poset(a).product(chain_poset(b))


def grid_points(subset: _Subset) -> list[tuple[int, int]]:
    """Decode a subset of a grid poset into its (i, j) lattice points."""
    return [parse_point(lab) for lab in subset.member_labels]


# -- isomorphism search ----------------------------------------------------


@dataclass(frozen=True)
class PosetIso:
    """A witness isomorphism: label maps in both directions."""

    forward: dict[str, str]
    backward: dict[str, str]

    def apply(self, label: str) -> str:
        return self.forward[label]

    def verify(self, P: Poset, Q: Poset) -> bool:
        """Direct check: bijective and order-preserving both ways."""
        if P.n != Q.n or set(self.forward) != set(P.labels):
            return False
        if set(self.forward.values()) != set(Q.labels):
            return False
        if any(self.backward.get(v) != k for k, v in self.forward.items()):
            return False
        img = [Q.index(self.forward[lab]) for lab in P.labels]
        for i in range(P.n):
            for j in range(P.n):
                if P.lt[i, j] != Q.lt[img[i], img[j]]:
                    return False
        return True

    def to_json_dict(self) -> dict:
        return {"forward": dict(self.forward), "backward": dict(self.backward)}


def _stable_colors(P: Poset, Q: Poset) -> tuple[list[int], list[int]] | None:
    """Jointly refined vertex colors; None when multisets already differ."""

    def initial(R: Poset) -> list[tuple]:
        return [
            (
                R.heights[i],
                R.depths[i],
                R._cover_up[i].bit_count(),
                R._cover_down[i].bit_count(),
                R._below[i].bit_count(),
                R._above[i].bit_count(),
            )
            for i in range(R.n)
        ]

    sigP, sigQ = initial(P), initial(Q)
    ncolors = -1
    while True:
        palette = {sig: c for c, sig in enumerate(sorted(set(sigP) | set(sigQ)))}
        colP = [palette[s] for s in sigP]
        colQ = [palette[s] for s in sigQ]
        if sorted(colP) != sorted(colQ):
            return None
        if len(palette) == ncolors:
            return colP, colQ
        ncolors = len(palette)
        sigP = [
            (
                colP[i],
                tuple(sorted(colP[j] for j in _bits(P._cover_up[i]))),
                tuple(sorted(colP[j] for j in _bits(P._cover_down[i]))),
            )
            for i in range(P.n)
        ]
        sigQ = [
            (
                colQ[i],
                tuple(sorted(colQ[j] for j in _bits(Q._cover_up[i]))),
                tuple(sorted(colQ[j] for j in _bits(Q._cover_down[i]))),
            )
            for i in range(Q.n)
        ]


def find_isomorphism(P: Poset, Q: Poset, max_size: int = DEFAULT_ISO_CAP) -> PosetIso | None:
    """Search for an order isomorphism P -> Q.

    Backtracking over color classes produced by iterated refinement of
    (height, depth, cover degrees) signatures.  Deterministic for fixed
    inputs.  Raises SizeLimitExceeded above ``max_size`` elements.
    """
    if P.n != Q.n:
        return None
    if P.n > max_size or Q.n > max_size:
        raise SizeLimitExceeded(f"isomorphism search capped at {max_size} elements")
    if P.n == 0:
        return PosetIso({}, {})
    colors = _stable_colors(P, Q)
    if colors is None:
        return None
    colP, colQ = colors
    candidates: dict[int, list[int]] = {}
    for v in range(Q.n):
        candidates.setdefault(colQ[v], []).append(v)
    if any(c not in candidates for c in colP):
        return None
    order = sorted(range(P.n), key=lambda i: (len(candidates[colP[i]]), colP[i], i))
    belowP, aboveP = P._below, P._above
    belowQ, aboveQ = Q._below, Q._above
    mapping = [-1] * P.n
    used = [False] * Q.n
    assigned: list[int] = []

    def backtrack(t: int) -> bool:
        if t == P.n:
            return True
        u = order[t]
        au, bu = aboveP[u], belowP[u]
        for v in candidates[colP[u]]:
            if used[v]:
                continue
            av, bv = aboveQ[v], belowQ[v]
            ok = True
            for w in assigned:
                mw = mapping[w]
                if (au >> w) & 1 != (av >> mw) & 1 or (bu >> w) & 1 != (bv >> mw) & 1:
                    ok = False
                    break
            if not ok:
                continue
            mapping[u] = v
            used[v] = True
            assigned.append(u)
            if backtrack(t + 1):
                return True
            assigned.pop()
            used[v] = False
            mapping[u] = -1
        return False

    if not backtrack(0):
        return None
    forward = {P.labels[i]: Q.labels[mapping[i]] for i in range(P.n)}
    backward = {v: k for k, v in forward.items()}
    return PosetIso(forward, backward)


# -- JSON interchange --------------------------------------------------------


def poset_to_dict(P: Poset) -> dict:
    """JSON-ready dict; relations are the covering pairs (a generating set)."""
    return {"elements": list(P.labels), "relations": [list(c) for c in P.covers()]}


def poset_from_dict(data: dict) -> Poset:
    """Inverse of :func:`poset_to_dict`; closure is taken on load."""
    if not isinstance(data, dict):
        raise ValueError("poset JSON must be an object")
    if "elements" not in data or "relations" not in data:
        raise ValueError('poset JSON needs "elements" and "relations" keys')
    elements = data["elements"]
    relations = data["relations"]
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise ValueError('"elements" must be a list of strings')
    if not isinstance(relations, list):
        raise ValueError('"relations" must be a list of pairs')
    for rel in relations:
        if not isinstance(rel, (list, tuple)) or len(rel) != 2:
            raise ValueError(f'relation {rel!r} is not a pair')
    return build_poset(elements, relations)
