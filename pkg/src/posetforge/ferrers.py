"""Ferrers diagrams in a box, Durfee machinery, and the explicit antichain maps.

A diagram is stored as its weakly decreasing column-height vector; the
ideal-of-the-grid view is derived from it, so containment and Durfee
tests are coordinate arithmetic.  The Durfee length is the side of the
largest square fitting inside the diagram, and cutting along the Durfee
square splits a diagram into two smaller grid ideals, exactly inverted
by stacking them back.

Two explicit maps on grid-like antichains live here as well: splitting
an antichain of an a x b grid into its sorted x- and y-coordinate
tuples, and flattening an antichain of the pair order into one long
increasing tuple.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameters, NotAnAntichain
from .poset import Antichain, Ideal, Poset, grid_points, grid_poset, point_label
from .sequences import KSubset


@dataclass(frozen=True)
class FerrersDiagram:
    """Weakly decreasing column heights inside an a x b box.

    Heights are stored without trailing zeros, so the label "(3,2,1)"
    is the usual partition notation; the empty diagram prints as "()".
    """

    heights: tuple[int, ...]
    box: tuple[int, int]

    def __post_init__(self):
        a, b = self.box
        hs = self.heights
        if any(h < 0 for h in hs):
            raise BadParameters(f"heights must be nonnegative: {hs}")
        if any(x < y for x, y in zip(hs, hs[1:])):
            raise BadParameters(f"heights must be weakly decreasing: {hs}")
        if hs and hs[-1] == 0:
            trimmed = hs
            while trimmed and trimmed[-1] == 0:
                trimmed = trimmed[:-1]
            object.__setattr__(self, "heights", trimmed)
            hs = trimmed
        if len(hs) > b or (hs and hs[0] > a):
            raise BadParameters(f"diagram {hs} does not fit in a {a}x{b} box")

    @property
    def label(self) -> str:
        return "(" + ",".join(map(str, self.heights)) + ")"

    def height(self, j: int) -> int:
        return self.heights[j - 1] if j <= len(self.heights) else 0

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for j, h in enumerate(self.heights, start=1)
            for i in range(1, h + 1)
        ]

    def contains(self, other: "FerrersDiagram") -> bool:
        b = max(len(self.heights), len(other.heights))
        return all(other.height(j) <= self.height(j) for j in range(1, b + 1))


def durfee_length(d: FerrersDiagram) -> int:
    """Side of the largest square sub-grid contained in the diagram."""
    k = 0
    while d.height(k + 1) >= k + 1:
        k += 1
    return k


def diagrams_in_box(a: int, b: int) -> list[FerrersDiagram]:
    """Every diagram fitting in the box, in height-vector lexicographic order."""
    out: list[FerrersDiagram] = []

    def extend(prefix: list[int], limit: int, cols_left: int) -> None:
        out.append(FerrersDiagram(tuple(prefix), (a, b)))
        if cols_left == 0:
            return
        for h in range(1, limit + 1):
            extend(prefix + [h], h, cols_left - 1)

    extend([], a, b)
    return sorted(out, key=lambda d: d.heights)


def durfee_poset(a: int, b: int, k: int) -> Poset:
    """Diagrams of Durfee length exactly k in the box, ordered by containment."""
    if k < 0 or k > min(a, b):
        raise BadParameters(f"Durfee length {k} does not fit in a {a}x{b} box")
    diagrams = [d for d in diagrams_in_box(a, b) if durfee_length(d) == k]
    padded = np.array(
        [[d.height(j) for j in range(1, b + 1)] for d in diagrams], dtype=np.int64
    )
    if len(diagrams) == 0:
        lt = np.zeros((0, 0), dtype=bool)
    else:
        leq = (padded[:, None, :] <= padded[None, :, :]).all(axis=2)
        lt = leq & ~np.eye(len(diagrams), dtype=bool)
    return Poset([d.label for d in diagrams], lt, _validated=True)


def durfee_decompose(d: FerrersDiagram) -> tuple[int, Ideal, Ideal]:
    """Cut along the Durfee square.

    Returns (k, top, side): the part above the square shifted down into
    a [k] x [b-k] grid and the part to its right shifted left into an
    [a-k] x [k] grid, each as an ideal of that grid.
    """
    a, b = d.box
    k = durfee_length(d)
    top_grid = grid_poset(k, b - k)
    side_grid = grid_poset(a - k, k)
    top_members = [
        point_label(i, j - k)
        for (i, j) in d.cells()
        if j > k
    ]
    side_members = [
        point_label(i - k, j)
        for (i, j) in d.cells()
        if i > k
    ]
    return k, top_grid.ideal(top_members), side_grid.ideal(side_members)


def durfee_compose(a: int, b: int, k: int, top: Ideal, side: Ideal) -> FerrersDiagram:
    """Inverse of :func:`durfee_decompose`: stack the parts around a k x k square."""
    if k > min(a, b):
        raise BadParameters(f"Durfee length {k} cannot fit in a {a}x{b} box")
    if top.poset.n != k * (b - k) or side.poset.n != (a - k) * k:
        raise BadParameters("part hosts do not match the stated box and Durfee length")
    heights = [0] * (b + 1)
    for j in range(1, k + 1):
        heights[j] = k
    for i, j in grid_points(top):
        heights[j + k] = max(heights[j + k], i)
    for i, j in grid_points(side):
        heights[j] = max(heights[j], i + k)
    return FerrersDiagram(tuple(heights[1 : b + 1]), (a, b))


def _sorted_antichain_points(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(points)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    if any(x1 >= x2 for x1, x2 in zip(xs, xs[1:])):
        raise NotAnAntichain(f"x-coordinates must be strictly increasing: {pts}")
    if any(y1 <= y2 for y1, y2 in zip(ys, ys[1:])):
        raise NotAnAntichain(f"y-coordinates must be strictly decreasing: {pts}")
    return pts


def split_grid_antichain(a: int, b: int, A: Antichain) -> tuple[KSubset, KSubset]:
    """Coordinates of a grid antichain as a pair of increasing tuples.

    The points sort uniquely with x strictly increasing and y strictly
    decreasing; the result is (x_1..x_k, y_k..y_1), and the induced map
    on size-k antichains is an isomorphism onto the product of the two
    Gale orders.
    """
    if A.poset.n != a * b:
        raise BadParameters(f"host poset has {A.poset.n} elements, expected {a * b}")
    pts = _sorted_antichain_points(grid_points(A))
    xs = tuple(p[0] for p in pts)
    ys = tuple(p[1] for p in reversed(pts))
    return KSubset(xs, a), KSubset(ys, b)


def spin_antichain_merge(n: int, A: Antichain) -> KSubset:
    """Flatten an antichain of the pair order on {1..n+2} into a 2k-subset.

    Members are pairs (x, y) with x < y; sorting gives
    x_1 < ... < x_k < y_k < ... < y_1, and the concatenation
    (x_1..x_k, y_k..y_1) induces an isomorphism of the size-k antichains
    onto the Gale order on 2k-subsets.
    """
    pts = _sorted_antichain_points(grid_points(A))
    if any(x >= y for x, y in pts):
        raise NotAnAntichain(f"members must be increasing pairs: {pts}")
    xs = [p[0] for p in pts]
    ys = [p[1] for p in reversed(pts)]
    if pts and xs[-1] >= ys[0]:
        raise NotAnAntichain(f"coordinates do not interleave: {pts}")
    return KSubset(tuple(xs + ys), n + 2)
