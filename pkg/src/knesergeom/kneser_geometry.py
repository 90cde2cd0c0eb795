"""Rank-r incidence geometries built from disjointness of k-subsets.

For parameters (n, k, r) with n >= 2k+1 and r >= 2, take r copies of the
k-subsets of a ground set of n + k(r-2) points, one copy per type, and make
elements of different types incident exactly when their subsets are
disjoint.  The rank-2 case is the neighborhood geometry of KG(n, k); every
rank-2 residue of the general case is isomorphic to that geometry, which is
what the closed-form diagram below encodes.

Element indexing is type-major with colex order within a type, so element
lookups are O(1) and every derived certificate is byte-reproducible.
Incidence is always answerable from the subset masks alone; the adjacency
lists of the full incidence system are materialized lazily and only
on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .incidence import (
    BuekenhoutDiagram,
    IncidenceSystem,
    PARTIAL_LINEAR_SPACE,
    NEITHER,
    RankTwoSummary,
    TypedIncidenceGraph,
    incidence_graph,
)
from .kneser import KneserParams, predicted_diameter, predicted_gonality
from .subsets import GroundSet, KSubset, colex_rank, enumerate_k_subsets


@dataclass(frozen=True)
class GeometryParams:
    """(n, k) Kneser parameters plus the rank r >= 2; the ground set has
    n + k(r-2) points and must fit in one word."""

    n: int
    k: int
    r: int

    def __post_init__(self):
        KneserParams(self.n, self.k)  # n >= 2k+1, k >= 1
        if self.r < 2:
            raise ValueError("rank r must be at least 2")
        if self.ground_size > 64:
            raise ValueError(
                f"ground set needs {self.ground_size} points; at most 64 supported"
            )

    @property
    def ground_size(self) -> int:
        return self.n + self.k * (self.r - 2)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.ground_size)

    @property
    def kneser(self) -> KneserParams:
        return KneserParams(self.n, self.k)

    @property
    def per_type(self) -> int:
        return math.comb(self.ground_size, self.k)

    @property
    def n_elements(self) -> int:
        return self.r * self.per_type


class KneserGeometry:
    """The built geometry: subsets per element, O(1) incidence, and a lazy
    materialized IncidenceSystem."""

    __slots__ = ("params", "masks", "_system", "_labels")

    def __init__(self, params: GeometryParams):
        self.params = params
        per_type = [s.bits for s in enumerate_k_subsets(params.ground, params.k)]
        self.masks = tuple(per_type * params.r)
        self._labels = tuple(f"{m:#x}" for m in per_type)
        self._system = None

    @property
    def n_elements(self) -> int:
        return len(self.masks)

    def type_of(self, e: int) -> int:
        return e // self.params.per_type

    def subset_of(self, e: int) -> KSubset:
        return KSubset(self.masks[e])

    def label_of(self, e: int) -> str:
        return self._labels[e % self.params.per_type]

    def element_index(self, type_: int, subset: KSubset) -> int:
        if not 0 <= type_ < self.params.r:
            raise ValueError(f"type {type_} out of range")
        return type_ * self.params.per_type + colex_rank(self.params.ground, subset)

    def incident(self, x: int, y: int) -> bool:
        """x * y iff the types differ and the subsets are disjoint."""
        if x == y:
            return True
        return self.type_of(x) != self.type_of(y) and self.masks[x] & self.masks[y] == 0

    def incidence_system(self) -> IncidenceSystem:
        if self._system is None:
            n = self.n_elements
            per = self.params.per_type
            incid = []
            for x in range(n):
                tx, mx = x // per, self.masks[x]
                start = (tx + 1) * per
                for y in range(start, n):
                    if mx & self.masks[y] == 0:
                        incid.append((x, y))
            self._system = IncidenceSystem(
                range(self.params.r),
                [e // per for e in range(n)],
                incid,
                [self._labels[e % per] for e in range(n)],
            )
        return self._system

    def to_incidence_graph(self) -> TypedIncidenceGraph:
        return incidence_graph(self.incidence_system())

    def __repr__(self):
        p = self.params
        return f"KneserGeometry(n={p.n}, k={p.k}, r={p.r}, elements={self.n_elements})"


def build_geometry(params: GeometryParams) -> KneserGeometry:
    return KneserGeometry(params)


def chamber_count(params: GeometryParams) -> int:
    """Number of chambers: ordered choices of pairwise disjoint k-subsets,
    one per type, counted by the falling product of binomials."""
    m, k = params.ground_size, params.k
    total = 1
    for t in range(params.r):
        total *= math.comb(m - t * k, k)
    return total


def enumerate_chambers(geom: KneserGeometry):
    """All chambers as sorted element tuples, by depth-first extension in
    type order with disjointness pruning."""
    p = geom.params
    per = p.per_type
    masks = geom.masks

    def extend(t, chosen, used):
        if t == p.r:
            yield chosen
            return
        base = t * per
        for i in range(per):
            if masks[base + i] & used == 0:
                yield from extend(t + 1, chosen + (base + i,), used | masks[base + i])

    yield from extend(0, (), 0)


def incidence_graph_degree(params: GeometryParams) -> int:
    """Degree of every vertex of the incidence graph: (r-1) choices of type
    times the C(m-k, k) subsets disjoint from a fixed one."""
    return (params.r - 1) * math.comb(params.ground_size - params.k, params.k)


def predicted_diagram(params: GeometryParams) -> BuekenhoutDiagram:
    """The closed-form diagram: a complete graph on the r types, every
    order C(n-k,k) - 1, every count C(n+k(r-2), k), every edge d-g-d with
    g = 3 if n = 2k+1 else 2 and d = 2*ceil(k/(n-2k)) + 1."""
    kp = params.kneser
    g = predicted_gonality(kp)
    d = predicted_diameter(kp)
    types = tuple(range(params.r))
    order = math.comb(params.n - params.k, params.k) - 1
    count = params.per_type
    classification = PARTIAL_LINEAR_SPACE if g >= 3 else NEITHER
    edges = {
        (i, j): RankTwoSummary((i, j), g, (d, d), classification)
        for i in types
        for j in types
        if i < j
    }
    return BuekenhoutDiagram(
        types,
        {t: order for t in types},
        {t: count for t in types},
        edges,
    )
