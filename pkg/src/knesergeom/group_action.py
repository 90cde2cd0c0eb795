"""Permutation actions on the disjointness geometries and orbit machinery.

Point permutations of the ground set act on elements by mapping subsets
pointwise inside each type; type permutations act by relabeling the copies.
Orbit computations are plain BFS closures over generator images, so orbit
size equals transitivity evidence: the chamber orbit under the symmetric
group's generators reaching every chamber certifies flag-transitivity on
chambers, and one orbit per flag type certifies it in full.
"""

from __future__ import annotations

from collections import deque

from .incidence import IncidenceSystem
from .kneser_geometry import KneserGeometry
from .subsets import KSubset


class Permutation:
    """A permutation of {0,...,m-1}, stored as its image array."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("image array is not a permutation")
        self.images = images

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def apply_to_mask(self, mask: int) -> int:
        out = 0
        while mask:
            b = mask & -mask
            out |= 1 << self.images[b.bit_length() - 1]
            mask ^= b
        return out

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(m))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Permutation":
        images = list(range(m))
        images[i], images[j] = images[j], images[i]
        return cls(images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def adjacent_transpositions(m: int) -> list[Permutation]:
    """The standard generating set (i i+1), i = 0..m-2, of the symmetric
    group on m points."""
    return [Permutation.transposition(m, i, i + 1) for i in range(m - 1)]


def act_on_element(geom: KneserGeometry, pi: Permutation, e: int) -> int:
    """Image of an element under a ground-set permutation: same type,
    subset mapped pointwise."""
    if pi.m != geom.params.ground_size:
        raise ValueError("permutation degree does not match the ground set")
    t = geom.type_of(e)
    return geom.element_index(t, KSubset(pi.apply_to_mask(geom.masks[e])))


def act_on_flag(geom: KneserGeometry, pi: Permutation, flag) -> tuple[int, ...]:
    return tuple(sorted(act_on_element(geom, pi, e) for e in flag))


def is_type_preserving_automorphism(geom: KneserGeometry, pi: Permutation) -> bool:
    """Full check that the induced element map is a type-preserving,
    incidence-preserving bijection (both directions)."""
    n = geom.n_elements
    images = [act_on_element(geom, pi, e) for e in range(n)]
    if sorted(images) != list(range(n)):
        return False
    if any(geom.type_of(images[e]) != geom.type_of(e) for e in range(n)):
        return False
    for x in range(n):
        for y in range(x + 1, n):
            if geom.incident(x, y) != geom.incident(images[x], images[y]):
                return False
    return True


def chamber_orbit_size(geom: KneserGeometry, gens, start) -> int:
    """Size of the orbit of a chamber under the generated group."""
    start = tuple(sorted(start))
    if len(start) != geom.params.r:
        raise ValueError("start flag is not a chamber")
    seen = {start}
    queue = deque([start])
    while queue:
        flag = queue.popleft()
        for pi in gens:
            img = act_on_flag(geom, pi, flag)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen)


def _flags_of_type(geom: KneserGeometry, J):
    J = tuple(sorted(J))
    per = geom.params.per_type
    masks = geom.masks

    def extend(idx, chosen, used):
        if idx == len(J):
            yield chosen
            return
        base = J[idx] * per
        for i in range(per):
            if masks[base + i] & used == 0:
                yield from extend(idx + 1, chosen + (base + i,), used | masks[base + i])

    yield from extend(0, (), 0)


def _flag_image(obj, gen, flag):
    if isinstance(gen, Permutation):
        return act_on_flag(obj, gen, flag)
    return tuple(sorted(gen[e] for e in flag))  # element-index map


def flag_orbit_count(obj, gens, J) -> tuple[int, list[tuple[int, ...]]]:
    """Partition the flags of type J into orbits; returns (count, one
    representative per orbit).

    obj is either a built disjointness geometry with ground-set Permutation
    generators, or a plain IncidenceSystem with element-index maps (e.g.
    the mapping returned by type_swap_map) as generators.
    """
    if isinstance(obj, KneserGeometry):
        J = tuple(sorted(J))
        if any(not 0 <= t < obj.params.r for t in J):
            raise ValueError(f"types {J} out of range")
        todo = set(_flags_of_type(obj, J))
    else:
        from .incidence import flags_of_type

        todo = set(flags_of_type(obj, J))
    reps = []
    while todo:
        rep = min(todo)
        reps.append(rep)
        queue = deque([rep])
        todo.discard(rep)
        while queue:
            flag = queue.popleft()
            for gen in gens:
                img = _flag_image(obj, gen, flag)
                if img in todo:
                    todo.discard(img)
                    queue.append(img)
    return len(reps), reps


def type_swap_map(obj, sigma) -> tuple[tuple[int, ...] | None, bool]:
    """The element bijection induced by a permutation sigma of the types,
    pairing elements with equal labels across types; returns (mapping,
    valid) where valid means the map exists and preserves incidence.

    For the disjointness geometries the map is (type i, S) -> (sigma(i), S)
    and is an automorphism for every sigma; for a general labeled system it
    is invalid whenever some label has no partner of the target type.
    """
    if isinstance(obj, KneserGeometry):
        per = obj.params.per_type
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(obj.params.r)):
            raise ValueError("sigma is not a permutation of the types")
        mapping = tuple(
            sigma[e // per] * per + e % per for e in range(obj.n_elements)
        )
        ok = _preserves_incidence_geom(obj, mapping)
        return mapping, ok
    return _type_swap_system(obj, sigma)


def _preserves_incidence_geom(geom: KneserGeometry, mapping) -> bool:
    n = geom.n_elements
    for x in range(n):
        for y in range(x + 1, n):
            if geom.incident(x, y) != geom.incident(mapping[x], mapping[y]):
                return False
    return True


def _type_swap_system(sys: IncidenceSystem, sigma):
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(sys.rank)):
        raise ValueError("sigma is not a permutation of the types")
    tmap = {sys.types[i]: sys.types[sigma[i]] for i in range(sys.rank)}
    by_type_label = {}
    for e in range(sys.n_elements):
        key = (sys.type_of[e], sys.label_of(e))
        if key in by_type_label:
            return None, False  # ambiguous labels; no canonical pairing
        by_type_label[key] = e
    mapping = []
    for e in range(sys.n_elements):
        key = (tmap[sys.type_of[e]], sys.label_of(e))
        if key not in by_type_label:
            return None, False
        mapping.append(by_type_label[key])
    mapping = tuple(mapping)
    if sorted(mapping) != list(range(sys.n_elements)):
        return None, False
    for x in range(sys.n_elements):
        for y in range(x + 1, sys.n_elements):
            if sys.incident(x, y) != sys.incident(mapping[x], mapping[y]):
                return None, False
    return mapping, True


def permutation_group_order(gens) -> int:
    """Order of the generated group, as the orbit size of the identity
    tuple under composition; the action on tuples is regular, so orbit size
    equals group order.  Intended for small degree (the orbit is the whole
    group)."""
    if not gens:
        raise ValueError("need at least one generator")
    m = gens[0].m
    if any(pi.m != m for pi in gens):
        raise ValueError("generators act on different point counts")
    start = tuple(range(m))
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for pi in gens:
            img = tuple(pi(x) for x in t)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return len(seen)
