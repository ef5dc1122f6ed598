"""Finite topological spaces over an indexed point set.

Points are integers ``0..size-1`` and every subset is carried as a bit mask
(point ``p`` contributes ``2**p``), so the numeric value of the mask is also
the canonical ordering key for subsets.  All values are immutable after
construction and every operation is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

# Ground sets above this size are rejected up front: the package works by
# exhaustively iterating set families, which stops being desk-scale beyond
# this bound.
MAX_GROUND = 16


class TopologyError(Exception):
    """Base class for all errors raised by this package."""


class PointOutOfRange(TopologyError):
    """A point index falls outside the ground set."""


class GroundMismatch(TopologyError):
    """Two values built over different ground sets were combined."""


class MissingEmptyOrFull(TopologyError):
    """A candidate topology lacks the empty set or the full set."""


class NotClosedUnderUnion(TopologyError):
    """A candidate topology misses the union of two of its members."""

    def __init__(self, first: "PointSet", second: "PointSet"):
        self.first = first
        self.second = second
        super().__init__(
            f"family is not closed under union: {first.members} | {second.members}"
        )


class NotClosedUnderIntersection(TopologyError):
    """A candidate topology misses the intersection of two of its members."""

    def __init__(self, first: "PointSet", second: "PointSet"):
        self.first = first
        self.second = second
        super().__init__(
            f"family is not closed under intersection: {first.members} & {second.members}"
        )


class SizeTooLarge(TopologyError):
    """A requested ground size exceeds the supported bound."""


class UnknownClaim(TopologyError):
    """A claim id is not present in the claim registry."""


class InternalInvariantError(TopologyError):
    """A library invariant failed; indicates a defect, not bad input."""


def bit_members(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    p = 0
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return tuple(out)


def mask_of(points: Iterable[int], ground_size: int) -> int:
    mask = 0
    for p in points:
        if not 0 <= p < ground_size:
            raise PointOutOfRange(f"point {p} outside ground 0..{ground_size - 1}")
        mask |= 1 << p
    return mask


@dataclass(frozen=True)
class PointSet:
    """A subset of a space's points, identified extensionally by its mask."""

    mask: int
    ground_size: int

    def __post_init__(self):
        if self.ground_size < 0 or self.ground_size > MAX_GROUND:
            raise SizeTooLarge(f"ground size {self.ground_size} outside 0..{MAX_GROUND}")
        if not 0 <= self.mask < (1 << self.ground_size):
            raise PointOutOfRange(
                f"mask {self.mask:#x} does not fit ground of size {self.ground_size}"
            )

    @classmethod
    def from_points(cls, points: Iterable[int], ground_size: int) -> "PointSet":
        return cls(mask_of(points, ground_size), ground_size)

    @classmethod
    def empty(cls, ground_size: int) -> "PointSet":
        return cls(0, ground_size)

    @classmethod
    def full(cls, ground_size: int) -> "PointSet":
        return cls((1 << ground_size) - 1, ground_size)

    @property
    def members(self) -> tuple[int, ...]:
        return bit_members(self.mask)

    def __contains__(self, point: int) -> bool:
        return 0 <= point < self.ground_size and bool(self.mask >> point & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def _check(self, other: "PointSet") -> None:
        if self.ground_size != other.ground_size:
            raise GroundMismatch(
                f"ground sizes differ: {self.ground_size} vs {other.ground_size}"
            )

    def __or__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.mask | other.mask, self.ground_size)

    def __and__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.mask & other.mask, self.ground_size)

    def __sub__(self, other: "PointSet") -> "PointSet":
        self._check(other)
        return PointSet(self.mask & ~other.mask, self.ground_size)

    def complement(self) -> "PointSet":
        full = (1 << self.ground_size) - 1
        return PointSet(full & ~self.mask, self.ground_size)

    def issubset(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "PointSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def render(self, labels: tuple[str, ...] | None = None) -> str:
        """Human form, e.g. ``{1,3}`` or ``{j,l}`` when labels are given."""
        if labels is None:
            inner = ",".join(str(p) for p in self.members)
        else:
            inner = ",".join(labels[p] for p in self.members)
        return "{" + inner + "}"

    def __repr__(self) -> str:
        return f"PointSet({set(self.members) if self.mask else '{}'}, ground={self.ground_size})"


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets in canonical (ascending mask) order."""

    ground_size: int
    members: tuple[PointSet, ...]

    def __post_init__(self):
        last = -1
        for ps in self.members:
            if ps.ground_size != self.ground_size:
                raise GroundMismatch("family member over a different ground set")
            if ps.mask <= last:
                raise InternalInvariantError("family members not in canonical order")
            last = ps.mask

    @classmethod
    def from_masks(cls, ground_size: int, masks: Iterable[int]) -> "SetFamily":
        uniq = sorted(set(masks))
        return cls(ground_size, tuple(PointSet(m, ground_size) for m in uniq))

    @classmethod
    def from_point_sets(cls, ground_size: int, sets: Iterable[PointSet]) -> "SetFamily":
        return cls.from_masks(ground_size, (ps.mask for ps in sets))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(ps.mask for ps in self.members)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: PointSet) -> bool:
        return any(ps.mask == item.mask for ps in self.members)

    def render(self, labels: tuple[str, ...] | None = None) -> str:
        return "{" + ", ".join(ps.render(labels) for ps in self.members) + "}"


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space: ground size plus the open-set masks.

    ``opens`` must be the full list of open sets (not a base), deduplicated
    and ascending.  Use :func:`validate_topology` to build one from untrusted
    input; the constructor itself only performs cheap structural checks.
    """

    size: int
    opens: tuple[int, ...]

    def __post_init__(self):
        if self.size < 1:
            raise PointOutOfRange("a space needs at least one point")
        if self.size > MAX_GROUND:
            raise SizeTooLarge(f"ground size {self.size} exceeds {MAX_GROUND}")
        full = (1 << self.size) - 1
        last = -1
        for m in self.opens:
            if not 0 <= m <= full:
                raise PointOutOfRange(f"open set mask {m:#x} outside ground")
            if m <= last:
                raise InternalInvariantError("opens not deduplicated and ascending")
            last = m
        if self.opens[0] != 0 or self.opens[-1] != full:
            raise MissingEmptyOrFull("opens must contain the empty set and the full set")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def open_mask_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        full = self.full_mask
        return tuple(sorted(full & ~m for m in self.opens))

    @cached_property
    def min_neighborhoods(self) -> tuple[int, ...]:
        """Smallest open set around each point (opens are intersection-closed)."""
        nbhd = []
        for p in range(self.size):
            bit = 1 << p
            m = self.full_mask
            for o in self.opens:
                if o & bit:
                    m &= o
            nbhd.append(m)
        return tuple(nbhd)

    # Primitive operators at mask level; the PointSet API below wraps them.

    def interior_mask(self, a: int) -> int:
        out = 0
        nbhd = self.min_neighborhoods
        rest = a
        while rest:
            bit = rest & -rest
            if nbhd[bit.bit_length() - 1] & ~a == 0:
                out |= bit
            rest ^= bit
        return out

    def closure_mask(self, a: int) -> int:
        out = 0
        for p, m in enumerate(self.min_neighborhoods):
            if m & a:
                out |= 1 << p
        return out

    def _check(self, a: PointSet) -> None:
        if a.ground_size != self.size:
            raise GroundMismatch(
                f"subset over ground {a.ground_size}, space has {self.size} points"
            )

    def interior(self, a: PointSet) -> PointSet:
        """Union of all open subsets of ``a``."""
        self._check(a)
        return PointSet(self.interior_mask(a.mask), self.size)

    def closure(self, a: PointSet) -> PointSet:
        """Intersection of all closed supersets of ``a``."""
        self._check(a)
        return PointSet(self.closure_mask(a.mask), self.size)

    def complement(self, a: PointSet) -> PointSet:
        self._check(a)
        return a.complement()

    def closed_sets(self) -> SetFamily:
        return SetFamily.from_masks(self.size, self.closed_masks)

    def open_sets(self) -> SetFamily:
        return SetFamily.from_masks(self.size, self.opens)

    def is_open(self, a: PointSet) -> bool:
        self._check(a)
        return a.mask in self.open_mask_set

    def is_closed(self, a: PointSet) -> bool:
        self._check(a)
        return (self.full_mask & ~a.mask) in self.open_mask_set

    def subset_masks(self) -> range:
        """All subset masks of the ground set in canonical order."""
        return range(1 << self.size)

    def point_set(self, points: Iterable[int]) -> PointSet:
        return PointSet.from_points(points, self.size)

    @property
    def family_mask(self) -> int:
        """Encoding of the whole topology: bit ``s`` set iff subset ``s`` is open.

        Usable as a canonical ordering key for spaces of equal size.
        """
        fm = 0
        for m in self.opens:
            fm |= 1 << m
        return fm

    def __repr__(self) -> str:
        sets = ",".join("{" + ",".join(map(str, bit_members(m))) + "}" for m in self.opens)
        return f"FiniteSpace(size={self.size}, opens=[{sets}])"


def topology_violation(size: int, masks: Iterable[int]):
    """First topology-axiom violation of the family, or None if it is valid.

    Shared by :func:`validate_topology` and the brute-force enumerator so both
    accept exactly the same families.
    """
    full = (1 << size) - 1
    seen = set()
    for m in masks:
        if not 0 <= m <= full:
            return PointOutOfRange(f"member mask {m:#x} outside ground of size {size}")
        seen.add(m)
    if 0 not in seen or full not in seen:
        return MissingEmptyOrFull("family must contain the empty set and the full set")
    ordered = sorted(seen)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a | b not in seen:
                return NotClosedUnderUnion(PointSet(a, size), PointSet(b, size))
            if a & b not in seen:
                return NotClosedUnderIntersection(PointSet(a, size), PointSet(b, size))
    return None


def validate_topology(size: int, candidate_opens) -> FiniteSpace:
    """Check the topology axioms and build a :class:`FiniteSpace`.

    ``candidate_opens`` may be a :class:`SetFamily`, an iterable of
    :class:`PointSet`, or an iterable of iterables of point indices.  The
    resulting family is deduplicated and canonically ordered.
    """
    if size < 1:
        raise PointOutOfRange("a space needs at least one point")
    if size > MAX_GROUND:
        raise SizeTooLarge(f"ground size {size} exceeds {MAX_GROUND}")
    masks = []
    for item in candidate_opens:
        if isinstance(item, PointSet):
            if item.ground_size != size:
                raise GroundMismatch("candidate open over a different ground set")
            masks.append(item.mask)
        elif isinstance(item, int):
            masks.append(item)
        else:
            masks.append(mask_of(item, size))
    err = topology_violation(size, masks)
    if err is not None:
        raise err
    return FiniteSpace(size, tuple(sorted(set(masks))))
