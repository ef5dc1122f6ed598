"""Total maps between finite spaces and their decidable properties.

A map is a dense assignment array over domain points.  Every predicate is
decided by exhausting the relevant finite family (opens, regular-closed sets,
SC*-open sets, neighborhoods), so results are exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .classes import (
    _sc_star_closure_table,
    _sc_star_interior_table,
    regular_closed_masks,
    sc_star_closed_masks,
    sc_star_open_masks,
)
from .core import FiniteSpace, GroundMismatch, PointOutOfRange, PointSet, bit_members
from .separation import is_almost_sc_star_normal

# How the neighborhood quantifier of almost SC*-irresoluteness ranges:
# "all" admits every superset of an SC*-open set around the point, while
# "sc-star-open" restricts to SC*-open neighborhoods only.
NBHD_ALL = "all"
NBHD_SC_STAR_OPEN = "sc-star-open"
NEIGHBORHOOD_MODES = (NBHD_ALL, NBHD_SC_STAR_OPEN)


@dataclass(frozen=True)
class SpaceMap:
    """A total function between two finite spaces."""

    domain: FiniteSpace
    codomain: FiniteSpace
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.domain.size:
            raise PointOutOfRange(
                f"assignment has {len(self.assignment)} entries for a "
                f"{self.domain.size}-point domain"
            )
        for p, q in enumerate(self.assignment):
            if not 0 <= q < self.codomain.size:
                raise PointOutOfRange(
                    f"point {p} maps to {q}, outside codomain 0..{self.codomain.size - 1}"
                )

    @cached_property
    def fibers(self) -> tuple[int, ...]:
        """fibers[q] = mask of domain points mapping to codomain point q."""
        out = [0] * self.codomain.size
        for p, q in enumerate(self.assignment):
            out[q] |= 1 << p
        return tuple(out)

    def image_mask(self, a: int) -> int:
        out = 0
        for p in bit_members(a):
            out |= 1 << self.assignment[p]
        return out

    def preimage_mask(self, b: int) -> int:
        out = 0
        for q in bit_members(b):
            out |= self.fibers[q]
        return out

    def image(self, a: PointSet) -> PointSet:
        if a.ground_size != self.domain.size:
            raise GroundMismatch("image argument is not over the domain ground set")
        return PointSet(self.image_mask(a.mask), self.codomain.size)

    def preimage(self, b: PointSet) -> PointSet:
        if b.ground_size != self.codomain.size:
            raise GroundMismatch("preimage argument is not over the codomain ground set")
        return PointSet(self.preimage_mask(b.mask), self.domain.size)

    def __repr__(self) -> str:
        arrows = ",".join(f"{p}->{q}" for p, q in enumerate(self.assignment))
        return f"SpaceMap({self.domain.size}->{self.codomain.size}, {arrows})"


def identity_map(space: FiniteSpace) -> SpaceMap:
    return SpaceMap(space, space, tuple(range(space.size)))


def constant_map(domain: FiniteSpace, codomain: FiniteSpace, target: int) -> SpaceMap:
    if not 0 <= target < codomain.size:
        raise PointOutOfRange(f"constant target {target} outside codomain")
    return SpaceMap(domain, codomain, (target,) * domain.size)


@lru_cache(maxsize=None)
def _regular_closed_set(space: FiniteSpace) -> frozenset[int]:
    return frozenset(regular_closed_masks(space))


@lru_cache(maxsize=None)
def _sc_star_open_set(space: FiniteSpace) -> frozenset[int]:
    return frozenset(sc_star_open_masks(space))


@lru_cache(maxsize=None)
def _sc_star_closed_set(space: FiniteSpace) -> frozenset[int]:
    return frozenset(sc_star_closed_masks(space))


def is_surjective(f: SpaceMap) -> bool:
    return all(fib for fib in f.fibers)


def is_continuous(f: SpaceMap) -> bool:
    """Preimage of every codomain open set is open."""
    dom_opens = f.domain.open_mask_set
    return all(f.preimage_mask(o) in dom_opens for o in f.codomain.opens)


def is_rc_continuous(f: SpaceMap) -> bool:
    """Preimage of every codomain regular-closed set is regular-closed."""
    dom_rc = _regular_closed_set(f.domain)
    return all(f.preimage_mask(c) in dom_rc
               for c in regular_closed_masks(f.codomain))


def is_t_sc_star_open(f: SpaceMap) -> bool:
    """Image of every domain SC*-open set is SC*-open."""
    cod = _sc_star_open_set(f.codomain)
    return all(f.image_mask(u) in cod for u in sc_star_open_masks(f.domain))


def is_t_sc_star_closed(f: SpaceMap) -> bool:
    """Image of every domain SC*-closed set is SC*-closed."""
    cod = _sc_star_closed_set(f.codomain)
    return all(f.image_mask(u) in cod for u in sc_star_closed_masks(f.domain))


def is_sc_star_neighborhood(space: FiniteSpace, n: PointSet, p: int) -> bool:
    """Whether some SC*-open set fits between point p and the set n."""
    space._check(n)
    if not 0 <= p < space.size:
        raise PointOutOfRange(f"point {p} outside ground 0..{space.size - 1}")
    return bool(_sc_star_interior_table(space)[n.mask] >> p & 1)


def is_almost_sc_star_irresolute(f: SpaceMap, neighborhoods: str = NBHD_ALL) -> bool:
    """For every point x and SC*-neighborhood N of f(x), the SC*-closure of
    the preimage of N is an SC*-neighborhood of x."""
    if neighborhoods not in NEIGHBORHOOD_MODES:
        raise ValueError(f"unknown neighborhood mode {neighborhoods!r}")
    cod_int = _sc_star_interior_table(f.codomain)
    dom_int = _sc_star_interior_table(f.domain)
    dom_cl = _sc_star_closure_table(f.domain)
    if neighborhoods == NBHD_ALL:
        candidates = tuple(f.codomain.subset_masks())
    else:
        candidates = sc_star_open_masks(f.codomain)
    for x in range(f.domain.size):
        fx = f.assignment[x]
        for n in candidates:
            if not cod_int[n] >> fx & 1:
                continue
            trapped = dom_cl[f.preimage_mask(n)]
            if not dom_int[trapped] >> x & 1:
                return False
    return True


@dataclass(frozen=True)
class MapProfile:
    """All hypothesis predicates of the preservation checks, precomputed."""

    surjective: bool
    continuous: bool
    rc_continuous: bool
    t_sc_star_open: bool
    t_sc_star_closed: bool
    almost_sc_star_irresolute: bool


def profile(f: SpaceMap, neighborhoods: str = NBHD_ALL) -> MapProfile:
    return MapProfile(
        surjective=is_surjective(f),
        continuous=is_continuous(f),
        rc_continuous=is_rc_continuous(f),
        t_sc_star_open=is_t_sc_star_open(f),
        t_sc_star_closed=is_t_sc_star_closed(f),
        almost_sc_star_irresolute=is_almost_sc_star_irresolute(f, neighborhoods),
    )


class Verdict(enum.Enum):
    HOLDS = "Holds"
    NOT_APPLICABLE = "NotApplicable"
    COUNTEREXAMPLE = "Counterexample"


def check_open_image_preservation(f: SpaceMap,
                                  neighborhoods: str = NBHD_ALL,
                                  require_continuity: bool = True) -> Verdict:
    """Almost SC*-normality preservation under surjections that are continuous,
    T-SC*-open, rc-continuous and almost SC*-irresolute.

    ``require_continuity=False`` drops the continuity hypothesis, for probing
    whether that hypothesis is load-bearing.
    """
    p = profile(f, neighborhoods)
    hypotheses = (p.surjective and p.t_sc_star_open and p.rc_continuous
                  and p.almost_sc_star_irresolute)
    if require_continuity:
        hypotheses = hypotheses and p.continuous
    if not hypotheses or not is_almost_sc_star_normal(f.domain).holds:
        return Verdict.NOT_APPLICABLE
    if is_almost_sc_star_normal(f.codomain).holds:
        return Verdict.HOLDS
    return Verdict.COUNTEREXAMPLE


def check_closed_image_preservation(f: SpaceMap) -> Verdict:
    """Almost SC*-normality preservation under rc-continuous T-SC*-closed
    surjections."""
    p = profile(f)
    if not (p.surjective and p.rc_continuous and p.t_sc_star_closed):
        return Verdict.NOT_APPLICABLE
    if not is_almost_sc_star_normal(f.domain).holds:
        return Verdict.NOT_APPLICABLE
    if is_almost_sc_star_normal(f.codomain).holds:
        return Verdict.HOLDS
    return Verdict.COUNTEREXAMPLE
