"""Separation properties of finite spaces.

Normality asks for disjoint open sets around disjoint closed pairs; the
"almost" variants relax one side of the pair to regular-closed, and the
SC*-variant additionally draws the separating sets from the SC*-open family.
All quantifiers run exhaustively in canonical subset order, so failing pairs
and witnesses are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classes import (
    RALPHA_ANALOGY,
    ClassLabel,
    _family_masks,
    _is_regular_closed_mask,
    _is_rgsc_star_closed_mask,
    _sc_star_closure_table,
    _sc_star_interior_table,
    regular_closed_masks,
    regular_open_masks,
    satisfies,
    sc_star_closed_masks,
    sc_star_open_masks,
)
from .core import FiniteSpace, PointSet


@dataclass(frozen=True)
class SeparationWitness:
    """A disjoint pair of sets of the stated kind, covering a separation pair."""

    left: PointSet
    right: PointSet
    kind: ClassLabel

    def verify(self, space: FiniteSpace,
               left_covers: PointSet | None = None,
               right_covers: PointSet | None = None) -> bool:
        """Re-check every invariant against the given space.

        When ``left_covers``/``right_covers`` are supplied, also checks the
        containments left ⊇ left_covers and right ⊇ right_covers.
        """
        space._check(self.left)
        space._check(self.right)
        if not self.left.isdisjoint(self.right):
            return False
        if not satisfies(space, self.left, self.kind):
            return False
        if not satisfies(space, self.right, self.kind):
            return False
        if left_covers is not None and not left_covers.issubset(self.left):
            return False
        if right_covers is not None and not right_covers.issubset(self.right):
            return False
        return True


@dataclass(frozen=True)
class SandwichWitness:
    """A set of the stated kind squeezed between an inner set and an outer one."""

    m: PointSet
    m_closure: PointSet
    kind: ClassLabel

    def verify(self, space: FiniteSpace, inner: PointSet, outer: PointSet) -> bool:
        space._check(self.m)
        if not satisfies(space, self.m, self.kind):
            return False
        sccl = _sc_star_closure_table(space)[self.m.mask]
        if sccl != self.m_closure.mask:
            return False
        return (inner.issubset(self.m)
                and self.m.mask & ~sccl == 0
                and sccl & ~outer.mask == 0)


@dataclass(frozen=True)
class SeparationCheck:
    """Outcome of a separation scan; carries the first failing pair if any."""

    holds: bool
    failing_pair: tuple[PointSet, PointSet] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _first_witness_masks(a: int, b: int, fam: tuple[int, ...]):
    for u in fam:
        if a & ~u:
            continue
        for v in fam:
            if b & ~v or u & v:
                continue
            return u, v
    return None


def _first_failing_pair(left_fam, right_fam, witness_fam):
    for a in left_fam:
        for b in right_fam:
            if a & b:
                continue
            if _first_witness_masks(a, b, witness_fam) is None:
                return a, b
    return None


@lru_cache(maxsize=None)
def _normal_failure(space: FiniteSpace):
    closed = space.closed_masks
    return _first_failing_pair(closed, closed, space.opens)


@lru_cache(maxsize=None)
def _almost_normal_failure(space: FiniteSpace):
    return _first_failing_pair(space.closed_masks, regular_closed_masks(space),
                               space.opens)


@lru_cache(maxsize=None)
def _almost_sc_star_normal_failure(space: FiniteSpace):
    return _first_failing_pair(space.closed_masks, regular_closed_masks(space),
                               sc_star_open_masks(space))


def _as_check(space: FiniteSpace, failure) -> SeparationCheck:
    if failure is None:
        return SeparationCheck(True)
    a, b = failure
    return SeparationCheck(False, (PointSet(a, space.size), PointSet(b, space.size)))


def is_normal(space: FiniteSpace) -> SeparationCheck:
    """Every disjoint pair of closed sets splits into disjoint open sets."""
    return _as_check(space, _normal_failure(space))


def is_almost_normal(space: FiniteSpace) -> SeparationCheck:
    """Disjoint (closed, regular-closed) pairs split into disjoint open sets."""
    return _as_check(space, _almost_normal_failure(space))


def is_almost_sc_star_normal(space: FiniteSpace) -> SeparationCheck:
    """Disjoint (closed, regular-closed) pairs split into disjoint SC*-open sets."""
    return _as_check(space, _almost_sc_star_normal_failure(space))


def separating_witness(space: FiniteSpace, a: PointSet, b: PointSet,
                       kind: ClassLabel = ClassLabel.OPEN,
                       ralpha_defn: str = RALPHA_ANALOGY) -> SeparationWitness | None:
    """First disjoint pair of kind-sets covering (a, b), in canonical order."""
    space._check(a)
    space._check(b)
    fam = _family_masks(space, kind, ralpha_defn)
    found = _first_witness_masks(a.mask, b.mask, fam)
    if found is None:
        return None
    u, v = found
    return SeparationWitness(PointSet(u, space.size), PointSet(v, space.size), kind)


def _sandwich_witness_mask(space: FiniteSpace, i: int, j: int,
                           fam: tuple[int, ...], strict_paper: bool):
    sccl = _sc_star_closure_table(space)
    if strict_paper:
        # Printed chain: i <= m <= SC*-cl(i) <= j.
        if sccl[i] & ~j:
            return None
        for m in fam:
            if i & ~m == 0 and m & ~sccl[i] == 0:
                return m
        return None
    # Proof chain: i <= m and SC*-cl(m) <= j.
    for m in fam:
        if i & ~m == 0 and sccl[m] & ~j == 0:
            return m
    return None


def sandwich_witness(space: FiniteSpace, inner: PointSet, outer: PointSet,
                     kind: ClassLabel = ClassLabel.GSC_STAR_OPEN,
                     strict_paper: bool = False) -> SandwichWitness | None:
    """First kind-set m with inner ⊆ m and SC*-cl trapped under outer."""
    space._check(inner)
    space._check(outer)
    fam = _family_masks(space, kind, RALPHA_ANALOGY)
    m = _sandwich_witness_mask(space, inner.mask, outer.mask, fam, strict_paper)
    if m is None:
        return None
    sccl = _sc_star_closure_table(space)[m]
    return SandwichWitness(PointSet(m, space.size), PointSet(sccl, space.size), kind)


def _sandwich_condition(space: FiniteSpace, fam: tuple[int, ...],
                        strict_paper: bool) -> bool:
    for i in space.closed_masks:
        for j in regular_open_masks(space):
            if i & ~j:
                continue
            if _sandwich_witness_mask(space, i, j, fam, strict_paper) is None:
                return False
    return True


def _characterization_six(space: FiniteSpace) -> bool:
    """Independent re-statement of the SC*-open separation condition.

    Deliberately shares no code with is_almost_sc_star_normal: the SC*-open
    family is re-derived by complementing the SC*-closed family, the pair
    quantifier admits both orientations of (closed, regular-closed), and the
    witness scan runs in descending order.  Must always agree with condition 1.
    """
    full = space.full_mask
    sc_open = frozenset(full & ~m for m in sc_star_closed_masks(space))
    closed = frozenset(space.closed_masks)
    rclosed = frozenset(m for m in space.subset_masks()
                        if _is_regular_closed_mask(space, m))
    subsets = tuple(space.subset_masks())
    for i in subsets:
        for j in subsets:
            if i & j:
                continue
            if not ((i in closed and j in rclosed)
                    or (i in rclosed and j in closed)):
                continue
            found = False
            for m in reversed(subsets):
                if m not in sc_open or i & ~m:
                    continue
                for n in reversed(subsets):
                    if n not in sc_open or j & ~n or m & n:
                        continue
                    found = True
                    break
                if found:
                    break
            if not found:
                return False
    return True


@lru_cache(maxsize=None)
def normality_characterizations(space: FiniteSpace,
                                strict_paper: bool = False) -> tuple[bool, ...]:
    """The six equivalent formulations of almost SC*-normality, evaluated
    independently.

    1. disjoint (closed, regular-closed) pairs split by SC*-open sets;
    2. same pairs split by gSC*-open sets;
    3. same pairs split by rgSC*-open sets;
    4. every closed set inside a regular-open set is trapped by a gSC*-open
       sandwich (strict mode evaluates the variant chain through the closed
       set's own SC*-closure);
    5. the same sandwich with an rgSC*-open set;
    6. a from-scratch restatement of 1 on a separately derived family.

    All six are returned so disagreements are visible; callers that need a
    single verdict use :func:`characterizations_agree`.
    """
    gsc = _family_masks(space, ClassLabel.GSC_STAR_OPEN, RALPHA_ANALOGY)
    rgsc = _family_masks(space, ClassLabel.RGSC_STAR_OPEN, RALPHA_ANALOGY)
    closed = space.closed_masks
    rclosed = regular_closed_masks(space)
    return (
        is_almost_sc_star_normal(space).holds,
        _first_failing_pair(closed, rclosed, gsc) is None,
        _first_failing_pair(closed, rclosed, rgsc) is None,
        _sandwich_condition(space, gsc, strict_paper),
        _sandwich_condition(space, rgsc, strict_paper),
        _characterization_six(space),
    )


def characterizations_agree(space: FiniteSpace, strict_paper: bool = False) -> bool:
    return len(set(normality_characterizations(space, strict_paper))) == 1


def rgsc_star_open_characterization(space: FiniteSpace, a: PointSet) -> bool:
    """Whether the interior-trap description of rgSC*-open holds at ``a``.

    Left side: a is rgSC*-open.  Right side: every regular-closed subset of a
    lies inside the SC*-interior of a.  Returns True when the two sides agree
    (either both hold or both fail); False flags a live discrepancy.
    """
    space._check(a)
    m = a.mask
    left = _is_rgsc_star_closed_mask(space, space.full_mask & ~m)
    sci = _sc_star_interior_table(space)[m]
    right = True
    for f in regular_closed_masks(space):
        if f & ~m == 0 and f & ~sci:
            right = False
            break
    return left == right
