"""Generalized open/closed set classes and their derived closure operators.

Every class is decided literally from its definition: the defining family
(semi-closed, c*-open, SC*-open, ...) is enumerated for the space, memoized,
and the predicate quantifies over it.  Derived closures are intersections of
supersets drawn from the enumerated family, never fixpoint iterations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .core import FiniteSpace, InternalInvariantError, PointSet, SetFamily

# Two readings of "regularly alpha-open", selectable per call:
#   "analogy"            there is a regular-open u with u <= a <= alpha-cl(u)
#   "alpha-int-alpha-cl" a equals the alpha-interior of its alpha-closure
RALPHA_ANALOGY = "analogy"
RALPHA_INT_CL = "alpha-int-alpha-cl"
RALPHA_DEFNS = (RALPHA_ANALOGY, RALPHA_INT_CL)


class ClassLabel(enum.Enum):
    OPEN = "Open"
    CLOSED = "Closed"
    REGULAR_OPEN = "RegularOpen"
    REGULAR_CLOSED = "RegularClosed"
    SEMI_OPEN = "SemiOpen"
    SEMI_CLOSED = "SemiClosed"
    ALPHA_OPEN = "AlphaOpen"
    ALPHA_CLOSED = "AlphaClosed"
    G_ALPHA_CLOSED = "GAlphaClosed"
    G_ALPHA_OPEN = "GAlphaOpen"
    RG_ALPHA_CLOSED = "RGAlphaClosed"
    RG_ALPHA_OPEN = "RGAlphaOpen"
    C_STAR_OPEN = "CStarOpen"
    C_STAR_CLOSED = "CStarClosed"
    SC_STAR_OPEN = "SCStarOpen"
    SC_STAR_CLOSED = "SCStarClosed"
    G_CLOSED = "GClosed"
    G_OPEN = "GOpen"
    GSC_STAR_CLOSED = "GSCStarClosed"
    GSC_STAR_OPEN = "GSCStarOpen"
    SC_STAR_G_CLOSED = "SCStarGClosed"
    SC_STAR_G_OPEN = "SCStarGOpen"
    REGULARLY_SC_STAR_OPEN = "RegularlySCStarOpen"
    REGULARLY_SC_STAR_CLOSED = "RegularlySCStarClosed"
    RGSC_STAR_CLOSED = "RGSCStarClosed"
    RGSC_STAR_OPEN = "RGSCStarOpen"


_DUAL_PAIRS = [
    (ClassLabel.OPEN, ClassLabel.CLOSED),
    (ClassLabel.REGULAR_OPEN, ClassLabel.REGULAR_CLOSED),
    (ClassLabel.SEMI_OPEN, ClassLabel.SEMI_CLOSED),
    (ClassLabel.ALPHA_OPEN, ClassLabel.ALPHA_CLOSED),
    (ClassLabel.G_ALPHA_OPEN, ClassLabel.G_ALPHA_CLOSED),
    (ClassLabel.RG_ALPHA_OPEN, ClassLabel.RG_ALPHA_CLOSED),
    (ClassLabel.C_STAR_OPEN, ClassLabel.C_STAR_CLOSED),
    (ClassLabel.SC_STAR_OPEN, ClassLabel.SC_STAR_CLOSED),
    (ClassLabel.G_OPEN, ClassLabel.G_CLOSED),
    (ClassLabel.GSC_STAR_OPEN, ClassLabel.GSC_STAR_CLOSED),
    (ClassLabel.SC_STAR_G_OPEN, ClassLabel.SC_STAR_G_CLOSED),
    (ClassLabel.REGULARLY_SC_STAR_OPEN, ClassLabel.REGULARLY_SC_STAR_CLOSED),
    (ClassLabel.RGSC_STAR_OPEN, ClassLabel.RGSC_STAR_CLOSED),
]

#: Complement duality: ``a`` satisfies a label iff its complement satisfies the dual.
DUAL_LABEL: dict[ClassLabel, ClassLabel] = {}
for _o, _c in _DUAL_PAIRS:
    DUAL_LABEL[_o] = _c
    DUAL_LABEL[_c] = _o


def label_from_name(name: str) -> ClassLabel:
    for lab in ClassLabel:
        if lab.value == name:
            return lab
    raise KeyError(f"unknown class label {name!r}")


# ---------------------------------------------------------------------------
# Mask-level predicates.  The public API (PointSet in, PointSet/bool out)
# delegates to these; enumeration sweeps use them directly for speed.
# ---------------------------------------------------------------------------


def _is_regular_open_mask(space: FiniteSpace, a: int) -> bool:
    return a == space.interior_mask(space.closure_mask(a))


def _is_regular_closed_mask(space: FiniteSpace, a: int) -> bool:
    return a == space.closure_mask(space.interior_mask(a))


def _is_semi_open_mask(space: FiniteSpace, a: int) -> bool:
    return a & ~space.closure_mask(space.interior_mask(a)) == 0


def _is_semi_closed_mask(space: FiniteSpace, a: int) -> bool:
    return _is_semi_open_mask(space, space.full_mask & ~a)


def _is_alpha_open_mask(space: FiniteSpace, a: int) -> bool:
    return a & ~space.interior_mask(space.closure_mask(space.interior_mask(a))) == 0


def _is_alpha_closed_mask(space: FiniteSpace, a: int) -> bool:
    return _is_alpha_open_mask(space, space.full_mask & ~a)


def _is_c_star_open_mask(space: FiniteSpace, a: int) -> bool:
    if space.interior_mask(space.closure_mask(a)) & ~a:
        return False
    return a & ~space.closure_mask(space.interior_mask(a)) == 0


def _is_c_star_closed_mask(space: FiniteSpace, a: int) -> bool:
    return _is_c_star_open_mask(space, space.full_mask & ~a)


@lru_cache(maxsize=None)
def semi_open_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_semi_open_mask(space, a))


@lru_cache(maxsize=None)
def semi_closed_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_semi_closed_mask(space, a))


@lru_cache(maxsize=None)
def alpha_open_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_alpha_open_mask(space, a))


@lru_cache(maxsize=None)
def alpha_closed_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_alpha_closed_mask(space, a))


@lru_cache(maxsize=None)
def c_star_open_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_c_star_open_mask(space, a))


@lru_cache(maxsize=None)
def regular_open_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_regular_open_mask(space, a))


@lru_cache(maxsize=None)
def regular_closed_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_regular_closed_mask(space, a))


def _intersect_supersets(a: int, family: tuple[int, ...], full: int) -> int:
    out = full
    for s in family:
        if a & ~s == 0:
            out &= s
    return out


def _union_subsets(a: int, family: tuple[int, ...]) -> int:
    out = 0
    for s in family:
        if s & ~a == 0:
            out |= s
    return out


@lru_cache(maxsize=None)
def _semi_closure_table(space: FiniteSpace) -> tuple[int, ...]:
    fam = semi_closed_masks(space)
    full = space.full_mask
    return tuple(_intersect_supersets(a, fam, full) for a in space.subset_masks())


@lru_cache(maxsize=None)
def _alpha_closure_table(space: FiniteSpace) -> tuple[int, ...]:
    fam = alpha_closed_masks(space)
    full = space.full_mask
    return tuple(_intersect_supersets(a, fam, full) for a in space.subset_masks())


@lru_cache(maxsize=None)
def _alpha_interior_table(space: FiniteSpace) -> tuple[int, ...]:
    fam = alpha_open_masks(space)
    return tuple(_union_subsets(a, fam) for a in space.subset_masks())


def _is_sc_star_closed_mask(space: FiniteSpace, a: int) -> bool:
    scl = _semi_closure_table(space)[a]
    for u in c_star_open_masks(space):
        if a & ~u == 0 and scl & ~u:
            return False
    return True


def _is_sc_star_open_mask(space: FiniteSpace, a: int) -> bool:
    return _is_sc_star_closed_mask(space, space.full_mask & ~a)


@lru_cache(maxsize=None)
def sc_star_closed_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_sc_star_closed_mask(space, a))


@lru_cache(maxsize=None)
def sc_star_open_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(a for a in space.subset_masks() if _is_sc_star_open_mask(space, a))


@lru_cache(maxsize=None)
def _sc_star_closure_table(space: FiniteSpace) -> tuple[int, ...]:
    fam = sc_star_closed_masks(space)
    full = space.full_mask
    return tuple(_intersect_supersets(a, fam, full) for a in space.subset_masks())


@lru_cache(maxsize=None)
def _sc_star_interior_table(space: FiniteSpace) -> tuple[int, ...]:
    fam = sc_star_open_masks(space)
    return tuple(_union_subsets(a, fam) for a in space.subset_masks())


def _is_g_closed_mask(space: FiniteSpace, a: int) -> bool:
    cl = space.closure_mask(a)
    for u in space.opens:
        if a & ~u == 0 and cl & ~u:
            return False
    return True


def _is_g_open_mask(space: FiniteSpace, a: int) -> bool:
    return _is_g_closed_mask(space, space.full_mask & ~a)


def _is_gsc_star_closed_mask(space: FiniteSpace, a: int) -> bool:
    sccl = _sc_star_closure_table(space)[a]
    for u in space.opens:
        if a & ~u == 0 and sccl & ~u:
            return False
    return True


def _is_gsc_star_open_mask(space: FiniteSpace, a: int) -> bool:
    return _is_gsc_star_closed_mask(space, space.full_mask & ~a)


def _is_sc_star_g_closed_mask(space: FiniteSpace, a: int) -> bool:
    sccl = _sc_star_closure_table(space)[a]
    for u in sc_star_open_masks(space):
        if a & ~u == 0 and sccl & ~u:
            return False
    return True


def _is_sc_star_g_open_mask(space: FiniteSpace, a: int) -> bool:
    return _is_sc_star_g_closed_mask(space, space.full_mask & ~a)


def _is_regularly_sc_star_open_mask(space: FiniteSpace, a: int) -> bool:
    sccl = _sc_star_closure_table(space)
    for u in regular_open_masks(space):
        if u & ~a == 0 and a & ~sccl[u] == 0:
            return True
    return False


def _is_regularly_sc_star_closed_mask(space: FiniteSpace, a: int) -> bool:
    return _is_regularly_sc_star_open_mask(space, space.full_mask & ~a)


@lru_cache(maxsize=None)
def regularly_sc_star_open_masks(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(
        a for a in space.subset_masks() if _is_regularly_sc_star_open_mask(space, a)
    )


def _is_rgsc_star_closed_mask(space: FiniteSpace, a: int) -> bool:
    sccl = _sc_star_closure_table(space)[a]
    for u in regularly_sc_star_open_masks(space):
        if a & ~u == 0 and sccl & ~u:
            return False
    return True


def _is_rgsc_star_open_mask(space: FiniteSpace, a: int) -> bool:
    return _is_rgsc_star_closed_mask(space, space.full_mask & ~a)


def _is_g_alpha_closed_mask(space: FiniteSpace, a: int) -> bool:
    acl = _alpha_closure_table(space)[a]
    for u in alpha_open_masks(space):
        if a & ~u == 0 and acl & ~u:
            return False
    return True


def _is_g_alpha_open_mask(space: FiniteSpace, a: int) -> bool:
    return _is_g_alpha_closed_mask(space, space.full_mask & ~a)


@lru_cache(maxsize=None)
def regularly_alpha_open_masks(space: FiniteSpace, defn: str = RALPHA_ANALOGY) -> tuple[int, ...]:
    """The regularly-alpha-open family under the selected reading."""
    if defn == RALPHA_ANALOGY:
        acl = _alpha_closure_table(space)
        regs = regular_open_masks(space)
        out = []
        for a in space.subset_masks():
            for u in regs:
                if u & ~a == 0 and a & ~acl[u] == 0:
                    out.append(a)
                    break
        return tuple(out)
    if defn == RALPHA_INT_CL:
        acl = _alpha_closure_table(space)
        aint = _alpha_interior_table(space)
        return tuple(a for a in space.subset_masks() if a == aint[acl[a]])
    raise ValueError(f"unknown regularly-alpha-open definition {defn!r}")


def _is_rg_alpha_closed_mask(space: FiniteSpace, a: int, defn: str = RALPHA_ANALOGY) -> bool:
    acl = _alpha_closure_table(space)[a]
    for u in regularly_alpha_open_masks(space, defn):
        if a & ~u == 0 and acl & ~u:
            return False
    return True


def _is_rg_alpha_open_mask(space: FiniteSpace, a: int, defn: str = RALPHA_ANALOGY) -> bool:
    return _is_rg_alpha_closed_mask(space, space.full_mask & ~a, defn)


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def _wrap(space: FiniteSpace, mask: int) -> PointSet:
    return PointSet(mask, space.size)


def is_regular_open(space: FiniteSpace, a: PointSet) -> bool:
    """a equals the interior of its closure."""
    space._check(a)
    return _is_regular_open_mask(space, a.mask)


def is_regular_closed(space: FiniteSpace, a: PointSet) -> bool:
    """a equals the closure of its interior."""
    space._check(a)
    return _is_regular_closed_mask(space, a.mask)


def is_semi_open(space: FiniteSpace, a: PointSet) -> bool:
    """a is contained in the closure of its interior."""
    space._check(a)
    return _is_semi_open_mask(space, a.mask)


def is_semi_closed(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_semi_closed_mask(space, a.mask)


def semi_closure(space: FiniteSpace, a: PointSet) -> PointSet:
    """Intersection of all semi-closed supersets of ``a``.

    The result is re-checked to be semi-closed; a failure would be a library
    defect and raises :class:`InternalInvariantError`.
    """
    space._check(a)
    r = _semi_closure_table(space)[a.mask]
    if not _is_semi_closed_mask(space, r):
        raise InternalInvariantError(
            f"semi-closure of {a.members} is not semi-closed in {space!r}"
        )
    return _wrap(space, r)


def is_alpha_open(space: FiniteSpace, a: PointSet) -> bool:
    """a is contained in int(cl(int(a)))."""
    space._check(a)
    return _is_alpha_open_mask(space, a.mask)


def is_alpha_closed(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_alpha_closed_mask(space, a.mask)


def alpha_closure(space: FiniteSpace, a: PointSet) -> PointSet:
    """Intersection of all alpha-closed supersets of ``a`` (re-checked alpha-closed)."""
    space._check(a)
    r = _alpha_closure_table(space)[a.mask]
    if not _is_alpha_closed_mask(space, r):
        raise InternalInvariantError(
            f"alpha-closure of {a.members} is not alpha-closed in {space!r}"
        )
    return _wrap(space, r)


def alpha_interior(space: FiniteSpace, a: PointSet) -> PointSet:
    space._check(a)
    return _wrap(space, _alpha_interior_table(space)[a.mask])


def is_c_star_open(space: FiniteSpace, a: PointSet) -> bool:
    """int(cl(a)) <= a <= cl(int(a))."""
    space._check(a)
    return _is_c_star_open_mask(space, a.mask)


def is_c_star_closed(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_c_star_closed_mask(space, a.mask)


def is_sc_star_closed(space: FiniteSpace, a: PointSet) -> bool:
    """Every c*-open superset of ``a`` contains the semi-closure of ``a``."""
    space._check(a)
    return _is_sc_star_closed_mask(space, a.mask)


def is_sc_star_open(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_sc_star_open_mask(space, a.mask)


def sc_star_closure(space: FiniteSpace, a: PointSet) -> PointSet:
    """Intersection of all SC*-closed supersets of ``a``.

    Whether this intersection is itself SC*-closed is not assumed; use
    :func:`sc_star_closure_verified` (or sweep claim P1) to check it.
    """
    space._check(a)
    return _wrap(space, _sc_star_closure_table(space)[a.mask])


def sc_star_closure_verified(space: FiniteSpace, a: PointSet) -> tuple[PointSet, bool]:
    """The SC*-closure plus whether the result is itself SC*-closed."""
    space._check(a)
    r = _sc_star_closure_table(space)[a.mask]
    return _wrap(space, r), _is_sc_star_closed_mask(space, r)


def sc_star_interior(space: FiniteSpace, a: PointSet) -> PointSet:
    """Union of all SC*-open subsets of ``a``."""
    space._check(a)
    return _wrap(space, _sc_star_interior_table(space)[a.mask])


def is_g_closed(space: FiniteSpace, a: PointSet) -> bool:
    """Every open superset of ``a`` contains the closure of ``a``."""
    space._check(a)
    return _is_g_closed_mask(space, a.mask)


def is_g_open(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_g_open_mask(space, a.mask)


def is_gsc_star_closed(space: FiniteSpace, a: PointSet) -> bool:
    """Every open superset of ``a`` contains the SC*-closure of ``a``."""
    space._check(a)
    return _is_gsc_star_closed_mask(space, a.mask)


def is_gsc_star_open(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_gsc_star_open_mask(space, a.mask)


def is_sc_star_g_closed(space: FiniteSpace, a: PointSet) -> bool:
    """Every SC*-open superset of ``a`` contains the SC*-closure of ``a``."""
    space._check(a)
    return _is_sc_star_g_closed_mask(space, a.mask)


def is_sc_star_g_open(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_sc_star_g_open_mask(space, a.mask)


def is_regularly_sc_star_open(space: FiniteSpace, a: PointSet) -> bool:
    """Some regular-open u satisfies u <= a <= SC*-cl(u)."""
    space._check(a)
    return _is_regularly_sc_star_open_mask(space, a.mask)


def is_regularly_sc_star_closed(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_regularly_sc_star_closed_mask(space, a.mask)


def is_rgsc_star_closed(space: FiniteSpace, a: PointSet) -> bool:
    """Every regularly-SC*-open superset of ``a`` contains SC*-cl(a)."""
    space._check(a)
    return _is_rgsc_star_closed_mask(space, a.mask)


def is_rgsc_star_open(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_rgsc_star_open_mask(space, a.mask)


def is_g_alpha_closed(space: FiniteSpace, a: PointSet) -> bool:
    """Every alpha-open superset of ``a`` contains the alpha-closure of ``a``."""
    space._check(a)
    return _is_g_alpha_closed_mask(space, a.mask)


def is_g_alpha_open(space: FiniteSpace, a: PointSet) -> bool:
    space._check(a)
    return _is_g_alpha_open_mask(space, a.mask)


def is_rg_alpha_closed(space: FiniteSpace, a: PointSet, defn: str = RALPHA_ANALOGY) -> bool:
    """Every regularly-alpha-open superset of ``a`` contains alpha-cl(a)."""
    space._check(a)
    return _is_rg_alpha_closed_mask(space, a.mask, defn)


def is_rg_alpha_open(space: FiniteSpace, a: PointSet, defn: str = RALPHA_ANALOGY) -> bool:
    space._check(a)
    return _is_rg_alpha_open_mask(space, a.mask, defn)


# Label -> mask predicate.  The two rg-alpha labels take the extra defn argument.
_LABEL_PREDICATES = {
    ClassLabel.OPEN: lambda sp, a: a in sp.open_mask_set,
    ClassLabel.CLOSED: lambda sp, a: (sp.full_mask & ~a) in sp.open_mask_set,
    ClassLabel.REGULAR_OPEN: _is_regular_open_mask,
    ClassLabel.REGULAR_CLOSED: _is_regular_closed_mask,
    ClassLabel.SEMI_OPEN: _is_semi_open_mask,
    ClassLabel.SEMI_CLOSED: _is_semi_closed_mask,
    ClassLabel.ALPHA_OPEN: _is_alpha_open_mask,
    ClassLabel.ALPHA_CLOSED: _is_alpha_closed_mask,
    ClassLabel.G_ALPHA_CLOSED: _is_g_alpha_closed_mask,
    ClassLabel.G_ALPHA_OPEN: _is_g_alpha_open_mask,
    ClassLabel.C_STAR_OPEN: _is_c_star_open_mask,
    ClassLabel.C_STAR_CLOSED: _is_c_star_closed_mask,
    ClassLabel.SC_STAR_OPEN: _is_sc_star_open_mask,
    ClassLabel.SC_STAR_CLOSED: _is_sc_star_closed_mask,
    ClassLabel.G_CLOSED: _is_g_closed_mask,
    ClassLabel.G_OPEN: _is_g_open_mask,
    ClassLabel.GSC_STAR_CLOSED: _is_gsc_star_closed_mask,
    ClassLabel.GSC_STAR_OPEN: _is_gsc_star_open_mask,
    ClassLabel.SC_STAR_G_CLOSED: _is_sc_star_g_closed_mask,
    ClassLabel.SC_STAR_G_OPEN: _is_sc_star_g_open_mask,
    ClassLabel.REGULARLY_SC_STAR_OPEN: _is_regularly_sc_star_open_mask,
    ClassLabel.REGULARLY_SC_STAR_CLOSED: _is_regularly_sc_star_closed_mask,
    ClassLabel.RGSC_STAR_CLOSED: _is_rgsc_star_closed_mask,
    ClassLabel.RGSC_STAR_OPEN: _is_rgsc_star_open_mask,
}

_RALPHA_LABELS = {ClassLabel.RG_ALPHA_CLOSED: _is_rg_alpha_closed_mask,
                  ClassLabel.RG_ALPHA_OPEN: _is_rg_alpha_open_mask}


def satisfies(space: FiniteSpace, a: PointSet, label: ClassLabel,
              ralpha_defn: str = RALPHA_ANALOGY) -> bool:
    """Whether subset ``a`` carries ``label`` in ``space``."""
    space._check(a)
    if label in _RALPHA_LABELS:
        return _RALPHA_LABELS[label](space, a.mask, ralpha_defn)
    return _LABEL_PREDICATES[label](space, a.mask)


@dataclass(frozen=True)
class ClassificationReport:
    """All class labels a subset satisfies in a space."""

    space: FiniteSpace
    subset: PointSet
    labels: frozenset[ClassLabel]

    def sorted_labels(self) -> tuple[ClassLabel, ...]:
        order = {lab: i for i, lab in enumerate(ClassLabel)}
        return tuple(sorted(self.labels, key=order.__getitem__))


def classify(space: FiniteSpace, a: PointSet,
             ralpha_defn: str = RALPHA_ANALOGY) -> ClassificationReport:
    """Evaluate every class predicate on ``(space, a)``."""
    space._check(a)
    labels = {lab for lab in _LABEL_PREDICATES if _LABEL_PREDICATES[lab](space, a.mask)}
    for lab, pred in _RALPHA_LABELS.items():
        if pred(space, a.mask, ralpha_defn):
            labels.add(lab)
    return ClassificationReport(space, a, frozenset(labels))


@lru_cache(maxsize=None)
def _family_masks(space: FiniteSpace, label: ClassLabel, ralpha_defn: str) -> tuple[int, ...]:
    if label in _RALPHA_LABELS:
        pred = _RALPHA_LABELS[label]
        return tuple(a for a in space.subset_masks() if pred(space, a, ralpha_defn))
    pred = _LABEL_PREDICATES[label]
    return tuple(a for a in space.subset_masks() if pred(space, a))


def family_of(space: FiniteSpace, label: ClassLabel,
              ralpha_defn: str = RALPHA_ANALOGY) -> SetFamily:
    """All subsets of the space satisfying ``label``, canonically ordered."""
    return SetFamily.from_masks(space.size, _family_masks(space, label, ralpha_defn))
