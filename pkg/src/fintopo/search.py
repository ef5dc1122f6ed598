"""Exhaustive enumeration of small topologies and the claim-sweep engine.

Two independent enumeration methods are provided so each can validate the
other: ``brute`` filters every family of subsets through the topology axioms,
``preorder`` generates reflexive-transitive relations and takes their up-sets
(finite topologies correspond exactly to preorders).  Claim sweeps quantify a
registered statement over every enumerated space (and its subsets or maps)
and report replayable counterexamples.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import maps as maps_mod
from .classes import (
    RALPHA_ANALOGY,
    ClassLabel,
    _is_sc_star_closed_mask,
    _sc_star_closure_table,
    satisfies,
)
from .core import (
    FiniteSpace,
    InternalInvariantError,
    PointSet,
    SizeTooLarge,
    UnknownClaim,
    topology_violation,
)
from .maps import SpaceMap, Verdict
from .separation import (
    is_almost_normal,
    is_almost_sc_star_normal,
    is_normal,
    normality_characterizations,
    rgsc_star_open_characterization,
)

BRUTE_MAX_POINTS = 4
PREORDER_MAX_POINTS = 5
MAX_MAP_COUNT = 10_000_000


def _brute_topologies(n: int):
    subset_count = 1 << n
    full_bit = 1 << (subset_count - 1)
    for fam in range(1 << subset_count):
        if not fam & 1 or not fam & full_bit:
            continue
        masks = [s for s in range(subset_count) if fam >> s & 1]
        if topology_violation(n, masks) is None:
            yield FiniteSpace(n, tuple(masks))


def _preorder_rows(n: int):
    rows = [0] * n
    limit = 1 << n

    def rec(k: int):
        if k == n:
            yield tuple(rows)
            return
        for r in range(limit):
            if not r >> k & 1:
                continue
            ok = True
            for j in range(k):
                rj = rows[j]
                if r >> j & 1 and rj & ~r:
                    ok = False
                    break
                if rj >> k & 1 and r & ~rj:
                    ok = False
                    break
            if ok:
                rows[k] = r
                yield from rec(k + 1)

    yield from rec(0)


def _preorder_topologies(n: int):
    for rows in _preorder_rows(n):
        opens = []
        for u in range(1 << n):
            rest = u
            is_up = True
            while rest:
                bit = rest & -rest
                if rows[bit.bit_length() - 1] & ~u:
                    is_up = False
                    break
                rest ^= bit
            if is_up:
                opens.append(u)
        yield FiniteSpace(n, tuple(opens))


@lru_cache(maxsize=None)
def enumerate_topologies(n: int, method: str = "preorder") -> tuple[FiniteSpace, ...]:
    """Every labeled topology on n points, sorted by family encoding.

    ``brute`` supports n <= 4, ``preorder`` n <= 5; both orderings agree.
    """
    if n < 1:
        raise SizeTooLarge("need at least one point")
    if method == "brute":
        if n > BRUTE_MAX_POINTS:
            raise SizeTooLarge(f"brute enumeration supports n <= {BRUTE_MAX_POINTS}")
        spaces = tuple(_brute_topologies(n))
    elif method == "preorder":
        if n > PREORDER_MAX_POINTS:
            raise SizeTooLarge(
                f"preorder enumeration supports n <= {PREORDER_MAX_POINTS}"
            )
        spaces = tuple(sorted(_preorder_topologies(n), key=lambda s: s.family_mask))
    else:
        raise ValueError(f"unknown enumeration method {method!r}")
    keys = [s.family_mask for s in spaces]
    if len(set(keys)) != len(keys):
        raise InternalInvariantError("duplicate topology in enumeration")
    return spaces


def enumerate_maps(x: FiniteSpace, y: FiniteSpace, surjective_only: bool = False):
    """All assignments from x's points to y's points, lexicographic order."""
    total = y.size ** x.size
    if total > MAX_MAP_COUNT:
        raise SizeTooLarge(f"{total} assignments exceed the enumeration bound")
    all_points = frozenset(range(y.size))
    for assignment in itertools.product(range(y.size), repeat=x.size):
        if surjective_only and set(assignment) != all_points:
            continue
        yield SpaceMap(x, y, assignment)


# ---------------------------------------------------------------------------
# Claim registry
# ---------------------------------------------------------------------------

EXPECT_ZERO = "zero"          # violations indicate a finding
EXPECT_MEASURE = "measure"    # outcome is measured and documented either way
EXPECT_WITNESS = "witness"    # at least one instance should exist
EXPECT_REPORT = "report"      # existence reported, neither outcome is an error


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    statement: str
    hypothesis: str
    conclusion: str
    expectation: str


_SUBSET_IMPLICATIONS: dict[str, tuple[ClassLabel, ClassLabel]] = {
    "C1": (ClassLabel.CLOSED, ClassLabel.SC_STAR_CLOSED),
    "C2a": (ClassLabel.SC_STAR_CLOSED, ClassLabel.GSC_STAR_CLOSED),
    "C2b": (ClassLabel.GSC_STAR_CLOSED, ClassLabel.SC_STAR_CLOSED),
    "C3a": (ClassLabel.GSC_STAR_CLOSED, ClassLabel.SC_STAR_G_CLOSED),
    "C3b": (ClassLabel.SC_STAR_G_CLOSED, ClassLabel.GSC_STAR_CLOSED),
    "C4": (ClassLabel.CLOSED, ClassLabel.G_CLOSED),
    "C5a": (ClassLabel.CLOSED, ClassLabel.ALPHA_CLOSED),
    "C5b": (ClassLabel.ALPHA_CLOSED, ClassLabel.G_ALPHA_CLOSED),
    "C5c": (ClassLabel.G_ALPHA_CLOSED, ClassLabel.RG_ALPHA_CLOSED),
    "C6a": (ClassLabel.ALPHA_CLOSED, ClassLabel.SC_STAR_CLOSED),
    "C6b": (ClassLabel.G_ALPHA_CLOSED, ClassLabel.GSC_STAR_CLOSED),
    "C6c": (ClassLabel.RG_ALPHA_CLOSED, ClassLabel.RGSC_STAR_CLOSED),
    "X1": (ClassLabel.SC_STAR_CLOSED, ClassLabel.CLOSED),
    "X2": (ClassLabel.G_CLOSED, ClassLabel.CLOSED),
}


def _subset_claim(cid, statement, expectation, kind="subset-implication"):
    hyp, con = _SUBSET_IMPLICATIONS[cid]
    return Claim(cid, kind, statement, hyp.value, con.value, expectation)


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        _subset_claim("C1", "every closed set is SC*-closed", EXPECT_ZERO),
        _subset_claim("C2a", "every SC*-closed set is gSC*-closed",
                      EXPECT_MEASURE, "subset-equivalence"),
        _subset_claim("C2b", "every gSC*-closed set is SC*-closed",
                      EXPECT_MEASURE, "subset-equivalence"),
        _subset_claim("C3a", "every gSC*-closed set is SC*g-closed",
                      EXPECT_MEASURE, "subset-equivalence"),
        _subset_claim("C3b", "every SC*g-closed set is gSC*-closed",
                      EXPECT_MEASURE, "subset-equivalence"),
        _subset_claim("C4", "every closed set is g-closed", EXPECT_ZERO),
        _subset_claim("C5a", "every closed set is alpha-closed", EXPECT_ZERO),
        _subset_claim("C5b", "every alpha-closed set is g-alpha-closed", EXPECT_ZERO),
        _subset_claim("C5c", "every g-alpha-closed set is rg-alpha-closed",
                      EXPECT_ZERO),
        _subset_claim("C6a", "every alpha-closed set is SC*-closed", EXPECT_ZERO),
        _subset_claim("C6b", "every g-alpha-closed set is gSC*-closed", EXPECT_ZERO),
        _subset_claim("C6c", "every rg-alpha-closed set is rgSC*-closed",
                      EXPECT_ZERO),
        Claim("C7a", "space-implication", "every normal space is almost normal",
              "normal", "almost-normal", EXPECT_ZERO),
        Claim("C7b", "space-implication",
              "every almost normal space is almost SC*-normal",
              "almost-normal", "almost-SC*-normal", EXPECT_ZERO),
        Claim("C8", "subset-equivalence",
              "a set is rgSC*-open exactly when every regular-closed subset "
              "of it lies inside its SC*-interior",
              "rgSC*-open", "regular-closed-interior-trap", EXPECT_ZERO),
        Claim("C9", "space-implication",
              "the six characterizations of almost SC*-normality agree "
              "on every space",
              "characterization-any", "characterization-all", EXPECT_ZERO),
        Claim("C10", "map-preservation",
              "surjections that are continuous, T-SC*-open, rc-continuous and "
              "almost SC*-irresolute carry almost SC*-normality forward",
              "open-image-hypotheses", "codomain-almost-SC*-normal", EXPECT_ZERO),
        Claim("C11", "map-preservation",
              "rc-continuous T-SC*-closed surjections carry almost "
              "SC*-normality forward",
              "closed-image-hypotheses", "codomain-almost-SC*-normal", EXPECT_ZERO),
        Claim("P1", "operator-property",
              "the SC*-closure of any set is itself SC*-closed",
              "any-subset", "SC*-closure-is-SC*-closed", EXPECT_ZERO),
        Claim("P2", "operator-property",
              "the SC*-closure operator is idempotent",
              "any-subset", "SC*-closure-idempotent", EXPECT_ZERO),
        _subset_claim("X1", "some SC*-closed set is not closed", EXPECT_WITNESS),
        _subset_claim("X2", "some g-closed set is not closed", EXPECT_WITNESS),
        Claim("X3", "space-implication",
              "some almost SC*-normal space is not almost normal",
              "almost-SC*-normal", "almost-normal", EXPECT_REPORT),
        Claim("X4", "space-implication",
              "some almost normal space is not normal",
              "almost-normal", "normal", EXPECT_REPORT),
    ]
}

_SPACE_CLAIM_IDS = {"C7a", "C7b", "C9", "X3", "X4"}
_MAP_CLAIM_IDS = {"C10", "C11"}
_OPERATOR_CLAIM_IDS = {"C8", "P1", "P2"}


@dataclass(frozen=True)
class SweepOptions:
    """Definition toggles threaded through every claim evaluation."""

    ralpha_defn: str = RALPHA_ANALOGY
    strict_paper: bool = False
    neighborhoods: str = maps_mod.NBHD_ALL


@dataclass(frozen=True)
class CounterexampleReport:
    """A replayable witness that a claim fails (or, for existence claims,
    holds) at a concrete instance."""

    claim_id: str
    space: FiniteSpace
    subsets: tuple[PointSet, ...] = ()
    codomain: FiniteSpace | None = None
    assignment: tuple[int, ...] | None = None
    detail: str = ""
    options: SweepOptions = field(default_factory=SweepOptions)

    def replay(self) -> bool:
        """Re-evaluate the claim at the stored witness; True iff the recorded
        violation still reproduces."""
        claim = CLAIMS[self.claim_id]
        if self.claim_id in _MAP_CLAIM_IDS:
            f = SpaceMap(self.space, self.codomain, self.assignment)
            return _map_violation(self.claim_id, f, self.options) is not None
        if self.claim_id in _SPACE_CLAIM_IDS:
            return _space_violation(claim, self.space, self.options) is not None
        mask = self.subsets[0].mask
        return _subset_violation(claim, self.space, mask, self.options) is not None

    def render(self, labels: tuple[str, ...] | None = None) -> str:
        parts = [f"claim {self.claim_id}: {self.detail}"]
        parts.append(f"  space: {self.space!r}")
        for s in self.subsets:
            parts.append(f"  subset: {s.render(labels)}")
        if self.assignment is not None:
            arrows = ",".join(f"{p}->{q}" for p, q in enumerate(self.assignment))
            parts.append(f"  map: {arrows} into {self.codomain!r}")
        return "\n".join(parts)


@dataclass(frozen=True)
class SweepResult:
    claim_id: str
    max_points: int
    spaces_examined: int
    instances_examined: int
    counterexamples: tuple[CounterexampleReport, ...]
    total_counterexamples: int
    elapsed: float
    notes: tuple[tuple[str, int], ...] = ()

    def notes_dict(self) -> dict[str, int]:
        return dict(self.notes)


def _subset_violation(claim: Claim, space: FiniteSpace, mask: int,
                      options: SweepOptions) -> str | None:
    """Detail string if the claim fails at (space, subset mask), else None."""
    cid = claim.id
    if cid in _SUBSET_IMPLICATIONS:
        hyp, con = _SUBSET_IMPLICATIONS[cid]
        ps = PointSet(mask, space.size)
        if satisfies(space, ps, hyp, options.ralpha_defn) and not satisfies(
            space, ps, con, options.ralpha_defn
        ):
            return f"set is {hyp.value} but not {con.value}"
        return None
    if cid == "C8":
        ps = PointSet(mask, space.size)
        if not rgsc_star_open_characterization(space, ps):
            return "rgSC*-openness disagrees with the interior-trap description"
        return None
    if cid == "P1":
        sccl = _sc_star_closure_table(space)[mask]
        if not _is_sc_star_closed_mask(space, sccl):
            return "SC*-closure of the set is not SC*-closed"
        return None
    if cid == "P2":
        table = _sc_star_closure_table(space)
        once = table[mask]
        if table[once] != once:
            return "SC*-closure applied twice differs from once"
        return None
    raise UnknownClaim(f"claim {cid} is not a subset claim")


def _space_violation(claim: Claim, space: FiniteSpace,
                     options: SweepOptions) -> str | None:
    cid = claim.id
    if cid == "C7a":
        if is_normal(space).holds and not is_almost_normal(space).holds:
            return "space is normal but not almost normal"
        return None
    if cid == "C7b":
        if is_almost_normal(space).holds and not is_almost_sc_star_normal(space).holds:
            return "space is almost normal but not almost SC*-normal"
        return None
    if cid == "X3":
        if is_almost_sc_star_normal(space).holds and not is_almost_normal(space).holds:
            return "space is almost SC*-normal but not almost normal"
        return None
    if cid == "X4":
        if is_almost_normal(space).holds and not is_normal(space).holds:
            return "space is almost normal but not normal"
        return None
    if cid == "C9":
        values = normality_characterizations(space, options.strict_paper)
        if len(set(values)) != 1:
            rendered = ",".join("T" if v else "F" for v in values)
            return f"characterizations disagree: ({rendered})"
        return None
    raise UnknownClaim(f"claim {cid} is not a space claim")


def _map_violation(cid: str, f: SpaceMap, options: SweepOptions) -> str | None:
    if cid == "C10":
        verdict = maps_mod.check_open_image_preservation(f, options.neighborhoods)
        if verdict is Verdict.COUNTEREXAMPLE:
            return "hypotheses hold yet the codomain is not almost SC*-normal"
        return None
    if cid == "C11":
        verdict = maps_mod.check_closed_image_preservation(f)
        if verdict is Verdict.COUNTEREXAMPLE:
            return "hypotheses hold yet the codomain is not almost SC*-normal"
        return None
    raise UnknownClaim(f"claim {cid} is not a map claim")


def _iter_universe(max_points: int, method: str):
    for n in range(1, max_points + 1):
        yield from enumerate_topologies(n, method)


def _claim_or_raise(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(
            f"unknown claim {claim_id!r}; known: {', '.join(sorted(CLAIMS))}"
        ) from None


def _run_claim(claim: Claim, max_points: int, method: str,
               options: SweepOptions, cap: int, stop_at_first: bool):
    spaces = 0
    instances = 0
    total = 0
    reports: list[CounterexampleReport] = []
    notes: dict[str, int] = {}

    def record(report: CounterexampleReport):
        nonlocal total
        total += 1
        if len(reports) < cap:
            reports.append(report)

    if claim.id in _MAP_CLAIM_IDS:
        universe = tuple(_iter_universe(max_points, method))
        spaces = len(universe)
        applicable = 0
        dropped = 0
        for dom in universe:
            for cod in universe:
                for f in enumerate_maps(dom, cod, surjective_only=True):
                    instances += 1
                    detail = _map_violation(claim.id, f, options)
                    if claim.id == "C10":
                        strong = maps_mod.check_open_image_preservation(
                            f, options.neighborhoods)
                        if strong is not Verdict.NOT_APPLICABLE:
                            applicable += 1
                        relaxed = maps_mod.check_open_image_preservation(
                            f, options.neighborhoods, require_continuity=False)
                        if relaxed is Verdict.COUNTEREXAMPLE:
                            dropped += 1
                    elif claim.id == "C11":
                        if (maps_mod.check_closed_image_preservation(f)
                                is not Verdict.NOT_APPLICABLE):
                            applicable += 1
                    if detail is not None:
                        record(CounterexampleReport(
                            claim.id, dom, (), cod, f.assignment, detail, options))
                        if stop_at_first:
                            return spaces, instances, total, reports, notes
        notes["applicable_maps"] = applicable
        if claim.id == "C10":
            notes["counterexamples_without_continuity_hypothesis"] = dropped
        return spaces, instances, total, reports, notes

    if claim.id in _SPACE_CLAIM_IDS:
        for space in _iter_universe(max_points, method):
            spaces += 1
            instances += 1
            detail = _space_violation(claim, space, options)
            if detail is not None:
                record(CounterexampleReport(
                    claim.id, space, (), None, None, detail, options))
                if stop_at_first:
                    return spaces, instances, total, reports, notes
        return spaces, instances, total, reports, notes

    for space in _iter_universe(max_points, method):
        spaces += 1
        for mask in space.subset_masks():
            instances += 1
            detail = _subset_violation(claim, space, mask, options)
            if detail is not None:
                record(CounterexampleReport(
                    claim.id, space, (PointSet(mask, space.size),),
                    None, None, detail, options))
                if stop_at_first:
                    return spaces, instances, total, reports, notes
    return spaces, instances, total, reports, notes


def sweep_claim(claim_id: str, max_points: int = 4, cap: int = 10,
                method: str = "preorder",
                options: SweepOptions | None = None) -> SweepResult:
    """Quantify the claim over every space (subset, map) up to max_points.

    Counts are exact: the sweep always visits the full universe; ``cap`` only
    limits how many counterexample reports are retained.
    """
    claim = _claim_or_raise(claim_id)
    options = options or SweepOptions()
    start = time.monotonic()
    spaces, instances, total, reports, notes = _run_claim(
        claim, max_points, method, options, cap, stop_at_first=False)
    elapsed = time.monotonic() - start
    return SweepResult(
        claim_id=claim_id,
        max_points=max_points,
        spaces_examined=spaces,
        instances_examined=instances,
        counterexamples=tuple(reports),
        total_counterexamples=total,
        elapsed=elapsed,
        notes=tuple(sorted(notes.items())),
    )


def find_first(claim_id: str, max_points: int = 4, method: str = "preorder",
               options: SweepOptions | None = None) -> CounterexampleReport | None:
    """Canonically-first counterexample of the claim, or None."""
    claim = _claim_or_raise(claim_id)
    options = options or SweepOptions()
    _, _, total, reports, _ = _run_claim(
        claim, max_points, method, options, cap=1, stop_at_first=True)
    if total == 0:
        return None
    return reports[0]
