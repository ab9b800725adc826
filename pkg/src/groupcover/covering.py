"""Decide finite-annihilation properties of finite groups by exhaustive
covering checks against the maximal normal proper subgroups.

A finite group is finitely annihilated (F-A) when the union of its maximal
normal proper subgroups is the whole group; it is n-F-A when every n-subset
lies inside one of them.  The trivial group is not F-A and not n-F-A by
convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .abelian import max_elementary_rank
from .config import DEFAULT_CAPS
from .errors import GroupCoverError, TrivialGroup
from .fingroup import (
    ElementSet,
    FiniteGroup,
    abelian_invariants_finite,
    abelianisation,
    derived_subgroup,
    maximal_normal_subgroups,
    validate_group,
    weight_bruteforce,
)

FA_PROPERTY = "F-A"


def _nfa_property(n: int) -> str:
    return f"{n}-F-A"


@dataclass(frozen=True)
class CoverReport:
    """Outcome of a covering check.

    cover lists every maximal normal proper subgroup (even when a smaller
    subcover suffices); subcover is a greedy subcover when the verdict is
    true.  uncovered is the minimal witness (an element id, or a sorted
    n-subset) lying in no listed subgroup when the verdict is false.
    """

    group_name: str
    property_name: str
    verdict: bool
    cover: tuple[ElementSet, ...]
    uncovered: tuple[int, ...]
    subcover: tuple[ElementSet, ...] | None = None

    def as_dict(self) -> dict:
        payload = {
            "group": self.group_name,
            "property": self.property_name,
            "verdict": self.verdict,
            "cover": [s.to_hex() for s in self.cover],
            "uncovered": list(self.uncovered),
        }
        if self.subcover is not None:
            payload["subcover"] = [s.to_hex() for s in self.subcover]
        return payload


def _maximal_cover(group: FiniteGroup, cap) -> tuple[tuple[ElementSet, ...], list[int]]:
    """Maximal normal proper subgroups (sorted by size desc, mask asc) and a
    per-element bitmap of which of them contain that element."""
    maximal = maximal_normal_subgroups(group, cap)
    maximal = sorted(maximal, key=lambda s: (-len(s), s.mask))
    containing = [0] * group.order
    for idx, sub in enumerate(maximal):
        bit = 1 << idx
        for x in sub.members:
            containing[x] |= bit
    return tuple(maximal), containing


def _greedy_element_subcover(group, cover):
    covered = 0
    full = (1 << group.order) - 1
    chosen = []
    for sub in cover:  # already sorted by descending size, then mask
        m = sub.mask
        if m & ~covered:
            chosen.append(sub)
            covered |= m
            if covered == full:
                break
    return tuple(chosen)


def is_fa_finite(group: FiniteGroup, cap=None) -> CoverReport:
    """Is the group the union of its maximal normal proper subgroups?"""
    cap = DEFAULT_CAPS.normal if cap is None else cap
    if group.order == 1:
        return CoverReport(group.name, FA_PROPERTY, False, (), (0,))
    cover, containing = _maximal_cover(group, cap)
    for x in range(group.order):
        if not containing[x]:
            return CoverReport(group.name, FA_PROPERTY, False, cover, (x,))
    return CoverReport(
        group.name,
        FA_PROPERTY,
        True,
        cover,
        (),
        subcover=_greedy_element_subcover(group, cover),
    )


def is_nfa_finite(group: FiniteGroup, n: int, cap=None, with_subcover=True) -> CoverReport:
    """Does every n-subset of the group lie in some maximal normal proper
    subgroup?  (A tuple lies in N iff its set of entries does, so subsets
    suffice; subsets of size min(n, |G|) decide all n-tuples.)"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cap = DEFAULT_CAPS.normal if cap is None else cap
    prop = _nfa_property(n)
    if group.order == 1:
        return CoverReport(group.name, prop, False, (), (0,))
    cover, containing = _maximal_cover(group, cap)
    k = min(n, group.order)
    for subset in combinations(range(group.order), k):
        hit = containing[subset[0]]
        for x in subset[1:]:
            hit &= containing[x]
            if not hit:
                break
        if not hit:
            return CoverReport(group.name, prop, False, cover, subset)
    subcover = None
    if with_subcover:
        subcover = _greedy_subset_subcover(group, cover, k)
    return CoverReport(group.name, prop, True, cover, (), subcover=subcover)


def _greedy_subset_subcover(group, cover, k):
    remaining = set(combinations(range(group.order), k))
    chosen = []
    for sub in cover:
        mine = {s for s in remaining if all(x in sub.members for x in s)}
        if mine:
            chosen.append(sub)
            remaining -= mine
        if not remaining:
            break
    return tuple(chosen)


def fa_witness_finite(group: FiniteGroup, g: int, cap=None) -> ElementSet | None:
    """A maximal normal proper subgroup containing g, or None.

    Ties broken by smallest canonical mask.
    """
    cap = DEFAULT_CAPS.normal if cap is None else cap
    if group.order == 1:
        raise TrivialGroup("no proper subgroups exist")
    best = None
    for sub in maximal_normal_subgroups(group, cap):
        if g in sub.members and (best is None or sub.mask < best.mask):
            best = sub
    return best


def is_simple_annihilated_finite(group: FiniteGroup, cap=None) -> bool:
    """Does every element die in a simple quotient?  For finite groups this
    coincides with being F-A; computed here element by element through
    fa_witness_finite as an independent route."""
    cap = DEFAULT_CAPS.normal if cap is None else cap
    if group.order == 1:
        return False
    return all(
        fa_witness_finite(group, g, cap) is not None for g in range(group.order)
    )


@dataclass
class TheoremReport:
    """One boolean per theorem instance; all true unless something is wrong
    with either the group data or this library."""

    group_name: str
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failing(self) -> list[str]:
        return [k for k, ok in self.checks.items() if not ok]

    def as_dict(self) -> dict:
        return {
            "group": self.group_name,
            "passed": self.passed,
            "checks": dict(self.checks),
            "details": {k: repr(v) for k, v in self.details.items()},
        }


def verify_finite_theorems(
    group: FiniteGroup,
    nfa_range=(1, 2, 3),
    cap=None,
    weight_cap=None,
) -> TheoremReport:
    """Cross-check the finite-group theorems on one group:

    (a) F-A  iff  the abelianisation has >= 2 invariant factors;
    (b) F-A  iff  some elementary p-rank of the abelianisation is >= 2;
    (c) n-F-A  iff  the abelianisation needs >= n+1 generators, for each n
        in nfa_range, plus monotonicity in n;
    (d) weight equals the abelianisation weight when the latter is >= 2,
        and is <= 1 otherwise;
    (e) nontrivial perfect groups have weight exactly 1.

    Weight checks are skipped (not failed) when |G| exceeds weight_cap.
    """
    cap = DEFAULT_CAPS.normal if cap is None else cap
    weight_cap = DEFAULT_CAPS.weight if weight_cap is None else weight_cap
    report = TheoremReport(group.name)
    checks, details = report.checks, report.details

    try:
        validate_group(group)
        checks["group_axioms"] = True
    except GroupCoverError as exc:
        checks["group_axioms"] = False
        details["group_axioms"] = exc

    try:
        gab = abelianisation(group)
        inv = abelian_invariants_finite(gab)
        fa = is_fa_finite(group, cap)
    except GroupCoverError as exc:
        checks["abelianisation_computable"] = False
        details["abelianisation_computable"] = exc
        return report

    ab_weight = len(inv.factors)
    details["abelian_invariants"] = inv
    details["fa_verdict"] = fa.verdict

    def attempt(name, thunk):
        try:
            checks[name] = bool(thunk())
        except GroupCoverError as exc:
            checks[name] = False
            details[name] = exc

    attempt("fa_iff_noncyclic_abelianisation", lambda: fa.verdict == (ab_weight >= 2))
    attempt(
        "fa_iff_rank2_elementary_quotient",
        lambda: fa.verdict == (max_elementary_rank(inv)[1] >= 2),
    )

    nfa_verdicts = {}

    def check_nfa(n):
        verdict = is_nfa_finite(group, n, cap, with_subcover=False).verdict
        nfa_verdicts[n] = verdict
        return verdict == (ab_weight >= n + 1)

    for n in nfa_range:
        attempt(f"nfa{n}_iff_ab_weight_ge_{n + 1}", lambda n=n: check_nfa(n))
    ordered = sorted(nfa_verdicts)
    checks["nfa_monotone"] = all(
        nfa_verdicts[b] <= nfa_verdicts[a] for a, b in zip(ordered, ordered[1:])
    )

    if group.order <= weight_cap:

        def check_weight():
            w = weight_bruteforce(group, weight_cap)
            details["weight"] = w
            if ab_weight >= 2:
                return w == ab_weight
            return w <= 1

        def check_perfect():
            perfect = len(derived_subgroup(group)) == group.order
            if perfect and group.order > 1:
                return details.get("weight") == 1
            return True

        attempt("weight_matches_abelianisation", check_weight)
        attempt("perfect_weight_one", check_perfect)
    return report
