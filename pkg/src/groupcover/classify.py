"""Verdicts on finitely presented groups from abelianisation data plus an
optional, trusted caller hint about the group's class.

The positive direction never needs a hint: a surjection onto a rank-(n+1)
elementary p-group makes any finitely generated group n-F-A.  Negative
verdicts for groups with small abelianisation hold only inside certain
classes (free, abelian, solvable, finite, simple, finitely many finite
simple quotients), which are undecidable from a presentation, so the caller
asserts membership and a wrong hint voids the verdict.  Everything else is
Unknown: cyclic abelianisation alone proves nothing, since free products of
three cyclic groups of distinct prime orders are F-A with cyclic
abelianisation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import abelian_weight, max_elementary_rank
from .errors import InvalidHint
from .presentation import Presentation, abelian_invariants

FA = "FA"
NOT_FA = "NotFA"
UNKNOWN = "Unknown"

HINTS = (
    "free",
    "abelian",
    "solvable",
    "finite",
    "finitely-many-finite-simple-quotients",
    "simple",
    "two-generator-coprime-torsion",
)

# classes in which (n-)F-A is decided by the abelianisation weight
_AB_DECIDED_HINTS = frozenset(HINTS) - {"two-generator-coprime-torsion"}


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str
    reason: str
    easily_fa: bool = False

    def as_dict(self) -> dict:
        return {
            "verdict": self.status,
            "reason": f"{self.rule}: {self.reason}",
            "easily_fa": self.easily_fa,
        }


def _check_hint(hint):
    if hint is not None and hint not in HINTS:
        raise InvalidHint(f"unknown hint {hint!r}; expected one of {HINTS}")


def _coprime_torsion_pair(pres: Presentation) -> bool:
    """Exact syntactic match for < x, y | x^m, y^n > with gcd(m, n) = 1."""
    if pres.ngens != 2 or len(pres.relators) != 2:
        return False
    exps = {}
    for rel in pres.relators:
        if len(rel) != 1:
            return False
        g, e = rel[0]
        if g in exps:
            return False
        exps[g] = abs(e)
    return set(exps) == {0, 1} and gcd(exps[0], exps[1]) == 1


def classify_fa(pres: Presentation, hint: str | None = None) -> Verdict:
    """Decide finite annihilation where possible; hints only ever justify a
    NotFA verdict, never an FA one."""
    _check_hint(hint)
    inv = abelian_invariants(pres)
    _, rank = max_elementary_rank(inv)
    easily = rank >= 2
    if easily:
        return Verdict(
            FA,
            "elementary-rank-2",
            "the abelianisation surjects onto C_p x C_p, and any finitely "
            "generated group with such a quotient is finitely annihilated",
            easily_fa=True,
        )
    if pres.is_trivial_presentation:
        return Verdict(
            NOT_FA,
            "trivial-group",
            "the trivial group is not finitely annihilated by convention",
        )
    if hint == "simple":
        return Verdict(
            NOT_FA,
            "hint-simple",
            "a nontrivial simple group has no proper nontrivial normal "
            "subgroup, so no element of it is finitely annihilated "
            "(trusted hint)",
        )
    if hint in _AB_DECIDED_HINTS:
        return Verdict(
            NOT_FA,
            f"hint-{hint}",
            f"within the {hint} class, finite annihilation is equivalent to "
            "a non-cyclic abelianisation, and this abelianisation is cyclic "
            "(trusted hint)",
        )
    if _coprime_torsion_pair(pres):
        return Verdict(
            NOT_FA,
            "coprime-torsion-pair",
            "a free product of two cyclic groups of coprime orders is the "
            "normal closure of one element, hence not finitely annihilated",
        )
    if hint == "two-generator-coprime-torsion":
        return Verdict(
            NOT_FA,
            "hint-two-generator-coprime-torsion",
            "a two-generator group whose generators are torsion of coprime "
            "orders is a quotient of a weight-one free product, hence not "
            "finitely annihilated (trusted hint)",
        )
    return Verdict(
        UNKNOWN,
        "cyclic-abelianisation-inconclusive",
        "cyclic abelianisation alone is inconclusive: free products of "
        "three cyclic groups of distinct prime orders are finitely "
        "annihilated yet have cyclic abelianisation",
    )


def classify_nfa(pres: Presentation, n: int, hint: str | None = None) -> Verdict:
    """n-F-A analogue; n = 1 coincides with classify_fa by definition."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return classify_fa(pres, hint)
    _check_hint(hint)
    inv = abelian_invariants(pres)
    _, rank = max_elementary_rank(inv)
    easily = rank >= 2
    if rank >= n + 1:
        return Verdict(
            FA,
            f"elementary-rank-{n + 1}",
            f"the abelianisation surjects onto a rank-{n + 1} elementary "
            "p-group, which makes any finitely generated group "
            f"{n}-finitely-annihilated",
            easily_fa=easily,
        )
    if pres.is_trivial_presentation:
        return Verdict(
            NOT_FA,
            "trivial-group",
            "the trivial group is not n-finitely-annihilated by convention",
            easily_fa=easily,
        )
    if hint in _AB_DECIDED_HINTS:
        return Verdict(
            NOT_FA,
            f"hint-{hint}",
            f"within the {hint} class, being {n}-finitely-annihilated is "
            f"equivalent to an abelianisation of weight >= {n + 1}, and this "
            f"abelianisation has weight {abelian_weight(inv)} (trusted hint)",
            easily_fa=easily,
        )
    if _coprime_torsion_pair(pres) or hint == "two-generator-coprime-torsion":
        return Verdict(
            NOT_FA,
            "coprime-torsion-not-fa",
            "the group is not finitely annihilated (coprime torsion "
            "generators), so it cannot be n-finitely-annihilated for any n",
            easily_fa=easily,
        )
    return Verdict(
        UNKNOWN,
        "cyclic-abelianisation-inconclusive",
        "the abelianisation criterion is only known to decide this inside "
        "the trusted hint classes",
        easily_fa=easily,
    )


@dataclass(frozen=True)
class RhoChecks:
    """Annihilation into restricted quotient classes; both decidable from
    the abelianisation alone for finitely generated groups."""

    abelian_annihilated: Verdict
    free_annihilated_including_z: Verdict

    def as_dict(self) -> dict:
        return {
            "abelian_A": self.abelian_annihilated.as_dict(),
            "free_A_including_Z": self.free_annihilated_including_z.as_dict(),
        }


def rho_annihilated_checks(pres: Presentation) -> RhoChecks:
    inv = abelian_invariants(pres)
    _, rank = max_elementary_rank(inv)
    easily = rank >= 2
    if rank >= 2:
        abelian_a = Verdict(
            FA,
            "abelianisation-noncyclic",
            "every element dies in a nontrivial abelian quotient exactly "
            "when the abelianisation is non-cyclic",
            easily_fa=easily,
        )
    else:
        abelian_a = Verdict(
            NOT_FA,
            "abelianisation-cyclic",
            "a generator of the cyclic abelianisation cannot die in any "
            "nontrivial abelian quotient",
            easily_fa=easily,
        )
    if inv.free_rank >= 2:
        free_a = Verdict(
            FA,
            "free-rank-ge-2",
            "the group surjects onto Z x Z, so every element dies in a "
            "free quotient (Z allowed)",
            easily_fa=easily,
        )
    else:
        free_a = Verdict(
            NOT_FA,
            "free-rank-lt-2",
            f"free rank {inv.free_rank} < 2, so no surjection onto Z x Z "
            "exists",
            easily_fa=easily,
        )
    return RhoChecks(abelian_a, free_a)
