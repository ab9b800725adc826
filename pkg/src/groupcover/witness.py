"""Annihilation witnesses: explicit surjections from a presented group onto
small finite groups that kill a given word.

The target catalog is a fixed, documented family list (cyclic, elementary
abelian, dihedral, S3, S4, A4, A5, Q8, SL(2,3)); completeness over *all*
groups of a given order is deliberately not claimed, and a "none <= B"
outcome is never evidence that no witness exists beyond the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .catalog import (
    alternating_group,
    cyclic_group,
    dihedral_group,
    elementary_group,
    quaternion_group,
    special_linear_group,
    symmetric_group,
)
from .classify import FA, classify_fa
from .config import DEFAULT_SEARCH_BUDGET
from .errors import SearchBudgetExceeded
from .fingroup import FiniteGroup, subgroup_closure
from .presentation import Presentation
from .words import EMPTY_WORD, Word, max_generator, reduced_words, render_word

MAX_WITNESS_BOUND = 128


def evaluate_word(group: FiniteGroup, images, word: Word) -> int:
    """Image of a word under generator images, with each syllable exponent
    reduced modulo the image's order."""
    orders = group.element_orders()
    acc = 0
    for g, e in word:
        x = images[g]
        k = e % orders[x]
        for _ in range(k):
            acc = group.table[acc][x]
    return acc


def evaluate_word_direct(group: FiniteGroup, images, word: Word) -> int:
    """Letter-by-letter evaluation (no modular shortcut); the independent
    re-verification route."""
    acc = 0
    for g, e in word:
        x = images[g] if e > 0 else group.inverse[images[g]]
        for _ in range(abs(e)):
            acc = group.table[acc][x]
    return acc


@lru_cache(maxsize=8)
def witness_targets(bound: int) -> tuple[FiniteGroup, ...]:
    """The fixed search catalog, restricted to orders <= bound and sorted by
    (order, name)."""
    if bound > MAX_WITNESS_BOUND:
        raise SearchBudgetExceeded(
            f"witness bound {bound} exceeds the catalog maximum {MAX_WITNESS_BOUND}"
        )
    groups: list[FiniteGroup] = []
    for n in range(2, bound + 1):
        groups.append(cyclic_group(n))
    for p in (2, 3, 5, 7, 11):
        k = 2
        while p**k <= bound:
            groups.append(elementary_group(p, k))
            k += 1
    n = 3
    while 2 * n <= bound:
        groups.append(dihedral_group(n))
        n += 1
    for builder, order in (
        (lambda: symmetric_group(3), 6),
        (lambda: symmetric_group(4), 24),
        (lambda: alternating_group(4), 12),
        (lambda: alternating_group(5), 60),
        (quaternion_group, 8),
        (lambda: special_linear_group(3), 24),
    ):
        if order <= bound:
            groups.append(builder())
    return tuple(sorted(groups, key=lambda g: (g.order, g.name)))


@dataclass(frozen=True)
class Witness:
    """Proof object: a surjection onto a nontrivial finite group under which
    every relator and the given word map to the identity."""

    presentation: Presentation
    word: Word
    target: FiniteGroup
    images: tuple[int, ...]
    transcript: dict = field(compare=False, default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "target": {"name": self.target.name, "order": self.target.order},
            "images": {
                name: img
                for name, img in zip(self.presentation.generators, self.images)
            },
            "word": render_word(self.word, self.presentation.generators),
            "verified": True,
        }


def verify_witness(witness: Witness) -> bool:
    """Re-check a witness by direct evaluation: relators and word go to the
    identity, the images generate the target, and the target is nontrivial."""
    target = witness.target
    images = witness.images
    if target.order <= 1:
        return False
    if any(
        evaluate_word_direct(target, images, rel) != 0
        for rel in witness.presentation.relators
    ):
        return False
    if len(subgroup_closure(target, set(images))) != target.order:
        return False
    return evaluate_word_direct(target, images, witness.word) == 0


def enumerate_surjections(
    pres: Presentation, target: FiniteGroup, budget=None
) -> list[tuple[int, ...]]:
    """All generator-image assignments defining a surjection onto the
    target, in lexicographic order.

    Pruning: a generator appearing in a one-syllable relator g^m can only
    map to elements whose order divides |m|, and each relator is checked as
    soon as all its generators are assigned.
    """
    budget = DEFAULT_SEARCH_BUDGET if budget is None else budget
    ngens = pres.ngens
    n = target.order
    if n**ngens > budget:
        raise SearchBudgetExceeded(
            f"assignment space {n}^{ngens} exceeds budget {budget}"
        )
    orders = target.element_orders()
    constraint: dict[int, int] = {}
    for rel in pres.relators:
        if len(rel) == 1:
            g, e = rel[0]
            constraint[g] = gcd(constraint.get(g, 0), abs(e))
    candidates = []
    for g in range(ngens):
        bound = constraint.get(g, 0)
        if bound == 0:
            candidates.append(range(n))
        else:
            candidates.append([x for x in range(n) if bound % orders[x] == 0])
    by_depth: list[list[Word]] = [[] for _ in range(ngens)]
    for rel in pres.relators:
        mg = max_generator(rel)
        if mg >= 0:
            by_depth[mg].append(rel)

    results: list[tuple[int, ...]] = []
    images = [0] * ngens
    nodes = 0

    def dfs(depth):
        nonlocal nodes
        if depth == ngens:
            if len(subgroup_closure(target, set(images))) == n:
                results.append(tuple(images))
            return
        for x in candidates[depth]:
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"search exceeded {budget} nodes")
            images[depth] = x
            if all(
                evaluate_word(target, images, rel) == 0 for rel in by_depth[depth]
            ):
                dfs(depth + 1)

    dfs(0)
    return results


@lru_cache(maxsize=4096)
def _surjections_cached(pres, target, budget):
    return tuple(enumerate_surjections(pres, target, budget))


def _make_witness(pres, word, target, images):
    transcript = {
        "relator_images": [
            evaluate_word_direct(target, images, rel) for rel in pres.relators
        ],
        "word_image": evaluate_word_direct(target, images, word),
        "image_subgroup_size": len(subgroup_closure(target, set(images))),
    }
    witness = Witness(pres, word, target, images, transcript)
    if not verify_witness(witness):
        raise AssertionError(
            f"internal error: witness onto {target.name} failed re-verification"
        )
    return witness


def find_annihilator(
    pres: Presentation, word: Word, order_bound: int, budget=None, targets=None
) -> Witness | None:
    """First witness killing the word, searching targets in (order, name)
    order; None when no catalog target within the bound admits one."""
    budget = DEFAULT_SEARCH_BUDGET if budget is None else budget
    if targets is None:
        targets = witness_targets(order_bound)
    else:
        targets = tuple(t for t in targets if t.order <= order_bound)
    for target in targets:
        for images in _surjections_cached(pres, target, budget):
            if evaluate_word(target, images, word) == 0:
                return _make_witness(pres, word, target, images)
    return None


def nontrivial_quotient_exists(
    pres: Presentation, order_bound: int, budget=None
) -> Witness | None:
    """First surjection onto any nontrivial catalog group within the bound
    (reported with the empty word); None means none was found *within the
    searched catalog and bound*, not that none exists."""
    return find_annihilator(pres, EMPTY_WORD, order_bound, budget)


WITNESSED = "witnessed"
UNWITNESSED = "unwitnessed"
BOUND_TOO_SMALL = "bound too small"


@dataclass(frozen=True)
class ScanEntry:
    word: Word
    status: str
    target_name: str | None = None
    target_order: int | None = None


@dataclass(frozen=True)
class ScanReport:
    presentation: Presentation
    max_word_length: int
    order_bound: int
    classify_status: str
    entries: tuple[ScanEntry, ...]

    @property
    def witnessed(self) -> tuple[ScanEntry, ...]:
        return tuple(e for e in self.entries if e.status == WITNESSED)

    @property
    def unwitnessed(self) -> tuple[ScanEntry, ...]:
        return tuple(e for e in self.entries if e.status != WITNESSED)

    def as_dict(self) -> dict:
        gens = self.presentation.generators
        return {
            "presentation": self.presentation.render(),
            "max_word_length": self.max_word_length,
            "order_bound": self.order_bound,
            "classify_status": self.classify_status,
            "words": [
                {
                    "word": render_word(e.word, gens),
                    "status": e.status,
                    "target": (
                        {"name": e.target_name, "order": e.target_order}
                        if e.target_name
                        else None
                    ),
                }
                for e in self.entries
            ],
        }


def fa_scan(
    pres: Presentation,
    max_word_length: int,
    order_bound: int,
    hint=None,
    budget=None,
) -> ScanReport:
    """Run find_annihilator over every freely reduced word up to the given
    length (shortlex order).  Unwitnessed words are candidates only: when
    classification already says the group is F-A they are flagged as
    "bound too small" rather than failures, and otherwise the scan draws no
    conclusion."""
    budget = DEFAULT_SEARCH_BUDGET if budget is None else budget
    verdict = classify_fa(pres, hint)
    targets = witness_targets(order_bound)
    cached = [(t, _surjections_cached(pres, t, budget)) for t in targets]
    entries = []
    for word in reduced_words(pres.ngens, max_word_length):
        found = None
        for target, assignments in cached:
            for images in assignments:
                if evaluate_word(target, images, word) == 0:
                    found = (target, images)
                    break
            if found:
                break
        if found:
            entries.append(
                ScanEntry(word, WITNESSED, found[0].name, found[0].order)
            )
        elif verdict.status == FA:
            entries.append(ScanEntry(word, BOUND_TOO_SMALL))
        else:
            entries.append(ScanEntry(word, UNWITNESSED))
    return ScanReport(
        pres, max_word_length, order_bound, verdict.status, tuple(entries)
    )
