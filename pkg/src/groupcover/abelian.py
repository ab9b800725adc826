"""Invariants of finitely generated abelian groups.

An ``AbelianInvariants`` value presents a group as Z^r x C_d1 x ... x C_dk
with 2 <= d1 | d2 | ... | dk.  The weight of such a group (its minimal
normal generating count, which for abelian groups is the minimal generating
count) is r + k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPrime


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    factors: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = None
        for d in self.factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if prev is not None and d % prev != 0:
                raise ValueError(f"broken divisibility chain: {prev} does not divide {d}")
            prev = d

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.factors:
            n *= d
        return n

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"C{d}" for d in self.factors]
        return " x ".join(parts) if parts else "1"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def abelian_weight(inv: AbelianInvariants) -> int:
    """Minimal generating count of Z^r x prod C_di; 0 iff trivial."""
    return inv.free_rank + len(inv.factors)


def elementary_p_rank(inv: AbelianInvariants, p: int) -> int:
    """Largest k such that the group surjects onto C_p^k."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return inv.free_rank + sum(1 for d in inv.factors if d % p == 0)


def max_elementary_rank(inv: AbelianInvariants) -> tuple[int, int]:
    """A prime attaining the maximal elementary p-rank, and that rank.

    Smallest attaining prime on ties; (2, free_rank) when there is no
    torsion (including the trivial case, by convention).
    """
    if not inv.factors:
        return (2, inv.free_rank)
    # every prime dividing d1 divides all later factors, so the maximum is
    # attained by primes of d1 and equals free_rank + #factors
    candidates = prime_factors(inv.factors[0])
    best_p = candidates[0]
    best = inv.free_rank + len(inv.factors)
    return (best_p, best)


def invariants_from_diagonal(diagonal: list[int] | tuple[int, ...], ngens: int) -> AbelianInvariants:
    """Invariants of Z^ngens modulo a row lattice with the given SNF diagonal."""
    nonzero = [d for d in diagonal if d != 0]
    factors = tuple(d for d in nonzero if d != 1)
    return AbelianInvariants(free_rank=ngens - len(nonzero), factors=factors)
