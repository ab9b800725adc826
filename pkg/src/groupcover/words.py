"""Words over a generating set, as tuples of (generator, exponent) syllables.

A word is a tuple of syllables; each syllable is a pair (generator index,
nonzero exponent).  The empty tuple is the empty word.  All functions return
freely reduced words: adjacent syllables have distinct generator indices and
no syllable has exponent zero.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Syllable = tuple[int, int]
Word = tuple[Syllable, ...]

EMPTY_WORD: Word = ()


def free_reduce(word: Iterable[Syllable]) -> Word:
    """Freely reduce a syllable sequence.

    Merges adjacent syllables on the same generator and drops zero
    exponents.  The result is independent of the order cancellations are
    performed in (a single left-to-right stack pass is confluent here).
    """
    stack: list[list[int]] = []
    for gen, exp in word:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


def invert_word(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def concat(*words: Word) -> Word:
    joined: list[Syllable] = []
    for w in words:
        joined.extend(w)
    return free_reduce(joined)


def word_power(word: Word, n: int) -> Word:
    if n < 0:
        return word_power(invert_word(word), -n)
    return free_reduce([s for _ in range(n) for s in word])


def commutator_word(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return concat(u, v, invert_word(u), invert_word(v))


def cyclic_reduce(word: Word) -> Word:
    """Shortest representative of the cyclic conjugacy class of `word`.

    Strips cancelling ends; when the first and last syllables share a
    generator the end exponents are folded into a single leading syllable.
    """
    w = free_reduce(word)
    while len(w) >= 2 and w[0][0] == w[-1][0]:
        gen = w[0][0]
        exp = w[0][1] + w[-1][1]
        middle = w[1:-1]
        if exp == 0:
            w = free_reduce(middle)
        else:
            w = free_reduce(((gen, exp),) + middle)
            break
    return w


def word_length(word: Word) -> int:
    """Letter count of the freely reduced word."""
    return sum(abs(e) for _, e in word)


def exponent_sum(word: Word, gen: int) -> int:
    return sum(e for g, e in word if g == gen)


def exponent_vector(word: Word, ngens: int) -> tuple[int, ...]:
    sums = [0] * ngens
    for g, e in word:
        sums[g] += e
    return tuple(sums)


def max_generator(word: Word) -> int:
    """Largest generator index used; -1 for the empty word."""
    return max((g for g, _ in word), default=-1)


def render_word(word: Word, names: Iterable[str]) -> str:
    """Canonical text form, e.g. ``a^2 b^-1 c``; the empty word is ``1``."""
    names = list(names)
    if not word:
        return "1"
    parts = []
    for g, e in word:
        parts.append(names[g] if e == 1 else f"{names[g]}^{e}")
    return " ".join(parts)


def word_from_letters(letters: Iterable[tuple[int, int]]) -> Word:
    """Build a word from single letters (gen, +1/-1)."""
    return free_reduce([(g, s) for g, s in letters])


def reduced_words(ngens: int, max_length: int) -> Iterator[Word]:
    """All freely reduced words of letter-length <= max_length, in shortlex
    order.

    The letter alphabet is ordered g0, g0^-1, g1, g1^-1, ...; a letter is
    never followed by its own inverse.
    """
    alphabet = [(g, s) for g in range(ngens) for s in (1, -1)]
    yield EMPTY_WORD
    level: list[list[tuple[int, int]]] = [[]]
    for _ in range(max_length):
        nxt: list[list[tuple[int, int]]] = []
        for prefix in level:
            last = prefix[-1] if prefix else None
            for letter in alphabet:
                if last is not None and last[0] == letter[0] and last[1] == -letter[1]:
                    continue
                nxt.append(prefix + [letter])
        for letters in nxt:
            yield word_from_letters(letters)
        level = nxt
