"""Group presentations: a small grammar, exact abelianisation via Smith
normal form, and the presentation-level combinators.

Grammar (whitespace insignificant, ``1`` is the empty word)::

    presentation := '<' genlist '|' relist '>'
    genlist      := name (',' name)* | epsilon
    relist       := relator (',' relator)* | epsilon
    relator      := word | word '=' word
    word         := term+ | '1'
    term         := name ('^' int)? | '[' word ',' word ']'
                  | '(' word ')' ('^' int)?
    int          := '-'? digit+

``[u, v]`` expands to u v u^-1 v^-1 and ``u = v`` to u v^-1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .abelian import AbelianInvariants, invariants_from_diagonal
from .errors import (
    EmptyGeneratorList,
    PresentationSyntaxError,
    UnknownGenerator,
)
from .snf import smith_normal_form
from .words import (
    Word,
    commutator_word,
    concat,
    cyclic_reduce,
    exponent_vector,
    free_reduce,
    invert_word,
    render_word,
    word_power,
)

NAME_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        seen = set()
        for name in self.generators:
            if not NAME_PATTERN.fullmatch(name):
                raise PresentationSyntaxError(f"bad generator name {name!r}", 0)
            if name in seen:
                raise PresentationSyntaxError(f"duplicate generator {name!r}", 0)
            seen.add(name)
        if not self.generators and len(self.relators) > 0:
            raise EmptyGeneratorList("relators given without generators")
        for rel in self.relators:
            for g, _ in rel:
                if not 0 <= g < len(self.generators):
                    raise UnknownGenerator(f"generator index {g} out of range")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def is_trivial_presentation(self) -> bool:
        return not self.generators

    def render(self) -> str:
        gens = ", ".join(self.generators)
        rels = ", ".join(render_word(r, self.generators) for r in self.relators)
        return f"< {gens} | {rels} >"

    def __str__(self):
        return self.render()


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<int>-?\d+)|(?P<punct>[<>|,^=()\[\]]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise PresentationSyntaxError(f"unexpected character {text[where]!r}", where)
        if m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int")), m.start("int")))
        else:
            tokens.append(("punct", m.group("punct"), m.start("punct")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, generators=None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.gen_index = (
            {name: k for k, name in enumerate(generators)} if generators else {}
        )

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, punct):
        kind, value, pos = self.next()
        if kind != "punct" or value != punct:
            raise PresentationSyntaxError(f"expected {punct!r}", pos)
        return pos

    def fail(self, message):
        raise PresentationSyntaxError(message, self.peek()[2])

    def parse_presentation(self):
        self.expect("<")
        generators = []
        if self.peek()[0] == "name":
            generators.append(self.next()[1])
            while self._at_punct(","):
                self.next()
                kind, value, pos = self.next()
                if kind != "name":
                    raise PresentationSyntaxError("expected generator name", pos)
                generators.append(value)
        self.expect("|")
        self.gen_index = {name: k for k, name in enumerate(generators)}
        relators = []
        if not self._at_punct(">"):
            relators.append(self.parse_relator())
            while self._at_punct(","):
                self.next()
                relators.append(self.parse_relator())
        self.expect(">")
        kind, _, pos = self.peek()
        if kind != "end":
            raise PresentationSyntaxError("trailing input after presentation", pos)
        if not generators and relators:
            raise EmptyGeneratorList("relators given without generators")
        return Presentation(tuple(generators), tuple(relators))

    def _at_punct(self, *values):
        kind, value, _ = self.peek()
        return kind == "punct" and value in values

    def parse_relator(self) -> Word:
        left = self.parse_word()
        if self._at_punct("="):
            self.next()
            right = self.parse_word()
            return concat(left, invert_word(right))
        return left

    def parse_word(self) -> Word:
        kind, value, pos = self.peek()
        if kind == "int":
            if value != 1:
                raise PresentationSyntaxError("only '1' denotes the empty word", pos)
            self.next()
            return ()
        terms = []
        while True:
            kind, value, pos = self.peek()
            if kind == "name" or (kind == "punct" and value in "(["):
                terms.append(self.parse_term())
            else:
                break
        if not terms:
            self.fail("expected a word")
        return concat(*terms)

    def parse_term(self) -> Word:
        kind, value, pos = self.next()
        if kind == "name":
            if value not in self.gen_index:
                raise UnknownGenerator(f"unknown generator {value!r} at position {pos}")
            exp = self._maybe_exponent()
            return free_reduce(((self.gen_index[value], exp),))
        if kind == "punct" and value == "[":
            u = self.parse_word()
            self.expect(",")
            v = self.parse_word()
            self.expect("]")
            return commutator_word(u, v)
        if kind == "punct" and value == "(":
            w = self.parse_word()
            self.expect(")")
            return word_power(w, self._maybe_exponent())
        raise PresentationSyntaxError("expected a term", pos)

    def _maybe_exponent(self) -> int:
        if self._at_punct("^"):
            self.next()
            kind, value, pos = self.next()
            if kind != "int":
                raise PresentationSyntaxError("expected an integer exponent", pos)
            return value
        return 1


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text; relators come back freely reduced."""
    return _Parser(text).parse_presentation()


def parse_word_text(text: str, presentation: Presentation) -> Word:
    """Parse a stand-alone word over a presentation's generators."""
    parser = _Parser(text, generators=presentation.generators)
    word = parser.parse_word()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise PresentationSyntaxError("trailing input after word", pos)
    return word


# ---------------------------------------------------------------------------
# abelianisation

def exponent_matrix(pres: Presentation) -> list[list[int]]:
    """One row per relator of generator exponent sums."""
    return [list(exponent_vector(rel, pres.ngens)) for rel in pres.relators]


def abelian_invariants(pres: Presentation) -> AbelianInvariants:
    """Invariants of the presented group's abelianisation, from the Smith
    normal form of the exponent matrix."""
    result = smith_normal_form(exponent_matrix(pres))
    return invariants_from_diagonal(result.diagonal, pres.ngens)


# ---------------------------------------------------------------------------
# combinators

def _merge_generator_names(left, right):
    names = list(left)
    used = set(names)
    for name in right:
        candidate = name
        k = 2
        while candidate in used:
            candidate = f"{name}_{k}"
            k += 1
        names.append(candidate)
        used.add(candidate)
    return tuple(names)


def free_product(p: Presentation, q: Presentation) -> Presentation:
    """Disjoint generator union (collisions renamed with suffixes) and
    concatenated relators."""
    names = _merge_generator_names(p.generators, q.generators)
    offset = p.ngens
    shifted = tuple(tuple((g + offset, e) for g, e in rel) for rel in q.relators)
    return Presentation(names, p.relators + shifted)


def direct_product_presentation(p: Presentation, q: Presentation) -> Presentation:
    """Free product plus all cross-commutators [g, h]."""
    base = free_product(p, q)
    offset = p.ngens
    cross = tuple(
        commutator_word(((i, 1),), ((offset + j, 1),))
        for i in range(p.ngens)
        for j in range(q.ngens)
    )
    return Presentation(base.generators, base.relators + cross)


@dataclass(frozen=True)
class SimplifiedPresentation:
    presentation: Presentation
    collapsed_to_trivial: bool


def simplify_trivial_relators(pres: Presentation) -> SimplifiedPresentation:
    """Repeatedly cyclically reduce relators and delete any generator whose
    relator has become a single syllable g or g^-1 (substituting the empty
    word for it everywhere), until a fixpoint."""
    generators = list(pres.generators)
    relators = [free_reduce(r) for r in pres.relators]
    while True:
        relators = [cyclic_reduce(r) for r in relators]
        relators = [r for r in relators if r]
        victim = None
        for rel in relators:
            if len(rel) == 1 and abs(rel[0][1]) == 1:
                victim = rel[0][0]
                break
        if victim is None:
            break
        del generators[victim]
        remapped = []
        for rel in relators:
            kept = [
                (g - 1 if g > victim else g, e) for g, e in rel if g != victim
            ]
            remapped.append(free_reduce(kept))
        relators = remapped
    result = Presentation(tuple(generators), tuple(relators))
    return SimplifiedPresentation(result, collapsed_to_trivial=not generators)
