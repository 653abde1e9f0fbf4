"""Linear syllogistic diagrams: tokens, parsing, printing and shape predicates.

A diagram is an alternating sequence of term-variables/bullets and arrows that
starts and ends at a term-variable, e.g. ``S <- * -> M -> P``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ParseError

RIGHT = "->"
LEFT = "<-"
BULLET = "*"
ARROWS = (RIGHT, LEFT)

_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(->|<-|\*|[A-Za-z][A-Za-z0-9_]*)")


def is_var(token: str) -> bool:
    return token not in (RIGHT, LEFT, BULLET)


def flip(token: str) -> str:
    if token == RIGHT:
        return LEFT
    if token == LEFT:
        return RIGHT
    return token


@dataclass(frozen=True)
class TermVar:
    name: str

    def __post_init__(self):
        if not _VAR_RE.fullmatch(self.name):
            raise ValueError(f"invalid term-variable name {self.name!r}")

    def __str__(self) -> str:
        return self.name


def _check_tokens(tokens: tuple[str, ...]) -> None:
    if not tokens:
        raise ValueError("a diagram has at least one token")
    for i, tok in enumerate(tokens):
        if i % 2 == 0:
            if tok in ARROWS:
                raise ValueError(f"expected a term-variable or bullet at {i}, got {tok!r}")
            if tok != BULLET and not _VAR_RE.fullmatch(tok):
                raise ValueError(f"invalid token {tok!r} at {i}")
        elif tok not in ARROWS:
            raise ValueError(f"expected an arrow at {i}, got {tok!r}")
    if not is_var(tokens[0]) or not is_var(tokens[-1]):
        raise ValueError("a diagram must begin and end at a term-variable")


@dataclass(frozen=True)
class SyllDiagram:
    """Immutable token sequence. Tokens are ``"->"``, ``"<-"``, ``"*"`` or a variable name."""

    tokens: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        _check_tokens(self.tokens)

    @classmethod
    def _trusted(cls, tokens: tuple[str, ...]) -> SyllDiagram:
        # skips validation; callers guarantee the alternation invariant
        obj = object.__new__(cls)
        object.__setattr__(obj, "tokens", tokens)
        return obj

    @property
    def first(self) -> str:
        return self.tokens[0]

    @property
    def last(self) -> str:
        return self.tokens[-1]

    def variables(self) -> tuple[str, ...]:
        return tuple(t for t in self.tokens if is_var(t))

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        return render_diagram(self)

    def __repr__(self) -> str:
        return f"SyllDiagram({render_diagram(self)!r})"


@dataclass(frozen=True)
class DiagramPart:
    tokens: tuple[str, ...]
    offset: int

    def within(self, host: SyllDiagram) -> bool:
        end = self.offset + len(self.tokens)
        return 0 <= self.offset and host.tokens[self.offset:end] == self.tokens


def parse_diagram(text: str) -> SyllDiagram:
    tokens: list[str] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unknown token {text[bad:bad + 2]!r}", text, bad)
        tok = m.group(1)
        start = m.start(1)
        expect_arrow = len(tokens) % 2 == 1
        if expect_arrow and tok not in ARROWS:
            raise ParseError(f"expected an arrow, got {tok!r}", text, start)
        if not expect_arrow and tok in ARROWS:
            what = "two adjacent arrows" if tokens else "diagram starts with an arrow"
            raise ParseError(what, text, start)
        if not tokens and tok == BULLET:
            raise ParseError("diagram must start at a term-variable", text, start)
        tokens.append(tok)
        pos = m.end()
    if not tokens:
        raise ParseError("empty diagram", text, 0)
    if not is_var(tokens[-1]):
        raise ParseError("diagram must end at a term-variable", text, len(text))
    return SyllDiagram._trusted(tuple(tokens))


def render_diagram(d: SyllDiagram) -> str:
    return " ".join(d.tokens)


def reversal(d: SyllDiagram) -> SyllDiagram:
    return SyllDiagram._trusted(tuple(flip(t) for t in reversed(d.tokens)))


def bullet_count(d: SyllDiagram) -> int:
    return d.tokens.count(BULLET)


def complemented_occurrences(v: str | TermVar, d: SyllDiagram) -> int:
    """Occurrences of ``v`` in a part ``v -> *`` or ``* <- v``; ``* <- v -> *`` counts twice."""
    name = str(v)
    toks = d.tokens
    count = 0
    for i, tok in enumerate(toks):
        if tok != name:
            continue
        if toks[i + 1:i + 3] == (RIGHT, BULLET):
            count += 1
        if i >= 2 and toks[i - 2:i] == (BULLET, LEFT):
            count += 1
    return count


def segments(d: SyllDiagram) -> Iterator[tuple[str, ...]]:
    """Interiors between consecutive term-variables, e.g. ``('->', '*', '<-')``."""
    toks = d.tokens
    start = 0
    for i in range(1, len(toks)):
        if is_var(toks[i]) and toks[i] != BULLET:
            yield toks[start + 1:i]
            start = i


def parts(d: SyllDiagram, pattern: Iterable[str]) -> Iterator[DiagramPart]:
    pat = tuple(pattern)
    n = len(pat)
    for i in range(len(d.tokens) - n + 1):
        if d.tokens[i:i + n] == pat:
            yield DiagramPart(pat, i)


# Two-variable shapes, written as ``A <interior> B``.
SYLLOGISTIC_SHAPES = {
    "A": (RIGHT,),
    "E": (RIGHT, BULLET, LEFT),
    "I": (LEFT, BULLET, RIGHT),
    "O": (LEFT, BULLET, RIGHT, BULLET, LEFT),
}
NEW_SHAPES = {
    "aB": (RIGHT, BULLET, RIGHT),
    "ab": (RIGHT, BULLET, RIGHT, BULLET, LEFT),
    "iB": (RIGHT, BULLET, LEFT, BULLET, RIGHT),
    "ib": (RIGHT, BULLET, LEFT, BULLET, RIGHT, BULLET, LEFT),
}


def reverse_interior(interior: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(flip(t) for t in reversed(interior))


@lru_cache(maxsize=None)
def well_formed_segments(extended: bool = True) -> frozenset[tuple[str, ...]]:
    """Interiors allowed between adjacent variables of a well-formed diagram.

    Built from the inductive definition: base shapes and their reversals,
    closed under concatenation (which never alters an interior).
    """
    base = list(SYLLOGISTIC_SHAPES.values())
    if extended:
        base += list(NEW_SHAPES.values())
    return frozenset(base) | frozenset(reverse_interior(s) for s in base)


def is_well_formed(d: SyllDiagram, extended: bool = True) -> bool:
    """True iff ``d`` is a concatenation of (new) syllogistic diagrams and their reversals.

    ``extended=False`` restricts to the traditional four shapes.
    """
    if len(d.tokens) == 1:
        return is_var(d.tokens[0])
    allowed = well_formed_segments(extended)
    return all(seg in allowed for seg in segments(d))


def is_two_term(d: SyllDiagram) -> bool:
    return sum(1 for t in d.tokens if is_var(t)) == 2


def diagram(*tokens: str) -> SyllDiagram:
    return SyllDiagram(tuple(tokens))
