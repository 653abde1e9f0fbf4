"""Intuitionistic rudimentary linear logic with a bottom atom: formulas, search, replay."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterator, Optional, Sequence, Union

from .errors import ParseError


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Tensor:
    left: "RllFormula"
    right: "RllFormula"


@dataclass(frozen=True)
class Lollipop:
    left: "RllFormula"
    right: "RllFormula"


RllFormula = Union[Atom, Bottom, Tensor, Lollipop]
BOT = Bottom()


def complement(a: RllFormula) -> RllFormula:
    return Lollipop(a, BOT)


def is_complement(f: RllFormula) -> bool:
    return isinstance(f, Lollipop) and isinstance(f.right, Bottom)


def size(f: RllFormula) -> int:
    if isinstance(f, (Tensor, Lollipop)):
        return 1 + size(f.left) + size(f.right)
    return 0


# --- printing -----------------------------------------------------------------

ASCII = {"tensor": " * ", "lolli": " -o ", "bot": "bot", "neg": "^"}
UNICODE = {"tensor": "⊗", "lolli": "⊸", "bot": "⊥", "neg": "⊥"}


@lru_cache(maxsize=None)
def render_formula(f: RllFormula, unicode: bool = False) -> str:
    sym = UNICODE if unicode else ASCII

    def go(g: RllFormula) -> str:
        if isinstance(g, Atom):
            return g.name
        if isinstance(g, Bottom):
            return sym["bot"]
        if is_complement(g):
            inner = g.left
            body = go(inner)
            if isinstance(inner, Tensor) or (isinstance(inner, Lollipop) and not is_complement(inner)):
                body = f"({body})"
            return body + sym["neg"]
        if isinstance(g, Tensor):
            left, right = go(g.left), go(g.right)
            if isinstance(g.left, Lollipop) and not is_complement(g.left):
                left = f"({left})"
            if isinstance(g.right, Tensor) or (isinstance(g.right, Lollipop) and not is_complement(g.right)):
                right = f"({right})"
            return left + sym["tensor"] + right
        left, right = go(g.left), go(g.right)
        if isinstance(g.left, Lollipop) and not is_complement(g.left):
            left = f"({left})"
        return left + sym["lolli"] + right

    return go(f)


# --- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(-o|\|-|⊢|[A-Za-z][A-Za-z0-9_]*|[()^*,⊗⊸⊥]|\S)")


def tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def take(self, expected: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = repr(expected) if expected else "a token"
            raise ParseError(f"expected {want}, got {tok!r}", self.text, self.pos())
        self.i += 1
        return tok

    def implication(self) -> RllFormula:
        left = self.tensor()
        if self.peek() in ("-o", "⊸"):
            self.take()
            return Lollipop(left, self.implication())
        return left

    def tensor(self) -> RllFormula:
        f = self.postfix()
        while self.peek() in ("*", "⊗"):
            self.take()
            f = Tensor(f, self.postfix())
        return f

    def postfix(self) -> RllFormula:
        f = self.primary()
        # after a complete operand, "⊥" is a complement mark rather than the atom
        while self.peek() in ("^", "⊥"):
            self.take()
            f = complement(f)
        return f

    def primary(self) -> RllFormula:
        tok = self.peek()
        if tok == "(":
            self.take()
            f = self.implication()
            self.take(")")
            return f
        if tok in ("bot", "⊥"):
            self.take()
            return BOT
        if tok is not None and re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
            self.take()
            return Atom(tok)
        raise ParseError(f"unexpected token {tok!r}", self.text, self.pos())

    def done(self) -> None:
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}", self.text, self.pos())


def parse_formula(text: str) -> RllFormula:
    p = _Parser(text)
    f = p.implication()
    p.done()
    return f


# --- sequents -----------------------------------------------------------------

def _key(f: RllFormula) -> str:
    return render_formula(f)


class RllSequent:
    """``context |- conclusion``; the context keeps its written order but compares as a multiset."""

    __slots__ = ("context", "conclusion", "_canon")

    def __init__(self, context: Sequence[RllFormula], conclusion: RllFormula):
        self.context = tuple(context)
        self.conclusion = conclusion
        self._canon = (tuple(sorted(map(_key, self.context))), _key(conclusion))

    def canonical(self) -> tuple[tuple[str, ...], str]:
        return self._canon

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RllSequent) and self._canon == other._canon

    def __hash__(self) -> int:
        return hash(self._canon)

    def render(self, unicode: bool = False) -> str:
        ctx = ", ".join(render_formula(f, unicode) for f in self.context)
        turn = "⊢" if unicode else "|-"
        return f"{ctx} {turn} {render_formula(self.conclusion, unicode)}".lstrip()

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RllSequent({self.render()!r})"


def parse_sequent(text: str) -> RllSequent:
    p = _Parser(text)
    ctx: list[RllFormula] = []
    if p.peek() not in ("|-", "⊢"):
        ctx.append(p.implication())
        while p.peek() == ",":
            p.take()
            ctx.append(p.implication())
    if p.peek() == "⊢":
        p.take()
    else:
        p.take("|-")
    goal = p.implication()
    p.done()
    return RllSequent(ctx, goal)


# --- proofs -------------------------------------------------------------------

RLL_RULES = ("Id", "TensorL", "TensorR", "LollipopL", "LollipopR")


@dataclass(frozen=True)
class RllProof:
    """``principal`` indexes the node's context; ``split`` lists context indices sent to the first child."""

    node: RllSequent
    rule: str
    children: tuple["RllProof", ...] = ()
    principal: Optional[int] = None
    split: Optional[tuple[int, ...]] = None

    def walk(self) -> Iterator["RllProof"]:
        yield self
        for c in self.children:
            yield from c.walk()

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"rule": self.rule, "sequent": self.node.render()}
        if self.principal is not None:
            doc["principal"] = self.principal
        if self.split is not None:
            doc["split"] = list(self.split)
        doc["children"] = [c.to_json() for c in self.children]
        return doc

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> "RllProof":
        split = doc.get("split")
        return cls(
            parse_sequent(doc["sequent"]),
            doc["rule"],
            tuple(cls.from_json(c) for c in doc.get("children", ())),
            doc.get("principal"),
            tuple(split) if split is not None else None,
        )

    def pretty(self, indent: int = 0, unicode: bool = True) -> str:
        lines = [f"{'  ' * indent}{self.node.render(unicode)}    [{self.rule}]"]
        lines += [c.pretty(indent + 1, unicode) for c in self.children]
        return "\n".join(lines)


def _splits(n: int) -> Iterator[tuple[int, ...]]:
    idx = range(n)
    for k in range(n + 1):
        yield from combinations(idx, k)


def polarity_balance(f: RllFormula, sign: int = 1) -> Counter[str]:
    """Signed atom occurrences (bottom counted as the atom ``bot``)."""
    out: Counter[str] = Counter()

    def go(g: RllFormula, s: int) -> None:
        if isinstance(g, Atom):
            out[g.name] += s
        elif isinstance(g, Bottom):
            out["bot"] += s
        elif isinstance(g, Tensor):
            go(g.left, s)
            go(g.right, s)
        else:
            go(g.left, -s)
            go(g.right, s)

    go(f, sign)
    return out


def prove_rll(seq: RllSequent) -> Optional[RllProof]:
    """Cut-free backward search. Invertible rules (tensor-left, lollipop-right) are applied eagerly.

    Branches whose atoms do not balance (as many positive as negative occurrences
    of each atom) are cut before any context split is tried.
    """
    memo: dict[tuple, Optional[RllProof]] = {}
    keys: dict[int, str] = {}
    balances: dict[int, Counter[str]] = {}

    def k(f: RllFormula) -> str:
        i = id(f)
        if i not in keys:
            keys[i] = render_formula(f)
        return keys[i]

    def bal(f: RllFormula) -> Counter[str]:
        i = id(f)
        if i not in balances:
            balances[i] = polarity_balance(f)
        return balances[i]

    def balanced(ctx: tuple[RllFormula, ...], goal: RllFormula) -> bool:
        total = Counter(bal(goal))
        for f in ctx:
            total.subtract(bal(f))
        return not any(total.values())

    def search(ctx: tuple[RllFormula, ...], goal: RllFormula) -> Optional[RllProof]:
        key = (tuple(sorted(map(k, ctx))), k(goal))
        if key in memo:
            return memo[key]
        memo[key] = None
        result = attempt(ctx, goal) if balanced(ctx, goal) else None
        memo[key] = result
        return result

    def attempt(ctx: tuple[RllFormula, ...], goal: RllFormula) -> Optional[RllProof]:
        if len(ctx) == 1 and k(ctx[0]) == k(goal):
            return RllProof(RllSequent(ctx, goal), "Id")
        for i, f in enumerate(ctx):
            if isinstance(f, Tensor):
                sub = search(ctx[:i] + (f.left, f.right) + ctx[i + 1:], goal)
                if sub is None:
                    return None
                return RllProof(RllSequent(ctx, goal), "TensorL", (sub,), principal=i)
        if isinstance(goal, Lollipop):
            sub = search(ctx + (goal.left,), goal.right)
            return None if sub is None else RllProof(RllSequent(ctx, goal), "LollipopR", (sub,))
        n = len(ctx)
        if isinstance(goal, Tensor):
            seen = set()
            for left in _splits(n):
                gamma = tuple(ctx[j] for j in left)
                gk = tuple(sorted(map(k, gamma)))
                if gk in seen:
                    continue
                seen.add(gk)
                a = search(gamma, goal.left)
                if a is None:
                    continue
                b = search(tuple(ctx[j] for j in range(n) if j not in left), goal.right)
                if b is not None:
                    return RllProof(RllSequent(ctx, goal), "TensorR", (a, b), split=left)
        tried = set()
        for i, f in enumerate(ctx):
            if not isinstance(f, Lollipop) or k(f) in tried:
                continue
            tried.add(k(f))
            rest_idx = [j for j in range(n) if j != i]
            seen = set()
            for pick in _splits(len(rest_idx)):
                left = tuple(rest_idx[j] for j in pick)
                gamma = tuple(ctx[j] for j in left)
                gk = tuple(sorted(map(k, gamma)))
                if gk in seen:
                    continue
                seen.add(gk)
                a = search(gamma, f.left)
                if a is None:
                    continue
                b = search(tuple(ctx[j] for j in rest_idx if j not in left) + (f.right,), goal)
                if b is not None:
                    return RllProof(RllSequent(ctx, goal), "LollipopL", (a, b), principal=i, split=left)
        return None

    return search(seq.context, seq.conclusion)


def is_provable(seq: RllSequent) -> bool:
    return prove_rll(seq) is not None


def check_rll_proof(p: RllProof) -> bool:
    """Replay every branching with multiset bookkeeping. Annotations are not trusted."""
    ctx = Counter(map(_key, p.node.context))
    goal = p.node.conclusion
    kids = p.children
    rule = p.rule

    if rule == "Id":
        return not kids and len(p.node.context) == 1 and p.node.context[0] == goal
    if rule == "TensorR":
        if len(kids) != 2 or not isinstance(goal, Tensor):
            return False
        a, b = kids
        if a.node.conclusion != goal.left or b.node.conclusion != goal.right:
            return False
        if Counter(map(_key, a.node.context)) + Counter(map(_key, b.node.context)) != ctx:
            return False
    elif rule == "LollipopR":
        if len(kids) != 1 or not isinstance(goal, Lollipop):
            return False
        (a,) = kids
        if a.node.conclusion != goal.right:
            return False
        if Counter(map(_key, a.node.context)) != ctx + Counter([_key(goal.left)]):
            return False
    elif rule == "TensorL":
        if len(kids) != 1:
            return False
        (a,) = kids
        if a.node.conclusion != goal:
            return False
        child = Counter(map(_key, a.node.context))
        if not any(
            isinstance(f, Tensor) and child == ctx - Counter([_key(f)]) + Counter([_key(f.left), _key(f.right)])
            for f in p.node.context
        ):
            return False
    elif rule == "LollipopL":
        if len(kids) != 2:
            return False
        a, b = kids
        if b.node.conclusion != goal:
            return False
        ca = Counter(map(_key, a.node.context))
        cb = Counter(map(_key, b.node.context))
        ok = False
        for f in p.node.context:
            if not isinstance(f, Lollipop) or a.node.conclusion != f.left:
                continue
            rb = _key(f.right)
            if cb[rb] < 1:
                continue
            if ca + (cb - Counter([rb])) == ctx - Counter([_key(f)]):
                ok = True
                break
        if not ok:
            return False
    else:
        return False
    return all(check_rll_proof(c) for c in kids)


def entails(a: RllFormula, b: RllFormula) -> bool:
    return is_provable(RllSequent((a,), b))


def equivalent(a: RllFormula, b: RllFormula) -> bool:
    return entails(a, b) and entails(b, a)


def atoms(f: RllFormula) -> list[str]:
    if isinstance(f, Atom):
        return [f.name]
    if isinstance(f, Bottom):
        return []
    return atoms(f.left) + atoms(f.right)


@dataclass(frozen=True)
class ComplementLaw:
    name: str
    sequent: RllSequent
    provable: bool


def complement_laws(a: RllFormula = Atom("A"), b: RllFormula = Atom("B")) -> list[ComplementLaw]:
    """Laws of the derived complement, with the expected verdict for each sequent."""
    na, nb = complement(a), complement(b)

    def law(name: str, ctx: Sequence[RllFormula], goal: RllFormula, ok: bool = True) -> ComplementLaw:
        return ComplementLaw(name, RllSequent(tuple(ctx), goal), ok)

    return [
        law("double complement introduction", [a], complement(na)),
        law("double complement elimination", [complement(na)], a, False),
        law("contraposition", [Lollipop(a, b)], Lollipop(nb, na)),
        law("converse contraposition", [Lollipop(nb, na)], Lollipop(a, b), False),
        law("triple complement, forward", [na], complement(complement(na))),
        law("triple complement, backward", [complement(complement(na))], na),
        law("complement exchange, forward", [Lollipop(a, nb)], Lollipop(b, na)),
        law("complement exchange, backward", [Lollipop(b, na)], Lollipop(a, nb)),
        law("tensor symmetry, forward", [Tensor(a, b)], Tensor(b, a)),
        law("tensor symmetry, backward", [Tensor(b, a)], Tensor(a, b)),
        law("noncontradiction", [Tensor(a, na)], BOT),
        law("disjunction symmetry", [Lollipop(na, b)], Lollipop(nb, a), False),
    ]
