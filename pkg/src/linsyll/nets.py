"""Classical MLL: the polarity translation of RLL proofs, proof nets, and the crossing test."""
from __future__ import annotations

import itertools
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterator, Optional, Sequence, Union

from . import rll
from .errors import NonAtomicIdentity, ParseError, TranslationFailure
from .rll import Atom, Bottom, Lollipop, RllFormula, RllProof, RllSequent, Tensor

# Atoms and units carry an occurrence tag that is ignored by equality and hashing,
# so proofs can be compared structurally while links still know which leaf is which.


@dataclass(frozen=True)
class PosAtom:
    name: str
    tag: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class NegAtom:
    name: str
    tag: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class One:
    tag: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Bot:
    tag: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class CTensor:
    left: "CmllFormula"
    right: "CmllFormula"


@dataclass(frozen=True)
class Par:
    left: "CmllFormula"
    right: "CmllFormula"


CmllFormula = Union[PosAtom, NegAtom, One, Bot, CTensor, Par]
LEAVES = (PosAtom, NegAtom, One, Bot)


def linear_negation(f: CmllFormula) -> CmllFormula:
    if isinstance(f, PosAtom):
        return NegAtom(f.name)
    if isinstance(f, NegAtom):
        return PosAtom(f.name)
    if isinstance(f, One):
        return Bot()
    if isinstance(f, Bot):
        return One()
    if isinstance(f, CTensor):
        return Par(linear_negation(f.left), linear_negation(f.right))
    return CTensor(linear_negation(f.left), linear_negation(f.right))


def leaves(f: CmllFormula) -> Iterator[CmllFormula]:
    if isinstance(f, LEAVES):
        yield f
    else:
        yield from leaves(f.left)
        yield from leaves(f.right)


def render_cmll(f: CmllFormula, unicode: bool = True) -> str:
    if isinstance(f, PosAtom):
        return f.name
    if isinstance(f, NegAtom):
        return f.name + ("⊥" if unicode else "^")
    if isinstance(f, One):
        return "1"
    if isinstance(f, Bot):
        return "⊥" if unicode else "bot"
    op = ("⊗" if unicode else " * ") if isinstance(f, CTensor) else ("⅋" if unicode else " | ")

    def side(g: CmllFormula) -> str:
        s = render_cmll(g, unicode)
        return f"({s})" if isinstance(g, (CTensor, Par)) else s

    return side(f.left) + op + side(f.right)


# --- parsing ------------------------------------------------------------------

_TOK = re.compile(r"\s*(=>|⇒|[A-Za-z][A-Za-z0-9_]*|[()^*|,1⊗⅋⊥]|\S)")


def _tokens(text: str) -> list[tuple[str, int]]:
    out, pos = [], 0
    while (m := _TOK.match(text, pos)) is not None:
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _CParser:
    def __init__(self, text: str):
        self.text, self.toks, self.i = text, _tokens(text), 0

    def peek(self) -> Optional[str]:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def fail(self, msg: str):
        pos = self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)
        raise ParseError(msg, self.text, pos)

    def take(self, want: Optional[str] = None) -> str:
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            self.fail(f"expected {want or 'a token'!r}, got {tok!r}")
        self.i += 1
        return tok

    def formula(self) -> CmllFormula:
        f = self.unary()
        while self.peek() in ("*", "|", "⊗", "⅋"):
            op = self.take()
            g = self.unary()
            f = CTensor(f, g) if op in ("*", "⊗") else Par(f, g)
        return f

    def unary(self) -> CmllFormula:
        tok = self.peek()
        if tok == "(":
            self.take()
            f = self.formula()
            self.take(")")
        elif tok == "1":
            self.take()
            f = One()
        elif tok in ("bot", "⊥"):
            self.take()
            f = Bot()
        elif tok is not None and re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
            self.take()
            f = PosAtom(tok)
        else:
            self.fail(f"unexpected token {tok!r}")
        while self.peek() in ("^", "⊥"):
            self.take()
            f = linear_negation(f)
        return f


def parse_cmll(text: str) -> CmllFormula:
    p = _CParser(text)
    f = p.formula()
    if p.peek() is not None:
        p.fail(f"trailing input {p.peek()!r}")
    return f


def parse_cmll_sequent(text: str) -> "CmllSequent":
    p = _CParser(text)
    if p.peek() in ("=>", "⇒"):
        p.take()
    out = []
    if p.peek() is not None:
        out.append(p.formula())
        while p.peek() == ",":
            p.take()
            out.append(p.formula())
    if p.peek() is not None:
        p.fail(f"trailing input {p.peek()!r}")
    return CmllSequent(tuple(out))


@dataclass(frozen=True)
class CmllSequent:
    conclusions: tuple[CmllFormula, ...]

    def render(self, unicode: bool = True) -> str:
        arrow = "⇒" if unicode else "=>"
        return f"{arrow} " + ", ".join(render_cmll(f, unicode) for f in self.conclusions)

    def __str__(self) -> str:
        return self.render()


# --- translation of formulas ------------------------------------------------------

def simp_tensor(a: CmllFormula, b: CmllFormula) -> CmllFormula:
    if isinstance(b, One):
        return a
    if isinstance(a, One):
        return b
    return CTensor(a, b)


def simp_par(a: CmllFormula, b: CmllFormula) -> CmllFormula:
    if isinstance(b, Bot):
        return a
    if isinstance(a, Bot):
        return b
    return Par(a, b)


def raw_tensor(a, b):
    return CTensor(a, b)


def raw_par(a, b):
    return Par(a, b)


@dataclass(frozen=True)
class Translated:
    """One polarised translation, keeping the pieces for every subformula."""

    source: RllFormula
    positive: bool
    cm: CmllFormula
    parts: tuple["Translated", ...] = ()


class _Tagger:
    def __init__(self, start: int = 0):
        self.counter = itertools.count(start)

    def __call__(self, f: RllFormula, positive: bool, normalise: bool = True) -> Translated:
        tensor = simp_tensor if normalise else raw_tensor
        par = simp_par if normalise else raw_par
        if isinstance(f, Bottom):
            return Translated(f, positive, Bot(next(self.counter)) if positive else One(next(self.counter)))
        if isinstance(f, Atom):
            leaf = PosAtom(f.name, next(self.counter)) if positive else NegAtom(f.name, next(self.counter))
            return Translated(f, positive, leaf)
        if isinstance(f, Tensor):
            if positive:
                a, b = self(f.left, True, normalise), self(f.right, True, normalise)
                return Translated(f, True, tensor(a.cm, b.cm), (a, b))
            b, a = self(f.right, False, normalise), self(f.left, False, normalise)
            return Translated(f, False, par(b.cm, a.cm), (a, b))
        if positive:
            a, b = self(f.left, False, normalise), self(f.right, True, normalise)
            return Translated(f, True, par(a.cm, b.cm), (a, b))
        b, a = self(f.right, False, normalise), self(f.left, True, normalise)
        return Translated(f, False, tensor(b.cm, a.cm), (a, b))


def translate_formula(f: RllFormula, positive: bool = True, *, normalise: bool = True) -> CmllFormula:
    """Polarised translation; ``normalise`` drops the units of 1 (x) A and bot | A."""
    return _Tagger()(f, positive, normalise).cm


def translate_sequent(seq: RllSequent, *, normalise: bool = True) -> CmllSequent:
    """Negative context in its written order, then the positive conclusion."""
    t = _Tagger()
    parts = [t(f, False, normalise).cm for f in seq.context] + [t(seq.conclusion, True, normalise).cm]
    return CmllSequent(tuple(parts))


# --- CMLL proofs ---------------------------------------------------------------------

CMLL_RULES = ("identity", "one", "false", "times", "parr")


@dataclass(frozen=True)
class CmllProof:
    conclusions: tuple[CmllFormula, ...]
    rule: str
    children: tuple["CmllProof", ...] = ()

    def walk(self) -> Iterator["CmllProof"]:
        yield self
        for c in self.children:
            yield from c.walk()

    def sequent(self) -> CmllSequent:
        return CmllSequent(self.conclusions)

    def to_json(self) -> dict[str, Any]:
        return {
            "rule": self.rule,
            "sequent": self.sequent().render(unicode=False),
            "children": [c.to_json() for c in self.children],
        }

    def pretty(self, indent: int = 0) -> str:
        lines = [f"{'  ' * indent}{self.sequent().render()}    [{self.rule}]"]
        lines += [c.pretty(indent + 1) for c in self.children]
        return "\n".join(lines)


def _minus(items: Sequence[CmllFormula], drop: Sequence[CmllFormula]) -> Optional[Counter]:
    have = Counter(items)
    need = Counter(drop)
    if any(have[k] < v for k, v in need.items()):
        return None
    return have - need


def check_cmll_proof(p: CmllProof) -> bool:
    """Replay with multiset bookkeeping; conclusion order is irrelevant to validity."""
    concl = p.conclusions
    kids = p.children
    if p.rule == "identity":
        return not kids and len(concl) == 2 and linear_negation(concl[0]) == concl[1]
    if p.rule == "one":
        return not kids and len(concl) == 1 and isinstance(concl[0], One)
    if p.rule == "false":
        if len(kids) != 1:
            return False
        ok = Counter(concl) == Counter(kids[0].conclusions) + Counter([Bot()])
        return ok and check_cmll_proof(kids[0])
    if p.rule == "parr":
        if len(kids) != 1:
            return False
        child = Counter(kids[0].conclusions)
        ok = any(
            isinstance(f, Par) and _minus(concl, [f]) + Counter([f.left, f.right]) == child
            for f in concl
        )
        return ok and check_cmll_proof(kids[0])
    if p.rule == "times":
        if len(kids) != 2:
            return False
        a, b = kids
        ok = False
        for f in concl:
            if not isinstance(f, CTensor):
                continue
            ra, rb = _minus(a.conclusions, [f.left]), _minus(b.conclusions, [f.right])
            if ra is not None and rb is not None and ra + rb == _minus(concl, [f]):
                ok = True
                break
        return ok and check_cmll_proof(a) and check_cmll_proof(b)
    return False


def _same_leaf(x: CmllFormula, y: CmllFormula) -> bool:
    return type(x) is type(y) and x.tag == y.tag and x == y


def _index_of_leaf(concl: Sequence[CmllFormula], leaf: CmllFormula) -> int:
    for i, f in enumerate(concl):
        if _same_leaf(f, leaf):
            return i
    return -1


def eta(f: CmllFormula, g: CmllFormula) -> CmllProof:
    """Proof of ``=> f, g`` for formulas dual up to commutativity, with atomic identities only."""
    if isinstance(f, (PosAtom, NegAtom)):
        if linear_negation(f) != g:
            raise TranslationFailure(f"{render_cmll(f)} and {render_cmll(g)} are not dual")
        return CmllProof((f, g), "identity")
    if isinstance(f, One) and isinstance(g, Bot):
        return CmllProof((f, g), "false", (CmllProof((f,), "one"),))
    if isinstance(f, Bot) and isinstance(g, One):
        return CmllProof((f, g), "false", (CmllProof((g,), "one"),))
    if isinstance(f, Par) and isinstance(g, CTensor):
        inner = eta(g, f)
        return CmllProof((f, g), inner.rule, inner.children)
    if isinstance(f, CTensor) and isinstance(g, Par):
        for u, v in ((g.left, g.right), (g.right, g.left)):
            if linear_negation(f.left) == u and linear_negation(f.right) == v:
                left, right = eta(f.left, u), eta(f.right, v)
                times = CmllProof((f, u, v), "times", (left, right))
                return CmllProof((f, g), "parr", (times,))
    raise TranslationFailure(f"{render_cmll(f)} and {render_cmll(g)} are not dual")


def _drop_bot(p: CmllProof, bot: CmllFormula) -> CmllProof:
    """Remove the given occurrence of bot, deleting the rule that introduced it."""
    i = _index_of_leaf(p.conclusions, bot)
    if i < 0:
        raise TranslationFailure("bot occurrence not found")
    rest = p.conclusions[:i] + p.conclusions[i + 1:]
    if p.rule == "false" and _index_of_leaf(p.children[0].conclusions, bot) < 0:
        return p.children[0]
    kids = tuple(_drop_bot(c, bot) if _index_of_leaf(c.conclusions, bot) >= 0 else c for c in p.children)
    return CmllProof(rest, p.rule, kids)


def _plug_one(p: CmllProof, one: CmllFormula, sub: CmllProof) -> CmllProof:
    """Replace the ``one`` axiom for the given occurrence by ``sub``, threading its conclusions down."""
    i = _index_of_leaf(p.conclusions, one)
    if i < 0:
        raise TranslationFailure("one occurrence not found")
    if p.rule == "one":
        return sub
    concl = p.conclusions[:i] + sub.conclusions + p.conclusions[i + 1:]
    kids = tuple(_plug_one(c, one, sub) if _index_of_leaf(c.conclusions, one) >= 0 else c for c in p.children)
    return CmllProof(concl, p.rule, kids)


def _reorder(p: CmllProof, order: Sequence[CmllFormula]) -> CmllProof:
    if Counter(p.conclusions) != Counter(order):
        raise TranslationFailure("conclusions do not match the expected sequent")
    return CmllProof(tuple(order), p.rule, p.children)


def _assign(pool: list[Translated], wanted: Sequence[RllFormula]) -> list[Translated]:
    """Pair each wanted formula with an unused translation of an equal formula, first come first served."""
    pool = list(pool)
    out = []
    for f in wanted:
        for j, t in enumerate(pool):
            if t.source == f:
                out.append(pool.pop(j))
                break
        else:
            raise TranslationFailure(f"no translation available for {rll.render_formula(f)}")
    if pool:
        raise TranslationFailure("unused context formulas")
    return out


def _combine_par(child: CmllProof, a: Translated, b: Translated, result: CmllFormula) -> CmllProof:
    """``result`` is simp_par(a.cm, b.cm); ``child`` proves a.cm and b.cm side by side."""
    if isinstance(result, Par) and result.left is a.cm and result.right is b.cm:
        i, j = _index_of_leaf_or_obj(child.conclusions, a.cm), _index_of_leaf_or_obj(child.conclusions, b.cm)
        rest = [f for k, f in enumerate(child.conclusions) if k not in (i, j)]
        return CmllProof(tuple(rest) + (result,), "parr", (child,))
    dropped = b.cm if result is a.cm else a.cm
    return _drop_bot(child, dropped)


def _combine_times(pa: CmllProof, pb: CmllProof, a: Translated, b: Translated, result: CmllFormula) -> CmllProof:
    """``result`` is simp_tensor(a.cm, b.cm); ``pa`` proves a.cm, ``pb`` proves b.cm."""
    if isinstance(result, CTensor) and result.left is a.cm and result.right is b.cm:
        i = _index_of_leaf_or_obj(pa.conclusions, a.cm)
        j = _index_of_leaf_or_obj(pb.conclusions, b.cm)
        rest = pa.conclusions[:i] + pa.conclusions[i + 1:] + pb.conclusions[:j] + pb.conclusions[j + 1:]
        return CmllProof(rest + (result,), "times", (pa, pb))
    if result is a.cm:
        return _plug_one(pb, b.cm, pa)
    return _plug_one(pa, a.cm, pb)


def _index_of_leaf_or_obj(concl: Sequence[CmllFormula], f: CmllFormula) -> int:
    for i, g in enumerate(concl):
        if g is f:
            return i
    i = _index_of_leaf(concl, f) if isinstance(f, LEAVES) else -1
    if i < 0:
        raise TranslationFailure(f"{render_cmll(f)} missing from {[render_cmll(g) for g in concl]}")
    return i


def translate_proof(p: RllProof) -> CmllProof:
    """CMLL proof of the normalised translation of the root sequent, with atomic identities."""
    tag = _Tagger()
    ctx = [tag(f, False) for f in p.node.context]
    goal = tag(p.node.conclusion, True)
    out = _build(p, ctx, goal)
    return _reorder(out, [t.cm for t in ctx] + [goal.cm])


def _build(p: RllProof, ctx: list[Translated], goal: Translated) -> CmllProof:
    rule = p.rule
    kids = p.children
    if rule == "Id":
        if len(ctx) != 1:
            raise TranslationFailure("identity with a non-singleton context")
        return eta(ctx[0].cm, goal.cm)
    if rule == "LollipopR":
        a, b = goal.parts
        child = _build(kids[0], _assign(ctx + [a], kids[0].node.context), b)
        return _combine_par(child, a, b, goal.cm)
    if rule == "TensorR":
        a, b = goal.parts
        pool = list(ctx)
        left = _assign_subset(pool, kids[0].node.context)
        pa = _build(kids[0], left, a)
        pb = _build(kids[1], _assign(pool, kids[1].node.context), b)
        return _combine_times(pa, pb, a, b, goal.cm)
    if rule == "TensorL":
        i = _principal(p, ctx, Tensor)
        a, b = ctx[i].parts
        rest = ctx[:i] + ctx[i + 1:]
        child = _build(kids[0], _assign(rest + [a, b], kids[0].node.context), goal)
        # negative tensor is bot-free on both sides, so this is a plain parr of (b, a)
        return _combine_par(child, b, a, ctx[i].cm)
    if rule == "LollipopL":
        i = _principal(p, ctx, Lollipop)
        a, b = ctx[i].parts
        pool = ctx[:i] + ctx[i + 1:]
        left = _assign_subset(pool, kids[0].node.context)
        pa = _build(kids[0], left, a)
        pb = _build(kids[1], _assign(pool + [b], kids[1].node.context), goal)
        return _combine_times(pb, pa, b, a, ctx[i].cm)
    raise TranslationFailure(f"cannot map rule {rule!r}")


def _assign_subset(pool: list[Translated], wanted: Sequence[RllFormula]) -> list[Translated]:
    """Like _assign but removes the matches from ``pool`` in place and leaves the rest."""
    out = []
    for f in wanted:
        for j, t in enumerate(pool):
            if t.source == f:
                out.append(pool.pop(j))
                break
        else:
            raise TranslationFailure(f"no translation available for {rll.render_formula(f)}")
    return out


def _principal(p: RllProof, ctx: list[Translated], shape: type) -> int:
    if p.principal is not None and 0 <= p.principal < len(ctx) and isinstance(ctx[p.principal].source, shape):
        return p.principal
    child = Counter(map(rll.render_formula, p.children[-1].node.context))
    for i, t in enumerate(ctx):
        if isinstance(t.source, shape):
            if shape is Tensor:
                trial = Counter(rll.render_formula(x.source) for k, x in enumerate(ctx) if k != i)
                trial.update([rll.render_formula(t.source.left), rll.render_formula(t.source.right)])
                if trial == child:
                    return i
            else:
                return i
    raise TranslationFailure("principal formula not found")


# --- unit laws ----------------------------------------------------------------------

def unit_law_proofs() -> dict[str, CmllProof]:
    """Both directions of 1 (x) A == A and bot | A == A, as CMLL proofs."""
    a, na = PosAtom("A", 0), NegAtom("A", 1)
    out = {}
    # => bot | A^, A    from => A^, A
    out["(1⊗A) ⊢ A"] = CmllProof((Par(Bot(2), na), a), "parr", (
        CmllProof((Bot(2), na, a), "false", (CmllProof((na, a), "identity"),)),
    ))
    # => A^, 1 (x) A
    out["A ⊢ (1⊗A)"] = CmllProof((na, CTensor(One(3), a)), "times", (
        CmllProof((One(3),), "one"), CmllProof((na, a), "identity"),
    ))
    # => 1 (x) A^, A
    out["(⊥⅋A) ⊢ A"] = CmllProof((CTensor(One(4), na), a), "times", (
        CmllProof((One(4),), "one"), CmllProof((na, a), "identity"),
    ))
    # => A^, bot | A
    out["A ⊢ (⊥⅋A)"] = CmllProof((na, Par(Bot(5), a)), "parr", (
        CmllProof((na, Bot(5), a), "false", (CmllProof((na, a), "identity"),)),
    ))
    return out


# --- nets ------------------------------------------------------------------------------

@dataclass(frozen=True)
class ProofNet:
    conclusions: tuple[CmllFormula, ...]
    atoms: tuple[CmllFormula, ...]
    links: tuple[tuple[int, int], ...]

    def is_perfect_matching(self) -> bool:
        used = [i for link in self.links for i in link]
        return sorted(used) == list(range(len(self.atoms)))

    def links_are_dual(self) -> bool:
        return all(linear_negation(self.atoms[i]) == self.atoms[j] for i, j in self.links)


def build_net(p: CmllProof) -> ProofNet:
    atoms = tuple(x for f in p.conclusions for x in leaves(f) if isinstance(x, (PosAtom, NegAtom)))
    where = {(type(x), x.tag): i for i, x in enumerate(atoms)}
    if len(where) != len(atoms):
        raise TranslationFailure("atom occurrences are not uniquely tagged")
    links = []
    for node in p.walk():
        if node.rule != "identity":
            continue
        x, y = node.conclusions
        if not isinstance(x, (PosAtom, NegAtom)):
            raise NonAtomicIdentity(f"identity on {render_cmll(x)}")
        i, j = where[(type(x), x.tag)], where[(type(y), y.tag)]
        links.append((min(i, j), max(i, j)))
    return ProofNet(tuple(p.conclusions), atoms, tuple(sorted(links)))


@dataclass(frozen=True)
class Planarity:
    planar: bool
    crossings: frozenset[tuple[tuple[int, int], tuple[int, int]]]


def crosses(l1: tuple[int, int], l2: tuple[int, int]) -> bool:
    """Chords of a circle cross iff exactly one endpoint of one lies strictly inside the other."""
    a, b = sorted(l1)
    c, d = sorted(l2)
    return (a < c < b) != (a < d < b)


def planarity(net: ProofNet) -> Planarity:
    found = set()
    for l1, l2 in itertools.combinations(net.links, 2):
        if crosses(l1, l2):
            found.add((l1, l2))
    return Planarity(not found, frozenset(found))


def rotate(net: ProofNet, k: int) -> ProofNet:
    """Same net with the conclusions rotated by ``k`` places."""
    k %= max(len(net.conclusions), 1)
    concl = net.conclusions[k:] + net.conclusions[:k]
    sizes = [sum(isinstance(x, (PosAtom, NegAtom)) for x in leaves(f)) for f in net.conclusions]
    shift = sum(sizes[:k])
    n = len(net.atoms)
    atoms = net.atoms[shift:] + net.atoms[:shift]
    links = tuple(sorted(tuple(sorted(((i - shift) % n, (j - shift) % n))) for i, j in net.links))
    return ProofNet(concl, atoms, links)


def net_to_json(net: ProofNet) -> dict[str, Any]:
    pl = planarity(net)
    return {
        "conclusions": [render_cmll(f) for f in net.conclusions],
        "atoms": [render_cmll(a) for a in net.atoms],
        "links": [list(l) for l in net.links],
        "planar": pl.planar,
        "crossings": sorted([list(a), list(b)] for a, b in pl.crossings),
    }


def net_to_dot(net: ProofNet, name: str = "net") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    atom_ids = {}
    counter = itertools.count()

    def node_id() -> str:
        return f"n{next(counter)}"

    def emit(f: CmllFormula) -> str:
        if isinstance(f, (PosAtom, NegAtom)):
            nid = f"a{atom_ids[(type(f), f.tag)]}"
            return nid
        nid = node_id()
        label = {One: "1", Bot: "⊥", CTensor: "⊗", Par: "⅋"}[type(f)]
        lines.append(f'  {nid} [label="{label}"];')
        if isinstance(f, (CTensor, Par)):
            for child in (f.left, f.right):
                lines.append(f"  {emit(child)} -> {nid};")
        return nid

    lines.append("  { rank=same;")
    for i, a in enumerate(net.atoms):
        atom_ids[(type(a), a.tag)] = i
        lines.append(f'    a{i} [label="{render_cmll(a)}"];')
    for i in range(len(net.atoms) - 1):
        lines.append(f"    a{i} -> a{i + 1} [style=invis];")
    lines.append("  }")
    for k, f in enumerate(net.conclusions):
        root = emit(f)
        lines.append(f'  c{k} [label="{render_cmll(f)}", shape=box];')
        lines.append(f"  {root} -> c{k};")
    for i, j in net.links:
        lines.append(f"  a{i} -> a{j} [dir=none, constraint=false, color=blue];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def net_for(seq: RllSequent) -> Optional[tuple[RllProof, CmllProof, ProofNet]]:
    p = rll.prove_rll(seq)
    if p is None:
        return None
    c = translate_proof(p)
    return p, c, build_net(c)


def dumps_net(net: ProofNet) -> str:
    return json.dumps(net_to_json(net), indent=2, ensure_ascii=False)
