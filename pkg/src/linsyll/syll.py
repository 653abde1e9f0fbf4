"""Rule application, bounded proof search and proof replay for the SYLL family."""
from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass
from typing import Any, Iterator, Optional, Sequence

from .diagrams import (
    BULLET,
    LEFT,
    RIGHT,
    SyllDiagram,
    bullet_count,
    flip,
    is_var,
    is_well_formed,
    parse_diagram,
    render_diagram,
    well_formed_segments,
)
from .errors import NotConcatenable, RuleShapeMismatch


class SystemLevel(enum.Flag):
    BASE = enum.auto()
    EXISTENTIAL = enum.auto()
    IDENTITY = enum.auto()
    NEW_DIAGRAMS = enum.auto()


SYLL = SystemLevel.BASE
SYLL_PLUS = SYLL | SystemLevel.EXISTENTIAL
SYLL_PLUS_PLUS = SYLL_PLUS | SystemLevel.IDENTITY
SYLL_STAR = SYLL_PLUS | SystemLevel.NEW_DIAGRAMS

SYSTEM_NAMES = {
    "syll": SYLL,
    "syll+": SYLL_PLUS,
    "syll++": SYLL_PLUS_PLUS,
    "syll+*": SYLL_STAR,
}


def system_name(system: SystemLevel) -> str:
    for name, level in SYSTEM_NAMES.items():
        if level == system:
            return name
    return "|".join(m.name for m in SystemLevel if m in system)


@dataclass(frozen=True)
class AxiomBudget:
    """How often each axiom instance may be injected, per term-variable."""

    per_variable: int = 1

    def initial(self, variables: Sequence[str], system: SystemLevel) -> tuple[tuple[str, str, int], ...]:
        slots = []
        for v in sorted(set(variables)):
            if SystemLevel.EXISTENTIAL in system:
                slots.append(("ExistAxiom", v, self.per_variable))
            if SystemLevel.IDENTITY in system:
                slots.append(("IdentAxiom", v, self.per_variable))
        return tuple(s for s in slots if s[2] > 0)

    def max_bullet_injections(self, variables: Sequence[str], system: SystemLevel) -> int:
        if SystemLevel.EXISTENTIAL not in system:
            return 0
        return self.per_variable * len(set(variables))


@dataclass(frozen=True)
class SyllSequent:
    premises: tuple[SyllDiagram, ...]
    goal: SyllDiagram

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    def variables(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for d in (*self.premises, self.goal):
            for v in d.variables():
                seen.setdefault(v)
        return tuple(seen)

    def __str__(self) -> str:
        return ", ".join(map(render_diagram, self.premises)) + " |= " + render_diagram(self.goal)


def parse_syll_sequent(text: str) -> SyllSequent:
    from .errors import ParseError

    if "|=" not in text:
        raise ParseError("expected '|=' between premises and goal", text, len(text))
    left, right = text.split("|=", 1)
    premises = tuple(parse_diagram(p) for p in left.split(",") if p.strip())
    return SyllSequent(premises, parse_diagram(right))


RULE_KINDS = (
    "Premise",
    "ReverseSyllogistic",
    "ReverseNew",
    "ConcatLeft",
    "ConcatRight",
    "DeleteRight",
    "DeleteLeft",
    "ExistAxiom",
    "IdentAxiom",
    "Star",
)


@dataclass(frozen=True)
class SyllRule:
    """``var`` names the axiom/star/delete variable, ``at`` the token offset, ``index`` a premise."""

    kind: str
    var: Optional[str] = None
    at: Optional[int] = None
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ValueError(f"unknown rule kind {self.kind!r}")

    def required_flag(self) -> SystemLevel:
        return {
            "ExistAxiom": SystemLevel.EXISTENTIAL,
            "IdentAxiom": SystemLevel.IDENTITY,
            "Star": SystemLevel.NEW_DIAGRAMS,
            "ReverseNew": SystemLevel.NEW_DIAGRAMS,
        }.get(self.kind, SystemLevel.BASE)

    def label(self) -> str:
        if self.kind == "Premise":
            return f"Premise[{self.index}]"
        if self.var is not None:
            return f"{self.kind}({self.var})"
        return self.kind


@dataclass(frozen=True)
class SyllProof:
    node: SyllDiagram
    rule: SyllRule
    children: tuple[SyllProof, ...] = ()

    def walk(self) -> Iterator[SyllProof]:
        yield self
        for c in self.children:
            yield from c.walk()

    def leaves(self) -> list[SyllProof]:
        return [p for p in self.walk() if not p.children]

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"rule": self.rule.kind, "diagram": render_diagram(self.node)}
        if self.rule.var is not None:
            doc["var"] = self.rule.var
        if self.rule.at is not None:
            doc["at"] = self.rule.at
        if self.rule.index is not None:
            doc["index"] = self.rule.index
        doc["children"] = [c.to_json() for c in self.children]
        return doc

    @classmethod
    def from_json(cls, doc: dict[str, Any]) -> SyllProof:
        rule = SyllRule(doc["rule"], doc.get("var"), doc.get("at"), doc.get("index"))
        children = tuple(cls.from_json(c) for c in doc.get("children", ()))
        return cls(parse_diagram(doc["diagram"]), rule, children)

    def pretty(self, indent: int = 0) -> str:
        lines = [f"{'  ' * indent}{render_diagram(self.node)}    [{self.rule.label()}]"]
        for c in self.children:
            lines.append(c.pretty(indent + 1))
        return "\n".join(lines)


def concatenate(d1: SyllDiagram, d2: SyllDiagram) -> SyllDiagram:
    if d1.last != d2.first:
        raise NotConcatenable(f"{d1.last!r} and {d2.first!r} differ")
    return SyllDiagram._trusted(d1.tokens + d2.tokens[1:])


def _reversal_kind(d: SyllDiagram) -> Optional[str]:
    toks = d.tokens
    if len(toks) < 3 or not is_var(toks[-1]) or any(is_var(t) and t != BULLET for t in toks[1:-1]):
        return None
    interior = toks[1:-1]
    if interior in well_formed_segments(False):
        return "ReverseSyllogistic"
    if interior in well_formed_segments(True):
        return "ReverseNew"
    return None


def _find(toks: tuple[str, ...], pattern: tuple[str, ...], at: Optional[int]) -> int:
    n = len(pattern)
    if at is not None:
        if toks[at:at + n] != pattern:
            raise RuleShapeMismatch(f"no part {' '.join(pattern)} at offset {at}")
        return at
    for i in range(len(toks) - n + 1):
        if toks[i:i + n] == pattern:
            return i
    raise RuleShapeMismatch(f"no part {' '.join(pattern)}")


def composable(toks: tuple[str, ...], i: int, arrow: str) -> bool:
    """Whether the variable between the arrows at ``i`` and ``i + 2`` may be deleted.

    In ``-> A -> * ->`` the variable is entered plainly from the left but leaves
    through a bullet that passes the arrow on, i.e. it is complemented on the
    right only; composing through it would confuse A with non-A. Same for the
    mirror image ``<- * <- A <-``.
    """
    if arrow == RIGHT:
        return toks[i + 3:i + 5] != (BULLET, RIGHT)
    return i < 2 or toks[i - 2:i] != (LEFT, BULLET)


def apply_rule(rule: SyllRule, inputs: Sequence[SyllDiagram]) -> SyllDiagram:
    kind = rule.kind
    arity = {"ConcatLeft": 2, "ConcatRight": 2, "ExistAxiom": 0, "IdentAxiom": 0}.get(kind, 1)
    if kind == "Premise":
        raise RuleShapeMismatch("a premise leaf is not an inference")
    if len(inputs) != arity:
        raise RuleShapeMismatch(f"{kind} takes {arity} input(s), got {len(inputs)}")
    if kind in ("ExistAxiom", "IdentAxiom"):
        if rule.var is None:
            raise RuleShapeMismatch(f"{kind} needs a term-variable")
        v = rule.var
        toks = (v, LEFT, BULLET, RIGHT, v) if kind == "ExistAxiom" else (v, RIGHT, v)
        return SyllDiagram._trusted(toks)
    if kind == "ConcatLeft":
        try:
            return concatenate(inputs[0], inputs[1])
        except NotConcatenable as exc:
            raise RuleShapeMismatch(str(exc)) from None
    if kind == "ConcatRight":
        try:
            return concatenate(inputs[1], inputs[0])
        except NotConcatenable as exc:
            raise RuleShapeMismatch(str(exc)) from None
    (d,) = inputs
    toks = d.tokens
    if kind in ("ReverseSyllogistic", "ReverseNew"):
        actual = _reversal_kind(d)
        if actual is None:
            raise RuleShapeMismatch("reversal applies to two-term (new) syllogistic diagrams only")
        if actual != kind:
            raise RuleShapeMismatch(f"diagram needs {actual}, not {kind}")
        return SyllDiagram._trusted(tuple(flip(t) for t in reversed(toks)))
    if rule.var is None:
        raise RuleShapeMismatch(f"{kind} needs a term-variable")
    v = rule.var
    if kind == "DeleteRight":
        i = _find(toks, (RIGHT, v, RIGHT), rule.at)
        if not composable(toks, i, RIGHT):
            raise RuleShapeMismatch(f"{v} is complemented on one side only")
        return SyllDiagram._trusted(toks[:i] + (RIGHT,) + toks[i + 3:])
    if kind == "DeleteLeft":
        i = _find(toks, (LEFT, v, LEFT), rule.at)
        if not composable(toks, i, LEFT):
            raise RuleShapeMismatch(f"{v} is complemented on one side only")
        return SyllDiagram._trusted(toks[:i] + (LEFT,) + toks[i + 3:])
    if kind == "Star":
        i = _find(toks, (BULLET, LEFT, v, RIGHT, BULLET), rule.at)
        return SyllDiagram._trusted(toks[:i] + (v,) + toks[i + 5:])
    raise RuleShapeMismatch(f"unhandled rule {kind}")


# --- search -----------------------------------------------------------------

def _unary_moves(toks: tuple[str, ...], system: SystemLevel) -> Iterator[tuple[SyllRule, tuple[str, ...]]]:
    n = len(toks)
    for i in range(1, n - 3):
        t = toks[i]
        if t == RIGHT and toks[i + 2] == RIGHT and toks[i + 1] != BULLET:
            if composable(toks, i, RIGHT):
                yield SyllRule("DeleteRight", toks[i + 1], i), toks[:i] + (RIGHT,) + toks[i + 3:]
        elif t == LEFT and toks[i + 2] == LEFT and toks[i + 1] != BULLET:
            if composable(toks, i, LEFT):
                yield SyllRule("DeleteLeft", toks[i + 1], i), toks[:i] + (LEFT,) + toks[i + 3:]
    if SystemLevel.NEW_DIAGRAMS in system:
        for i in range(0, n - 4):
            if (toks[i] == BULLET and toks[i + 1] == LEFT and toks[i + 3] == RIGHT
                    and toks[i + 4] == BULLET and toks[i + 2] != BULLET):
                yield SyllRule("Star", toks[i + 2], i), toks[:i] + (toks[i + 2],) + toks[i + 5:]
    kind = _reversal_kind(SyllDiagram._trusted(toks))
    if kind == "ReverseSyllogistic" or (kind == "ReverseNew" and SystemLevel.NEW_DIAGRAMS in system):
        rev = tuple(flip(t) for t in reversed(toks))
        if rev != toks:
            yield SyllRule(kind), rev


def _well_formed(toks: tuple[str, ...], extended: bool) -> bool:
    return is_well_formed(SyllDiagram._trusted(toks), extended)


@dataclass
class SearchStats:
    states: int = 0
    exhausted: bool = False


def prove(
    seq: SyllSequent,
    system: SystemLevel = SYLL,
    budget: AxiomBudget | None = None,
    *,
    max_states: int | None = None,
    stats: SearchStats | None = None,
) -> Optional[SyllProof]:
    """Breadth-first search over multisets of diagrams; returns the first proof found.

    Every premise must be consumed exactly once. Axiom leaves are injected within
    ``budget``; without rule (*) the bullet count of a state can only grow, which
    gives a cheap prune against the goal.
    """
    budget = budget or AxiomBudget()
    extended = SystemLevel.NEW_DIAGRAMS in system
    goal = seq.goal.tokens
    goal_rev = tuple(flip(t) for t in reversed(goal))
    goal_rev_kind = _reversal_kind(seq.goal)
    can_reverse_goal = goal_rev_kind == "ReverseSyllogistic" or (goal_rev_kind == "ReverseNew" and extended)
    goal_bullets = goal.count(BULLET)
    star = SystemLevel.NEW_DIAGRAMS in system
    stats = stats if stats is not None else SearchStats()

    def finish(toks: tuple[str, ...], proof: SyllProof) -> Optional[SyllProof]:
        if toks == goal:
            return proof
        if can_reverse_goal and toks == goal_rev:
            return SyllProof(seq.goal, SyllRule(goal_rev_kind), (proof,))
        return None

    leaves = [
        (p.tokens, SyllProof(p, SyllRule("Premise", index=i))) for i, p in enumerate(seq.premises)
    ]
    for toks, _ in leaves:
        if not _well_formed(toks, extended):
            return None

    def key_of(items, slots):
        return (tuple(sorted(t for t, _ in items)), slots)

    start_items = tuple(sorted(leaves, key=lambda x: x[0]))
    start_slots = budget.initial(seq.variables(), system)
    if len(start_items) == 1:
        hit = finish(*start_items[0])
        if hit is not None:
            return hit

    queue = deque([(start_items, start_slots)])
    visited = {key_of(start_items, start_slots)}

    def push(items, slots):
        items = tuple(sorted(items, key=lambda x: x[0]))
        if not star and sum(t.count(BULLET) for t, _ in items) > goal_bullets:
            return None
        k = key_of(items, slots)
        if k in visited:
            return None
        visited.add(k)
        if len(items) == 1:
            hit = finish(*items[0])
            if hit is not None:
                return hit
        queue.append((items, slots))
        return None

    while queue:
        items, slots = queue.popleft()
        stats.states += 1
        if max_states is not None and stats.states > max_states:
            return None
        n = len(items)
        for i in range(n):
            toks, proof = items[i]
            rest = items[:i] + items[i + 1:]
            for rule, new in _unary_moves(toks, system):
                if not _well_formed(new, extended):
                    continue
                hit = push(rest + ((new, SyllProof(SyllDiagram._trusted(new), rule, (proof,))),), slots)
                if hit is not None:
                    return hit
            for j in range(n):
                if j == i:
                    continue
                toks2, proof2 = items[j]
                if toks[-1] != toks2[0]:
                    continue
                new = toks + toks2[1:]
                if not _well_formed(new, extended):
                    continue
                others = tuple(items[k] for k in range(n) if k != i and k != j)
                node = SyllProof(SyllDiagram._trusted(new), SyllRule("ConcatLeft"), (proof, proof2))
                hit = push(others + ((new, node),), slots)
                if hit is not None:
                    return hit
        for s, (kind, v, left) in enumerate(slots):
            rule = SyllRule(kind, v)
            ax = apply_rule(rule, ()).tokens
            if left > 1:
                new_slots = slots[:s] + ((kind, v, left - 1),) + slots[s + 1:]
            else:
                new_slots = slots[:s] + slots[s + 1:]
            hit = push(items + ((ax, SyllProof(SyllDiagram._trusted(ax), rule)),), new_slots)
            if hit is not None:
                return hit
    stats.exhausted = True
    return None


def is_provable(seq: SyllSequent, system: SystemLevel = SYLL, budget: AxiomBudget | None = None) -> bool:
    return prove(seq, system, budget) is not None


def check_proof(p: SyllProof, seq: SyllSequent, system: SystemLevel) -> bool:
    """Independent replay: rules, system gating, well-formedness, and linear use of premises."""
    extended = SystemLevel.NEW_DIAGRAMS in system
    used: Counter[int] = Counter()

    def ok(node: SyllProof) -> bool:
        if not is_well_formed(node.node, extended):
            return False
        rule = node.rule
        if rule.kind == "Premise":
            if node.children or rule.index is None or not 0 <= rule.index < len(seq.premises):
                return False
            used[rule.index] += 1
            return seq.premises[rule.index] == node.node
        if rule.required_flag() not in system:
            return False
        try:
            out = apply_rule(rule, [c.node for c in node.children])
        except RuleShapeMismatch:
            return False
        return out == node.node and all(ok(c) for c in node.children)

    if p.node != seq.goal or not ok(p):
        return False
    return all(used[i] == 1 for i in range(len(seq.premises))) and sum(used.values()) == len(seq.premises)


def bullet_balance(p: SyllProof) -> bool:
    """Each step moves the bullet count by the amount its rule dictates."""
    for node in p.walk():
        kind = node.rule.kind
        here = bullet_count(node.node)
        below = sum(bullet_count(c.node) for c in node.children)
        expected = {
            "ExistAxiom": 1,
            "IdentAxiom": 0,
            "Star": below - 2,
        }.get(kind, below)
        if kind == "Premise":
            continue
        if here != expected:
            return False
    return True


@dataclass(frozen=True)
class RejectReason:
    premise_bullets: int
    goal_bullets: int
    max_injections: int
    star_allowed: bool

    def __str__(self) -> str:
        extra = " minus any even number" if self.star_allowed else ""
        return (
            f"goal has {self.goal_bullets} bullet(s) but premises give {self.premise_bullets}"
            f" plus at most {self.max_injections}{extra}"
        )


def reject_precheck(
    seq: SyllSequent, system: SystemLevel = SYLL, budget: AxiomBudget | None = None
) -> Optional[RejectReason]:
    budget = budget or AxiomBudget()
    bp = sum(bullet_count(d) for d in seq.premises)
    bg = bullet_count(seq.goal)
    m_max = budget.max_bullet_injections(seq.variables(), system)
    star = SystemLevel.NEW_DIAGRAMS in system
    diff = bg - bp  # = m - 2k
    if diff > m_max:
        feasible = False
    elif diff >= 0:
        feasible = True
    else:
        feasible = star and (diff % 2) <= m_max
    if feasible:
        return None
    return RejectReason(bp, bg, m_max, star)


__all__ = [
    "AxiomBudget",
    "RejectReason",
    "SYLL",
    "SYLL_PLUS",
    "SYLL_PLUS_PLUS",
    "SYLL_STAR",
    "SYSTEM_NAMES",
    "SearchStats",
    "SyllProof",
    "SyllRule",
    "SyllSequent",
    "SystemLevel",
    "apply_rule",
    "bullet_balance",
    "check_proof",
    "concatenate",
    "is_provable",
    "parse_syll_sequent",
    "prove",
    "reject_precheck",
    "system_name",
]
