"""Categorical propositions, syllogisms, their two encodings, and the validity catalogs."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from . import rll, syll
from .diagrams import BULLET, LEFT, RIGHT, SyllDiagram
from .errors import ParseError
from .rll import Atom, Lollipop, RllFormula, RllSequent, Tensor, complement

TRADITIONAL = "traditional"
DEMORGAN = "demorgan"
KINDS = (TRADITIONAL, DEMORGAN)


@dataclass(frozen=True, order=True)
class SignedTerm:
    var: str
    complemented: bool = False

    def __str__(self) -> str:
        return self.var[0].lower() + self.var[1:] if self.complemented else self.var

    @classmethod
    def parse(cls, text: str) -> SignedTerm:
        text = text.strip()
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", text):
            raise ParseError(f"bad term {text!r}", text, 0)
        if text[0].islower():
            return cls(text[0].upper() + text[1:], True)
        return cls(text, False)

    def formula(self) -> RllFormula:
        a = Atom(self.var)
        return complement(a) if self.complemented else a


@dataclass(frozen=True, order=True)
class CategoricalProp:
    quantity: str  # "A" universal, "I" particular
    subject: SignedTerm
    predicate: SignedTerm

    def __post_init__(self):
        if self.quantity not in ("A", "I"):
            raise ValueError(f"quantity must be 'A' or 'I', not {self.quantity!r}")

    def __str__(self) -> str:
        return f"{self.quantity}({self.subject},{self.predicate})"

    @property
    def terms(self) -> tuple[str, str]:
        return self.subject.var, self.predicate.var

    def is_traditional(self) -> bool:
        return not self.subject.complemented


_PROP_RE = re.compile(r"\s*([AI])\s*\(\s*([A-Za-z][A-Za-z0-9_]*)\s*,\s*([A-Za-z][A-Za-z0-9_]*)\s*\)\s*$")


def parse_prop(text: str) -> CategoricalProp:
    m = _PROP_RE.match(text)
    if m is None:
        raise ParseError(f"not a categorical proposition: {text.strip()!r}", text, 0)
    return CategoricalProp(m.group(1), SignedTerm.parse(m.group(2)), SignedTerm.parse(m.group(3)))


def to_formula(p: CategoricalProp) -> RllFormula:
    s, q = p.subject.formula(), p.predicate.formula()
    return Lollipop(s, q) if p.quantity == "A" else Tensor(s, q)


# interior of the diagram for each (quantity, subject complemented, predicate complemented)
_INTERIORS = {
    ("A", False, False): (RIGHT,),
    ("A", False, True): (RIGHT, BULLET, LEFT),
    ("I", False, False): (LEFT, BULLET, RIGHT),
    ("I", False, True): (LEFT, BULLET, RIGHT, BULLET, LEFT),
    ("A", True, False): (RIGHT, BULLET, RIGHT),
    ("A", True, True): (RIGHT, BULLET, RIGHT, BULLET, LEFT),
    ("I", True, False): (RIGHT, BULLET, LEFT, BULLET, RIGHT),
    ("I", True, True): (RIGHT, BULLET, LEFT, BULLET, RIGHT, BULLET, LEFT),
}


def to_diagram(p: CategoricalProp) -> SyllDiagram:
    inner = _INTERIORS[(p.quantity, p.subject.complemented, p.predicate.complemented)]
    return SyllDiagram((p.subject.var, *inner, p.predicate.var))


def import_prop(t: SignedTerm) -> CategoricalProp:
    return CategoricalProp("I", t, t)


@dataclass(frozen=True, order=True)
class Syllogism:
    premise1: CategoricalProp
    premise2: CategoricalProp
    conclusion: CategoricalProp
    import_: Optional[SignedTerm] = None

    def premises(self) -> tuple[CategoricalProp, ...]:
        ps = (self.premise1, self.premise2)
        return ps + (import_prop(self.import_),) if self.import_ is not None else ps

    def __str__(self) -> str:
        return "; ".join(map(str, self.premises())) + " / " + str(self.conclusion)

    def is_traditional(self) -> bool:
        return all(p.is_traditional() for p in (*self.premises(), self.conclusion))

    def syll_sequent(self) -> syll.SyllSequent:
        return syll.SyllSequent(tuple(to_diagram(p) for p in self.premises()), to_diagram(self.conclusion))

    def rll_sequent(self) -> RllSequent:
        return RllSequent([to_formula(p) for p in self.premises()], to_formula(self.conclusion))


def parse_syllogism(text: str) -> Syllogism:
    if "/" not in text:
        raise ParseError("expected '/' before the conclusion", text, len(text))
    left, right = text.rsplit("/", 1)
    parts = [x for x in left.split(";")]
    if len(parts) not in (2, 3):
        raise ParseError("expected two premises and an optional import", text, 0)
    p1, p2 = parse_prop(parts[0]), parse_prop(parts[1])
    imp = None
    if len(parts) == 3:
        ip = parse_prop(parts[2])
        if ip.quantity != "I" or ip.subject != ip.predicate:
            raise ParseError(f"import must read I(X,X), got {ip}", text, len(parts[0]) + len(parts[1]) + 2)
        imp = ip.subject
    return Syllogism(p1, p2, parse_prop(right), imp)


def canonical(text: str) -> str:
    return str(parse_syllogism(text))


def figure_of(s: Syllogism, middle: str = "M") -> int:
    first_subject = s.premise1.subject.var == middle
    second_subject = s.premise2.subject.var == middle
    if first_subject and not second_subject:
        return 1
    if not first_subject and not second_subject:
        return 2
    if first_subject and second_subject:
        return 3
    return 4


def mood_of(s: Syllogism) -> str:
    letters = s.premise1.quantity + s.premise2.quantity
    if s.import_ is not None:
        letters += "I"
    return letters + s.conclusion.quantity


# --- candidates ---------------------------------------------------------------

def _premises(outer: str, middle: str, demorgan: bool) -> Iterator[CategoricalProp]:
    subject_flags = (False, True) if demorgan else (False,)
    for subj, pred in ((middle, outer), (outer, middle)):
        for q in "AI":
            for sc in subject_flags:
                for pc in (False, True):
                    yield CategoricalProp(q, SignedTerm(subj, sc), SignedTerm(pred, pc))


def _conclusions(demorgan: bool) -> Iterator[CategoricalProp]:
    subject_flags = (False, True) if demorgan else (False,)
    for q in "AI":
        for sc in subject_flags:
            for pc in (False, True):
                yield CategoricalProp(q, SignedTerm("S", sc), SignedTerm("P", pc))


def import_terms(kind: str) -> tuple[SignedTerm, ...]:
    if kind == TRADITIONAL:
        return tuple(SignedTerm(v) for v in "SMP")
    return tuple(SignedTerm(v, c) for v in "SMP" for c in (False, True))


def enumerate_candidates(kind: str, strengthened: bool = False) -> list[Syllogism]:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    dm = kind == DEMORGAN
    imports: Sequence[Optional[SignedTerm]] = import_terms(kind) if strengthened else (None,)
    return [
        Syllogism(p1, p2, c, imp)
        for p1 in _premises("P", "M", dm)
        for p2 in _premises("S", "M", dm)
        for c in _conclusions(dm)
        for imp in imports
    ]


def system_for(kind: str) -> syll.SystemLevel:
    return syll.SYLL if kind == TRADITIONAL else syll.SYLL_STAR


# import diagrams are explicit premises, so no axiom may be injected
CLASSIFY_BUDGET = syll.AxiomBudget(0)


@dataclass(frozen=True)
class Verdict:
    syllogism: Syllogism
    syll_provable: bool
    rll_provable: bool
    rejected: bool = False
    syll_proof: Optional[syll.SyllProof] = field(default=None, compare=False, repr=False)
    rll_proof: Optional[rll.RllProof] = field(default=None, compare=False, repr=False)
    states: int = field(default=0, compare=False)
    exhausted: bool = field(default=False, compare=False)

    @property
    def agree(self) -> bool:
        return self.syll_provable == self.rll_provable


def classify(
    s: Syllogism,
    system: syll.SystemLevel | None = None,
    budget: syll.AxiomBudget = CLASSIFY_BUDGET,
    *,
    use_precheck: bool = False,
) -> Verdict:
    """Both verdicts for one syllogism. With ``use_precheck`` a cheap bullet rejection short-circuits the search."""
    if system is None:
        system = system_for(TRADITIONAL if s.is_traditional() else DEMORGAN)
    seq = s.syll_sequent()
    reason = syll.reject_precheck(seq, system, budget)
    stats = syll.SearchStats()
    if reason is not None and use_precheck:
        sp = None
    else:
        sp = syll.prove(seq, system, budget, stats=stats)
    rp = rll.prove_rll(s.rll_sequent())
    return Verdict(s, sp is not None, rp is not None, reason is not None, sp, rp, stats.states, stats.exhausted)


# --- golden tables --------------------------------------------------------------

TABLE1_PLAIN = (
    "A(M,P); A(S,M) / A(S,P)",
    "A(M,p); A(S,M) / A(S,p)",
    "A(M,P); I(S,M) / I(S,P)",
    "A(M,p); I(S,M) / I(S,p)",
    "A(P,m); A(S,M) / A(S,p)",
    "A(P,M); A(S,m) / A(S,p)",
    "A(P,m); I(S,M) / I(S,p)",
    "A(P,M); I(S,m) / I(S,p)",
    "I(M,P); A(M,S) / I(S,P)",
    "A(M,P); I(M,S) / I(S,P)",
    "I(M,p); A(M,S) / I(S,p)",
    "A(M,p); I(M,S) / I(S,p)",
    "A(P,M); A(M,s) / A(S,p)",
    "I(P,M); A(M,S) / I(S,P)",
    "A(P,m); I(M,S) / I(S,p)",
)

TABLE1_STRENGTHENED = (
    "A(M,P); A(S,M); I(S,S) / I(S,P)",
    "A(M,p); A(S,M); I(S,S) / I(S,p)",
    "A(P,M); A(S,m); I(S,S) / I(S,p)",
    "A(P,m); A(S,M); I(S,S) / I(S,p)",
    "A(M,P); A(M,S); I(M,M) / I(S,P)",
    "A(M,p); A(M,S); I(M,M) / I(S,p)",
    "A(P,M); A(M,s); I(S,S) / I(S,p)",
    "A(P,m); A(M,S); I(M,M) / I(S,p)",
    "A(P,M); A(M,S); I(P,P) / I(S,P)",
)


def _table2_columns() -> dict[str, tuple[str, ...]]:
    aaa, aii, iai, aaii = [], [], [], []
    for s in "Ss":
        for m in "Mm":
            for p in "Pp":
                aaa.append(f"A({m},{p}); A({s},{m}) / A({s},{p})")
                aii.append(f"A({m},{p}); I({s},{m}) / I({s},{p})")
                aaii.append(f"A({m},{p}); A({s},{m}); I({s},{s}) / I({s},{p})")
                iai.append(f"I({m},{p}); A({m},{s}) / I({s},{p})")
    return {"AAA": tuple(aaa), "AII": tuple(aii), "IAI": tuple(iai), "AAII": tuple(aaii)}


TABLE2 = _table2_columns()
TABLE2_PLAIN = TABLE2["AAA"] + TABLE2["AII"] + TABLE2["IAI"]
TABLE2_STRENGTHENED = TABLE2["AAII"]


@dataclass(frozen=True)
class ValidityTable:
    kind: str
    plain: frozenset[str]
    strengthened: frozenset[str]


def golden_table(kind: str) -> ValidityTable:
    if kind == TRADITIONAL:
        plain, strong = TABLE1_PLAIN, TABLE1_STRENGTHENED
    else:
        plain, strong = TABLE2_PLAIN, TABLE2_STRENGTHENED
    return ValidityTable(kind, frozenset(map(canonical, plain)), frozenset(map(canonical, strong)))


def table_columns(names) -> frozenset[tuple[str, int]]:
    """The (mood, figure) pairs a golden listing covers."""
    return frozenset((mood_of(s), figure_of(s)) for s in map(parse_syllogism, names))


def subject_import(s: Syllogism) -> bool:
    return s.import_ is not None and s.import_ == s.conclusion.subject


# --- square of opposition -------------------------------------------------------

@dataclass(frozen=True)
class Law:
    name: str
    group: str
    rll_sequent: RllSequent
    syll_sequent: Optional[syll.SyllSequent] = None
    system: syll.SystemLevel = syll.SYLL


def _seq(text: str) -> RllSequent:
    return rll.parse_sequent(text)


def _props(*texts: str) -> syll.SyllSequent:
    *prem, goal = map(parse_prop, texts)
    return syll.SyllSequent(tuple(to_diagram(p) for p in prem), to_diagram(goal))


def square_laws(mode: str = "all") -> list[Law]:
    """Contradiction and subalternation laws with their diagram forms, plus the complement entailments."""
    traditional = [
        Law("contradiction A(A,B)/I(A,b)", "contradiction",
            _seq("A -o B, A * B^ |- A * A^"), _props("A(A,B)", "I(A,b)", "I(A,a)")),
        Law("contradiction A(A,b)/I(A,B)", "contradiction",
            _seq("A -o B^, A * B |- A * A^"), _props("A(A,b)", "I(A,B)", "I(A,a)")),
        Law("subalternation A(A,B)", "subalternation",
            _seq("A -o B, A * A |- A * B"), _props("A(A,B)", "I(A,A)", "I(A,B)")),
        Law("subalternation A(A,b)", "subalternation",
            _seq("A -o B^, A * A |- A * B^"), _props("A(A,b)", "I(A,A)", "I(A,b)")),
        Law("complement of I(A,b) from A(A,B)", "complement", _seq("A -o B |- (A * B^)^")),
        Law("complement of A(A,b) from I(A,B)", "complement", _seq("A * B |- (A -o B^)^")),
        Law("complement of I(A,B) from A(A,b)", "complement", _seq("A -o B^ |- (A * B)^")),
        Law("complement of A(A,B) from I(A,b)", "complement", _seq("A * B^ |- (A -o B)^")),
    ]
    new = [
        Law("new contradiction A(a,B)/I(a,b)", "contradiction",
            _seq("A^ -o B, A^ * B^ |- B * B^"), _props("A(a,B)", "I(a,b)", "I(B,b)"), syll.SYLL_STAR),
        Law("new contradiction A(a,b)/I(a,B)", "contradiction",
            _seq("A^ -o B^, A^ * B |- B * B^"), _props("A(a,b)", "I(a,B)", "I(B,b)"), syll.SYLL_STAR),
        Law("new subalternation A(a,B)", "subalternation",
            _seq("A^ -o B, A^ * A^ |- A^ * B"), _props("A(a,B)", "I(a,a)", "I(a,B)"), syll.SYLL_STAR),
        Law("new subalternation A(a,b)", "subalternation",
            _seq("A^ -o B^, A^ * A^ |- A^ * B^"), _props("A(a,b)", "I(a,a)", "I(a,b)"), syll.SYLL_STAR),
        Law("complement of I(a,b) from A(a,B)", "complement", _seq("A^ -o B |- (A^ * B^)^")),
        Law("complement of A(a,b) from I(a,B)", "complement", _seq("A^ * B |- (A^ -o B^)^")),
        Law("complement of I(a,B) from A(a,b)", "complement", _seq("A^ -o B^ |- (A^ * B)^")),
        Law("complement of A(a,B) from I(a,b)", "complement", _seq("A^ * B^ |- (A^ -o B)^")),
    ]
    if mode == TRADITIONAL:
        return traditional
    if mode == "new":
        return new
    return traditional + new


# --- reductions and small syllogisms ----------------------------------------------

@dataclass(frozen=True)
class Obligation:
    label: str
    sequent: syll.SyllSequent


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: str
    obligations: tuple[Obligation, ...]
    source: Optional[str] = None
    rule: Optional[str] = None
    target: Optional[str] = None


def _ob(label: str, *texts: str) -> Obligation:
    return Obligation(label, _props(*texts))


def _goal_only(label: str, goal: str) -> Obligation:
    return Obligation(label, syll.SyllSequent((), to_diagram(parse_prop(goal))))


def _syllogism_ob(label: str, text: str) -> Obligation:
    return Obligation(label, parse_syllogism(text).syll_sequent())


CATALOG_SYSTEM = syll.SYLL_PLUS_PLUS


def reduction_catalog() -> list[CatalogEntry]:
    ident = [
        CatalogEntry("identity A(A,A)", "identity", (_goal_only("|= A(A,A)", "A(A,A)"),)),
        CatalogEntry("identity I(A,A)", "identity", (_goal_only("|= I(A,A)", "I(A,A)"),)),
    ]
    two_term = [
        ("A(A,B) |= A(A,B)", "reflexive", ("A(A,B)", "A(A,B)")),
        ("A(A,b) |= A(A,b)", "reflexive", ("A(A,b)", "A(A,b)")),
        ("I(A,B) |= I(A,B)", "reflexive", ("I(A,B)", "I(A,B)")),
        ("I(A,b) |= I(A,b)", "reflexive", ("I(A,b)", "I(A,b)")),
        ("subalternation A(A,B), I(A,A) |= I(A,B)", "subalternation", ("A(A,B)", "I(A,A)", "I(A,B)")),
        ("subalternation A(A,b), I(A,A) |= I(A,b)", "subalternation", ("A(A,b)", "I(A,A)", "I(A,b)")),
        ("simple conversion A(A,b) |= A(B,a)", "simple conversion", ("A(A,b)", "A(B,a)")),
        ("simple conversion I(A,B) |= I(B,A)", "simple conversion", ("I(A,B)", "I(B,A)")),
        ("per accidens A(B,A), I(B,B) |= I(A,B)", "conversion per accidens", ("A(B,A)", "I(B,B)", "I(A,B)")),
        ("per accidens A(B,a), I(A,A) |= I(A,b)", "conversion per accidens", ("A(B,a)", "I(A,A)", "I(A,b)")),
    ]
    entries = ident + [CatalogEntry(name, group, (_ob(name, *props),)) for name, group, props in two_term]

    src1, tgt1 = "A(P,m); I(M,S) / I(S,p)", "A(M,p); A(S,M) / A(S,p)"
    entries.append(CatalogEntry(
        "reduction by contradiction and simple conversion", "reduction",
        (
            _syllogism_ob("source", src1),
            _syllogism_ob("target", tgt1),
            _ob("contradictory of conclusion with first premise", "A(S,P)", "A(P,m)", "A(S,m)"),
            _ob("simple conversion to contradictory of second premise", "A(S,m)", "A(M,s)"),
        ),
        src1, "contradiction", tgt1,
    ))
    src2, tgt2 = "A(P,M); A(M,s); I(S,S) / I(S,p)", "A(M,p); A(S,M); I(S,S) / I(S,p)"
    entries.append(CatalogEntry(
        "reduction by exchange of premises", "reduction",
        (_syllogism_ob("source", src2), _syllogism_ob("target", tgt2)),
        src2, "exchange", tgt2,
    ))
    src3, tgt3 = "A(M,P); A(S,M); I(S,S) / I(S,P)", "A(M,P); A(S,M) / A(S,P)"
    entries.append(CatalogEntry(
        "reduction by subalternation", "reduction",
        (
            _syllogism_ob("source", src3),
            _syllogism_ob("target", tgt3),
            _ob("subalternation on the conclusion", "A(S,P)", "I(S,S)", "I(S,P)"),
        ),
        src3, "subalternation", tgt3,
    ))
    return entries

