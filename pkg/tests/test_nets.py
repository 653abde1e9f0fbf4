import itertools
import json

import pytest

from linsyll import nets, rll
from linsyll import syllogistics as sg
from linsyll.errors import NonAtomicIdentity, ParseError
from linsyll.nets import (
    Bot, CmllProof, CTensor, NegAtom, One, Par, PosAtom, build_net, check_cmll_proof, crosses,
    linear_negation, parse_cmll, parse_cmll_sequent, planarity, render_cmll, translate_formula,
    translate_proof, translate_sequent,
)

from .conftest import verdicts

BARBARA = "M -o P, S -o M |- S -o P"
FOURTH = "P -o M^, M * S |- S * P^"


def net_of(text):
    _, proof, net = nets.net_for(rll.parse_sequent(text))
    return proof, net


class TestNegation:
    def test_de_morgan_step(self):
        assert linear_negation(parse_cmll("P^ * M")) == parse_cmll("P | M^")

    def test_units(self):
        assert linear_negation(One()) == Bot()
        assert linear_negation(Bot()) == One()

    @pytest.mark.parametrize("text", ["A", "A^ * (B | 1)", "(A | bot) * (B^ * C)"])
    def test_involution(self, text):
        f = parse_cmll(text)
        assert linear_negation(linear_negation(f)) == f


class TestParsing:
    def test_formula(self):
        assert parse_cmll("A^ * B | 1") == Par(CTensor(NegAtom("A"), PosAtom("B")), One())
        assert parse_cmll("(A * B)^") == Par(NegAtom("A"), NegAtom("B"))
        assert parse_cmll("M⊥⊗S") == CTensor(NegAtom("M"), PosAtom("S"))

    def test_sequent(self):
        s = parse_cmll_sequent("=> P^ * M, M^ * S, S^ | P")
        assert s.render() == "⇒ P⊥⊗M, M⊥⊗S, S⊥⅋P"
        assert s.render(unicode=False) == "=> P^ * M, M^ * S, S^ | P"
        assert parse_cmll_sequent(s.render()) == s

    @pytest.mark.parametrize("bad", ["A *", "(A", "A B", "=> A,"])
    def test_errors(self, bad):
        with pytest.raises(ParseError):
            parse_cmll_sequent(bad)


class TestTranslation:
    @pytest.mark.parametrize("seq, shown", [
        (BARBARA, "⇒ P⊥⊗M, M⊥⊗S, S⊥⅋P"),
        ("A |- A", "⇒ A⊥, A"),
        (FOURTH, "⇒ M⊗P, S⊥⅋M⊥, S⊗P⊥"),
    ])
    def test_sequent(self, seq, shown):
        assert translate_sequent(rll.parse_sequent(seq)).render() == shown

    def test_formula_rows(self):
        assert render_cmll(translate_formula(rll.parse_formula("S -o M"), positive=False)) == "M⊥⊗S"
        assert translate_formula(rll.parse_formula("A^"), positive=False) == PosAtom("A")
        assert translate_formula(rll.parse_formula("A^"), positive=True) == NegAtom("A")
        assert translate_formula(rll.parse_formula("A * B")) == parse_cmll("A * B")
        assert translate_formula(rll.BOT) == Bot()
        assert translate_formula(rll.BOT, positive=False) == One()

    def test_unnormalised_form_kept(self):
        f = translate_formula(rll.parse_formula("A^"), positive=False, normalise=False)
        assert f == CTensor(One(), PosAtom("A"))
        raw = translate_sequent(rll.parse_sequent(FOURTH), normalise=False)
        assert raw.render() == "⇒ (1⊗M)⊗P, S⊥⅋M⊥, S⊗(P⊥⅋⊥)"

    def test_polarities_are_dual(self):
        for text in ["A", "A^", "A * B^", "A -o B", "(A -o bot) -o B", "bot -o bot"]:
            f = rll.parse_formula(text)
            pos = translate_formula(f, True, normalise=False)
            neg = translate_formula(f, False, normalise=False)
            assert sorted(map(render_cmll, nets.leaves(pos))) == sorted(
                map(render_cmll, nets.leaves(linear_negation(neg))))


class TestProofTranslation:
    def test_barbara_shape(self):
        proof, _ = net_of(BARBARA)
        assert check_cmll_proof(proof)
        assert proof.sequent().render() == "⇒ P⊥⊗M, M⊥⊗S, S⊥⅋P"
        ids = sorted(n.sequent().render() for n in proof.walk() if n.rule == "identity")
        assert ids == ["⇒ M⊥, M", "⇒ P⊥, P", "⇒ S⊥, S"]
        assert [n.rule for n in proof.walk()].count("times") == 2
        assert [n.rule for n in proof.walk()].count("parr") == 1

    def test_identity(self):
        p = translate_proof(rll.prove_rll(rll.parse_sequent("A |- A")))
        assert p.rule == "identity" and check_cmll_proof(p)

    def test_noncontradiction(self):
        seq = rll.parse_sequent("A * A^ |- bot")
        p = translate_proof(rll.prove_rll(seq))
        assert check_cmll_proof(p)
        assert p.sequent() == translate_sequent(seq)

    @pytest.mark.parametrize("text", [
        "bot |- bot", "|- bot -o bot", "bot -o bot |- bot -o bot", "A, A -o bot |- bot",
        "A^ |- A -o bot", "A |- A^^", "A^^^ |- A^", "A -o B |- B^ -o A^", "A * B |- (A -o B^)^",
        "A -o B^ |- B -o A^", "(A -o bot) -o bot, A^ |- bot", "bot, A |- bot * A",
    ])
    def test_unit_heavy_sequents(self, text):
        seq = rll.parse_sequent(text)
        p = translate_proof(rll.prove_rll(seq))
        assert check_cmll_proof(p)
        assert p.sequent() == translate_sequent(seq)
        assert all(n.conclusions[0].__class__ in (PosAtom, NegAtom) for n in p.walk() if n.rule == "identity")

    def test_every_provable_candidate(self):
        count = 0
        for kind, strengthened in [(sg.TRADITIONAL, False), (sg.TRADITIONAL, True),
                                   (sg.DEMORGAN, False), (sg.DEMORGAN, True)]:
            for v in verdicts(kind, strengthened):
                if v.rll_proof is None:
                    continue
                p = translate_proof(v.rll_proof)
                assert check_cmll_proof(p), str(v.syllogism)
                assert p.sequent() == translate_sequent(v.rll_proof.node)
                net = build_net(p)
                assert net.is_perfect_matching() and net.links_are_dual()
                count += 1
        assert count > 100

    def test_square_and_complement_laws(self):
        seqs = [l.rll_sequent for l in sg.square_laws()]
        seqs += [l.sequent for l in rll.complement_laws() if l.provable]
        for seq in seqs:
            p = translate_proof(rll.prove_rll(seq))
            assert check_cmll_proof(p) and p.sequent() == translate_sequent(seq)


class TestChecker:
    def test_bad_identity(self):
        assert not check_cmll_proof(CmllProof((PosAtom("A"), PosAtom("A")), "identity"))

    def test_times_split_must_match(self):
        a = CmllProof((NegAtom("A"), PosAtom("A")), "identity")
        b = CmllProof((NegAtom("B"), PosAtom("B")), "identity")
        good = CmllProof((NegAtom("A"), NegAtom("B"), CTensor(PosAtom("A"), PosAtom("B"))), "times", (a, b))
        assert check_cmll_proof(good)
        bad = CmllProof((NegAtom("A"), NegAtom("A"), CTensor(PosAtom("A"), PosAtom("B"))), "times", (a, b))
        assert not check_cmll_proof(bad)

    def test_false_and_one(self):
        one = CmllProof((One(),), "one")
        assert check_cmll_proof(CmllProof((One(), Bot()), "false", (one,)))
        assert not check_cmll_proof(CmllProof((One(), One()), "false", (one,)))
        assert not check_cmll_proof(CmllProof((Bot(),), "one"))

    def test_unknown_rule(self):
        assert not check_cmll_proof(CmllProof((PosAtom("A"),), "cut"))

    @pytest.mark.parametrize("name", list(nets.unit_law_proofs()))
    def test_unit_laws(self, name):
        assert check_cmll_proof(nets.unit_law_proofs()[name])

    def test_unit_law_count(self):
        assert len(nets.unit_law_proofs()) == 4

    def test_json(self):
        proof, _ = net_of(BARBARA)
        doc = json.loads(json.dumps(proof.to_json()))
        assert doc["sequent"] == "=> P^ * M, M^ * S, S^ | P"


class TestNets:
    def test_barbara(self):
        _, net = net_of(BARBARA)
        assert [render_cmll(a) for a in net.atoms] == ["P⊥", "M", "M⊥", "S", "S⊥", "P"]
        assert net.links == ((0, 5), (1, 2), (3, 4))
        assert planarity(net).planar

    def test_fourth_figure(self):
        _, net = net_of(FOURTH)
        assert [render_cmll(a) for a in net.atoms] == ["M", "P", "S⊥", "M⊥", "S", "P⊥"]
        assert net.links == ((0, 3), (1, 5), (2, 4))
        pl = planarity(net)
        assert not pl.planar and len(pl.crossings) >= 1

    def test_single_link(self):
        _, net = net_of("A |- A")
        assert net.links == ((0, 1),) and planarity(net).planar

    def test_non_atomic_identity(self):
        concl = (Par(NegAtom("A", 0), NegAtom("B", 1)), CTensor(PosAtom("A", 2), PosAtom("B", 3)))
        p = CmllProof(concl, "identity")
        assert check_cmll_proof(p)
        with pytest.raises(NonAtomicIdentity):
            build_net(p)

    def test_first_figure_plain_are_planar(self):
        for text in sg.TABLE1_PLAIN:
            s = sg.parse_syllogism(text)
            if sg.figure_of(s) != 1:
                continue
            _, net = net_of(str(s.rll_sequent()))
            assert planarity(net).planar, text

    @pytest.mark.parametrize("text", [BARBARA, FOURTH])
    def test_cyclic_and_linear_readings_agree(self, text):
        _, net = net_of(text)
        linear = any(a < c < b < d or c < a < d < b for (a, b), (c, d) in itertools.combinations(net.links, 2))
        assert linear == (not planarity(net).planar)
        for k in range(len(net.conclusions)):
            assert planarity(nets.rotate(net, k)).planar == planarity(net).planar

    def test_crosses(self):
        assert crosses((0, 2), (1, 3))
        assert not crosses((0, 3), (1, 2))
        assert not crosses((0, 1), (2, 3))

    def test_json_document(self):
        _, net = net_of(FOURTH)
        doc = nets.net_to_json(net)
        assert doc["conclusions"] == ["M⊗P", "S⊥⅋M⊥", "S⊗P⊥"]
        assert doc["links"] == [[0, 3], [1, 5], [2, 4]]
        assert doc["planar"] is False
        assert [[0, 3], [1, 5]] in doc["crossings"]
        assert json.loads(nets.dumps_net(net)) == doc

    def test_dot(self):
        _, net = net_of(BARBARA)
        dot = nets.net_to_dot(net)
        assert dot.startswith("digraph net {")
        assert dot.count("color=blue") == 3
        assert dot == nets.net_to_dot(net_of(BARBARA)[1])

    def test_unprovable(self):
        assert nets.net_for(rll.parse_sequent("A |- B")) is None
