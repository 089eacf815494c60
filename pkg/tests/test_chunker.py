import random

import pytest
from hypothesis import given, strategies as st

from evo_mt.chunker import Chunk, ChunkSequence, chunk, parse_grammar
from evo_mt.errors import DuplicateRule, ForwardReference, GrammarSyntaxError
from evo_mt.tagger import TAGSET, TaggedToken, parse_tagged
from oracles import reference_chunk, shape

TAGS = sorted(TAGSET)


def tagged_from_tags(tags):
    return [TaggedToken(f"w{i}", t) for i, t in enumerate(tags)]


def test_base_block_parses(base_grammar):
    assert [r.name for r in base_grammar] == ["NP", "CP", "VERB", "THAN", "COMP"]
    comp = base_grammar["COMP"]
    assert [(a.kind, a.values, a.quant) for a in comp.atoms] == [
        ("tag", ("DT",), "?"), ("chunk", ("NP",), ""), ("tag", ("RB",), "?"),
        ("chunk", ("VERB",), ""), ("tag", ("DT",), "?"), ("chunk", ("CP",), ""),
        ("chunk", ("THAN",), ""), ("tag", ("DT",), "?"), ("chunk", ("NP",), ""),
    ]
    np_ = base_grammar["NP"]
    assert [(a.kind, a.values, a.quant) for a in np_.atoms] == [
        ("tag", ("PRP",), "?"), ("prefix", ("JJ",), "*"), ("prefix", ("NN",), "+")]
    assert base_grammar["CP"].atoms[0].values == ("JJR", "JJS")


def test_unparse_round_trip(base_grammar):
    text = base_grammar.unparse()
    assert parse_grammar(text) == base_grammar
    assert text.splitlines()[-1] == "COMP: {<DT>?<NP><RB>?<VERB><DT>?<CP><THAN><DT>?<NP>}"


def test_minimal_grammar():
    g = parse_grammar("X: {<NN>}")
    assert len(g) == 1 and len(g[0].atoms) == 1 and g[0].atoms[0].quant == ""


def test_whitespace_and_comments_are_ignored():
    g = parse_grammar("# nouns\nNP :\n {\n <DT> ?\n < NN.* > +\n}\n")
    assert str(g[0]) == "NP: {<DT>?<NN.*>+}"


def test_forward_and_undefined_references():
    with pytest.raises(ForwardReference) as err:
        parse_grammar("A: {<B>}")
    assert err.value.name == "B"
    with pytest.raises(ForwardReference):
        parse_grammar("A: {<B>}\nB: {<NN>}")


def test_duplicate_rule():
    with pytest.raises(DuplicateRule):
        parse_grammar("A: {<NN>}\nA: {<VB>}")


@pytest.mark.parametrize("text, line, column", [
    ("NP {<NN>}", 1, 4),
    ("NP: <NN>", 1, 5),
    ("NP: {}", 1, 6),
    ("NP: {<NN>}\nVP: {<VB>", 2, 10),
    ("NP: {<NN|>}", 1, 6),
    ("NP: {<NN>?? }", 1, 11),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(GrammarSyntaxError) as err:
        parse_grammar(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_comparative_sentence_chunks_to_one_comp(base_grammar):
    tagged = parse_tagged("the/DT dog/NN is/VBZ bigger/JJR than/IN the/DT cat/NN")
    result = chunk(base_grammar, tagged)
    assert len(result) == 1
    comp = result.items[0]
    assert isinstance(comp, Chunk) and comp.label == "COMP"
    assert list(comp.tokens) == tagged
    inner = [(c.label, [t.text for t in c.tokens]) if isinstance(c, Chunk) else c.text
             for c in comp.children]
    assert inner == ["the", ("NP", ["dog"]), ("VERB", ["is"]), ("CP", ["bigger"]),
                     ("THAN", ["than"]), "the", ("NP", ["cat"])]


def test_pronoun_alone_is_not_a_noun_phrase(base_grammar):
    # NP needs at least one NN.*, so a bare PRP stays unchunked
    result = chunk(base_grammar, parse_tagged("I/PRP go/VB home/NN"))
    assert shape(result.items) == (("I", "PRP"), ("VERB", (("go", "VB"),)), ("NP", (("home", "NN"),)))


def test_pronoun_heads_following_nouns(base_grammar):
    result = chunk(base_grammar, parse_tagged("I/PRP home/NN go/VB ./SYM"))
    assert [getattr(i, "label", None) for i in result] == ["NP", "VERB", None]
    assert [t.text for t in result.items[0].tokens] == ["I", "home"]


def test_longest_match_is_taken(base_grammar):
    result = chunk(base_grammar, parse_tagged("big/JJ red/JJ dog/NN house/NN"))
    assert len(result) == 1 and result.items[0].label == "NP"


def test_empty_input(base_grammar):
    assert chunk(base_grammar, []) == ChunkSequence(())


def test_zero_length_matches_are_skipped():
    g = parse_grammar("OPT: {<DT>?}")
    result = chunk(g, parse_tagged("a/NN the/DT"))
    assert shape(result.items) == (("a", "NN"), ("OPT", (("the", "DT"),)))


@given(st.lists(st.sampled_from(TAGS), max_size=8))
def test_coverage_partition_and_determinism(base_grammar, tags):
    tagged = tagged_from_tags(tags)
    result = chunk(base_grammar, tagged)
    assert result.tokens() == tagged
    assert chunk(base_grammar, tagged) == result


EXTRA_GRAMMARS = [
    "A: {<DT>?<JJ.*>*<NN>*<NN>}\nB: {<A><IN><A>}\nC: {<B>+<VB.*>?}",
    "P: {<NN|NNS>+<CD>?<NN>}\nQ: {<P>*<VB>+<P>?}",
    "R: {<DT>*<DT><DT>?}",
]


def test_matches_brute_force_reference_on_random_sequences(base_grammar):
    rng = random.Random(2024)
    grammars = [base_grammar] + [parse_grammar(g) for g in EXTRA_GRAMMARS]
    for _ in range(400):
        tags = [rng.choice(TAGS) for _ in range(rng.randint(0, 8))]
        tagged = tagged_from_tags(tags)
        for g in grammars:
            assert shape(chunk(g, tagged).items) == shape(reference_chunk(g, tagged)), (tags, g)
