import math

import pytest
from hypothesis import given, settings, strategies as st

from evo_mt.errors import (ChecksumMismatch, EmptyCorpus, FormatVersionMismatch, IoFailure,
                           NoPairData, UnknownWord)
from evo_mt.ppmi import (CooccurrenceModel, build_model, dumps_model, load_model, loads_model, pmi,
                         ppmi, save_model)
from evo_mt.tokenizer import split_sentences
from conftest import PKG_DATA
from oracles import count_model, pmi_from_counts

VOCAB = ["a", "b", "c", "d", "e", "f"]
corpora = st.lists(st.lists(st.sampled_from(VOCAB), min_size=1, max_size=6).map(" ".join),
                   min_size=1, max_size=5)


def test_fixture_counts(fixture_model):
    m = fixture_model
    assert m.total_tokens == 6
    assert dict(m.unigram) == {"a": 3, "b": 2, "c": 1}
    assert dict(m.pair) == {("a", "b"): 2, ("a", "c"): 1}
    assert m.total_pairs == 3


def test_single_word_corpus_has_no_pairs():
    m = build_model(["a"])
    assert m.total_tokens == 1 and m.total_pairs == 0
    with pytest.raises(NoPairData):
        pmi(m, "a", "a")
    assert ppmi(m, "a", "a") == 0.0


def test_duplicate_tokens_count_one_pair_per_sentence():
    m = build_model(["a a b"])
    assert dict(m.unigram) == {"a": 2, "b": 1}
    assert dict(m.pair) == {("a", "b"): 1}
    assert (dict(m.unigram), dict(m.pair)) == count_model(["a a b"])


def test_digits_signs_and_case_are_normalised():
    m = build_model(["The 3 dogs, the CAT."])
    assert dict(m.unigram) == {"the": 2, "dogs": 1, "cat": 1}


@pytest.mark.parametrize("corpus", [[], ["", "  "], ["42 .", "!"]])
def test_empty_corpus(corpus):
    with pytest.raises(EmptyCorpus):
        build_model(corpus)


@settings(max_examples=200)
@given(corpora)
def test_counts_match_double_loop_oracle(corpus):
    m = build_model(corpus)
    unigram, pairs = count_model(corpus)
    assert dict(m.unigram) == unigram
    assert dict(m.pair) == pairs
    assert m.total_tokens == sum(unigram.values())
    assert m.total_pairs == sum(pairs.values())
    assert math.isclose(sum(m.p_word(w) for w in m.unigram), 1.0, abs_tol=1e-9)
    if m.total_pairs:
        assert math.isclose(sum(c / m.total_pairs for c in m.pair.values()), 1.0, abs_tol=1e-9)
    for a, b in m.pair:
        assert a < b and a in m.unigram and b in m.unigram


def test_pmi_fixture_value(fixture_model):
    expected = math.log2((2 / 3) / ((3 / 6) * (2 / 6)))
    assert expected == pytest.approx(2.0, abs=1e-9)
    assert pmi(fixture_model, "a", "b") == pytest.approx(2.0, abs=1e-9)
    assert pmi(fixture_model, "A", "b") == pytest.approx(2.0, abs=1e-9)


def test_independence_gives_zero():
    m = CooccurrenceModel({"x": 1, "y": 1, "z": 2}, {("x", "y"): 1, ("x", "z"): 7, ("y", "z"): 8}, 4, 16)
    assert pmi(m, "x", "y") == pytest.approx(0.0, abs=1e-12)


def test_unknown_word_and_missing_pair(fixture_model):
    with pytest.raises(UnknownWord):
        pmi(fixture_model, "a", "zzz")
    with pytest.raises(UnknownWord):
        ppmi(fixture_model, "zzz", "a")
    with pytest.raises(NoPairData):
        pmi(fixture_model, "b", "c")
    assert ppmi(fixture_model, "b", "c") == 0.0
    assert ppmi(fixture_model, "a", "b") == pytest.approx(2.0, abs=1e-9)


def test_negative_pmi_clips_to_zero():
    # a and b are frequent but co-occur once among many other pairs
    m = build_model(["a b"] + ["a"] * 30 + ["b"] * 30 + ["c d"] * 20 + ["e f"])
    assert pmi(m, "a", "b") < 0
    assert ppmi(m, "a", "b") == 0.0


@given(corpora)
def test_symmetry_and_clipping(corpus):
    m = build_model(corpus)
    unigram, pairs = count_model(corpus)
    words = sorted(m.unigram)
    for x in words:
        for y in words:
            assert ppmi(m, x, y) == ppmi(m, y, x) >= 0.0
            if x != y and m.pair_count(x, y):
                value = pmi(m, x, y)
                assert value == pytest.approx(pmi(m, y, x), abs=1e-12)
                assert value == pytest.approx(pmi_from_counts(unigram, pairs, x, y), abs=1e-9)
                assert ppmi(m, x, y) == max(value, 0.0)


def test_window_option():
    m = build_model(["a b c d"], window=1)
    assert dict(m.pair) == {("a", "b"): 1, ("b", "c"): 1, ("c", "d"): 1}
    assert build_model(["a b c d"], window=10) == build_model(["a b c d"])
    with pytest.raises(ValueError):
        build_model(["a"], window=0)


# -- persistence ---------------------------------------------------------------

def test_round_trip_and_layout(fixture_model, tmp_path):
    path = tmp_path / "m.txt"
    save_model(fixture_model, path)
    assert load_model(path) == fixture_model
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[:3] == ["ppmi-model v1", "tokens 6", "pairs 3"]
    assert lines[3:8] == ["u a 3", "u b 2", "u c 1", "p a b 2", "p a c 1"]
    assert lines[8].startswith("crc32 ") and len(lines) == 9


def test_two_saves_are_byte_identical(tmp_path):
    m1 = build_model(["c b a", "a d", "b b e"])
    m2 = build_model(["c b a", "a d", "b b e"])
    save_model(m1, tmp_path / "1")
    save_model(m2, tmp_path / "2")
    assert (tmp_path / "1").read_bytes() == (tmp_path / "2").read_bytes()


def test_version_mismatch(fixture_model):
    data = dumps_model(fixture_model).replace(b"ppmi-model v1", b"ppmi-model v9", 1)
    with pytest.raises(FormatVersionMismatch):
        loads_model(data)


@pytest.mark.parametrize("cut", [-1, -5, -20, 30])
def test_truncation_is_detected(fixture_model, cut):
    data = dumps_model(fixture_model)
    with pytest.raises(ChecksumMismatch):
        loads_model(data[:cut])


def test_corrupted_body_is_detected(fixture_model):
    data = dumps_model(fixture_model).replace(b"u a 3", b"u a 4")
    with pytest.raises(ChecksumMismatch):
        loads_model(data)


def test_io_failures(tmp_path, fixture_model):
    with pytest.raises(IoFailure):
        load_model(tmp_path / "missing")
    with pytest.raises(IoFailure):
        save_model(fixture_model, tmp_path / "no" / "such" / "dir")


def test_shipped_model_is_built_from_shipped_corpus():
    lines = (PKG_DATA / "corpus.txt").read_text(encoding="utf-8").splitlines()
    rebuilt = build_model([s for line in lines for s in split_sentences(line)])
    assert dumps_model(rebuilt) == (PKG_DATA / "model.txt").read_bytes()
