"""Tests for the preprocessing chain and the Porter stemmer."""

import hashlib
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vulnbench.porter import stem
from vulnbench.textprep import join_tokens, preprocess, stopwords

from porter_reference import reference_stem

FIXTURES = Path(__file__).parent / "fixtures"


def load_vocab():
    pairs = []
    for line in (FIXTURES / "porter_vocab.txt").read_text().splitlines():
        word, expected = line.split()
        pairs.append((word, expected))
    return pairs


class TestStem:
    def test_spec_examples(self):
        assert stem("caresses") == "caress"
        assert stem("sky") == "sky"
        assert stem("relational") == "relat"

    def test_preprocess_trace_words(self):
        assert stem("attacker") == "attack"
        assert stem("sends") == "send"
        assert stem("packets") == "packet"

    def test_reference_vocabulary_full_agreement(self):
        vocab = load_vocab()
        assert len(vocab) > 2500
        mismatches = [
            (word, stem(word), expected)
            for word, expected in vocab
            if stem(word) != expected
        ]
        assert mismatches == []

    def test_short_tokens_left_alone(self):
        assert stem("as") == "as"
        assert stem("i") == "i"

    @given(st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=1, max_size=20))
    @settings(max_examples=500)
    def test_agrees_with_reference_port(self, word):
        assert stem(word) == reference_stem(word)

    @given(
        st.text(alphabet="abcdefghijklmnopqrstuvwxyz", min_size=0, max_size=8),
        st.sampled_from(
            ["", "s", "es", "ies", "ed", "eed", "ing", "y", "ally", "ization",
             "iveness", "biliti", "icate", "ative", "ement", "ion", "ous", "ize",
             "е".replace("е", "e"), "ll", "logi", "bli", "ator", "alism"]
        ),
    )
    @settings(max_examples=500)
    def test_agrees_with_reference_port_on_suffixed_words(self, base, suffix):
        word = base + suffix
        if word:
            assert stem(word) == reference_stem(word)


class TestStopwords:
    def test_pinned_list(self):
        words = stopwords()
        assert len(words) == 179
        raw = (
            Path(__file__).parents[1]
            / "src" / "vulnbench" / "data" / "stopwords_en.txt"
        ).read_bytes()
        assert hashlib.sha256(raw).hexdigest() == (
            "019f104ba2ed07436d05f9cdd3383034ad66014edc27fc651f837e1a038b6451"
        )

    def test_common_entries(self):
        words = stopwords()
        assert {"the", "a", "is", "and", "of"} <= words
        assert "attack" not in words


class TestPreprocess:
    def test_worked_example(self):
        assert preprocess("The Attacker, sends 2 packets!!") == [
            "attack", "send", "packet",
        ]

    def test_empty_input(self):
        assert preprocess("") == []

    def test_all_stopwords(self):
        assert preprocess("THE the The") == []

    def test_digits_deleted_not_spaced(self):
        # digits vanish in place, so "2packets" keeps a single token
        assert preprocess("send 2packets") == ["send", "packet"]

    def test_punctuation_becomes_space(self):
        assert preprocess("query;injection") == ["queri", "inject"]

    def test_diacritics_folded(self):
        # "cafe" keeps its final e: the stem "caf" ends cvc, blocking step 5a
        assert preprocess("Résumé café") == ["resum", "cafe"]

    def test_control_characters_are_whitespace(self):
        assert preprocess("attack\x00vector\tpayload\r\n") == [
            "attack", "vector", "payload",
        ]

    def test_unconvertible_characters_become_spaces(self):
        assert preprocess("攻击 attack 攻击") == ["attack"]

    @given(st.text(max_size=200))
    @settings(max_examples=300)
    def test_idempotent(self, text):
        once = preprocess(text)
        assert preprocess(join_tokens(once)) == once

    @given(st.text(max_size=200))
    @settings(max_examples=300)
    def test_output_invariants(self, text):
        stops = stopwords()
        for token in preprocess(text):
            assert len(token) >= 3
            assert token not in stops
            assert token.isascii()
            assert all("a" <= ch <= "z" for ch in token)


def test_join_tokens_roundtrip():
    assert join_tokens(["attack", "send"]) == "attack send"
    assert join_tokens([]) == ""
