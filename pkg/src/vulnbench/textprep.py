"""Description pre-processing: normalization, tokenization, stopword and short-token
filtering, and Porter stemming.

The chain is: lowercase, ASCII-fold, punctuation to spaces, digits removed,
tokenize on whitespace, drop stopwords and tokens shorter than three characters,
stem. The stopword and length filters are re-applied after stemming so the
output always satisfies the token invariants and the chain is idempotent.
"""

from __future__ import annotations

import unicodedata
from functools import lru_cache
from importlib import resources

from .porter import stem

MIN_TOKEN_LENGTH = 3

# A stemmed token can shrink again when restemmed ("agreed" -> "agre" -> "agr");
# iterate to the fixpoint so re-running the chain on its own output is a no-op.
_MAX_STEM_ROUNDS = 10


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    """The bundled 179-word English stopword list."""
    text = resources.files("vulnbench").joinpath("data/stopwords_en.txt").read_text("utf-8")
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def _fold(text: str) -> str:
    """Casefold and reduce to ASCII letters: diacritics stripped, digits deleted,
    everything else (punctuation, controls, unconvertible characters) to spaces."""
    chars = []
    for ch in unicodedata.normalize("NFKD", text.casefold()):
        if "a" <= ch <= "z":
            chars.append(ch)
        elif ch.isdigit():
            continue
        elif unicodedata.combining(ch):
            continue
        else:
            chars.append(" ")
    return "".join(chars)


def stem_fixpoint(token: str) -> str:
    for _ in range(_MAX_STEM_ROUNDS):
        stemmed = stem(token)
        if stemmed == token:
            return token
        token = stemmed
    return token


def preprocess(text: str) -> list[str]:
    """Turn free text into the list of stemmed content tokens."""
    stops = stopwords()
    tokens = [
        t for t in _fold(text).split() if t not in stops and len(t) >= MIN_TOKEN_LENGTH
    ]
    stemmed = [stem_fixpoint(t) for t in tokens]
    return [t for t in stemmed if t not in stops and len(t) >= MIN_TOKEN_LENGTH]


def join_tokens(tokens: list[str]) -> str:
    """Rejoin a token list with single spaces (the form fed to the embedding bridge)."""
    return " ".join(tokens)
