"""
Word data model shared by the F+ and H+ tooling.

A word is a tuple of positive generator indices. It carries no monoid tag:
whether g3 means tau_3 or theta_3 is decided by the operation it is passed to.
"""
import logging
import re
from enum import Enum

logger = logging.getLogger(__name__)

Word = tuple[int, ...]

EMPTY: Word = ()

_TOKEN = re.compile(r"^g(\d+)$")


class WordError(ValueError):
    """Raised for malformed word text or invalid generator indices."""


class Monoid(str, Enum):
    """Selects the presentation semantics of an operation."""

    F = "F"
    H = "H"

    @classmethod
    def parse(cls, text):
        try:
            return cls(str(text).upper())
        except ValueError:
            raise WordError(f"unknown monoid {text!r}, expected F or H") from None


def make_word(letters):
    """
    Build a word from an iterable of indices, checking the index invariant.

    Args:
        letters (Iterable[int]): generator indices

    Returns:
        Word: the validated tuple
    """
    word = tuple(int(k) for k in letters)
    for k in word:
        if k < 1:
            raise WordError(f"generator index must be >= 1, got {k}")
    return word


def parse_word(text):
    """
    Parse the text form of a word.

    Args:
        text (str): "e" for the empty word, otherwise whitespace-separated
            tokens g<k> with k a positive decimal integer

    Returns:
        Word: the parsed word
    """
    if text is None or not text.strip():
        raise WordError("empty input: use 'e' for the empty word")
    tokens = text.split()
    if tokens == ["e"]:
        return EMPTY
    matches = [_TOKEN.match(token) for token in tokens]
    for token, match in zip(tokens, matches):
        if not match:
            raise WordError(f"malformed token {token!r}, expected g<k> or e")
    return make_word(match.group(1) for match in matches)


def format_word(word):
    """Inverse of parse_word."""
    if not word:
        return "e"
    return " ".join(f"g{k}" for k in word)


def ceiling(word):
    """
    Max over positions p (1-based) of index_p + len(word) - p; 0 for the empty word.

    The value is invariant under the relations of both presentations.
    """
    length = len(word)
    return max((k + length - p for p, k in enumerate(word, 1)), default=0)


def height(word):
    """Largest generator index in the word, 0 for the empty word."""
    return max(word, default=0)


def shift(word, d=1):
    """Index-shift endomorphism: every letter k becomes k + d."""
    if d < 1:
        raise WordError(f"shift amount must be positive, got {d}")
    return tuple(k + d for k in word)


def reverse(word):
    """Letters in reverse order; maps a presentation to its mirror."""
    return tuple(reversed(word))


def index_sum(word):
    """Sum of the generator indices; decreases along every E_F step."""
    return sum(word)
