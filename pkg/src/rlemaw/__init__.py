"""Minimal absent words of run-length encoded strings."""

from .errors import BoundViolation, InvalidHandle, InvalidInput, InvalidSpec
from .maw import MawHandle, ReprBundle, build, enumerate_all, expand, expand_word, space_words
from .rle import RleString, Run, decode, encode, format_rle, parse_rle

__version__ = "0.1.0"


def maws(text, alphabet=None, types=None) -> list[tuple[int, str]]:
    """Convenience: (type, word) for every MAW of a plain text."""
    rle = encode(text)
    bundle = build(rle, alphabet)
    return [(h.type_id, expand_word(h, rle)) for h in enumerate_all(bundle, types=types)]
