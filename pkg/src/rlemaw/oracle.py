"""Brute-force minimal absent words straight from the plain text.

Nothing here looks at run-length structure; this module is the reference
the compressed representation is checked against.  For every middle word
``v`` (grouped by length) we collect the symbols seen immediately left and
right of each occurrence; ``a v b`` is a MAW exactly when ``a`` is a left
extension, ``b`` a right extension, and the pair ``(a, b)`` never
surrounds the same occurrence.  A middle word that occurs only once cannot
produce a MAW, so the scan stops at the first length where nothing repeats.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Sequence

from .errors import InvalidInput
from .rle import RleString, as_text, encode


@dataclass(frozen=True, order=True)
class MawRecord:
    word: str
    type_id: int

    @property
    def rle_form(self) -> RleString:
        return encode(self.word)


def occurs(w: str | Sequence[str], text: str | Sequence[str]) -> int:
    """Number of (possibly overlapping) occurrences of ``w`` in ``text``."""
    w, text = as_text(w), as_text(text)
    if not w:
        return len(text) + 1
    count, start = 0, text.find(w)
    while start != -1:
        count += 1
        start = text.find(w, start + 1)
    return count


def classify(maw: str) -> int:
    runs = sum(1 for _ in groupby(maw))
    if runs == 1:
        return 1
    if len(maw) == 2:
        return 2
    a, u, b = maw[0], maw[1:-1], maw[-1]
    if a == u[0] or b == u[-1]:
        return 5
    return 3 if runs == 3 else 4


def _check_alphabet(text: str, alphabet: Iterable[str] | None) -> list[str]:
    present = set(text)
    if alphabet is None:
        return sorted(present)
    alphabet = list(alphabet)
    if len(set(alphabet)) != len(alphabet):
        raise InvalidInput("alphabet lists a symbol twice")
    missing = present - set(alphabet)
    if missing:
        raise InvalidInput(f"alphabet misses text symbols {sorted(missing)!r}")
    return alphabet


def maw_words(text: str | Sequence[str], alphabet: Iterable[str] | None = None) -> set[str]:
    text = as_text(text)
    alphabet = _check_alphabet(text, alphabet)
    n = len(text)
    result = {c for c in alphabet if c not in text}
    for length in range(n + 1):
        lefts: dict[str, set] = {}
        rights: dict[str, set] = {}
        pairs: dict[str, set] = {}
        seen: Counter = Counter()
        for i in range(n - length + 1):
            v = text[i:i + length]
            seen[v] += 1
            a = text[i - 1] if i > 0 else None
            b = text[i + length] if i + length < n else None
            if a is not None:
                lefts.setdefault(v, set()).add(a)
            if b is not None:
                rights.setdefault(v, set()).add(b)
            if a is not None and b is not None:
                pairs.setdefault(v, set()).add((a, b))
        repeated = False
        for v, count in seen.items():
            if count < 2 and length > 0:
                continue
            repeated = True
            inside = pairs.get(v, ())
            for a in lefts.get(v, ()):
                for b in rights.get(v, ()):
                    if (a, b) not in inside:
                        result.add(a + v + b)
        if not repeated:
            break
    return result


def maws_bruteforce(text: str | Sequence[str], alphabet: Iterable[str] | None = None) -> set[MawRecord]:
    return {MawRecord(w, classify(w)) for w in maw_words(text, alphabet)}


def count_by_type(text: str | Sequence[str], alphabet: Iterable[str] | None = None) -> dict[int, int]:
    counts = {t: 0 for t in range(1, 6)}
    for rec in maws_bruteforce(text, alphabet):
        counts[rec.type_id] += 1
    return counts
