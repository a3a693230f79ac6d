"""Run-length encoded strings, bridges and the interior operator.

Texts are handled as Python strings of single-character symbols.  Byte
strings are mapped through latin-1 so every byte is one symbol.  The
boundary marker used by the bridge machinery is a reserved character that
user input may not contain; it only ever appears in sentinel-extended
run sequences produced by :meth:`RleString.with_sentinels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInput

SENTINEL = "\uffff"


class Run(NamedTuple):
    symbol: str
    exponent: int


@dataclass(frozen=True)
class RleString:
    runs: tuple[Run, ...] = ()
    sentinels: bool = False

    def __post_init__(self):
        runs = tuple(Run(s, e) for s, e in self.runs)
        object.__setattr__(self, "runs", runs)
        for i, (s, e) in enumerate(runs):
            if e < 1:
                raise InvalidInput(f"run {i} has exponent {e}")
            if i and runs[i - 1].symbol == s and s != SENTINEL:
                raise InvalidInput(f"runs {i - 1} and {i} share symbol {s!r}")

    @property
    def size(self) -> int:
        """R(T): number of runs, not counting sentinel runs."""
        if self.sentinels:
            return sum(1 for r in self.runs if r.symbol != SENTINEL)
        return len(self.runs)

    @property
    def length(self) -> int:
        return sum(e for s, e in self.runs if s != SENTINEL)

    @property
    def symbols(self) -> list[str]:
        return sorted({s for s, _ in self.runs if s != SENTINEL})

    def __str__(self) -> str:
        return decode(self)

    def with_sentinels(self) -> RleString:
        if self.sentinels:
            return self
        runs = ((SENTINEL, 1),) + self.runs + ((SENTINEL, 1),)
        return RleString(runs, sentinels=True)

    def without_sentinels(self) -> RleString:
        if not self.sentinels:
            return self
        return RleString(tuple(r for r in self.runs if r.symbol != SENTINEL))


EMPTY = RleString()


def as_text(text: str | bytes | Sequence[str]) -> str:
    if isinstance(text, (bytes, bytearray)):
        return bytes(text).decode("latin-1")
    if isinstance(text, str):
        return text
    return "".join(text)


def encode(text: str | bytes | Sequence[str]) -> RleString:
    text = as_text(text)
    if SENTINEL in text:
        raise InvalidInput("input contains the reserved sentinel U+FFFF")
    return RleString(tuple(Run(s, sum(1 for _ in g)) for s, g in groupby(text)))


def decode(rle: RleString) -> str:
    return "".join(s * e for s, e in rle.runs)


def from_runs(runs: Iterable[tuple[str, int]]) -> RleString:
    """Build an RleString from possibly non-canonical runs, merging neighbours."""
    merged: list[list] = []
    for s, e in runs:
        if e <= 0:
            continue
        if merged and merged[-1][0] == s:
            merged[-1][1] += e
        else:
            merged.append([s, e])
    return RleString(tuple(Run(s, e) for s, e in merged))


def interior(w: RleString) -> RleString:
    runs = w.runs
    if len(runs) <= 2:
        return RleString(sentinels=False)
    inner = list(runs[1:-1])
    inner[0] = Run(inner[0].symbol, 1)
    inner[-1] = Run(inner[-1].symbol, 1)
    return RleString(tuple(inner), sentinels=False)


def interior_power(w: RleString, t: int) -> RleString:
    if t < 1:
        raise ValueError("t must be positive")
    for _ in range(t):
        w = interior(w)
    return w


def is_bridge(w: RleString) -> bool:
    return len(w.runs) >= 2 and w.runs[0].exponent == 1 and w.runs[-1].exponent == 1


@dataclass(frozen=True)
class BridgeOccurrence:
    bridge: RleString
    run_index: int
    count: int = 1


def bridge_windows(rle: RleString, ell: int, aggregate: bool = False) -> list[BridgeOccurrence]:
    """All windows of ``ell`` consecutive runs of the sentinel-extended text.

    ``run_index`` is the position of the window's first run in the extended
    sequence, which is also the position of its first full run in rle(T).
    With ``aggregate`` equal bridges are merged, keeping the first position.
    """
    if ell < 2:
        raise ValueError("bridges have at least two runs")
    runs = rle.with_sentinels().runs
    if len(runs) < 3:
        return []
    out: list[BridgeOccurrence] = []
    index: dict[tuple, int] = {}
    for s in range(len(runs) - ell + 1):
        window = list(runs[s:s + ell])
        window[0] = Run(window[0].symbol, 1)
        window[-1] = Run(window[-1].symbol, 1)
        key = tuple(window)
        if aggregate and key in index:
            occ = out[index[key]]
            out[index[key]] = BridgeOccurrence(occ.bridge, occ.run_index, occ.count + 1)
            continue
        index[key] = len(out)
        out.append(BridgeOccurrence(RleString(key, sentinels=True), s))
    return out


# -- textual RLE format: ``a^2 c^7 b^2`` ------------------------------------

_ESCAPED = set("^\\")
# whitespace and control symbols are written as \n, \t, \r, \s or \u{hex}
_NAMED = {"\n": "n", "\t": "t", "\r": "r", " ": "s"}
_UNNAMED = {v: k for k, v in _NAMED.items()}


def _escape(s: str) -> str:
    if s in _ESCAPED:
        return "\\" + s
    if s in _NAMED:
        return "\\" + _NAMED[s]
    if s.isspace() or not s.isprintable():
        return "\\u{%x}" % ord(s)
    return s


def format_rle(rle: RleString) -> str:
    tokens = []
    for s, e in rle.runs:
        if s == SENTINEL:
            raise InvalidInput("sentinel runs are never serialized")
        tokens.append(f"{_escape(s)}^{e}")
    return " ".join(tokens)


def parse_rle(text: str) -> RleString:
    runs: list[tuple[str, int]] = []
    i, n = 0, len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        if text[i] == "\\":
            if i + 1 >= n:
                raise InvalidInput("dangling backslash at end of RLE text")
            sym = text[i + 1]
            i += 2
            if sym in _UNNAMED:
                sym = _UNNAMED[sym]
            elif sym == "u" and i < n and text[i] == "{":
                close = text.find("}", i)
                try:
                    sym = chr(int(text[i + 1:close], 16)) if close > i + 1 else ""
                except ValueError:
                    sym = ""
                if not sym:
                    raise InvalidInput(f"bad \\u{{...}} escape at offset {i - 2}")
                i = close + 1
        else:
            sym = text[i]
            i += 1
        if i >= n or text[i] != "^":
            raise InvalidInput(f"expected '^' after symbol {sym!r} at offset {i}")
        i += 1
        j = i
        while j < n and "0" <= text[j] <= "9":
            j += 1
        if j == i:
            raise InvalidInput(f"missing exponent at offset {i}")
        if j < n and not text[j].isspace():
            raise InvalidInput(f"unexpected {text[j]!r} at offset {j}")
        exp = int(text[i:j])
        if exp < 1:
            raise InvalidInput(f"exponent must be positive at offset {i}")
        if sym == SENTINEL:
            raise InvalidInput("input contains the reserved sentinel U+FFFF")
        runs.append((sym, exp))
        i = j
    return from_runs(runs)
