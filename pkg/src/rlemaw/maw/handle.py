"""Constant-size references to minimal absent words.

A handle is six words.  Apart from type 1 (``lead_symbol ** lead_count``)
every MAW is rebuilt as an explicit lead run followed by a window of runs
read from rle(T), whose last run takes ``tail_exponent``:

* types 2 and 5: ``(lead_symbol, lead_count)`` then runs
  ``run_index .. run_index + run_span - 1``;
* types 3 and 4: the lead run is ``(lead_symbol, 1)`` (these MAWs always
  start with a single character) and ``lead_count`` overrides the exponent
  of the first window run instead.
"""

from __future__ import annotations

from typing import NamedTuple

from ..errors import InvalidHandle
from ..rle import SENTINEL, RleString, Run


class MawHandle(NamedTuple):
    type_id: int
    lead_symbol: str
    lead_count: int
    run_index: int
    run_span: int
    tail_exponent: int

    def fields(self) -> tuple[int, ...]:
        """The handle as six integers (symbols by code point)."""
        return (self.type_id, ord(self.lead_symbol), self.lead_count,
                self.run_index, self.run_span, self.tail_exponent)

    @classmethod
    def from_fields(cls, values) -> MawHandle:
        t, sym, k, p, r, tail = (int(v) for v in values)
        return cls(t, chr(sym), k, p, r, tail)


WORDS_PER_HANDLE = len(MawHandle._fields)


def expand(handle: MawHandle, rle: RleString) -> RleString:
    t, sym, count, p, span, tail = handle
    if t == 1:
        return RleString((Run(sym, count),))
    runs = rle.without_sentinels().runs
    if not 1 <= span or p < 0 or p + span > len(runs):
        raise InvalidHandle(f"run window [{p}, {p + span}) outside rle of size {len(runs)}")
    window = runs[p:p + span]
    if t in (3, 4):
        if span < 2:
            raise InvalidHandle("type 3/4 handles span at least two runs")
        out = [Run(sym, 1), Run(window[0].symbol, count), *window[1:-1],
               Run(window[-1].symbol, tail)]
    elif t in (2, 5):
        out = [Run(sym, count), *window[:-1], Run(window[-1].symbol, tail)]
    else:
        raise InvalidHandle(f"unknown MAW type {t}")
    return RleString(tuple(out))


def expand_word(handle: MawHandle, rle: RleString) -> str:
    return "".join(s * e for s, e in expand(handle, rle).runs)


def check_expanded(rle: RleString) -> None:
    for s, e in rle.runs:
        if s == SENTINEL or e < 1:
            raise InvalidHandle("expanded MAW contains the sentinel or an empty run")
