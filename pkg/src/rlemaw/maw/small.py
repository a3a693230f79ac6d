"""Type-1 and type-2 MAWs: single runs and absent bigrams."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..rle import SENTINEL
from .handle import MawHandle
from .runs import ExtendedRuns, OpCounter


@dataclass(frozen=True)
class D1Rep:
    # (symbol, longest run + 1), sorted by symbol
    entries: tuple[tuple[str, int], ...]
    alphabet: tuple[str, ...]


def build_d1(ext: ExtendedRuns, alphabet: tuple[str, ...]) -> D1Rep:
    longest: dict[str, int] = {}
    for s, e in zip(ext.syms[1:-1], ext.exps[1:-1]):
        if e > longest.get(s, 0):
            longest[s] = e
    return D1Rep(tuple((s, longest[s] + 1) for s in sorted(longest)), alphabet)


def enum_m1(d1: D1Rep, ops: OpCounter | None = None) -> Iterator[MawHandle]:
    entries = d1.entries
    j = 0
    for c in d1.alphabet:
        if j < len(entries) and entries[j][0] == c:
            yield MawHandle(1, c, entries[j][1], 0, 0, 0)
            j += 1
        else:
            yield MawHandle(1, c, 1, 0, 0, 0)
    if ops is not None:
        ops.add(len(d1.alphabet) + 1)


@dataclass(frozen=True)
class D2Rep:
    symbols: tuple[str, ...]
    # an index into rle(T) holding a run of each symbol
    witness: tuple[int, ...]
    pairs: tuple[tuple[str, str], ...] | None
    explicit: tuple[MawHandle, ...] | None = None


def build_d2(ext: ExtendedRuns) -> D2Rep:
    first: dict[str, int] = {}
    pairs = set()
    syms = ext.syms
    for x in range(1, len(syms) - 1):
        first.setdefault(syms[x], x - 1)
        if syms[x + 1] != SENTINEL:
            pairs.add((syms[x], syms[x + 1]))
    symbols = tuple(sorted(first))
    return D2Rep(symbols, tuple(first[s] for s in symbols), tuple(sorted(pairs)))


def enum_m2(d2: D2Rep, ops: OpCounter | None = None) -> Iterator[MawHandle]:
    if d2.explicit is not None:
        yield from d2.explicit
        if ops is not None:
            ops.add(len(d2.explicit) + 1)
        return
    pairs = d2.pairs
    symbols, witness = d2.symbols, d2.witness
    j, steps = 0, 1
    for a in symbols:
        for bi, b in enumerate(symbols):
            if a == b:
                continue
            steps += 1
            while j < len(pairs) and pairs[j] < (a, b):
                j += 1
                steps += 1
            if j < len(pairs) and pairs[j] == (a, b):
                continue
            yield MawHandle(2, a, 1, witness[bi], 1, 1)
    if ops is not None:
        ops.add(steps)
