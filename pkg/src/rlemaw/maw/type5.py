"""Type-5 MAWs, which lengthen the first or the last run of a present word.

Left form ``a^(i+1) v b``: at a run ``a^i`` let ``v`` be the longest prefix
of the text after this run that also follows some ``a`` run of exponent at
least ``i + 1``; the character after ``v`` here, when it is not the end
marker, closes a MAW.  The right form is the same search on the reversed
runs.  Each run yields at most one MAW per orientation.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import Iterator

from ..rle import SENTINEL
from .handle import MawHandle
from .runs import ExtendedRuns, OpCounter


def _prefix_runs(syms, exps, x: int, length: int) -> list[tuple[str, int]] | None:
    """Runs of the first ``length`` characters from run x, None if they hit the end."""
    out = []
    while length > 0:
        if syms[x] == SENTINEL:
            return None
        take = min(length, exps[x])
        out.append((syms[x], take))
        length -= take
        x += 1
    return out


def left_candidates(ext: ExtendedRuns) -> Iterator[tuple[int, list[tuple[str, int]]]]:
    """Yield (extended index of the a^i run, runs of a^(i+1) v b), by run index.

    The texts after the runs are sorted once; the longest prefix shared with
    any member of a set is attained at the set's neighbours in that order.
    Runs of each symbol are visited by decreasing exponent so the active set
    holds exactly the runs with a larger exponent.
    """
    syms, exps = ext.syms, ext.exps
    size = len(syms)
    if size < 3:
        return
    index = ext.lce
    order = index.char_order(range(2, size))
    rank = {p: r for r, p in enumerate(order)}
    by_symbol: dict[str, list[int]] = {}
    for x in range(1, size - 1):
        by_symbol.setdefault(syms[x], []).append(x)
    best: dict[int, int] = {}
    for runs in by_symbol.values():
        runs.sort(key=lambda x: -exps[x])
        active: list[int] = []
        k = 0
        while k < len(runs):
            i = exps[runs[k]]
            group = []
            while k < len(runs) and exps[runs[k]] == i:
                group.append(runs[k])
                k += 1
            for x in group:
                if not active:
                    continue
                r = rank[x + 1]
                at = bisect_left(active, r)
                near = [active[j] for j in (at - 1, at) if 0 <= j < len(active)]
                best[x] = max(index.char_lcp(x + 1, order[q]) for q in near)
            for x in group:
                insort(active, rank[x + 1])
    for x in sorted(best):
        tail = _prefix_runs(syms, exps, x + 1, best[x] + 1)
        if tail is not None:
            yield x, [(syms[x], exps[x] + 1)] + tail


@dataclass(frozen=True)
class D5Rep:
    handles: tuple[MawHandle, ...]


def build_m5(rle_or_ext) -> D5Rep:
    ext = rle_or_ext if isinstance(rle_or_ext, ExtendedRuns) else ExtendedRuns.of(rle_or_ext)
    found: dict[tuple, MawHandle] = {}
    for x, runs in left_candidates(ext):
        key = tuple(runs)
        if key not in found:
            found[key] = MawHandle(5, runs[0][0], runs[0][1], x, len(runs) - 1, runs[-1][1])
    last = len(ext.syms) - 1
    for xr, runs in left_candidates(ext.reversed()):
        runs = runs[::-1]
        key = tuple(runs)
        if key in found:
            continue
        # the lengthened run is run (last - xr) of the extended text
        span = len(runs) - 1
        end = last - xr - 1
        found[key] = MawHandle(5, runs[0][0], runs[0][1], end - span + 1, span, runs[-1][1])
    return D5Rep(tuple(found.values()))


def enum_m5(d5: D5Rep, ops: OpCounter | None = None) -> Iterator[MawHandle]:
    yield from d5.handles
    if ops is not None:
        ops.add(len(d5.handles) + 1)
