"""Type-3 MAWs ``a c^k b`` from three-run bridges grouped by middle symbol.

For each middle symbol ``c`` we keep the distinct bridges ``a c^l b`` sorted
by ``l``, the longest ``c`` run following each left symbol, and the longest
``c`` run preceding each right symbol.  Sentinel neighbours stay in these
tables because they witness that ``a c^i`` or ``c^j b`` occurs; they are
never emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..rle import SENTINEL
from .handle import MawHandle
from .runs import ExtendedRuns, OpCounter


@dataclass(frozen=True)
class MiddleGroup:
    symbol: str
    # distinct (l, a, b), sorted by l
    bridges: tuple[tuple[int, str, str], ...]
    # (a, longest i with a c^i occurring)
    left: tuple[tuple[str, int], ...]
    # (b, longest j with c^j b occurring, index in rle(T) of such a c run)
    right: tuple[tuple[str, int, int], ...]


@dataclass(frozen=True)
class D3Rep:
    groups: tuple[MiddleGroup, ...]
    explicit: tuple[MawHandle, ...] | None = None


def build_d3(ext: ExtendedRuns) -> D3Rep:
    syms, exps = ext.syms, ext.exps
    bridges: dict[str, set] = {}
    left: dict[str, dict] = {}
    right: dict[str, dict] = {}
    for x in range(1, len(syms) - 1):
        c, ell, a, b = syms[x], exps[x], syms[x - 1], syms[x + 1]
        bridges.setdefault(c, set()).add((ell, a, b))
        lc = left.setdefault(c, {})
        if ell > lc.get(a, 0):
            lc[a] = ell
        rc = right.setdefault(c, {})
        if ell > rc.get(b, (0, 0))[0]:
            rc[b] = (ell, x - 1)
    groups = []
    for c in sorted(bridges):
        groups.append(MiddleGroup(
            c,
            tuple(sorted(bridges[c])),
            tuple(sorted(left[c].items())),
            tuple((b, j, w) for b, (j, w) in sorted(right[c].items())),
        ))
    return D3Rep(tuple(groups))


def enum_group(group: MiddleGroup, ops: OpCounter | None = None) -> Iterator[MawHandle]:
    witness = {b: w for b, _, w in group.right}
    seen: dict[tuple[str, str], int] = {}
    steps = 1
    # first stage: gaps below the longest bridge of each (a, b)
    for ell, a, b in group.bridges:
        steps += 1
        low = seen.get((a, b), 0)
        seen[(a, b)] = ell
        if a == SENTINEL or b == SENTINEL:
            continue
        w = witness[b]
        for k in range(low + 1, ell):
            yield MawHandle(3, a, k, w, 2, 1)
        steps += max(0, ell - low - 1)
    # second stage: combined bridges a c^min(i, j) b
    for a, i in group.left:
        if a == SENTINEL:
            steps += 1
            continue
        for b, j, w in group.right:
            steps += 1
            if b == SENTINEL:
                continue
            ell = i if i < j else j
            low = seen.get((a, b), 0)
            if low < ell:
                for k in range(low + 1, ell + 1):
                    yield MawHandle(3, a, k, w, 2, 1)
                steps += ell - low
    if ops is not None:
        ops.add(steps)


def enum_m3(d3: D3Rep, ops: OpCounter | None = None) -> Iterator[MawHandle]:
    if d3.explicit is not None:
        yield from d3.explicit
        if ops is not None:
            ops.add(len(d3.explicit) + 1)
        return
    for group in d3.groups:
        yield from enum_group(group, ops)
