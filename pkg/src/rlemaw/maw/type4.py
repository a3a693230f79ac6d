"""Type-4 MAWs from bipartite graphs over the one-run extensions of a bridge.

For a bridge ``w = alpha u beta`` with at least two extensions, each
extension ``a alpha^i u beta^j b`` is an edge between left vertex ``(a, i)``
and right vertex ``(j, b)``.  A non-edge ``((a, i), (j, b))`` spells a MAW
exactly when some edge at ``(a, i)`` reaches an exponent ``>= j`` on the
right and some edge at ``(j, b)`` reaches an exponent ``>= i`` on the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from ..rle import SENTINEL
from .handle import MawHandle
from .ktree import KNode
from .runs import OpCounter


@dataclass(frozen=True)
class BridgeGraph:
    # the bridge w: extended index of its first run in one occurrence, and R(w)
    start: int
    span: int
    # (a, i) sorted by (i, a)
    left: tuple[tuple[str, int], ...]
    # (j, b) sorted by (j, b)
    right: tuple[tuple[int, str], ...]
    # index into rle(T) of the alpha run of an occurrence extended by right[k']
    right_witness: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    # arg max over neighbours: index of the right vertex with the largest j
    left_argmax: tuple[int, ...]
    # arg max over neighbours: index of the left vertex with the largest i
    right_argmax: tuple[int, ...]

    @property
    def words(self) -> int:
        return 2 + 3 * len(self.left) + 4 * len(self.right) + 2 * len(self.edges)


def build_graph(node: KNode) -> BridgeGraph:
    left = sorted({(g.left_symbol, g.left_exp) for g in node.children}, key=lambda v: (v[1], v[0]))
    right = sorted({(g.right_exp, g.right_symbol) for g in node.children})
    li = {v: k for k, v in enumerate(left)}
    ri = {v: k for k, v in enumerate(right)}
    witness = [0] * len(right)
    edges = []
    left_argmax = [-1] * len(left)
    right_argmax = [-1] * len(right)
    for g in node.children:
        k = li[(g.left_symbol, g.left_exp)]
        kk = ri[(g.right_exp, g.right_symbol)]
        edges.append((k, kk))
        witness[kk] = g.starts[0]
        if left_argmax[k] < 0 or right[kk][0] > right[left_argmax[k]][0]:
            left_argmax[k] = kk
        if right_argmax[kk] < 0 or left[k][1] > left[right_argmax[kk]][1]:
            right_argmax[kk] = k
    return BridgeGraph(node.starts[0], node.span, tuple(left), tuple(right), tuple(witness),
                       tuple(sorted(edges)), tuple(left_argmax), tuple(right_argmax))


def enum_graph(g: BridgeGraph, ops: OpCounter | None = None) -> Iterator[tuple[int, int]]:
    """Yield the MAW-forming vertex pairs ``(k, k')`` of one graph."""
    left, right = g.left, g.right
    adjacent: list[set[int]] = [set() for _ in left]
    for k, kk in g.edges:
        adjacent[k].add(kk)
    # candidate right vertices as a singly linked list in (j, b) order
    order = [kk for kk, (_, b) in enumerate(right) if b != SENTINEL]
    nxt = {order[t]: order[t + 1] for t in range(len(order) - 1)}
    head = order[0] if order else -1
    if order:
        nxt[order[-1]] = -1
    steps = 1 + len(left) + len(right) + len(g.edges)
    for k, (a, i) in enumerate(left):
        if a == SENTINEL:
            continue
        limit = right[g.left_argmax[k]][0]
        nbrs = adjacent[k]
        prev, x = -1, head
        while x != -1 and right[x][0] <= limit:
            steps += 1
            following = nxt[x]
            if x in nbrs:
                prev = x
            elif left[g.right_argmax[x]][1] >= i:
                yield k, x
                prev = x
            elif prev == -1:
                head = following
            else:
                nxt[prev] = following
            x = following
    if ops is not None:
        ops.add(steps)


def brute_force_pairs(g: BridgeGraph) -> set[tuple[int, int]]:
    """Every vertex pair meeting the three MAW conditions, by exhaustive check."""
    edges = set(g.edges)
    out = set()
    for k, (a, i) in enumerate(g.left):
        if a == SENTINEL:
            continue
        for kk, (j, b) in enumerate(g.right):
            if b == SENTINEL or (k, kk) in edges:
                continue
            if g.right[g.left_argmax[k]][0] >= j and g.left[g.right_argmax[kk]][1] >= i:
                out.add((k, kk))
    return out


def pair_handle(g: BridgeGraph, k: int, kk: int) -> MawHandle:
    a, i = g.left[k]
    return MawHandle(4, a, i, g.right_witness[kk], g.span + 1, 1)


@dataclass(frozen=True)
class D4Rep:
    graphs: tuple[BridgeGraph, ...]
    explicit: tuple[MawHandle, ...] | None = None


def build_d4(nodes: Iterable[KNode]) -> D4Rep:
    return D4Rep(tuple(build_graph(n) for n in nodes if n.expanded and n.black))


def enum_m4(d4: D4Rep, ops: OpCounter | None = None) -> Iterator[MawHandle]:
    if d4.explicit is not None:
        yield from d4.explicit
        if ops is not None:
            ops.add(len(d4.explicit) + 1)
        return
    for g in d4.graphs:
        for k, kk in enum_graph(g, ops):
            yield pair_handle(g, k, kk)
