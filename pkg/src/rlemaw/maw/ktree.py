"""Inverse-image trees of the interior map over bridge substrings.

Every two- or three-run window of the sentinel-extended text is a root.  A
node's children are the distinct one-run extensions of its occurrences,
keyed by ``(left symbol, left exponent, right exponent, right symbol)``;
together they form K(w).  Nodes that occur at least twice are expanded in
turn.  A chain of single-child nodes is crossed in one jump using longest
common extensions of the occurrences, so every visited node below a root
has two or more children.  Words containing a sentinel cannot be extended
and are never expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..rle import SENTINEL, RleString, Run
from .runs import ExtendedRuns


@dataclass(frozen=True)
class ChildGroup:
    left_symbol: str
    left_exp: int
    right_exp: int
    right_symbol: str
    # extended index of the first run of each occurrence of the child
    starts: tuple[int, ...]


@dataclass(frozen=True)
class KNode:
    starts: tuple[int, ...]
    span: int
    children: tuple[ChildGroup, ...]
    root: int
    depth: int
    expanded: bool

    @property
    def occurrences(self) -> int:
        return len(self.starts)

    @property
    def black(self) -> bool:
        return len(self.children) >= 2


def node_word(ext: ExtendedRuns, start: int, span: int) -> RleString:
    """The bridge read from the window of ``span`` runs at ``start``."""
    syms, exps = ext.syms, ext.exps
    runs = [Run(syms[start], 1)]
    runs += [Run(syms[x], exps[x]) for x in range(start + 1, start + span - 1)]
    runs.append(Run(syms[start + span - 1], 1))
    return RleString(tuple(runs), sentinels=True)


def _root_windows(ext: ExtendedRuns) -> list[tuple[int, tuple[int, ...]]]:
    syms, exps = ext.syms, ext.exps
    size = len(syms)
    if size < 3:
        return []
    groups: dict[tuple, list[int]] = {}
    for s in range(size - 1):
        groups.setdefault((2, syms[s], syms[s + 1]), []).append(s)
    for s in range(size - 2):
        groups.setdefault((3, syms[s], syms[s + 1], exps[s + 1], syms[s + 2]), []).append(s)
    return [(key[0], tuple(starts)) for key, starts in groups.items()]


def _children(ext: ExtendedRuns, starts: tuple[int, ...], span: int) -> tuple[ChildGroup, ...]:
    syms, exps = ext.syms, ext.exps
    groups: dict[tuple, list[int]] = {}
    for s in starts:
        e = s + span - 1
        groups.setdefault((syms[s - 1], exps[s], exps[e], syms[e + 1]), []).append(s - 1)
    return tuple(ChildGroup(a, i, j, b, tuple(st)) for (a, i, j, b), st in sorted(groups.items()))


def chain_length(ext: ExtendedRuns, starts: tuple[int, ...], span: int) -> int:
    """Number of single-child steps below the node before its occurrences split."""
    syms, last = ext.syms, len(ext.syms) - 1
    right, left = ext.lce, ext.rev_lce
    s0 = starts[0]
    e0 = s0 + span - 1
    steps = last
    for s in starts[1:]:
        e = s + span - 1
        # a step needs the end exponent and the next symbol to agree on both sides
        k = right.lce(e0, e)
        if syms[e0 + k] != syms[e + k]:
            k -= 1
        kl = left.lce(last - s0, last - s)
        if syms[s0 - kl] != syms[s - kl]:
            kl -= 1
        steps = min(steps, k, kl)
        if steps <= 0:
            return 0
    return steps


def walk_k_tree(ext: ExtendedRuns) -> Iterator[KNode]:
    """Depth-first walk over every root and every node with two or more children."""
    syms = ext.syms
    for root_id, (span, starts) in enumerate(_root_windows(ext)):
        stack = [(starts, span, 0)]
        while stack:
            starts, span, depth = stack.pop()
            s = starts[0]
            if syms[s] == SENTINEL or syms[s + span - 1] == SENTINEL:
                yield KNode(starts, span, (), root_id, depth, False)
                continue
            children = _children(ext, starts, span)
            yield KNode(starts, span, children, root_id, depth, True)
            for child in reversed(children):
                if len(child.starts) >= 2:
                    t = chain_length(ext, child.starts, span + 2)
                    starts_t = tuple(x - t for x in child.starts) if t else child.starts
                    stack.append((starts_t, span + 2 + 2 * t, depth + 1 + t))


@dataclass(frozen=True)
class KTree:
    ext: ExtendedRuns
    nodes: tuple[KNode, ...]

    @property
    def roots(self) -> list[KNode]:
        return [n for n in self.nodes if n.depth == 0]

    @property
    def members(self) -> list[KNode]:
        """The set W: every root plus every node with at least two children."""
        return [n for n in self.nodes if n.depth == 0 or n.black]

    @property
    def x_total(self) -> int:
        return sum(len(n.children) for n in self.members)

    def black_below(self) -> dict[int, int]:
        """Per root id, the number of non-root nodes with two or more children."""
        out = {n.root: 0 for n in self.nodes if n.depth == 0}
        for n in self.nodes:
            if n.depth > 0 and n.black:
                out[n.root] += 1
        return out

    def word(self, node: KNode) -> RleString:
        return node_word(self.ext, node.starts[0], node.span)

    def find(self, word: RleString) -> KNode | None:
        """The node spelling ``word`` (compared run by run), if it was visited."""
        for n in self.nodes:
            if self.word(n).runs == word.runs:
                return n
        return None


def build_k_tree(rle: RleString | ExtendedRuns) -> KTree:
    ext = rle if isinstance(rle, ExtendedRuns) else ExtendedRuns.of(rle)
    return KTree(ext, tuple(walk_k_tree(ext)))
