"""Longest common extensions over the run sequence of a sentinel-extended text.

Runs are compared as ``(symbol, exponent)`` pairs.  A suffix array over the
pair sequence (prefix doubling), its LCP array and a sparse table answer
``lce(x, y)``, the number of equal pairs from runs x and y, in O(1).  The
two sentinel runs get distinct codes so no extension ever crosses them.
"""

from __future__ import annotations

from functools import cmp_to_key

from ..rle import SENTINEL


def suffix_array(codes: list[int]) -> list[int]:
    n = len(codes)
    if n == 0:
        return []
    values = sorted(set(codes))
    dense = {v: r for r, v in enumerate(values)}
    rank = [dense[c] for c in codes]
    sa = sorted(range(n), key=rank.__getitem__)
    k = 1
    while True:
        key = [(rank[i], rank[i + k] if i + k < n else -1) for i in range(n)]
        sa.sort(key=key.__getitem__)
        new = [0] * n
        for a, b in zip(sa, sa[1:]):
            new[b] = new[a] + (key[a] != key[b])
        rank = new
        if rank[sa[-1]] == n - 1:
            return sa
        k *= 2


def lcp_array(codes: list[int], sa: list[int], rank: list[int]) -> list[int]:
    """lcp[r] = common prefix of suffixes sa[r - 1] and sa[r] (Kasai)."""
    n = len(codes)
    lcp = [0] * n
    h = 0
    for i in range(n):
        r = rank[i]
        if r == 0:
            h = 0
            continue
        j = sa[r - 1]
        while i + h < n and j + h < n and codes[i + h] == codes[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


class RunLce:
    def __init__(self, syms: tuple[str, ...], exps: tuple[int, ...]):
        self.syms, self.exps = syms, exps
        table: dict[tuple[str, int], int] = {}
        codes = []
        for x, pair in enumerate(zip(syms, exps)):
            if pair[0] == SENTINEL:
                codes.append(-1 if x == 0 else -2)
            else:
                codes.append(table.setdefault(pair, len(table)))
        self.sa = suffix_array(codes)
        self.rank = [0] * len(codes)
        for r, i in enumerate(self.sa):
            self.rank[i] = r
        self._sparse = [lcp_array(codes, self.sa, self.rank)]
        width = 1
        while 2 * width < len(codes):
            prev = self._sparse[-1]
            self._sparse.append([min(prev[i], prev[i + width]) for i in range(len(prev) - width)])
            width *= 2
        self.prefix = [0]
        for e in exps:
            self.prefix.append(self.prefix[-1] + e)

    def lce(self, x: int, y: int) -> int:
        """Equal (symbol, exponent) pairs from runs x and y onwards."""
        if x == y:
            return len(self.syms) - x
        lo, hi = sorted((self.rank[x], self.rank[y]))
        lo += 1
        level = (hi - lo + 1).bit_length() - 1
        row = self._sparse[level]
        return min(row[lo], row[hi - (1 << level) + 1])

    def char_lcp(self, x: int, y: int) -> int:
        """Common prefix, in characters, of the texts starting at runs x and y."""
        k = self.lce(x, y)
        total = self.prefix[x + k] - self.prefix[x]
        if x + k < len(self.syms) and y + k < len(self.syms):
            s = self.syms[x + k]
            if s == self.syms[y + k] and s != SENTINEL:
                total += min(self.exps[x + k], self.exps[y + k])
        return total

    def char_cmp(self, x: int, y: int) -> int:
        """Lexicographic order of the texts starting at runs x and y."""
        if x == y:
            return 0
        k = self.lce(x, y)
        syms, exps = self.syms, self.exps
        sx, sy = syms[x + k], syms[y + k]
        if sx != sy or sx == SENTINEL:
            return -1 if (sx, x) < (sy, y) else 1
        # same symbol, different exponent: the shorter run meets its next symbol first
        if exps[x + k] < exps[y + k]:
            return -1 if syms[x + k + 1] < sx else 1
        return 1 if syms[y + k + 1] < sy else -1

    def char_order(self, positions) -> list[int]:
        return sorted(positions, key=cmp_to_key(self.char_cmp))
