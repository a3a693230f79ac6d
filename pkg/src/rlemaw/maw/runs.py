from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..rle import SENTINEL, RleString


@dataclass(frozen=True)
class ExtendedRuns:
    """rle(T) with one sentinel run on each side, as parallel arrays.

    Extended index ``x`` corresponds to index ``x - 1`` of rle(T).
    """

    syms: tuple[str, ...]
    exps: tuple[int, ...]

    @classmethod
    def of(cls, rle: RleString) -> ExtendedRuns:
        runs = rle.without_sentinels().runs
        syms = (SENTINEL,) + tuple(r.symbol for r in runs) + (SENTINEL,)
        exps = (1,) + tuple(r.exponent for r in runs) + (1,)
        return cls(syms, exps)

    @property
    def m(self) -> int:
        return len(self.syms) - 2

    @cached_property
    def lce(self):
        from .lce import RunLce
        return RunLce(self.syms, self.exps)

    @cached_property
    def rev_lce(self):
        """Extensions to the left: the index of the reversed runs."""
        from .lce import RunLce
        return RunLce(self.syms[::-1], self.exps[::-1])

    def reversed(self) -> ExtendedRuns:
        out = ExtendedRuns(self.syms[::-1], self.exps[::-1])
        # share the index: the reversed text's forward index is our backward one
        if "rev_lce" in self.__dict__:
            out.__dict__["lce"] = self.__dict__["rev_lce"]
        return out


class OpCounter:
    """Tally of basic enumeration steps, filled in by the enumerators."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def add(self, k: int) -> None:
        self.count += k
