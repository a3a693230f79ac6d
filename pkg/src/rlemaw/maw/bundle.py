"""The five per-type structures behind one run-length encoded text."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Iterable, Iterator

from ..errors import InvalidInput
from ..rle import SENTINEL, RleString
from .handle import WORDS_PER_HANDLE, MawHandle
from .ktree import walk_k_tree
from .runs import ExtendedRuns, OpCounter
from .small import D1Rep, D2Rep, build_d1, build_d2, enum_m1, enum_m2
from .type3 import D3Rep, build_d3, enum_m3
from .type4 import D4Rep, build_d4, enum_m4
from .type5 import D5Rep, build_m5, enum_m5

# |M_i| <= threshold * m switches types 2-4 to an explicit handle list
DEFAULT_THRESHOLD = 1.0


@dataclass(frozen=True)
class ReprBundle:
    rle: RleString
    alphabet: tuple[str, ...]
    d1: D1Rep
    d2: D2Rep
    d3: D3Rep
    d4: D4Rep
    d5: D5Rep
    x_total: int
    w_size: int

    @property
    def m(self) -> int:
        return len(self.rle.runs)

    @property
    def n(self) -> int:
        return self.rle.length

    @property
    def sigma_prime(self) -> int:
        return len(self.d2.symbols)


def normalize_alphabet(rle: RleString, alphabet: Iterable[str] | None) -> tuple[str, ...]:
    present = set(rle.symbols)
    if alphabet is None:
        return tuple(sorted(present))
    alphabet = list(alphabet)
    if any(len(c) != 1 or c == SENTINEL for c in alphabet):
        raise InvalidInput("alphabet entries must be single non-sentinel characters")
    if len(set(alphabet)) != len(alphabet):
        raise InvalidInput("alphabet lists a symbol twice")
    missing = present - set(alphabet)
    if missing:
        raise InvalidInput(f"alphabet misses text symbols {sorted(missing)!r}")
    return tuple(sorted(alphabet))


def build(rle: RleString, alphabet: Iterable[str] | None = None,
          threshold: float = DEFAULT_THRESHOLD) -> ReprBundle:
    rle = rle.without_sentinels()
    alphabet = normalize_alphabet(rle, alphabet)
    ext = ExtendedRuns.of(rle)
    m = ext.m

    x_total = w_size = 0
    black = []
    for node in walk_k_tree(ext):
        if node.depth == 0 or node.black:
            w_size += 1
            x_total += len(node.children)
        if node.black:
            black.append(node)

    d2, d3, d4 = build_d2(ext), build_d3(ext), build_d4(black)
    limit = threshold * m
    if threshold > 0:
        d2 = _maybe_explicit(d2, enum_m2, limit)
        d3 = _maybe_explicit(d3, enum_m3, limit)
        d4 = _maybe_explicit(d4, enum_m4, limit)
    return ReprBundle(rle, alphabet, build_d1(ext, alphabet), d2, d3, d4, build_m5(ext),
                      x_total, w_size)


def _maybe_explicit(rep, enum, limit):
    # stop as soon as the type is known to exceed the limit
    handles = []
    for h in enum(rep):
        handles.append(h)
        if len(handles) > limit:
            return rep
    return replace(rep, explicit=tuple(handles))


def enumerate_type(bundle: ReprBundle, type_id: int, ops: OpCounter | None = None) -> Iterator[MawHandle]:
    if type_id == 1:
        return enum_m1(bundle.d1, ops)
    if type_id == 2:
        return enum_m2(bundle.d2, ops)
    if type_id == 3:
        return enum_m3(bundle.d3, ops)
    if type_id == 4:
        return enum_m4(bundle.d4, ops)
    if type_id == 5:
        return enum_m5(bundle.d5, ops)
    raise ValueError(f"no MAW type {type_id}")


def enumerate_all(bundle: ReprBundle, sink: Callable[[MawHandle], object] | None = None,
                  types: Iterable[int] | None = None, ops: OpCounter | None = None):
    """Every MAW handle, types ascending.

    Returns an iterator, or pushes each handle into ``sink`` and returns the
    number of handles when a sink is given.
    """
    wanted = sorted(set(types)) if types is not None else [1, 2, 3, 4, 5]
    stream = (h for t in wanted for h in enumerate_type(bundle, t, ops))
    if sink is None:
        return stream
    count = 0
    for h in stream:
        sink(h)
        count += 1
    return count


def space_words(bundle: ReprBundle) -> dict[str, int]:
    """Machine words retained per structure.

    The caller's alphabet beyond the symbols of T is query input and is
    reported separately under ``alphabet_extra``, outside the total.
    """
    d1, d2, d3, d4, d5 = bundle.d1, bundle.d2, bundle.d3, bundle.d4, bundle.d5
    words = {"rle": 1 + 2 * bundle.m, "d1": 1 + 2 * len(d1.entries)}
    if d2.explicit is not None:
        words["d2"] = 1 + WORDS_PER_HANDLE * len(d2.explicit)
    else:
        words["d2"] = 1 + 2 * len(d2.symbols) + 2 * len(d2.pairs)
    if d3.explicit is not None:
        words["d3"] = 1 + WORDS_PER_HANDLE * len(d3.explicit)
    else:
        words["d3"] = 1 + sum(1 + 3 * len(g.bridges) + 2 * len(g.left) + 3 * len(g.right)
                              for g in d3.groups)
    if d4.explicit is not None:
        words["d4"] = 1 + WORDS_PER_HANDLE * len(d4.explicit)
    else:
        words["d4"] = 1 + sum(g.words for g in d4.graphs)
    words["d5"] = 1 + WORDS_PER_HANDLE * len(d5.handles)
    words["total"] = sum(words.values())
    words["alphabet_extra"] = len(bundle.alphabet) - len(d1.entries)
    return words
