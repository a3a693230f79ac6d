"""O(m)-space representation of all MAWs of a run-length encoded text."""

from .bundle import (DEFAULT_THRESHOLD, ReprBundle, build, enumerate_all, enumerate_type,
                     space_words)
from .handle import MawHandle, expand, expand_word
from .ktree import KTree, build_k_tree
from .runs import ExtendedRuns, OpCounter
from .small import enum_m1, enum_m2
from .type3 import enum_m3
from .type4 import enum_m4
from .type5 import build_m5, enum_m5

__all__ = [
    "DEFAULT_THRESHOLD", "ExtendedRuns", "KTree", "MawHandle", "OpCounter", "ReprBundle",
    "build", "build_k_tree", "build_m5", "enum_m1", "enum_m2", "enum_m3", "enum_m4",
    "enum_m5", "enumerate_all", "enumerate_type", "expand", "expand_word", "space_words",
]
