"""Lower-bound string families and empirical checks of the counting bounds."""

from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, TextIO

from . import oracle
from .errors import BoundViolation, InvalidSpec
from .maw import ReprBundle, build, enumerate_all, expand_word, space_words
from .rle import RleString, Run, decode, encode

MINIMUM = {"m2-perm": 3, "m3-run": 4, "m4-grid": 2, "m5-stairs": 2}
FAMILIES = tuple(MINIMUM)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in MINIMUM:
            raise InvalidSpec(f"unknown family {self.kind!r}; expected one of {', '.join(FAMILIES)}")
        if self.size < MINIMUM[self.kind]:
            raise InvalidSpec(f"{self.kind} needs size >= {MINIMUM[self.kind]}, got {self.size}")


def perm_symbols(k: int, digits: bool = False) -> list[str]:
    """k distinct symbols: 'a', 'b', ... or, on request and for k <= 9, '1'..'k'."""
    if digits and k <= 9:
        return [str(d) for d in range(1, k + 1)]
    return [chr(ord("a") + d) for d in range(k)]


def gen_family_rle(spec: FamilySpec, digits: bool = False) -> RleString:
    k = spec.size
    if spec.kind == "m2-perm":
        runs = [(s, 1) for s in perm_symbols(k, digits)]
    elif spec.kind == "m3-run":
        runs = [("a", 1), ("c", k - 2), ("b", 1)]
    elif spec.kind == "m4-grid":
        runs = []
        for i in range(1, k + 1):
            runs += [("a", 1), ("b", i), ("c", k + 1 - i)]
        runs.append(("a", 1))
    else:
        runs = []
        for i in range(1, k + 1):
            runs += [("a", 1), ("b", i), ("c", i)]
        runs.append(("a", 1))
    return RleString(tuple(Run(s, e) for s, e in runs))


def gen_family(spec: FamilySpec, digits: bool = False) -> str:
    return decode(gen_family_rle(spec, digits))


def closed_form(spec: FamilySpec) -> tuple[int, int]:
    """(MAW type, count) the lower-bound construction is stated to produce."""
    k = spec.size
    return {
        "m2-perm": (2, k * (k - 2) + 1),
        "m3-run": (3, k - 3),
        "m4-grid": (4, k * (k - 1) // 2),
        "m5-stairs": (5, 2 * k),
    }[spec.kind]


def random_text(rng: random.Random, max_len: int = 64) -> str:
    """2..6 symbols, geometric run lengths with mean 3, length 1..max_len."""
    symbols = "abcdef"[:rng.randint(2, 6)]
    target = rng.randint(1, max_len)
    out: list[str] = []
    size, prev = 0, None
    while size < target:
        s = rng.choice([c for c in symbols if c != prev])
        e = 1
        while rng.random() >= 1 / 3:
            e += 1
        e = min(e, target - size)
        out.append(s * e)
        size += e
        prev = s
    return "".join(out)


def random_corpus(count: int, seed: int = 0, max_len: int = 64) -> Iterator[str]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_text(rng, max_len)


@dataclass
class BoundReport:
    n: int
    m: int
    sigma: int
    sigma_prime: int
    counts: dict[int, int]
    x_total: int
    w_size: int
    space_words: int
    slacks: dict[str, float] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)


def _ratio(count: int, bound: int) -> float:
    if bound == 0:
        return 0.0 if count == 0 else float("inf")
    return count / bound


def bound_checks(bundle: ReprBundle, counts: dict[int, int]) -> list[tuple[str, str, int, int, bool]]:
    """(lemma, statement, observed, bound, holds) for every asserted bound."""
    m, sp, x, sigma = bundle.m, bundle.sigma_prime, bundle.x_total, len(bundle.alphabet)
    return [
        ("M1_number", "|M1| = |alphabet|", counts[1], sigma, counts[1] == sigma),
        ("M2_number", "|M2| <= s'(s'-1)", counts[2], sp * (sp - 1), counts[2] <= sp * (sp - 1)),
        ("M5_number", "|M5| <= 2(m+1)", counts[5], 2 * (m + 1), counts[5] <= 2 * (m + 1)),
        ("M4_upper", "X <= 2(2m+1)", x, 2 * (2 * m + 1), x <= 2 * (2 * m + 1)),
        ("M4_number", "|M4| <= X^2", counts[4], x * x, counts[4] <= x * x),
    ]


def audit_bounds(source: str | RleString, alphabet: Iterable[str] | None = None,
                 oracle_limit: int = 0, strict: bool = True) -> BoundReport:
    """Count MAWs per type and compare against the counting bounds.

    With ``oracle_limit`` > 0, texts up to that length are also checked
    against the brute-force oracle.  ``strict`` raises on the first violated
    bound; otherwise violations are listed on the report.
    """
    rle = source if isinstance(source, RleString) else encode(source)
    bundle = build(rle, alphabet)
    counts = {t: 0 for t in range(1, 6)}
    found = set()
    check = rle.length <= oracle_limit
    for h in enumerate_all(bundle):
        counts[h.type_id] += 1
        if check:
            found.add((h.type_id, expand_word(h, rle)))
    report = BoundReport(rle.length, bundle.m, len(bundle.alphabet), bundle.sigma_prime, counts,
                         bundle.x_total, bundle.w_size, space_words(bundle)["total"])
    for lemma, text, count, bound, ok in bound_checks(bundle, counts):
        report.slacks[lemma] = _ratio(count, bound)
        if not ok:
            report.violations.append(f"{lemma}: {text} fails with {count} > {bound}")
    if check:
        expected = {(r.type_id, r.word) for r in oracle.maws_bruteforce(decode(rle), bundle.alphabet)}
        if expected != found:
            report.violations.append(f"oracle: {len(found ^ expected)} MAWs differ")
    if strict and report.violations:
        lemma, _, detail = report.violations[0].partition(": ")
        raise BoundViolation(lemma, detail)
    return report


CSV_HEADER = ["param", "n", "m", "sigma_prime", "count_m1", "count_m2", "count_m3", "count_m4",
              "count_m5", "X", "space_words", "time_ns"]


def scaling_probe(specs: Iterable[FamilySpec], measure: Iterable[str] = ("space", "time"),
                  repeat: int = 1) -> list[dict]:
    measure = set(measure)
    rows = []
    for spec in specs:
        rle = gen_family_rle(spec)
        bundle = build(rle)
        counts = {t: 0 for t in range(1, 6)}
        best = None
        for _ in range(max(1, repeat)):
            for t in counts:
                counts[t] = 0
            start = time.perf_counter_ns()
            for h in enumerate_all(bundle):
                counts[h.type_id] += 1
            elapsed = time.perf_counter_ns() - start
            best = elapsed if best is None else min(best, elapsed)
        rows.append({
            "param": spec.size, "n": bundle.n, "m": bundle.m, "sigma_prime": bundle.sigma_prime,
            **{f"count_m{t}": counts[t] for t in range(1, 6)},
            "X": bundle.x_total,
            "space_words": space_words(bundle)["total"] if "space" in measure else "",
            "time_ns": best if "time" in measure else "",
        })
    return rows


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    r2: float

    def predict(self, x: float) -> float:
        return self.slope * x + self.intercept


def fit_linear(xs: Sequence[float], ys: Sequence[float], through_origin: bool = False) -> LinearFit:
    """Least squares line; R^2 is 1 - SS_res / SS_tot around the mean of ys."""
    if through_origin:
        slope = sum(x * y for x, y in zip(xs, ys)) / sum(x * x for x in xs)
        intercept = 0.0
    else:
        slope, intercept = statistics.linear_regression(xs, ys)
    mean = statistics.fmean(ys)
    ss_tot = sum((y - mean) ** 2 for y in ys)
    ss_res = sum((y - slope * x - intercept) ** 2 for x, y in zip(xs, ys))
    return LinearFit(slope, intercept, 1.0 - ss_res / ss_tot if ss_tot else 1.0)


def write_csv(rows: Iterable[dict], out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
