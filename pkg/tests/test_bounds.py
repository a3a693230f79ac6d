import io
import random

import pytest

from rlemaw import BoundViolation, InvalidSpec, encode
from rlemaw.bounds import (CSV_HEADER, FamilySpec, audit_bounds, closed_form, fit_linear, gen_family,
                           gen_family_rle, random_corpus, random_text, scaling_probe, write_csv)
from rlemaw.oracle import count_by_type


@pytest.mark.parametrize("kind,size", [("m2-perm", 2), ("m3-run", 3), ("m4-grid", 1), ("m5-stairs", 0),
                                       ("m6", 5)])
def test_spec_minimums(kind, size):
    with pytest.raises(InvalidSpec):
        FamilySpec(kind, size)


def test_family_texts():
    assert gen_family(FamilySpec("m2-perm", 4)) == "abcd"
    assert gen_family(FamilySpec("m2-perm", 4), digits=True) == "1234"
    assert gen_family(FamilySpec("m3-run", 6)) == "accccb"
    assert gen_family(FamilySpec("m4-grid", 3)) == "abcccabbccabbbca"
    assert gen_family(FamilySpec("m5-stairs", 2)) == "abcabbcca"
    for p in range(2, 20):
        assert len(gen_family_rle(FamilySpec("m4-grid", p)).runs) == 3 * p + 1
        assert len(gen_family_rle(FamilySpec("m5-stairs", p)).runs) == 3 * p + 1


def test_m2_and_m3_closed_forms_hold():
    for s in range(3, 10):
        spec = FamilySpec("m2-perm", s)
        assert audit_bounds(gen_family(spec), oracle_limit=50).counts[2] == closed_form(spec)[1]
    for n in range(4, 40):
        assert audit_bounds(gen_family(FamilySpec("m3-run", n)), oracle_limit=50).counts[3] == n - 3


def test_m4_m5_family_counts_are_oracle_verified():
    # observed counts differ from the stated closed forms; see notes
    for p in range(2, 7):
        m4 = gen_family(FamilySpec("m4-grid", p))
        m5 = gen_family(FamilySpec("m5-stairs", p))
        assert audit_bounds(m4, oracle_limit=200).counts[4] == count_by_type(m4)[4] == (p - 1) ** 2 + 2
        assert audit_bounds(m5, oracle_limit=200).counts[5] == count_by_type(m5)[5] == 4 * p - 5


def test_documented_examples():
    r = audit_bounds("bbacccbaa", oracle_limit=100)
    assert r.counts == {1: 3, 2: 3, 3: 2, 4: 1, 5: 3}
    assert all(v <= 1 for v in r.slacks.values())
    assert r.n == 9 and r.m == 5 and r.sigma_prime == 3
    r = audit_bounds(gen_family_rle(FamilySpec("m5-stairs", 10)))
    assert r.m == 31 and r.counts[5] == 35
    assert audit_bounds(gen_family_rle(FamilySpec("m4-grid", 50))).counts[4] == 2403


def test_random_audits_four_symbols():
    rng = random.Random(11)
    for _ in range(2000):
        text = "".join(rng.choice("abcd") for _ in range(rng.randint(0, 64)))
        audit_bounds(text, oracle_limit=24)


def test_random_corpus_distribution():
    texts = list(random_corpus(500, seed=3))
    assert texts == list(random_corpus(500, seed=3))
    assert all(1 <= len(t) <= 64 for t in texts)
    assert all(set(t) <= set("abcdef") for t in texts)
    assert {len(set(t)) for t in texts if len(t) > 40} >= {2, 3, 4}
    mean_run = sum(len(t) for t in texts) / sum(encode(t).size for t in texts)
    assert 2.0 < mean_run < 3.5
    assert len(random_text(random.Random(1), max_len=5)) <= 5


def test_violation_names_lemma(monkeypatch):
    import rlemaw.bounds as bounds

    def broken(bundle, counts):
        return [("M5_number", "|M5| <= 2(m+1)", 99, 1, False)]

    monkeypatch.setattr(bounds, "bound_checks", broken)
    with pytest.raises(BoundViolation) as err:
        bounds.audit_bounds("abc")
    assert err.value.lemma == "M5_number"
    report = bounds.audit_bounds("abc", strict=False)
    assert report.violations and report.violations[0].startswith("M5_number")


def test_scaling_probe_csv():
    rows = scaling_probe([FamilySpec("m3-run", n) for n in (100, 1000, 10000)], measure=("space",))
    assert [r["count_m3"] for r in rows] == [97, 997, 9997]
    assert len({r["space_words"] for r in rows}) == 1
    assert all(r["time_ns"] == "" for r in rows)
    out = io.StringIO()
    write_csv(rows, out)
    lines = out.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 4
    rows = scaling_probe([FamilySpec("m2-perm", s) for s in range(3, 27)], measure=("time",))
    assert [r["count_m2"] for r in rows] == [s * (s - 2) + 1 for s in range(3, 27)]
    assert all(isinstance(r["time_ns"], int) for r in rows)


def test_fit_linear():
    fit = fit_linear([1, 2, 3, 4], [2, 4, 6, 8], through_origin=True)
    assert fit.slope == pytest.approx(2) and fit.r2 == pytest.approx(1)
    fit = fit_linear([1, 2, 3], [3, 5, 7])
    assert (fit.slope, fit.intercept) == pytest.approx((2, 1))
