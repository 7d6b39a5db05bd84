"""Property-suite plumbing: seeding, determinism, and verdict shapes."""

from __future__ import annotations

import random

from coxtraces.verify import (CheckLine, SuiteResult, appendix_suite,
                              inequality_suite, lemma_suite,
                              multiplicativity_suite, random_composite_factors)


def test_check_line_rendering():
    assert CheckLine("thing", True).render() == "PASS  thing"
    assert CheckLine("thing", False, "why").render() == "FAIL  thing  (why)"


def test_suite_result_aggregates():
    result = SuiteResult()
    result.add("a", True)
    assert result.ok
    result.add("b", False, "broke")
    assert not result.ok
    assert len(result.lines) == 2


def test_random_factors_are_seed_stable():
    first = random_composite_factors(random.Random(42))
    second = random_composite_factors(random.Random(42))
    assert first == second
    assert 1 <= len(first) <= 5


def test_inequality_suite_small_run():
    result = inequality_suite(trials=6, seed=3)
    assert result.ok, [l.render() for l in result.lines if not l.ok]
    assert len(result.lines) == 6


def test_multiplicativity_suite_small_run():
    result = multiplicativity_suite(pairs=4, seed=3)
    assert result.ok, [l.render() for l in result.lines if not l.ok]
    assert len(result.lines) == 4


def test_lemma_suite():
    result = lemma_suite(degree=120)
    assert result.ok


def test_appendix_suite():
    result = appendix_suite()
    assert result.ok, [l.render() for l in result.lines if not l.ok]
    names = " ".join(l.name for l in result.lines)
    assert "quaternion census" in names
    assert "dihedral" in names
