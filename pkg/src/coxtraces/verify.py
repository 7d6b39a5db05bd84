"""Randomized and exhaustive property suites used by the CLI and tests.

Each suite returns a result object with an ok flag and per-check lines,
so the CLI can print one line per check and exit nonzero on failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classes import count, count_brute_force, verify_inequality_theorem
from .group import DEFAULT_BUDGET, generate_group, shared_group
from .models import h3_charpoly_table_check, h4_class_census
from .partitions import dihedral_classes, lemma_identity_check
from .roots import Factor, build_system, direct_sum, system_from_spec

DEFAULT_SEED = 7
DEFAULT_TRIALS = 50
DEFAULT_DEGREE = 500


@dataclass
class CheckLine:
    name: str
    ok: bool
    detail: str = ""

    def render(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{status}  {self.name}{tail}"


@dataclass
class SuiteResult:
    lines: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.lines.append(CheckLine(name, ok, detail))


def _factor_pool(max_param: int = 12):
    pool = [Factor("A", n) for n in range(0, max_param + 1)]
    pool += [Factor("B", n) for n in range(2, max_param + 1)]
    pool += [Factor("D", n) for n in range(4, max_param + 1)]
    pool += [Factor("E", n) for n in (6, 7, 8)]
    pool += [Factor("F", 4), Factor("G", 2), Factor("H", 3), Factor("H", 4)]
    pool += [Factor("I", n) for n in range(3, max_param + 1)]
    return pool


def random_composite_factors(rng: random.Random, max_factors: int = 5,
                             max_param: int = 12):
    pool = _factor_pool(max_param)
    return tuple(rng.choice(pool) for _ in range(rng.randint(1, max_factors)))


def inequality_suite(trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                     budget: int = DEFAULT_BUDGET, heavy: bool = False) -> SuiteResult:
    """The ordering theorem on seeded random composite systems."""
    rng = random.Random(seed)
    result = SuiteResult()
    for _ in range(trials):
        factors = random_composite_factors(rng)
        system = build_system(factors)
        verdict = verify_inequality_theorem(system, budget=budget, heavy=heavy)
        engine = sum(1 for f in verdict.factor_results if f.method == "engine")
        detail = (f"T={verdict.traces} S={verdict.supertraces} "
                  f"-I={'yes' if verdict.minus_identity else 'no'} "
                  f"engine-checked {engine}/{len(verdict.factor_results)}")
        result.add(f"ordering theorem on {system.label}", verdict.ok, detail)
    return result


_SMALL_POOL = ("A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5",
               "G2", "F4", "H3", "H4", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "A0")


def multiplicativity_suite(pairs: int = 25, seed: int = DEFAULT_SEED,
                           order_cap: int = 100_000,
                           budget: int = DEFAULT_BUDGET) -> SuiteResult:
    """Brute-force counts on direct sums against products of factor counts."""
    rng = random.Random(seed)
    result = SuiteResult()
    done = 0
    while done < pairs:
        first = system_from_spec(rng.choice(_SMALL_POOL))
        second = system_from_spec(rng.choice(_SMALL_POOL))
        if first.known_order * second.known_order > order_cap:
            continue
        done += 1
        combined = direct_sum(first, second)
        brute = count_brute_force(generate_group(combined, budget=budget))
        product = count(first, strategy="closed") * count(second, strategy="closed")
        ok = brute.pair() == product.pair()
        result.add(f"multiplicativity on {combined.label}", ok,
                   f"brute {brute.pair()} vs product {product.pair()}")
    return result


def lemma_suite(degree: int = DEFAULT_DEGREE) -> SuiteResult:
    result = SuiteResult()
    verdict = lemma_identity_check(degree)
    detail = "; ".join(verdict.problems) if verdict.problems else f"degree {degree}"
    result.add("partition parity identity", verdict.ok, detail)
    return result


def appendix_suite(budget: int = DEFAULT_BUDGET) -> SuiteResult:
    """The hand-built model fixtures and the dihedral sweep."""
    result = SuiteResult()

    h3 = h3_charpoly_table_check()
    result.add("rank-3 generator fixture", h3.ok, "; ".join(h3.problems))

    h4 = h4_class_census()
    result.add("rank-4 quaternion census", h4.ok, "; ".join(h4.problems))

    sweep_ok = True
    for n in range(3, 31):
        summary = dihedral_classes(n)
        if (summary.traces, summary.supertraces) != (n // 2, (n + 1) // 2):
            sweep_ok = False
            break
    result.add("dihedral classes n=3..30", sweep_ok)

    for n in (3, 4, 5, 6):
        brute = count_brute_force(
            shared_group(system_from_spec(f"I2({n})"), budget=budget))
        summary = dihedral_classes(n)
        result.add(f"dihedral n={n} vs matrix model",
                   brute.pair() == (summary.traces, summary.supertraces),
                   f"matrix {brute.pair()}")

    g2 = count("G2", strategy="brute", budget=budget)
    i26 = count("I2(6)", strategy="brute", budget=budget)
    result.add("hexagonal dihedral is G2", g2.pair() == i26.pair() == (3, 3))
    return result
