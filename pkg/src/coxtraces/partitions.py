"""Partition combinatorics behind the closed-form class counts.

Implements the partition enumerators (counts by parity of the number of
summands, odd-part partitions, distinct-odd-part partitions), the
generating-function identity relating them, the signed-cycle description
of the B/D class parameters, and the dihedral class structure.  All of
it is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .roots import Factor

_BN_ENUM_BUDGET = 40


@dataclass(frozen=True)
class TraceCount:
    """Result of a count: traces (no eigenvalue +1) and supertraces (no -1)."""

    traces: int
    supertraces: int
    method: str

    def __post_init__(self):
        if self.supertraces < 1:
            raise ValueError(f"supertrace count must be positive, got {self}")
        if not 0 <= self.traces <= self.supertraces:
            raise ValueError(f"trace count out of range in {self}")

    def __mul__(self, other):
        if not isinstance(other, TraceCount):
            return NotImplemented
        return TraceCount(self.traces * other.traces,
                          self.supertraces * other.supertraces, "composed")

    def pair(self):
        return (self.traces, self.supertraces)


# -- plain partition counting ---------------------------------------------------


@lru_cache(maxsize=None)
def _partition_table(n_max: int):
    ways = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for m in range(part, n_max + 1):
            ways[m] += ways[m - part]
    return tuple(ways)


def partition_count(n: int) -> int:
    """p(n), the number of partitions of n."""
    if n < 0:
        raise ValueError("partition count of a negative integer")
    return _partition_table(max(n, 1))[n]


@lru_cache(maxsize=None)
def _odd_part_table(n_max: int):
    ways = [1] + [0] * n_max
    for part in range(1, n_max + 1, 2):
        for m in range(part, n_max + 1):
            ways[m] += ways[m - part]
    return tuple(ways)


def partitions_odd_parts(n: int) -> int:
    """Number of partitions of n into odd summands."""
    if n < 0:
        raise ValueError("partition count of a negative integer")
    return _odd_part_table(max(n, 1))[n]


@lru_cache(maxsize=None)
def _distinct_part_table(n_max: int):
    ways = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for m in range(n_max, part - 1, -1):
            ways[m] += ways[m - part]
    return tuple(ways)


def partitions_distinct_parts(n: int) -> int:
    if n < 0:
        raise ValueError("partition count of a negative integer")
    return _distinct_part_table(max(n, 1))[n]


@lru_cache(maxsize=None)
def _distinct_odd_table(n_max: int):
    ways = [1] + [0] * n_max
    for part in range(1, n_max + 1, 2):
        for m in range(n_max, part - 1, -1):
            ways[m] += ways[m - part]
    return tuple(ways)


def distinct_odd_partitions(n: int) -> int:
    """Number of partitions of n into distinct odd summands."""
    if n < 0:
        raise ValueError("partition count of a negative integer")
    return _distinct_odd_table(max(n, 1))[n]


@lru_cache(maxsize=None)
def _parity_difference_table(n_max: int):
    """d[n] = (# partitions with even summand count) - (# with odd count).

    Série of prod 1/(1+x^k): repeated in-place division by (1+x^k).
    """
    diff = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        for m in range(part, n_max + 1):
            diff[m] -= diff[m - part]
    return tuple(diff)


def partitions_even_summand_count(n: int) -> int:
    """Partitions of n with an even number of summands."""
    if n < 0:
        raise ValueError("partition count of a negative integer")
    return (partition_count(n) + _parity_difference_table(max(n, 1))[n]) // 2


def partitions_odd_summand_count(n: int) -> int:
    """Partitions of n with an odd number of summands."""
    if n < 0:
        raise ValueError("partition count of a negative integer")
    return (partition_count(n) - _parity_difference_table(max(n, 1))[n]) // 2


@lru_cache(maxsize=None)
def _even_evens_table(n_max: int):
    """Partitions of n with an even number of even summands.

    Tracks the parity of the count of even parts while folding parts in.
    """
    even = [1] + [0] * n_max  # even number of even parts
    odd = [0] * (n_max + 1)
    for part in range(1, n_max + 1):
        if part % 2 == 1:
            for m in range(part, n_max + 1):
                even[m] += even[m - part]
                odd[m] += odd[m - part]
        else:
            for m in range(part, n_max + 1):
                even[m], odd[m] = even[m] + odd[m - part], odd[m] + even[m - part]
    return tuple(even)


def partitions_even_count_of_even_parts(n: int) -> int:
    if n < 0:
        raise ValueError("partition count of a negative integer")
    return _even_evens_table(max(n, 1))[n]


def summand_count_table(n_max: int):
    """a[n][m] = number of partitions of n with exactly m summands."""
    table = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    table[0][0] = 1
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            table[n][m] = table[n - 1][m - 1] + (table[n - m][m] if n >= m else 0)
    return table


# -- the generating-function identity ---------------------------------------------


@dataclass
class LemmaVerdict:
    ok: bool
    degree: int
    problems: list = field(default_factory=list)


def lemma_identity_check(degree: int = 500, enumerate_to: int = 40) -> LemmaVerdict:
    """Verify the parity-difference identity two independent ways.

    Route one expands -1/prod(1+x^k) as a power series; route two expands
    -prod over odd k of (1-x^k).  Both give the series of odd-count minus
    even-count partition numbers, whose magnitude is the number of
    partitions into distinct odd summands.  Small degrees are checked a
    third way by direct enumeration, including the two-variable summand
    bookkeeping.
    """
    problems = []
    diff = _parity_difference_table(degree)  # diff[n] = E(n) - O(n)

    # route two: -(1 - x)(1 - x^3)(1 - x^5)...
    sparse = [1] + [0] * degree
    for part in range(1, degree + 1, 2):
        for m in range(degree, part - 1, -1):
            sparse[m] -= sparse[m - part]
    for n in range(degree + 1):
        if -diff[n] != -sparse[n]:
            problems.append(f"series mismatch at degree {n}")
            break

    # sign pattern and magnitude against the distinct-odd enumerator
    for n in range(1, degree + 1):
        r = distinct_odd_partitions(n)
        o_minus_e = -diff[n]
        expected = r if n % 2 == 1 else -r
        if o_minus_e != expected:
            problems.append(f"sign pattern fails at n={n}: "
                            f"O-E={o_minus_e}, expected {expected}")
            break
    if degree >= 2 and diff[2] != 0:
        problems.append("E(2) != O(2)")
    for n in range(4, degree + 1, 2):
        if diff[n] <= 0:
            problems.append(f"E({n}) <= O({n})")
            break
    for n in range(1, degree + 1, 2):
        if diff[n] >= 0:
            problems.append(f"O({n}) <= E({n})")
            break

    # direct enumeration for small n, plus the t-degree bookkeeping
    limit = min(degree, enumerate_to)
    table = summand_count_table(limit)
    for n in range(limit + 1):
        even = sum(table[n][m] for m in range(0, n + 1, 2))
        odd = sum(table[n][m] for m in range(1, n + 1, 2))
        if even - odd != diff[n]:
            problems.append(f"summand-count table disagrees at n={n}")
            break
        if even != partitions_even_summand_count(n) or \
                odd != partitions_odd_summand_count(n):
            problems.append(f"parity split disagrees at n={n}")
            break
        signed = sum((-1) ** m * table[n][m] for m in range(n + 1))
        if signed != diff[n]:
            problems.append(f"signed summand sum disagrees at n={n}")
            break
    return LemmaVerdict(not problems, degree, problems)


# -- signed cycle data for the B/D families -----------------------------------------


@dataclass(frozen=True)
class SignedCycleType:
    """Class parameters in the hyperoctahedral family.

    plain_cycles lists the lengths of sign-preserving cycles, flipped_cycles
    the lengths of sign-reversing ones; together they partition n.
    """

    plain_cycles: tuple
    flipped_cycles: tuple

    @property
    def n(self) -> int:
        return sum(self.plain_cycles) + sum(self.flipped_cycles)

    @property
    def flip_parity(self) -> int:
        return len(self.flipped_cycles) % 2


def bn_class_eigen_flags(cycle_type: SignedCycleType):
    """(has eigenvalue +1, has eigenvalue -1) for a signed cycle type.

    A sign-preserving cycle of length l contributes the roots of t^l - 1,
    a sign-reversing one the roots of t^l + 1.
    """
    has_plus = bool(cycle_type.plain_cycles)
    has_minus = (any(l % 2 == 0 for l in cycle_type.plain_cycles)
                 or any(l % 2 == 1 for l in cycle_type.flipped_cycles))
    return has_plus, has_minus


def _partitions_of(n: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first):
            yield (first,) + rest


def bn_dn_class_enumeration(n: int, kind: str = "B",
                            budget: int = _BN_ENUM_BUDGET):
    """All signed-cycle class parameters for the B (or D subset) family.

    For D only the types with an even number of sign-reversing cycles
    survive.  The handful of D classes that split further all keep an
    eigenvalue +1, so trace/supertrace counting is unaffected.
    """
    if kind not in ("B", "D"):
        raise ValueError(f"kind must be 'B' or 'D', got {kind!r}")
    if n < 0:
        raise ValueError("negative rank")
    if n > budget:
        raise ValueError(f"rank {n} above the enumeration budget {budget}")
    out = []
    for plain_total in range(n + 1):
        for plain in _partitions_of(plain_total):
            for flipped in _partitions_of(n - plain_total):
                ct = SignedCycleType(plain, flipped)
                if kind == "D" and ct.flip_parity != 0:
                    continue
                out.append(ct)
    return out


def bn_dn_trace_counts(n: int, kind: str = "B") -> TraceCount:
    """Trace/supertrace counts straight from the cycle-type enumeration."""
    traces = 0
    supertraces = 0
    for ct in bn_dn_class_enumeration(n, kind):
        has_plus, has_minus = bn_class_eigen_flags(ct)
        if not has_plus:
            traces += 1
        if not has_minus:
            supertraces += 1
    return TraceCount(traces, supertraces, "brute_force")


# -- dihedral groups -------------------------------------------------------------


def dihedral_mul(x, y, n: int):
    """Product in the dihedral group of the regular n-gon.

    Elements are ('s', k) for the rotation by 2 pi k / n and ('r', k) for
    the reflection whose axis sits at angle pi k / n.
    """
    (kx, ax), (ky, ay) = x, y
    if kx == "s" and ky == "s":
        return ("s", (ax + ay) % n)
    if kx == "r" and ky == "r":
        return ("s", (ax - ay) % n)
    if kx == "r":
        return ("r", (ax - ay) % n)
    return ("r", (ax + ay) % n)


def dihedral_element_flags(element, n: int):
    """(has +1, has -1) for the 2x2 action of a dihedral element.

    Every reflection fixes its axis and negates the orthogonal one; the
    rotation by 2 pi k / n has eigenvalue +1 only for k = 0 and -1 only
    for the half turn, which exists only when n is even.
    """
    kind, k = element
    if kind == "r":
        return True, True
    return k == 0, n % 2 == 0 and k == n // 2


@dataclass
class DihedralClassSummary:
    n: int
    classes: list          # each class is a sorted tuple of elements
    traces: int
    supertraces: int
    rotation_classes: int
    reflection_classes: int

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def counts(self) -> TraceCount:
        return TraceCount(self.traces, self.supertraces, "brute_force")


def dihedral_classes(n: int) -> DihedralClassSummary:
    """Conjugacy classes of the dihedral group of the n-gon, by enumeration.

    Classes are computed honestly (orbits under conjugation by all 2n
    elements), not from the known answer, so this doubles as an oracle
    for the closed forms floor(n/2) and floor((n+1)/2).
    """
    if n < 3:
        raise ValueError(f"dihedral model needs n >= 3, got {n}")
    elements = [("s", k) for k in range(n)] + [("r", k) for k in range(n)]
    inverse = {}
    for x in elements:
        kind, k = x
        inverse[x] = x if kind == "r" else ("s", (-k) % n)
    seen = set()
    classes = []
    for x in elements:
        if x in seen:
            continue
        orbit = {dihedral_mul(dihedral_mul(g, x, n), inverse[g], n)
                 for g in elements}
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort()
    traces = 0
    supertraces = 0
    rotation_classes = 0
    reflection_classes = 0
    for cls in classes:
        has_plus, has_minus = dihedral_element_flags(cls[0], n)
        if not has_plus:
            traces += 1
        if not has_minus:
            supertraces += 1
        if cls[0][0] == "s":
            rotation_classes += 1
        else:
            reflection_classes += 1
    return DihedralClassSummary(n, classes, traces, supertraces,
                                rotation_classes, reflection_classes)


# -- closed forms ------------------------------------------------------------------


_FIXED_COUNTS = {("E", 6): (5, 9), ("E", 7): (12, 12), ("E", 8): (30, 30),
                 ("F", 4): (9, 9), ("G", 2): (3, 3),
                 ("H", 3): (4, 4), ("H", 4): (20, 20)}


def closed_form_count(factor: Factor) -> TraceCount:
    """Trace/supertrace counts of one irreducible factor, in closed form."""
    family, n = factor.family, factor.n
    if family == "A":
        if n == 0:
            # the empty system: one class (the identity), which acts as +1
            # on its ambient line, so it carries a supertrace but no trace
            return TraceCount(0, 1, "closed_form")
        return TraceCount(1, partitions_odd_parts(n + 1), "closed_form")
    if family == "B":
        p = partition_count(n)
        return TraceCount(p, p, "closed_form")
    if family == "D":
        even = partitions_even_summand_count(n)
        if n % 2 == 0:
            return TraceCount(even, even, "closed_form")
        return TraceCount(even, partitions_odd_summand_count(n), "closed_form")
    if family == "I":
        return TraceCount(n // 2, (n + 1) // 2, "closed_form")
    t, s = _FIXED_COUNTS[(family, n)]
    return TraceCount(t, s, "closed_form")
