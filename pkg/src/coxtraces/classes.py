"""Conjugacy classes, eigenvalue flags and the trace/supertrace counts.

The brute-force path enumerates classes as orbits under conjugation by
the group generators and decides eigenvalue membership with exact
determinants.  The closed-form path multiplies the per-factor formulas.
Both are exposed through count(), and the theorem checker compares the
equality case T = S against actual -identity membership.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import ONE, FieldElement
from .group import (DEFAULT_BUDGET, HEAVY_THRESHOLD, Group, GroupElement,
                    contains_minus_identity, generate_group, shared_group)
from .linalg import Matrix, poly_str
from .partitions import TraceCount, closed_form_count
from .roots import RootSystem, build_irreducible, parse_system_spec, system_from_spec


@dataclass
class ConjugacyClass:
    """One conjugacy class: representative of minimal id plus invariants."""

    representative: GroupElement
    size: int
    det: FieldElement
    char_poly: tuple
    has_plus_one: bool
    has_minus_one: bool

    @property
    def char_poly_str(self) -> str:
        return poly_str(self.char_poly)


def _eigen_flags(system: RootSystem, span_matrix: Matrix):
    d = span_matrix.nrows
    if d == 0:
        plus = system.trivial_dims > 0
        return plus, False
    ident = Matrix.identity(d)
    plus = (span_matrix - ident).det().is_zero or system.trivial_dims > 0
    minus = (span_matrix + ident).det().is_zero
    return plus, minus


def has_eigenvalue(g: GroupElement, value: int) -> bool:
    """Exact test for eigenvalue +1 or -1 on the counting space."""
    if value not in (1, -1):
        raise ValueError("only the eigenvalues +1 and -1 are tracked")
    group = g.group
    plus, minus = _eigen_flags(group.system, group.span_matrix_of(g.index))
    return plus if value == 1 else minus


def conjugacy_classes(group: Group, check_all_members: bool = False):
    """All conjugacy classes, ordered by minimal element id.

    Each orbit is closed under conjugation by the generators alone (they
    generate the group, and orbits of bijections on a finite set close
    under inverses automatically).  With check_all_members the eigen
    flags are recomputed for every member instead of the representative
    only — a class-function sanity mode for small groups.
    """
    perms = group.perms
    index = group.index
    gen_perms = [perms[i] for i in group.generator_ids]
    use_bytes = bool(perms) and isinstance(perms[0], bytes)
    if use_bytes:
        gen_tables = [g.ljust(256, b"\x00") for g in gen_perms]
    visited = bytearray(group.order)
    out = []
    for seed in range(group.order):
        if visited[seed]:
            continue
        visited[seed] = 1
        members = [seed]
        stack = [seed]
        while stack:
            x = perms[stack.pop()]
            if use_bytes:
                for g, t in zip(gen_perms, gen_tables):
                    # generators are reflections, so g is its own inverse
                    y = index[g.translate(x.translate(t).ljust(256, b"\x00"))]
                    if not visited[y]:
                        visited[y] = 1
                        members.append(y)
                        stack.append(y)
            else:
                for g in gen_perms:
                    conj = tuple(g[x[g[i]]] for i in range(len(g)))
                    y = index[conj]
                    if not visited[y]:
                        visited[y] = 1
                        members.append(y)
                        stack.append(y)
        span = group.span_matrix_of(seed)
        plus, minus = _eigen_flags(group.system, span)
        if check_all_members:
            for m in members:
                flags = _eigen_flags(group.system, group.span_matrix_of(m))
                if flags != (plus, minus):
                    raise RuntimeError(
                        f"eigen flags are not a class function at id {m}")
        out.append(ConjugacyClass(GroupElement(group, seed), len(members),
                                  span.det(), span.charpoly(), plus, minus))
    total = sum(c.size for c in out)
    if total != group.order:
        raise RuntimeError(f"classes cover {total} of {group.order} elements")
    return out


def count_brute_force(group: Group) -> TraceCount:
    """Trace/supertrace counts by full class enumeration."""
    traces = 0
    supertraces = 0
    for cls in conjugacy_classes(group):
        if not cls.has_plus_one:
            traces += 1
        if not cls.has_minus_one:
            supertraces += 1
    return TraceCount(traces, supertraces, "brute_force")


def _as_system(system_or_spec) -> RootSystem:
    if isinstance(system_or_spec, RootSystem):
        return system_or_spec
    return system_from_spec(system_or_spec)


def count(system_or_spec, strategy: str = "auto",
          budget: int = DEFAULT_BUDGET, heavy: bool = False) -> TraceCount:
    """Count traces and supertraces for a (possibly composite) system.

    strategy 'closed' (and 'auto', which prefers it — every supported
    factor has a closed form) multiplies the per-factor formulas;
    'brute' enumerates the classes of the full direct-sum group.
    """
    system = _as_system(system_or_spec)
    if strategy not in ("auto", "closed", "brute"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "brute":
        group = generate_group(system, budget=budget, heavy=heavy)
        return count_brute_force(group)
    result = None
    for factor in system.factors:
        step = closed_form_count(factor)
        result = step if result is None else result * step
    if len(system.factors) > 1:
        return TraceCount(result.traces, result.supertraces, "composed")
    return result


@dataclass
class FactorMinusIdentity:
    label: str
    method: str            # 'engine' or 'table'
    present: bool


@dataclass
class InequalityVerdict:
    label: str
    traces: int
    supertraces: int
    minus_identity: bool
    factor_results: list
    s_positive: bool
    t_le_s: bool
    equality_iff_minus_identity: bool

    @property
    def ok(self) -> bool:
        return self.s_positive and self.t_le_s and self.equality_iff_minus_identity


def verify_inequality_theorem(system_or_spec, budget: int = DEFAULT_BUDGET,
                              heavy: bool = False) -> InequalityVerdict:
    """Check S > 0, T <= S, and T = S exactly when -identity is in the group.

    -identity membership is established by actually enumerating the
    factor group whenever a vector model exists within the enumeration
    allowance; only factors beyond it fall back to the classification
    table.
    """
    system = _as_system(system_or_spec)
    counts = count(system, strategy="closed", budget=budget, heavy=heavy)
    limit = budget if heavy else min(budget, HEAVY_THRESHOLD)
    factor_results = []
    minus = True
    for factor in system.factors:
        if factor.has_matrix_model and factor.order <= limit:
            group = shared_group(build_irreducible(factor), budget=budget,
                                 heavy=heavy)
            present = contains_minus_identity(group)
            factor_results.append(FactorMinusIdentity(factor.label, "engine",
                                                      present))
        else:
            present = factor.contains_minus_identity
            factor_results.append(FactorMinusIdentity(factor.label, "table",
                                                      present))
        minus = minus and present
    t, s = counts.pair()
    return InequalityVerdict(
        label=system.label,
        traces=t,
        supertraces=s,
        minus_identity=minus,
        factor_results=factor_results,
        s_positive=s > 0,
        t_le_s=t <= s,
        equality_iff_minus_identity=(t == s) == minus,
    )


__all__ = [
    "ConjugacyClass", "TraceCount", "conjugacy_classes", "count",
    "count_brute_force", "has_eigenvalue", "verify_inequality_theorem",
    "InequalityVerdict", "FactorMinusIdentity", "parse_system_spec",
]
