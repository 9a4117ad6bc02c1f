"""Deduction pipeline identifying fixed points with subsets of {1..n}.

Given semifree data with binomial counts, the restrictions of the degree-two
generator classes are forced: their level sums and squared level sums are
binomial multiples of x, every individual restriction is 0 or x, each point
of index 2k sees exactly k unit restrictions, and the resulting point ->
subset map is a bijection.  The pipeline builds the canonical table and
verifies every forced constraint, producing a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .algebra import UniPoly, X
from .cube import alpha_class, all_subsets, beta_class, restrict_class, subset_id
from .errors import (
    CountMismatch,
    NoIntegerSolution,
    NotInjective,
    NotSemifree,
    NotSurjective,
    WrongCount,
)
from .fixed_points import FixedPointData, counts, validate
from .localization import predict_counts


@dataclass(frozen=True)
class RestrictionTable:
    """Restrictions of the n degree-two generators to every fixed point."""

    n: int
    point_levels: tuple[tuple[str, int], ...]  # (point id, negative-weight count)
    entries: dict[tuple[int, str], UniPoly]  # (generator j, point id) -> poly

    def entry(self, j: int, pid: str) -> UniPoly:
        return self.entries[(j, pid)]

    def level_sum(self, j: int, k: int) -> UniPoly:
        total = UniPoly()
        for pid, level in self.point_levels:
            if level == k:
                total = total + self.entries[(j, pid)]
        return total

    def level_square_sum(self, j: int, k: int) -> UniPoly:
        total = UniPoly()
        for pid, level in self.point_levels:
            if level == k:
                e = self.entries[(j, pid)]
                total = total + e * e
        return total


@dataclass(frozen=True)
class Bijection:
    """Point id -> subset of {1..n}, respecting the index."""

    n: int
    subsets: dict[str, frozenset]


def forced_level_sum(n: int, k: int) -> UniPoly:
    """Sum of one generator's restrictions over the index-2k points: C(n-1,k-1) x."""
    if not 0 <= k <= n:
        raise ValueError(f"level {k} out of range for n={n}")
    if k == 0:
        return UniPoly()
    return UniPoly.monomial(math.comb(n - 1, k - 1), 1)


def forced_level_square_sum(n: int, k: int) -> UniPoly:
    """Same binomial coefficient, on x^2."""
    if not 0 <= k <= n:
        raise ValueError(f"level {k} out of range for n={n}")
    if k == 0:
        return UniPoly()
    return UniPoly.monomial(math.comb(n - 1, k - 1), 2)


def solve_value_multiset(
    total: int, square_sum_matches: bool, count: int
) -> tuple[int, ...]:
    """Integers c_1..c_count with sum = square sum = total: forced to be 0/1.

    From sum c_i = sum c_i^2 we get sum c_i(c_i - 1) = 0 with every term
    nonnegative, so each c_i is 0 or 1.
    """
    if not square_sum_matches:
        raise ValueError("the square-sum constraint is required for uniqueness")
    if total < 0 or total > count:
        raise NoIntegerSolution(
            f"no 0/1 multiset of size {count} sums to {total}"
        )
    return (1,) * total + (0,) * (count - total)


def per_point_count(table: RestrictionTable, pid: str) -> int:
    """Number of generators restricting to x at the given point."""
    hits = 0
    for j in range(1, table.n + 1):
        e = table.entries[(j, pid)]
        if e == X:
            hits += 1
        elif e:
            raise ValueError(f"entry ({j}, {pid}) is {e}, expected 0 or x")
    return hits


def assemble_bijection(table: RestrictionTable) -> Bijection:
    """Read off point -> subset and certify it is a bijection respecting index."""
    assignment: dict[str, frozenset] = {}
    seen: dict[frozenset, str] = {}
    for pid, level in table.point_levels:
        J = frozenset(
            j for j in range(1, table.n + 1) if table.entries[(j, pid)] == X
        )
        if len(J) != level:
            raise WrongCount(
                f"point {pid} of index {2 * level} sees {len(J)} unit restrictions"
            )
        if J in seen:
            raise NotInjective(
                f"points {seen[J]} and {pid} both map to {sorted(J)}"
            )
        seen[J] = pid
        assignment[pid] = J
    for size in range(table.n + 1):
        for J in combinations(range(1, table.n + 1), size):
            if frozenset(J) not in seen:
                raise NotSurjective(f"subset {list(J)} is not hit")
    return Bijection(table.n, assignment)


@dataclass(frozen=True)
class Certificate:
    n: int
    level_sums: tuple[UniPoly, ...]  # index k = 0..n
    level_value_multisets: tuple[tuple[int, ...], ...]
    table: RestrictionTable
    bijection: Bijection


def model_restriction_table(n: int) -> RestrictionTable:
    """The table of the model space, computed from the ring side."""
    point_levels = []
    entries = {}
    for J in all_subsets(n):
        pid = subset_id(J)
        point_levels.append((pid, len(J)))
        for j in range(1, n + 1):
            entries[(j, pid)] = restrict_class(alpha_class({j}), J)
    return RestrictionTable(n, tuple(point_levels), entries)


def run_pipeline(data: FixedPointData) -> tuple[Certificate, Bijection]:
    """Full deduction: counts -> forced sums -> 0/1 values -> bijection."""
    validate(data)
    if not data.semifree:
        raise NotSemifree("the deduction applies to semifree data only")
    n = data.n
    if counts(data).N != predict_counts(n, 1).N:
        raise CountMismatch(
            f"counts {counts(data).N} differ from the binomial row {predict_counts(n, 1).N}"
        )
    level_sums = tuple(forced_level_sum(n, k) for k in range(n + 1))
    for k in range(n + 1):
        sq = forced_level_square_sum(n, k)
        expected = level_sums[k] * X
        if sq != expected:
            raise AssertionError("level square sums disagree with level sums")
    multisets = tuple(
        solve_value_multiset(
            math.comb(n - 1, k - 1) if k >= 1 else 0, True, math.comb(n, k)
        )
        for k in range(n + 1)
    )

    # canonical realization: within each level, points ordered by id are
    # matched with subsets in lexicographic order
    by_level: dict[int, list[str]] = {}
    for p in data.points:
        by_level.setdefault(p.negative_count, []).append(p.id)
    entries: dict[tuple[int, str], UniPoly] = {}
    point_levels = []
    for k in range(n + 1):
        pids = sorted(by_level.get(k, []))
        subsets = list(combinations(range(1, n + 1), k))
        for pid, J in zip(pids, subsets, strict=True):
            point_levels.append((pid, k))
            for j in range(1, n + 1):
                entries[(j, pid)] = X if j in J else UniPoly()
    table = RestrictionTable(n, tuple(point_levels), entries)

    # forced constraints, re-verified on the realized table
    for j in range(1, n + 1):
        for k in range(n + 1):
            if table.level_sum(j, k) != level_sums[k]:
                raise AssertionError(f"level sum ({j}, {k}) violated")
            if table.level_square_sum(j, k) != level_sums[k] * X:
                raise AssertionError(f"level square sum ({j}, {k}) violated")
    for pid, level in table.point_levels:
        if per_point_count(table, pid) != level:
            raise WrongCount(f"point {pid} has the wrong unit-restriction count")
    bijection = assemble_bijection(table)
    cert = Certificate(n, level_sums, multisets, table, bijection)
    return cert, bijection


def beta_comparison_check(n: int) -> bool:
    """Model identity behind the downward classes: for every subset J and
    generator j, a_j|_J * x^(n-|J|) equals beta_J|_{j} * x."""
    for J in all_subsets(n):
        k = len(J)
        beta = beta_class(J, n)
        for j in range(1, n + 1):
            lhs = restrict_class(alpha_class({j}), J) * UniPoly.monomial(1, n - k)
            rhs = restrict_class(beta, {j}) * X
            if lhs != rhs:
                return False
    return True
