"""Cohomology of the reduction at level zero.

The kernel of the surjection onto the reduced space's cohomology is spanned
by the upward classes at points above the level and the downward classes at
points below it.  Each graded piece of the quotient is a finite integer
linear-algebra problem: square-free monomials times powers of y form a basis
of the ambient degree slice, the relations are spanned by generators times
complementary-degree monomials, and Smith normal form gives free rank and
torsion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import IntMatrix, smith_normal_form
from .cube import (
    CubeClass,
    ModelData,
    alpha_class,
    all_subsets,
    beta_class,
    equivariant_chern_series,
)
from .errors import CountMismatch, NotSemifree
from .fixed_points import FixedPointData, counts, split_by_moment_sign, validate
from .localization import predict_counts


@dataclass(frozen=True)
class IdealPresentation:
    """Relations cutting out the reduced ring from Z[a_1..a_n, y].

    The rewrite relations a_i y - a_i^2 are absorbed by the square-free
    normal form of CubeClass; the two explicit families are the upward
    classes of the mu-positive subsets and the downward classes of the
    mu-negative subsets.
    """

    n: int
    positive: tuple[tuple[frozenset, CubeClass], ...]  # alpha_J, mu(J) > 0
    negative: tuple[tuple[frozenset, CubeClass], ...]  # beta_J, mu(J) < 0


@dataclass(frozen=True)
class GradedQuotient:
    """Free rank and torsion of each degree-2d piece, d = 0..len-1."""

    n: int
    ranks: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def euler_characteristic(self) -> int:
        return sum(self.ranks)


def kernel_generators(model: ModelData) -> IdealPresentation:
    """Split the subsets by moment sign and emit the two generator families."""
    model.require_regular()
    pos, neg = [], []
    for J in all_subsets(model.n):
        if model.mu(J) > 0:
            pos.append((J, alpha_class(J)))
        else:
            neg.append((J, beta_class(J, model.n)))
    return IdealPresentation(model.n, tuple(pos), tuple(neg))


def presentation_from_data(data: FixedPointData) -> IdealPresentation:
    """Relations for abstract semifree data with moment values.

    The deduction pipeline labels points by subsets; the moment sign of a
    point then decides which family its subset lands in.
    """
    from .pipeline import run_pipeline

    validate(data)
    _, bijection = run_pipeline(data)
    plus, minus = split_by_moment_sign(data)
    plus_ids = {p.id for p in plus}
    pos, neg = [], []
    for pid, J in bijection.subsets.items():
        if pid in plus_ids:
            pos.append((J, alpha_class(J)))
        else:
            neg.append((J, beta_class(J, data.n)))
    key = lambda item: (len(item[0]), tuple(sorted(item[0])))
    return IdealPresentation(data.n, tuple(sorted(pos, key=key)), tuple(sorted(neg, key=key)))


def degree_basis(n: int, d: int) -> list[tuple[tuple[int, ...], int]]:
    """Monomials (subset, y-power) of total degree d, in canonical order."""
    out = []
    for k in range(min(d, n) + 1):
        for S in combinations(range(1, n + 1), k):
            out.append((S, d - k))
    return out


def _generator_degree(cls: CubeClass) -> int:
    degs = {len(S) + m for (S, m) in cls.terms}
    if len(degs) != 1:
        raise ValueError("relation generator is not homogeneous")
    return degs.pop()


def relation_rows(pres: IdealPresentation, d: int) -> list[list[int]]:
    """Integer coefficient vectors spanning the degree-d slice of the ideal."""
    basis = degree_basis(pres.n, d)
    index = {b: i for i, b in enumerate(basis)}
    rows = []
    for _, gen in (*pres.positive, *pres.negative):
        g = _generator_degree(gen)
        if g > d:
            continue
        for mono in degree_basis(pres.n, d - g):
            product = gen * CubeClass({mono: 1})
            row = [0] * len(basis)
            for key, c in product.terms.items():
                row[index[key]] = c
            rows.append(row)
    return rows


def graded_quotient(pres: IdealPresentation, max_degree: int) -> GradedQuotient:
    """Quotient ring data in cohomological degrees 0, 2, ..., max_degree."""
    ranks = []
    torsion = []
    for d in range(max_degree // 2 + 1):
        basis = degree_basis(pres.n, d)
        rows = relation_rows(pres, d)
        if rows:
            factors, rank = smith_normal_form(IntMatrix(rows))
        else:
            factors, rank = (), 0
        ranks.append(len(basis) - rank)
        torsion.append(tuple(f for f in factors if f > 1))
    return GradedQuotient(pres.n, tuple(ranks), tuple(torsion))


def betti_by_counting(data: FixedPointData, i: int) -> int:
    """Rank of degree 2i of the reduced space, from fixed points alone.

    Counts the downward-class basis elements that survive in degree 2i:
    points below the level whose index allows an upward contribution minus
    those whose co-index already does.
    """
    validate(data)
    if not data.semifree:
        raise NotSemifree("counting formula requires semifree data")
    n = data.n
    if counts(data).N != predict_counts(n, 1).N:
        raise CountMismatch("counts are not the binomial row")
    _, minus = split_by_moment_sign(data)
    low = sum(1 for p in minus if p.negative_count <= i)
    high = sum(1 for p in minus if n - p.negative_count <= i)
    return low - high


def hermite_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form (positive pivots, reduced above)."""
    m = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    result = []
    col = 0
    while m and col < ncols:
        live = [r for r in m if any(r[col:])]
        m = live
        if not m:
            break
        if not any(r[col] for r in m):
            col += 1
            continue
        while True:
            nonzero = [r for r in m if r[col]]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda r: abs(r[col]))
            pivot = nonzero[0]
            for r in nonzero[1:]:
                q = r[col] // pivot[col]
                for j in range(ncols):
                    r[j] -= q * pivot[j]
        pivot = next(r for r in m if r[col])
        if pivot[col] < 0:
            for j in range(ncols):
                pivot[j] = -pivot[j]
        m.remove(pivot)
        for prev in result:
            if prev[col]:
                q = prev[col] // pivot[col]
                for j in range(ncols):
                    prev[j] -= q * pivot[j]
        result.append(pivot)
        col += 1
    return result


def reduce_mod_rows(vec: list[int], hnf: list[list[int]]) -> list[int]:
    """Canonical representative of vec modulo the integer row space."""
    v = list(vec)
    for row in hnf:
        col = next(j for j, e in enumerate(row) if e)
        q = v[col] // row[col]
        if q:
            for j in range(len(v)):
                v[j] -= q * row[j]
    return v


@dataclass(frozen=True)
class ReducedChernEntry:
    degree: int  # cohomological degree 2*degree_index
    basis: tuple[tuple[tuple[int, ...], int], ...]
    coefficients: tuple[int, ...]


def reduced_chern_series(
    pres: IdealPresentation, up_to: int
) -> list[ReducedChernEntry]:
    """Images of the Chern coefficient classes in the graded quotient."""
    out = []
    for i, cls in enumerate(equivariant_chern_series(pres.n, up_to), start=1):
        basis = degree_basis(pres.n, i)
        index = {b: k for k, b in enumerate(basis)}
        vec = [0] * len(basis)
        for key, c in cls.terms.items():
            vec[index[key]] = c
        hnf = hermite_rows(relation_rows(pres, i))
        reduced = reduce_mod_rows(vec, hnf)
        out.append(ReducedChernEntry(i, tuple(basis), tuple(reduced)))
    return out


@dataclass(frozen=True)
class DualityReport:
    ranks: tuple[int, ...]
    torsion_free: bool
    symmetric: bool

    @property
    def passed(self) -> bool:
        return self.torsion_free and self.symmetric


def poincare_check(q: GradedQuotient, n: int) -> DualityReport:
    """Rank symmetry rank_{2i} = rank_{2(n-1-i)} and absence of torsion."""
    top = n - 1
    ranks = tuple(q.ranks[i] if i < len(q.ranks) else 0 for i in range(top + 1))
    symmetric = all(ranks[i] == ranks[top - i] for i in range(top + 1))
    torsion_free = all(not t for t in q.torsion)
    return DualityReport(ranks, torsion_free, symmetric)
