"""The model space: a product of n two-spheres with the diagonal circle action.

Fixed points are subsets J of {1..n}.  The equivariant cohomology ring is
Z[a_1..a_n, y] / (a_i y - a_i^2); classes are kept in normal form, so every
monomial is a square-free product of a_i's times a power of y.  Under the
rewrite a_i^2 -> a_i y, products of monomials stay monomials:

    (S1, m1) * (S2, m2) = (S1 | S2, m1 + m2 + |S1 & S2|).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import UniPoly, rational_rank
from .errors import NotInModule, ZeroIsCritical
from .fixed_points import FixedPoint, FixedPointData

Subset = frozenset  # of generator indices in 1..n
Monomial = tuple[tuple[int, ...], int]  # (sorted subset, power of y)


def _key(S, m: int) -> Monomial:
    return tuple(sorted(S)), m


class CubeClass:
    """Integer combination of square-free monomials times powers of y."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        cleaned = {}
        if terms:
            for (S, m), c in terms.items():
                if c:
                    cleaned[(tuple(sorted(S)), int(m))] = int(c)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, *args):
        raise AttributeError("CubeClass is immutable")

    @staticmethod
    def unit() -> "CubeClass":
        return CubeClass({((), 0): 1})

    @staticmethod
    def gen_a(i: int) -> "CubeClass":
        return CubeClass({((i,), 0): 1})

    @staticmethod
    def gen_y() -> "CubeClass":
        return CubeClass({((), 1): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CubeClass({((), 0): other})
        if not isinstance(other, CubeClass):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "CubeClass":
        if isinstance(other, int):
            other = CubeClass({((), 0): other})
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return CubeClass(out)

    __radd__ = __add__

    def __neg__(self) -> "CubeClass":
        return CubeClass({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "CubeClass":
        if isinstance(other, int):
            other = CubeClass({((), 0): other})
        return self + (-other)

    def __rsub__(self, other) -> "CubeClass":
        return -(self - other)

    def __mul__(self, other) -> "CubeClass":
        if isinstance(other, int):
            return CubeClass({k: c * other for k, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for (S1, m1), c1 in self.terms.items():
            s1 = frozenset(S1)
            for (S2, m2), c2 in other.terms.items():
                s2 = frozenset(S2)
                k = _key(s1 | s2, m1 + m2 + len(s1 & s2))
                out[k] = out.get(k, 0) + c1 * c2
        return CubeClass(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CubeClass":
        result = CubeClass.unit()
        for _ in range(k):
            result = result * self
        return result

    def monomials(self) -> list[tuple[Monomial, int]]:
        """Terms in normal-form order: by (degree, subset, y power)."""
        return sorted(
            self.terms.items(), key=lambda kv: (len(kv[0][0]) + kv[0][1], kv[0])
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (S, m), c in self.monomials():
            factors = [f"a{i}" for i in S]
            if m == 1:
                factors.append("y")
            elif m > 1:
                factors.append(f"y^{m}")
            body = "*".join(factors) or "1"
            if c == 1 and factors:
                parts.append(body)
            elif c == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}" if factors else str(c))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CubeClass({self.terms!r})"


def restrict_class(cls: CubeClass, J) -> UniPoly:
    """Restrict to the fixed point J: a_i -> x for i in J else 0, y -> x."""
    J = frozenset(J)
    coeffs: dict[int, int] = {}
    for (S, m), c in cls.terms.items():
        if frozenset(S) <= J:
            d = len(S) + m
            coeffs[d] = coeffs.get(d, 0) + c
    if not coeffs:
        return UniPoly()
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return UniPoly(out)


def alpha_class(J) -> CubeClass:
    """Product of a_j over j in J; restricts to x^|J| exactly at supersets of J."""
    return CubeClass({_key(J, 0): 1})


def beta_class(J, n: int) -> CubeClass:
    """Product of (y - a_j) over j not in J; supported on subsets of J."""
    comp = sorted(set(range(1, n + 1)) - set(J))
    out: dict[Monomial, int] = {}
    for size in range(len(comp) + 1):
        for T in combinations(comp, size):
            out[_key(T, len(comp) - size)] = (-1) ** size
    return CubeClass(out)


def equivariant_chern_series(n: int, up_to: int) -> list[CubeClass]:
    """Coefficients of t^1..t^up_to in the product of (1 + t(2a_i - y))."""
    coeffs = [CubeClass.unit()]
    for i in range(1, n + 1):
        factor = 2 * CubeClass.gen_a(i) - CubeClass.gen_y()
        new = [CubeClass() for _ in range(min(len(coeffs) + 1, up_to + 1))]
        for k, c in enumerate(coeffs):
            if k < len(new):
                new[k] = new[k] + c
            if k + 1 < len(new):
                new[k + 1] = new[k + 1] + c * factor
        coeffs = new
    return coeffs[1 : up_to + 1]


def all_subsets(n: int) -> list[frozenset]:
    """Subsets of {1..n}, ordered by (size, lexicographic)."""
    out = []
    for size in range(n + 1):
        out.extend(frozenset(c) for c in combinations(range(1, n + 1), size))
    return out


def subset_id(J) -> str:
    """Deterministic point id for a subset, e.g. 'p135'; 'p' for the empty set."""
    return "p" + "".join(str(i) for i in sorted(J))


@dataclass(frozen=True)
class ModelData:
    """Model parameters: half-dimension and the moment offset c, mu(J) = |J| - c."""

    n: int
    c: Fraction | None = None

    def __post_init__(self):
        if self.c is None:
            # default regular level: half-integral offset nearest the middle
            c = Fraction(self.n, 2) if self.n % 2 else Fraction(self.n, 2) + Fraction(1, 2)
            object.__setattr__(self, "c", c)
        else:
            object.__setattr__(self, "c", Fraction(self.c))

    def mu(self, J) -> Fraction:
        return Fraction(len(J)) - self.c

    def require_regular(self):
        if self.c.denominator == 1:
            raise ZeroIsCritical(f"offset {self.c} makes 0 a critical level")


def hypercube_data(n: int, with_moment: bool = False, c: Fraction | None = None) -> FixedPointData:
    """Fixed point data of the model: one point per subset.

    Tangent weight convention: -1 on sphere i when i is in J, +1 otherwise,
    so the index of J is 2|J|.
    """
    model = ModelData(n, c)
    points = []
    for J in all_subsets(n):
        weights = tuple(-1 if i in J else 1 for i in range(1, n + 1))
        mu = model.mu(J) if with_moment else None
        points.append(FixedPoint(subset_id(J), weights, mu))
    return FixedPointData(n, tuple(points))


@dataclass(frozen=True)
class RankCheckEntry:
    degree: int
    basis_size: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.rank == self.basis_size


@dataclass(frozen=True)
class RankCheckReport:
    n: int
    entries: tuple[RankCheckEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)


def injectivity_rank_check(n: int, max_n: int = 12) -> RankCheckReport:
    """Restriction to the fixed points is injective degree by degree.

    For each degree 2d <= 2n, the restrictions of the module basis elements
    alpha_J * x^(d-|J|), |J| <= d, to all 2^n fixed points must be linearly
    independent over the rationals.
    """
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured bound {max_n}")
    subsets = all_subsets(n)
    entries = []
    for d in range(n + 1):
        basis = [J for J in subsets if len(J) <= d]
        rows = []
        for J in basis:
            # alpha_J * x^(d-|J|) restricts to x^d at supersets of J, else 0
            rows.append([1 if J <= Jp else 0 for Jp in subsets])
        rank = rational_rank(rows)
        entries.append(RankCheckEntry(d, len(basis), rank))
    return RankCheckReport(n, tuple(entries))


def express_in_basis(cls: CubeClass, n: int) -> dict[frozenset, UniPoly]:
    """Expand a class over the alpha basis with polynomial coefficients.

    Triangular solve in the subset order: after subtracting the
    contributions of all strictly smaller subsets, restriction at J reads
    off the coefficient of alpha_J times x^|J|.
    """
    residual = cls
    out: dict[frozenset, UniPoly] = {}
    for J in all_subsets(n):
        r = restrict_class(residual, J)
        if not r:
            continue
        k = len(J)
        if any(r.coefficient(i) for i in range(k)):
            raise NotInModule(
                f"residual restriction {r} at {sorted(J)} has terms below x^{k}"
            )
        coeff_terms = {}
        poly_coeffs = []
        for i in range(k, r.degree + 1):
            c = r.coefficient(i)
            if c.denominator != 1:
                raise NotInModule(f"non-integral coefficient {c} at {sorted(J)}")
            poly_coeffs.append(c)
            if c:
                # x acts through y: p(x) * alpha_J has monomials (J, power)
                coeff_terms[_key(J, i - k)] = int(c)
        out[J] = UniPoly(poly_coeffs)
        residual = residual - CubeClass(coeff_terms)
    if residual:
        raise NotInModule(f"nonzero residual {residual} after triangular solve")
    return out
