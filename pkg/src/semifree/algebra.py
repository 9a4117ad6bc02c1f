"""Exact scalar, polynomial, rational-function and integer-matrix arithmetic.

Scalars are ``fractions.Fraction`` throughout; nothing in this package ever
touches floating point.  Polynomials are univariate in a single generator
``x`` of degree two (cohomologically), stored dense with trailing zeros
stripped.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import Inconsistent, NotPolynomial, Underdetermined

Rational = Fraction


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an integer or Fraction, got {type(c).__name__}")


class UniPoly:
    """Polynomial in the generator x with exact rational coefficients.

    Immutable; coefficient i is the coefficient of x^i.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def monomial(coeff, power: int = 0) -> "UniPoly":
        return UniPoly([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return -(self - other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Exact long division over the rationals."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            q[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
        return UniPoly(q), UniPoly(rem)

    def is_monomial(self) -> bool:
        """True if at most one coefficient is nonzero."""
        return sum(1 for c in self.coeffs if c) <= 1

    def monic(self) -> "UniPoly":
        if not self:
            return self
        return self * (1 / self.coeffs[-1])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{head}x^{i}" if i > 1 else f"{head}x")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"


X = UniPoly.monomial(1, 1)
ONE = UniPoly([1])
ZERO = UniPoly()


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over the rationals (Euclid)."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic() if a else a


class RatFunc:
    """Quotient of two polynomials, stored fully reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly = ONE):
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.coeffs[-1]
        object.__setattr__(self, "num", num * (1 / lead))
        object.__setattr__(self, "den", den * (1 / lead))

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _coerce(v) -> "RatFunc":
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, UniPoly):
            return RatFunc(v)
        if isinstance(v, (int, Fraction)):
            return RatFunc(UniPoly([v]))
        raise TypeError(f"cannot coerce {type(v).__name__} to RatFunc")

    def __eq__(self, other) -> bool:
        try:
            other = RatFunc._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-RatFunc._coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return -(self - other)

    def __mul__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def ratfunc_to_poly(f: RatFunc) -> UniPoly:
    """The polynomial a rational function reduces to, or NotPolynomial."""
    if f.den.degree > 0:
        raise NotPolynomial(f"denominator {f.den} has positive degree")
    return f.num


class IntMatrix:
    """Rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = [tuple(int(e) for e in row) for row in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]) if rows else 0)

    def __setattr__(self, *args):
        raise AttributeError("IntMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]!r})"


def moment_matrix(num_rows: int, num_cols: int) -> IntMatrix:
    """The power matrix with entry (i, j) = j**i; 0**0 counts as 1."""
    if num_rows < 1 or num_cols < 1:
        raise ValueError("matrix dimensions must be positive")
    return IntMatrix([[j**i for j in range(num_cols)] for i in range(num_rows)])


def solve_exact(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction]:
    """Solve a linear system exactly; requires a unique solution.

    Raises Inconsistent if no solution exists, Underdetermined if the
    solution is not unique.
    """
    m = [[_as_fraction(e) for e in row] + [_as_fraction(b)]
         for row, b in zip(rows, rhs, strict=True)]
    ncols = len(m[0]) - 1 if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][-1]:
            raise Inconsistent("system has no solution")
    if len(pivots) < ncols:
        raise Underdetermined("system has a positive-dimensional solution set")
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = m[i][-1]
    return sol


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    m = [[_as_fraction(e) for e in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [e * inv for e in m[rank]]
        for i in range(rank + 1, len(m)):
            if m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def vandermonde_kernel(n: int) -> tuple[Fraction, ...]:
    """The kernel vector of moment_matrix(n, n+1), normalized to start at 1.

    Equals ((-1)^k * C(n, k)) for k = 0..n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    v = moment_matrix(n, n + 1).entries
    # A_0 = 1 is the normalization; solve the n x n system in A_1..A_n.
    rows = [[Fraction(row[j]) for j in range(1, n + 1)] for row in v]
    rhs = [Fraction(-row[0]) for row in v]
    tail = solve_exact(rows, rhs)
    return (Fraction(1), *tail)


def vandermonde_complete(
    n: int, l: int, known: Mapping[int, Fraction | int]
) -> tuple[Fraction, ...]:
    """Complete prescribed entries to the unique kernel vector.

    Finds the length-(n+1) vector killed by moment_matrix(n-l, n+1) that
    agrees with `known` (a map index -> value with at least l+1 entries).
    """
    if not 0 <= l < n:
        raise ValueError("need 0 <= l < n")
    bad = [k for k in known if not 0 <= k <= n]
    if bad:
        raise ValueError(f"known indices out of range: {bad}")
    if len(known) < l + 1:
        raise Underdetermined(
            f"need at least {l + 1} prescribed entries, got {len(known)}"
        )
    v = moment_matrix(n - l, n + 1).entries
    unknown = [j for j in range(n + 1) if j not in known]
    rows = [[Fraction(row[j]) for j in unknown] for row in v]
    rhs = [
        -sum((_as_fraction(known[k]) * row[k] for k in known), Fraction(0))
        for row in v
    ]
    sol = solve_exact(rows, rhs)
    out = [Fraction(0)] * (n + 1)
    for k, val in known.items():
        out[k] = _as_fraction(val)
    for j, val in zip(unknown, sol):
        out[j] = val
    return tuple(out)


def smith_normal_form(m: IntMatrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors (with the divisibility chain) and rank.

    Row/column reduction by unimodular operations; only the factors are
    returned, not the transforms.
    """
    a = [list(row) for row in m.entries]
    nr, nc = m.rows, m.cols
    factors = []
    t = 0
    while t < min(nr, nc):
        # find a nonzero pivot in the trailing submatrix
        pos = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pos = (i, j)
        if pos is None:
            break
        i0, j0 = pos
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            # clear column t
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:  # remainder smaller than pivot: swap and redo
                        a[t], a[i] = a[i], a[t]
            if any(a[i][t] for i in range(t + 1, nr)):
                continue
            # clear row t
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
            if any(a[t][j] for j in range(t + 1, nc)) or any(
                a[i][t] for i in range(t + 1, nr)
            ):
                continue
            # pivot must divide the rest of the submatrix
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        factors.append(abs(a[t][t]))
        t += 1
    return tuple(factors), len(factors)
