"""Exact integer-lattice linear algebra on Z^n.

All arithmetic uses Python's arbitrary-precision integers; nothing here ever
rounds or wraps.  One normal-form engine (the Smith decomposition) drives the
lattice operations: saturated kernels, direct complements, summand tests and
unimodular inverses are all read off from it.

Matrices act on column vectors; column j of a matrix is the image of the j-th
standard basis vector.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import gcd

from .errors import NotASummand, NotUnimodular, ZeroVector, DecompositionNotFound


# ---------------------------------------------------------------------------
# raw row-list helpers (module-internal; public API wraps them in IntMatrix)
# ---------------------------------------------------------------------------

def _identity_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mul_rows(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows_b = len(b)
    cols_b = len(b[0])
    return [
        [sum(ra[k] * b[k][j] for k in range(rows_b)) for j in range(cols_b)]
        for ra in a
    ]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _det_rows(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _rational_rank(rows: list[list[int]]) -> int:
    """Rank over Q, via integer row elimination (rows may be rectangular)."""
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        x = a[rank][col]
        for i in range(rank + 1, m):
            y = a[i][col]
            if y != 0:
                g = gcd(x, y)
                cx, cy = x // g, y // g
                a[i] = [cx * u - cy * v for u, v in zip(a[i], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def _smith_rows(rows: list[list[int]]):
    """Smith decomposition of an m x n integer matrix.

    Returns (U, D, V) as row-lists with U (m x m) and V (n x n) unimodular,
    U @ A @ V = D, D diagonal with nonnegative entries d1 | d2 | ...
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) for r in rows]
    u = _identity_rows(m)
    v = _identity_rows(n)
    t = 0
    limit = min(m, n)
    while t < limit:
        # smallest nonzero entry of the trailing block becomes the pivot
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                val = a[i][j]
                if val != 0 and (best is None or abs(val) < best):
                    best = abs(val)
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            for row in a:
                row[t], row[j0] = row[j0], row[t]
            for row in v:
                row[t], row[j0] = row[j0], row[t]
        while True:
            for i in range(m):
                if i != t and a[i][t] != 0:
                    p, q = a[t][t], a[i][t]
                    if q % p == 0:
                        f = q // p
                        a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                        u[i] = [x - f * y for x, y in zip(u[i], u[t])]
                    else:
                        g, x, y = _xgcd(p, q)
                        pp, qq = p // g, q // g
                        at, ai = a[t], a[i]
                        for k in range(n):
                            rt, ri = at[k], ai[k]
                            at[k] = x * rt + y * ri
                            ai[k] = -qq * rt + pp * ri
                        ut, ui = u[t], u[i]
                        for k in range(m):
                            rt, ri = ut[k], ui[k]
                            ut[k] = x * rt + y * ri
                            ui[k] = -qq * rt + pp * ri
            for j in range(n):
                if j != t and a[t][j] != 0:
                    p, q = a[t][t], a[t][j]
                    if q % p == 0:
                        f = q // p
                        for row in a:
                            row[j] -= f * row[t]
                        for row in v:
                            row[j] -= f * row[t]
                    else:
                        g, x, y = _xgcd(p, q)
                        pp, qq = p // g, q // g
                        for row in a:
                            ct, cj = row[t], row[j]
                            row[t] = x * ct + y * cj
                            row[j] = -qq * ct + pp * cj
                        for row in v:
                            ct, cj = row[t], row[j]
                            row[t] = x * ct + y * cj
                            row[j] = -qq * ct + pp * cj
            col_clear = all(a[i][t] == 0 for i in range(m) if i != t)
            row_clear = all(a[t][j] == 0 for j in range(n) if j != t)
            if col_clear and row_clear:
                break
        # divisibility chain: pivot must divide the whole trailing block
        d = a[t][t]
        offender = None
        for i in range(t + 1, m):
            if any(a[i][j] % d != 0 for j in range(t + 1, n)):
                offender = i
                break
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
            continue
        t += 1
    for k in range(limit):
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]
    return u, a, v


def _unimodular_inverse_rows(rows: list[list[int]]) -> list[list[int]]:
    u, d, v = _smith_rows(rows)
    n = len(rows)
    if any(d[i][i] != 1 for i in range(n)):
        raise NotUnimodular(f"matrix has elementary divisors {[d[i][i] for i in range(n)]}")
    return _mul_rows(v, u)


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

class IntMatrix:
    """Square integer matrix with exact arithmetic.

    Immutable; rows are stored as a tuple of tuples of ints.  Column j is the
    image of the j-th standard basis vector.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise ValueError("matrix rank must be >= 1")
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(_identity_rows(n))

    @classmethod
    def from_columns(cls, cols) -> "IntMatrix":
        cols = [tuple(c) for c in cols]
        return cls([[col[i] for col in cols] for i in range(len(cols))])

    @classmethod
    def from_json(cls, text: str) -> "IntMatrix":
        """Parse the interchange format: a JSON array of rows of integers.

        Decimal strings are accepted for entries too large to write as JSON
        numbers comfortably.
        """
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("expected a JSON array of rows")
        return cls([[int(x) for x in row] for row in data])

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]

    def apply(self, vec) -> tuple[int, ...]:
        vec = tuple(vec)
        if len(vec) != self.n:
            raise ValueError("vector length does not match matrix rank")
        return tuple(sum(row[j] * vec[j] for j in range(self.n)) for row in self.rows)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("matrix ranks differ")
        return IntMatrix(_mul_rows(self.to_lists(), other.to_lists()))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return IntMatrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return IntMatrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self.rows])

    def det(self) -> int:
        return _det_rows(self.to_lists())

    def is_identity(self) -> bool:
        return all(self.rows[i][j] == (1 if i == j else 0) for i in range(self.n) for j in range(self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"


@dataclass(frozen=True)
class LatticeBasis:
    """A list of independent integer vectors in Z^rank.

    When ``summand`` is set the spanned subgroup is required to be a direct
    summand of Z^rank (saturated); this is validated at construction time.
    """

    rank: int
    vectors: tuple[tuple[int, ...], ...]
    summand: bool = False

    def __init__(self, rank: int, vectors, summand: bool = False):
        vectors = tuple(tuple(int(x) for x in v) for v in vectors)
        if any(len(v) != rank for v in vectors):
            raise ValueError("vector length does not match ambient rank")
        if len(vectors) > rank:
            raise ValueError("more vectors than the ambient rank")
        if vectors and _rational_rank([list(v) for v in vectors]) != len(vectors):
            raise ValueError("vectors are not linearly independent")
        if summand and vectors:
            cols = [[v[i] for v in vectors] for i in range(rank)]
            _, d, _ = _smith_rows(cols)
            divisors = [d[i][i] for i in range(len(vectors))]
            if any(di != 1 for di in divisors):
                raise NotASummand(f"elementary divisors {divisors} are not all 1")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "summand", summand)

    def __len__(self) -> int:
        return len(self.vectors)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def smith_decompose(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U, V unimodular, U*M*V = D diagonal, d1 | d2 | ..."""
    u, d, v = _smith_rows(m.to_lists())
    return IntMatrix(u), IntMatrix(d), IntMatrix(v)


def kernel_summand_basis(m: IntMatrix) -> LatticeBasis:
    """Basis of ker(M), which is automatically a saturated direct summand.

    Empty when the kernel is trivial; the full standard basis for M = 0.
    """
    _, d, v = _smith_rows(m.to_lists())
    n = m.n
    vectors = [tuple(v[i][j] for i in range(n)) for j in range(n) if d[j][j] == 0]
    return LatticeBasis(n, vectors, summand=True)


def direct_complement(basis: LatticeBasis) -> LatticeBasis:
    """A basis C with basis + C a basis of Z^n (det +-1).

    The returned complement is *some* valid complement; callers must not rely
    on a canonical choice.
    """
    if not basis.summand:
        raise NotASummand("input basis is not flagged as a summand")
    n = basis.rank
    k = len(basis.vectors)
    if k == 0:
        return LatticeBasis(n, [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)], summand=True)
    if k == n:
        return LatticeBasis(n, [], summand=True)
    cols = [[v[i] for v in basis.vectors] for i in range(n)]
    u, d, _ = _smith_rows(cols)
    if any(d[i][i] != 1 for i in range(k)):
        raise NotASummand("basis does not span a direct summand")
    u_inv = _unimodular_inverse_rows(u)
    vectors = [tuple(u_inv[i][j] for i in range(n)) for j in range(k, n)]
    return LatticeBasis(n, vectors, summand=True)


def is_unimodular_vector(vec) -> bool:
    """True iff the gcd of the entries is 1 (vector lies in some basis)."""
    vec = tuple(int(x) for x in vec)
    if all(x == 0 for x in vec):
        raise ZeroVector("the zero vector is not unimodular nor imprimitive")
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g == 1


def is_unimodular_matrix(m: IntMatrix) -> bool:
    return m.det() in (1, -1)


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a determinant +-1 matrix (integer entries)."""
    return IntMatrix(_unimodular_inverse_rows(m.to_lists()))


def _shell(n: int, radius: int):
    """Vectors in [-radius, radius]^n with max-norm exactly radius, in a
    fixed deterministic order."""
    for cand in itertools.product(range(-radius, radius + 1), repeat=n):
        if max(abs(x) for x in cand) == radius:
            yield cand


def _gcd_vec(vec) -> int:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g


def decompose_into_unimodular(vec, max_parts: int, radius: int = 8) -> list[tuple[int, ...]]:
    """Write vec as a sum of at most max_parts unimodular vectors.

    Bounded exhaustive search: first summands are enumerated over max-norm
    shells of increasing radius.  Raises DecompositionNotFound when the search
    space is exhausted -- at finite rank the two-summand claim is existential,
    so exhaustion is reported distinctly rather than treated as a bug.
    """
    vec = tuple(int(x) for x in vec)
    n = len(vec)
    if n < 2:
        raise ValueError("decomposition requires ambient rank >= 2")
    if max_parts not in (2, 3):
        raise ValueError("max_parts must be 2 or 3")
    if any(vec) and _gcd_vec(vec) == 1:
        return [vec]

    def two_parts(target):
        for rad in range(1, radius + 1):
            for u in _shell(n, rad):
                if _gcd_vec(u) != 1:
                    continue
                w = tuple(t - x for t, x in zip(target, u))
                if any(w) and _gcd_vec(w) == 1:
                    return [u, w]
        return None

    result = two_parts(vec)
    if result is None and max_parts == 3:
        for rad in range(1, radius + 1):
            for u in _shell(n, rad):
                if _gcd_vec(u) != 1:
                    continue
                rest = tuple(t - x for t, x in zip(vec, u))
                if not any(rest):
                    continue
                tail = two_parts(rest)
                if tail is not None:
                    return [u] + tail
    if result is None:
        raise DecompositionNotFound(
            f"no decomposition of {vec} into <= {max_parts} unimodular parts within radius {radius}"
        )
    return result
