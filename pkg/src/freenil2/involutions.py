"""Involutions in GL(n, Z): eigenlattices, canonical bases, square roots.

For an involution F the fixed sublattice A+ = ker(F - I) and the negated
sublattice A- = ker(F + I) are saturated summands with ranks adding up to n,
but their direct sum can sit in Z^n with index 2^s > 1.  That defect s is a
conjugacy invariant; it vanishes exactly when F is diagonalizable over Z, and
in general F admits a basis on which it acts by fixing vectors, negating
vectors, and swapping pairs - the canonical form computed here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CanonicalizationPostconditionFailed,
    NotDiagonalizable,
    NotInvolution,
    OddNegativeRank,
)
from .report import ProbeResult
from .zlinalg import (
    IntMatrix,
    LatticeBasis,
    _mul_rows,
    _smith_rows,
    _unimodular_inverse_rows,
    direct_complement,
    kernel_summand_basis,
)

# The two noncentral involution classes of GL(2, Z) up to conjugacy, and for
# each a triple of conjugates whose product fails to square to the identity.
# These exact matrices are regression pins for the three-conjugates probe.
X_MATRIX = IntMatrix([[1, 0], [0, -1]])
X_CONJUGATE_TRIPLE = (
    IntMatrix([[1, 0], [0, -1]]),
    IntMatrix([[1, 0], [2, -1]]),
    IntMatrix([[-1, 2], [0, 1]]),
)
Y_MATRIX = IntMatrix([[0, 1], [1, 0]])
Y_CONJUGATE_TRIPLE = (
    IntMatrix([[1, 0], [1, -1]]),
    IntMatrix([[1, 0], [-1, -1]]),
    IntMatrix([[0, 1], [1, 0]]),
)


@dataclass(frozen=True)
class PlusMinusPair:
    """Saturated bases of the fixed (+) and negated (-) sublattices."""

    plus: LatticeBasis
    minus: LatticeBasis


@dataclass(frozen=True)
class InvolutionCanonicalForm:
    """A basis on which the involution acts by fix / negate / swap.

    Columns of ``basis`` are ordered: ``fixed`` fixed vectors, then
    ``negated`` negated vectors, then ``swapped`` adjacent column pairs that
    the involution exchanges.  Only the count triple is canonical; the basis
    itself is one of many valid witnesses.
    """

    basis: IntMatrix
    fixed: int
    negated: int
    swapped: int

    def block_type(self) -> tuple[int, int, int]:
        return (self.fixed, self.negated, self.swapped)

    def validate(self, f: IntMatrix) -> None:
        n = f.n
        if self.fixed + self.negated + 2 * self.swapped != n:
            raise CanonicalizationPostconditionFailed("block counts do not sum to the rank")
        if self.basis.det() not in (1, -1):
            raise CanonicalizationPostconditionFailed("canonical basis is not unimodular")
        cols = self.basis.columns()
        for k in range(self.fixed):
            if f.apply(cols[k]) != cols[k]:
                raise CanonicalizationPostconditionFailed(f"column {k} is not fixed")
        for k in range(self.fixed, self.fixed + self.negated):
            if f.apply(cols[k]) != tuple(-x for x in cols[k]):
                raise CanonicalizationPostconditionFailed(f"column {k} is not negated")
        for t in range(self.swapped):
            a = self.fixed + self.negated + 2 * t
            if f.apply(cols[a]) != cols[a + 1] or f.apply(cols[a + 1]) != cols[a]:
                raise CanonicalizationPostconditionFailed(f"columns {a},{a + 1} are not swapped")


def _require_involution(f: IntMatrix) -> None:
    if not (f * f).is_identity():
        raise NotInvolution("matrix does not square to the identity")


def plus_minus(f: IntMatrix) -> PlusMinusPair:
    """Fixed and negated sublattices; their ranks always sum to n."""
    _require_involution(f)
    identity = IntMatrix.identity(f.n)
    return PlusMinusPair(
        plus=kernel_summand_basis(f - identity),
        minus=kernel_summand_basis(f + identity),
    )


def defect(f: IntMatrix) -> int:
    """log2 of the index of A+ (+) A- in Z^n; 0 iff diagonalizable over Z."""
    pm = plus_minus(f)
    vectors = list(pm.plus.vectors) + list(pm.minus.vectors)
    if len(vectors) != f.n:
        raise NotInvolution("eigenlattice ranks do not sum to the rank")
    d = abs(IntMatrix.from_columns(vectors).det())
    s = d.bit_length() - 1
    if d != 1 << s:
        raise CanonicalizationPostconditionFailed(f"eigenlattice index {d} is not a power of 2")
    return s


def is_diagonalizable(f: IntMatrix) -> bool:
    return defect(f) == 0


def min_plus_minus_rank(f: IntMatrix) -> int:
    """min(rank A+, rank A-) of a diagonalizable involution."""
    pm = plus_minus(f)
    if defect(f) != 0:
        raise NotDiagonalizable("involution has nonzero defect")
    return min(len(pm.plus), len(pm.minus))


def _solve_in_basis(inverse_rows: list[list[int]], vec) -> list[int]:
    return [
        sum(inverse_rows[i][k] * vec[k] for k in range(len(vec)))
        for i in range(len(inverse_rows))
    ]


def canonicalize_involution(f: IntMatrix) -> InvolutionCanonicalForm:
    """Compute a fix/negate/swap basis for an involution.

    Strategy: take a basis of the fixed sublattice P and a direct complement
    R.  For r in R the vector w = F r + r lies in P.  Working in coordinates
    on P, split w over the pair-images produced so far and the remaining free
    part of P; if the free coordinates are all even, r can be corrected by
    earlier pair vectors and half of w into a negated vector, otherwise the
    same corrections normalize the free coordinates to their parities, making
    w unimodular in the free part, and (r_corrected, F r_corrected) becomes a
    swapped pair.  The parity normalization always succeeds, so no
    backtracking is needed; a full postcondition validation guards the
    construction anyway.
    """
    _require_involution(f)
    n = f.n
    plus = kernel_summand_basis(f - IntMatrix.identity(n))
    complement = direct_complement(plus)
    p0 = len(plus.vectors)

    # P-coordinates: plus_cols is n x p0; solve via a left inverse from the
    # Smith decomposition (exact because P is saturated).
    plus_cols = [[v[i] for v in plus.vectors] for i in range(n)]
    if p0:
        u_rows, _, v_rows = _smith_rows(plus_cols)
        # columns of plus_cols = U^-1 * [I; 0] * V^-1; left inverse = V * (first p0 rows of U)
        left_inv = _mul_rows(v_rows, [u_rows[i][:] for i in range(p0)])
    else:
        left_inv = []

    def to_p_coords(vec) -> list[int]:
        coords = [sum(left_inv[i][k] * vec[k] for k in range(n)) for i in range(p0)]
        rebuilt = [sum(plus_cols[i][j] * coords[j] for j in range(p0)) for i in range(n)]
        if rebuilt != list(vec):
            raise CanonicalizationPostconditionFailed("vector is not in the fixed sublattice")
        return coords

    def from_p_coords(coords) -> tuple[int, ...]:
        return tuple(sum(plus_cols[i][j] * coords[j] for j in range(p0)) for i in range(n))

    negated: list[tuple[int, ...]] = []
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    pair_s_vectors: list[tuple[int, ...]] = []
    pair_u_coords: list[list[int]] = []  # P-coordinates of each pair's w-image
    free_coords: list[list[int]] = [[1 if i == j else 0 for i in range(p0)] for j in range(p0)]

    for r in complement.vectors:
        w = tuple(x + y for x, y in zip(f.apply(r), r))
        wc = to_p_coords(w)
        k = len(pair_u_coords)
        basis_cols = [[col[i] for col in pair_u_coords + free_coords] for i in range(p0)] if p0 else []
        if p0:
            coords = _solve_in_basis(_unimodular_inverse_rows(basis_cols), wc)
        else:
            coords = []
        alpha, beta = coords[:k], coords[k:]
        # correct by earlier pair vectors: each subtraction of s_i removes u_i
        s_vec = list(r)
        for a_i, s_i in zip(alpha, pair_s_vectors):
            if a_i:
                s_vec = [x - a_i * y for x, y in zip(s_vec, s_i)]
        if all(b % 2 == 0 for b in beta):
            half = [0] * p0
            for b_j, v_j in zip(beta, free_coords):
                if b_j:
                    half = [h + (b_j // 2) * x for h, x in zip(half, v_j)]
            s_vec = [x - y for x, y in zip(s_vec, from_p_coords(half))]
            negated.append(tuple(s_vec))
        else:
            shift = [0] * p0
            for b_j, v_j in zip(beta, free_coords):
                q = b_j // 2  # parity normalization: b_j - 2q in {0, 1}
                if q:
                    shift = [h - q * x for h, x in zip(shift, v_j)]
            s_vec = [x + y for x, y in zip(s_vec, from_p_coords(shift))]
            s_tuple = tuple(s_vec)
            fs = f.apply(s_tuple)
            u_vec = tuple(x + y for x, y in zip(fs, s_tuple))
            pairs.append((s_tuple, fs))
            pair_s_vectors.append(s_tuple)
            pair_u_coords.append(to_p_coords(u_vec))
            span = LatticeBasis(p0, [tuple(c) for c in pair_u_coords], summand=True)
            free_coords = [list(v) for v in direct_complement(span).vectors]

    fixed_vectors = [from_p_coords(v) for v in free_coords]
    columns = list(fixed_vectors) + negated
    for s_vec, fs in pairs:
        columns.extend([s_vec, fs])
    form = InvolutionCanonicalForm(
        basis=IntMatrix.from_columns(columns),
        fixed=len(fixed_vectors),
        negated=len(negated),
        swapped=len(pairs),
    )
    form.validate(f)
    return form


def commuting_decomposition(f: IntMatrix, g: IntMatrix):
    """The four pairwise eigenlattice intersections of two diagonalizable
    involutions (++, +-, -+, --).

    The bases always span the rational intersections; they assemble into a
    basis of Z^n (combined determinant +-1) exactly when f and g commute.
    """
    for m in (f, g):
        _require_involution(m)
        if defect(m) != 0:
            raise NotDiagonalizable("both involutions must be diagonalizable")
    n = f.n
    identity = IntMatrix.identity(n)
    out = []
    for sf in (-1, 1):
        for sg in (-1, 1):
            # kernel of the stacked matrix [f + sf*I; g + sg*I]
            top = (f + identity if sf == 1 else f - identity).to_lists()
            bottom = (g + identity if sg == 1 else g - identity).to_lists()
            _, d, v = _smith_rows(top + bottom)
            vectors = [
                tuple(v[i][j] for i in range(n)) for j in range(n) if d[j][j] == 0
            ]
            out.append(LatticeBasis(n, vectors, summand=True))
    # order: ++, +-, -+, -- (sf == -1 selects ker(f - I) = A+)
    plus_plus, plus_minus_, minus_plus, minus_minus = out
    return plus_plus, plus_minus_, minus_plus, minus_minus


def is_direct_sum(bases, n: int) -> bool:
    """Whether the concatenated bases form a basis of Z^n."""
    vectors = [v for b in bases for v in b.vectors]
    if len(vectors) != n:
        return False
    return IntMatrix.from_columns(vectors).det() in (1, -1)


def sqrt_of_involution(f: IntMatrix) -> IntMatrix:
    """A matrix H with H^2 = F, for diagonalizable F with even negated rank.

    H is the identity on the fixed part and a quarter-turn on each pair of
    negated basis vectors, conjugated back to the standard basis.
    """
    pm = plus_minus(f)
    if defect(f) != 0:
        raise NotDiagonalizable("involution has nonzero defect")
    m = len(pm.minus)
    if m % 2 != 0:
        raise OddNegativeRank(f"negated rank {m} is odd")
    n = f.n
    p = len(pm.plus)
    basis = IntMatrix.from_columns(list(pm.plus.vectors) + list(pm.minus.vectors))
    block = [[0] * n for _ in range(n)]
    for i in range(p):
        block[i][i] = 1
    for t in range(m // 2):
        a = p + 2 * t
        block[a + 1][a] = 1
        block[a][a + 1] = -1
    h = basis * IntMatrix(block) * IntMatrix(_unimodular_inverse_rows(basis.to_lists()))
    if not (h * h) == f:
        raise CanonicalizationPostconditionFailed("square root construction failed")
    return h


def order_three_product_pair(n: int) -> tuple[IntMatrix, IntMatrix]:
    """Two involutions whose product has order exactly three.

    They act on the first two coordinates by (u, v) -> (-v, -u) and
    (u, v) -> (u + v, -v) respectively, and fix the rest.
    """
    if n < 2:
        raise ValueError("need rank >= 2")
    f1 = [[0] * n for _ in range(n)]
    f2 = [[0] * n for _ in range(n)]
    f1[0][1] = f1[1][0] = -1
    f2[0][0] = f2[1][0] = 1
    f2[1][1] = -1
    for k in range(2, n):
        f1[k][k] = 1
        f2[k][k] = 1
    return IntMatrix(f1), IntMatrix(f2)


# ---------------------------------------------------------------------------
# three-conjugates probe
# ---------------------------------------------------------------------------

def _random_unimodular_word(rng, n: int, length: int) -> tuple[IntMatrix, IntMatrix]:
    """Product of random elementary/permutation/sign generators and its
    inverse, built together so no inversion is ever needed."""
    m = IntMatrix.identity(n)
    m_inv = IntMatrix.identity(n)
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0 and n >= 2:  # transvection: column j += e * column i
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            e = rng.choice((1, -1))
            gen = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            gen[i][j] = e
            inv = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            inv[i][j] = -e
        elif kind == 1:  # swap two basis vectors
            i = rng.randrange(n)
            j = rng.randrange(n - 1)
            if j >= i:
                j += 1
            gen = [[0] * n for _ in range(n)]
            for a in range(n):
                gen[a][a] = 1
            gen[i][i] = gen[j][j] = 0
            gen[i][j] = gen[j][i] = 1
            inv = [row[:] for row in gen]
        else:  # sign flip
            i = rng.randrange(n)
            gen = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            gen[i][i] = -1
            inv = [row[:] for row in gen]
        m = m * IntMatrix(gen)
        m_inv = IntMatrix(inv) * m_inv
    return m, m_inv


def _probe_matrix(f: IntMatrix, trials: int, seed: int, word_length: int,
                  candidate_triples) -> ProbeResult:
    import random

    _require_involution(f)
    n = f.n
    rng = random.Random(seed)
    ran = 0
    for triple in candidate_triples or ():
        ran += 1
        product = triple[0] * triple[1] * triple[2]
        if not (product * product).is_identity():
            return ProbeResult(
                status="counterexample",
                trials=ran,
                counterexample={
                    "conjugates": [t.to_lists() for t in triple],
                    "product": product.to_lists(),
                    "product_square": (product * product).to_lists(),
                },
            )
    for _ in range(trials):
        ran += 1
        conjugates = []
        for _ in range(3):
            c, c_inv = _random_unimodular_word(rng, n, rng.randrange(1, word_length + 1))
            conjugates.append(c * f * c_inv)
        product = conjugates[0] * conjugates[1] * conjugates[2]
        if not (product * product).is_identity():
            return ProbeResult(
                status="counterexample",
                trials=ran,
                counterexample={
                    "conjugates": [c.to_lists() for c in conjugates],
                    "product": product.to_lists(),
                    "product_square": (product * product).to_lists(),
                },
            )
    return ProbeResult(status="no_counterexample", trials=ran)


def _probe_automorphism(sigma, trials: int, seed: int, word_length: int) -> ProbeResult:
    import random

    from . import autgroup
    from .wordlang import format_automorphism

    if not autgroup.compose(sigma, sigma).is_identity():
        raise NotInvolution("automorphism does not square to the identity")
    n = sigma.rank
    rng = random.Random(seed)
    npairs = n * (n - 1) // 2
    for trial in range(trials):
        conjugates = []
        for _ in range(3):
            matrix, _ = _random_unimodular_word(rng, n, rng.randrange(1, word_length + 1))
            offsets = [
                tuple(rng.randrange(-1, 2) for _ in range(npairs)) for _ in range(n)
            ]
            c = autgroup.compose(autgroup.lift(matrix), autgroup.ia_from_offsets(n, offsets))
            conjugates.append(autgroup.compose(autgroup.compose(c, sigma), autgroup.invert(c)))
        product = autgroup.compose(autgroup.compose(conjugates[0], conjugates[1]), conjugates[2])
        if not autgroup.compose(product, product).is_identity():
            return ProbeResult(
                status="counterexample",
                trials=trial + 1,
                counterexample={
                    "conjugates": [format_automorphism(c) for c in conjugates],
                    "product": format_automorphism(product),
                },
            )
    return ProbeResult(status="no_counterexample", trials=trials)


def three_conjugates_probe(f, trials: int = 100, seed: int = 0, word_length: int = 8,
                           candidate_triples=None) -> ProbeResult:
    """Search for three conjugates of an involution whose product is not an
    involution.

    Accepts either an IntMatrix or an Automorphism.  Conjugators are sampled
    as bounded products of elementary, permutation and sign generators (plus
    small IA factors in the automorphism case).  ``candidate_triples`` are
    explicit conjugate triples tried before any random trial, used to pin the
    known X/Y regression witnesses.  When the input abelianizes to -I no
    counterexample can exist: a product of three such involutions again
    abelianizes to -I and is therefore an involution.
    """
    if isinstance(f, IntMatrix):
        return _probe_matrix(f, trials, seed, word_length, candidate_triples)
    if candidate_triples:
        raise ValueError("candidate triples are only supported for matrix probes")
    return _probe_automorphism(f, trials, seed, word_length)
