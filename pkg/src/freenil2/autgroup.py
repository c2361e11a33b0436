"""Automorphisms of the rank-n free two-step nilpotent group.

An automorphism is stored by the images of the standard generators; the
images determine everything by homomorphic extension.  A candidate list of
images defines an automorphism exactly when the abelianized matrix (column i
= exponent vector of the image of x_i) has determinant +-1.

The kernel of the abelianization map is the IA subgroup: IA automorphisms fix
the commutator subgroup pointwise and are determined by the central offsets
of their generator images, which makes the subgroup abelian and torsion-free
and gives the exact inversion and witness-solving routines below.
"""

from __future__ import annotations

import enum

from .errors import (
    IndexOutOfRank,
    InvalidAutomorphism,
    NotIA,
    NotInner,
    NotUnimodular,
    RankMismatch,
)
from .nilcore import Element, commutator, pair_index, pair_list
from .zlinalg import IntMatrix, inverse_unimodular, is_unimodular_matrix


class InvolutionKind(enum.Enum):
    SYMMETRY_MOD_IA = "SymmetryModIA"
    EXTREMAL_MOD_IA = "ExtremalModIA"
    OTHER_INVOLUTION = "OtherInvolution"
    NOT_INVOLUTION = "NotInvolution"


class Automorphism:
    """Automorphism given by generator images, validated at construction."""

    __slots__ = ("rank", "images")

    def __init__(self, images):
        images = tuple(images)
        if not images:
            raise InvalidAutomorphism("no generator images")
        rank = images[0].rank
        if any(img.rank != rank for img in images):
            raise RankMismatch("generator images have mixed ranks")
        if len(images) != rank:
            raise InvalidAutomorphism(f"expected {rank} images, got {len(images)}")
        matrix = IntMatrix.from_columns([img.abelian for img in images])
        if not is_unimodular_matrix(matrix):
            raise InvalidAutomorphism(f"abelianized determinant {matrix.det()} is not +-1")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "images", images)

    def __setattr__(self, *_):
        raise AttributeError("Automorphism is immutable")

    @classmethod
    def from_images(cls, images) -> "Automorphism":
        return cls(images)

    @classmethod
    def identity(cls, rank: int) -> "Automorphism":
        return cls([Element.generator(rank, i) for i in range(1, rank + 1)])

    def image(self, i: int) -> Element:
        """Image of the generator x_i (1-based)."""
        if not 1 <= i <= self.rank:
            raise IndexOutOfRank(f"generator index {i} outside 1..{self.rank}")
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Automorphism) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Automorphism(rank={self.rank})"

    def is_identity(self) -> bool:
        return self == Automorphism.identity(self.rank)

    def __call__(self, g: Element) -> Element:
        return apply(self, g)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        if not isinstance(other, Automorphism):
            return NotImplemented
        return compose(self, other)


def apply(sigma: Automorphism, g: Element) -> Element:
    """Image of g: substitute generator images into the normal form."""
    if sigma.rank != g.rank:
        raise RankMismatch(f"ranks {sigma.rank} and {g.rank} differ")
    result = Element.identity(g.rank)
    for img, exponent in zip(sigma.images, g.abelian):
        if exponent:
            result = result * img ** exponent
    for (i, j), exponent in zip(pair_list(g.rank), g.comm):
        if exponent:
            base = commutator(sigma.images[i - 1], sigma.images[j - 1])
            result = result * base ** exponent
    return result


def compose(sigma: Automorphism, rho: Automorphism) -> Automorphism:
    """sigma o rho (rho applied first); abelianizes to the matrix product."""
    if sigma.rank != rho.rank:
        raise RankMismatch(f"ranks {sigma.rank} and {rho.rank} differ")
    return Automorphism([apply(sigma, img) for img in rho.images])


def abelianize(sigma: Automorphism) -> IntMatrix:
    """Induced matrix on Z^n: column i is the exponent vector of image i."""
    return IntMatrix.from_columns([img.abelian for img in sigma.images])


def lift(matrix: IntMatrix) -> Automorphism:
    """The automorphism with the given abelianization and zero central parts."""
    if not is_unimodular_matrix(matrix):
        raise NotUnimodular(f"determinant {matrix.det()} is not +-1")
    return Automorphism([Element(matrix.n, matrix.column(j)) for j in range(matrix.n)])


def is_ia(sigma: Automorphism) -> bool:
    """True iff sigma induces the identity on the abelianization."""
    return abelianize(sigma).is_identity()


def ia_offsets(sigma: Automorphism) -> list[tuple[int, ...]]:
    """Central offsets of an IA automorphism: image of x_i is x_i * c_i."""
    if not is_ia(sigma):
        raise NotIA("automorphism does not abelianize to the identity")
    return [img.comm for img in sigma.images]


def ia_from_offsets(rank: int, offsets) -> Automorphism:
    """IA automorphism with the given central offset per generator image."""
    return Automorphism(
        [Element.generator(rank, i) * Element.central(rank, off)
         for i, off in enumerate(offsets, start=1)]
    )


def _invert_ia(sigma: Automorphism) -> Automorphism:
    # IA automorphisms fix the centre pointwise, so inversion just negates
    # each image's central offset.
    return ia_from_offsets(sigma.rank, [tuple(-c for c in off) for off in ia_offsets(sigma)])


def invert(sigma: Automorphism) -> Automorphism:
    """Exact inverse.

    Route through the abelianization: lift the inverse matrix, observe that
    the mismatch sigma o lift is IA, and correct by the (cheap) IA inverse.
    """
    rho0 = lift(inverse_unimodular(abelianize(sigma)))
    beta = compose(sigma, rho0)
    return compose(rho0, _invert_ia(beta))


def conjugation(a: Element) -> Automorphism:
    """The inner automorphism g -> a g a^-1; depends only on a mod centre."""
    inv_a = a.inverse()
    return Automorphism(
        [a * Element.generator(a.rank, i) * inv_a for i in range(1, a.rank + 1)]
    )


def inner_witness(alpha: Automorphism) -> Element | None:
    """Solve conjugation(a) == alpha for a with zero central part.

    The offset of image i of a conjugation is a fixed linear pattern in the
    exponent vector of the witness, so the candidate is read off from the
    offsets of the first and last images and then verified exactly; None when
    the verification fails (alpha is not inner).  The witness exponent vector
    is unique for rank >= 2.
    """
    offsets = ia_offsets(alpha)
    n = alpha.rank
    if n == 1:
        return Element.identity(1)
    y = [0] * n
    # image n has offset +y_j on each pair (j, n); image 1 has -y_k on (1, k)
    for j in range(1, n):
        y[j - 1] = offsets[n - 1][pair_index(n, j, n)]
    y[n - 1] = -offsets[0][pair_index(n, 1, n)]
    candidate = Element(n, y)
    if conjugation(candidate) == alpha:
        return candidate
    return None


def symmetry_standard(rank: int) -> Automorphism:
    """Inverts every standard generator; the canonical symmetry."""
    return Automorphism(
        [Element.generator(rank, i).inverse() for i in range(1, rank + 1)]
    )


def extremal_standard(rank: int, i: int) -> Automorphism:
    """Inverts x_i and fixes the other standard generators."""
    if not 1 <= i <= rank:
        raise IndexOutOfRank(f"generator index {i} outside 1..{rank}")
    return Automorphism(
        [Element.generator(rank, k).inverse() if k == i else Element.generator(rank, k)
         for k in range(1, rank + 1)]
    )


def basis_permutation(rank: int, perm) -> Automorphism:
    """x_i -> x_{perm[i-1]} for a bijection perm of 1..rank."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(1, rank + 1)):
        raise IndexOutOfRank(f"{perm} is not a permutation of 1..{rank}")
    return Automorphism([Element.generator(rank, p) for p in perm])


def classify_involution(sigma: Automorphism) -> InvolutionKind:
    """Coarse type of an involution, read off the abelianization.

    Symmetry-mod-IA means the induced matrix is -I (such an automorphism is
    automatically an involution); extremal-mod-IA means the induced matrix is
    an integrally diagonalizable involution negating a rank-1 summand.
    """
    from .involutions import is_diagonalizable, plus_minus

    if not compose(sigma, sigma).is_identity():
        return InvolutionKind.NOT_INVOLUTION
    matrix = abelianize(sigma)
    if matrix == -IntMatrix.identity(sigma.rank):
        return InvolutionKind.SYMMETRY_MOD_IA
    if is_diagonalizable(matrix) and len(plus_minus(matrix).minus) == 1:
        return InvolutionKind.EXTREMAL_MOD_IA
    return InvolutionKind.OTHER_INVOLUTION


def is_basis_conjugation_set(taus) -> bool:
    """True iff the witnesses of the given conjugations form a basis of the
    (free abelian) group of inner automorphisms."""
    taus = list(taus)
    witnesses = []
    for tau in taus:
        w = inner_witness(tau)
        if w is None:
            raise NotInner("an element of the candidate basis set is not a conjugation")
        witnesses.append(w)
    if not witnesses or len(witnesses) != witnesses[0].rank:
        return False
    return is_unimodular_matrix(IntMatrix.from_columns([w.abelian for w in witnesses]))


def conjugation_basis_symmetry(taus) -> Automorphism:
    """The symmetry inverting the zero-offset witnesses of a basis set of
    conjugations."""
    witnesses = [inner_witness(tau) for tau in taus]
    if any(w is None for w in witnesses):
        raise NotInner("an element of the candidate basis set is not a conjugation")
    rho = Automorphism(witnesses)
    return compose(rho, compose(symmetry_standard(rho.rank), invert(rho)))


def is_attached_symmetry(theta: Automorphism, taus) -> bool:
    """Whether theta differs from the basis-set symmetry by an IA square.

    The quotient theta_B o theta is IA exactly when theta is a symmetry
    mod IA, and it is a square in IA exactly when every central offset is
    even; the answer does not depend on the witness representatives, which
    can only change the quotient by another IA square.
    """
    theta_b = conjugation_basis_symmetry(taus)
    delta = compose(theta_b, theta)
    if not is_ia(delta):
        return False
    return all(all(c % 2 == 0 for c in off) for off in ia_offsets(delta))
