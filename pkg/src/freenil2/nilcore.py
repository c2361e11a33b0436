"""Elements of the rank-n free two-step nilpotent group, in normal form.

An element is stored as the exponent data of its unique normal form

    x1^a1 * ... * xn^an * prod_{i<j} [xi, xj]^{c_ij}

with the commutator convention [a, b] = a^-1 b^-1 a b.  Every commutator is
central, and the commutator of two elements depends only on their exponent
vectors modulo the commutator subgroup; those two facts pin down the closed
multiplication formula used here.

``reduce_word`` is an intentionally naive letter-by-letter rewriter kept free
of any shared code with the closed-form product, so the two can cross-check
each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import IndexOutOfRank, RankMismatch, ZeroVector


@lru_cache(maxsize=None)
def pair_list(rank: int) -> tuple[tuple[int, int], ...]:
    """All commutator index pairs (i, j), 1 <= i < j <= rank, lexicographic."""
    return tuple((i, j) for i in range(1, rank + 1) for j in range(i + 1, rank + 1))


@lru_cache(maxsize=None)
def _pair_pos(rank: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(pair_list(rank))}


def pair_index(rank: int, i: int, j: int) -> int:
    """Position of the basis commutator [xi, xj] (i < j) in the comm vector."""
    return _pair_pos(rank)[(i, j)]


def pair_count(rank: int) -> int:
    return rank * (rank - 1) // 2


class Element:
    """Normal form of an element; immutable and hashable.

    ``abelian`` is the generator exponent vector, ``comm`` the basis-commutator
    exponent vector indexed by ``pair_list(rank)``.  Two elements are equal iff
    their components are equal; the centre is exactly {abelian == 0}.
    """

    __slots__ = ("rank", "abelian", "comm")

    def __init__(self, rank: int, abelian, comm=None):
        abelian = tuple(int(x) for x in abelian)
        if len(abelian) != rank:
            raise ValueError(f"abelian part must have length {rank}")
        if comm is None:
            comm = (0,) * pair_count(rank)
        else:
            comm = tuple(int(x) for x in comm)
            if len(comm) != pair_count(rank):
                raise ValueError(f"comm part must have length {pair_count(rank)}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "abelian", abelian)
        object.__setattr__(self, "comm", comm)

    def __setattr__(self, *_):
        raise AttributeError("Element is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, rank: int) -> "Element":
        return cls(rank, (0,) * rank)

    @classmethod
    def generator(cls, rank: int, i: int) -> "Element":
        """The generator x_i (1-based index)."""
        if not 1 <= i <= rank:
            raise IndexOutOfRank(f"generator index {i} outside 1..{rank}")
        return cls(rank, tuple(1 if k == i - 1 else 0 for k in range(rank)))

    @classmethod
    def central(cls, rank: int, comm) -> "Element":
        return cls(rank, (0,) * rank, comm)

    # -- structure ----------------------------------------------------------

    def is_identity(self) -> bool:
        return not any(self.abelian) and not any(self.comm)

    def is_central(self) -> bool:
        return not any(self.abelian)

    def is_primitive(self) -> bool:
        """True iff the element belongs to some basis, decided on the
        abelianization: the exponent vector must have gcd 1."""
        if not any(self.abelian):
            raise ZeroVector("central elements are neither primitive nor imprimitive")
        g = 0
        for x in self.abelian:
            g = gcd(g, x)
        return g == 1

    # -- group operations ----------------------------------------------------

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank} differ")
        a, b = self.abelian, other.abelian
        abelian = tuple(x + y for x, y in zip(a, b))
        comm = list(c + d for c, d in zip(self.comm, other.comm))
        k = 0
        for i in range(self.rank):
            bi = b[i]
            for j in range(i + 1, self.rank):
                if bi:
                    comm[k] -= a[j] * bi
                k += 1
        return Element(self.rank, abelian, comm)

    def inverse(self) -> "Element":
        a = self.abelian
        comm = list(-c for c in self.comm)
        k = 0
        for i in range(self.rank):
            ai = a[i]
            for j in range(i + 1, self.rank):
                if ai:
                    comm[k] -= ai * a[j]
                k += 1
        return Element(self.rank, tuple(-x for x in a), comm)

    def __pow__(self, exponent: int) -> "Element":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Element.identity(self.rank)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate_by(self, other: "Element") -> "Element":
        return other * self * other.inverse()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.rank == other.rank
            and self.abelian == other.abelian
            and self.comm == other.comm
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.abelian, self.comm))

    def __repr__(self) -> str:
        return f"Element(rank={self.rank}, abelian={self.abelian}, comm={self.comm})"


def commutator(g: Element, h: Element) -> Element:
    """[g, h] = g^-1 h^-1 g h; central, and bilinear in the exponent vectors."""
    if g.rank != h.rank:
        raise RankMismatch(f"ranks {g.rank} and {h.rank} differ")
    a, b = g.abelian, h.abelian
    comm = []
    for i in range(g.rank):
        for j in range(i + 1, g.rank):
            comm.append(a[i] * b[j] - a[j] * b[i])
    return Element.central(g.rank, comm)


@dataclass(frozen=True)
class GeneratorWord:
    """A word in the generators: a sequence of (index, sign) letters.

    Indices are 1-based; each sign is +1 or -1 (one letter per occurrence).
    """

    rank: int
    letters: tuple[tuple[int, int], ...]

    def __init__(self, rank: int, letters):
        letters = tuple((int(i), int(s)) for i, s in letters)
        for i, s in letters:
            if not 1 <= i <= rank:
                raise IndexOutOfRank(f"letter index {i} outside 1..{rank}")
            if s not in (1, -1):
                raise ValueError("letter sign must be +1 or -1")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)


def reduce_word(word: GeneratorWord) -> Element:
    """Normal form of a word by literal symbol pushing.

    Bubble-sorts the letters into generator order; each swap of adjacent
    letters xj^s xi^t with j > i inserts the central correction
    [xi, xj]^(-s*t).  Intentionally quadratic and independent of the
    closed-form product, so it can serve as a test oracle for it.
    """
    n = word.rank
    seq = list(word.letters)
    comm = [0] * pair_count(n)
    changed = True
    while changed:
        changed = False
        for t in range(len(seq) - 1):
            (j, s), (i, u) = seq[t], seq[t + 1]
            if j > i:
                seq[t], seq[t + 1] = seq[t + 1], seq[t]
                comm[pair_index(n, i, j)] -= s * u
                changed = True
    abelian = [0] * n
    for i, s in seq:
        abelian[i - 1] += s
    return Element(n, abelian, comm)


def mul_fold(word: GeneratorWord) -> Element:
    """Fold the closed-form product over the letters of a word."""
    acc = Element.identity(word.rank)
    for i, s in word.letters:
        g = Element.generator(word.rank, i)
        acc = acc * (g if s > 0 else g.inverse())
    return acc
