"""Exact toolkit for finite-rank free two-step nilpotent groups.

Modules:

- ``zlinalg``: exact integer-lattice linear algebra (Smith decomposition,
  saturated kernels, direct complements, unimodular decompositions).
- ``nilcore``: group elements in normal form plus a naive rewriting oracle.
- ``wordlang``: the group-word grammar and automorphism JSON documents.
- ``autgroup``: automorphisms, the IA subgroup, conjugations, symmetries.
- ``involutions``: involutions of GL(n, Z), canonical bases, square roots.
- ``iastruct``: stabilizer splitting and primitive-element decoding.
- ``verify``: the seeded verification suite; ``cli``: the command line.
"""

from .errors import (
    CanonicalizationPostconditionFailed,
    DecompositionNotFound,
    DoesNotFixGenerator,
    FreeNil2Error,
    IndexOutOfRank,
    InvalidAutomorphism,
    NoInvertedRepresentative,
    NotASummand,
    NotAttached,
    NotDiagonalizable,
    NotIA,
    NotInner,
    NotInvolution,
    NotPrimitive,
    NotUnimodular,
    OddNegativeRank,
    ParseError,
    RankMismatch,
    ZeroVector,
)
from .nilcore import Element, GeneratorWord, commutator, reduce_word
from .zlinalg import IntMatrix, LatticeBasis
from .autgroup import Automorphism, InvolutionKind

__all__ = [
    "Element",
    "GeneratorWord",
    "IntMatrix",
    "LatticeBasis",
    "Automorphism",
    "InvolutionKind",
    "commutator",
    "reduce_word",
    "FreeNil2Error",
    "RankMismatch",
    "ZeroVector",
    "NotUnimodular",
    "NotASummand",
    "DecompositionNotFound",
    "ParseError",
    "IndexOutOfRank",
    "InvalidAutomorphism",
    "NotIA",
    "NotInner",
    "NotPrimitive",
    "NotInvolution",
    "NotDiagonalizable",
    "OddNegativeRank",
    "CanonicalizationPostconditionFailed",
    "NoInvertedRepresentative",
    "NotAttached",
    "DoesNotFixGenerator",
]

__version__ = "0.1.0"
