import random

import pytest

from freenil2 import autgroup as ag
from freenil2.autgroup import Automorphism, InvolutionKind
from freenil2.errors import (
    IndexOutOfRank,
    InvalidAutomorphism,
    NotIA,
    NotInner,
    NotUnimodular,
    RankMismatch,
)
from freenil2.nilcore import Element, commutator
from freenil2.verify import (
    _brute_force_witness,
    _random_automorphism,
    _random_element,
    _random_ia,
    _random_unimodular,
)
from freenil2.wordlang import parse_element
from freenil2.zlinalg import IntMatrix


def elem(text, rank):
    return parse_element(text, rank)


class TestConstruction:
    def test_identity(self):
        sigma = Automorphism.from_images(
            [Element.generator(3, i) for i in (1, 2, 3)]
        )
        assert sigma == Automorphism.identity(3)

    def test_ia_images_accepted(self):
        sigma = Automorphism.from_images(
            [elem("x1*[x2,x3]", 3), elem("x2", 3), elem("x3", 3)]
        )
        assert ag.is_ia(sigma)

    def test_determinant_two_rejected(self):
        with pytest.raises(InvalidAutomorphism):
            Automorphism.from_images([elem("x1^2", 2), elem("x2", 2)])

    def test_mixed_ranks_rejected(self):
        with pytest.raises(RankMismatch):
            Automorphism.from_images([Element.generator(2, 1), Element.generator(3, 2)])


class TestApply:
    def test_identity(self):
        g = Element(2, (1, -2), (3,))
        assert ag.apply(Automorphism.identity(2), g) == g

    def test_symmetry_fixes_centre(self):
        # all generators inverted: abelian part negated, comm part untouched
        theta = ag.symmetry_standard(3)
        g = Element(3, (2, -1, 3), (1, -2, 5))
        assert ag.apply(theta, g) == Element(3, (-2, 1, -3), (1, -2, 5))

    def test_conjugation_image(self):
        tau = ag.conjugation(Element.generator(2, 1))
        assert ag.apply(tau, Element.generator(2, 2)) == elem("x2*[x1,x2]", 2)

    def test_homomorphism_property(self):
        rng = random.Random(2)
        for _ in range(40):
            n = rng.randint(2, 4)
            sigma = _random_automorphism(rng, n)
            g, h = _random_element(rng, n), _random_element(rng, n)
            assert ag.apply(sigma, g * h) == ag.apply(sigma, g) * ag.apply(sigma, h)
            assert ag.apply(sigma, commutator(g, h)) == commutator(
                ag.apply(sigma, g), ag.apply(sigma, h)
            )


class TestComposeInvert:
    def test_invert_identity_and_symmetry(self):
        assert ag.invert(Automorphism.identity(2)) == Automorphism.identity(2)
        theta = ag.symmetry_standard(2)
        assert ag.invert(theta) == theta

    def test_invert_shear(self):
        sigma = Automorphism.from_images([elem("x1*x2", 2), elem("x2", 2)])
        inverse = ag.invert(sigma)
        assert ag.compose(sigma, inverse) == Automorphism.identity(2)
        assert ag.compose(inverse, sigma) == Automorphism.identity(2)
        assert inverse.image(1).abelian == (1, -1)

    def test_random_inverses(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(2, 4)
            sigma = _random_automorphism(rng, n)
            assert ag.compose(sigma, ag.invert(sigma)).is_identity()
            assert ag.compose(ag.invert(sigma), sigma).is_identity()

    def test_abelianize_functorial(self):
        rng = random.Random(4)
        for _ in range(40):
            n = rng.randint(2, 4)
            sigma, rho = _random_automorphism(rng, n), _random_automorphism(rng, n)
            assert ag.abelianize(ag.compose(sigma, rho)) == (
                ag.abelianize(sigma) * ag.abelianize(rho)
            )


class TestAbelianizeLift:
    def test_examples(self):
        assert ag.abelianize(Automorphism.identity(2)) == IntMatrix.identity(2)
        assert ag.abelianize(ag.symmetry_standard(2)) == -IntMatrix.identity(2)
        sigma = Automorphism.from_images([elem("x1*x2", 2), elem("x2", 2)])
        assert ag.abelianize(sigma) == IntMatrix([[1, 0], [1, 1]])

    def test_lift_examples(self):
        assert ag.lift(IntMatrix.identity(2)) == Automorphism.identity(2)
        swap = ag.lift(IntMatrix([[0, 1], [1, 0]]))
        assert swap.image(1) == Element.generator(2, 2)
        with pytest.raises(NotUnimodular):
            ag.lift(IntMatrix([[2, 0], [0, 1]]))

    def test_lift_is_section(self):
        rng = random.Random(5)
        for _ in range(40):
            n = rng.randint(2, 5)
            m = _random_unimodular(rng, n)
            assert ag.abelianize(ag.lift(m)) == m

    def test_is_ia(self):
        assert ag.is_ia(Automorphism.identity(3))
        assert ag.is_ia(
            Automorphism.from_images([elem("x1*[x2,x3]", 3), elem("x2", 3), elem("x3", 3)])
        )
        assert not ag.is_ia(ag.symmetry_standard(2))


class TestIAStructure:
    def test_ia_is_abelian_and_torsion_free(self):
        rng = random.Random(6)
        for _ in range(30):
            n = rng.randint(2, 4)
            alpha, beta = _random_ia(rng, n), _random_ia(rng, n)
            assert ag.compose(alpha, beta) == ag.compose(beta, alpha)
            if not alpha.is_identity():
                power = alpha
                for _ in range(5):
                    power = ag.compose(power, alpha)
                    assert not power.is_identity()

    def test_symmetry_conjugation_inverts_ia(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randint(2, 4)
            theta = ag.compose(ag.symmetry_standard(n), _random_ia(rng, n))
            alpha = _random_ia(rng, n)
            assert ag.compose(theta, ag.compose(alpha, theta)) == ag.invert(alpha)
            product = ag.compose(theta, alpha)
            assert ag.compose(product, product).is_identity()

    def test_two_involution_factorization(self):
        rng = random.Random(8)
        for _ in range(30):
            n = rng.randint(2, 4)
            alpha = _random_ia(rng, n)
            theta = ag.symmetry_standard(n)
            second = ag.compose(theta, alpha)
            assert ag.compose(theta, second) == alpha
            assert ag.abelianize(second) == -IntMatrix.identity(n)
            assert ag.compose(second, second).is_identity()


class TestConjugation:
    def test_central_gives_identity(self):
        assert ag.conjugation(Element.central(2, (7,))).is_identity()

    def test_homomorphism(self):
        rng = random.Random(9)
        for _ in range(30):
            n = rng.randint(2, 4)
            g, h = _random_element(rng, n), _random_element(rng, n)
            assert ag.compose(ag.conjugation(g), ag.conjugation(h)) == ag.conjugation(g * h)

    def test_kernel_is_centre(self):
        assert not ag.conjugation(Element.generator(2, 1)).is_identity()
        assert ag.conjugation(Element.central(3, (1, 2, 3))).is_identity()

    def test_conjugation_is_ia(self):
        assert ag.is_ia(ag.conjugation(Element(3, (1, -2, 3), (0, 1, 0))))


class TestInnerWitness:
    def test_identity(self):
        witness = ag.inner_witness(Automorphism.identity(3))
        assert witness is not None and witness.is_central()

    def test_solvable_example(self):
        alpha = Automorphism.from_images([elem("x1*[x1,x2]", 2), elem("x2", 2)])
        witness = ag.inner_witness(alpha)
        assert witness is not None
        assert witness.abelian == (0, -1)
        assert ag.conjugation(witness) == alpha

    def test_unsolvable_example(self):
        alpha = Automorphism.from_images(
            [elem("x1*[x2,x3]", 3), elem("x2", 3), elem("x3", 3)]
        )
        assert ag.inner_witness(alpha) is None

    def test_not_ia_rejected(self):
        with pytest.raises(NotIA):
            ag.inner_witness(ag.symmetry_standard(2))

    def test_against_brute_force(self):
        rng = random.Random(10)
        for _ in range(60):
            n = rng.randint(2, 4)
            if rng.random() < 0.5:
                alpha = ag.conjugation(_random_element(rng, n, bound=2))
            else:
                alpha = _random_ia(rng, n, 1)
            solved = ag.inner_witness(alpha)
            brute = _brute_force_witness(alpha)
            assert (solved is None) == (brute is None)
            if solved is not None:
                assert solved.abelian == brute.abelian
                assert ag.conjugation(solved) == alpha


class TestStandardInvolutions:
    def test_symmetry_squares_to_identity(self):
        theta = ag.symmetry_standard(2)
        assert ag.compose(theta, theta).is_identity()

    def test_extremal_abelianization(self):
        phi = ag.extremal_standard(3, 1)
        assert ag.abelianize(phi) == IntMatrix([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
        with pytest.raises(IndexOutOfRank):
            ag.extremal_standard(3, 4)

    def test_permutation_commutes_with_symmetry(self):
        pi = ag.basis_permutation(3, (2, 3, 1))
        theta = ag.symmetry_standard(3)
        assert ag.compose(pi, theta) == ag.compose(theta, pi)
        with pytest.raises(IndexOutOfRank):
            ag.basis_permutation(3, (1, 1, 2))


class TestClassifyInvolution:
    def test_symmetry_mod_ia(self):
        rng = random.Random(11)
        for _ in range(20):
            n = rng.randint(2, 4)
            theta = ag.compose(ag.symmetry_standard(n), _random_ia(rng, n))
            assert ag.compose(theta, theta).is_identity()
            assert ag.classify_involution(theta) is InvolutionKind.SYMMETRY_MOD_IA

    def test_extremal(self):
        assert ag.classify_involution(ag.extremal_standard(3, 1)) is (
            InvolutionKind.EXTREMAL_MOD_IA
        )

    def test_swap_is_other(self):
        swap = ag.lift(IntMatrix([[0, 1], [1, 0]]))
        assert ag.classify_involution(swap) is InvolutionKind.OTHER_INVOLUTION

    def test_not_involution(self):
        shear = Automorphism.from_images([elem("x1*x2", 2), elem("x2", 2)])
        assert ag.classify_involution(shear) is InvolutionKind.NOT_INVOLUTION


class TestBasisConjugationSet:
    def standard(self, n):
        return [ag.conjugation(Element.generator(n, i)) for i in range(1, n + 1)]

    def test_standard_set(self):
        assert ag.is_basis_conjugation_set(self.standard(3))

    def test_triangular_set(self):
        taus = [
            ag.conjugation(Element.generator(2, 1)),
            ag.conjugation(Element(2, (1, 1))),
        ]
        assert ag.is_basis_conjugation_set(taus)

    def test_index_two_rejected(self):
        # witnesses (1, 0) and (2, 2) span an index-2 subgroup
        taus = [
            ag.conjugation(Element.generator(2, 1)),
            ag.conjugation(Element(2, (2, 2))),
        ]
        assert not ag.is_basis_conjugation_set(taus)

    def test_non_inner_rejected(self):
        alpha = Automorphism.from_images(
            [elem("x1*[x2,x3]", 3), elem("x2", 3), elem("x3", 3)]
        )
        with pytest.raises(NotInner):
            ag.is_basis_conjugation_set([alpha] + self.standard(3)[1:])

    def test_wrong_count(self):
        assert not ag.is_basis_conjugation_set(self.standard(3)[:2])


class TestAttachedSymmetry:
    def standard(self, n):
        return [ag.conjugation(Element.generator(n, i)) for i in range(1, n + 1)]

    def test_standard_symmetry_attached(self):
        assert ag.is_attached_symmetry(ag.symmetry_standard(2), self.standard(2))

    def test_ia_conjugate_attached(self):
        rng = random.Random(12)
        for _ in range(20):
            n = rng.randint(2, 4)
            beta = _random_ia(rng, n)
            theta = ag.compose(
                ag.invert(beta), ag.compose(ag.symmetry_standard(n), beta)
            )
            # conjugating by an IA automorphism is multiplication by its square
            assert theta == ag.compose(
                ag.symmetry_standard(n), ag.compose(beta, beta)
            )
            assert ag.is_attached_symmetry(theta, self.standard(n))

    def test_odd_offset_not_attached(self):
        gamma = Automorphism.from_images([elem("x1*[x1,x2]", 2), elem("x2", 2)])
        theta = ag.compose(ag.symmetry_standard(2), gamma)
        assert not ag.is_attached_symmetry(theta, self.standard(2))

    def test_representative_independence(self):
        # same conjugations coded by central-shifted witnesses give same answer
        n = 3
        taus = self.standard(n)
        shifted = [
            ag.conjugation(Element.generator(n, i) * Element.central(n, (1, 0, 1)))
            for i in range(1, n + 1)
        ]
        assert all(t == s for t, s in zip(taus, shifted))
        theta = ag.symmetry_standard(n)
        assert ag.is_attached_symmetry(theta, shifted)


class TestCentreless:
    def test_witness_search(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(2, 4)
            sigma = _random_automorphism(rng, n)
            if sigma.is_identity():
                continue
            elementary = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            elementary[0][1] = 1
            probes = [ag.conjugation(Element.generator(n, i)) for i in range(1, n + 1)]
            probes += [
                ag.symmetry_standard(n),
                ag.extremal_standard(n, 1),
                ag.lift(IntMatrix(elementary)),
            ]
            assert any(
                ag.compose(sigma, probe) != ag.compose(probe, sigma) for probe in probes
            )
