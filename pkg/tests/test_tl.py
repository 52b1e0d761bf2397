"""Temperley-Lieb backend: frozen oracle values and algebra axioms."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from oracles import noncrossing_matchings
from tlcob import linalg
from tlcob.tl import (
    DualTLElement,
    TLBackend,
    TLElement,
    TLDiagram,
    cup_cap_diagram,
    diagrams,
    dimension,
    identity_diagram,
    star,
    star_diagram,
)


def E2() -> TLElement:
    """The cup-cap diagram in P_2."""
    return TLElement.basis_vector(cup_cap_diagram(2, 0))


def random_element(k: int, rng: random.Random) -> TLElement:
    return TLElement.of(
        k, {d: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for d in diagrams(k)}
    )


class TestDiagrams:
    def test_dimension_against_enumeration_oracle(self):
        # oracle: enumerate all perfect matchings, filter crossings
        for k in range(5):
            assert dimension(k) == len(noncrossing_matchings(2 * k))
            assert len(diagrams(k)) == dimension(k)

    def test_frozen_dimensions(self):
        assert [dimension(k) for k in range(5)] == [1, 1, 2, 5, 14]

    def test_enumeration_matches_oracle_sets(self):
        for k in range(5):
            assert {d.pairing for d in diagrams(k)} == set(noncrossing_matchings(2 * k))

    def test_pairs_join_odd_to_even(self):
        for d in diagrams(3):
            for i, j in d.pairs():
                assert (j - i) % 2 == 1

    def test_crossing_rejected(self):
        with pytest.raises(ValueError):
            TLDiagram(2, (2, 3, 0, 1))

    def test_star_diagram_involution(self):
        for d in diagrams(3):
            assert star_diagram(star_diagram(d)) == d


class TestMultiply:
    def test_unit_laws(self, backend):
        one = TLElement.unit(2)
        e = E2()
        assert backend.multiply(one, one) == one
        assert backend.multiply(one, e) == e
        assert backend.multiply(e, one) == e

    def test_cup_cap_square(self, any_backend):
        # stacking two cup-caps closes one loop
        e = E2()
        assert any_backend.multiply(e, e) == any_backend.delta * e

    def test_associative_random(self, backend):
        rng = random.Random(7)
        for k in (2, 3):
            for _ in range(5):
                x, y, z = (random_element(k, rng) for _ in range(3))
                assert backend.multiply(backend.multiply(x, y), z) == backend.multiply(
                    x, backend.multiply(y, z)
                )

    def test_mismatched_k_rejected(self, backend):
        with pytest.raises(ValueError):
            backend.multiply(TLElement.unit(1), TLElement.unit(2))


class TestTrace:
    def test_normalised(self, any_backend):
        for k in range(4):
            assert any_backend.trace(TLElement.unit(k)) == 1

    def test_cup_cap_frozen(self, backend):
        # closure of the cup-cap has one loop; delta^(1-2) = 1/2 at delta=2
        assert backend.trace(E2()) == Fraction(1, 2)

    def test_linearity_frozen(self, backend):
        x = backend.delta * E2() - TLElement.unit(2)
        assert backend.trace(x) == 0

    def test_tracial_random(self, backend):
        rng = random.Random(11)
        for k in (2, 3, 4):
            for _ in range(3):
                x, y = random_element(k, rng), random_element(k, rng)
                assert backend.trace(backend.multiply(x, y)) == backend.trace(
                    backend.multiply(y, x)
                )


class TestStar:
    def test_unit_and_cup_cap_fixed(self):
        assert star(TLElement.unit(2)) == TLElement.unit(2)
        assert star(E2()) == E2()

    def test_involution_random(self):
        rng = random.Random(3)
        x = random_element(3, rng)
        assert star(star(x)) == x

    def test_antimultiplicative_random(self, backend):
        rng = random.Random(5)
        for _ in range(5):
            x, y = random_element(3, rng), random_element(3, rng)
            assert star(backend.multiply(x, y)) == backend.multiply(star(y), star(x))

    def test_trace_star_invariant(self, backend):
        rng = random.Random(17)
        x = random_element(3, rng)
        assert backend.trace(star(x)) == backend.trace(x)


class TestInnerProduct:
    def test_frozen_values(self, backend):
        one = TLElement.unit(2)
        e = E2()
        assert backend.inner(one, one) == 1
        assert backend.inner(e, e) == 1  # tau(E*E) = tau(2E) = 2*(1/2)
        assert backend.inner(one, e) == Fraction(1, 2)

    def test_symmetric_random(self, backend):
        rng = random.Random(23)
        x, y = random_element(3, rng), random_element(3, rng)
        assert backend.inner(x, y) == backend.inner(y, x)

    def test_star_compatible_left_multiplication(self, backend):
        rng = random.Random(31)
        for _ in range(5):
            a, x, y = (random_element(3, rng) for _ in range(3))
            assert backend.inner(backend.multiply(a, x), y) == backend.inner(
                x, backend.multiply(star(a), y)
            )


class TestGram:
    def test_k0(self, backend):
        g = backend.gram_matrix(0)
        assert g.shape == (1, 1) and g[0, 0] == 1

    def test_k2_frozen(self, backend):
        # basis order is (cup-cap, identity); the matrix is symmetric either way
        g = backend.gram_matrix(2)
        assert g[0, 0] == 1 and g[1, 1] == 1
        assert g[0, 1] == Fraction(1, 2) and g[1, 0] == Fraction(1, 2)
        assert linalg.det(g) == Fraction(3, 4)

    def test_positive_definite_k_up_to_4(self, backend):
        for k in range(5):
            for minor in linalg.leading_principal_minors(backend.gram_matrix(k)):
                assert minor > 0

    def test_one_dimensional_spaces(self):
        assert dimension(0) == 1  # carries both 0+ and 0-
        assert dimension(1) == 1


class TestBeta:
    def test_round_trip_random(self, backend):
        rng = random.Random(41)
        x = random_element(3, rng)
        assert backend.beta_inv(backend.beta(x)) == x

    def test_beta_of_unit_frozen(self, backend):
        # tau(1 . e_j): 1 for the identity diagram, 1/2 for the cup-cap
        phi = backend.beta(TLElement.unit(2))
        assert phi.coeff(identity_diagram(2)) == 1
        assert phi.coeff(cup_cap_diagram(2, 0)) == Fraction(1, 2)

    def test_dual_basis_reconstruction_identity(self, backend):
        # sum_i tau(e_i z) beta^{-1}(e^i) == z, checked at z = cup-cap
        z = E2()
        basis = diagrams(2)
        acc = TLElement.zero(2)
        for d in basis:
            coeff = backend.trace(backend.multiply(TLElement.basis_vector(d), z))
            acc = acc + coeff * backend.beta_inv(
                DualTLElement(2, ((d, Fraction(1)),))
            )
        assert acc == z

    def test_beta_evaluation_is_trace_pairing(self, backend):
        rng = random.Random(43)
        x, y = random_element(2, rng), random_element(2, rng)
        assert backend.beta(x)(y) == backend.trace(backend.multiply(x, y))


class TestBackendConfig:
    def test_delta_below_two_rejected(self):
        with pytest.raises(ValueError):
            TLBackend(Fraction(3, 2))

    def test_rational_delta(self):
        b = TLBackend(Fraction(5, 2))
        assert b.trace(E2()) == Fraction(2, 5)
