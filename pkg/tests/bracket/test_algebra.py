"""
Tests for cohexp.bracket.algebra
"""

import itertools
import random

import pytest

from cohexp.bracket import (
    BracketAlgebra,
    MalformedAlgebraError,
    bracket_eval,
    common_intersection,
    derived_subspace,
    is_subalgebra,
    sl2,
    sl2_h_free_subalgebra,
    subalgebras_of_dim,
)
from cohexp.exceptions import ContractError
from cohexp.fpla import PrimeField, Subspace, enumerate_subspaces


class TestBracketAlgebraConstruction:
    """Tests for building bracket algebras."""

    def test_from_brackets_fills_alternating_table(self, f5):
        """Test that [b_j, b_i] = -[b_i, b_j] is filled in."""
        b = BracketAlgebra.from_brackets(f5, ["x", "y"], {(0, 1): (1, 2)})
        assert b.structure[0][1].digits == (1, 2)
        assert b.structure[1][0].digits == (4, 3)
        assert b.structure[0][0].is_zero()

    def test_rejects_duplicate_names(self, f3):
        """Test that basis names must be distinct."""
        with pytest.raises(MalformedAlgebraError):
            BracketAlgebra.zero(f3, 2, names=["x", "x"])

    def test_rejects_bad_pair(self, f3):
        """Test that only pairs i < j are accepted."""
        with pytest.raises(MalformedAlgebraError):
            BracketAlgebra.from_brackets(f3, ["x", "y"], {(1, 0): (1, 0)})

    def test_rejects_wrong_length(self, f3):
        """Test that bracket values must have dim coordinates."""
        with pytest.raises(MalformedAlgebraError):
            BracketAlgebra.from_brackets(f3, ["x", "y"], {(0, 1): (1, 0, 0)})

    def test_rejects_non_square_table(self, f3):
        """Test that from_table checks the n x n x n shape."""
        with pytest.raises(MalformedAlgebraError):
            BracketAlgebra.from_table(f3, ["x", "y"], [[[0, 0], [0, 0]]])

    def test_malformed_is_contract_error(self):
        """Test the exception hierarchy."""
        assert issubclass(MalformedAlgebraError, ContractError)

    def test_unknown_basis_name(self, sl2_f3):
        """Test that basis_vector reports the available names."""
        with pytest.raises(ContractError, match="unknown basis name"):
            sl2_f3.basis_vector("y")


class TestSl2:
    """Tests for the sl2 structure constants."""

    def test_names(self, sl2_f3):
        """Test the basis order."""
        assert sl2_f3.names == ("h", "x+", "x-")

    def test_brackets(self, sl2_f5):
        """Test [h, x+] = 2x+, [h, x-] = -2x-, [x+, x-] = h."""
        h = sl2_f5.basis_vector("h")
        xp = sl2_f5.basis_vector("x+")
        xm = sl2_f5.basis_vector("x-")
        assert sl2_f5.bracket(h, xp) == xp * 2
        assert sl2_f5.bracket(h, xm) == xm * -2
        assert sl2_f5.bracket(xp, xm) == h
        assert sl2_f5.bracket(xm, xp) == -h

    def test_adjoint_of_h(self, sl2_f5):
        """Test that ad h is diag(0, 2, -2) in the basis (h, x+, x-)."""
        ad = sl2_f5.adjoint_matrix(sl2_f5.basis_vector("h"))
        assert ad.tolist() == [[0, 0, 0], [0, 2, 0], [0, 0, 3]]

    def test_adjoint_of_x_plus(self, sl2_f3):
        """Test the columns of ad x+: [x+, h] = -2x+, [x+, x-] = h."""
        ad = sl2_f3.adjoint_matrix(sl2_f3.basis_vector("x+"))
        assert ad.tolist() == [[0, 0, 1], [1, 0, 0], [0, 0, 0]]

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_validates(self, p):
        """Test that sl2 is alternating and satisfies Jacobi."""
        result = sl2(PrimeField(p)).validate()
        assert result.alternating
        assert result.jacobi

    def test_bracket_rejects_foreign_vectors(self, sl2_f3, f5):
        """Test that bracket arguments must live in the algebra."""
        with pytest.raises(ContractError):
            sl2_f3.bracket(f5.unit(3, 0), f5.unit(3, 1))


class TestValidation:
    """Tests for validate on tables that break the laws."""

    def test_non_alternating(self, f3):
        """Test that a nonzero [b_0, b_0] is reported."""
        b = BracketAlgebra.from_table(
            f3, ["x", "y"], [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]
        )
        assert not b.validate().alternating

    def test_jacobi_failure(self, f3):
        """Test an alternating table that violates Jacobi."""
        # [x, y] = z, [x, z] = x, [y, z] = 0
        b = BracketAlgebra.from_brackets(
            f3, ["x", "y", "z"], {(0, 1): (0, 0, 1), (0, 2): (1, 0, 0)}
        )
        result = b.validate()
        assert result.alternating
        assert not result.jacobi

    def test_zero_algebra(self, f3):
        """Test that the abelian algebra passes both checks."""
        result = BracketAlgebra.zero(f3, 2).validate()
        assert result.alternating and result.jacobi


class TestSubalgebras:
    """Tests for subalgebra enumeration in sl2."""

    @pytest.mark.parametrize("p,expected", [(3, 4), (5, 6)])
    def test_two_dimensional_count(self, p, expected):
        """Test that sl2 over F_p has p + 1 two-dimensional subalgebras."""
        assert len(subalgebras_of_dim(sl2(PrimeField(p)), 2)) == expected

    def test_planes_through_h(self, sl2_f3):
        """Test that only the two planes spanned by h and an eigenvector of ad h contain h."""
        h = sl2_f3.basis_vector("h")
        planes = subalgebras_of_dim(sl2_f3, 2)
        without_h = [s for s in planes if h not in s]
        assert len(without_h) == 2
        assert sl2_h_free_subalgebra(sl2_f3.field) in without_h

    @pytest.mark.parametrize("fixture", ["sl2_f3", "sl2_f5"])
    def test_h_free_subalgebra(self, request, fixture):
        """Test the explicit plane S is closed and misses h."""
        b = request.getfixturevalue(fixture)
        s = sl2_h_free_subalgebra(b.field)
        assert s.dim == 2
        assert is_subalgebra(b, s)
        assert b.basis_vector("h") not in s

    def test_alpha_constant(self, sl2_f3, sl2_f5):
        """Test that S contains -alpha*h + x- with alpha = 1 (p=3) and 4 (p=5)."""
        assert sl2_f3.vector({"h": -1, "x-": 1}) in sl2_h_free_subalgebra(sl2_f3.field)
        assert sl2_f5.vector({"h": -4, "x-": 1}) in sl2_h_free_subalgebra(sl2_f5.field)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_subalgebras_meet_trivially(self, p):
        """Test that the p + 1 two-dimensional subalgebras have zero intersection."""
        field = PrimeField(p)
        planes = subalgebras_of_dim(sl2(field), 2)
        assert len(planes) == p + 1
        assert common_intersection(planes) == Subspace.zero(field, 3)

    def test_is_subalgebra_matches_element_closure(self, sl2_f3):
        """Test is_subalgebra against closure of all element pairs, for all 13 planes of F3^3."""
        planes = enumerate_subspaces(sl2_f3.field, 3, 2)
        assert len(planes) == 13
        closed = []
        for s in planes:
            members = list(s.elements())
            brute = all(
                bracket_eval(sl2_f3, u, v) in s for u, v in itertools.product(members, repeat=2)
            )
            assert is_subalgebra(sl2_f3, s) == brute
            closed.append(brute)
        assert sum(closed) == 4

    def test_derived_subspace_of_sl2_is_everything(self, sl2_f3):
        """Test that sl2 is perfect for odd p."""
        whole = Subspace.whole(sl2_f3.field, 3)
        assert derived_subspace(sl2_f3, whole) == whole

    def test_line_spanned_by_x_plus_is_subalgebra(self, sl2_f3):
        """Test that every line is trivially closed."""
        line = Subspace.span(sl2_f3.field, 3, [sl2_f3.basis_vector("x+")])
        assert is_subalgebra(sl2_f3, line)

    def test_common_intersection_needs_input(self):
        """Test the empty input error."""
        with pytest.raises(ContractError):
            common_intersection([])


class TestBracketEvalBilinearity:
    """Tests for bilinearity and the alternating law of bracket_eval on sl2."""

    def test_additive_in_each_slot_over_f3(self, sl2_f3):
        """Test [u + v, w] = [u, w] + [v, w] for all u, v in F3^3 and basis vectors w."""
        vectors = list(sl2_f3.field.vectors(3))
        basis = [sl2_f3.basis_vector(name) for name in sl2_f3.names]
        for u, v in itertools.product(vectors, repeat=2):
            for w in basis:
                left = bracket_eval(sl2_f3, u + v, w)
                assert left == bracket_eval(sl2_f3, u, w) + bracket_eval(sl2_f3, v, w)
                assert bracket_eval(sl2_f3, w, u + v) == -left
        assert all(bracket_eval(sl2_f3, u, u).is_zero() for u in vectors)

    @pytest.mark.parametrize("p", [5, 7])
    def test_sampled_bilinearity(self, p):
        """Test [u + c v, w] = [u, w] + c [v, w] and [w, u] = -[u, w] on seeded samples."""
        field = PrimeField(p)
        b = sl2(field)
        rng = random.Random(p)

        def draw():
            return field.vector([rng.randrange(p) for _ in range(3)])

        for _ in range(300):
            u, v, w = draw(), draw(), draw()
            c = rng.randrange(p)
            left = bracket_eval(b, u + v * c, w)
            assert left == bracket_eval(b, u, w) + bracket_eval(b, v, w) * c
            assert bracket_eval(b, w, u) == -bracket_eval(b, u, w)
