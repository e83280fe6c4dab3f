from fractions import Fraction

import pytest
from hypothesis import given

from helpers import E2, SINGLET, gr, matrices_st, vec
from qgap import (
    InvalidStateError,
    Matrix,
    ShapeError,
    StateVector,
    inner,
    state_tensor,
    tensor_product,
)

I = gr(0, 1)

SIGMA_ZZ = Matrix.from_rows([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
P_Z_UD = Matrix.from_rows([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
P_Z_DU = Matrix.from_rows([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])
H = Fraction(1, 2)
DIFF_X = Matrix.from_rows(
    [[H, 0, 0, -H], [0, H, -H, 0], [0, -H, H, 0], [-H, 0, 0, H]]
)


class TestMatMul:
    def test_identity(self):
        assert Matrix.identity(4) @ SIGMA_ZZ == SIGMA_ZZ

    def test_orthogonal_projectors_multiply_to_zero(self):
        assert (P_Z_UD @ P_Z_DU).is_zero()

    def test_observable_action_on_singlet(self):
        image = SIGMA_ZZ.apply(SINGLET)
        assert image == tuple(-e for e in SINGLET.entries)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            Matrix.identity(2) @ Matrix.identity(3)


class TestRref:
    def test_zero_matrix(self):
        z = Matrix.zero(3, 3)
        assert z.rref() == z

    def test_already_reduced(self):
        m = Matrix.from_rows([[0, 1, -1, 0]])
        assert m.rref() == m

    def test_rank_two_projector_matrix(self):
        reduced = DIFF_X.rref()
        assert reduced == Matrix.from_rows(
            [[1, 0, 0, -1], [0, 1, -1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
        )
        assert DIFF_X.rank() == 2

    @given(matrices_st())
    def test_idempotent(self, m):
        assert m.rref().rref() == m.rref()


class TestRank:
    def test_identity(self):
        assert Matrix.identity(4).rank() == 4

    def test_rank_one(self):
        assert P_Z_UD.rank() == 1

    def test_sum_of_orthogonal_rank_ones(self):
        assert (P_Z_UD + P_Z_DU).rank() == 2


class TestKernel:
    def test_injective(self):
        assert Matrix.identity(4).kernel_basis() == ()

    def test_zero_matrix(self):
        basis = Matrix.zero(4, 4).kernel_basis()
        assert len(basis) == 4
        assert [b.entries for b in basis] == [
            tuple(Matrix.identity(4).row(i)) for i in range(4)
        ]

    def test_coordinate_projector(self):
        basis = P_Z_UD.kernel_basis()
        assert [str(b) for b in basis] == ["[1,0,0,0]", "[0,0,1,0]", "[0,0,0,1]"]

    @given(matrices_st(square=True))
    def test_rank_nullity(self, m):
        assert m.rank() + len(m.kernel_basis()) == m.cols


class TestAdjoint:
    def test_real_symmetric_is_fixed(self):
        assert SIGMA_ZZ.conjugate_transpose() == SIGMA_ZZ

    def test_defining_example(self):
        m = Matrix.from_rows([[gr(0), I], [gr(0), gr(0)]])
        assert m.conjugate_transpose() == Matrix.from_rows([[gr(0), gr(0)], [-I, gr(0)]])

    def test_quarter_matrix_is_hermitian(self):
        q = Fraction(1, 4)
        p_y_ud = Matrix.from_rows(
            [
                [gr(q), gr(0, q), gr(0, -q), gr(q)],
                [gr(0, -q), gr(q), gr(-q), gr(0, -q)],
                [gr(0, q), gr(-q), gr(q), gr(0, q)],
                [gr(q), gr(0, q), gr(0, -q), gr(q)],
            ]
        )
        assert p_y_ud.is_hermitian()
        assert (p_y_ud @ p_y_ud) == p_y_ud


class TestTensor:
    def test_pauli_square(self):
        sigma_z = Matrix.from_rows([[1, 0], [0, -1]])
        assert tensor_product(sigma_z, sigma_z) == SIGMA_ZZ

    def test_basis_vectors(self):
        assert state_tensor(vec(1, 0), vec(0, 1)) == E2

    def test_identity(self):
        assert tensor_product(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(4)

    @given(matrices_st(max_dim=2), matrices_st(max_dim=2), matrices_st(max_dim=2), matrices_st(max_dim=2))
    def test_mixed_product(self, a, b, c, d):
        if a.cols != c.rows or b.cols != d.rows:
            return
        lhs = tensor_product(a, b) @ tensor_product(c, d)
        assert lhs == tensor_product(a @ c, b @ d)


class TestStateVector:
    def test_rejects_zero(self):
        with pytest.raises(InvalidStateError):
            StateVector((gr(0), gr(0)))

    def test_rejects_empty(self):
        with pytest.raises(InvalidStateError):
            StateVector(())

    def test_scale_by_zero_rejected(self):
        with pytest.raises(InvalidStateError):
            E2.scale(0)

    def test_inner_is_conjugate_linear_on_the_left(self):
        u = vec(I, gr(1))
        assert inner(u, u) == gr(2)
        assert inner(u, vec(1, 0)) == -I

    def test_inner_shape_check(self):
        with pytest.raises(ShapeError):
            inner(vec(1, 0), vec(1, 0, 0))


def test_matrix_shape_validation():
    with pytest.raises(ShapeError):
        Matrix(2, 2, (gr(1),))
    with pytest.raises(ShapeError):
        Matrix.from_rows([[1, 2], [3]])


def test_inverse_round_trip():
    m = Matrix.from_rows([[1, 2], [3, gr(0, 1)]])
    assert m @ m.inverse() == Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows([[1, 1], [1, 1]]).inverse()
