import math

import numpy as np
import pytest

from qwalk.core.coins import (
    CoinOperator,
    coin_adjoint,
    coin_apply,
    coin_by_name,
    is_unitary,
    make_balanced_y,
    make_grover4,
    make_hadamard,
    make_identity,
    unitarity_error,
)
from qwalk.core.errors import ConfigurationError
from qwalk.core.spin import basis_spin, spin_vector

INV_SQRT2 = 1 / math.sqrt(2)


def test_hadamard_entries() -> None:
    np.testing.assert_allclose(make_hadamard().matrix, INV_SQRT2 * np.array([[1, 1], [1, -1]]))


def test_grover_entries() -> None:
    matrix = make_grover4().matrix

    np.testing.assert_allclose(np.diag(matrix), [-0.5] * 4)
    assert matrix[0, 3] == pytest.approx(0.5)


@pytest.mark.parametrize("factory", [make_hadamard, make_balanced_y, make_grover4])
def test_builtin_coins_are_unitary(factory) -> None:
    coin = factory()

    assert is_unitary(coin, 1e-12)
    assert unitarity_error(coin.matrix) <= 1e-12


def test_non_unitary_matrix_is_detected() -> None:
    assert not is_unitary(np.array([[1, 1], [0, 1]], dtype=np.complex128))


def test_is_unitary_rejects_non_positive_tolerance() -> None:
    with pytest.raises(ConfigurationError):
        is_unitary(make_hadamard(), 0.0)


def test_hadamard_on_left_basis_spin() -> None:
    np.testing.assert_allclose(coin_apply(make_hadamard(), basis_spin(2, 0)), [INV_SQRT2, INV_SQRT2])


def test_balanced_y_on_imaginary_spin() -> None:
    result = coin_apply(make_balanced_y(), spin_vector([0, 1j * INV_SQRT2]))
    np.testing.assert_allclose(result, [-0.5, 0.5j], atol=1e-15)


def test_coin_apply_rejects_dimension_mismatch() -> None:
    with pytest.raises(ConfigurationError):
        coin_apply(make_grover4(), basis_spin(2, 0))


def test_adjoint_inverts_coin() -> None:
    coin = make_balanced_y()
    spin = spin_vector([0.6, 0.8j])

    restored = coin_apply(coin_adjoint(coin), coin_apply(coin, spin))

    np.testing.assert_allclose(restored, spin, atol=1e-15)
    assert coin_adjoint(coin).name == "balanced-y†"
    assert coin_adjoint(coin_adjoint(coin)).name == "balanced-y"


def test_identity_coin() -> None:
    np.testing.assert_array_equal(make_identity(3).apply(basis_spin(3, 1)), basis_spin(3, 1))
    with pytest.raises(ConfigurationError):
        make_identity(0)


def test_coin_matrix_is_read_only() -> None:
    coin = make_hadamard()
    with pytest.raises(ValueError):
        coin.matrix[0, 0] = 0


def test_coin_operator_rejects_non_square_matrix() -> None:
    with pytest.raises(ValueError):
        CoinOperator(name="bad", matrix=[[1, 0, 0], [0, 1, 0]])


def test_coin_by_name() -> None:
    assert coin_by_name("grover").dim == 4
    with pytest.raises(ConfigurationError):
        coin_by_name("fair")
