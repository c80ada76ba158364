"""Coin operators: small dense complex matrices applied to traverser spins."""

import math
from collections.abc import Callable
from typing import Final

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, field_validator

from qwalk.core.errors import ConfigurationError
from qwalk.core.spin import SpinVector
from qwalk.settings import get_settings

_INV_SQRT2: Final[float] = 1.0 / math.sqrt(2.0)


class CoinOperator(BaseModel):
    """Represent `CoinOperator`.

    The matrix is stored row-major as a read-only ``complex128`` array.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str
    matrix: np.ndarray

    @field_validator("matrix", mode="before")
    @classmethod
    def _validate_matrix(cls, value: object) -> NDArray[np.complex128]:
        """Coerce to a square, finite, read-only complex matrix.

        Args:
            value: The raw matrix value.

        Returns:
            The resulting value.

        Raises:
            ValueError: If the matrix is not square or holds non-finite entries.
        """
        matrix = np.array(value, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise ValueError(f"Coin matrices must be square with dim >= 1, got shape {matrix.shape}.")
        if not np.all(np.isfinite(matrix)):
            raise ValueError("Coin matrix entries must be finite.")
        matrix.setflags(write=False)
        return matrix

    @property
    def dim(self) -> int:
        """Return the coin dimension.

        Returns:
            The resulting value.
        """
        return int(self.matrix.shape[0])

    def apply(self, spin: SpinVector) -> SpinVector:
        """Apply the coin to a spin.

        Args:
            spin: The spin value.

        Returns:
            The resulting value.
        """
        return coin_apply(self, spin)

    def adjoint(self) -> "CoinOperator":
        """Return the conjugate transpose.

        Returns:
            The resulting value.
        """
        return coin_adjoint(self)


def coin_apply(coin: CoinOperator, spin: SpinVector) -> SpinVector:
    """Multiply ``spin`` by the coin matrix.

    Args:
        coin: The coin value.
        spin: The spin value.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the dimensions differ.
    """
    if spin.shape != (coin.dim,):
        raise ConfigurationError(f"coin_apply: coin has dim {coin.dim} but spin has shape {spin.shape}.")
    return coin.matrix @ spin


def coin_adjoint(coin: CoinOperator) -> CoinOperator:
    """Return the conjugate transpose of ``coin``.

    Args:
        coin: The coin value.

    Returns:
        The resulting value.
    """
    name = coin.name[:-1] if coin.name.endswith("†") else f"{coin.name}†"
    return CoinOperator(name=name, matrix=coin.matrix.conj().T)


def unitarity_error(matrix: NDArray[np.complex128]) -> float:
    """Return ``max|M†M - I|`` for a square matrix.

    Args:
        matrix: The matrix value.

    Returns:
        The resulting value.
    """
    gram = matrix.conj().T @ matrix
    return float(np.max(np.abs(gram - np.eye(matrix.shape[0], dtype=np.complex128))))


def is_unitary(coin: CoinOperator | NDArray[np.complex128], tol: float | None = None) -> bool:
    """Return whether ``max|C†C - I| <= tol``.

    Args:
        coin: A coin operator or a raw square matrix.
        tol: Tolerance, defaulting to the configured unitarity tolerance.

    Returns:
        True when the condition is met; otherwise, False.

    Raises:
        ConfigurationError: If ``tol`` is not positive.
    """
    tolerance = get_settings().unitarity_tolerance if tol is None else tol
    if tolerance <= 0:
        raise ConfigurationError("is_unitary: tolerance must be positive.")
    matrix = coin.matrix if isinstance(coin, CoinOperator) else np.asarray(coin, dtype=np.complex128)
    return unitarity_error(matrix) <= tolerance


def make_hadamard() -> CoinOperator:
    """Return the Hadamard coin ``(1/√2)[[1, 1], [1, -1]]``.

    Returns:
        The resulting value.
    """
    return CoinOperator(name="hadamard", matrix=_INV_SQRT2 * np.array([[1, 1], [1, -1]], dtype=np.complex128))


def make_balanced_y() -> CoinOperator:
    """Return the balanced coin ``(1/√2)[[1, i], [i, 1]]``.

    Returns:
        The resulting value.
    """
    return CoinOperator(name="balanced-y", matrix=_INV_SQRT2 * np.array([[1, 1j], [1j, 1]], dtype=np.complex128))


def make_grover4() -> CoinOperator:
    """Return the 4x4 Grover coin, ``-1/2`` on the diagonal and ``1/2`` elsewhere.

    Returns:
        The resulting value.
    """
    matrix = 0.5 * np.ones((4, 4), dtype=np.complex128) - np.eye(4, dtype=np.complex128)
    return CoinOperator(name="grover", matrix=matrix)


def make_identity(dim: int) -> CoinOperator:
    """Return the identity coin.

    Args:
        dim: The dim value.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If ``dim`` is below 1.
    """
    if dim < 1:
        raise ConfigurationError(f"Identity coin requires dim >= 1, got {dim}.")
    return CoinOperator(name="identity", matrix=np.eye(dim, dtype=np.complex128))


COIN_FACTORIES: Final[dict[str, Callable[[], CoinOperator]]] = {
    "hadamard": make_hadamard,
    "balanced-y": make_balanced_y,
    "grover": make_grover4,
}


def coin_by_name(name: str) -> CoinOperator:
    """Look up a built-in coin.

    Args:
        name: One of ``hadamard``, ``balanced-y`` or ``grover``.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the name is unknown.
    """
    factory = COIN_FACTORIES.get(name)
    if factory is None:
        available = ", ".join(sorted(COIN_FACTORIES))
        raise ConfigurationError(f"Unknown coin '{name}'. Available coins: {available}.")
    return factory()
