"""Complex amplitudes and spin vectors carried by quantum traversers.

A spin vector is a one-dimensional ``complex128`` array with one component per
traversal branch. Every function here is pure: inputs are never mutated and a
fresh array is returned.
"""

import math
from collections.abc import Iterable, Sequence
from typing import Final

import numpy as np
from numpy.typing import NDArray

from qwalk.core.errors import ConfigurationError

type ComplexScalar = complex
type SpinVector = NDArray[np.complex128]
type ReflectionAxis = tuple[int, int]

NAMED_AXES: Final[dict[str, ReflectionAxis]] = {
    "lr": (0, 1),
    "ud": (2, 3),
}


def complex_scalar(re: float, im: float = 0.0) -> ComplexScalar:
    """Build a finite complex amplitude.

    Args:
        re: Real component.
        im: Imaginary component.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If either component is NaN or infinite.
    """
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ConfigurationError(f"Amplitude components must be finite, got ({re}, {im}).")
    return complex(re, im)


def c_add(a: ComplexScalar, b: ComplexScalar) -> ComplexScalar:
    """Add two amplitudes.

    Args:
        a: The a value.
        b: The b value.

    Returns:
        The resulting value.
    """
    return a + b


def c_mul(a: ComplexScalar, b: ComplexScalar) -> ComplexScalar:
    """Multiply two amplitudes.

    Args:
        a: The a value.
        b: The b value.

    Returns:
        The resulting value.
    """
    return a * b


def c_conjugate(a: ComplexScalar) -> ComplexScalar:
    """Conjugate an amplitude.

    Args:
        a: The a value.

    Returns:
        The resulting value.
    """
    return a.conjugate()


def c_modulus_sq(a: ComplexScalar) -> float:
    """Return ``re**2 + im**2``.

    Args:
        a: The a value.

    Returns:
        The resulting value.
    """
    return a.real * a.real + a.imag * a.imag


def spin_vector(components: Iterable[complex | float | Sequence[float]]) -> SpinVector:
    """Build a spin vector from amplitudes or ``(re, im)`` pairs.

    Args:
        components: One entry per traversal branch.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the vector is empty or holds a non-finite value.
    """
    values: list[complex] = []
    for component in components:
        if isinstance(component, (Sequence, np.ndarray)) and not isinstance(component, str):
            if len(component) != 2:
                raise ConfigurationError(f"Amplitude pairs must have two entries, got {list(component)}.")
            values.append(complex(float(component[0]), float(component[1])))
        else:
            values.append(complex(component))

    vector = np.asarray(values, dtype=np.complex128)
    if vector.ndim != 1 or vector.size == 0:
        raise ConfigurationError("A spin vector needs at least one component.")
    if not np.all(np.isfinite(vector)):
        raise ConfigurationError("Spin components must be finite.")
    return vector


def basis_spin(dim: int, index: int) -> SpinVector:
    """Return the one-hot spin with a unit amplitude at ``index``.

    Args:
        dim: Spin dimension.
        index: Branch index set to one.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If ``index`` is outside ``[0, dim)``.
    """
    if dim < 1 or not 0 <= index < dim:
        raise ConfigurationError(f"Basis index {index} is outside a spin of dimension {dim}.")
    vector = np.zeros(dim, dtype=np.complex128)
    vector[index] = 1.0
    return vector


def basis_mask(dim: int, index: int) -> NDArray[np.int8]:
    """Return the 0/1 projection mask selecting branch ``index``.

    Args:
        dim: Spin dimension.
        index: Branch index kept by the mask.

    Returns:
        The resulting value.
    """
    mask = np.zeros(dim, dtype=np.int8)
    mask[index] = 1
    return mask


def parse_spin(text: str) -> SpinVector:
    """Parse the CLI form ``"re,im;re,im;..."``.

    Args:
        text: Semicolon separated ``re,im`` pairs.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If a pair is malformed.
    """
    pairs: list[tuple[float, float]] = []
    for chunk in text.split(";"):
        parts = [part.strip() for part in chunk.split(",")]
        if len(parts) != 2:
            raise ConfigurationError(f"Expected 're,im' but got '{chunk}'.")
        try:
            pairs.append((float(parts[0]), float(parts[1])))
        except ValueError as exc:
            raise ConfigurationError(f"Invalid amplitude '{chunk}': {exc}.") from exc
    return spin_vector(pairs)


def _require_same_dim(a: SpinVector, b: NDArray[np.generic], what: str) -> None:
    """Require equal lengths.

    Args:
        a: The a value.
        b: The b value.
        what: Operation name used in the error message.

    Raises:
        ConfigurationError: If the lengths differ.
    """
    if a.shape != b.shape:
        raise ConfigurationError(f"{what}: dimension mismatch ({a.shape[0]} vs {b.shape[0]}).")


def spin_merge(a: SpinVector, b: SpinVector) -> SpinVector:
    """Merge two co-located spins by componentwise addition.

    Args:
        a: The a value.
        b: The b value.

    Returns:
        The resulting value.
    """
    _require_same_dim(a, b, "spin_merge")
    return a + b


def spin_project(a: SpinVector, mask: Sequence[int] | NDArray[np.integer]) -> SpinVector:
    """Zero every component whose mask entry is 0.

    Args:
        a: The a value.
        mask: Sequence of 0/1 flags, one per component.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the mask has the wrong length or a non-binary entry.
    """
    flags = np.asarray(mask)
    _require_same_dim(a, flags, "spin_project")
    if not np.all((flags == 0) | (flags == 1)):
        raise ConfigurationError("spin_project: mask entries must be 0 or 1.")
    return np.where(flags == 1, a, 0j).astype(np.complex128)


def resolve_axis(axis: str | Sequence[int], dim: int) -> ReflectionAxis:
    """Resolve a named or explicit swap axis and check it against ``dim``.

    Args:
        axis: ``"lr"``, ``"ud"`` or a pair of component indices.
        dim: Spin dimension the axis applies to.

    Returns:
        The resulting value.

    Raises:
        ConfigurationError: If the axis is unknown or out of range.
    """
    if isinstance(axis, str):
        if axis not in NAMED_AXES:
            raise ConfigurationError(f"Unknown reflection axis '{axis}'.")
        pair = NAMED_AXES[axis]
    else:
        if len(axis) != 2:
            raise ConfigurationError(f"A reflection axis swaps exactly two components, got {list(axis)}.")
        pair = (int(axis[0]), int(axis[1]))

    first, second = pair
    if first == second or not (0 <= first < dim and 0 <= second < dim):
        raise ConfigurationError(f"Reflection axis {pair} is invalid for spin dimension {dim}.")
    return pair


def spin_reflect(a: SpinVector, axis: str | Sequence[int]) -> SpinVector:
    """Swap the two components named by ``axis``.

    Args:
        a: The a value.
        axis: ``"lr"``, ``"ud"`` or an index pair.

    Returns:
        The resulting value.
    """
    first, second = resolve_axis(axis, a.shape[0])
    reflected = a.copy()
    reflected[first], reflected[second] = a[second], a[first]
    return reflected


def spin_norm_sq(a: SpinVector) -> float:
    """Return the summed modulus-squared of all components.

    Args:
        a: The a value.

    Returns:
        The resulting value.
    """
    return float(np.sum(a.real * a.real + a.imag * a.imag))


def component_probabilities(a: SpinVector) -> NDArray[np.float64]:
    """Return per-component modulus-squared values.

    Args:
        a: The a value.

    Returns:
        The resulting value.
    """
    return a.real * a.real + a.imag * a.imag
