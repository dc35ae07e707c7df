import logging
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.linalg import expm, polar

from ..errors import DimensionMismatchError, GroupSpecError, HolonetError
from ..utils.tolerances import UNITARY_TOL
from .group_spec import GroupSpec

logger = logging.getLogger(__name__)


class GroupElement(BaseModel):
    """A unitary dim x dim matrix; for dim=1 equivalently a phase angle."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    value: np.ndarray

    @field_validator("value", mode="before")
    @classmethod
    def coerce_value(cls, v: Any) -> np.ndarray:
        matrix = np.array(v, dtype=complex)
        if matrix.ndim == 0:
            matrix = matrix.reshape(1, 1)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"group element must be a square matrix, got shape {matrix.shape}")
        matrix.setflags(write=False)
        return matrix

    @property
    def dim(self) -> int:
        return self.value.shape[0]

    @property
    def phase(self) -> float:
        """Phase angle in (-pi, pi]; only meaningful for dim=1."""
        if self.dim != 1:
            raise DimensionMismatchError(f"phase is only defined for dim=1 elements, got dim={self.dim}")
        return float(np.angle(self.value[0, 0]))

    def unitarity_defect(self) -> float:
        """Frobenius norm of value * value^dagger - I."""
        return float(np.linalg.norm(self.value @ self.value.conj().T - np.eye(self.dim)))

    def is_unitary(self, tol: float = UNITARY_TOL) -> bool:
        return self.unitarity_defect() <= tol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return np.array_equal(self.value, other.value)

    __hash__ = None

    @classmethod
    def identity(cls, dim: int) -> "GroupElement":
        return cls(value=np.eye(dim, dtype=complex))

    @classmethod
    def from_phase(cls, theta: float) -> "GroupElement":
        return cls(value=[[np.exp(1j * theta)]])


def _check_same_dim(a: GroupElement, b: GroupElement) -> None:
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")


def exp_matrix(eta: Any) -> GroupElement:
    """Matrix exponential by Pade scaling-and-squaring."""
    matrix = np.array(eta, dtype=complex)
    if matrix.ndim == 0:
        matrix = matrix.reshape(1, 1)
    return GroupElement(value=expm(matrix))


def exp_generator(spec: GroupSpec, i: int) -> GroupElement:
    """
    exp(eta_i), the elementary quantum of generator i.

    Raises:
        GroupSpecError: If i is outside 0..d-1
    """
    if not 0 <= i < spec.d:
        raise GroupSpecError(f"generator index {i} out of range for d={spec.d}")
    return GroupElement(value=spec.exponentials()[i])


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group product a*b. Traversal accumulates on the right: H(p then q) = H(p)*H(q)."""
    _check_same_dim(a, b)
    return GroupElement(value=a.value @ b.value)


def inverse(a: GroupElement) -> GroupElement:
    """
    Inverse of a unitary element (its conjugate transpose).

    Raises:
        HolonetError: If `a` is not unitary within tolerance
    """
    if not a.is_unitary():
        raise HolonetError(f"cannot invert non-unitary element (defect {a.unitarity_defect():.3e})")
    return GroupElement(value=a.value.conj().T)


def element_distance(a: GroupElement, b: GroupElement) -> float:
    """Frobenius chord distance ||a - b||_F."""
    _check_same_dim(a, b)
    return float(np.linalg.norm(a.value - b.value))


def renormalize(a: GroupElement) -> GroupElement:
    """
    Project back onto the unitary group.

    Long products drift off the group slowly; callers composing more than about
    10^4 factors should renormalize. dim=1 elements are rescaled to unit modulus,
    larger ones take the unitary factor of their polar decomposition.
    """
    if a.dim == 1:
        z = a.value[0, 0]
        if z == 0:
            raise HolonetError("cannot renormalize the zero element")
        return GroupElement(value=[[z / abs(z)]])
    unitary, _ = polar(a.value)
    logger.debug("renormalized element with defect %s", a.unitarity_defect())
    return GroupElement(value=unitary)
