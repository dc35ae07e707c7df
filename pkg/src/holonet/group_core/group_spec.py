import logging
from typing import Any, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator
from scipy.linalg import expm

from ..errors import GroupSpecError
from ..utils.tolerances import ANTI_HERMITIAN_TOL, RANK_TOL

logger = logging.getLogger(__name__)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class GroupSpec(BaseModel):
    """
    Holonomy group described by a fixed basis of its Lie algebra.

    Each generator eta_i is a dim x dim anti-Hermitian matrix; exp(eta_i) is the
    quantum attached to one directed edge of type i. `eps` is the intended size
    of each generator (radians for U(1)).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dim: int = Field(..., ge=1, description="Matrix dimension, 1 for U(1)")
    generators: Tuple[np.ndarray, ...] = Field(..., description="Lie algebra basis eta_0..eta_{d-1}")
    eps: float = Field(..., gt=0, description="Scale hint eps' for the generator magnitudes")

    _exponentials: Optional[Tuple[np.ndarray, ...]] = PrivateAttr(default=None)

    @field_validator("generators", mode="before")
    @classmethod
    def coerce_generators(cls, v: Any) -> Tuple[np.ndarray, ...]:
        """Turn nested sequences into read-only complex arrays."""
        if isinstance(v, np.ndarray) and v.ndim == 2:
            v = [v]
        matrices = []
        for item in v:
            matrix = np.array(item, dtype=complex)
            if matrix.ndim == 0:
                matrix = matrix.reshape(1, 1)
            matrix.setflags(write=False)
            matrices.append(matrix)
        return tuple(matrices)

    @model_validator(mode="after")
    def validate_basis(self):
        if not self.generators:
            raise ValueError("at least one generator is required")

        for i, eta in enumerate(self.generators):
            if eta.shape != (self.dim, self.dim):
                raise ValueError(f"generator {i} has shape {eta.shape}, expected ({self.dim}, {self.dim})")
            if not np.all(np.isfinite(eta)):
                raise ValueError(f"generator {i} has non-finite entries")
            if np.max(np.abs(eta + eta.conj().T)) > ANTI_HERMITIAN_TOL:
                raise ValueError(f"generator {i} is not anti-Hermitian")

        # Real-linear independence: stack (re, im) parts as real vectors.
        stacked = np.array([np.concatenate([eta.real.ravel(), eta.imag.ravel()]) for eta in self.generators])
        rank = np.linalg.matrix_rank(stacked, tol=RANK_TOL)
        if rank < len(self.generators):
            raise ValueError(f"generators are linearly dependent (rank {rank} < d={len(self.generators)})")

        norms = [float(np.linalg.norm(eta)) for eta in self.generators]
        if max(norms) > 1.0:
            logger.warning("largest generator norm %s exceeds 1, words will be a coarse mesh", max(norms))
        return self

    @property
    def d(self) -> int:
        return len(self.generators)

    @property
    def is_traceless(self) -> bool:
        """True when every generator is traceless, so all words lie in SU(dim)."""
        return self.dim > 1 and all(abs(np.trace(eta)) <= ANTI_HERMITIAN_TOL for eta in self.generators)

    def exponentials(self) -> Tuple[np.ndarray, ...]:
        """exp(eta_i) for every generator, computed once."""
        if self._exponentials is None:
            exps = []
            for eta in self.generators:
                e = np.exp(eta) if self.dim == 1 else expm(eta)
                e.setflags(write=False)
                exps.append(e)
            self._exponentials = tuple(exps)
        return self._exponentials

    def is_u1_shorthand(self) -> bool:
        """True when the spec is exactly `group u1 eps=<eps>`."""
        return self.dim == 1 and self.d == 1 and self.generators[0][0, 0] == 1j * self.eps

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.eps == other.eps
            and self.d == other.d
            and all(np.array_equal(a, b) for a, b in zip(self.generators, other.generators))
        )

    __hash__ = None

    @classmethod
    def u1(cls, eps: float) -> "GroupSpec":
        """U(1) with the single generator i*eps."""
        return cls(dim=1, generators=[[[1j * eps]]], eps=eps)

    @classmethod
    def su2(cls, eps: float) -> "GroupSpec":
        """SU(2) with generators (eps/2)(i sigma_x, i sigma_y, i sigma_z)."""
        return cls(dim=2, generators=[0.5j * eps * s for s in (PAULI_X, PAULI_Y, PAULI_Z)], eps=eps)

    @classmethod
    def from_matrices(cls, generators: Sequence[Any], eps: Optional[float] = None) -> "GroupSpec":
        """Build a spec from generator matrices; eps defaults to the largest Frobenius norm."""
        coerced = cls.coerce_generators(generators)
        if not coerced:
            raise GroupSpecError("at least one generator is required")
        if eps is None:
            eps = max(float(np.linalg.norm(eta)) for eta in coerced)
        return cls(dim=coerced[0].shape[0], generators=coerced, eps=eps)
