"""
Generator words g'(alpha) and their use as a mesh on the holonomy group.

A word multiplies, in increasing generator order, |alpha_i| copies of exp(eta_i)
(or of its inverse when alpha_i < 0). Words of norm sum|alpha_i| <= n form the
finite mesh used to approximate arbitrary group elements.
"""

import logging
import math
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from ..errors import DimensionMismatchError, EnumerationTooLargeError, GroupSpecError, HolonetError
from ..utils.parallel import get_thread_count, ordered_map
from ..utils.tolerances import MAX_WORDS, TIE_TOL
from .group_element import GroupElement
from .group_spec import GroupSpec

logger = logging.getLogger(__name__)


class MultiIndex(BaseModel):
    """Signed exponent vector alpha = (alpha_1, ..., alpha_d) of a generator word."""

    model_config = ConfigDict(frozen=True)

    alpha: Tuple[int, ...]

    @field_validator("alpha", mode="before")
    @classmethod
    def coerce_alpha(cls, v):
        return tuple(int(a) for a in v)

    @property
    def d(self) -> int:
        return len(self.alpha)

    @property
    def norm(self) -> int:
        """Word norm n(alpha) = sum |alpha_i|."""
        return sum(abs(a) for a in self.alpha)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.alpha) + ")"


class WordTable(BaseModel):
    """All words of norm <= n, ordered by (norm, lexicographic alpha)."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    alphas: np.ndarray
    elements: np.ndarray

    def __len__(self) -> int:
        return self.alphas.shape[0]

    def distances_to(self, target: np.ndarray) -> np.ndarray:
        """Frobenius distance from every word to `target`."""
        return np.linalg.norm(self.elements - target, axis=(1, 2))

    def multi_index(self, row: int) -> MultiIndex:
        return MultiIndex(alpha=self.alphas[row])


AlphaLike = Union[MultiIndex, Sequence[int]]


def _as_multi_index(spec: GroupSpec, alpha: AlphaLike) -> MultiIndex:
    if not isinstance(alpha, MultiIndex):
        alpha = MultiIndex(alpha=alpha)
    if alpha.d != spec.d:
        raise GroupSpecError(f"multi-index has length {alpha.d}, spec has d={spec.d}")
    return alpha


def _generator_power(spec: GroupSpec, i: int, k: int) -> np.ndarray:
    """exp(eta_i)^k by repeated right multiplication; negative k uses the inverse."""
    base = spec.exponentials()[i]
    if k < 0:
        base = base.conj().T
    power = np.eye(spec.dim, dtype=complex)
    for _ in range(abs(k)):
        power = power @ base
    return power


def _power_table(spec: GroupSpec, i: int, n: int) -> np.ndarray:
    """Powers exp(eta_i)^k for k = -n..n, stored at index k + n."""
    forward = spec.exponentials()[i]
    backward = forward.conj().T
    table = np.empty((2 * n + 1, spec.dim, spec.dim), dtype=complex)
    table[n] = np.eye(spec.dim, dtype=complex)
    for j in range(1, n + 1):
        table[n + j] = table[n + j - 1] @ forward
        table[n - j] = table[n - j + 1] @ backward
    return table


def word_element(spec: GroupSpec, alpha: AlphaLike) -> GroupElement:
    """
    The word g'(alpha): blocks of exp(eta_i)^alpha_i multiplied in increasing i.

    Raises:
        GroupSpecError: If alpha does not have length d
    """
    alpha = _as_multi_index(spec, alpha)
    if spec.dim == 1:
        return GroupElement(value=np.exp(alpha.alpha[0] * spec.generators[0]))

    value = np.eye(spec.dim, dtype=complex)
    for i, a in enumerate(alpha.alpha):
        value = value @ _generator_power(spec, i, a)
    return GroupElement(value=value)


def word_count(d: int, n: int) -> int:
    """Number of integer vectors of length d with sum |alpha_i| <= n."""
    return sum(2**k * math.comb(d, k) * math.comb(n, k) for k in range(min(d, n) + 1))


@lru_cache(maxsize=None)
def _alphas_with_norm(d: int, k: int) -> Tuple[Tuple[int, ...], ...]:
    if d == 1:
        return ((-k,), (k,)) if k else ((0,),)
    out: List[Tuple[int, ...]] = []
    for first in range(-k, k + 1):
        for rest in _alphas_with_norm(d - 1, k - abs(first)):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_alphas(d: int, n: int) -> np.ndarray:
    """All alpha with norm <= n as a (W, d) array, sorted by norm then lexicographically."""
    rows = [alpha for k in range(n + 1) for alpha in _alphas_with_norm(d, k)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), d)


def enumerate_words(spec: GroupSpec, n: int) -> WordTable:
    """
    Evaluate every word of norm <= n.

    Raises:
        EnumerationTooLargeError: If the word count exceeds the cap
        HolonetError: If n is negative
    """
    if n < 0:
        raise HolonetError(f"word radius must be non-negative, got {n}")
    count = word_count(spec.d, n)
    if count > MAX_WORDS:
        raise EnumerationTooLargeError(f"{count} words for d={spec.d}, n={n} exceeds the cap of {MAX_WORDS}")
    logger.debug("enumerating %s words (d=%s, n=%s)", count, spec.d, n)

    alphas = enumerate_alphas(spec.d, n)
    if spec.dim == 1:
        elements = np.exp(alphas[:, 0] * spec.generators[0][0, 0]).reshape(-1, 1, 1)
    else:
        tables = [_power_table(spec, i, n) for i in range(spec.d)]
        elements = tables[0][alphas[:, 0] + n]
        for i in range(1, spec.d):
            elements = elements @ tables[i][alphas[:, i] + n]
    return WordTable(n=n, alphas=alphas, elements=elements)


def sample_unitaries(spec: GroupSpec, samples: int, seed: int) -> np.ndarray:
    """
    Seed-deterministic random unitaries: QR of complex Gaussian matrices with the
    phases of R's diagonal folded into Q. When the generators are traceless the
    samples are moved into SU(dim) by removing det^(1/dim).
    """
    if samples < 1:
        raise HolonetError(f"samples must be positive, got {samples}")
    rng = np.random.default_rng(seed)
    dim = spec.dim
    out = np.empty((samples, dim, dim), dtype=complex)
    for s in range(samples):
        z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)
        q, r = np.linalg.qr(z)
        diag = np.diagonal(r)
        q = q * (diag / np.abs(diag))
        if spec.is_traceless:
            q = q * np.exp(-1j * np.angle(np.linalg.det(q)) / dim)
        out[s] = q
    if spec.is_traceless:
        logger.debug("projected %s samples into SU(%s)", samples, dim)
    return out


def _min_distances(table: WordTable, targets: np.ndarray) -> np.ndarray:
    return np.array([table.distances_to(t).min() for t in targets])


def mesh_cover_radius(spec: GroupSpec, n: int, samples: int, seed: int) -> float:
    """
    Empirical covering radius of the words of norm <= n.

    Returns the largest, over `samples` random unitaries, of the distance to the
    nearest word. For a fixed seed the value never increases with n.
    """
    table = enumerate_words(spec, n)
    targets = sample_unitaries(spec, samples, seed)
    chunks = np.array_split(targets, min(samples, get_thread_count()))
    nearest = ordered_map(lambda chunk: _min_distances(table, chunk), chunks)
    return float(np.concatenate(nearest).max())


def best_word(spec: GroupSpec, g: GroupElement, n: int) -> Tuple[MultiIndex, float]:
    """Closest word of norm <= n and its distance; near-ties go to the smallest norm, then lexicographic alpha."""
    if g.dim != spec.dim:
        raise DimensionMismatchError(f"element has dim={g.dim}, spec has dim={spec.dim}")
    table = enumerate_words(spec, n)
    distances = table.distances_to(g.value)
    best = float(distances.min())
    row = int(np.flatnonzero(distances <= best + TIE_TOL)[0])
    return table.multi_index(row), float(distances[row])


def approximate(spec: GroupSpec, g: GroupElement, n: int) -> MultiIndex:
    """Best generator-word approximation of `g` among words of norm <= n."""
    alpha, _ = best_word(spec, g, n)
    return alpha
