"""Floor, modulo and floor-scale-modulo lifting of exponent matrices.

All three shrink an exponent matrix of circulant size ``L0`` to a target size
``Lk <= L0`` entry by entry, keeping ``-1`` (zero block) in place so that the
mother matrix is unchanged. Arithmetic is exact integer arithmetic throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

import numpy as np

from .exponent import ExponentMatrix

__all__ = [
    "LiftMethod",
    "LiftSpec",
    "ScaleFamily",
    "admissible_scales",
    "floor_lift",
    "fsm_lift",
    "lift",
    "modulo_lift",
    "paired",
    "totient",
    "units",
]


class LiftMethod(str, enum.Enum):
    FLOOR = "floor"
    MODULO = "modulo"
    FSM = "fsm"

    @classmethod
    def parse(cls, name: str) -> "LiftMethod":
        aliases = {"floor-scale-modulo": cls.FSM, "floor_scale_modulo": cls.FSM}
        return aliases.get(name) or cls(name)


def _check_target(E: ExponentMatrix, target: int) -> None:
    if not 1 <= target <= E.circulant_size:
        raise ValueError(f"target circulant size {target} outside [1, {E.circulant_size}]")


def _lifted(E: ExponentMatrix, values: np.ndarray, target: int) -> ExponentMatrix:
    return ExponentMatrix(np.where(E.entries == -1, -1, values), target)


def _operands(E: ExponentMatrix, factor: int) -> np.ndarray:
    # int64 products overflow past 2**63; fall back to Python ints there
    if factor * E.circulant_size >= 2**62:
        return E.entries.astype(object)
    return E.entries


def floor_lift(E: ExponentMatrix, target: int) -> ExponentMatrix:
    """``e -> floor(target * e / L0)``."""
    _check_target(E, target)
    return _lifted(E, (target * _operands(E, target)) // E.circulant_size, target)


def modulo_lift(E: ExponentMatrix, target: int) -> ExponentMatrix:
    """``e -> e mod target``."""
    _check_target(E, target)
    return _lifted(E, E.entries % target, target)


def fsm_lift(E: ExponentMatrix, target: int, scale: int) -> ExponentMatrix:
    """Floor-scale-modulo lifting: ``e -> floor(target * ((scale * e) mod L0) / L0)``.

    ``scale = 1`` reduces to :func:`floor_lift`. Coprimality of ``scale`` with
    ``L0`` is not required here; the guarantees for pairs of scale values need
    it, the formula does not.
    """
    _check_target(E, target)
    L0 = E.circulant_size
    if not 0 < scale < L0 and not (L0 == 1 and scale == 1):
        raise ValueError(f"scale {scale} outside (0, {L0})")
    return _lifted(E, (target * ((scale * _operands(E, max(target, scale))) % L0)) // L0, target)


@dataclass(frozen=True)
class LiftSpec:
    """How to shrink a matrix: method, target circulant size and (for fsm) scale."""

    method: LiftMethod
    target: int
    scale: int = 1

    def __post_init__(self):
        object.__setattr__(self, "method", LiftMethod.parse(self.method))
        if self.target < 1:
            raise ValueError(f"target circulant size must be >= 1, got {self.target}")
        if self.scale < 1:
            raise ValueError(f"scale must be >= 1, got {self.scale}")
        if self.method is not LiftMethod.FSM and self.scale != 1:
            raise ValueError(f"scale only applies to fsm lifting, not {self.method.value}")


def lift(E: ExponentMatrix, spec: LiftSpec) -> ExponentMatrix:
    if spec.method is LiftMethod.FLOOR:
        return floor_lift(E, spec.target)
    if spec.method is LiftMethod.MODULO:
        return modulo_lift(E, spec.target)
    return fsm_lift(E, spec.target, spec.scale)


def units(n: int) -> list[int]:
    """Residues in ``[1, n)`` coprime with ``n`` (``[1]`` for ``n <= 2``)."""
    if n <= 2:
        return [1]
    return [r for r in range(1, n) if gcd(r, n) == 1]


def totient(n: int) -> int:
    return sum(1 for r in range(1, n + 1) if gcd(r, n) == 1)


@dataclass(frozen=True)
class ScaleFamily:
    """Scale values for base size ``2q`` that pairwise avoid ``r_i = r_j (q+1) mod 2q``.

    Lifting to size ``q`` with any two members cannot turn the same non-cycle
    4-chain into a cycle under both.
    """

    base_size: int
    scales: tuple[int, ...]
    note: str = ""

    @property
    def q(self) -> int:
        return self.base_size // 2

    def __len__(self):
        return len(self.scales)

    def __iter__(self):
        return iter(self.scales)

    def pairs(self):
        s = self.scales
        return [(s[i], s[j]) for i in range(len(s)) for j in range(i + 1, len(s))]


def paired(r1: int, r2: int, base_size: int) -> bool:
    """Whether ``r1 = r2 (q+1) mod 2q`` (the relation is symmetric)."""
    q = base_size // 2
    return (r1 - r2 * (q + 1)) % base_size == 0


def admissible_scales(base_size: int) -> ScaleFamily:
    """Maximal admissible family for even ``base_size = 2q`` with ``q > 2``.

    Each pair ``{r, r(q+1) mod 2q}`` of units keeps its smaller member. For
    odd ``q`` the pairing never joins two units, so every unit is kept.
    """
    if base_size % 2 or base_size // 2 <= 2:
        raise ValueError(f"paired scale families need L0 = 2q with q > 2, got L0 = {base_size}")
    q = base_size // 2
    kept = []
    for r in units(base_size):
        partner = r * (q + 1) % base_size
        if partner not in kept:
            kept.append(r)
    note = "" if q % 2 == 0 else "odd q: r(q+1) is even for every unit r, all units admissible"
    return ScaleFamily(base_size, tuple(kept), note)
