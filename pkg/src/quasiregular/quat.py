"""Real quaternions and the pair-transform calculus used for Coxeter generators.

A pair transform ``[l, r]`` sends a quaternion ``x`` to ``l x r``; the starred
form ``[l, r]*`` sends it to ``l conj(x) r``.  Reflections are starred
transforms, rotations are unstarred ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

TOL = 1e-9


@dataclass(frozen=True)
class Quaternion:
    """q = w + x e1 + y e2 + z e3."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __iter__(self) -> Iterator[float]:
        yield from (self.w, self.x, self.y, self.z)

    def __add__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return multiply(self, other)
        return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)

    def __rmul__(self, other):
        # only reached for scalar * quaternion
        return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)

    def __truediv__(self, other: float) -> Quaternion:
        return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)

    def conjugate(self) -> Quaternion:
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)

    def normalized(self) -> Quaternion:
        return self / self.norm()

    def isclose(self, other: Quaternion, tol: float = TOL) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self, other))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    @classmethod
    def from_array(cls, values: Iterable[float]) -> Quaternion:
        w, x, y, z = (float(v) for v in values)
        return cls(w, x, y, z)


ONE = Quaternion(1.0)
E1 = Quaternion(0.0, 1.0)
E2 = Quaternion(0.0, 0.0, 1.0)
E3 = Quaternion(0.0, 0.0, 0.0, 1.0)


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product with e_i e_j = -delta_ij + eps_ijk e_k."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def scalar_product(p: Quaternion, q: Quaternion) -> float:
    """(p, q) = 1/2 (conj(p) q + conj(q) p), which is the 4-vector dot product."""
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z


def rotor(angle: float) -> Quaternion:
    """exp(e1 * angle)."""
    return Quaternion(math.cos(angle), math.sin(angle))


@dataclass(frozen=True)
class PairTransform:
    left: Quaternion
    right: Quaternion
    starred: bool = False

    def __call__(self, q: Quaternion) -> Quaternion:
        return act(self, q)

    def matrix(self) -> np.ndarray:
        """4x4 matrix of the induced linear map; column j is the image of basis j."""
        basis = (ONE, E1, E2, E3)
        return np.column_stack([act(self, b).as_array() for b in basis])

    def negated(self) -> PairTransform:
        return PairTransform(-self.left, -self.right, self.starred)


def act(t: PairTransform, q: Quaternion) -> Quaternion:
    arg = q.conjugate() if t.starred else q
    return multiply(multiply(t.left, arg), t.right)


def _check_order(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return int(n)


def dicyclic_root_system(n: int) -> list[Quaternion]:
    """The 4n unit quaternions {q^k, q^k e2 : k = 1..2n} with q = exp(e1 pi/n).

    The set is the dicyclic group of order 4n; it is also the root system of
    I2(n) + I2(n) up to scale.
    """
    n = _check_order(n)
    powers = [rotor(k * math.pi / n) for k in range(1, 2 * n + 1)]
    return powers + [multiply(p, E2) for p in powers]


def all_pair_transforms(elements: list[Quaternion]) -> Iterator[PairTransform]:
    for starred in (False, True):
        for s in elements:
            for t in elements:
                yield PairTransform(s, t, starred)


def aut_group_order(n: int) -> int:
    """Order of {[s,t], [s,t]*} over the dicyclic set, counted by distinct 4x4 actions.

    [s,t] and [-s,-t] induce the same map, so the raw 2(4n)^2 pairs collapse
    to 16 n^2 group elements.
    """
    elements = dicyclic_root_system(n)
    mats = np.array([t.matrix() for t in all_pair_transforms(elements)])
    return len(_distinct_rows(mats.reshape(len(mats), -1), TOL))


def _distinct_rows(rows: np.ndarray, tol: float) -> list[int]:
    """Indices of the first representative of each cluster of rows equal within tol."""
    reps: list[int] = []
    rep_rows = np.empty((0, rows.shape[1]))
    for i, row in enumerate(rows):
        if len(reps) and np.min(np.max(np.abs(rep_rows - row), axis=1)) <= tol:
            continue
        reps.append(i)
        rep_rows = np.vstack([rep_rows, row])
    return reps
