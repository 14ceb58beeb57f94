"""Dihedral and prismatic Coxeter systems I2(n) and I2(n) + A1 in quaternion form.

Simple roots have norm sqrt(2):

    alpha_1 = sqrt(2),  alpha_2 = sqrt(2) exp(e1 (n-1) pi / n),  alpha_3 = sqrt(2) e2

so 2D vectors live in the complex plane span{1, e1} and the prism axis is e2.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._geometry import PointIndex, polar_angle
from .quat import E2, PairTransform, Quaternion, act, multiply, rotor, scalar_product

MAX_N = 10**6
ORBIT_TOL = 1e-9
RELATION_TOL = 1e-10


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > MAX_N:
        raise ValueError(f"n must be <= {MAX_N}, got {n}")
    return int(n)


@dataclass(frozen=True)
class CoxeterSystem:
    n: int
    rank: int
    simple_roots: tuple[Quaternion, ...]
    cartan: np.ndarray = field(compare=False, repr=False)
    cartan_inv: np.ndarray = field(compare=False, repr=False)
    weights: tuple[Quaternion, ...] = ()

    @property
    def angle(self) -> float:
        """Angle between alpha_1 and alpha_2, (n-1) pi / n."""
        return (self.n - 1) * math.pi / self.n

    def generator(self, i: int) -> PairTransform:
        """r_i = [alpha_i/sqrt2, -alpha_i/sqrt2]*, indices from 1."""
        u = self.simple_roots[self._index(i)] / math.sqrt(2)
        return PairTransform(u, -u, starred=True)

    def _index(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise IndexError(f"generator index {i} outside 1..{self.rank}")
        return i - 1

    def weight(self, coeffs: Sequence[float]) -> WeightVector:
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        cart = Quaternion()
        for a, w in zip(coeffs, self.weights):
            cart = cart + w * float(a)
        return WeightVector(tuple(float(a) for a in coeffs), cart)

    def from_cartesian(self, q: Quaternion) -> WeightVector:
        """Coefficients a_i = (q, alpha_i) by the duality (alpha_i, omega_j) = delta_ij."""
        return WeightVector(tuple(scalar_product(q, r) for r in self.simple_roots), q)

    def reflection_matrices(self) -> list[np.ndarray]:
        """Cartesian reflection matrices on (1, e1[, e2]) coordinates."""
        dim = self.rank
        mats = []
        for root in self.simple_roots:
            a = np.array(list(root)[:dim])
            mats.append(np.eye(dim) - np.outer(a, a) * 2.0 / (a @ a))
        return mats

    def group_matrices(self) -> list[np.ndarray]:
        """All elements of W as Cartesian matrices, by closure over the generators."""
        gens = self.reflection_matrices()
        seen = PointIndex(1e-9)
        elems = [np.eye(self.rank)]
        seen.add(elems[0].ravel())
        queue = deque(elems)
        while queue:
            m = queue.popleft()
            for g in gens:
                p = g @ m
                _, created = seen.add(p.ravel())
                if created:
                    elems.append(p)
                    queue.append(p)
        return elems


@dataclass(frozen=True)
class WeightVector:
    """Lambda = sum a_i omega_i, stored in both the omega basis and Cartesian form."""

    coeffs: tuple[float, ...]
    cartesian: Quaternion

    @property
    def point(self) -> tuple[float, ...]:
        """Cartesian coordinates: (x1, x2) for rank 2, (x1, x2, x3) for rank 3."""
        q = self.cartesian
        return (q.w, q.x) if len(self.coeffs) == 2 else (q.w, q.x, q.y)

    def norm(self) -> float:
        return self.cartesian.norm()


def build_system(n: int, rank: int = 2) -> CoxeterSystem:
    n = _check_n(n)
    if rank not in (2, 3):
        raise ValueError(f"rank must be 2 or 3, got {rank}")
    theta = (n - 1) * math.pi / n
    roots = [Quaternion(math.sqrt(2)), rotor(theta) * math.sqrt(2)]
    if rank == 3:
        roots.append(E2 * math.sqrt(2))
    cartan = np.array([[scalar_product(a, b) for b in roots] for a in roots])
    # off-diagonal entries are 2cos(theta) by construction; pin the exact zeros of the A1 block
    if rank == 3:
        cartan[2, :2] = cartan[:2, 2] = 0.0
    cartan_inv = _cartan_inverse(theta, rank)
    weights = []
    for i in range(rank):
        w = Quaternion()
        for j in range(rank):
            w = w + roots[j] * float(cartan_inv[i, j])
        weights.append(w)
    return CoxeterSystem(n, rank, tuple(roots), cartan, cartan_inv, tuple(weights))


def _cartan_inverse(theta: float, rank: int) -> np.ndarray:
    s2 = 2.0 * math.sin(theta) ** 2
    c = math.cos(theta)
    inv = np.zeros((rank, rank))
    inv[0, 0] = inv[1, 1] = 1.0 / s2
    inv[0, 1] = inv[1, 0] = -c / s2
    if rank == 3:
        inv[2, 2] = 0.5
    return inv


def reflect_linear(sys: CoxeterSystem, i: int, q: Quaternion) -> Quaternion:
    """r_i q = q - (q, alpha_i) alpha_i."""
    a = sys.simple_roots[sys._index(i)]
    return q - a * scalar_product(q, a)


def reflect_quaternion(sys: CoxeterSystem, i: int, q: Quaternion) -> Quaternion:
    """r_i q = -1/2 alpha_i conj(q) alpha_i."""
    a = sys.simple_roots[sys._index(i)]
    return multiply(multiply(a, q.conjugate()), a) * -0.5


def reflect(sys: CoxeterSystem, i: int, lam: WeightVector) -> WeightVector:
    """Apply r_i, computing both realizations and insisting they agree."""
    k = sys._index(i)
    linear = reflect_linear(sys, i, lam.cartesian)
    sandwich = reflect_quaternion(sys, i, lam.cartesian)
    scale = max(1.0, lam.cartesian.norm())
    if not linear.isclose(sandwich, RELATION_TOL * scale):
        raise ArithmeticError(f"reflection realizations disagree: {linear} vs {sandwich}")
    # alpha_i = sum_j C_ij omega_j and (Lambda, alpha_i) = a_i
    ai = lam.coeffs[k]
    coeffs = tuple(a - ai * float(sys.cartan[k, j]) for j, a in enumerate(lam.coeffs))
    return WeightVector(coeffs, linear)


def orbit(sys: CoxeterSystem, lam: WeightVector) -> list[WeightVector]:
    """W(sys) Lambda by breadth-first closure, in canonical order.

    Rank 2: counter-clockwise by polar angle, starting from the smallest
    nonnegative angle.  Rank 3: layers by descending x3, each layer CCW.
    """
    if not all(math.isfinite(a) for a in lam.coeffs):
        raise ValueError("weight coefficients must be finite")
    index = PointIndex(ORBIT_TOL)
    index.add(lam.point)
    members = [lam]
    queue = deque(members)
    while queue:
        v = queue.popleft()
        for i in range(1, sys.rank + 1):
            img = reflect(sys, i, v)
            _, created = index.add(img.point)
            if created:
                members.append(img)
                queue.append(img)
    return sort_ccw(members)


def sort_ccw(members: list[WeightVector]) -> list[WeightVector]:
    if not members or len(members[0].coeffs) == 2:
        return sorted(members, key=lambda v: polar_angle(v.point))
    by_height = sorted(members, key=lambda v: -v.point[2])
    layers: list[list[WeightVector]] = []
    for v in by_height:
        if layers and abs(layers[-1][0].point[2] - v.point[2]) <= ORBIT_TOL:
            layers[-1].append(v)
        else:
            layers.append([v])
    out = []
    for layer in layers:
        out.extend(sorted(layer, key=lambda v: polar_angle(v.point[:2])))
    return out


def rotate_power(sys: CoxeterSystem, k: int, lam: WeightVector) -> WeightVector:
    """(r1 r2)^k Lambda, cross-checked against exp(2 pi k e1 / n) Lambda."""
    if sys.rank != 2:
        raise ValueError("rotate_power is defined for rank-2 systems")
    k_mod = k % sys.n
    v = lam
    for _ in range(k_mod):
        v = reflect(sys, 1, reflect(sys, 2, v))
    direct = multiply(rotor(2 * math.pi * k / sys.n), lam.cartesian)
    if not v.cartesian.isclose(direct, RELATION_TOL * max(1.0, lam.norm())):
        raise ArithmeticError("rotation by generators disagrees with the rotor")
    return v


def diagram_swap(sys: CoxeterSystem, lam: WeightVector) -> WeightVector:
    """Diagram automorphism alpha_1 <-> alpha_2: (a1, a2) -> (a2, a1).

    Since |omega_1| = |omega_2| the Cartesian image is the mirror of Lambda
    across the omega_1 + omega_2 line.
    """
    if sys.rank != 2 or len(lam.coeffs) != 2:
        raise ValueError("diagram_swap is defined for rank-2 weights")
    a1, a2 = lam.coeffs
    return sys.weight((a2, a1))


def diagram_mirror(sys: CoxeterSystem, p: Sequence[float]) -> tuple[float, float]:
    """Mirror a 2D point across the line through omega_1 + omega_2."""
    u = np.array(sys.weights[0].as_array()[:2] + sys.weights[1].as_array()[:2])
    u /= np.linalg.norm(u)
    v = np.asarray(p[:2], dtype=float)
    r = 2 * (v @ u) * u - v
    return float(r[0]), float(r[1])


def generator_relations_residual(sys: CoxeterSystem, lam: WeightVector) -> float:
    """Largest deviation of r1^2, r2^2 and (r1 r2)^n from the identity on Lambda."""
    target = lam.cartesian
    res = 0.0
    for i in (1, 2):
        res = max(res, _dist(reflect(sys, i, reflect(sys, i, lam)).cartesian, target))
    v = lam
    for _ in range(sys.n):
        v = reflect(sys, 1, reflect(sys, 2, v))
    return max(res, _dist(v.cartesian, target))


def _dist(p: Quaternion, q: Quaternion) -> float:
    return (p - q).norm()


def generator_action(sys: CoxeterSystem, i: int, q: Quaternion) -> Quaternion:
    """r_i as the pair transform [alpha_i/sqrt2, -alpha_i/sqrt2]*."""
    return act(sys.generator(i), q)
