"""Focus singularities F_n and their finite-order automorphisms.

F_n is kept purely combinatorial: its rank-0 points ``x_0 .. x_{n-1}`` sit
on a cycle, and the two-dimensional orbit ``c_j`` joins ``x_j`` to
``x_{j+1 mod n}``. A finite-order automorphism shifts the cycle by
``shift`` and flows along the periodic integral by ``angle`` (a fraction
of the full period). Angles are exact ``Fraction``s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ValidationError


@dataclass(frozen=True)
class FocusSingularity:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"focus complexity must be positive, got {self.n}")

    def boundary(self, j: int) -> tuple[int, int]:
        """Indices of the rank-0 points in the closure of ``c_j``."""
        return j % self.n, (j + 1) % self.n

    def to_json(self) -> dict:
        return {"focus_complexity": self.n}


def parse_angle(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise ValidationError(f"angle must be an exact fraction, got {value!r}")


@dataclass(frozen=True)
class FocusAutomorphism:
    n: int
    shift: int
    angle: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "angle", parse_angle(self.angle) % 1)
        object.__setattr__(self, "shift", self.shift % self.n)

    def __mul__(self, other: "FocusAutomorphism") -> "FocusAutomorphism":
        if other.n != self.n:
            raise ValidationError(f"cannot compose automorphisms of F{self.n} and F{other.n}")
        return FocusAutomorphism(self.n, self.shift + other.shift, self.angle + other.angle)

    def __pow__(self, k: int) -> "FocusAutomorphism":
        return FocusAutomorphism(self.n, self.shift * k, self.angle * k)

    @property
    def order(self) -> int:
        return math.lcm(self.n // math.gcd(self.n, self.shift), self.angle.denominator)

    def is_identity(self) -> bool:
        return self.shift == 0 and self.angle == 0

    def apply(self, q: int) -> int:
        """Image of the rank-0 point ``x_q``."""
        return (q + self.shift) % self.n

    def to_json(self) -> dict:
        return {"shift": self.shift, "angle": f"{self.angle.numerator}/{self.angle.denominator}"}

    @classmethod
    def from_json(cls, n: int, data: dict) -> "FocusAutomorphism":
        return shift_automorphism(n, int(data.get("shift", 0)), parse_angle(data.get("angle", "0/1")))


def shift_automorphism(n: int, d: int, angle=Fraction(0)) -> FocusAutomorphism:
    angle = parse_angle(angle)
    if n < 1:
        raise ValidationError(f"focus complexity must be positive, got {n}")
    if not 0 <= d < n:
        raise ValidationError(f"shift {d} outside 0..{n - 1}")
    if not 0 <= angle < 1:
        raise ValidationError(f"angle {angle} outside [0, 1)")
    return FocusAutomorphism(n, d, angle)


def is_free_on_rank0(a: FocusAutomorphism) -> bool:
    """Every nontrivial power of ``a`` moves all rank-0 points."""
    return all((a ** t).shift != 0 for t in range(1, a.order))


def _check_group(n: int, group: set) -> None:
    if not group:
        raise ValidationError("empty set is not a group")
    for a in group:
        if a.n != n:
            raise ValidationError(f"automorphism of F{a.n} in a group on F{n}")
    for a in group:
        for b in group:
            if a * b not in group:
                raise ValidationError(f"set not closed: {a.to_json()} * {b.to_json()}")


def rank0_orbit_count(n: int, group: Iterable[FocusAutomorphism]) -> int:
    """Number of orbits of the shift parts of ``group`` on the rank-0 points."""
    group = set(group)
    _check_group(n, group)
    return math.gcd(n, *(a.shift for a in group))


def quotient_focus(n: int, k: int) -> FocusSingularity:
    """F_n modulo the free shift group of order ``k``."""
    if k < 1 or n % k:
        raise ValidationError(f"{k} does not divide {n}")
    return FocusSingularity(n // k)


def cyclic_closure(a: FocusAutomorphism) -> set:
    return {a ** t for t in range(a.order)}
