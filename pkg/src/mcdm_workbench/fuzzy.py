"""Triangular fuzzy number algebra and the linguistic judgment scale.

Everything downstream (pairwise matrices, geometric-mean weighting) is built
from the handful of componentwise operations defined here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InputError


@dataclass(frozen=True)
class Tfn:
    """Triangular fuzzy number (l, m, u) with l <= m <= u."""

    l: float
    m: float
    u: float

    def __post_init__(self):
        if not (self.l <= self.m <= self.u):
            raise DomainError(f"TFN components out of order: ({self.l}, {self.m}, {self.u})")

    def to_json(self) -> list[float]:
        return [self.l, self.m, self.u]

    @classmethod
    def from_json(cls, data) -> "Tfn":
        if not isinstance(data, (list, tuple)) or len(data) != 3:
            raise InputError(f"TFN must be a 3-element array, got {data!r}")
        return cls(float(data[0]), float(data[1]), float(data[2]))


def tfn_add(a: Tfn, b: Tfn) -> Tfn:
    return Tfn(a.l + b.l, a.m + b.m, a.u + b.u)


def tfn_mul(a: Tfn, b: Tfn) -> Tfn:
    # componentwise product: the standard approximation for positive TFNs
    return Tfn(a.l * b.l, a.m * b.m, a.u * b.u)


def tfn_invert(a: Tfn) -> Tfn:
    if a.l <= 0:
        raise DomainError(f"cannot invert TFN with non-positive lower bound: {a}")
    return Tfn(1.0 / a.u, 1.0 / a.m, 1.0 / a.l)


def tfn_nth_root(a: Tfn, n: int) -> Tfn:
    if n < 1:
        raise DomainError(f"root order must be >= 1, got {n}")
    if a.l <= 0:
        raise DomainError(f"cannot take root of TFN with non-positive component: {a}")
    p = 1.0 / n
    return Tfn(a.l ** p, a.m ** p, a.u ** p)


def defuzzify_centroid(a: Tfn) -> float:
    """Center-of-gravity crisp value of a triangular number: (l + m + u) / 3."""
    return (a.l + a.m + a.u) / 3.0


# Nine-point linguistic comparison scale. Keys are the exact labels shown
# to experts; values are the TFN encodings.
LINGUISTIC_SCALE: dict[str, Tfn] = {
    "Equally important": Tfn(1, 1, 1),
    "Moderate important": Tfn(2, 3, 4),
    "Strong important": Tfn(4, 5, 6),
    "Very strong important": Tfn(6, 7, 8),
    "Extremely important": Tfn(9, 9, 9),
    "Equally important to moderately more important": Tfn(1, 2, 3),
    "Moderately more important to strongly more important": Tfn(3, 4, 5),
    "Strongly to very strongly more important": Tfn(5, 6, 7),
    "Very strongly to extremely more important": Tfn(7, 8, 9),
}

LINGUISTIC_LABELS = tuple(LINGUISTIC_SCALE)


def linguistic_to_tfn(label: str, reciprocal: bool = False) -> Tfn:
    """Map a scale label to its TFN; `reciprocal` flips the judgment direction."""
    try:
        t = LINGUISTIC_SCALE[label]
    except KeyError:
        raise InputError(f"unknown linguistic label: {label!r}") from None
    return tfn_invert(t) if reciprocal else t
