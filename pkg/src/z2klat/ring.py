"""Arithmetic over Z_m, the signed representative map, and Euclidean weights.

The ground layer: residue vectors carry their modulus, cross-modulus
operations are errors, and the signed form of a residue exists only
through :func:`rho`.  Even moduli m = 2k are the main case; odd moduli
are supported because the length-48 pipeline needs a self-dual code
over Z_5.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InputError


@dataclass(frozen=True, order=True)
class Modulus:
    """The ring Z_m.  For the Type II theory m = 2k with k >= 1."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InputError(f"modulus must be >= 1, got {self.m}")

    @classmethod
    def from_k(cls, k: int) -> "Modulus":
        if k < 1:
            raise InputError(f"k must be >= 1, got {k}")
        return cls(2 * k)

    @property
    def is_even(self) -> bool:
        return self.m % 2 == 0

    @property
    def k(self) -> int:
        """Half the modulus; only defined for even m."""
        if not self.is_even:
            raise DomainError(f"k is undefined for odd modulus {self.m}")
        return self.m // 2

    def __repr__(self):
        return f"Modulus({self.m})"


def rho(x: int, modulus: Modulus) -> int:
    """Signed representative of a residue.

    Residues 0..floor(m/2) map to themselves, the rest to x - m, so the
    image is the symmetric set {1-k, ..., k} when m = 2k (with rho(k) = k).
    """
    m = modulus.m
    if not 0 <= x < m:
        raise InputError(f"residue {x} out of range [0, {m})")
    return x if x <= m // 2 else x - m


def residue_square_weight(x: int, modulus: Modulus) -> int:
    """min{x^2, (m-x)^2} for a single residue."""
    m = modulus.m
    if not 0 <= x < m:
        raise InputError(f"residue {x} out of range [0, {m})")
    return min(x * x, (m - x) * (m - x))


@dataclass(frozen=True)
class ResidueVector:
    """A length-n tuple over Z_m, stored canonically in [0, m)."""

    modulus: Modulus
    entries: tuple

    def __post_init__(self):
        m = self.modulus.m
        ent = tuple(int(x) for x in self.entries)
        for x in ent:
            if not 0 <= x < m:
                raise InputError(f"entry {x} out of range [0, {m})")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def reduce(cls, entries, modulus: Modulus) -> "ResidueVector":
        """Build from arbitrary integers, reducing mod m."""
        m = modulus.m
        return cls(modulus, tuple(int(x) % m for x in entries))

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: "ResidueVector") -> "ResidueVector":
        _check_compatible(self, other)
        m = self.modulus.m
        return ResidueVector(
            self.modulus,
            tuple((a + b) % m for a, b in zip(self.entries, other.entries)),
        )

    def __rmul__(self, a: int) -> "ResidueVector":
        m = self.modulus.m
        return ResidueVector(self.modulus, tuple((a * x) % m for x in self.entries))

    def rho_lift(self) -> tuple:
        """Signed integer lift, entrywise rho."""
        return tuple(rho(x, self.modulus) for x in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def _check_compatible(u: ResidueVector, v: ResidueVector):
    if u.modulus != v.modulus:
        raise InputError(f"modulus mismatch: {u.modulus} vs {v.modulus}")
    if len(u) != len(v):
        raise InputError(f"length mismatch: {len(u)} vs {len(v)}")


def euclidean_weight(v: ResidueVector) -> int:
    """Sum of min{x^2, (m-x)^2} over the entries."""
    return sum(residue_square_weight(x, v.modulus) for x in v.entries)


def inner_product(u: ResidueVector, v: ResidueVector) -> int:
    """Standard inner product, reduced mod m."""
    _check_compatible(u, v)
    return sum(a * b for a, b in zip(u.entries, v.entries)) % u.modulus.m
