"""Linear codes over Z_m: canonical forms, duals, self-duality and
Type II tests, weight enumeration, and the extremal bound."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DomainError, InputError, ResourceError
from .ring import Modulus, ResidueVector, euclidean_weight, inner_product

#: default cap on full codeword enumeration
ENUMERATION_CAP = 2 ** 24

#: cap below which is_type_ii checks the definition on every codeword
#: instead of the generator-row criterion
TYPE_II_DIRECT_CAP = 2 ** 16


class LinearCode:
    """A Z_m-submodule of Z_m^n given by generator rows.

    The Howell canonical form is computed lazily; two codes are equal
    iff their canonical forms are identical.
    """

    def __init__(self, modulus: Modulus, length: int, generators):
        self.modulus = modulus
        self.length = length
        gens = []
        for g in generators:
            if not isinstance(g, ResidueVector):
                g = ResidueVector.reduce(g, modulus)
            if g.modulus != modulus:
                raise InputError("generator modulus mismatch")
            if len(g) != length:
                raise InputError(
                    f"generator length {len(g)} != code length {length}"
                )
            gens.append(g)
        self.generators = tuple(gens)
        self._canonical = None

    @classmethod
    def from_rows(cls, rows, m: int) -> "LinearCode":
        rows = [list(r) for r in rows]
        if not rows:
            raise InputError("need at least one generator row")
        return cls(Modulus(m), len(rows[0]), rows)

    @property
    def canonical(self):
        """Howell canonical generating rows (list of lists)."""
        if self._canonical is None:
            self._canonical = linalg.howell_form(
                [g.entries for g in self.generators],
                self.modulus.m,
                self.length,
            )
        return self._canonical

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.length == other.length
            and self.canonical == other.canonical
        )

    def __hash__(self):
        return hash((self.modulus, self.length, tuple(map(tuple, self.canonical))))

    def __repr__(self):
        return (
            f"LinearCode(Z_{self.modulus.m}, n={self.length}, "
            f"rank_rows={len(self.canonical)})"
        )

    def contains(self, v: ResidueVector) -> bool:
        if v.modulus != self.modulus or len(v) != self.length:
            raise InputError("vector incompatible with code")
        return linalg.howell_member(self.canonical, v.entries, self.modulus.m)


def howell_form(code: LinearCode):
    """Canonical row set of the code (unique per submodule)."""
    return [row[:] for row in code.canonical]


def cardinality(code: LinearCode) -> int:
    return linalg.howell_cardinality(code.canonical, code.modulus.m)


def dual(code: LinearCode) -> LinearCode:
    """The annihilator code {x : x . y = 0 for all y in C}."""
    m = code.modulus.m
    ker = linalg.kernel_mod(
        [list(g.entries) for g in code.generators], m, code.length
    )
    if not ker:
        ker = [[0] * code.length]
    return LinearCode(code.modulus, code.length, ker)


def is_self_orthogonal(code: LinearCode) -> bool:
    gens = code.generators
    return all(
        inner_product(gens[i], gens[j]) == 0
        for i in range(len(gens))
        for j in range(i, len(gens))
    )


def is_self_dual(code: LinearCode) -> bool:
    """C = C^perp: all pairwise generator products vanish and |C|^2 = m^n.

    The cardinality form allows odd lengths (e.g. {0, 2} in Z_4^1)."""
    if not is_self_orthogonal(code):
        return False
    m = code.modulus.m
    return cardinality(code) ** 2 == m ** code.length


def enumerate_codewords(code: LinearCode, cap: int = ENUMERATION_CAP):
    """Yield every codeword exactly once.  Refuses if |C| > cap."""
    card = cardinality(code)
    if card > cap:
        raise ResourceError(f"|C| = {card} exceeds enumeration cap {cap}")
    m = code.modulus.m
    rows = code.canonical
    if not rows:
        yield ResidueVector(code.modulus, (0,) * code.length)
        return
    ranges = [range(m // next(x for x in r if x)) for r in rows]
    for coeffs in itertools.product(*ranges):
        word = [0] * code.length
        for c, row in zip(coeffs, rows):
            if c:
                for j, x in enumerate(row):
                    word[j] += c * x
        yield ResidueVector(code.modulus, tuple(x % m for x in word))


def _codeword_matrix(code: LinearCode, cap: int):
    """All codewords as an int64 numpy array, one row per codeword."""
    card = cardinality(code)
    if card > cap:
        raise ResourceError(f"|C| = {card} exceeds enumeration cap {cap}")
    m = code.modulus.m
    rows = code.canonical
    if not rows:
        return np.zeros((1, code.length), dtype=np.int64)
    orders = [m // next(x for x in r if x) for r in rows]
    G = np.array(rows, dtype=np.int64)
    words = np.zeros((1, code.length), dtype=np.int64)
    for row, order in zip(G, orders):
        mults = np.arange(order, dtype=np.int64)[:, None] * row[None, :]
        words = (words[:, None, :] + mults[None, :, :]).reshape(-1, code.length) % m
    return words


@dataclass
class SWEPolynomial:
    """Symmetrized weight enumerator: composition tuple -> count.

    An exponent tuple (a_0, ..., a_k) records a codeword with a_j
    components equal to +-j (the class j and the class m-j counted
    together; a_k is the count of k components when m = 2k).
    """

    modulus: Modulus
    length: int
    coefficients: dict = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.coefficients.values())


def swe(code: LinearCode, cap: int = ENUMERATION_CAP) -> SWEPolynomial:
    """Symmetrized weight enumerator by full enumeration."""
    mod = code.modulus
    if not mod.is_even:
        raise DomainError("swe is defined for even moduli m = 2k")
    k = mod.k
    m = mod.m
    counts: dict = {}
    words = _codeword_matrix(code, cap)
    classes = np.minimum(words, m - words)  # |rho| per entry, in 0..k
    for row in classes:
        comp = np.bincount(row, minlength=k + 1)
        key = tuple(int(x) for x in comp)
        counts[key] = counts.get(key, 0) + 1
    return SWEPolynomial(mod, code.length, counts)


def _generator_rows_type_ii(code: LinearCode) -> bool:
    fourk = 2 * code.modulus.m
    return all(euclidean_weight(g) % fourk == 0 for g in code.generators)


def is_type_ii(code: LinearCode, direct_cap: int = TYPE_II_DIRECT_CAP) -> bool:
    """Self-dual with all Euclidean weights divisible by 4k.

    Checks the definition on every codeword when the code is small
    enough; otherwise uses the generator-row criterion, which suffices
    because for a self-orthogonal code the Euclidean weight mod 4k is
    additive and scales by squares.
    """
    if not code.modulus.is_even:
        return False
    if not is_self_dual(code):
        return False
    fourk = 2 * code.modulus.m
    if cardinality(code) <= direct_cap:
        m = code.modulus.m
        words = _codeword_matrix(code, direct_cap)
        sq = np.minimum(np.arange(m) ** 2, (m - np.arange(m)) ** 2)
        weights = sq[words].sum(axis=1)
        return bool(np.all(weights % fourk == 0))
    return _generator_rows_type_ii(code)


def min_euclidean_weight_bruteforce(
    code: LinearCode, cap: int = ENUMERATION_CAP
) -> int:
    """Exact d_E(C) by enumerating every nonzero codeword."""
    m = code.modulus.m
    words = _codeword_matrix(code, cap)
    if words.shape[0] <= 1:
        raise DomainError("the zero code has no minimum weight")
    sq = np.minimum(np.arange(m) ** 2, (m - np.arange(m)) ** 2)
    weights = sq[words].sum(axis=1)
    nonzero = weights[np.any(words != 0, axis=1)]
    return int(nonzero.min())


def extremal_bound(n: int, k: int) -> int:
    """The Euclidean-weight bound 4k*floor(n/24) + 4k for Type II codes."""
    import warnings

    if n % 8 != 0:
        warnings.warn(f"length {n} is not divisible by 8; no Type II code exists")
    return 4 * k * (n // 24) + 4 * k


def is_extremal(code: LinearCode, d_e: int) -> bool:
    """Whether d_E meets the bound with equality; only proved for k <= 6."""
    mod = code.modulus
    if not mod.is_even:
        raise DomainError("extremality is defined for even moduli")
    if mod.k > 6:
        raise DomainError(
            f"the extremal bound is established only for k <= 6, got k = {mod.k}"
        )
    return d_e == extremal_bound(code.length, mod.k)
