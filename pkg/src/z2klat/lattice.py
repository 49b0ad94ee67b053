"""Construction A, exact lattice invariants, short-vector certification,
frames, frame doubling, code extraction from frames, even sublattices
and even unimodular neighbors.

A lattice is stored as an integer basis of sqrt(scale) * Lambda: row r
represents the vector r / sqrt(scale).  All certificates are computed in
integer arithmetic on these scaled coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .codes import LinearCode, cardinality, is_self_dual
from .enumeration import enumerate_by_norm
from .errors import DomainError, InputError, ResourceError
from .ring import Modulus, ResidueVector, rho

DEFAULT_NODE_BUDGET = 10 ** 9


class LatticeBasis:
    """Exact basis of sqrt(scale) * Lambda as integer rows."""

    def __init__(self, scale: int, rows):
        if scale < 1:
            raise InputError("scale must be >= 1")
        self.scale = int(scale)
        self.rows = [[int(x) for x in r] for r in rows]
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise InputError("basis must be square")
        self._gram = None
        self._hnf = None
        self._det_gram = None

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def gram_scaled(self):
        """rows . rows^T; entries are scale times the true Gram."""
        if self._gram is None:
            self._gram = linalg.gram_matrix(self.rows)
        return self._gram

    @property
    def hnf_rows(self):
        """Canonical (HNF) basis of the same lattice."""
        if self._hnf is None:
            h = linalg.hermite_normal_form(self.rows, self.dimension)
            if len(h) != self.dimension:
                raise InputError("basis rows are linearly dependent")
            self._hnf = h
        return self._hnf

    def det_gram_scaled(self) -> int:
        if self._det_gram is None:
            self._det_gram = linalg.det_int(self.gram_scaled)
        return self._det_gram

    def det_true(self) -> Fraction:
        """Determinant of the true Gram matrix (rational)."""
        return Fraction(self.det_gram_scaled(), self.scale ** self.dimension)

    def true_norm(self, row) -> Fraction:
        return Fraction(sum(x * x for x in row), self.scale)

    def true_inner(self, u, v) -> Fraction:
        return Fraction(sum(x * y for x, y in zip(u, v)), self.scale)

    def contains(self, row) -> bool:
        """Membership of a scaled coordinate vector via the HNF basis."""
        v = [int(x) for x in row]
        h = self.hnf_rows
        n = self.dimension
        pivots = []
        for hrow in h:
            c = next(j for j, x in enumerate(hrow) if x != 0)
            pivots.append(c)
        for hrow, c in zip(h, pivots):
            if v[c] % hrow[c] != 0:
                return False
            t = v[c] // hrow[c]
            v = [a - t * b for a, b in zip(v, hrow)]
        return not any(v)

    def same_lattice(self, other: "LatticeBasis") -> bool:
        return self.scale == other.scale and self.hnf_rows == other.hnf_rows

    def __repr__(self):
        return f"LatticeBasis(scale={self.scale}, n={self.dimension})"


def integer_lattice(n: int, scale: int = 1) -> LatticeBasis:
    """Z^n embedded at the given scale (rows = sqrt(scale)-scaled)."""
    # Z^n at scale s needs integer scaled rows s*x for x in Z^n only if
    # sqrt(s) is irrational; keep scale 1 for the plain cubic lattice.
    return LatticeBasis(scale, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


@dataclass
class LatticeInvariants:
    det: Fraction
    unimodular: bool
    integral: bool
    even: bool
    odd: bool


def lattice_invariants(L: LatticeBasis) -> LatticeInvariants:
    s = L.scale
    n = L.dimension
    g = L.gram_scaled
    integral = all(g[i][j] % s == 0 for i in range(n) for j in range(n))
    even = integral and all(g[i][i] % (2 * s) == 0 for i in range(n))
    det = L.det_true()
    unimodular = det == 1 and integral
    return LatticeInvariants(
        det=det,
        unimodular=unimodular,
        integral=integral,
        even=even,
        odd=unimodular and not even,
    )


def construction_a(code: LinearCode) -> LatticeBasis:
    """The lattice (1/sqrt(m)) { rho(C) + m Z^n } for a self-dual code."""
    if not is_self_dual(code):
        raise DomainError("construction A requires a self-dual code")
    m = code.modulus.m
    n = code.length
    stack = [list(g.rho_lift()) for g in code.generators]
    stack += [[m if i == j else 0 for j in range(n)] for i in range(n)]
    basis = linalg.hermite_normal_form(stack, n)
    return LatticeBasis(m, basis)


def lll_reduce(L: LatticeBasis):
    """LLL-reduced basis of the same lattice; returns (reduced, transform)."""
    red, T = linalg.lll_reduce_rows(L.rows)
    out = LatticeBasis(L.scale, red)
    out._hnf = L._hnf  # same lattice, reuse the canonical form if cached
    return out, T


@dataclass
class ShellTable:
    """Counts of lattice vectors by true norm, up to max_norm."""

    counts: dict
    max_norm: Fraction
    exact: bool

    def count(self, norm) -> int:
        return self.counts.get(Fraction(norm), 0)


def shell_sizes(
    L: LatticeBasis, max_norm, budget: int = DEFAULT_NODE_BUDGET
) -> ShellTable:
    """Exact shell counts by complete enumeration below max_norm."""
    max_norm = Fraction(max_norm)
    if max_norm < 0:
        raise InputError("max_norm must be >= 0")
    bound_scaled = int(max_norm * L.scale)  # norms live in (1/scale) Z
    if bound_scaled == 0:
        return ShellTable({Fraction(0): 1}, max_norm, True)
    red, _ = lll_reduce(L)
    counts, nodes, complete = enumerate_by_norm(
        red.gram_scaled, bound_scaled, budget
    )
    if not complete:
        raise ResourceError(
            f"enumeration budget {budget} exhausted after {nodes} nodes",
            partial=None,
        )
    table = {Fraction(0): 1}
    for sc in range(1, bound_scaled + 1):
        if counts[sc]:
            table[Fraction(sc, L.scale)] = int(counts[sc])
    return ShellTable(table, max_norm, True)


def min_norm(L: LatticeBasis, budget: int = DEFAULT_NODE_BUDGET) -> Fraction:
    """Exact minimum norm, certified by complete enumeration.

    The smallest diagonal entry of the reduced Gram is an upper bound,
    so enumerating up to it is sufficient.
    """
    red, _ = lll_reduce(L)
    g = red.gram_scaled
    bound_scaled = min(g[i][i] for i in range(red.dimension))
    counts, nodes, complete = enumerate_by_norm(g, bound_scaled, budget)
    if not complete:
        raise ResourceError(
            f"enumeration budget {budget} exhausted after {nodes} nodes"
        )
    for sc in range(1, bound_scaled + 1):
        if counts[sc]:
            return Fraction(sc, L.scale)
    raise AssertionError("reduced basis vector not found by enumeration")


@dataclass
class WeightCertificate:
    """Outcome of a minimum-Euclidean-weight computation via the lattice."""

    exact: bool
    value: int  # d_E if exact, else a certified lower bound
    note: str = ""


def min_euclidean_weight_via_lattice(
    code: LinearCode, budget: int = DEFAULT_NODE_BUDGET
) -> WeightCertificate:
    """d_E(C) from min(A_m(C)) = min{m, d_E(C)/m}.

    If the lattice minimum mu < m the weight is exactly m*mu; if mu = m
    the certified statement is d_E >= m^2.
    """
    m = code.modulus.m
    L = construction_a(code)
    try:
        mu = min_norm(L, budget)
    except ResourceError as exc:
        # staged certification: find the largest complete radius
        red, _ = lll_reduce(L)
        g = red.gram_scaled
        floor_scaled = 0
        for b in range(1, m * m):
            counts, nodes, complete = enumerate_by_norm(g, b, budget)
            if not complete:
                break
            if any(counts[1:]):
                sc = next(i for i in range(1, b + 1) if counts[i])
                return WeightCertificate(True, sc, "exact via staged enumeration")
            floor_scaled = b
        return WeightCertificate(
            False,
            floor_scaled + 1,
            f"budget exhausted; no nonzero vector of scaled norm <= {floor_scaled}",
        )
    if mu < m:
        val = mu * m
        assert val.denominator == 1
        return WeightCertificate(True, int(val), "lattice minimum below m")
    return WeightCertificate(False, m * m, "lattice minimum equals m; d_E >= m^2")


@dataclass
class Frame:
    """n pairwise orthogonal vectors of common true norm in a host lattice."""

    host: LatticeBasis
    vectors: list  # scaled coordinate rows
    norm: int

    def validate(self):
        s = self.host.scale
        n = self.host.dimension
        if len(self.vectors) != n:
            raise InputError(f"frame needs {n} vectors, got {len(self.vectors)}")
        for i, u in enumerate(self.vectors):
            for j in range(i, n):
                v = self.vectors[j]
                want = s * self.norm if i == j else 0
                got = sum(x * y for x, y in zip(u, v))
                if got != want:
                    raise InputError(
                        f"frame inner product ({i},{j}) = {Fraction(got, s)}, "
                        f"want {Fraction(want, s)}"
                    )
        for u in self.vectors:
            if not self.host.contains(u):
                raise InputError("frame vector outside the host lattice")
        return self


def standard_frame(code: LinearCode) -> Frame:
    """The frame {sqrt(m) e_i} inside A_m(C), of norm m."""
    L = construction_a(code)
    m = code.modulus.m
    n = code.length
    vecs = [[m if i == j else 0 for j in range(n)] for i in range(n)]
    return Frame(L, vecs, m).validate()


def double_frame(frame: Frame) -> Frame:
    """Pairwise sums/differences: an (2*norm)-frame of the same host."""
    n = len(frame.vectors)
    if n % 2 != 0:
        raise DomainError("frame doubling needs an even number of vectors")
    out = []
    for i in range(0, n, 2):
        u, v = frame.vectors[i], frame.vectors[i + 1]
        out.append([a + b for a, b in zip(u, v)])
        out.append([a - b for a, b in zip(u, v)])
    return Frame(frame.host, out, 2 * frame.norm).validate()


def code_from_frame(L: LatticeBasis, frame: Frame) -> LinearCode:
    """The Z_m-code realizing L through an m-frame (m = frame norm).

    Coordinates of x in the frame are the true inner products <x, f_i>;
    reducing a basis of L modulo m generates the code.
    """
    m = frame.norm
    frame.validate()
    if not frame.host.same_lattice(L):
        raise InputError("frame host differs from the given lattice")
    s = L.scale
    gens = []
    for row in L.rows:
        coords = []
        for f in frame.vectors:
            num = sum(x * y for x, y in zip(row, f))
            if num % s != 0:
                raise InputError("frame coordinates are not integral")
            coords.append((num // s) % m)
        gens.append(coords)
    return LinearCode(Modulus(m), L.dimension, gens)


def frame_coordinate_image(L: LatticeBasis, frame: Frame) -> LatticeBasis:
    """L rewritten in frame coordinates: x -> (<x, f_i>)/sqrt(m).

    This is an isometric copy of L at scale m; for a valid m-frame it
    equals A_m(code_from_frame(L, frame)).
    """
    m = frame.norm
    s = L.scale
    rows = []
    for row in L.rows:
        coords = []
        for f in frame.vectors:
            num = sum(x * y for x, y in zip(row, f))
            if num % s != 0:
                raise InputError("frame coordinates are not integral")
            coords.append(num // s)
        rows.append(coords)
    return LatticeBasis(m, rows)


def even_sublattice(L: LatticeBasis) -> LatticeBasis:
    """The index-2 sublattice of even-norm vectors of an odd unimodular
    lattice; returns L itself when L is already even."""
    inv = lattice_invariants(L)
    if not inv.unimodular:
        raise DomainError("even sublattice is computed for unimodular lattices")
    if inv.even:
        return L
    s = L.scale
    n = L.dimension
    g = L.gram_scaled
    parities = [(g[i][i] // s) % 2 for i in range(n)]
    odd_idx = next(i for i, p in enumerate(parities) if p == 1)
    gens = []
    for i in range(n):
        if parities[i] == 0:
            gens.append(L.rows[i])
        elif i != odd_idx:
            gens.append([a + b for a, b in zip(L.rows[i], L.rows[odd_idx])])
    gens.append([2 * a for a in L.rows[odd_idx]])
    basis = linalg.hermite_normal_form(gens, n)
    return LatticeBasis(s, basis)


def _rescale_double(L: LatticeBasis) -> LatticeBasis:
    """The same lattice at scale 4*s (rows doubled)."""
    return LatticeBasis(4 * L.scale, [[2 * x for x in r] for r in L.rows])


def characteristic_vector(L: LatticeBasis):
    """A vector c in a unimodular L with c.x = x.x (mod 2) for all x.

    In basis coordinates c = t * (s G^{-1}) * B with t the vector of
    basis norms; s G^{-1} is integral exactly when L is unimodular.
    """
    inv = lattice_invariants(L)
    if not inv.unimodular:
        raise DomainError("characteristic vectors need a unimodular lattice")
    n = L.dimension
    s = L.scale
    g = L.gram_scaled
    g_inv = linalg.mat_inverse_fraction(g)
    t = [g[i][i] // s for i in range(n)]
    y = []
    for j in range(n):
        x = s * sum(Fraction(t[i]) * g_inv[i][j] for i in range(n))
        assert x.denominator == 1
        y.append(int(x))
    return [sum(y[i] * L.rows[i][j] for i in range(n)) for j in range(n)]


def even_neighbors(L: LatticeBasis):
    """Even unimodular neighbors of an odd unimodular lattice.

    The even sublattice L0 has [L0*:L0] = 4 with coset representatives
    0, w, c/2, c/2 + w, where w is any odd-norm basis vector and c is a
    characteristic vector; gluing L0 by the two cosets outside L gives
    the neighbor candidates.  Returns every even unimodular result
    (0, 1 or 2), each sharing the index-2 sublattice L0 with L.  Output
    lattices are expressed at scale 4*s so glue vectors have integer
    coordinates.
    """
    inv = lattice_invariants(L)
    if not inv.unimodular or inv.even:
        raise DomainError("even neighbors are computed for odd unimodular lattices")
    n = L.dimension
    if n % 8 != 0:
        raise DomainError(
            f"no even unimodular lattice exists in dimension {n} (need 8 | n)"
        )
    L0 = even_sublattice(L)
    s = L.scale
    c = characteristic_vector(L)
    g = L.gram_scaled
    odd_idx = next(i for i in range(n) if (g[i][i] // s) % 2 == 1)
    w = L.rows[odd_idx]

    L_doubled = _rescale_double(L)
    L0_doubled = _rescale_double(L0)
    # at scale 4s the coset c/2 is the integer row c; c/2 + w is c + 2w
    reps = [c, [a + 2 * b for a, b in zip(c, w)]]
    neighbors = []
    for rep in reps:
        stack = [r[:] for r in L0_doubled.rows] + [rep]
        basis = linalg.hermite_normal_form(stack, n)
        cand = LatticeBasis(4 * s, basis)
        if cand.same_lattice(L_doubled):
            continue
        cinv = lattice_invariants(cand)
        if cinv.unimodular and cinv.even:
            # sanity: the neighbor really contains the common sublattice
            assert all(cand.contains(r) for r in L0_doubled.rows)
            neighbors.append(cand)
    return neighbors


def export_lattice(L: LatticeBasis) -> str:
    """Textual format: 'dim scale' header then one integer row per line."""
    lines = [f"{L.dimension} {L.scale}"]
    for row in L.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def import_lattice(text: str) -> LatticeBasis:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 2:
        raise InputError("header must be 'dimension scale'")
    n, scale = int(head[0]), int(head[1])
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"expected {n} rows of {n} integers")
    return LatticeBasis(scale, rows)
