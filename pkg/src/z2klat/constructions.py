"""Four-negacirculant generator matrices, the bundled code catalog, and
seeded random search for codes of the same family."""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from importlib import resources

from .codes import LinearCode, is_self_dual, is_type_ii
from .errors import CatalogError, ConstructionError, InputError
from .ring import Modulus, ResidueVector

CATALOG_ENV_VAR = "ZKLAT_CATALOG"


@dataclass(frozen=True)
class NegacirculantSpec:
    """First rows of the two negacirculant blocks A and B."""

    modulus: Modulus
    first_row_a: tuple
    first_row_b: tuple

    def __post_init__(self):
        if len(self.first_row_a) != len(self.first_row_b):
            raise InputError("blocks A and B must have the same size")
        if len(self.first_row_a) < 1:
            raise InputError("block size must be >= 1")

    @property
    def block_size(self) -> int:
        return len(self.first_row_a)

    @property
    def code_length(self) -> int:
        return 4 * self.block_size


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: NegacirculantSpec
    claims: dict
    source: str

    @property
    def modulus(self) -> Modulus:
        return self.spec.modulus

    @property
    def length(self) -> int:
        return self.spec.code_length


def negacirculant(first_row, m: int):
    """Square matrix whose rows are right rotations with the wrapped
    entry negated (mod m)."""
    row = [int(x) % m for x in first_row]
    size = len(row)
    out = [row[:]]
    for _ in range(size - 1):
        prev = out[-1]
        out.append([(-prev[-1]) % m] + prev[:-1])
    return out


def four_negacirculant_code(spec: NegacirculantSpec) -> LinearCode:
    """The code generated by [ I | A B ; -B^T A^T ], length 4 * block.

    Requires AA^T + BB^T = -I (mod m); the resulting code is self-dual.
    """
    m = spec.modulus.m
    size = spec.block_size
    A = negacirculant(spec.first_row_a, m)
    B = negacirculant(spec.first_row_b, m)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v)) % m

    for i in range(size):
        for j in range(size):
            want = (m - 1) % m if i == j else 0
            got = (dot(A[i], A[j]) + dot(B[i], B[j])) % m
            if got != want:
                raise ConstructionError(
                    f"AA^T + BB^T != -I at entry ({i},{j}): got {got}, want {want}"
                )

    n = 4 * size
    rows = []
    for i in range(size):
        row = [0] * (2 * size) + A[i] + B[i]
        row[i] = 1
        rows.append(row)
    for i in range(size):
        # block row [0 I | -B^T A^T]
        row = [0] * (2 * size)
        row += [(-B[j][i]) % m for j in range(size)]
        row += [A[j][i] % m for j in range(size)]
        row[size + i] = 1
        rows.append(row)
    return LinearCode(spec.modulus, n, rows)


def _entry_from_json(obj) -> CatalogEntry:
    spec = NegacirculantSpec(
        Modulus(int(obj["m"])),
        tuple(int(x) for x in obj["rows_a"]),
        tuple(int(x) for x in obj["rows_b"]),
    )
    return CatalogEntry(
        name=obj["name"],
        spec=spec,
        claims=dict(obj.get("claims", {})),
        source=obj.get("source", "unknown"),
    )


def load_catalog(path: str | None = None):
    """The bundled catalog, or the one at `path` / $ZKLAT_CATALOG."""
    if path is None:
        path = os.environ.get(CATALOG_ENV_VAR)
    if path is None:
        text = (
            resources.files("z2klat").joinpath("data/catalog.json").read_text()
        )
    else:
        with open(path) as fh:
            text = fh.read()
    entries = [_entry_from_json(obj) for obj in json.loads(text)]
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise CatalogError("duplicate names in catalog")
    return entries


def catalog_lookup(name: str, path: str | None = None) -> CatalogEntry:
    for entry in load_catalog(path):
        if entry.name == name:
            return entry
    raise CatalogError(f"no catalog entry named {name!r}")


def search_negacirculant(
    k: int,
    target_length: int,
    budget: int = 20000,
    seed: int = 0,
    max_results: int = 1,
    require_type_ii: bool | None = None,
):
    """Seeded random search for four-negacirculant specs over Z_2k.

    Returns up to `max_results` specs satisfying the -I condition whose
    codes are Type II when 8 | target_length (self-dual otherwise).
    Exhausting the budget returns whatever was found, possibly nothing.
    """
    if target_length % 4 != 0:
        raise InputError("four-negacirculant codes have length divisible by 4")
    mod = Modulus.from_k(k)
    m = mod.m
    size = target_length // 4
    if require_type_ii is None:
        require_type_ii = target_length % 8 == 0
    rng = random.Random(seed)
    found = []
    seen = set()
    for _ in range(budget):
        ra = tuple(rng.randrange(m) for _ in range(size))
        rb = tuple(rng.randrange(m) for _ in range(size))
        if (ra, rb) in seen:
            continue
        seen.add((ra, rb))
        # cheap diagonal rejection before building the full code
        diag = (sum(x * x for x in ra) + sum(x * x for x in rb)) % m
        if diag != (m - 1) % m:
            continue
        spec = NegacirculantSpec(mod, ra, rb)
        try:
            code = four_negacirculant_code(spec)
        except ConstructionError:
            continue
        if not is_self_dual(code):
            continue
        if require_type_ii and not is_type_ii(code):
            continue
        found.append(spec)
        if len(found) >= max_results:
            break
    return found
