import itertools

import pytest


def span_bruteforce(rows, m, n):
    """All Z_m-combinations of the rows, as a set of tuples."""
    if not rows:
        return {(0,) * n}
    out = set()
    for coeffs in itertools.product(range(m), repeat=len(rows)):
        word = [0] * n
        for c, row in zip(coeffs, rows):
            for j in range(n):
                word[j] = (word[j] + c * row[j]) % m
        out.add(tuple(word))
    return out


@pytest.fixture(scope="session")
def seed_specs():
    """The bundled length-8 seed specs, one per k = 1..6."""
    from z2klat.constructions import catalog_lookup

    return {k: catalog_lookup(f"S_{{{2 * k},8}}") for k in range(1, 7)}
