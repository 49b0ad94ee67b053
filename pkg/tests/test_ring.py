import pytest
from hypothesis import given, strategies as st

from z2klat.errors import DomainError, InputError
from z2klat.ring import (
    Modulus,
    ResidueVector,
    euclidean_weight,
    inner_product,
    residue_square_weight,
    rho,
)


def test_modulus_basics():
    m = Modulus(12)
    assert m.is_even and m.k == 6
    assert Modulus.from_k(3) == Modulus(6)
    with pytest.raises(InputError):
        Modulus(0)
    with pytest.raises(InputError):
        Modulus.from_k(0)


def test_odd_modulus_has_no_k():
    with pytest.raises(DomainError):
        Modulus(5).k


@given(st.integers(min_value=1, max_value=30), st.data())
def test_rho_is_the_nearest_lift(m, data):
    mod = Modulus(m)
    x = data.draw(st.integers(min_value=0, max_value=m - 1))
    r = rho(x, mod)
    assert r % m == x
    # rho picks a representative of minimal absolute value
    assert abs(r) == min(abs(x + m * t) for t in range(-2, 3))
    assert residue_square_weight(x, mod) == r * r


@given(st.integers(min_value=1, max_value=20), st.data())
def test_square_weight_is_min_over_lifts(m, data):
    mod = Modulus(m)
    x = data.draw(st.integers(min_value=0, max_value=m - 1))
    best = min((x + m * t) ** 2 for t in range(-3, 4))
    assert residue_square_weight(x, mod) == best


def test_rho_range_error():
    with pytest.raises(InputError):
        rho(4, Modulus(4))
    with pytest.raises(InputError):
        rho(-1, Modulus(4))


def test_residue_vector_reduce_and_ops():
    mod = Modulus(6)
    u = ResidueVector.reduce([7, -1, 0, 12], mod)
    assert u.entries == (1, 5, 0, 0)
    v = ResidueVector(mod, (2, 2, 3, 1))
    assert (u + v).entries == (3, 1, 3, 1)
    assert (4 * u).entries == (4, 2, 0, 0)
    assert u.rho_lift() == (1, -1, 0, 0)
    assert not u.is_zero()
    assert ResidueVector(mod, (0, 0, 0, 0)).is_zero()


def test_cross_modulus_is_an_error():
    u = ResidueVector(Modulus(4), (1, 2))
    v = ResidueVector(Modulus(6), (1, 2))
    with pytest.raises(InputError):
        u + v
    with pytest.raises(InputError):
        inner_product(u, v)


def test_euclidean_weight_examples():
    mod = Modulus(12)
    v = ResidueVector(mod, (0, 1, 6, 11, 7))
    # squares: 0, 1, 36, 1, 25
    assert euclidean_weight(v) == 63


@given(
    st.integers(min_value=1, max_value=12),
    st.lists(st.integers(min_value=0, max_value=100), min_size=1, max_size=6),
)
def test_euclidean_weight_matches_lift_definition(m, raw):
    mod = Modulus(m)
    v = ResidueVector.reduce(raw, mod)
    want = sum(min((x + m * t) ** 2 for t in range(-3, 4)) for x in v.entries)
    assert euclidean_weight(v) == want


def test_inner_product_symmetric_bilinear():
    mod = Modulus(10)
    u = ResidueVector(mod, (3, 7, 1))
    v = ResidueVector(mod, (2, 9, 4))
    w = ResidueVector(mod, (5, 5, 5))
    assert inner_product(u, v) == inner_product(v, u)
    assert inner_product(u + w, v) == (inner_product(u, v) + inner_product(w, v)) % 10
