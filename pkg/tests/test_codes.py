import pytest
from hypothesis import given, settings, strategies as st

from z2klat.codes import (
    LinearCode,
    cardinality,
    dual,
    enumerate_codewords,
    extremal_bound,
    howell_form,
    is_extremal,
    is_self_dual,
    is_self_orthogonal,
    is_type_ii,
    min_euclidean_weight_bruteforce,
    swe,
)
from z2klat.errors import DomainError, InputError, ResourceError
from z2klat.ring import Modulus, ResidueVector, euclidean_weight
from conftest import span_bruteforce


def rows_strategy(m, n, max_rows=3):
    return st.lists(
        st.lists(st.integers(min_value=0, max_value=m - 1), min_size=n, max_size=n),
        min_size=1,
        max_size=max_rows,
    )


def test_code_equality_is_by_submodule():
    a = LinearCode.from_rows([[1, 1], [2, 2]], 4)
    b = LinearCode.from_rows([[3, 3]], 4)
    assert a == b
    assert hash(a) == hash(b)
    assert a != LinearCode.from_rows([[2, 2]], 4)


def test_generator_validation():
    with pytest.raises(InputError):
        LinearCode(Modulus(4), 3, [[1, 2]])
    with pytest.raises(InputError):
        LinearCode(Modulus(4), 2, [ResidueVector(Modulus(6), (1, 2))])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 6, 8]), st.data())
def test_enumeration_and_cardinality_match_bruteforce(m, data):
    n = data.draw(st.integers(min_value=1, max_value=3))
    code = LinearCode.from_rows(data.draw(rows_strategy(m, n)), m)
    span = span_bruteforce([list(r) for r in code.canonical], m, n)
    assert cardinality(code) == len(span)
    words = {w.entries for w in enumerate_codewords(code)}
    assert words == span


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 4, 5, 6, 9]), st.data())
def test_dual_is_the_annihilator_and_involutive(m, data):
    n = data.draw(st.integers(min_value=1, max_value=3))
    code = LinearCode.from_rows(data.draw(rows_strategy(m, n)), m)
    d = dual(code)
    import itertools

    ann = {
        v
        for v in itertools.product(range(m), repeat=n)
        if all(
            sum(a * b for a, b in zip(v, g.entries)) % m == 0
            for g in code.generators
        )
    }
    assert {w.entries for w in enumerate_codewords(d)} == ann
    assert dual(d) == code
    assert cardinality(code) * cardinality(d) == m ** n


def test_self_dual_detection():
    # the repetition pair {00, 22} over Z_4^1-style: span{(2,)} is not
    # self-dual in Z_4^1? |C| = 2, m^n = 4, |C|^2 = 4: it is.
    assert is_self_dual(LinearCode.from_rows([[2]], 4))
    assert is_self_dual(LinearCode.from_rows([[1, 1]], 2))
    assert not is_self_dual(LinearCode.from_rows([[1, 0]], 2))
    assert not is_self_dual(LinearCode.from_rows([[1, 1]], 4))
    assert is_self_dual(LinearCode.from_rows([[2, 0], [0, 2]], 4))


def test_self_orthogonal_vs_self_dual():
    c = LinearCode.from_rows([[2, 2]], 4)
    assert is_self_orthogonal(c)
    assert not is_self_dual(c)  # too small


def test_swe_totals_and_symmetry():
    code = LinearCode.from_rows([[1, 3], [2, 2]], 4)
    w = swe(code)
    assert w.total() == cardinality(code) == 4
    # zero word contributes the composition (n, 0, ..., 0)
    assert w.coefficients[(2, 0, 0)] == 1


def test_swe_rejects_odd_modulus():
    with pytest.raises(DomainError):
        swe(LinearCode.from_rows([[1, 2]], 5))


def test_type_ii_direct_and_generator_criteria_agree():
    # d4-like Type II code over Z_2: the extended Hamming [8,4] code
    rows = [
        [1, 1, 1, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 0, 1],
    ]
    code = LinearCode.from_rows(rows, 2)
    assert is_self_dual(code)
    assert is_type_ii(code)
    assert is_type_ii(code, direct_cap=1) == is_type_ii(code, direct_cap=2 ** 16)
    # self-dual but not Type II over Z_2
    c2 = LinearCode.from_rows([[1, 1]], 2)
    assert is_self_dual(c2) and not is_type_ii(c2)


def test_type_ii_false_for_odd_modulus():
    assert not is_type_ii(LinearCode.from_rows([[1, 2]], 5))


def test_min_weight_bruteforce_matches_enumeration():
    code = LinearCode.from_rows([[1, 3], [2, 2]], 4)
    want = min(
        euclidean_weight(w)
        for w in enumerate_codewords(code)
        if not w.is_zero()
    )
    assert min_euclidean_weight_bruteforce(code) == want == 2


def test_min_weight_rejects_zero_code():
    with pytest.raises(DomainError):
        min_euclidean_weight_bruteforce(LinearCode.from_rows([[0, 0]], 4))


def test_enumeration_cap():
    code = LinearCode.from_rows([[1, 0], [0, 1]], 8)
    with pytest.raises(ResourceError):
        list(enumerate_codewords(code, cap=10))


def test_extremal_bound_values():
    assert extremal_bound(32, 6) == 48
    assert extremal_bound(8, 1) == 4
    assert extremal_bound(24, 2) == 16
    with pytest.warns(UserWarning):
        extremal_bound(10, 1)


def test_is_extremal_domain():
    code = LinearCode.from_rows([[1, 3], [2, 2]], 4)
    assert is_extremal(code, extremal_bound(code.length, 2))
    assert not is_extremal(code, 4)
    with pytest.raises(DomainError):
        is_extremal(LinearCode.from_rows([[1, 2]], 5), 4)
    with pytest.raises(DomainError):
        is_extremal(LinearCode.from_rows([[7]], 14), 4)


def test_howell_form_public_wrapper_copies():
    code = LinearCode.from_rows([[1, 1]], 4)
    h = howell_form(code)
    h[0][0] = 99
    assert code.canonical[0][0] != 99
