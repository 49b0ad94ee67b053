from fractions import Fraction

from hypothesis import given, settings, strategies as st

from z2klat import linalg
from conftest import span_bruteforce

small_mod = st.integers(min_value=2, max_value=9)


def rows_strategy(m, max_n=4, max_rows=3):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=0, max_value=m - 1), min_size=n, max_size=n),
            min_size=1,
            max_size=max_rows,
        )
    )


@settings(max_examples=60, deadline=None)
@given(small_mod, st.data())
def test_howell_form_canonical_and_span_preserving(m, data):
    rows = data.draw(rows_strategy(m))
    n = len(rows[0])
    h = linalg.howell_form(rows, m, n)
    assert span_bruteforce(h, m, n) == span_bruteforce(rows, m, n)
    # idempotent: the form of the form is itself
    assert linalg.howell_form(h, m, n) == h
    assert linalg.howell_cardinality(h, m) == len(span_bruteforce(rows, m, n))


@settings(max_examples=40, deadline=None)
@given(small_mod, st.data())
def test_howell_membership_matches_span(m, data):
    rows = data.draw(rows_strategy(m, max_n=3))
    n = len(rows[0])
    h = linalg.howell_form(rows, m, n)
    span = span_bruteforce(rows, m, n)
    import itertools

    for v in itertools.product(range(m), repeat=n):
        assert linalg.howell_member(h, list(v), m) == (v in span)


@settings(max_examples=50, deadline=None)
@given(small_mod, st.data())
def test_kernel_is_the_annihilator(m, data):
    rows = data.draw(rows_strategy(m, max_n=3))
    n = len(rows[0])
    ker = linalg.kernel_mod(rows, m, n)
    import itertools

    want = {
        v
        for v in itertools.product(range(m), repeat=n)
        if all(sum(a * b for a, b in zip(v, r)) % m == 0 for r in rows)
    }
    assert span_bruteforce(ker, m, n) == want


def test_kernel_of_nothing_is_everything():
    ker = linalg.kernel_mod([], 4, 2)
    assert span_bruteforce(ker, 4, 2) == span_bruteforce([[1, 0], [0, 1]], 4, 2)
    ker0 = linalg.kernel_mod([[0, 0]], 4, 2)
    assert span_bruteforce(ker0, 4, 2) == span_bruteforce([[1, 0], [0, 1]], 4, 2)


def _contains_integer_combo(hnf_rows, v):
    v = list(v)
    for row in hnf_rows:
        c = next(j for j, x in enumerate(row) if x != 0)
        if v[c] % row[c] != 0:
            return False
        t = v[c] // row[c]
        v = [a - t * b for a, b in zip(v, row)]
    return not any(v)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-5, max_value=5), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    )
)
def test_hnf_generates_the_same_lattice(rows):
    if linalg.det_int(rows) == 0:
        return
    h = linalg.hermite_normal_form(rows, 3)
    assert abs(linalg.det_int(h)) == abs(linalg.det_int(rows))
    for r in rows:
        assert _contains_integer_combo(h, r)
    # canonical: HNF of the HNF is identical
    assert linalg.hermite_normal_form(h, 3) == h


@settings(max_examples=30, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4),
        min_size=4,
        max_size=4,
    )
)
def test_lll_transform_is_unimodular_and_exact(rows):
    if linalg.det_int(rows) == 0:
        return
    red, T = linalg.lll_reduce_rows(rows)
    assert abs(linalg.det_int(T)) == 1
    assert linalg.mat_mul(T, rows) == red
    h1 = linalg.hermite_normal_form(rows, 4)
    h2 = linalg.hermite_normal_form(red, 4)
    assert h1 == h2


def test_mat_inverse_fraction():
    a = [[2, 1], [1, 1]]
    inv = linalg.mat_inverse_fraction(a)
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]


def test_gram_and_det():
    rows = [[1, 1], [0, 2]]
    assert linalg.gram_matrix(rows) == [[2, 2], [2, 4]]
    assert linalg.det_int(rows) == 2
    assert linalg.det_int([[3]]) == 3
