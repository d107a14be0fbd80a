import random

import pytest

from leavitt import (
    CohnElement,
    FieldSpec,
    LeavittElement,
    MatrixElement,
    Scalar,
    identity_matrix,
    matrix_from_strings,
    unit,
)

from helpers import random_cohn
from leavitt.leavitt import normal_form

Q = FieldSpec(0)
F2 = FieldSpec(2)


def random_matrix(d, n, spec, rng, leavitt=True):
    def entry():
        c = random_cohn(n, spec, rng, max_len=2, max_terms=2)
        return normal_form(c) if leavitt else c

    return MatrixElement([[entry() for _ in range(d)] for _ in range(d)])


def test_unit_bracket_gives_diagonal_difference():
    one = LeavittElement.one(3, F2)
    got = unit(one, 1, 2, 2).bracket(unit(one, 2, 1, 2))
    expected = unit(one, 1, 1, 2) - unit(one, 2, 2, 2)
    assert got == expected


def test_identity_is_neutral():
    rng = random.Random(3)
    eye = identity_matrix(LeavittElement.one(3, Q), 3)
    for _ in range(20):
        a = random_matrix(3, 3, Q, rng)
        assert a * eye == a
        assert eye * a == a


def test_bracket_is_alternating():
    rng = random.Random(5)
    for _ in range(20):
        a = random_matrix(2, 2, F2, rng)
        assert a.bracket(a).is_zero()


def test_unit_product_calculus():
    rng = random.Random(7)
    d = 3
    for _ in range(60):
        i, j, k, l = (rng.randint(1, d) for _ in range(4))
        a = normal_form(random_cohn(2, Q, rng, max_len=2, max_terms=2))
        b = normal_form(random_cohn(2, Q, rng, max_len=2, max_terms=2))
        got = unit(a, i, j, d) * unit(b, k, l, d)
        if j == k:
            assert got == unit(a * b, i, l, d)
        else:
            assert got.is_zero()


def test_units_decompose_the_identity():
    one = LeavittElement.one(2, Q)
    total = unit(one, 1, 1, 3) + unit(one, 2, 2, 3) + unit(one, 3, 3, 3)
    assert total == identity_matrix(one, 3)


def test_single_cell_identity():
    one = LeavittElement.one(2, Q)
    assert unit(one, 1, 1, 1) == identity_matrix(one, 1)


def test_unit_rejects_out_of_range_positions():
    one = LeavittElement.one(2, Q)
    for i, j in ((0, 1), (1, 0), (3, 1), (1, 3)):
        with pytest.raises(ValueError):
            unit(one, i, j, 2)


def test_dimension_and_context_mismatches():
    one2 = LeavittElement.one(2, Q)
    one3 = LeavittElement.one(3, Q)
    with pytest.raises(ValueError):
        identity_matrix(one2, 2) + identity_matrix(one2, 3)
    with pytest.raises(ValueError):
        MatrixElement([[one2, one3], [one2, one2]])
    with pytest.raises(ValueError):
        MatrixElement([[one2, one2]])


def test_matrix_trace_of_identity():
    eye = identity_matrix(LeavittElement.one(3, F2), 4)
    assert eye.trace() == F2.zero()  # 4 * 1 = 0 in characteristic 2
    eye3 = identity_matrix(LeavittElement.one(3, F2), 3)
    assert eye3.trace() == F2.one()


def test_matrix_trace_of_off_diagonal_unit():
    got = unit(LeavittElement.one(3, F2), 1, 2, 3).trace()
    assert got.is_zero()


def test_matrix_trace_is_symmetric():
    rng = random.Random(11)
    for n, p in ((3, 2), (4, 3)):
        spec = FieldSpec(p)
        for d in (1, 2, 3):
            for _ in range(15):
                a = random_matrix(d, n, spec, rng)
                b = random_matrix(d, n, spec, rng)
                assert (a * b).trace() == (b * a).trace()
                assert a.bracket(b).trace().is_zero()


def test_matrix_trace_over_cohn_entries():
    # the same matrix code runs over the plain algebra, whose trace is total
    one = CohnElement.one(3, Q)
    eye = identity_matrix(one, 2)
    assert eye.trace() == Scalar(Q, 2)


def test_matrix_multiplication_is_associative():
    rng = random.Random(13)
    for _ in range(10):
        a = random_matrix(2, 2, F2, rng)
        b = random_matrix(2, 2, F2, rng)
        c = random_matrix(2, 2, F2, rng)
        assert (a * b) * c == a * (b * c)


def test_scaling():
    one = LeavittElement.one(2, Q)
    eye = identity_matrix(one, 2)
    assert eye.scale(Scalar(Q, 3)) == eye * 3


def test_string_round_trip():
    rng = random.Random(17)
    for _ in range(10):
        a = random_matrix(2, 3, F2, rng)
        rows = a.to_strings()
        back = matrix_from_strings(rows, 3, F2, leavitt=True)
        assert back == a
        assert back.to_strings() == rows
