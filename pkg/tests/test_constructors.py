import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gradfrob.algebra import component, multiply, basis_vector, validate
from gradfrob.constructors import (
    QMatrix,
    aq_symmetric_condition,
    check_cocycle,
    koszul_dual_q,
    make_aq,
    make_exterior,
    make_good_matrix,
    make_twisted_group_algebra,
    truncated_polynomial,
    upper_triangular_2x2,
    with_trivial_grading,
)
from gradfrob.decide import decide_graded_symmetric, decide_sigma_frobenius
from gradfrob.errors import CocycleViolation, ValidationError
from gradfrob.group import BooleanVectors, Cyclic, Integers, Table

from oracles import random_q_entries, rewrite_word, s3_cayley, symmetric_q_entries

F = Fraction


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("seed", range(3))
def test_aq_constants_match_rewriting(n, seed):
    q = random_q_entries(random.Random(seed), n)
    a = make_aq(QMatrix(n, q), "z2n")
    word = {k: tuple(i + 1 for i, b in enumerate(g) if b) for k, g in enumerate(a.degrees)}
    index = {w: k for k, w in word.items()}
    for i, j in itertools.product(range(a.dimension), repeat=2):
        coeff, w = rewrite_word(word[i] + word[j], q)
        assert dict(a.product(i, j)) == ({index[w]: coeff} if coeff else {})


def test_aq_n2_examples():
    a = make_aq(QMatrix(2, {(1, 2): F(3)}), "z")
    e = lambda name: basis_vector(a, a.names.index(name))  # noqa: E731
    assert multiply(a, e("x2"), e("x1")) == [3 * x for x in e("x1x2")]
    assert multiply(a, e("x1"), e("x2")) == e("x1x2")
    assert a.dimension == 4 and [len(component(a, k)) for k in (0, 1, 2)] == [1, 2, 1]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_aq_squares_vanish(n):
    a = make_aq(QMatrix.constant(n, F(-2, 3)), "z2n")
    assert all(not a.product(k, k) for k in range(1, a.dimension))


def test_gradings_validate():
    for grading in ("z2n", "z", "trivial"):
        for n in (2, 3, 4):
            assert validate(make_aq(QMatrix(n, random_q_entries(random.Random(n), n)), grading)).passed
    with pytest.raises(ValueError):
        make_aq(QMatrix.constant(2), "zz")


def test_qmatrix_rejects_zero_and_missing():
    with pytest.raises(ValueError):
        QMatrix(2, {(1, 2): 0})
    with pytest.raises(ValueError):
        QMatrix(3, {(1, 2): 1})
    with pytest.raises(ValueError):
        QMatrix(2, {(1, 2): 1, (2, 1): 1})


def test_koszul_examples():
    assert koszul_dual_q(QMatrix(2, {(1, 2): 2}))[(1, 2)] == F(-1, 2)
    assert koszul_dual_q(QMatrix.constant(4, 1)) == QMatrix.constant(4, -1)


nonzero = st.fractions(min_value=-50, max_value=50, max_denominator=50).filter(bool)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), st.lists(nonzero, min_size=n * (n - 1) // 2,
                                                                           max_size=n * (n - 1) // 2))))
def test_koszul_involution(data):
    n, values = data
    keys = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    q = QMatrix(n, dict(zip(keys, values)))
    assert koszul_dual_q(koszul_dual_q(q)) == q


def test_symmetric_condition_examples():
    assert aq_symmetric_condition(QMatrix.constant(3, -1))
    assert not aq_symmetric_condition(QMatrix.constant(4, -1))
    assert aq_symmetric_condition(QMatrix(3, {(1, 2): F(2), (1, 3): F(1, 2), (2, 3): F(2)}))
    assert not aq_symmetric_condition(QMatrix(3, {(1, 2): F(2), (1, 3): F(2), (2, 3): F(2)}))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_handbuilt_symmetric_q_satisfy_condition(n):
    rng = random.Random(n)
    for _ in range(5):
        q = QMatrix(n, symmetric_q_entries(rng, n))
        assert aq_symmetric_condition(q)
        assert decide_graded_symmetric(make_aq(q, "trivial")).verdict


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_exterior(n):
    a = make_exterior(n)
    assert a.group == Integers() and a.dimension == 2 ** n
    assert decide_graded_symmetric(make_exterior(n, "trivial")).verdict is (n % 2 == 1)


def test_good_matrix_examples():
    a = make_good_matrix(Cyclic(2), [0, 1])
    assert dict(zip(a.names, a.degrees)) == {"e11": 0, "e12": 1, "e21": 1, "e22": 0}
    assert [a.names[i] for i in component(a, 0)] == ["e11", "e22"]
    e = lambda name: basis_vector(a, a.names.index(name))  # noqa: E731
    assert multiply(a, e("e12"), e("e21")) == e("e11")
    assert multiply(a, e("e12"), e("e12")) == [0] * 4
    const = make_good_matrix(Cyclic(3), [2, 2, 2])
    assert const.support == (0,)


@pytest.mark.parametrize("order, n", [(k, n) for k in (2, 3, 4) for n in (1, 2, 3)])
def test_good_matrices_validate(order, n):
    rng = random.Random(order * 10 + n)
    a = make_good_matrix(Cyclic(order), [rng.randrange(order) for _ in range(n)])
    assert validate(a).passed


def test_good_matrix_over_table_group():
    names, rows, _ = s3_cayley()
    a = make_good_matrix(Table(names, rows), [1, 4])
    assert validate(a).passed and decide_graded_symmetric(a).verdict


def test_twisted_group_algebras():
    z2 = make_twisted_group_algebra(Cyclic(2))
    assert validate(z2).passed and decide_sigma_frobenius(z2, 0).verdict
    for group in (Cyclic(3), BooleanVectors(2), Table(*s3_cayley()[:2])):
        a = make_twisted_group_algebra(group)
        assert validate(a).passed and decide_graded_symmetric(a).verdict
    # (-1)^(g_1 h_2) as an explicit table
    table = {(g, h): -1 for g in [(1, 0), (1, 1)] for h in [(0, 1), (1, 1)]}
    sign = make_twisted_group_algebra(BooleanVectors(2), table)
    assert validate(sign).passed
    with pytest.raises(CocycleViolation):
        make_twisted_group_algebra(BooleanVectors(2), {((1, 0), (0, 1)): -1})


def test_cocycle_violations():
    with pytest.raises(CocycleViolation):
        make_twisted_group_algebra(Cyclic(2), {(1, 1): 0})
    with pytest.raises(CocycleViolation):
        make_twisted_group_algebra(Cyclic(2), {(0, 1): 2})
    with pytest.raises(CocycleViolation) as info:
        check_cocycle(Cyclic(3), lambda g, h: 2 if (g, h) == (1, 1) else 1)
    assert len(info.value.witness) == 3
    with pytest.raises(ValueError):
        make_twisted_group_algebra(Integers())


def test_trivial_grading_helpers():
    assert truncated_polynomial(2).dimension == 2
    assert upper_triangular_2x2().dimension == 3
    with pytest.raises(ValidationError):
        with_trivial_grading({(0, 0): {0: 1}, (0, 1): {1: 1}}, [1, 0])
