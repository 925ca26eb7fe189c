import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gradfrob.errors import NotSquare, VariableMismatch
from gradfrob.exactmath import (
    LinearFormMatrix,
    MultiPoly,
    determinant,
    eval_at,
    format_rational,
    is_generically_invertible,
    nonvanishing_point,
    nullspace_basis,
    parse_rational,
    rational_rank,
    symbolic_det,
    transpose,
)

from oracles import gauss_rank, leibniz_det, poly_matrix

F = Fraction


def lfm(rows, nvars):
    """Dense helper: rows of {var: coef} dicts."""
    n_r, n_c = len(rows), len(rows[0]) if rows else 0
    entries = {(r, c): rows[r][c] for r in range(n_r) for c in range(n_c) if rows[r][c]}
    return LinearFormMatrix(range(n_r), range(n_c), range(nvars), entries)


# -- rank / nullspace ----------------------------------------------------------

def test_rank_antidiagonal_with_q_minus_one():
    # det [[0,1],[q,0]] = -q, nonzero for q = -1
    assert rational_rank([[0, 1], [-1, 0]]) == 2


def test_rank_of_empty_matrix_is_zero():
    assert rational_rank([]) == 0
    assert rational_rank([[], [], []]) == 0


def test_rank_proportional_rows():
    assert rational_rank([[1, 2], [2, 4]]) == 1


def test_nullspace_examples():
    assert nullspace_basis([[1, 0], [0, 1]]) == []
    assert len(nullspace_basis([[0, 0]])) == 2
    assert nullspace_basis([[1, -1]]) == [[F(1), F(1)]]
    assert len(nullspace_basis([], ncols=3)) == 3


def random_matrix(rng, n_r, n_c, density=0.6):
    return [[F(rng.randint(-3, 3), rng.randint(1, 3)) if rng.random() < density else F(0)
             for _ in range(n_c)] for _ in range(n_r)]


@pytest.mark.parametrize("seed", range(30))
def test_rank_matches_oracle_and_transpose(seed):
    rng = random.Random(seed)
    m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
    r = rational_rank(m)
    assert r == gauss_rank(m) == rational_rank(transpose(m))
    basis = nullspace_basis(m)
    assert len(basis) == len(m[0]) - r
    for v in basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@pytest.mark.parametrize("seed", range(20))
def test_scalar_determinant_matches_leibniz(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(0, 5)
    m = random_matrix(rng, n, n)
    assert determinant(m) == leibniz_det(m, n)


# -- polynomials -----------------------------------------------------------------

def test_multipoly_arithmetic_and_exact_division():
    x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    p = (x + y) * (x - y * 2) + 3
    q = x + y
    assert (p * q).divexact(q) == p
    with pytest.raises(ArithmeticError):
        (x * x + 1).divexact(x)
    assert p.evaluate([1, 2]) == F(3 * -3 + 3)
    assert p.partial(0, 1).evaluate([0, 2]) == p.evaluate([1, 2])


def test_rational_format_round_trip():
    for text in ["0", "7", "-3/4", "12/5"]:
        assert format_rational(parse_rational(text)) == text
    assert parse_rational("6/8") == F(3, 4)


# -- symbolic determinants -----------------------------------------------------------

def test_symbolic_det_one_by_one():
    assert symbolic_det(lfm([[{0: 1}]], 1)) == MultiPoly.variable(1, 0)


def test_symbolic_det_two_by_two_by_hand():
    # [[a1, a2], [a2, 0]]: cofactor expansion gives -a2^2
    m = lfm([[{0: 1}, {1: 1}], [{1: 1}, {}]], 2)
    a2 = MultiPoly.variable(2, 1)
    assert symbolic_det(m) == -(a2 * a2)


def test_symbolic_det_equal_rows_vanishes():
    m = lfm([[{0: 1}, {0: 1}], [{0: 1}, {0: 1}]], 1)
    assert symbolic_det(m).is_zero()


def test_symbolic_det_empty_is_one_and_non_square_rejected():
    assert symbolic_det(LinearFormMatrix([], [], [0, 1], {})) == MultiPoly.constant(2, 1)
    with pytest.raises(NotSquare):
        symbolic_det(lfm([[{0: 1}, {0: 2}]], 1))


def random_lfm(rng, n, nvars, density):
    rows = [[{v: rng.randint(-2, 2) for v in range(nvars) if rng.random() < 0.5}
             if rng.random() < density else {} for _ in range(n)] for _ in range(n)]
    return lfm(rows, nvars)


@pytest.mark.parametrize("seed", range(60))
def test_symbolic_det_matches_leibniz(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    m = random_lfm(rng, n, rng.randint(1, 3), rng.choice([0.2, 0.5, 0.9]))
    assert symbolic_det(m) == leibniz_det(poly_matrix(m), n)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_det_commutes_with_evaluation(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    nvars = rng.randint(1, 3)
    m = random_lfm(rng, n, nvars, rng.choice([0.2, 0.5, 0.9]))
    alpha = [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(nvars)]
    assert determinant(eval_at(m, alpha)) == symbolic_det(m).evaluate(alpha)


def test_bareiss_path_on_dense_matrix():
    rng = random.Random(7)
    m = random_lfm(rng, 6, 3, 1.0)
    from gradfrob.exactmath.forms import bareiss_poly_det

    dense = poly_matrix(m)
    assert bareiss_poly_det(dense, 3) == symbolic_det(m)
    alpha = [2, -1, 3]
    assert symbolic_det(m).evaluate(alpha) == determinant(eval_at(m, alpha))


# -- evaluation ------------------------------------------------------------------

def test_eval_at_examples():
    m = lfm([[{0: 1}, {1: 1}], [{1: 1}, {}]], 2)
    assert eval_at(m, [1, 1]) == [[1, 1], [1, 0]]
    assert eval_at(m, [0, 0]) == [[0, 0], [0, 0]]
    assert eval_at(lfm([[{0: 2}]], 1), [F(3, 2)]) == [[3]]
    with pytest.raises(VariableMismatch):
        eval_at(m, [1])


# -- generic invertibility ----------------------------------------------------------

def test_generic_invertibility_antidiagonal():
    m = lfm([[{}, {0: 1}], [{0: 1}, {}]], 1)
    res = is_generically_invertible(m)
    assert res.invertible and res.witness == (F(1),) and res.determinant == -1


def test_generic_invertibility_equal_rows_is_no():
    m = lfm([[{0: 1}, {0: 1}], [{0: 1}, {0: 1}]], 1)
    for strategy in ("auto", "randomized", "symbolic"):
        res = is_generically_invertible(m, strategy=strategy)
        assert not res.invertible and res.polynomial.is_zero()


def test_generic_invertibility_empty_matrix():
    res = is_generically_invertible(LinearFormMatrix([], [], [], {}))
    assert res.invertible and res.witness == ()


def test_generic_invertibility_preconditions():
    m = lfm([[{0: 1}]], 1)
    with pytest.raises(ValueError):
        is_generically_invertible(m, trials=0)
    with pytest.raises(ValueError):
        is_generically_invertible(m, sample_bound=1)
    with pytest.raises(NotSquare):
        is_generically_invertible(lfm([[{0: 1}, {}]], 1))


def test_sampling_can_miss_but_answer_stays_exact():
    # det = a0 - 1: the all-ones probe hits the zero set, a random draw does not
    m = LinearFormMatrix([0, 1], [0, 1], [0, 1], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}})
    # det = a0*a1 - a1^2 = a1 (a0 - a1), zero on the diagonal a0 == a1
    res = is_generically_invertible(m, seed=3)
    assert res.invertible and res.witness[0] != res.witness[1]
    forced = is_generically_invertible(m, strategy="symbolic")
    assert forced.invertible and forced.method == "symbolic"
    assert determinant(eval_at(m, forced.witness)) == forced.determinant != 0


@pytest.mark.parametrize("seed", range(10))
def test_seed_reproducible_and_witness_full_rank(seed):
    rng = random.Random(seed)
    m = random_lfm(rng, 4, 3, 0.8)
    a = is_generically_invertible(m, seed=seed)
    b = is_generically_invertible(m, seed=seed)
    assert a.invertible == b.invertible and a.witness == b.witness
    assert a.invertible == (not symbolic_det(m).is_zero())
    if a.invertible:
        assert rational_rank(eval_at(m, a.witness)) == 4


def test_nonvanishing_point():
    x, y = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    p = (x - 1) * (y - 1) * (y - 2)
    pt = nonvanishing_point(p)
    assert p.evaluate(pt) != 0
    with pytest.raises(ValueError):
        nonvanishing_point(MultiPoly.zero(2))
