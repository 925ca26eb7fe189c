"""Matrices of linear forms and generic-invertibility testing.

A linear form is a plain ``dict`` mapping a variable position to a nonzero
``Fraction`` coefficient (no constant term); ``{}`` is the zero form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterator, Mapping, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..errors import NotSquare, VariableMismatch
from .linalg import determinant
from .poly import MultiPoly

LinearForm = dict

STRATEGIES = ("auto", "randomized", "symbolic")
DEFAULT_TRIALS = 4
DEFAULT_SAMPLE_BOUND = 2 ** 16
SPARSE_DENSITY = 0.25


def clean_form(form: Mapping[int, object]) -> LinearForm:
    out = {}
    for v, c in form.items():
        c = Fraction(c)
        if c:
            out[v] = c
    return out


class LinearFormMatrix:
    """Sparse matrix whose entries are linear forms over ``variables``.

    ``rows``/``cols``/``variables`` are label tuples (typically basis
    indices); ``entries`` maps ``(row position, col position)`` to a
    nonzero linear form keyed by variable position.
    """

    __slots__ = ("rows", "cols", "variables", "entries")

    def __init__(self, rows: Sequence[Hashable], cols: Sequence[Hashable],
                 variables: Sequence[Hashable], entries: Mapping[tuple[int, int], Mapping[int, object]]):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean = {}
        for (r, c), form in entries.items():
            if not (0 <= r < len(self.rows) and 0 <= c < len(self.cols)):
                raise IndexError(f"entry ({r}, {c}) outside a {self.shape} matrix")
            form = clean_form(form)
            if any(not 0 <= v < nv for v in form):
                raise VariableMismatch(f"entry ({r}, {c}) uses a variable outside the declared set")
            if form:
                clean[(r, c)] = form
        self.entries = clean

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    @property
    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def entry(self, r: int, c: int) -> LinearForm:
        return self.entries.get((r, c), {})

    def nnz(self) -> int:
        return len(self.entries)

    def submatrix(self, row_labels: Sequence[Hashable], col_labels: Sequence[Hashable]) -> "LinearFormMatrix":
        rpos = {lab: i for i, lab in enumerate(self.rows)}
        cpos = {lab: i for i, lab in enumerate(self.cols)}
        rsel = [rpos[lab] for lab in row_labels]
        csel = [cpos[lab] for lab in col_labels]
        rmap = {old: new for new, old in enumerate(rsel)}
        cmap = {old: new for new, old in enumerate(csel)}
        entries = {
            (rmap[r], cmap[c]): form
            for (r, c), form in self.entries.items()
            if r in rmap and c in cmap
        }
        return LinearFormMatrix(row_labels, col_labels, self.variables, entries)

    def transpose(self) -> "LinearFormMatrix":
        return LinearFormMatrix(self.cols, self.rows, self.variables,
                                {(c, r): f for (r, c), f in self.entries.items()})

    def _alpha_vector(self, alpha) -> list[Fraction]:
        if isinstance(alpha, Mapping):
            if set(alpha) != set(self.variables):
                raise VariableMismatch("alpha must assign exactly the matrix variables")
            return [Fraction(alpha[v]) for v in self.variables]
        alpha = list(alpha)
        if len(alpha) != len(self.variables):
            raise VariableMismatch(f"expected {len(self.variables)} values, got {len(alpha)}")
        return [Fraction(x) for x in alpha]

    def evaluate(self, alpha) -> list[list[Fraction]]:
        """Substitute scalars for the variables (sequence in variable order, or label mapping)."""
        vec = self._alpha_vector(alpha)
        out = [[Fraction(0)] * len(self.cols) for _ in self.rows]
        for (r, c), form in self.entries.items():
            out[r][c] = sum((coef * vec[v] for v, coef in form.items()), Fraction(0))
        return out

    def substitute(self, basis: Sequence[Sequence], names: Sequence[Hashable] | None = None) -> "LinearFormMatrix":
        """Reparametrize ``alpha = sum_k t_k * basis[k]``; the result is linear in the ``t_k``."""
        names = tuple(names) if names is not None else tuple(range(len(basis)))
        entries = {}
        for key, form in self.entries.items():
            new = {}
            for k, b in enumerate(basis):
                s = sum((coef * Fraction(b[v]) for v, coef in form.items()), Fraction(0))
                if s:
                    new[k] = s
            if new:
                entries[key] = new
        return LinearFormMatrix(self.rows, self.cols, names, entries)

    def pattern(self) -> np.ndarray:
        """Boolean nonzero pattern."""
        mask = np.zeros(self.shape, dtype=bool)
        for r, c in self.entries:
            mask[r, c] = True
        return mask

    def __repr__(self):
        return f"LinearFormMatrix({len(self.rows)}x{len(self.cols)}, vars={len(self.variables)}, nnz={self.nnz()})"


def eval_at(m: LinearFormMatrix, alpha) -> list[list[Fraction]]:
    return m.evaluate(alpha)


def structural_rank(m: LinearFormMatrix) -> int:
    """Size of a maximum matching between rows and columns of the nonzero pattern."""
    nr, nc = m.shape
    if nr == 0 or nc == 0 or not m.entries:
        return 0
    keys = sorted(m.entries)
    graph = csr_matrix(
        (np.ones(len(keys), dtype=np.int8), ([r for r, _ in keys], [c for _, c in keys])),
        shape=(nr, nc),
    )
    match = maximum_bipartite_matching(graph, perm_type="column")
    return int(np.count_nonzero(match >= 0))


def symbolic_det(m: LinearFormMatrix) -> MultiPoly:
    """Exact determinant polynomial in the matrix variables.

    Structurally singular matrices short-circuit to zero.  Otherwise sparse
    submatrices are expanded along their sparsest row (memoized on the
    remaining rows and columns), and denser ones go to fraction-free
    elimination over the polynomial ring.
    """
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.shape[0]}x{m.shape[1]} matrix")
    nv = len(m.variables)
    n = len(m.rows)
    if n == 0:
        return MultiPoly.constant(nv, 1)
    if structural_rank(m) < n:
        return MultiPoly.zero(nv)
    polys = {key: MultiPoly.linear(nv, form) for key, form in m.entries.items()}
    by_row: dict[int, dict[int, MultiPoly]] = {}
    for (r, c), p in polys.items():
        by_row.setdefault(r, {})[c] = p
    memo: dict = {}
    return _expand(tuple(range(n)), tuple(range(n)), by_row, nv, memo)


def _expand(rows, cols, by_row, nv, memo) -> MultiPoly:
    key = (rows, cols)
    if key in memo:
        return memo[key]
    k = len(rows)
    if k == 0:
        return MultiPoly.constant(nv, 1)
    colset = set(cols)
    row_entries = [[(c, p) for c, p in by_row.get(r, {}).items() if c in colset] for r in rows]
    nnz = sum(len(e) for e in row_entries)
    if nnz == 0 or any(not e for e in row_entries):
        result = MultiPoly.zero(nv)
    elif k == 1:
        result = row_entries[0][0][1]
    elif nnz > SPARSE_DENSITY * k * k:
        dense = [[by_row.get(r, {}).get(c) or MultiPoly.zero(nv) for c in cols] for r in rows]
        result = bareiss_poly_det(dense, nv)
    else:
        i = min(range(k), key=lambda idx: len(row_entries[idx]))
        rest_rows = rows[:i] + rows[i + 1:]
        cpos = {c: j for j, c in enumerate(cols)}
        result = MultiPoly.zero(nv)
        for c, p in sorted(row_entries[i]):
            j = cpos[c]
            minor = _expand(rest_rows, cols[:j] + cols[j + 1:], by_row, nv, memo)
            if minor:
                term = p * minor
                result = result - term if (i + j) % 2 else result + term
    memo[key] = result
    return result


def bareiss_poly_det(dense: list[list[MultiPoly]], nv: int) -> MultiPoly:
    """Fraction-free elimination over Q[variables]; every division is exact."""
    a = [list(row) for row in dense]
    n = len(a)
    if n == 0:
        return MultiPoly.constant(nv, 1)
    sign = 1
    prev = MultiPoly.constant(nv, 1)
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if a[i][k]]
        if not candidates:
            return MultiPoly.zero(nv)
        best = min(candidates, key=lambda i: len(a[i][k].terms))
        if best != k:
            a[k], a[best] = a[best], a[k]
            sign = -sign
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * pk
                if aik and a[k][j]:
                    num = num - aik * a[k][j]
                a[i][j] = num.divexact(prev) if num else num
            a[i][k] = MultiPoly.zero(nv)
        prev = pk
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def sample_points(nvars: int, seed: int, trials: int, sample_bound: int) -> Iterator[tuple[int, ...]]:
    """Deterministic probe sequence: the all-ones point, then ``trials`` uniform
    draws from ``[1, sample_bound]^nvars`` using ``random.Random(seed)``,
    drawing variables in declaration order."""
    yield (1,) * nvars
    rng = random.Random(seed)
    for _ in range(trials):
        yield tuple(rng.randint(1, sample_bound) for _ in range(nvars))


def nonvanishing_point(poly: MultiPoly) -> tuple[Fraction, ...]:
    """A rational point where a nonzero polynomial does not vanish.

    Fixes variables one at a time to the first value in 1, 2, 3, ... that
    keeps the partially evaluated polynomial nonzero; at most
    ``degree_in(var) + 1`` values are tried per variable.
    """
    if poly.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    point = []
    p = poly
    for var in range(poly.nvars):
        v = 1
        while True:
            q = p.partial(var, v)
            if q:
                break
            v += 1
        p = q
        point.append(Fraction(v))
    return tuple(point)


@dataclass
class GenericInvertibility:
    """Outcome of :func:`is_generically_invertible`.

    ``witness`` (when invertible) is a point in variable order with
    ``det(evaluate(witness)) == determinant != 0``.  ``method`` records
    which path settled the answer: ``"sampled"`` or ``"symbolic"``.
    """

    invertible: bool
    witness: tuple[Fraction, ...] | None
    determinant: Fraction | None
    method: str
    polynomial: MultiPoly | None = field(default=None, repr=False)

    def __bool__(self):
        return self.invertible


def check_strategy(strategy: str, trials: int, sample_bound: int, size: int) -> None:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if sample_bound <= size:
        raise ValueError(f"sample_bound {sample_bound} must exceed the matrix size {size}")


def is_generically_invertible(m: LinearFormMatrix, strategy: str = "auto", seed: int = 0,
                              trials: int = DEFAULT_TRIALS,
                              sample_bound: int = DEFAULT_SAMPLE_BOUND) -> GenericInvertibility:
    """Decide exactly whether ``det(m)`` is a nonzero polynomial.

    Sampled points are only ever used as proofs of invertibility; a
    negative answer always comes from the symbolic determinant.
    """
    if not m.is_square:
        raise NotSquare(f"{m.shape[0]}x{m.shape[1]} matrix")
    n = len(m.rows)
    check_strategy(strategy, trials, sample_bound, n)
    if n == 0:
        return GenericInvertibility(True, tuple(Fraction(1) for _ in m.variables), Fraction(1), "sampled")
    if strategy != "symbolic":
        for point in sample_points(len(m.variables), seed, trials, sample_bound):
            d = determinant(m.evaluate(point))
            if d:
                return GenericInvertibility(True, tuple(Fraction(x) for x in point), d, "sampled")
    poly = symbolic_det(m)
    if poly.is_zero():
        return GenericInvertibility(False, None, None, "symbolic", poly)
    point = nonvanishing_point(poly)
    return GenericInvertibility(True, point, determinant(m.evaluate(point)), "symbolic", poly)
