"""Paratrophic matrices ``P(sigma, alpha)`` and the scalar matrices ``C_g``.

Rows and columns of ``P`` are basis indices; the variables are the basis
indices of degree ``sigma`` (``alpha_l`` for ``l`` in ``J_sigma``).  Entry
``(i, j)`` is ``sum_l c_ijl alpha_l`` over ``l`` in ``J_sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .algebra import GradedAlgebra, component
from .exactmath import LinearFormMatrix, rational_rank


def shifted_degree(a: GradedAlgebra, sigma, g):
    """``sigma * g^{-1}``: the row degree paired with column degree ``g``."""
    return a.group.compose(sigma, a.group.invert(g))


def quantification_set(a: GradedAlgebra, sigma) -> tuple:
    """Degrees ``g`` for which ``J_g`` or ``J_{sigma g^{-1}}`` is nonempty.

    Outside this finite set both index sets are empty, so every per-degree
    condition holds vacuously.  For ``J_{sigma g^{-1}} != 0`` we need
    ``g = h^{-1} sigma`` with ``h`` in the support.
    """
    grp = a.group
    grp.check(sigma)
    degrees = set(a.support)
    degrees.update(grp.compose(grp.invert(h), sigma) for h in a.support)
    return tuple(sorted(degrees))


def _paratrophic_entries(a: GradedAlgebra, sigma_index: dict[int, int], rows, cols):
    cpos = {j: k for k, j in enumerate(cols)}
    entries = {}
    for r_pos, i in enumerate(rows):
        for j, k in cpos.items():
            prod = a.constants.get((i, j))
            if not prod:
                continue
            form = {sigma_index[l]: c for l, c in prod.items() if l in sigma_index}
            if form:
                entries[(r_pos, k)] = form
    return entries


@dataclass
class ParatrophicMatrix:
    """The symbolic ``P(sigma, alpha)`` of an algebra, built lazily."""

    algebra: GradedAlgebra
    sigma: object
    variables: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        self.variables = component(self.algebra, self.sigma)
        self._sigma_index = {l: k for k, l in enumerate(self.variables)}

    @cached_property
    def matrix(self) -> LinearFormMatrix:
        idx = tuple(range(self.algebra.dimension))
        return LinearFormMatrix(idx, idx, self.variables,
                                _paratrophic_entries(self.algebra, self._sigma_index, idx, idx))

    def block_indices(self, g) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (component(self.algebra, shifted_degree(self.algebra, self.sigma, g)),
                component(self.algebra, g))

    def block(self, g) -> LinearFormMatrix:
        rows, cols = self.block_indices(g)
        return LinearFormMatrix(rows, cols, self.variables,
                                _paratrophic_entries(self.algebra, self._sigma_index, rows, cols))

    def submatrix(self, rows, cols) -> LinearFormMatrix:
        return LinearFormMatrix(rows, cols, self.variables,
                                _paratrophic_entries(self.algebra, self._sigma_index, rows, cols))

    def evaluate(self, alpha) -> list[list[Fraction]]:
        return self.matrix.evaluate(alpha)


def build_p(a: GradedAlgebra, sigma) -> ParatrophicMatrix:
    return ParatrophicMatrix(a, a.group.check(sigma))


def block(p: ParatrophicMatrix, g) -> LinearFormMatrix:
    """``P(sigma, alpha)`` restricted to rows ``J_{sigma g^{-1}}`` and columns ``J_g``."""
    return p.block(g)


@dataclass
class CgMatrix:
    """Rows ``(r, l)`` in ``J_{sigma g^{-1}} x J_sigma`` (r outer), columns ``J_g``, entries ``c_rjl``."""

    g: object
    rows: tuple[tuple[int, int], ...]
    cols: tuple[int, ...]
    values: list[list[Fraction]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def rank(self) -> int:
        return rational_rank(self.values)

    def has_full_column_rank(self) -> bool:
        return self.rank() == len(self.cols)


def build_cg(a: GradedAlgebra, sigma, g) -> CgMatrix:
    left = component(a, shifted_degree(a, sigma, g))
    targets = component(a, sigma)
    cols = component(a, g)
    rows = tuple((r, l) for r in left for l in targets)
    values = [[a.constant(r, j, l) for j in cols] for r, l in rows]
    return CgMatrix(g, rows, cols, values)


def cg_full_column_rank(a: GradedAlgebra, sigma, g) -> bool:
    """``rank C_g == |J_g|``, memoized per algebra since it does not depend on ``alpha``."""
    key = ("cg-full-rank", sigma, g)
    if key not in a._memo:
        a._memo[key] = build_cg(a, sigma, g).has_full_column_rank()
    return a._memo[key]
