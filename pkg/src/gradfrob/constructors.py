"""Builders for the algebra families used throughout the package.

* ``A(q)``: the quantum exterior-type algebra
  ``K<X_1..X_n> / (X_j X_i - q_ij X_i X_j, X_i^2)``, basis ``e_g`` for bit
  vectors ``g``, with its Z_2^n-, Z- or trivial grading.
* Exterior algebras (``q_ij = -1``).
* Full matrix algebras ``M_n`` with good gradings.
* Twisted group algebras ``K^c[G]``.  This family is not one of the
  classical examples; it is here to widen the property-test corpus.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .algebra import GradedAlgebra, validate
from .errors import CocycleViolation, ValidationError
from .group import BooleanVectors, GroupModel, Integers, trivial_group

GRADINGS = ("z2n", "z", "trivial")


@dataclass(frozen=True)
class QMatrix:
    """Nonzero rational parameters ``q_ij`` for ``1 <= i < j <= n`` (1-based)."""

    n: int
    entries: Mapping[tuple[int, int], Fraction]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("QMatrix needs n >= 2")
        full = {}
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                if (i, j) not in self.entries:
                    raise ValueError(f"missing q_{i}{j}")
                v = Fraction(self.entries[(i, j)])
                if not v:
                    raise ValueError(f"q_{i}{j} must be nonzero")
                full[(i, j)] = v
        if set(self.entries) - set(full):
            raise ValueError("entries must be indexed by pairs 1 <= i < j <= n")
        object.__setattr__(self, "entries", full)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.entries[key]

    @classmethod
    def constant(cls, n: int, value=1) -> "QMatrix":
        return cls(n, {(i, j): Fraction(value) for i in range(1, n + 1) for j in range(i + 1, n + 1)})

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.entries.items()))))


def koszul_dual_q(q: QMatrix) -> QMatrix:
    """``q'_ij = -1/q_ij``: the parameters of the Koszul dual of the quantum polynomial ring."""
    return QMatrix(q.n, {k: -1 / v for k, v in q.entries.items()})


def aq_symmetric_condition(q: QMatrix) -> bool:
    """Closed-form symmetry test for ``A(q)``.

    For each ``1 <= i <= n-1``::

        q_in == prod_{p < i} q_pi * prod_{i < p <= n-1} q_ip^{-1}
    """
    n = q.n
    for i in range(1, n):
        rhs = Fraction(1)
        for p in range(1, i):
            rhs *= q[(p, i)]
        for p in range(i + 1, n):
            rhs /= q[(i, p)]
        if q[(i, n)] != rhs:
            return False
    return True


def _monomial_name(bits: Sequence[int]) -> str:
    name = "".join(f"x{i + 1}" for i, b in enumerate(bits) if b)
    return name or "1"


def aq_coefficient(q: QMatrix, g: Sequence[int], h: Sequence[int]) -> Fraction:
    """``c_{g,h,g+h} = prod_{i<j} q_ij^{h_i g_j}`` (assumes disjoint supports)."""
    c = Fraction(1)
    for (i, j), v in q.entries.items():
        if h[i - 1] and g[j - 1]:
            c *= v
    return c


def make_aq(q: QMatrix, grading: str = "z2n") -> GradedAlgebra:
    """``A(q)`` with basis ``e_g``, ``g`` in ``{0,1}^n`` in lexicographic order (``e_0 = 1`` first)."""
    if grading not in GRADINGS:
        raise ValueError(f"grading must be one of {GRADINGS}")
    n = q.n
    basis = list(itertools.product((0, 1), repeat=n))
    index = {g: k for k, g in enumerate(basis)}
    constants = {}
    for g in basis:
        for h in basis:
            if any(a and b for a, b in zip(g, h)):
                continue
            s = tuple(a ^ b for a, b in zip(g, h))
            constants[(index[g], index[h])] = {index[s]: aq_coefficient(q, g, h)}
    if grading == "z2n":
        group, degrees = BooleanVectors(n), basis
    elif grading == "z":
        group, degrees = Integers(), [sum(g) for g in basis]
    else:
        group, degrees = trivial_group(), [0] * len(basis)
    unit = [1] + [0] * (len(basis) - 1)
    return GradedAlgebra(group, degrees, constants, unit, [_monomial_name(g) for g in basis])


def make_exterior(n: int, grading: str = "z") -> GradedAlgebra:
    return make_aq(QMatrix.constant(n, -1), grading)


def make_good_matrix(group: GroupModel, tuple_: Sequence) -> GradedAlgebra:
    """``M_n`` with ``deg e_ij = g_i g_j^{-1}``; basis ``e_11, e_12, ..., e_nn`` row-major."""
    n = len(tuple_)
    if n < 1:
        raise ValueError("a good grading needs n >= 1")
    gs = [group.check(g) for g in tuple_]
    pairs = [(i, j) for i in range(n) for j in range(n)]
    index = {pq: k for k, pq in enumerate(pairs)}
    constants = {}
    for (i, j) in pairs:
        for q in range(n):
            constants[(index[(i, j)], index[(j, q)])] = {index[(i, q)]: 1}
    degrees = [group.compose(gs[i], group.invert(gs[j])) for i, j in pairs]
    unit = [1 if i == j else 0 for i, j in pairs]
    names = [f"e{i + 1}{j + 1}" if n < 10 else f"e{i + 1}_{j + 1}" for i, j in pairs]
    return GradedAlgebra(group, degrees, constants, unit, names)


def check_cocycle(group: GroupModel, cocycle: Callable) -> None:
    """Raise :class:`CocycleViolation` unless ``cocycle`` is a normalized 2-cocycle."""
    elems = list(group.elements())
    eps = group.identity()
    for g in elems:
        for h in elems:
            if not Fraction(cocycle(g, h)):
                raise CocycleViolation(f"c({g}, {h}) is zero", (g, h))
        if Fraction(cocycle(eps, g)) != 1 or Fraction(cocycle(g, eps)) != 1:
            raise CocycleViolation(f"cocycle is not normalized at {g}", (g,))
    for g, h, k in itertools.product(elems, repeat=3):
        lhs = Fraction(cocycle(g, h)) * Fraction(cocycle(group.compose(g, h), k))
        rhs = Fraction(cocycle(h, k)) * Fraction(cocycle(g, group.compose(h, k)))
        if lhs != rhs:
            raise CocycleViolation(f"cocycle identity fails at ({g}, {h}, {k})", (g, h, k))


def make_twisted_group_algebra(group: GroupModel, cocycle: Callable | Mapping | None = None) -> GradedAlgebra:
    """``u_g u_h = c(g, h) u_{gh}`` over a finite group; ``None`` means the trivial cocycle."""
    if not group.finite:
        raise ValueError("twisted group algebras need a finite group")
    if cocycle is None:
        fn = lambda g, h: 1  # noqa: E731
    elif isinstance(cocycle, Mapping):
        table = dict(cocycle)
        fn = lambda g, h: table.get((g, h), 1)  # noqa: E731
    else:
        fn = cocycle
    check_cocycle(group, fn)
    elems = list(group.elements())
    index = {g: k for k, g in enumerate(elems)}
    constants = {
        (index[g], index[h]): {index[group.compose(g, h)]: Fraction(fn(g, h))}
        for g in elems for h in elems
    }
    unit = [1 if g == group.identity() else 0 for g in elems]
    names = [f"u{group.format(g)}" for g in elems]
    return GradedAlgebra(group, elems, constants, unit, names)


def with_trivial_grading(constants, unit: Sequence, names: Sequence[str] | None = None) -> GradedAlgebra:
    """Wrap ungraded structure constants; raises :class:`ValidationError` on bad input."""
    a = GradedAlgebra(trivial_group(), [0] * len(unit), constants, unit, names)
    report = validate(a)
    if not report.passed:
        raise ValidationError(report)
    return a


def truncated_polynomial(n: int) -> GradedAlgebra:
    """``K[x]/(x^n)``, trivially graded, basis ``1, x, ..., x^{n-1}``."""
    constants = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    names = ["1"] + [f"x^{k}" if k > 1 else "x" for k in range(1, n)]
    return with_trivial_grading(constants, [1] + [0] * (n - 1), names)


def upper_triangular_2x2() -> GradedAlgebra:
    """Upper-triangular 2x2 matrices, basis ``e11, e12, e22``."""
    e11, e12, e22 = 0, 1, 2
    constants = {(e11, e11): {e11: 1}, (e11, e12): {e12: 1}, (e12, e22): {e12: 1}, (e22, e22): {e22: 1}}
    return with_trivial_grading(constants, [1, 0, 1], ["e11", "e12", "e22"])
