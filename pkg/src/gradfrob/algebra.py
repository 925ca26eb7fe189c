"""Finite-dimensional group-graded algebras given by structure constants."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, ElementOutOfModel
from .group import GroupModel

Vector = Sequence[Fraction]


class GradedAlgebra:
    """A unital algebra ``A = (+)_g A_g`` with a homogeneous basis ``e_0..e_{m-1}``.

    ``constants[(i, j)]`` is the sparse product ``e_i e_j`` as ``{l: c_ijl}``;
    absent pairs multiply to zero.  Construction checks shapes and that the
    degrees lie in the group, but not the algebra axioms; call
    :func:`validate` for those.
    """

    def __init__(self, group: GroupModel, degrees: Sequence, constants, unit: Sequence,
                 names: Sequence[str] | None = None):
        m = len(degrees)
        if m < 1:
            raise ValueError("the zero algebra is not supported (dimension must be >= 1)")
        self.group = group
        self.degrees = tuple(group.check(d) for d in degrees)
        self.dimension = m
        self.names = tuple(names) if names is not None else tuple(f"e{i}" for i in range(m))
        if len(self.names) != m:
            raise ValueError("one name per basis element is required")
        if len(unit) != m:
            raise DimensionMismatch(f"unit has length {len(unit)}, expected {m}")
        self.unit = tuple(Fraction(x) for x in unit)
        self.constants = _normalize_constants(constants, m)
        comps: dict = {}
        for idx, d in enumerate(self.degrees):
            comps.setdefault(d, []).append(idx)
        self._components = {d: tuple(ix) for d, ix in comps.items()}
        self._support = tuple(sorted(self._components))
        # results that depend only on the (immutable) algebra, e.g. C_g ranks
        self._memo: dict = {}

    def product(self, i: int, j: int) -> Mapping[int, Fraction]:
        return self.constants.get((i, j), {})

    def constant(self, i: int, j: int, l: int) -> Fraction:
        return self.constants.get((i, j), {}).get(l, Fraction(0))

    def triples(self) -> Iterable[tuple[int, int, int, Fraction]]:
        """Nonzero structure constants ``(i, j, l, c)`` in sorted order."""
        for (i, j) in sorted(self.constants):
            for l, c in sorted(self.constants[(i, j)].items()):
                yield i, j, l, c

    def component(self, g) -> tuple[int, ...]:
        return component(self, g)

    @property
    def support(self) -> tuple:
        return self._support

    def with_constants(self, constants) -> "GradedAlgebra":
        return GradedAlgebra(self.group, self.degrees, constants, self.unit, self.names)

    def __eq__(self, other):
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return (self.group == other.group and self.degrees == other.degrees
                and self.constants == other.constants and self.unit == other.unit)

    def __repr__(self):
        return f"GradedAlgebra(dim={self.dimension}, group={self.group.describe()}, support={len(self._support)})"


def _normalize_constants(constants, m: int) -> dict[tuple[int, int], dict[int, Fraction]]:
    out: dict[tuple[int, int], dict[int, Fraction]] = {}

    def check(idx):
        if not (isinstance(idx, int) and 0 <= idx < m):
            raise IndexError(f"basis index {idx!r} out of range for dimension {m}")

    if isinstance(constants, Mapping):
        items = ((i, j, l, c) for (i, j), row in constants.items() for l, c in row.items())
    else:
        items = constants
    seen = set()
    for i, j, l, c in items:
        for idx in (i, j, l):
            check(idx)
        if (i, j, l) in seen:
            raise ValueError(f"duplicate structure constant ({i}, {j}, {l})")
        seen.add((i, j, l))
        c = Fraction(c)
        if c:
            out.setdefault((i, j), {})[l] = c
    return out


def basis_vector(a: GradedAlgebra, i: int) -> list[Fraction]:
    v = [Fraction(0)] * a.dimension
    v[i] = Fraction(1)
    return v


def multiply(a: GradedAlgebra, u: Vector, v: Vector) -> list[Fraction]:
    """Product of two coordinate vectors."""
    if len(u) != a.dimension or len(v) != a.dimension:
        raise DimensionMismatch(f"vectors must have length {a.dimension}")
    out = [Fraction(0)] * a.dimension
    nu = [(i, Fraction(x)) for i, x in enumerate(u) if x]
    nv = [(j, Fraction(y)) for j, y in enumerate(v) if y]
    for i, x in nu:
        for j, y in nv:
            for l, c in a.product(i, j).items():
                out[l] += x * y * c
    return out


def component(a: GradedAlgebra, g) -> tuple[int, ...]:
    """Ascending basis indices of degree ``g`` (empty when ``A_g = 0``)."""
    a.group.check(g)
    return a._components.get(g, ())


def support(a: GradedAlgebra) -> tuple:
    """Degrees ``g`` with ``A_g != 0``, sorted."""
    return a.support


@dataclass(frozen=True)
class Finding:
    kind: str = field(init=False, default="finding")

    def as_dict(self) -> dict:
        d = asdict(self)
        return {k: (str(v) if isinstance(v, Fraction) else v) for k, v in d.items()}


@dataclass(frozen=True)
class GradingViolation(Finding):
    """``c_ijl != 0`` although ``deg l != deg i * deg j``."""

    i: int
    j: int
    l: int
    kind: str = field(init=False, default="grading")


@dataclass(frozen=True)
class AssociativityViolation(Finding):
    """Coefficient of ``e_r`` differs between ``(e_i e_j) e_p`` and ``e_i (e_j e_p)``."""

    i: int
    j: int
    p: int
    r: int
    left: Fraction
    right: Fraction
    kind: str = field(init=False, default="associativity")


@dataclass(frozen=True)
class UnitViolation(Finding):
    """``unit * e_j`` (side ``"left"``) or ``e_j * unit`` differs from ``e_j`` at ``e_l``."""

    side: str
    j: int
    l: int
    kind: str = field(init=False, default="unit")


@dataclass(frozen=True)
class UnitDegreeViolation(Finding):
    """The unit has a nonzero coordinate outside the neutral component."""

    index: int
    kind: str = field(init=False, default="unit-degree")


@dataclass
class ValidationReport:
    violations: list[Finding]

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def of_kind(self, kind: str) -> list[Finding]:
        return [v for v in self.violations if v.kind == kind]


def _sparse_mul(a: GradedAlgebra, vec: Mapping[int, Fraction], j: int, left: bool) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for l, x in vec.items():
        prod = a.product(l, j) if left else a.product(j, l)
        for r, c in prod.items():
            out[r] = out.get(r, 0) + x * c
    return {r: c for r, c in out.items() if c}


def validate(a: GradedAlgebra) -> ValidationReport:
    """Check grading compatibility, associativity on all basis triples, and the unit axioms."""
    g = a.group
    violations: list[Finding] = []
    for i, j, l, _ in a.triples():
        if a.degrees[l] != g.compose(a.degrees[i], a.degrees[j]):
            violations.append(GradingViolation(i, j, l))

    m = a.dimension
    for i in range(m):
        for j in range(m):
            ij = a.product(i, j)
            for p in range(m):
                lhs = _sparse_mul(a, ij, p, left=True) if ij else {}
                jp = a.product(j, p)
                rhs = _sparse_mul(a, jp, i, left=False) if jp else {}
                if lhs != rhs:
                    r = min(k for k in set(lhs) | set(rhs) if lhs.get(k, 0) != rhs.get(k, 0))
                    violations.append(AssociativityViolation(
                        i, j, p, r, Fraction(lhs.get(r, 0)), Fraction(rhs.get(r, 0))))

    eps = g.identity()
    unit = {k: x for k, x in enumerate(a.unit) if x}
    for k in unit:
        if a.degrees[k] != eps:
            violations.append(UnitDegreeViolation(k))
    for j in range(m):
        for side, prod in (("left", _sparse_mul(a, unit, j, left=True)),
                           ("right", _sparse_mul(a, unit, j, left=False))):
            expected = {j: Fraction(1)}
            if prod != expected:
                l = min(k for k in set(prod) | {j} if prod.get(k, 0) != expected.get(k, 0))
                violations.append(UnitViolation(side, j, l))
    return ValidationReport(violations)


def forget_grading(a: GradedAlgebra) -> GradedAlgebra:
    """The same algebra with the trivial grading."""
    from .group import trivial_group

    return GradedAlgebra(trivial_group(), [0] * a.dimension, a.constants, a.unit, a.names)


__all__ = [
    "AssociativityViolation", "ElementOutOfModel", "Finding", "GradedAlgebra", "GradingViolation",
    "UnitDegreeViolation", "UnitViolation", "ValidationReport", "basis_vector", "component",
    "forget_grading", "multiply", "support", "validate",
]
