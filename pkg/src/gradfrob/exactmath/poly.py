"""Sparse multivariate polynomials with rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class MultiPoly:
    """Polynomial in ``nvars`` variables stored as ``{exponent tuple: coefficient}``.

    Zero coefficients are never stored, so ``terms == {}`` means the zero
    polynomial.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have width {nvars}")
            c = Fraction(c)
            if c:
                clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear(cls, nvars: int, form: Mapping[int, object]) -> "MultiPoly":
        terms = {}
        for var, c in form.items():
            exp = [0] * nvars
            exp[var] = 1
            terms[tuple(exp)] = c
        return cls(nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = Fraction(other)
            if not c:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def leading_term(self):
        """Lexicographically largest ``(exponent, coefficient)``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Quotient ``self / other`` when the division is known to be exact.

        Raises ``ArithmeticError`` if ``other`` does not divide ``self``.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if len(other.terms) == 1:
            (de, dc), = other.terms.items()
            out = {}
            for e, c in self.terms.items():
                q = tuple(a - b for a, b in zip(e, de))
                if min(q, default=0) < 0:
                    raise ArithmeticError("inexact polynomial division")
                out[q] = c / dc
            return MultiPoly._raw(self.nvars, out)
        lead_e, lead_c = other.leading_term()
        rem = self
        quotient: dict = {}
        while rem.terms:
            e, c = rem.leading_term()
            q = tuple(a - b for a, b in zip(e, lead_e))
            if min(q, default=0) < 0:
                raise ArithmeticError("inexact polynomial division")
            qc = c / lead_c
            quotient[q] = qc
            rem = rem - MultiPoly._raw(self.nvars, {q: qc}) * other
        return MultiPoly._raw(self.nvars, quotient)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x ** k
            total += term
        return total

    def partial(self, var: int, value) -> "MultiPoly":
        """Substitute ``value`` for one variable, keeping the variable set."""
        value = Fraction(value)
        out: dict = {}
        for e, c in self.terms.items():
            k = e[var]
            e2 = e[:var] + (0,) + e[var + 1:]
            out[e2] = out.get(e2, 0) + c * value ** k
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"a{i}" for i in range(self.nvars)]
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self.to_string()})"
