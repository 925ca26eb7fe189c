"""Grading groups.

A group model owns the arithmetic; elements are plain hashable values
(ints, tuples of ints, nested tuples) carrying no back-reference to the
model.  Encodings are canonical per kind:

========================  =====================================
model                     encoding
========================  =====================================
``Integers()``            ``int``
``Cyclic(n)``             ``int`` in ``[0, n)``
``BooleanVectors(n)``     tuple of ``n`` bits
``Product(factors)``      tuple of factor encodings
``Table(names, rows)``    ``int`` index into ``names``
========================  =====================================

The textual grammar used by input files and the command line is::

    Z | Z/n | Z2^n | product(G, G, ...) | table{a,b,...; row; row; ...}

where each table row lists, for the row element ``x``, the names of
``x*y`` for ``y`` running over the header order.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterator, Sequence

from .errors import ElementOutOfModel, GroupTableError, ParseError


class GroupModel:
    """Common interface of all group models."""

    finite = True

    def identity(self):
        raise NotImplementedError

    def compose(self, a, b):
        raise NotImplementedError

    def invert(self, a):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def elements(self) -> Iterator:
        raise NotImplementedError

    def order(self) -> int:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def check(self, a):
        if not self.contains(a):
            raise ElementOutOfModel(self.describe(), a)
        return a

    def __str__(self):
        return self.describe()

    def __eq__(self, other):
        return type(self) is type(other) and self.describe() == other.describe()

    def __hash__(self):
        return hash(self.describe())


def _is_int(a) -> bool:
    return isinstance(a, int) and not isinstance(a, bool)


class Integers(GroupModel):
    finite = False

    def identity(self):
        return 0

    def compose(self, a, b):
        return self.check(a) + self.check(b)

    def invert(self, a):
        return -self.check(a)

    def contains(self, a):
        return _is_int(a)

    def elements(self):
        raise TypeError("Z is infinite")

    def order(self):
        raise TypeError("Z is infinite")

    def describe(self):
        return "Z"

    def format(self, a):
        return str(self.check(a))

    def parse(self, text):
        try:
            return int(text.strip())
        except ValueError:
            raise ParseError(f"expected an integer, got {text!r}") from None


class Cyclic(GroupModel):
    """Residues modulo ``n`` under addition; ``Cyclic(1)`` is the trivial group."""

    def __init__(self, n: int):
        if not _is_int(n) or n < 1:
            raise ValueError(f"cyclic order must be a positive integer, got {n!r}")
        self.n = n

    def identity(self):
        return 0

    def compose(self, a, b):
        return (self.check(a) + self.check(b)) % self.n

    def invert(self, a):
        return (-self.check(a)) % self.n

    def contains(self, a):
        return _is_int(a) and 0 <= a < self.n

    def elements(self):
        return iter(range(self.n))

    def order(self):
        return self.n

    def describe(self):
        return f"Z/{self.n}"

    def format(self, a):
        return str(self.check(a))

    def parse(self, text):
        try:
            return int(text.strip()) % self.n
        except ValueError:
            raise ParseError(f"expected a residue mod {self.n}, got {text!r}") from None


class BooleanVectors(GroupModel):
    """The elementary abelian group Z_2^n, elements as bit tuples."""

    def __init__(self, n: int):
        if not _is_int(n) or n < 1:
            raise ValueError(f"Z2^n needs n >= 1, got {n!r}")
        self.n = n

    def identity(self):
        return (0,) * self.n

    def compose(self, a, b):
        self.check(a)
        self.check(b)
        return tuple(x ^ y for x, y in zip(a, b))

    def invert(self, a):
        return self.check(a)

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == self.n
                and all(_is_int(x) and x in (0, 1) for x in a))

    def elements(self):
        return itertools.product((0, 1), repeat=self.n)

    def order(self):
        return 2 ** self.n

    def describe(self):
        return f"Z2^{self.n}"

    def format(self, a):
        return "(" + ",".join(str(x) for x in self.check(a)) + ")"

    def parse(self, text):
        text = text.strip()
        if text.startswith("("):
            parts = split_top_level(_strip_parens(text))
        elif self.n == 1:
            parts = [text]
        else:
            raise ParseError(f"expected a bit vector like (1,0,...), got {text!r}")
        try:
            bits = tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError(f"bad bit vector {text!r}") from None
        if len(bits) != self.n or any(b not in (0, 1) for b in bits):
            raise ParseError(f"{text!r} is not an element of {self.describe()}")
        return bits


class Product(GroupModel):
    def __init__(self, factors: Sequence[GroupModel]):
        factors = tuple(factors)
        if not factors:
            raise ValueError("product needs at least one factor")
        self.factors = factors
        self.finite = all(f.finite for f in factors)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def compose(self, a, b):
        self.check(a)
        self.check(b)
        return tuple(f.compose(x, y) for f, x, y in zip(self.factors, a, b))

    def invert(self, a):
        self.check(a)
        return tuple(f.invert(x) for f, x in zip(self.factors, a))

    def contains(self, a):
        return (isinstance(a, tuple) and len(a) == len(self.factors)
                and all(f.contains(x) for f, x in zip(self.factors, a)))

    def elements(self):
        return itertools.product(*(list(f.elements()) for f in self.factors))

    def order(self):
        total = 1
        for f in self.factors:
            total *= f.order()
        return total

    def describe(self):
        return "product(" + ",".join(f.describe() for f in self.factors) + ")"

    def format(self, a):
        self.check(a)
        return "(" + ",".join(f.format(x) for f, x in zip(self.factors, a)) + ")"

    def parse(self, text):
        text = text.strip()
        if not text.startswith("("):
            raise ParseError(f"expected a tuple for {self.describe()}, got {text!r}")
        parts = split_top_level(_strip_parens(text))
        if len(parts) != len(self.factors):
            raise ParseError(f"{text!r} has {len(parts)} components, expected {len(self.factors)}")
        return tuple(f.parse(p) for f, p in zip(self.factors, parts))


class Table(GroupModel):
    """A finite group given by its full Cayley table.

    ``rows[x][y]`` is the index of ``x*y``.  All group axioms are checked
    at construction; a failing table raises :class:`GroupTableError`
    whose ``witness`` names the offending elements.
    """

    def __init__(self, names: Sequence[str], rows: Sequence[Sequence[int]]):
        self.names = tuple(names)
        self.rows = tuple(tuple(r) for r in rows)
        self._index = {name: i for i, name in enumerate(self.names)}
        self._validate()
        self._identity = next(e for e in range(len(self.names))
                              if all(self.rows[e][x] == x == self.rows[x][e] for x in range(len(self.names))))
        self._inverse = tuple(self.rows[x].index(self._identity) for x in range(len(self.names)))

    def _validate(self):
        k = len(self.names)
        if k == 0:
            raise GroupTableError("empty table")
        if len(self._index) != k:
            raise GroupTableError("duplicate element names")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", name):
                raise GroupTableError(f"invalid element name {name!r}", (name,))
        if len(self.rows) != k or any(len(r) != k for r in self.rows):
            raise GroupTableError("table is not square")
        full = set(range(k))
        for x, row in enumerate(self.rows):
            if set(row) != full:
                raise GroupTableError(f"row {self.names[x]} is not a permutation", (self.names[x],))
        for y in range(k):
            if {self.rows[x][y] for x in range(k)} != full:
                raise GroupTableError(f"column {self.names[y]} is not a permutation", (self.names[y],))
        if not any(all(self.rows[e][x] == x == self.rows[x][e] for x in range(k)) for e in range(k)):
            raise GroupTableError("no two-sided identity")
        for x, y, z in itertools.product(range(k), repeat=3):
            if self.rows[self.rows[x][y]][z] != self.rows[x][self.rows[y][z]]:
                raise GroupTableError(
                    "table is not associative",
                    (self.names[x], self.names[y], self.names[z]),
                )
        # a Latin square with identity has one-sided inverses; with associativity they are two-sided

    def identity(self):
        return self._identity

    def compose(self, a, b):
        return self.rows[self.check(a)][self.check(b)]

    def invert(self, a):
        return self._inverse[self.check(a)]

    def contains(self, a):
        return _is_int(a) and 0 <= a < len(self.names)

    def elements(self):
        return iter(range(len(self.names)))

    def order(self):
        return len(self.names)

    def describe(self):
        header = ",".join(self.names)
        body = ";".join(",".join(self.names[v] for v in row) for row in self.rows)
        return "table{" + header + ";" + body + "}"

    def format(self, a):
        return self.names[self.check(a)]

    def parse(self, text):
        name = text.strip()
        if name not in self._index:
            raise ParseError(f"unknown table element {name!r}")
        return self._index[name]


def compose(model: GroupModel, a, b):
    return model.compose(a, b)


def invert(model: GroupModel, a):
    return model.invert(a)


def identity(model: GroupModel):
    return model.identity()


def trivial_group() -> GroupModel:
    return Cyclic(1)


def _strip_parens(text: str) -> str:
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"unbalanced parentheses in {text!r}")
    return text[1:-1]


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside of any (), {} nesting."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError(f"unbalanced brackets in {text!r}")
    parts.append("".join(current).strip())
    return parts


def parse_group(text: str) -> GroupModel:
    """Parse the group grammar (see module docstring)."""
    s = text.strip()
    if s == "Z":
        return Integers()
    m = re.fullmatch(r"Z/(\d+)", s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError("Z/n needs n >= 1")
        return Cyclic(n)
    m = re.fullmatch(r"Z2\^(\d+)", s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError("Z2^n needs n >= 1")
        return BooleanVectors(n)
    if s.startswith("product(") and s.endswith(")"):
        inner = s[len("product("):-1]
        return Product([parse_group(part) for part in split_top_level(inner)])
    if s.startswith("table{") and s.endswith("}"):
        segments = [seg.strip() for seg in s[len("table{"):-1].split(";")]
        names = [x.strip() for x in segments[0].split(",")]
        index = {name: i for i, name in enumerate(names)}
        rows = []
        for seg in segments[1:]:
            try:
                rows.append([index[x.strip()] for x in seg.split(",")])
            except KeyError as exc:
                raise ParseError(f"unknown element {exc.args[0]!r} in table row {seg!r}") from None
        return Table(names, rows)
    raise ParseError(f"unrecognized group description {text!r}")
