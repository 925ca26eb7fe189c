"""The algebra corpus shared by the property suites and the acceptance tests."""

import random
from functools import lru_cache

from gradfrob.constructors import (
    QMatrix,
    make_aq,
    make_exterior,
    make_good_matrix,
    make_twisted_group_algebra,
    truncated_polynomial,
    upper_triangular_2x2,
)
from gradfrob.algebra import GradedAlgebra
from gradfrob.group import BooleanVectors, Cyclic, Integers, Product, Table

from oracles import dihedral8_cayley, random_q_entries, s3_cayley


def bilinear_sign(g, h):
    """(-1)^(g_1 h_2): a bilinear (hence normalized) 2-cocycle on Z2^n, n >= 2."""
    return -1 if g[0] and h[1] else 1


def z_graded_truncated(n):
    """K[x]/(x^n) with deg x = 1 over Z."""
    constants = {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}
    return GradedAlgebra(Integers(), list(range(n)), constants, [1] + [0] * (n - 1))


@lru_cache(maxsize=None)
def corpus():
    """``[(label, algebra)]``, deterministic."""
    rng = random.Random(20240601)
    items = []
    for n in (2, 3):
        q = QMatrix(n, random_q_entries(rng, n))
        items.append((f"aq-z2n-n{n}", make_aq(q, "z2n")))
    for n in (2, 3, 4):
        q = QMatrix(n, random_q_entries(rng, n))
        items.append((f"aq-z-n{n}", make_aq(q, "z")))
    for n in (2, 3, 4):
        q = QMatrix(n, random_q_entries(rng, n))
        items.append((f"aq-trivial-n{n}", make_aq(q, "trivial")))
    for n in (2, 3, 4, 5):
        items.append((f"exterior-trivial-n{n}", make_exterior(n, "trivial")))
    for order in (2, 3, 4):
        group = Cyclic(order)
        for n in (2, 3):
            tup = [rng.randrange(order) for _ in range(n)]
            items.append((f"matrix-Z{order}-{tup}", make_good_matrix(group, tup)))
    items.append(("group-algebra-Z/5", make_twisted_group_algebra(Cyclic(5))))
    items.append(("twisted-Z2^2", make_twisted_group_algebra(BooleanVectors(2), bilinear_sign)))
    items.append(("twisted-Z2^3", make_twisted_group_algebra(BooleanVectors(3), bilinear_sign)))
    items.append(("group-algebra-Z2xZ4", make_twisted_group_algebra(Product([Cyclic(2), Cyclic(4)]))))
    names, rows, _ = s3_cayley()
    items.append(("group-algebra-S3", make_twisted_group_algebra(Table(names, rows))))
    items.append(("group-algebra-D4", make_twisted_group_algebra(Table(*dihedral8_cayley()))))
    for n in range(1, 6):
        items.append((f"truncated-n{n}", truncated_polynomial(n)))
    items.append(("z-truncated-n3", z_graded_truncated(3)))
    items.append(("upper-triangular", upper_triangular_2x2()))
    return tuple(items)


def corpus_ids():
    return [label for label, _ in corpus()]


def small(max_dim):
    return [(label, a) for label, a in corpus() if a.dimension <= max_dim]

