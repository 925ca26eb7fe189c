"""Independent reference computations used only by the tests.

Nothing here calls into the code paths being checked.
"""

import itertools
from fractions import Fraction

from gradfrob.exactmath import MultiPoly


def leibniz_det(entries, n):
    """Determinant by the permutation expansion; entries are MultiPoly or scalars."""
    total = None
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * entries[i][perm[i]]
        term = -term if inversions % 2 else term
        total = term if total is None else total + term
    return total if total is not None else 1


def poly_matrix(m):
    """Dense MultiPoly entries of a LinearFormMatrix."""
    nv = len(m.variables)
    n_r, n_c = m.shape
    return [[MultiPoly.linear(nv, m.entry(r, c)) for c in range(n_c)] for r in range(n_r)]


def gauss_rank(rows):
    """Textbook rank over Q by repeated pivot search (no shared code with the package)."""
    mat = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(mat)):
            if mat[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][c] != 0:
                f = mat[r][c] / mat[rank][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def rewrite_word(word, q):
    """Normal form of a word in x_1..x_n modulo X_j X_i = q_ij X_i X_j (i<j), X_i^2 = 0.

    Returns ``(coefficient, sorted word)``; coefficient 0 when the word vanishes.
    """
    word = list(word)
    coeff = Fraction(1)
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            a, b = word[k], word[k + 1]
            if a == b:
                return Fraction(0), ()
            if a > b:
                # X_a X_b with a > b becomes q_{b a} X_b X_a
                coeff *= q[(b, a)]
                word[k], word[k + 1] = b, a
                changed = True
    return coeff, tuple(word)


def random_rational(rng, bound=9):
    while True:
        num = rng.randint(-bound, bound)
        if num:
            return Fraction(num, rng.randint(1, bound))


def random_q_entries(rng, n):
    return {(i, j): random_rational(rng) for i in range(1, n + 1) for j in range(i + 1, n + 1)}


def symmetric_q_entries(rng, n):
    """Random q satisfying q_in = prod_{p<i} q_pi * prod_{i<p<n} q_ip^{-1}, built by hand."""
    q = {(i, j): random_rational(rng) for i in range(1, n) for j in range(i + 1, n)}
    for i in range(1, n):
        v = Fraction(1)
        for p in range(1, i):
            v *= q[(p, i)]
        for p in range(i + 1, n):
            v /= q[(i, p)]
        q[(i, n)] = v
    return q


def s3_cayley():
    """Cayley table of S_3 built by composing permutation tuples."""
    perms = sorted(itertools.permutations(range(3)))
    names = ["p" + "".join(map(str, p)) for p in perms]
    index = {p: k for k, p in enumerate(perms)}
    rows = [[index[tuple(a[b[i]] for i in range(3))] for b in perms] for a in perms]
    return names, rows, perms


def dihedral8_cayley():
    """D_4 as permutations of the square's vertices."""
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)

    def mul(a, b):
        return tuple(a[b[i]] for i in range(4))

    elems = {(0, 1, 2, 3)}
    frontier = [r, s]
    while frontier:
        x = frontier.pop()
        if x in elems:
            continue
        elems.add(x)
        frontier.extend(mul(x, y) for y in (r, s))
    perms = sorted(elems)
    index = {p: k for k, p in enumerate(perms)}
    names = ["d" + "".join(map(str, p)) for p in perms]
    rows = [[index[mul(a, b)] for b in perms] for a in perms]
    return names, rows


def random_alpha(rng, k, low=-2, high=2):
    return [Fraction(rng.randint(low, high)) for _ in range(k)]

