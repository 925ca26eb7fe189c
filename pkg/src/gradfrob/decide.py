"""Decision procedures: sigma-graded Frobenius, graded symmetric, faithfulness.

Every verdict is exact.  A positive answer carries a certificate (a
rational ``alpha`` indexed by ``J_sigma`` together with the nonzero
determinant of each diagonal-degree block at that point); a negative
answer carries a witness that a deterministic check reproduces.

All deciders take the same tuning knobs as
:func:`gradfrob.exactmath.is_generically_invertible`: ``strategy``
(``auto``/``randomized``/``symbolic``), ``seed``, ``trials`` and
``sample_bound``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import Finding, GradedAlgebra, ValidationReport, component, forget_grading
from .errors import DimensionMismatch, ValidationError
from .exactmath import (
    DEFAULT_SAMPLE_BOUND,
    DEFAULT_TRIALS,
    LinearFormMatrix,
    MultiPoly,
    determinant,
    is_generically_invertible,
    nonvanishing_point,
    nullspace_basis,
    sample_points,
    symbolic_det,
)
from .exactmath.forms import check_strategy
from .paratrophic import build_cg, build_p, cg_full_column_rank, quantification_set, shifted_degree


# -- witnesses ---------------------------------------------------------------

@dataclass(frozen=True)
class DimensionMismatchWitness:
    g: object
    rows: int
    cols: int
    kind = "dimension-mismatch"


@dataclass(frozen=True)
class RankDeficiency:
    g: object
    rank: int
    size: int
    kind = "rank-deficiency"


@dataclass(frozen=True)
class IdenticallyZeroDet:
    g: object
    kind = "identically-zero-det"


@dataclass(frozen=True)
class ZeroSigmaComponent:
    sigma: object
    kind = "zero-sigma-component"


@dataclass(frozen=True)
class NoSymmetricSolution:
    kind = "no-symmetric-solution"


Witness = (DimensionMismatchWitness | RankDeficiency | IdenticallyZeroDet
           | ZeroSigmaComponent | NoSymmetricSolution)


@dataclass
class BlockRecord:
    """One row of the per-degree table: column degree ``g``, block shape, outcome."""

    g: object
    rows: int
    cols: int
    status: str = "pending"
    det: Fraction | None = None
    rank: int | None = None


@dataclass
class Decision:
    question: str
    verdict: bool
    sigma: object = None
    alpha: dict[int, Fraction] | None = None
    parameters: tuple[Fraction, ...] | None = None
    witness: Witness | None = None
    blocks: list[BlockRecord] = field(default_factory=list)
    method: str = ""

    def __bool__(self):
        return self.verdict


# -- shared machinery --------------------------------------------------------

def _dimension_records(a: GradedAlgebra, sigma) -> list[BlockRecord]:
    records = []
    for g in quantification_set(a, sigma):
        rows = len(component(a, shifted_degree(a, sigma, g)))
        cols = len(component(a, g))
        records.append(BlockRecord(g, rows, cols))
    return records


def _preferred_mismatch(mismatched: Sequence[BlockRecord]) -> BlockRecord:
    """First mismatch at a degree inside the support, else the first overall."""
    return next((rec for rec in mismatched if rec.cols), mismatched[0])


def _joint_block_decision(blocks: Sequence[tuple[BlockRecord, LinearFormMatrix]], nvars: int,
                          strategy: str, seed: int, trials: int, sample_bound: int):
    """Find one point inverting every block, or the first identically singular block.

    Returns ``(point, None, method)`` or ``(None, record, "symbolic")`` and
    fills in the records.
    One sampled point is checked against all blocks; blocks that no sample
    inverts get their determinant polynomial computed.
    """
    size = max((len(m.rows) for _, m in blocks), default=0)
    check_strategy(strategy, trials, sample_bound, size)
    inverted = [False] * len(blocks)
    if strategy != "symbolic":
        for point in sample_points(nvars, seed, trials, sample_bound):
            dets = []
            for k, (_, m) in enumerate(blocks):
                d = determinant(m.evaluate(point))
                if not d:
                    break
                inverted[k] = True
                dets.append(d)
            else:
                for (rec, _), d in zip(blocks, dets):
                    rec.status, rec.det = "invertible", d
                return tuple(Fraction(x) for x in point), None, "sampled"
    polys: list[MultiPoly | None] = [None] * len(blocks)
    for k, (rec, m) in enumerate(blocks):
        if inverted[k]:
            continue
        polys[k] = symbolic_det(m)
        if polys[k].is_zero():
            rec.status = "identically-zero"
            return None, rec, "symbolic"
    # every block determinant is a nonzero polynomial: their product has a nonvanishing point
    product = MultiPoly.constant(nvars, 1)
    for k, (_, m) in enumerate(blocks):
        product = product * (polys[k] if polys[k] is not None else symbolic_det(m))
    point = nonvanishing_point(product)
    for rec, m in blocks:
        rec.status, rec.det = "invertible", determinant(m.evaluate(point))
    return point, None, "symbolic"


# -- sigma-graded Frobenius --------------------------------------------------

def decide_sigma_frobenius(a: GradedAlgebra, sigma, strategy: str = "auto", seed: int = 0,
                           trials: int = DEFAULT_TRIALS,
                           sample_bound: int = DEFAULT_SAMPLE_BOUND) -> Decision:
    """Is there a rational ``alpha`` making ``P(sigma, alpha)`` invertible?

    Decided block by block: each column degree ``g`` needs
    ``|J_{sigma g^{-1}}| == |J_g|`` and a generically invertible block.
    """
    p = build_p(a, sigma)
    records = _dimension_records(a, sigma)
    decision = Decision("sigma-frobenius", False, sigma=sigma, blocks=records)
    if not p.variables:
        for rec in records:
            rec.status = "not-checked"
        decision.witness = ZeroSigmaComponent(sigma)
        decision.method = "counting"
        return decision
    mismatched = [rec for rec in records if rec.rows != rec.cols]
    if mismatched:
        for rec in records:
            rec.status = "dimension-mismatch" if rec.rows != rec.cols else "not-checked"
        first = _preferred_mismatch(mismatched)
        decision.witness = DimensionMismatchWitness(first.g, first.rows, first.cols)
        decision.method = "counting"
        return decision
    blocks = [(rec, p.block(rec.g)) for rec in records if rec.cols]
    point, failed, decision.method = _joint_block_decision(
        blocks, len(p.variables), strategy, seed, trials, sample_bound)
    if point is None:
        for rec in records:
            if rec.status == "pending":
                rec.status = "not-checked"
        decision.witness = IdenticallyZeroDet(failed.g)
        return decision
    decision.verdict = True
    decision.alpha = dict(zip(p.variables, point))
    return decision


def decide_frobenius_ungraded(algebra_or_constants, unit: Sequence | None = None, **options) -> Decision:
    """Classical Frobenius test: trivial grading, ``sigma = epsilon``.

    Accepts a :class:`GradedAlgebra` (its grading is forgotten) or raw
    structure constants plus a unit vector.
    """
    if isinstance(algebra_or_constants, GradedAlgebra):
        b = forget_grading(algebra_or_constants)
    else:
        from .constructors import with_trivial_grading

        b = with_trivial_grading(algebra_or_constants, unit)
    d = decide_sigma_frobenius(b, b.group.identity(), **options)
    d.question = "frobenius"
    return d


# -- graded symmetric --------------------------------------------------------

def symmetry_system(a: GradedAlgebra) -> list[list[Fraction]]:
    """Rows ``(c_ijl - c_jil)_{l in J_eps}`` for ``i < j``; zero rows dropped."""
    eps_basis = component(a, a.group.identity())
    rows = []
    for i in range(a.dimension):
        for j in range(i + 1, a.dimension):
            row = [a.constant(i, j, l) - a.constant(j, i, l) for l in eps_basis]
            if any(row):
                rows.append(row)
    return rows


def decide_graded_symmetric(a: GradedAlgebra, strategy: str = "auto", seed: int = 0,
                            trials: int = DEFAULT_TRIALS,
                            sample_bound: int = DEFAULT_SAMPLE_BOUND) -> Decision:
    """Is there ``alpha`` on ``J_eps`` with ``P(eps, alpha)`` symmetric and invertible?

    The symmetric ``alpha`` form the nullspace of :func:`symmetry_system`;
    writing ``alpha = sum_k t_k b_k`` turns the question into generic
    invertibility in the ``t`` variables.  ``Decision.parameters`` holds ``t``.
    """
    eps = a.group.identity()
    p = build_p(a, eps)
    records = _dimension_records(a, eps)
    decision = Decision("graded-symmetric", False, sigma=eps, blocks=records)
    basis = nullspace_basis(symmetry_system(a), ncols=len(p.variables))
    if not basis:
        for rec in records:
            rec.status = "not-checked"
        decision.witness = NoSymmetricSolution()
        decision.method = "nullspace"
        return decision
    mismatched = [rec for rec in records if rec.rows != rec.cols]
    if mismatched:
        for rec in records:
            rec.status = "dimension-mismatch" if rec.rows != rec.cols else "not-checked"
        first = _preferred_mismatch(mismatched)
        decision.witness = DimensionMismatchWitness(first.g, first.rows, first.cols)
        decision.method = "counting"
        return decision
    blocks = [(rec, p.block(rec.g).substitute(basis)) for rec in records if rec.cols]
    point, failed, decision.method = _joint_block_decision(
        blocks, len(basis), strategy, seed, trials, sample_bound)
    if point is None:
        for rec in records:
            if rec.status == "pending":
                rec.status = "not-checked"
        decision.witness = IdenticallyZeroDet(failed.g)
        return decision
    decision.verdict = True
    decision.parameters = point
    decision.alpha = {
        l: sum((t * b[k] for t, b in zip(point, basis)), Fraction(0))
        for k, l in enumerate(p.variables)
    }
    return decision


# -- faithfulness and dual modules -------------------------------------------

def is_sigma_faithful(a: GradedAlgebra, sigma) -> Decision:
    """Left sigma-faithfulness via ``rank C_g == |J_g|`` for every relevant ``g``."""
    decision = Decision("sigma-faithful", True, sigma=sigma, method="rank")
    for g in quantification_set(a, sigma):
        cg = build_cg(a, sigma, g)
        rank = cg.rank()
        ok = rank == len(cg.cols)
        decision.blocks.append(BlockRecord(g, len(cg.rows), len(cg.cols),
                                           "full-rank" if ok else "rank-deficient", rank=rank))
        if not ok and decision.verdict:
            decision.verdict = False
            decision.witness = RankDeficiency(g, rank, len(cg.cols))
    return decision


@dataclass(frozen=True)
class ModuleViolation(Finding):
    """``(u_i e_j) e_k != u_i (e_j e_k)``, or ``u_i 1 != u_i`` when ``j`` is None."""

    i: int
    j: int | None
    k: int | None
    kind: str = field(init=False, default="module-action")


@dataclass
class RightModule:
    """A right module ``U`` over an algebra ``R`` (grading ignored).

    ``action[(i, j)] = {l: c}`` encodes ``u_i e_j = sum_l c u_l``.
    """

    algebra: GradedAlgebra
    dimension: int
    action: dict[tuple[int, int], dict[int, Fraction]]

    def act(self, vec: Mapping[int, Fraction], j: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, x in vec.items():
            for l, c in self.action.get((i, j), {}).items():
                out[l] = out.get(l, 0) + x * c
        return {l: c for l, c in out.items() if c}


def regular_right_module(a: GradedAlgebra) -> RightModule:
    return RightModule(a, a.dimension, {key: dict(v) for key, v in a.constants.items()})


def validate_module(u: RightModule) -> ValidationReport:
    a = u.algebra
    found = []
    for i in range(u.dimension):
        ui = {i: Fraction(1)}
        unit_image: dict[int, Fraction] = {}
        for j, x in enumerate(a.unit):
            if x:
                for l, c in u.act(ui, j).items():
                    unit_image[l] = unit_image.get(l, 0) + x * c
        if {l: c for l, c in unit_image.items() if c} != ui:
            found.append(ModuleViolation(i, None, None))
        for j in range(a.dimension):
            uij = u.act(ui, j)
            for k in range(a.dimension):
                lhs = u.act(uij, k)
                rhs: dict[int, Fraction] = {}
                for l, c in a.product(j, k).items():
                    for r, x in u.act(ui, l).items():
                        rhs[r] = rhs.get(r, 0) + c * x
                if lhs != {r: x for r, x in rhs.items() if x}:
                    found.append(ModuleViolation(i, j, k))
    return ValidationReport(found)


def decide_dual_module_iso(u: RightModule, strategy: str = "auto", seed: int = 0,
                           trials: int = DEFAULT_TRIALS,
                           sample_bound: int = DEFAULT_SAMPLE_BOUND) -> Decision:
    """Is ``U* ~ R`` as left ``R``-modules?  ``alpha_l`` plays the role of ``u*(u_l)``."""
    r = u.algebra
    if u.dimension != r.dimension:
        raise DimensionMismatch(f"dim U = {u.dimension} but dim R = {r.dimension}")
    report = validate_module(u)
    if not report.passed:
        raise ValidationError(report)
    m = u.dimension
    entries = {(i, j): dict(prod) for (i, j), prod in u.action.items() if prod}
    mat = LinearFormMatrix(range(m), range(m), range(m), entries)
    res = is_generically_invertible(mat, strategy, seed, trials, sample_bound)
    rec = BlockRecord(None, m, m, "invertible" if res else "identically-zero", det=res.determinant)
    decision = Decision("dual-module-iso", res.invertible, blocks=[rec], method=res.method)
    if res:
        decision.alpha = dict(zip(range(m), res.witness))
    else:
        decision.witness = IdenticallyZeroDet(None)
    return decision


def decide_dual_component_iso(a: GradedAlgebra, sigma, strategy: str = "auto", seed: int = 0,
                              trials: int = DEFAULT_TRIALS,
                              sample_bound: int = DEFAULT_SAMPLE_BOUND) -> Decision:
    """Is ``(A_sigma)* ~ A_eps`` as left ``A_eps``-modules?

    Tests the ``J_sigma x J_eps`` matrix ``(sum_l alpha_l c_ijl)``.
    """
    eps = a.group.identity()
    p = build_p(a, sigma)
    j_sigma, j_eps = p.variables, component(a, eps)
    rec = BlockRecord(eps, len(j_sigma), len(j_eps))
    decision = Decision("dual-component-iso", False, sigma=sigma, blocks=[rec])
    if len(j_sigma) != len(j_eps):
        rec.status = "dimension-mismatch"
        decision.witness = DimensionMismatchWitness(eps, len(j_sigma), len(j_eps))
        decision.method = "counting"
        return decision
    res = is_generically_invertible(p.submatrix(j_sigma, j_eps), strategy, seed, trials, sample_bound)
    decision.method = res.method
    if not res:
        rec.status = "identically-zero"
        decision.witness = IdenticallyZeroDet(eps)
        return decision
    rec.status, rec.det = "invertible", res.determinant
    decision.verdict = True
    decision.alpha = dict(zip(j_sigma, res.witness))
    return decision


# -- the three invertibility conditions ---------------------------------------

@dataclass
class TheoremAReport:
    """The three equivalent invertibility conditions, each evaluated independently.

    ``full``: ``P(sigma, alpha)`` has full rank.
    ``faithful_form``: ``|J_eps| == |J_sigma|``, the ``(J_eps, J_sigma)`` block is
    invertible and every ``C_g`` has full column rank.
    ``blockwise``: every ``(J_{sigma g^{-1}}, J_g)`` block is square and invertible.
    """

    sigma: object
    alpha: dict[int, Fraction]
    full: bool
    faithful_form: bool
    blockwise: bool
    blocks: list[BlockRecord] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.full == self.faithful_form == self.blockwise


def _alpha_mapping(variables: Sequence[int], alpha) -> dict[int, Fraction]:
    if isinstance(alpha, Mapping):
        if set(alpha) != set(variables):
            raise ValueError("alpha must be indexed exactly by J_sigma")
        return {l: Fraction(alpha[l]) for l in variables}
    alpha = list(alpha)
    if len(alpha) != len(variables):
        raise ValueError(f"alpha needs {len(variables)} entries (|J_sigma|), got {len(alpha)}")
    return {l: Fraction(x) for l, x in zip(variables, alpha)}


def check_theorem_a(a: GradedAlgebra, sigma, alpha) -> TheoremAReport:
    p = build_p(a, sigma)
    amap = _alpha_mapping(p.variables, alpha)
    # square, so full rank is a nonzero determinant
    full = determinant(p.matrix.evaluate(amap)) != 0

    eps = a.group.identity()
    j_eps = component(a, eps)
    faithful_form = len(j_eps) == len(p.variables) and determinant(
        p.submatrix(j_eps, p.variables).evaluate(amap)) != 0
    records = []
    blockwise = True
    for g in quantification_set(a, sigma):
        rows, cols = p.block_indices(g)
        rec = BlockRecord(g, len(rows), len(cols))
        if faithful_form and not cg_full_column_rank(a, sigma, g):
            faithful_form = False
        if len(rows) != len(cols):
            rec.status = "dimension-mismatch"
            blockwise = False
        else:
            rec.det = determinant(p.submatrix(rows, cols).evaluate(amap))
            rec.status = "invertible" if rec.det else "singular"
            blockwise = blockwise and bool(rec.det)
        records.append(rec)
    return TheoremAReport(sigma, amap, full, faithful_form, blockwise, records)


# -- batch -------------------------------------------------------------------

def scan_sigma(a: GradedAlgebra, strategy: str = "auto", seed: int = 0,
               trials: int = DEFAULT_TRIALS,
               sample_bound: int = DEFAULT_SAMPLE_BOUND) -> dict[object, Decision]:
    """``decide_sigma_frobenius`` for every ``sigma`` in the support, in sorted order.

    Degrees outside the support have ``J_sigma`` empty and are all
    ``No`` (zero sigma component); they are not listed individually.
    """
    return {
        sigma: decide_sigma_frobenius(a, sigma, strategy, seed, trials, sample_bound)
        for sigma in a.support
    }


# -- re-verification ---------------------------------------------------------

def verify_decision(a: GradedAlgebra, d: Decision) -> bool:
    """Re-check a certificate or witness by direct exact computation."""
    if d.question in ("sigma-frobenius", "frobenius", "graded-symmetric"):
        b = forget_grading(a) if d.question == "frobenius" else a
        sigma = b.group.identity() if d.question == "frobenius" else d.sigma
        p = build_p(b, sigma)
        if d.verdict:
            if set(d.alpha) != set(p.variables):
                return False
            values = p.matrix.evaluate(d.alpha)
            if d.question == "graded-symmetric":
                m = b.dimension
                if any(values[i][j] != values[j][i] for i in range(m) for j in range(m)):
                    return False
            return determinant(values) != 0
        w = d.witness
        if isinstance(w, ZeroSigmaComponent):
            return not p.variables
        if isinstance(w, NoSymmetricSolution):
            return not nullspace_basis(symmetry_system(b), ncols=len(p.variables))
        if isinstance(w, DimensionMismatchWitness):
            rows, cols = p.block_indices(w.g)
            return (len(rows), len(cols)) == (w.rows, w.cols) and w.rows != w.cols
        if isinstance(w, IdenticallyZeroDet):
            blk = p.block(w.g)
            if d.question == "graded-symmetric":
                blk = blk.substitute(nullspace_basis(symmetry_system(b), ncols=len(p.variables)))
            return symbolic_det(blk).is_zero()
        return False
    if d.question == "sigma-faithful":
        if d.verdict:
            return all(build_cg(a, d.sigma, g).has_full_column_rank()
                       for g in quantification_set(a, d.sigma))
        cg = build_cg(a, d.sigma, d.witness.g)
        return cg.rank() == d.witness.rank < d.witness.size == len(cg.cols)
    if d.question == "dual-component-iso":
        p = build_p(a, d.sigma)
        j_eps = component(a, a.group.identity())
        if d.verdict:
            return determinant(p.submatrix(p.variables, j_eps).evaluate(d.alpha)) != 0
        if isinstance(d.witness, DimensionMismatchWitness):
            return len(p.variables) != len(j_eps)
        return symbolic_det(p.submatrix(p.variables, j_eps)).is_zero()
    raise ValueError(f"cannot re-verify a {d.question!r} decision against an algebra")
