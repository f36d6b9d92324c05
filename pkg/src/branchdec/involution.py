"""Involutions, symmetric-pair data, restricted roots, and embeddings.

An InvolutionData models sigma with G' = G^sigma through its rational
matrix on the torus plus catalog-supplied signs on the sigma-fixed weight
lines.  A separate EmbeddingRecord covers the one catalogued reductive
subalgebra that is not symmetric.  Both reduce to the same weight-cell
view, which is what the dimension and rho bookkeeping consumes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cone_kernel import Cone
from .parabolic import ThetaStableParabolic
from .root_core import (
    PART_COMPACT,
    RootDatum,
    Vec,
    WeightMultiset,
    in_span,
    is_zero_vec,
    lex_positive,
    nullspace,
    primitive_direction,
    project_onto_span,
    rank,
    vdot,
    vneg,
    vadd,
    vscale,
    vsub,
    vzero,
)


class InvolutionError(ValueError):
    """Malformed or invalid involution/embedding data."""


@dataclass(frozen=True)
class TableRow:
    """A catalogued defining element with its human-readable Levi label."""

    x: Vec
    levi: str


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _identity(n: int) -> tuple[Vec, ...]:
    rows = []
    for i in range(n):
        r = [Fraction(0)] * n
        r[i] = Fraction(1)
        rows.append(tuple(r))
    return tuple(rows)


def _mat_apply(rows: Sequence[Vec], x: Vec) -> Vec:
    return tuple(vdot(r, x) for r in rows)


def _mat_transpose(rows: Sequence[Vec]) -> tuple[Vec, ...]:
    n = len(rows)
    return tuple(tuple(rows[i][j] for i in range(n)) for j in range(n))


def _mat_mul(a: Sequence[Vec], b: Sequence[Vec]) -> tuple[Vec, ...]:
    bt = _mat_transpose(b)
    return tuple(tuple(vdot(row, col) for col in bt) for row in a)


@dataclass(frozen=True)
class InvolutionData:
    """sigma on t-coordinates plus sign data on sigma-fixed weight lines.

    eps entries are keyed by (part, weight) and give the sign of sigma on
    the corresponding one-dimensional weight space; they are catalog data,
    validated through the dimension identity for g^sigma.
    """

    base: RootDatum
    matrix: tuple[Vec, ...]
    eps: tuple[tuple[str, Vec, int], ...]
    zero_weight_fixed_dim: int
    dim_gprime: int
    label: str
    pair_id: str
    table_rows: tuple[TableRow, ...] = ()
    declared_restricted_positive: tuple[tuple[Vec, int], ...] | None = None

    def sigma_weight(self, w: Vec) -> Vec:
        # weights transform by the transpose: (sigma.w)(X) = w(sigma X)
        return _mat_apply(_mat_transpose(self.matrix), w)

    def eps_of(self, part: str, w: Vec) -> int | None:
        for p, v, s in self.eps:
            if p == part and v == w:
                return s
        return None

    def t_sigma_basis(self) -> list[Vec]:
        return self._eigenbasis(Fraction(1))

    def t_minus_sigma_basis(self) -> list[Vec]:
        return self._eigenbasis(Fraction(-1))

    def _eigenbasis(self, sign: Fraction) -> list[Vec]:
        n = self.base.ambient_dim
        eye = _identity(n)
        rows = [vsub(r, vscale(sign, e)) for r, e in zip(self.matrix, eye)]
        rows.extend(self.base.t_constraints)
        return nullspace(rows)

    def fixed_pair_counts(self) -> tuple[int, int, int]:
        """(#pairs {w, sigma w}, #fixed with eps +1, #fixed with eps -1),
        nonzero weights, counted with multiplicity."""
        pairs = 0
        plus = 0
        minus = 0
        for part, w, m in self.base.weight_entries():
            if is_zero_vec(w):
                continue
            sw = self.sigma_weight(w)
            if sw == w:
                if self.eps_of(part, w) == 1:
                    plus += m
                else:
                    minus += m
            else:
                pairs += m
        return pairs // 2, plus, minus

    def dim_g_sigma(self) -> int:
        pairs, plus, _ = self.fixed_pair_counts()
        return (
            len(self.t_sigma_basis())
            + self.zero_weight_fixed_dim
            + pairs
            + plus
        )

    def dim_g_minus_sigma(self) -> int:
        pairs, _, minus = self.fixed_pair_counts()
        zminus = self.base.noncompact.zero_mult() - self.zero_weight_fixed_dim
        return len(self.t_minus_sigma_basis()) + zminus + pairs + minus


def validate_involution(inv: InvolutionData) -> ValidationReport:
    """Named structural checks; report-style, never raises."""
    checks: list[CheckResult] = []
    n = inv.base.ambient_dim
    m = inv.matrix
    ok_shape = len(m) == n and all(len(r) == n for r in m)
    checks.append(
        CheckResult("matrix-shape", ok_shape, "" if ok_shape else "not square")
    )
    if not ok_shape:
        return ValidationReport(tuple(checks))

    eye = _identity(n)
    checks.append(CheckResult("matrix-involutive", _mat_mul(m, m) == eye))
    checks.append(
        CheckResult("matrix-orthogonal", _mat_mul(_mat_transpose(m), m) == eye)
    )

    cons = list(inv.base.t_constraints)
    mt = _mat_transpose(m)
    torus_ok = all(in_span(_mat_apply(mt, c), cons) for c in cons) if cons else True
    checks.append(
        CheckResult(
            "matrix-preserves-torus",
            torus_ok,
            "" if torus_ok else "sigma does not stabilise the torus",
        )
    )

    for tag, ws in (
        ("permutes-compact-weights", inv.base.compact),
        ("permutes-noncompact-weights", inv.base.noncompact),
    ):
        good = all(
            ws.mult(inv.sigma_weight(w)) == mm
            for w, mm in ws
            if not is_zero_vec(w)
        )
        checks.append(CheckResult(tag, good))

    fixed_needed = set()
    mult_ok = True
    for part, w, mm in inv.base.weight_entries():
        if is_zero_vec(w):
            continue
        if inv.sigma_weight(w) == w:
            fixed_needed.add((part, w))
            if mm != 1:
                mult_ok = False
    eps_keys = {(p, w) for p, w, _ in inv.eps}
    eps_signs_ok = all(s in (1, -1) for _, _, s in inv.eps)
    cover = fixed_needed == eps_keys and eps_signs_ok and mult_ok
    detail = ""
    if not cover:
        missing = sorted(fixed_needed - eps_keys)
        extra = sorted(eps_keys - fixed_needed)
        bits = []
        if missing:
            bits.append(f"{len(missing)} fixed weights lack a sign")
        if extra:
            bits.append(f"{len(extra)} sign entries match no fixed weight")
        if not eps_signs_ok:
            bits.append("signs outside {+1,-1}")
        if not mult_ok:
            bits.append("fixed weight of multiplicity > 1 unsupported")
        detail = "; ".join(bits)
    checks.append(CheckResult("eps-covers-fixed-weights", cover, detail))

    neg_ok = all(
        inv.eps_of(p, vneg(w)) == s for p, w, s in inv.eps
    )
    checks.append(CheckResult("eps-negation-symmetric", neg_ok))

    zmax = inv.base.noncompact.zero_mult()
    zr = 0 <= inv.zero_weight_fixed_dim <= zmax
    checks.append(
        CheckResult(
            "zero-weight-fixed-dim-range",
            zr,
            "" if zr else f"must lie in [0, {zmax}]",
        )
    )

    dim = inv.dim_g_sigma()
    dims_ok = dim == inv.dim_gprime
    checks.append(
        CheckResult(
            "fixed-dimension-bookkeeping",
            dims_ok,
            "" if dims_ok else f"computed {dim}, declared {inv.dim_gprime}",
        )
    )

    # necessary condition for t^{-sigma} maximal abelian in k^{-sigma}:
    # a compact root vanishing on t^{-sigma} must be sigma-fixed with +1
    tminus = inv.t_minus_sigma_basis()
    max_ok = True
    bad = None
    for w, _ in inv.base.compact:
        restr = (
            project_onto_span(w, tminus) if tminus else vzero(n)
        )
        if is_zero_vec(restr):
            if inv.sigma_weight(w) != w or inv.eps_of(PART_COMPACT, w) != 1:
                max_ok = False
                bad = w
                break
    checks.append(
        CheckResult(
            "tminus-maximality-necessary",
            max_ok,
            "" if max_ok else f"compact weight {bad} could enlarge t^-sigma",
        )
    )
    return ValidationReport(tuple(checks))


def ensure_valid(inv: InvolutionData) -> None:
    report = validate_involution(inv)
    if not report.ok:
        names = ", ".join(c.name for c in report.failed())
        raise InvolutionError(f"{inv.pair_id}: failed checks: {names}")


# ---------------------------------------------------------------------------
# builders


def build_theta_involution(base: RootDatum) -> InvolutionData:
    """sigma = theta, G' = K; every weight is fixed with sign by its part."""
    eps = []
    for part, w, _ in base.weight_entries():
        if is_zero_vec(w):
            continue
        eps.append((part, w, 1 if part == PART_COMPACT else -1))
    return InvolutionData(
        base,
        _identity(base.ambient_dim),
        tuple(eps),
        0,
        base.dim_k,
        f"theta on {base.name}",
        f"theta:{base.name}",
    )


def build_swap_involution(base: RootDatum, half: RootDatum) -> InvolutionData:
    """Factor swap on g + g, G' the diagonal copy."""
    h = half.ambient_dim
    if base.ambient_dim != 2 * h:
        raise InvolutionError("base is not a doubled copy of the half datum")
    for part_tag, whole, part_half in (
        ("compact", base.compact, half.compact),
        ("noncompact", base.noncompact, half.noncompact),
    ):
        rebuilt = WeightMultiset.of(
            [(w + vzero(h), mm) for w, mm in part_half]
            + [(vzero(h) + w, mm) for w, mm in part_half]
        )
        if rebuilt.nonzero() != whole.nonzero():
            raise InvolutionError(
                f"{part_tag} weights are not two blocks of the half datum"
            )
    rows = []
    for i in range(2 * h):
        r = [Fraction(0)] * (2 * h)
        r[(i + h) % (2 * h)] = Fraction(1)
        rows.append(tuple(r))
    return InvolutionData(
        base,
        tuple(rows),
        (),
        half.noncompact.zero_mult(),
        half.dim_g,
        f"factor swap on {base.name}",
        f"swap:{base.name}",
    )


# ---------------------------------------------------------------------------
# restricted roots and the momentum chamber


@dataclass(frozen=True)
class RestrictedRootSystem:
    space_basis: tuple[Vec, ...]
    roots: WeightMultiset
    positive: WeightMultiset


def restricted_roots(inv: InvolutionData) -> RestrictedRootSystem:
    """Nonzero projections of Delta(k,t) onto span(t^{-sigma}).

    Positivity is lexicographic in ambient coordinates, which is generic
    for any finite root collection and fixed across runs.
    """
    ensure_valid(inv)
    tminus = tuple(inv.t_minus_sigma_basis())
    if not tminus:
        empty = WeightMultiset.of([])
        return RestrictedRootSystem((), empty, empty)
    acc: list[tuple[Vec, int]] = []
    for w, m in inv.base.compact:
        r = project_onto_span(w, tminus)
        if not is_zero_vec(r):
            acc.append((r, m))
    roots = WeightMultiset.of(acc)
    positive = WeightMultiset.of(
        (w, m) for w, m in roots if lex_positive(w)
    )
    return RestrictedRootSystem(tminus, roots, positive)


def _chamber_rays(
    constraint_rows: list[Vec], space_dim: int
) -> tuple[list[Vec], list[Vec]]:
    """Extreme rays and lineality of {y : c . y >= 0} inside Q^space_dim."""
    dirs: list[Vec] = []
    seen = set()
    for c in constraint_rows:
        p = primitive_direction(c)
        if p not in seen and not is_zero_vec(p):
            seen.add(p)
            dirs.append(p)
    dirs.sort()
    if not dirs:
        return [], list(_identity(space_dim))
    lineality = nullspace(dirs)
    ldim = len(lineality)
    rays: set[Vec] = set()
    for size in range(0, len(dirs) + 1):
        for subset in itertools.combinations(dirs, size):
            space = nullspace(list(subset)) if subset else list(_identity(space_dim))
            if len(space) != ldim + 1:
                continue
            for v in space:
                u = (
                    vsub(v, project_onto_span(v, lineality))
                    if lineality
                    else v
                )
                if is_zero_vec(u):
                    continue
                u = primitive_direction(u)
                for cand in (u, vneg(u)):
                    if all(vdot(d, cand) >= 0 for d in dirs):
                        rays.add(cand)
                break
    return sorted(rays), lineality


def momentum_chamber(inv: InvolutionData) -> Cone:
    """The dominant chamber of the restricted root system, inside
    span(t^{-sigma}), as generators plus lineality."""
    system = restricted_roots(inv)
    n = inv.base.ambient_dim
    basis = system.space_basis
    if not basis:
        return Cone((), (), n)

    def to_coords(w: Vec) -> Vec:
        return tuple(vdot(w, b) for b in basis)

    def to_ambient(y: Vec) -> Vec:
        out = vzero(n)
        for c, b in zip(y, basis):
            out = vadd(out, vscale(c, b))
        return out

    constraint_rows = [to_coords(w) for w, _ in system.positive]
    rays, lineality = _chamber_rays(constraint_rows, len(basis))
    gens = tuple(primitive_direction(to_ambient(y)) for y in rays)
    lines = tuple(primitive_direction(to_ambient(y)) for y in lineality)
    return Cone(gens, lines, n)


# ---------------------------------------------------------------------------
# weight cells: common view for involutions and plain embeddings


@dataclass(frozen=True)
class WeightCell:
    """Supports of one line of the subalgebra inside the weight spaces.

    The subalgebra meets the span of the listed (part, weight) lines in a
    one-dimensional space; it lies inside a parabolic exactly when every
    member weight does.
    """

    part: str
    members: tuple[Vec, ...]
    restricted: Vec


@dataclass(frozen=True)
class EmbeddingView:
    base: RootDatum
    tprime_rows: tuple[Vec, ...]
    fixed_zero_dim: int
    cells: tuple[WeightCell, ...]
    dim_gprime: int
    pair_id: str


def involution_view(inv: InvolutionData) -> EmbeddingView:
    tplus = tuple(inv.t_sigma_basis())
    cells: list[WeightCell] = []
    for part, w, m in inv.base.weight_entries():
        if is_zero_vec(w):
            continue
        sw = inv.sigma_weight(w)
        if sw == w:
            if inv.eps_of(part, w) == 1:
                restr = project_onto_span(w, tplus) if tplus else vzero(len(w))
                cells.extend([WeightCell(part, (w,), restr)] * m)
        elif w < sw:
            restr = project_onto_span(w, tplus) if tplus else vzero(len(w))
            cells.extend([WeightCell(part, (w, sw), restr)] * m)
    return EmbeddingView(
        inv.base,
        tplus,
        len(tplus) + inv.zero_weight_fixed_dim,
        tuple(cells),
        inv.dim_gprime,
        inv.pair_id,
    )


@dataclass(frozen=True)
class EmbeddingRecord:
    """A reductive subalgebra given by its torus and weight matching only.

    Used for catalogued non-symmetric embeddings.  Weights with equal
    nonzero restriction to the small torus are grouped into cells; the
    declared dimension pins the grouping down (each cell carries exactly
    one line of the subalgebra).
    """

    base: RootDatum
    tprime_rows: tuple[Vec, ...]
    extra_zero_dim: int
    dim_gprime: int
    label: str
    pair_id: str
    table_rows: tuple[TableRow, ...] = ()


def validate_embedding(rec: EmbeddingRecord) -> ValidationReport:
    checks: list[CheckResult] = []
    n = rec.base.ambient_dim
    rows_ok = all(len(r) == n for r in rec.tprime_rows)
    checks.append(CheckResult("tprime-shape", rows_ok))
    if not rows_ok:
        return ValidationReport(tuple(checks))
    checks.append(
        CheckResult(
            "tprime-independent",
            rank(list(rec.tprime_rows)) == len(rec.tprime_rows),
        )
    )
    in_torus = all(rec.base.in_torus(r) for r in rec.tprime_rows)
    checks.append(CheckResult("tprime-in-torus", in_torus))

    vanish = None
    for _, w, _ in rec.base.weight_entries():
        if is_zero_vec(w):
            continue
        if is_zero_vec(project_onto_span(w, rec.tprime_rows)):
            vanish = w
            break
    checks.append(
        CheckResult(
            "no-weight-vanishes-on-tprime",
            vanish is None,
            "" if vanish is None else f"weight {vanish} centralises t'",
        )
    )

    view = embedding_view(rec)
    total = view.fixed_zero_dim + len(view.cells)
    checks.append(
        CheckResult(
            "cell-count-bookkeeping",
            total == rec.dim_gprime,
            "" if total == rec.dim_gprime else (
                f"torus {view.fixed_zero_dim} + cells {len(view.cells)} "
                f"= {total}, declared {rec.dim_gprime}"
            ),
        )
    )
    return ValidationReport(tuple(checks))


def embedding_view(rec: EmbeddingRecord) -> EmbeddingView:
    groups: dict[tuple[str, Vec], list[Vec]] = {}
    for part, w, _ in rec.base.weight_entries():
        if is_zero_vec(w):
            continue
        r = project_onto_span(w, rec.tprime_rows)
        if is_zero_vec(r):
            continue
        key = (part, r)
        groups.setdefault(key, []).append(w)
    cells = []
    for (part, r), members in sorted(groups.items()):
        cells.append(WeightCell(part, tuple(sorted(members)), r))
    return EmbeddingView(
        rec.base,
        rec.tprime_rows,
        len(rec.tprime_rows) + rec.extra_zero_dim,
        tuple(cells),
        rec.dim_gprime,
        rec.pair_id,
    )


def as_embedding_view(
    pair: InvolutionData | EmbeddingRecord | EmbeddingView,
) -> EmbeddingView:
    if isinstance(pair, EmbeddingView):
        return pair
    if isinstance(pair, InvolutionData):
        return involution_view(pair)
    if isinstance(pair, EmbeddingRecord):
        return embedding_view(pair)
    raise InvolutionError(f"cannot view {type(pair).__name__} as an embedding")


def dim_gprime_cap_q(
    pair: InvolutionData | EmbeddingRecord | EmbeddingView,
    q: ThetaStableParabolic,
) -> int:
    """dim of (subalgebra, complexified) intersected with q.

    The subalgebra torus and fixed zero-weight part always sit inside the
    Levi; each cell contributes exactly when all of its member weights lie
    in Delta(q).
    """
    view = as_embedding_view(pair)
    if view.base != q.base:
        raise InvolutionError("parabolic and pair live over different data")
    total = view.fixed_zero_dim
    for cell in view.cells:
        if all(q.in_q(w) for w in cell.members):
            total += 1
    return total


def dim_gprime_cap_levi(
    pair: InvolutionData | EmbeddingRecord | EmbeddingView,
    q: ThetaStableParabolic,
) -> int:
    """dim of the subalgebra intersected with the Levi of q.

    This is the isotropy algebra of the subgroup at the base point of the
    flag manifold attached to q, so dim_gprime minus this value is the
    dimension of the subgroup orbit there.
    """
    view = as_embedding_view(pair)
    if view.base != q.base:
        raise InvolutionError("parabolic and pair live over different data")
    total = view.fixed_zero_dim
    for cell in view.cells:
        if all(q.in_levi(w) for w in cell.members):
            total += 1
    return total
