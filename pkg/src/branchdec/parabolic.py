"""Theta-stable parabolic subalgebras q = l + u.

A parabolic is induced by an element X of the torus: weights pairing
positively with X span u, weights pairing to zero stay in the Levi part l
(together with the torus and any zero weights of p).  Construction,
enumeration over arrangement faces, parameter-range predicates and the
symmetric-type predicates all live here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .cone_kernel import simplex_feasible
from .root_core import (
    DatumError,
    PART_COMPACT,
    PART_NONCOMPACT,
    RootDatum,
    Vec,
    WeightMultiset,
    is_zero_vec,
    lex_positive,
    nullspace,
    primitive_direction,
    solve_linear,
    vadd,
    vdot,
    vneg,
    vscale,
    vsub,
    vzero,
)

DEFAULT_MAX_RANK = 7


class UnsupportedQuery(Exception):
    """A question the model deliberately refuses to answer.

    Raised instead of guessing: non-equal-rank parameter ranges, rank
    bounds, and pair records that do not support a given check all land
    here.  The CLI maps this to its own exit code.
    """


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True, eq=False)
class ThetaStableParabolic:
    """q = l + u determined by X; identity is the weight partition, not X."""

    base: RootDatum
    x: Vec
    levi_compact: WeightMultiset
    levi_noncompact: WeightMultiset
    u_compact: WeightMultiset
    u_noncompact: WeightMultiset
    signature: tuple[int, ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThetaStableParabolic):
            return NotImplemented
        return self.base == other.base and self.signature == other.signature

    def __hash__(self) -> int:
        return hash((self.base, self.signature))

    def sign_of(self, w: Vec) -> int:
        return _sign(vdot(w, self.x))

    def in_q(self, w: Vec) -> bool:
        return vdot(w, self.x) >= 0

    def in_u(self, w: Vec) -> bool:
        return vdot(w, self.x) > 0

    def in_levi(self, w: Vec) -> bool:
        return vdot(w, self.x) == 0

    @property
    def rho_u(self) -> Vec:
        out = vzero(self.base.ambient_dim)
        for ws in (self.u_compact, self.u_noncompact):
            for w, m in ws:
                out = vadd(out, vscale(m, w))
        return vscale(Fraction(1, 2), out)

    @property
    def S(self) -> int:
        return self.u_compact.total()

    @property
    def dim_u(self) -> int:
        return self.u_compact.total() + self.u_noncompact.total()

    @property
    def dim_levi(self) -> int:
        return (
            self.base.dim_t
            + self.levi_compact.total()
            + self.levi_noncompact.total()
        )

    @property
    def dim_q(self) -> int:
        return self.dim_levi + self.dim_u

    @property
    def is_full_algebra(self) -> bool:
        return self.dim_u == 0

    def levi_weights(self) -> Iterator[tuple[str, Vec, int]]:
        for w, m in self.levi_compact:
            yield PART_COMPACT, w, m
        for w, m in self.levi_noncompact:
            yield PART_NONCOMPACT, w, m

    def u_weights(self) -> Iterator[tuple[str, Vec, int]]:
        for w, m in self.u_compact:
            yield PART_COMPACT, w, m
        for w, m in self.u_noncompact:
            yield PART_NONCOMPACT, w, m

    def describe(self) -> dict:
        return {
            "X": [str(c) for c in self.x],
            "dim_levi": self.dim_levi,
            "dim_u": self.dim_u,
            "u_compact": self.u_compact.total(),
            "u_noncompact": self.u_noncompact.total(),
            "S": self.S,
            "rho_u": [str(c) for c in self.rho_u],
        }


def build_parabolic(base: RootDatum, x: Vec) -> ThetaStableParabolic:
    """Partition the weights of the base datum by their sign against x."""
    if len(x) != base.ambient_dim:
        raise DatumError(
            f"defining element has {len(x)} coordinates, expected "
            f"{base.ambient_dim}"
        )
    if not base.in_torus(x):
        raise DatumError("defining element violates the torus constraints")
    levi = {PART_COMPACT: [], PART_NONCOMPACT: []}
    upper = {PART_COMPACT: [], PART_NONCOMPACT: []}
    signature = []
    for part, w, m in base.weight_entries():
        s = _sign(vdot(w, x))
        signature.append(s)
        if s == 0:
            levi[part].append((w, m))
        elif s > 0:
            upper[part].append((w, m))
    return ThetaStableParabolic(
        base,
        x,
        WeightMultiset.of(levi[PART_COMPACT]),
        WeightMultiset.of(levi[PART_NONCOMPACT]),
        WeightMultiset.of(upper[PART_COMPACT]),
        WeightMultiset.of(upper[PART_NONCOMPACT]),
        tuple(signature),
    )


# ---------------------------------------------------------------------------
# enumeration over arrangement faces


def _torus_basis(base: RootDatum) -> list[Vec]:
    if base.t_constraints:
        return nullspace(list(base.t_constraints))
    basis = []
    for i in range(base.ambient_dim):
        e = [Fraction(0)] * base.ambient_dim
        e[i] = Fraction(1)
        basis.append(tuple(e))
    return basis


def _signed_system_feasible(
    normals: Sequence[Vec], signs: Sequence[int], extra_nonneg: Sequence[Vec]
) -> Vec | None:
    """A point y with sign(n_i . y) = signs_i and r . y >= 0 for the extras.

    Strictness is encoded as |n . y| >= 1, which is harmless up to scaling.
    Returns the point or None.
    """
    if not normals and not extra_nonneg:
        raise DatumError("feasibility query without constraints")
    k = len(normals[0]) if normals else len(extra_nonneg[0])
    rows: list[Vec] = []
    rhs: list[Fraction] = []
    n_surplus = sum(1 for s in signs if s != 0) + len(extra_nonneg)
    surplus_at = 0

    def emit(n: Vec, b: Fraction, surplus: bool) -> None:
        nonlocal surplus_at
        row = list(n) + [-c for c in n] + [Fraction(0)] * n_surplus
        if surplus:
            row[2 * k + surplus_at] = Fraction(-1)
            surplus_at += 1
        rows.append(tuple(row))
        rhs.append(b)

    for n, s in zip(normals, signs):
        if s == 0:
            emit(n, Fraction(0), surplus=False)
        elif s > 0:
            emit(n, Fraction(1), surplus=True)
        else:
            emit(vneg(n), Fraction(1), surplus=True)
    for r in extra_nonneg:
        emit(r, Fraction(0), surplus=True)
    sol, _ = simplex_feasible(rows, rhs)
    if sol is None:
        return None
    return tuple(sol[i] - sol[k + i] for i in range(k))


def enumerate_parabolics(
    base: RootDatum,
    dominant_only: bool = False,
    max_rank: int = DEFAULT_MAX_RANK,
) -> list[ThetaStableParabolic]:
    """One parabolic per face of the arrangement {w . X = 0}.

    With dominant_only the defining element is confined to the closed
    dominant chamber of the lexicographic positive system of Delta(k,t),
    which picks K-conjugacy representatives.  Output order is the
    canonical signature order, so runs are reproducible.
    """
    if base.dim_t > max_rank:
        raise UnsupportedQuery(
            f"rank {base.dim_t} exceeds the enumeration bound {max_rank}"
        )
    tbasis = _torus_basis(base)

    def restrict(w: Vec) -> Vec:
        return tuple(vdot(w, b) for b in tbasis)

    normals: list[Vec] = []
    seen = set()
    for _, w, _ in base.weight_entries():
        if is_zero_vec(w):
            continue
        n = primitive_direction(restrict(w))
        if n not in seen:
            seen.add(n)
            normals.append(n)
    normals.sort()

    dominance: list[Vec] = []
    if dominant_only:
        for w, _ in base.compact:
            if lex_positive(w):
                dominance.append(restrict(w))

    # incremental sign-vector extension; each kept prefix carries a witness
    frontier: list[tuple[tuple[int, ...], Vec]] = [
        ((), vzero(len(tbasis)))
    ]
    for j, n in enumerate(normals):
        nxt: list[tuple[tuple[int, ...], Vec]] = []
        for signs, y in frontier:
            inherited = _sign(vdot(n, y))
            for s in (-1, 0, 1):
                if s == inherited:
                    nxt.append((signs + (s,), y))
                    continue
                y2 = _signed_system_feasible(
                    normals[: j + 1], signs + (s,), dominance
                )
                if y2 is not None:
                    nxt.append((signs + (s,), y2))
        frontier = nxt

    out = []
    for _, y in frontier:
        x = vzero(base.ambient_dim)
        for c, b in zip(y, tbasis):
            x = vadd(x, vscale(c, b))
        out.append(build_parabolic(base, x))
    out.sort(key=lambda q: q.signature)
    return out


# ---------------------------------------------------------------------------
# parameter ranges


@dataclass(frozen=True)
class OrbitParameter:
    """Character parameter for l, as a torus functional.

    Two bookkeeping conventions coexist: 'orbit' carries the infinitesimal
    character of the underlying coadjoint orbit, 'aq' the module parameter;
    they differ by rho(u).
    """

    coords: Vec
    convention: str

    def __post_init__(self) -> None:
        if self.convention not in ("orbit", "aq"):
            raise DatumError(f"unknown parameter convention {self.convention!r}")

    def as_orbit(self, q: ThetaStableParabolic) -> Vec:
        if self.convention == "orbit":
            return self.coords
        return vadd(self.coords, q.rho_u)

    def as_aq(self, q: ThetaStableParabolic) -> Vec:
        if self.convention == "aq":
            return self.coords
        return vsub(self.coords, q.rho_u)


def _check_parameter(q: ThetaStableParabolic, lam: Vec) -> None:
    if len(lam) != q.base.ambient_dim:
        raise DatumError("parameter has the wrong dimension")
    for c in q.base.t_constraints:
        if vdot(c, lam) != 0:
            raise DatumError("parameter not orthogonal to the torus constraints")
    for _, w, _ in q.levi_weights():
        if not is_zero_vec(w) and vdot(lam, w) != 0:
            raise DatumError("parameter must vanish on the Levi roots")


def _rho_levi(q: ThetaStableParabolic) -> Vec:
    # half sum of the lexicographically positive Levi roots; the good-range
    # answer is independent of this choice for parameters killing Delta(l)
    out = vzero(q.base.ambient_dim)
    for _, w, m in q.levi_weights():
        if lex_positive(w):
            out = vadd(out, vscale(m, w))
    return vscale(Fraction(1, 2), out)


def good_range(q: ThetaStableParabolic, lam: OrbitParameter) -> bool:
    """Strict positivity of <lambda + rho_l, alpha> on Delta(u).

    Only defined when t is a full Cartan subalgebra of g (equal rank);
    otherwise the condition lives on a bigger Cartan that this model does
    not carry, and we refuse rather than guess.
    """
    if not q.base.equal_rank:
        raise UnsupportedQuery(
            "good range needs an equal-rank base; the fundamental Cartan "
            "is larger than t here"
        )
    lam_orbit = lam.as_orbit(q)
    _check_parameter(q, lam_orbit)
    shifted = vadd(lam_orbit, _rho_levi(q))
    return all(
        vdot(shifted, w) > 0 for _, w, _ in q.u_weights()
    )


def weakly_fair(q: ThetaStableParabolic, lam: OrbitParameter) -> bool:
    """Weak positivity of <lambda_aq + rho(u), alpha> on Delta(u)."""
    if not q.base.equal_rank:
        raise UnsupportedQuery(
            "weakly fair range needs an equal-rank base"
        )
    lam_aq = lam.as_aq(q)
    _check_parameter(q, lam_aq)
    shifted = vadd(lam_aq, q.rho_u)
    return all(
        vdot(shifted, w) >= 0 for _, w, _ in q.u_weights()
    )


# ---------------------------------------------------------------------------
# symmetric type


def is_symmetric_type(q: ThetaStableParabolic) -> bool:
    """Does some X' pair to 0 on Delta(l) and to 1 on all of Delta(u)?

    If so, the period-two inner automorphism attached to X' has fixed
    algebra l, so l arises from a symmetric pair.
    """
    rows: list[Vec] = []
    rhs: list[Fraction] = []
    for _, w, _ in q.levi_weights():
        if not is_zero_vec(w):
            rows.append(w)
            rhs.append(Fraction(0))
    for _, w, _ in q.u_weights():
        rows.append(w)
        rhs.append(Fraction(1))
    for c in q.base.t_constraints:
        rows.append(c)
        rhs.append(Fraction(0))
    if not rows:
        return True
    return solve_linear(rows, rhs) is not None


def is_virtually_symmetric_type(q: ThetaStableParabolic) -> bool:
    """Can q be enlarged to a symmetric-type parabolic by moving only
    compact weights into the Levi part?

    Searches coarsenings that zero out whole compact hyperplanes while
    keeping every noncompact sign; any feasible symmetric coarsening wins.
    """
    if is_symmetric_type(q):
        return True
    tbasis = _torus_basis(q.base)

    def restrict(w: Vec) -> Vec:
        return tuple(vdot(w, b) for b in tbasis)

    # compact hyperplane directions currently split by q
    comp_dirs: list[Vec] = []
    seen = set()
    for w, _ in q.u_compact:
        d = primitive_direction(restrict(w))
        if d not in seen:
            seen.add(d)
            comp_dirs.append(d)
    comp_dirs.sort()

    entries = list(q.base.weight_entries())
    for r in range(1, len(comp_dirs) + 1):
        for zeroed in itertools.combinations(comp_dirs, r):
            zset = set(zeroed)
            normals: list[Vec] = []
            signs: list[int] = []
            target_sig: list[int] = []
            for (part, w, _), s in zip(entries, q.signature):
                if is_zero_vec(w):
                    target_sig.append(0)
                    continue
                d = primitive_direction(restrict(w))
                ns = 0 if (part == PART_COMPACT and d in zset) else s
                normals.append(restrict(w))
                signs.append(ns)
                target_sig.append(ns)
            y = _signed_system_feasible(normals, signs, [])
            if y is None:
                continue
            x = vzero(q.base.ambient_dim)
            for c, b in zip(y, tbasis):
                x = vadd(x, vscale(c, b))
            coarser = build_parabolic(q.base, x)
            if is_symmetric_type(coarser):
                return True
    return False
