"""Verdicts for restriction questions, composed from the other modules.

Each operation returns a Verdict: a boolean answer, the list of condition
labels known to share that answer, a re-checkable rational certificate,
and a one-line statement of the criterion that was evaluated.  Boolean
answers are data; operational failures raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cone_kernel import Cone, MeetResult, cone_meets_subspace, cones_meet
from .involution import (
    EmbeddingRecord,
    EmbeddingView,
    InvolutionData,
    InvolutionError,
    as_embedding_view,
    dim_gprime_cap_levi,
    dim_gprime_cap_q,
    ensure_valid,
    momentum_chamber,
    validate_embedding,
)
from .parabolic import (
    ThetaStableParabolic,
    UnsupportedQuery,
    is_symmetric_type,
    is_virtually_symmetric_type,
)
from .root_core import (
    Vec,
    is_zero_vec,
    lex_positive,
    vadd,
    vneg,
    vscale,
    vzero,
    project_onto_span,
)

QUESTIONS = ("deco", "admissible", "transitive", "rho", "symtype", "virtsym")

# condition labels sharing the deco answer, for any parameter in the
# weakly fair range
DECO_EQUIVALENTS = (
    "deco-some-weakly-fair",
    "deco-all-weakly-fair",
    "admissible-some-weakly-fair",
    "admissible-all-weakly-fair",
    "associated-variety-containment",
)

_SCOPE_NOTE = (
    "answer is uniform over nonzero modules attached to q with parameter "
    "in the weakly fair range; no specific parameter enters the test"
)


@dataclass(frozen=True)
class Verdict:
    question: str
    answer: bool
    equivalents: tuple[str, ...]
    witness: dict | None
    inputs: dict
    criterion: str
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "question": self.question,
            "answer": self.answer,
            "equivalents": list(self.equivalents),
            "witness": self.witness,
            "inputs": self.inputs,
            "criterion": self.criterion,
            "notes": list(self.notes),
        }


def _fmt_vec(v: Vec) -> list[str]:
    return [str(c) for c in v]


def _inputs(pair: object, q: ThetaStableParabolic) -> dict:
    return {
        "pair": getattr(pair, "pair_id", None),
        "base": q.base.name,
        "x": _fmt_vec(q.x),
    }


def _require_involution(pair: object, q: ThetaStableParabolic) -> InvolutionData:
    if not isinstance(pair, InvolutionData):
        raise UnsupportedQuery(
            "momentum-level tests need symmetric-pair data; this pair "
            "only carries an embedding record"
        )
    if pair.base != q.base:
        raise InvolutionError("parabolic and pair live over different data")
    return pair


def _verify_point(
    gens: list[Vec], result: MeetResult, subspace_rows: list[Vec] | None
) -> None:
    # substitution check: the claimed point really is a conic combination
    # and really lies in the claimed subspace
    assert result.point is not None and result.coefficients is not None
    total = vzero(len(result.point))
    for c, g in zip(result.coefficients, gens):
        assert c >= 0
        total = vadd(total, vscale(c, g))
    if subspace_rows is not None:
        assert total == project_onto_span(total, subspace_rows)
    assert not is_zero_vec(total)


def _meet_witness(result: MeetResult) -> dict:
    if result.meets:
        return {
            "kind": "intersection-point",
            "point": _fmt_vec(result.point),
            "cone_coefficients": [str(c) for c in result.coefficients],
        }
    return {"kind": "infeasibility-basis", "basis": list(result.basis)}


def _noncompact_cone(q: ThetaStableParabolic) -> tuple[Cone, list[Vec]]:
    gens = [w for w, _ in q.u_noncompact]
    return Cone.from_generators(gens, q.base.ambient_dim), gens


def discretely_decomposable(
    pair: InvolutionData,
    q: ThetaStableParabolic,
    *,
    validate: bool = True,
) -> Verdict:
    """Does the asymptotic cone of u cap p miss the split part of the torus?

    True means the restriction to the fixed-point subgroup splits discretely,
    with admissible multiplicities, for every weakly fair parameter.
    """
    inv = _require_involution(pair, q)
    if validate:
        ensure_valid(inv)
    cone, gens = _noncompact_cone(q)
    subspace = inv.t_minus_sigma_basis()
    result = cone_meets_subspace(cone, subspace, q.x)
    if result.meets:
        _verify_point(gens, result, subspace)
    notes = [_SCOPE_NOTE]
    if not gens:
        notes.append("u contains no noncompact weights; the cone is zero")
    if not subspace:
        notes.append(
            "the split torus part is zero; restriction to the fixed "
            "subgroup is automatically admissible"
        )
    return Verdict(
        question="deco",
        answer=not result.meets,
        equivalents=DECO_EQUIVALENTS,
        witness=_meet_witness(result),
        inputs=_inputs(pair, q),
        criterion=(
            "the closed cone spanned by the noncompact weights of u meets "
            "the -1 eigenspace of the involution on the torus only at 0"
        ),
        notes=tuple(notes),
    )


def admissible_sufficient(
    pair: InvolutionData,
    q: ThetaStableParabolic,
    *,
    validate: bool = True,
) -> Verdict:
    """Sufficient test: the cone of u cap p misses the momentum chamber.

    True guarantees admissible restriction (finite multiplicities and a
    Hilbert-sum decomposition).  False is inconclusive by this test alone,
    since the cone only bounds the true asymptotic support from above; for
    symmetric pairs the subspace test is decisive and is cross-referenced.
    """
    inv = _require_involution(pair, q)
    if validate:
        ensure_valid(inv)
    chamber = momentum_chamber(inv)
    cone, gens = _noncompact_cone(q)
    result = cones_meet(cone, chamber, q.x)
    if result.meets:
        _verify_point(gens, result, None)
    deco = discretely_decomposable(pair, q, validate=False)
    notes = [
        _SCOPE_NOTE,
        f"chamber test intersects: {str(result.meets).lower()}",
        f"full subspace test intersects: {str(not deco.answer).lower()}",
    ]
    if result.meets:
        notes.append(
            "inconclusive by this test alone; the bounding cone may "
            "overshoot the true asymptotic support"
        )
        notes.append(
            "decisive for symmetric pairs via the subspace test, which "
            f"reports discrete decomposability = {str(deco.answer).lower()}"
        )
    return Verdict(
        question="admissible",
        answer=not result.meets,
        equivalents=(),
        witness=_meet_witness(result),
        inputs=_inputs(pair, q),
        criterion=(
            "the closed cone spanned by the noncompact weights of u meets "
            "the dominant chamber of the restricted root system only at 0"
        ),
        notes=tuple(notes),
    )


def transitive_check(pair, q: ThetaStableParabolic) -> Verdict:
    """Is the subgroup orbit of the base point open in the flag manifold?

    The isotropy algebra there is g' cap l, so the orbit dimension is
    dim g' - dim(g' cap l), to be compared with the manifold dimension
    2 dim u.  Openness forces the span identity g' + q = g, reported
    alongside; for the catalogued families openness upgrades to a
    transitive action, which is what lets induced modules restrict.
    """
    view = as_embedding_view(pair)
    cap_q = dim_gprime_cap_q(view, q)
    cap_l = dim_gprime_cap_levi(view, q)
    orbit = view.dim_gprime - cap_l
    manifold = 2 * q.dim_u
    answer = orbit == manifold
    span_identity = (view.dim_gprime - cap_q) == (q.base.dim_g - q.dim_q)
    if answer:
        # openness implies the span identity; failure here means the cell
        # data is internally inconsistent
        assert span_identity
    notes = [
        f"orbit dimension {orbit}, flag manifold dimension {manifold}",
        "span identity dim g' - dim(g' cap q) == dim g - dim q: "
        f"{str(span_identity).lower()}",
    ]
    if answer:
        notes.append(f"induced parabolic dimension: {cap_q}")
    return Verdict(
        question="transitive",
        answer=answer,
        equivalents=(),
        witness={
            "kind": "dimension-count",
            "dim_gprime": view.dim_gprime,
            "dim_gprime_cap_q": cap_q,
            "dim_gprime_cap_levi": cap_l,
            "dim_g": q.base.dim_g,
            "dim_q": q.dim_q,
            "dim_u": q.dim_u,
        },
        inputs=_inputs(pair, q),
        criterion=(
            "dim g' - dim(g' cap l) equals 2 dim u, so the subgroup orbit "
            "of the base point in the flag manifold is open"
        ),
        notes=tuple(notes),
    )


def _induced_rho(view: EmbeddingView, q: ThetaStableParabolic) -> tuple[Vec, int]:
    """Half sum of restricted weights over the nilradical of the induced
    parabolic q' = g' cap q, with the u'-cell count.

    Cells fully inside Delta(q) carry q'; among those, a restricted-weight
    line belongs to the induced Levi when both signs are fully present,
    and to u' when only one sign is.  Partial two-sided lines leave q'
    ill-defined at this level of data and are reported as unsupported.
    """
    n = view.base.ambient_dim
    per_line: dict[Vec, list[int]] = {}
    # counts per canonical line: [plus_total, plus_in_q, minus_total, minus_in_q]
    for cell in view.cells:
        beta = cell.restricted
        if is_zero_vec(beta):
            continue  # centralises the small torus: always induced-Levi
        pos = lex_positive(beta)
        key = beta if pos else vneg(beta)
        rec = per_line.setdefault(key, [0, 0, 0, 0])
        off = 0 if pos else 2
        rec[off] += 1
        if all(q.in_q(w) for w in cell.members):
            rec[off + 1] += 1
    total = vzero(n)
    count = 0
    for key in sorted(per_line):
        plus_total, plus_q, minus_total, minus_q = per_line[key]
        if plus_q == 0 and minus_q == 0:
            continue
        if plus_q == plus_total and minus_q == minus_total:
            continue  # full line: induced Levi, cancels in the half sum
        if minus_q == 0:
            total = vadd(total, vscale(plus_q, key))
            count += plus_q
        elif plus_q == 0:
            total = vadd(total, vscale(minus_q, vneg(key)))
            count += minus_q
        else:
            raise UnsupportedQuery(
                "induced parabolic is ambiguous: a restricted weight line "
                "is only partially inside q on both sides"
            )
    return vscale(Fraction(1, 2), total), count


def rho_compat_check(
    pair,
    q: ThetaStableParabolic,
    *,
    validate: bool = True,
) -> Verdict:
    """Does rho of u restrict to rho of the induced u'?

    Requires the transitivity identity, so the induced parabolic
    q' = g' cap q is defined and its nilradical has a half sum to compare.
    """
    if validate:
        if isinstance(pair, InvolutionData):
            ensure_valid(pair)
        elif isinstance(pair, EmbeddingRecord):
            report = validate_embedding(pair)
            if not report.ok:
                names = ", ".join(c.name for c in report.failed())
                raise InvolutionError(
                    f"{pair.pair_id}: failed checks: {names}"
                )
    trans = transitive_check(pair, q)
    if not trans.answer:
        raise UnsupportedQuery(
            "rho comparison needs the transitivity identity; it fails here"
        )
    view = as_embedding_view(pair)
    rho_prime, uprime_cells = _induced_rho(view, q)
    restricted = (
        project_onto_span(q.rho_u, list(view.tprime_rows))
        if view.tprime_rows
        else vzero(view.base.ambient_dim)
    )
    answer = restricted == rho_prime
    return Verdict(
        question="rho",
        answer=answer,
        equivalents=(),
        witness={
            "kind": "rho-vectors",
            "rho_u_restricted": _fmt_vec(restricted),
            "rho_u_prime": _fmt_vec(rho_prime),
        },
        inputs=_inputs(pair, q),
        criterion=(
            "rho of u, restricted to the subalgebra torus, equals rho of "
            "the induced nilradical u'"
        ),
        notes=(f"u' carries {uprime_cells} restricted weights",),
    )


def symmetric_type_verdict(q: ThetaStableParabolic) -> Verdict:
    answer = is_symmetric_type(q)
    return Verdict(
        question="symtype",
        answer=answer,
        equivalents=(),
        witness=None,
        inputs={"base": q.base.name, "x": _fmt_vec(q.x)},
        criterion=(
            "some torus element pairs to 0 on the Levi weights and to 1 "
            "on the nilradical weights, so the Levi is a symmetric-pair "
            "fixed algebra"
        ),
        notes=("multiplicity-one restriction statements attach to this "
               "shape of Levi",),
    )


def virtually_symmetric_verdict(q: ThetaStableParabolic) -> Verdict:
    answer = is_virtually_symmetric_type(q)
    return Verdict(
        question="virtsym",
        answer=answer,
        equivalents=(),
        witness=None,
        inputs={"base": q.base.name, "x": _fmt_vec(q.x)},
        criterion=(
            "some enlargement of q obtained by absorbing compact walls "
            "into the Levi has symmetric type"
        ),
        notes=(),
    )


def answer_question(
    pair,
    q: ThetaStableParabolic,
    question: str,
    *,
    validate: bool = True,
) -> Verdict:
    """Dispatch by question keyword; the CLI entry point."""
    if question == "deco":
        return discretely_decomposable(pair, q, validate=validate)
    if question == "admissible":
        return admissible_sufficient(pair, q, validate=validate)
    if question == "transitive":
        return transitive_check(pair, q)
    if question == "rho":
        return rho_compat_check(pair, q, validate=validate)
    if question == "symtype":
        return symmetric_type_verdict(q)
    if question == "virtsym":
        return virtually_symmetric_verdict(q)
    raise ValueError(f"unknown question {question!r}")
