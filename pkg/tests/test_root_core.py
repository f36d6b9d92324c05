from __future__ import annotations

import random
from fractions import Fraction

import pytest

from branchdec.root_core import (
    DatumError,
    RootDatum,
    WeightMultiset,
    as_fraction,
    build_root_datum,
    direct_sum,
    format_vector,
    in_span,
    independent_rows,
    lex_positive,
    nullspace,
    parse_vector,
    primitive_direction,
    project_onto_span,
    rank,
    rref,
    solve_linear,
    vadd,
    vdot,
    vec,
    vneg,
    vscale,
    vsub,
    vzero,
)

F = Fraction


def _rand_vec(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(F(rng.randint(-6, 6), rng.choice([1, 1, 2, 3])) for _ in range(n))


# ---------------------------------------------------------------------------
# scalars and vectors


def test_as_fraction_accepts_common_forms():
    assert as_fraction("3") == 3
    assert as_fraction("-1/2") == F(-1, 2)
    assert as_fraction(F(2, 4)) == F(1, 2)
    assert as_fraction(7) == 7
    with pytest.raises(DatumError):
        as_fraction("one")
    with pytest.raises(DatumError):
        as_fraction(0.5)


def test_vector_arithmetic():
    a = vec(1, "1/2", -2)
    b = vec(0, "3/2", 1)
    assert vadd(a, b) == vec(1, 2, -1)
    assert vsub(a, b) == vec(1, -1, -3)
    assert vneg(a) == vec(-1, "-1/2", 2)
    assert vscale(2, a) == vec(2, 1, -4)
    assert vdot(a, b) == F(3, 4) - 2
    assert vzero(3) == vec(0, 0, 0)


def test_parse_and_format_vector_round_trip():
    for text in ("3,-1,-1,-1", "1/2,-1/2,0", "0"):
        assert format_vector(parse_vector(text)) == text
    with pytest.raises(DatumError):
        parse_vector("")
    with pytest.raises(DatumError):
        parse_vector("1,2,x")
    with pytest.raises(DatumError):
        parse_vector("1,2", expect_dim=3)


def test_lex_positive():
    assert lex_positive(vec(0, 0, 1))
    assert not lex_positive(vec(0, -1, 5))
    assert not lex_positive(vzero(4))


def test_primitive_direction_canonicalises_lines():
    rng = random.Random(20260801)
    for _ in range(300):
        v = _rand_vec(rng, 4)
        p = primitive_direction(v)
        if all(x == 0 for x in v):
            assert p == v
            continue
        # same line, integer coprime entries, canonical sign
        assert lex_positive(p)
        assert all(x.denominator == 1 for x in p)
        scale = rng.choice([F(1, 3), F(5, 2), 2, -1, F(-7, 4)])
        assert primitive_direction(vscale(scale, v)) == p
    assert primitive_direction(vec("1/2", "-1/2")) == vec(1, -1)
    assert primitive_direction(vec(-2, 4)) == vec(1, -2)


# ---------------------------------------------------------------------------
# exact linear algebra


def test_rref_small_example():
    rows, pivots = rref([vec(1, 2, 3), vec(2, 4, 6), vec(0, 0, 1)])
    assert pivots == [0, 2]
    assert rows == [vec(1, 2, 0), vec(0, 0, 1)]


def test_rank_nullspace_dimension_formula():
    rng = random.Random(20260802)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        rows = [_rand_vec(rng, n) for _ in range(m)]
        r = rank(rows)
        null = nullspace(rows)
        assert r + len(null) == n
        for v in null:
            for row in rows:
                assert vdot(row, v) == 0
        assert rank(null) == len(null)


def test_solve_linear_by_substitution():
    rng = random.Random(20260803)
    consistent = inconsistent = 0
    for _ in range(200):
        n = rng.randint(1, 4)
        m = rng.randint(1, 5)
        rows = [_rand_vec(rng, n) for _ in range(m)]
        rhs = _rand_vec(rng, m)
        x = solve_linear(rows, rhs)
        if x is None:
            inconsistent += 1
            # no solution means appending rhs as a column raises the rank
            aug = [tuple(rows[i]) + (rhs[i],) for i in range(m)]
            assert rank(aug) > rank(rows)
        else:
            consistent += 1
            assert all(vdot(rows[i], x) == rhs[i] for i in range(m))
    assert consistent > 20 and inconsistent > 20


def test_span_and_projection():
    rows = [vec(1, 0, 1, 0), vec(0, 1, 0, 1)]
    assert in_span(vec(2, -3, 2, -3), rows)
    assert not in_span(vec(1, 0, 0, 0), rows)
    v = vec(1, 2, 3, 4)
    p = project_onto_span(v, rows)
    assert in_span(p, rows)
    for r in rows:
        assert vdot(vsub(v, p), r) == 0
    assert project_onto_span(p, rows) == p


def test_project_onto_span_random_idempotent():
    rng = random.Random(20260804)
    for _ in range(100):
        n = rng.randint(2, 5)
        rows = [_rand_vec(rng, n) for _ in range(rng.randint(1, 3))]
        if rank(rows) == 0:
            continue
        v = _rand_vec(rng, n)
        p = project_onto_span(v, rows)
        assert project_onto_span(p, rows) == p
        assert all(vdot(vsub(v, p), r) == 0 for r in rows)


def test_independent_rows_is_a_basis_of_the_row_span():
    rows = [vec(1, 1), vec(2, 2), vec(0, 1), vec(3, 0)]
    basis = independent_rows(rows)
    assert len(basis) == 2 == rank(rows)
    assert all(in_span(r, basis) for r in rows)


# ---------------------------------------------------------------------------
# weight multisets


def test_weight_multiset_merges_and_sorts():
    ws = WeightMultiset.of([(vec(1, 0), 1), (vec(0, 1), 2), (vec(1, 0), 1)])
    assert ws.mult(vec(1, 0)) == 2
    assert ws.total() == 4
    assert len(ws) == 2
    assert ws.support() == (vec(0, 1), vec(1, 0))


def test_weight_multiset_rejects_negative_mult():
    with pytest.raises(DatumError):
        WeightMultiset.of([(vec(1, 0), -1)])
    assert len(WeightMultiset.of([(vec(1, 0), 0)])) == 0


def test_weight_multiset_zero_handling():
    ws = WeightMultiset.of([(vec(0, 0), 3), (vec(1, -1), 1), (vec(-1, 1), 1)])
    assert ws.zero_mult() == 3
    assert ws.nonzero().total() == 2
    assert ws.is_negation_closed()
    assert not WeightMultiset.of([(vec(1, 0), 1)]).is_negation_closed()
    assert ws.weighted_sum() == vec(0, 0)


# ---------------------------------------------------------------------------
# builders

# name -> (dim_g, dim_k, dim_t, equal_rank)
BUILDER_TABLE = {
    "su(1,1)": (3, 1, 1, True),
    "su(2)": (3, 3, 1, True),
    "su(2,2)": (15, 7, 3, True),
    "su(4)": (15, 15, 3, True),
    "so(2,2)": (6, 2, 2, True),
    "so(4)": (6, 6, 2, True),
    "so(4,3)": (21, 9, 3, True),
    "so(4,4)": (28, 12, 4, True),
    "sp(2,R)": (10, 4, 2, True),
    "sp(1,1)": (10, 6, 2, True),
    "sp(2)": (10, 10, 2, True),
    "g2(R)": (14, 6, 2, True),
    "g2": (14, 14, 2, True),
    "sl(2,C)": (6, 3, 1, False),
    "sl(4,C)": (30, 15, 3, False),
    "so(5,C)": (20, 10, 2, False),
    "so(8,C)": (56, 28, 4, False),
    "sp(2,C)": (20, 10, 2, False),
    "g2(C)": (28, 14, 2, False),
}


@pytest.mark.parametrize("name", sorted(BUILDER_TABLE))
def test_builder_dimensions(name):
    dim_g, dim_k, dim_t, equal_rank = BUILDER_TABLE[name]
    d = build_root_datum(name)
    d.validate()
    assert d.name == name
    assert (d.dim_g, d.dim_k, d.dim_t, d.equal_rank) == (
        dim_g,
        dim_k,
        dim_t,
        equal_rank,
    )


def test_complex_builders_pair_k_and_p():
    # for a complexified algebra the compact and noncompact weights agree
    for name in ("sl(4,C)", "so(5,C)", "g2(C)"):
        d = build_root_datum(name)
        assert d.compact.entries == d.noncompact.nonzero().entries
        assert d.noncompact.zero_mult() == d.dim_t


def test_su22_weights():
    d = build_root_datum("su(2,2)")
    assert d.in_torus(vec(3, -1, -1, -1))
    assert not d.in_torus(vec(1, 0, 0, 0))
    assert d.compact.mult(vec(1, -1, 0, 0)) == 1
    assert d.compact.mult(vec(0, 0, 1, -1)) == 1
    assert d.noncompact.mult(vec(1, 0, -1, 0)) == 1
    assert d.compact.mult(vec(1, 0, -1, 0)) == 0
    assert d.compact.total() == 4 and d.noncompact.total() == 8


def test_so_odd_split_weights():
    d = build_root_datum("so(4,3)")
    # p is the 4x3 tensor of the two vector representations
    assert d.noncompact.mult(vec(1, 0, 0)) == 1  # e1 paired with the so(3) zero
    assert d.noncompact.mult(vec(0, 0, 1)) == 0  # so(4)'s vector rep has no zero
    assert d.noncompact.mult(vec(1, 0, -1)) == 1
    assert d.compact.mult(vec(1, 1, 0)) == 1
    assert d.compact.mult(vec(0, 0, 1)) == 1
    assert d.noncompact.zero_mult() == 0


def test_direct_sum_blocks():
    # su(1,1) lives in a single coordinate with weights +-2
    a = build_root_datum("su(1,1)")
    b = build_root_datum("sp(2,R)")
    assert a.ambient_dim == 1
    assert a.noncompact.mult(vec(2)) == 1
    s = direct_sum(a, b)
    assert s.name == "su(1,1)+sp(2,R)"
    assert s.ambient_dim == a.ambient_dim + b.ambient_dim == 3
    assert s.dim_g == a.dim_g + b.dim_g
    assert s.dim_t == a.dim_t + b.dim_t
    s.validate()
    # left-block weights are padded with zeros on the right
    assert s.noncompact.mult(vec(2, 0, 0)) == 1
    assert s.noncompact.mult(vec(0, 2, 0)) == 1
    assert s.compact.mult(vec(0, 1, -1)) == 1


def test_build_root_datum_parses_sum_expressions():
    d = build_root_datum("su(1,1)+su(1,1)")
    assert d.dim_g == 6 and d.dim_t == 2
    assert d.noncompact.mult(vec(2, 0)) == 1
    assert d.noncompact.mult(vec(0, -2)) == 1
    assert len(d.compact) == 0


def test_build_root_datum_rejects_unknown_names():
    for bad in ("e8", "su(1)", "so(1,0)", "sp(0,R)", ""):
        with pytest.raises(DatumError):
            build_root_datum(bad)


def test_round_trip_serialisation():
    for name in ("su(2,2)", "so(4,3)", "sl(2,C)", "g2(R)"):
        d = build_root_datum(name)
        again = RootDatum.from_dict(d.to_dict())
        assert again == d


def test_from_dict_validates():
    d = build_root_datum("su(2,2)").to_dict()
    d["dim_g"] = 16
    with pytest.raises(DatumError):
        RootDatum.from_dict(d)
    d2 = build_root_datum("su(2,2)").to_dict()
    del d2["compact"][0]
    with pytest.raises(DatumError):
        RootDatum.from_dict(d2)
