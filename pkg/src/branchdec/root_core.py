"""Exact rational vectors, small dense linear algebra, and root data.

Everything downstream works over Q.  Vectors are tuples of Fraction, weights
of the complexified isotropy representation are stored as multisets, and a
RootDatum bundles the torus description together with the compact and
noncompact weight multisets of a real reductive Lie algebra.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

Vec = tuple[Fraction, ...]

PART_COMPACT = "k"
PART_NONCOMPACT = "p"
PARTS = (PART_COMPACT, PART_NONCOMPACT)


class DatumError(ValueError):
    """Raised when root data are malformed or a family string is unknown."""


# ---------------------------------------------------------------------------
# scalars and vectors


def as_fraction(x) -> Fraction:
    """Coerce int, Fraction, or a 'p/q' string to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DatumError(f"bad rational literal {x!r}") from exc
    raise DatumError(f"cannot interpret {x!r} as a rational number")


def format_fraction(x: Fraction) -> str:
    return str(x)


def vec(*entries) -> Vec:
    return tuple(as_fraction(e) for e in entries)


def vec_from(entries: Iterable) -> Vec:
    return tuple(as_fraction(e) for e in entries)


def vzero(n: int) -> Vec:
    return (Fraction(0),) * n


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(c, a: Vec) -> Vec:
    c = as_fraction(c)
    return tuple(c * x for x in a)


def vdot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


def lex_positive(a: Vec) -> bool:
    """True if the first nonzero coordinate is positive (zero vector: False)."""
    for x in a:
        if x != 0:
            return x > 0
    return False


def primitive_direction(a: Vec) -> Vec:
    """Scale to coprime integer entries with lex-positive sign; 0 stays 0."""
    if is_zero_vec(a):
        return a
    denom_lcm = 1
    for x in a:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    if not lex_positive(tuple(Fraction(v) for v in ints)):
        ints = [-v for v in ints]
    return tuple(Fraction(v) for v in ints)


def parse_vector(text: str, expect_dim: int | None = None) -> Vec:
    """Parse a comma separated list of rationals, e.g. '3,-1,-1,-1' or '1/2,0'."""
    parts = [p for p in text.split(",")]
    if parts == [""]:
        raise DatumError("empty vector literal")
    v = tuple(as_fraction(p) for p in parts)
    if expect_dim is not None and len(v) != expect_dim:
        raise DatumError(f"expected {expect_dim} coordinates, got {len(v)}")
    return v


def format_vector(a: Vec) -> str:
    return ",".join(str(x) for x in a)


# ---------------------------------------------------------------------------
# exact linear algebra (rows are vectors, systems are small)


def rref(rows: Sequence[Vec]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows: Sequence[Vec]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Vec]) -> list[Vec]:
    """Basis of {x : row . x = 0 for every row}."""
    if not rows:
        raise DatumError("nullspace needs at least one row to fix the dimension")
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis: list[Vec] = []
    for fc in free_cols:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[fc]
        basis.append(tuple(x))
    return basis


def solve_linear(rows: Sequence[Vec], rhs: Sequence) -> Vec | None:
    """One solution x of row_i . x = rhs_i for all i, or None if inconsistent."""
    rhs = [as_fraction(b) for b in rhs]
    if len(rows) != len(rhs):
        raise DatumError("solve_linear: shape mismatch")
    if not rows:
        raise DatumError("solve_linear needs at least one row")
    ncols = len(rows[0])
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def in_span(v: Vec, rows: Sequence[Vec]) -> bool:
    base = [r for r in rows if not is_zero_vec(r)]
    return rank(base + [v]) == rank(base) if base else is_zero_vec(v)


def independent_rows(rows: Sequence[Vec]) -> list[Vec]:
    """Greedy maximal independent subset, preserving order."""
    picked: list[Vec] = []
    r = 0
    for row in rows:
        cand = picked + [row]
        if rank(cand) > r:
            picked = cand
            r += 1
    return picked


def project_onto_span(v: Vec, rows: Sequence[Vec]) -> Vec:
    """Orthogonal projection of v onto the span of the given rows."""
    basis = independent_rows([r for r in rows if not is_zero_vec(r)])
    if not basis:
        return vzero(len(v))
    gram = [tuple(vdot(bi, bj) for bj in basis) for bi in basis]
    rhs = [vdot(bi, v) for bi in basis]
    coeffs = solve_linear(gram, rhs)
    assert coeffs is not None  # Gram matrix of independent rows is invertible
    out = vzero(len(v))
    for c, b in zip(coeffs, basis):
        out = vadd(out, vscale(c, b))
    return out


# ---------------------------------------------------------------------------
# weight multisets


def _canonical_entries(entries: Iterable[tuple[Vec, int]]) -> tuple[tuple[Vec, int], ...]:
    merged: dict[Vec, int] = {}
    for w, m in entries:
        if m < 0:
            raise DatumError("negative multiplicity")
        if m == 0:
            continue
        merged[w] = merged.get(w, 0) + m
    return tuple(sorted(merged.items()))


@dataclass(frozen=True)
class WeightMultiset:
    """Finite multiset of rational weight vectors."""

    entries: tuple[tuple[Vec, int], ...]

    @staticmethod
    def of(entries: Iterable[tuple[Vec, int]]) -> "WeightMultiset":
        return WeightMultiset(_canonical_entries(entries))

    @staticmethod
    def from_vectors(vectors: Iterable[Vec]) -> "WeightMultiset":
        return WeightMultiset.of((v, 1) for v in vectors)

    def __iter__(self) -> Iterator[tuple[Vec, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def mult(self, w: Vec) -> int:
        for v, m in self.entries:
            if v == w:
                return m
        return 0

    def support(self) -> tuple[Vec, ...]:
        return tuple(w for w, _ in self.entries)

    def nonzero(self) -> "WeightMultiset":
        return WeightMultiset(tuple((w, m) for w, m in self.entries if not is_zero_vec(w)))

    def zero_mult(self) -> int:
        return sum(m for w, m in self.entries if is_zero_vec(w))

    def is_negation_closed(self) -> bool:
        return all(self.mult(vneg(w)) == m for w, m in self.entries)

    def weighted_sum(self) -> Vec:
        if not self.entries:
            raise DatumError("weighted_sum of an empty multiset has no dimension")
        out = vzero(len(self.entries[0][0]))
        for w, m in self.entries:
            out = vadd(out, vscale(m, w))
        return out


# ---------------------------------------------------------------------------
# root data


@dataclass(frozen=True)
class RootDatum:
    """Weights of ad(t) on a real reductive Lie algebra g = k + p.

    Coordinates live in an ambient Q^n; the torus t is the subspace cut out
    by t_constraints.  Weight vectors are stored orthogonal to the
    constraints so that the pairing weight(X) is the plain dot product.
    The compact part never contains zero weights; zero weights of p are kept
    explicitly since they decide whether t is a full Cartan subalgebra.
    """

    name: str
    ambient_dim: int
    t_constraints: tuple[Vec, ...]
    compact: WeightMultiset
    noncompact: WeightMultiset
    dim_g: int

    @property
    def dim_t(self) -> int:
        return self.ambient_dim - rank(list(self.t_constraints))

    @property
    def equal_rank(self) -> bool:
        # t is a Cartan of g exactly when nothing in p commutes with it
        return self.noncompact.zero_mult() == 0

    @property
    def dim_k(self) -> int:
        return self.dim_t + self.compact.total()

    def weight_entries(self) -> Iterator[tuple[str, Vec, int]]:
        for w, m in self.compact:
            yield PART_COMPACT, w, m
        for w, m in self.noncompact:
            yield PART_NONCOMPACT, w, m

    def part(self, tag: str) -> WeightMultiset:
        if tag == PART_COMPACT:
            return self.compact
        if tag == PART_NONCOMPACT:
            return self.noncompact
        raise DatumError(f"unknown part tag {tag!r}")

    def in_torus(self, x: Vec) -> bool:
        return len(x) == self.ambient_dim and all(
            vdot(c, x) == 0 for c in self.t_constraints
        )

    def validate(self) -> None:
        for c in self.t_constraints:
            if len(c) != self.ambient_dim:
                raise DatumError(f"{self.name}: constraint row of wrong length")
        for part, w, m in self.weight_entries():
            if len(w) != self.ambient_dim:
                raise DatumError(f"{self.name}: weight of wrong length in part {part}")
            for c in self.t_constraints:
                if vdot(c, w) != 0:
                    raise DatumError(
                        f"{self.name}: weight {format_vector(w)} not orthogonal "
                        "to the torus constraints"
                    )
        if self.compact.zero_mult() != 0:
            raise DatumError(f"{self.name}: zero weight in the compact part")
        if not self.compact.is_negation_closed():
            raise DatumError(f"{self.name}: compact part not closed under negation")
        if not self.noncompact.is_negation_closed():
            raise DatumError(f"{self.name}: noncompact part not closed under negation")
        expect = self.dim_t + self.compact.total() + self.noncompact.total()
        if expect != self.dim_g:
            raise DatumError(
                f"{self.name}: dim bookkeeping {expect} != declared {self.dim_g}"
            )

    # -- serialisation ------------------------------------------------------

    def to_dict(self) -> dict:
        def ser_ws(ws: WeightMultiset) -> list[dict]:
            return [
                {"weight": [str(x) for x in w], "mult": m} for w, m in ws.entries
            ]

        return {
            "name": self.name,
            "ambient_dim": self.ambient_dim,
            "t_constraints": [[str(x) for x in c] for c in self.t_constraints],
            "compact": ser_ws(self.compact),
            "noncompact": ser_ws(self.noncompact),
            "dim_g": self.dim_g,
        }

    @staticmethod
    def from_dict(d: dict) -> "RootDatum":
        try:
            name = d["name"]
            ambient = int(d["ambient_dim"])
            cons = tuple(vec_from(c) for c in d["t_constraints"])
            compact = WeightMultiset.of(
                (vec_from(e["weight"]), int(e["mult"])) for e in d["compact"]
            )
            noncompact = WeightMultiset.of(
                (vec_from(e["weight"]), int(e["mult"])) for e in d["noncompact"]
            )
            dim_g = int(d["dim_g"])
        except (KeyError, TypeError) as exc:
            raise DatumError(f"malformed root datum record: {exc}") from exc
        datum = RootDatum(name, ambient, cons, compact, noncompact, dim_g)
        datum.validate()
        return datum


# ---------------------------------------------------------------------------
# families


def _su_datum(p: int, q: int) -> RootDatum:
    n = p + q
    name = f"su({p})" if q == 0 else f"su({p},{q})"
    if n < 2:
        raise DatumError(f"{name}: need p+q >= 2")
    if n == 2:
        # one coordinate t = diag(t, -t); the single root pairs as 2t
        root = vec(2)
        ws = WeightMultiset.of([(root, 1), (vneg(root), 1)])
        empty = WeightMultiset.of([])
        if q == 0:
            return RootDatum(name, 1, (), ws, empty, 3)
        return RootDatum(name, 1, (), empty, ws, 3)
    cons = (vec(*([1] * n)),)
    comp: list[Vec] = []
    noncomp: list[Vec] = []
    for i, j in itertools.permutations(range(n), 2):
        w = [Fraction(0)] * n
        w[i], w[j] = Fraction(1), Fraction(-1)
        same_block = (i < p) == (j < p)
        (comp if same_block else noncomp).append(tuple(w))
    return RootDatum(
        name,
        n,
        cons,
        WeightMultiset.from_vectors(comp),
        WeightMultiset.from_vectors(noncomp),
        n * n - 1,
    )


def _so_vector_weights(size: int, coords: list[int], ambient: int) -> list[Vec]:
    """Nonzero weights (with repetition) of the vector rep of so(size)."""
    out: list[Vec] = []
    for c in coords:
        for s in (1, -1):
            w = [Fraction(0)] * ambient
            w[c] = Fraction(s)
            out.append(tuple(w))
    return out


def _so_root_list(size: int, coords: list[int], ambient: int) -> list[Vec]:
    out: list[Vec] = []
    for a, b in itertools.combinations(coords, 2):
        for sa, sb in itertools.product((1, -1), repeat=2):
            w = [Fraction(0)] * ambient
            w[a], w[b] = Fraction(sa), Fraction(sb)
            out.append(tuple(w))
    if size % 2 == 1:
        out.extend(_so_vector_weights(size, coords, ambient))
    return out


def _so_datum(p: int, q: int) -> RootDatum:
    name = f"so({p})" if q == 0 else f"so({p},{q})"
    if p + q < 3:
        raise DatumError(f"{name}: need p+q >= 3")
    m, l = p // 2, q // 2
    ambient = m + l
    a_coords = list(range(m))
    b_coords = list(range(m, m + l))
    comp = _so_root_list(p, a_coords, ambient) + _so_root_list(q, b_coords, ambient)
    noncomp: list[tuple[Vec, int]] = []
    # p-part is the tensor product of the two vector representations
    a_ws = _so_vector_weights(p, a_coords, ambient)
    if p % 2 == 1:
        a_ws.append(vzero(ambient))
    b_ws = _so_vector_weights(q, b_coords, ambient)
    if q % 2 == 1:
        b_ws.append(vzero(ambient))
    for wa in a_ws:
        for wb in b_ws:
            noncomp.append((vadd(wa, wb), 1))
    n = p + q
    return RootDatum(
        name,
        ambient,
        (),
        WeightMultiset.from_vectors(comp),
        WeightMultiset.of(noncomp),
        n * (n - 1) // 2,
    )


def _sp_real_datum(n: int) -> RootDatum:
    # split symplectic sp(n, R), maximal compact u(n)
    if n < 1:
        raise DatumError("sp(n,R): need n >= 1")
    comp: list[Vec] = []
    noncomp: list[Vec] = []
    for i, j in itertools.permutations(range(n), 2):
        w = [Fraction(0)] * n
        w[i], w[j] = Fraction(1), Fraction(-1)
        comp.append(tuple(w))
    for i, j in itertools.combinations(range(n), 2):
        w = [Fraction(0)] * n
        w[i] = w[j] = Fraction(1)
        noncomp.append(tuple(w))
        noncomp.append(vneg(tuple(w)))
    for i in range(n):
        w = [Fraction(0)] * n
        w[i] = Fraction(2)
        noncomp.append(tuple(w))
        noncomp.append(vneg(tuple(w)))
    return RootDatum(
        f"sp({n},R)",
        n,
        (),
        WeightMultiset.from_vectors(comp),
        WeightMultiset.from_vectors(noncomp),
        2 * n * n + n,
    )


def _sp_c_roots(coords: list[int], ambient: int) -> list[Vec]:
    out: list[Vec] = []
    for a, b in itertools.combinations(coords, 2):
        for sa, sb in itertools.product((1, -1), repeat=2):
            w = [Fraction(0)] * ambient
            w[a], w[b] = Fraction(sa), Fraction(sb)
            out.append(tuple(w))
    for a in coords:
        for s in (2, -2):
            w = [Fraction(0)] * ambient
            w[a] = Fraction(s)
            out.append(tuple(w))
    return out


def _sp_pq_datum(p: int, q: int) -> RootDatum:
    name = f"sp({p})" if q == 0 else f"sp({p},{q})"
    n = p + q
    if n < 1:
        raise DatumError(f"{name}: need p+q >= 1")
    a_coords = list(range(p))
    b_coords = list(range(p, n))
    comp = _sp_c_roots(a_coords, n) + _sp_c_roots(b_coords, n)
    noncomp: list[Vec] = []
    for a in a_coords:
        for b in b_coords:
            for sa, sb in itertools.product((1, -1), repeat=2):
                w = [Fraction(0)] * n
                w[a], w[b] = Fraction(sa), Fraction(sb)
                noncomp.append(tuple(w))
    return RootDatum(
        name,
        n,
        (),
        WeightMultiset.from_vectors(comp),
        WeightMultiset.from_vectors(noncomp),
        n * (2 * n + 1),
    )


def _g2_roots() -> tuple[list[Vec], list[Vec]]:
    """(short, long) G2 roots in the sum-zero plane of Q^3."""
    short: list[Vec] = []
    for i, j in itertools.permutations(range(3), 2):
        w = [Fraction(0)] * 3
        w[i], w[j] = Fraction(1), Fraction(-1)
        short.append(tuple(w))
    long_: list[Vec] = []
    for i in range(3):
        w = [Fraction(-1)] * 3
        w[i] = Fraction(2)
        long_.append(tuple(w))
        long_.append(vneg(tuple(w)))
    return short, long_


def _g2_split_datum() -> RootDatum:
    # maximal compact su(2)+su(2): one short and one long root pair,
    # mutually orthogonal
    short, long_ = _g2_roots()
    comp = [vec(1, -1, 0), vec(-1, 1, 0), vec(-1, -1, 2), vec(1, 1, -2)]
    comp_set = set(comp)
    noncomp = [w for w in short + long_ if w not in comp_set]
    return RootDatum(
        "g2(R)",
        3,
        (vec(1, 1, 1),),
        WeightMultiset.from_vectors(comp),
        WeightMultiset.from_vectors(noncomp),
        14,
    )


def _g2_compact_datum() -> RootDatum:
    short, long_ = _g2_roots()
    return RootDatum(
        "g2",
        3,
        (vec(1, 1, 1),),
        WeightMultiset.from_vectors(short + long_),
        WeightMultiset.of([]),
        14,
    )


def _complex_root_list(family: str, r: int) -> tuple[int, tuple[Vec, ...], list[Vec]]:
    """(ambient_dim, constraints, roots) for the split Cartan type."""
    if family == "A":
        n = r + 1
        roots: list[Vec] = []
        for i, j in itertools.permutations(range(n), 2):
            w = [Fraction(0)] * n
            w[i], w[j] = Fraction(1), Fraction(-1)
            roots.append(tuple(w))
        return n, (vec(*([1] * n)),), roots
    if family == "B":
        return r, (), _so_root_list(2 * r + 1, list(range(r)), r)
    if family == "D":
        return r, (), _so_root_list(2 * r, list(range(r)), r)
    if family == "C":
        return r, (), _sp_c_roots(list(range(r)), r)
    if family == "G":
        short, long_ = _g2_roots()
        return 3, (vec(1, 1, 1),), short + long_
    raise DatumError(f"unknown Cartan family {family!r}")


def _complex_datum(name: str, family: str, r: int) -> RootDatum:
    """A complex simple algebra viewed as a real algebra, k its compact form.

    t is the compact Cartan; each root appears once in k and once in p, and
    p picks up a zero weight of multiplicity dim t.
    """
    ambient, cons, roots = _complex_root_list(family, r)
    dim_t = ambient - len(cons)
    noncomp = [(w, 1) for w in roots] + [(vzero(ambient), dim_t)]
    return RootDatum(
        name,
        ambient,
        cons,
        WeightMultiset.from_vectors(roots),
        WeightMultiset.of(noncomp),
        2 * (dim_t + len(roots)),
    )


def direct_sum(a: RootDatum, b: RootDatum, name: str | None = None) -> RootDatum:
    """Concatenate coordinates; weights of each factor are padded with zeros."""

    def pad_left(w: Vec) -> Vec:
        return w + vzero(b.ambient_dim)

    def pad_right(w: Vec) -> Vec:
        return vzero(a.ambient_dim) + w

    cons = tuple(pad_left(c) for c in a.t_constraints) + tuple(
        pad_right(c) for c in b.t_constraints
    )
    comp = WeightMultiset.of(
        [(pad_left(w), m) for w, m in a.compact]
        + [(pad_right(w), m) for w, m in b.compact]
    )
    noncomp = WeightMultiset.of(
        [(pad_left(w), m) for w, m in a.noncompact]
        + [(pad_right(w), m) for w, m in b.noncompact]
    )
    return RootDatum(
        name or f"{a.name}+{b.name}",
        a.ambient_dim + b.ambient_dim,
        cons,
        comp,
        noncomp,
        a.dim_g + b.dim_g,
    )


_TWO_ARG = re.compile(r"^(su|so|sp)\((\d+),(\d+)\)$")
_ONE_ARG = re.compile(r"^(su|so|sp)\((\d+)\)$")
_COMPLEX = re.compile(r"^(sl|so|sp)\((\d+),C\)$")


def build_root_datum(name: str) -> RootDatum:
    """Build the root datum for a family string.

    Supported: su(p,q), so(p,q), sp(n,R), sp(p,q), compact forms su(n),
    so(n), sp(n), g2, split g2(R), complex algebras sl(n,C), so(n,C),
    sp(n,C), g2(C), and '+'-joined direct sums of any of these.
    """
    name = name.strip()
    if "+" in name:
        parts = [build_root_datum(s) for s in name.split("+")]
        out = parts[0]
        for nxt in parts[1:]:
            out = direct_sum(out, nxt)
        return out

    m = _TWO_ARG.match(name)
    if m:
        fam, p, q = m.group(1), int(m.group(2)), int(m.group(3))
        if fam == "su":
            return _su_datum(p, q)
        if fam == "so":
            return _so_datum(p, q)
        return _sp_pq_datum(p, q)
    m = _ONE_ARG.match(name)
    if m:
        fam, n = m.group(1), int(m.group(2))
        if fam == "su":
            return _su_datum(n, 0)
        if fam == "so":
            return _so_datum(n, 0)
        return _sp_pq_datum(n, 0)
    m = _COMPLEX.match(name)
    if m:
        fam, n = m.group(1), int(m.group(2))
        if fam == "sl":
            if n < 2:
                raise DatumError(f"{name}: need n >= 2")
            return _complex_datum(name, "A", n - 1)
        if fam == "so":
            if n < 5:
                raise DatumError(f"{name}: need n >= 5")
            if n % 2:
                return _complex_datum(name, "B", n // 2)
            return _complex_datum(name, "D", n // 2)
        if n < 1:
            raise DatumError(f"{name}: need n >= 1")
        return _complex_datum(name, "C", n)
    m = re.match(r"^sp\((\d+),R\)$", name)
    if m:
        return _sp_real_datum(int(m.group(1)))
    if name == "g2(R)":
        return _g2_split_datum()
    if name == "g2":
        return _g2_compact_datum()
    if name == "g2(C)":
        return _complex_datum(name, "G", 2)
    raise DatumError(f"unknown algebra family {name!r}")
