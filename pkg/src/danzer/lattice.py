"""The D6 root lattice, its split into two invariant 3-spaces, and the
integer-pair parametrization of the vectors that project onto icosahedral
polyhedra.

Vectors are stored as rational coordinates in the orthonormal l-basis.
The basis matrix carries an overall factor 1/sqrt(2(2+tau)) that is never
materialized: ``project`` returns components in units of that factor
(their squared norms pick up ``PROJ_NORM2``), which keeps every stored
coordinate inside the golden field.  In that convention the parallel
projection of the pair-(m1, m2) family is exactly ``scale_golden(pair)``
times the halved seed coordinates used throughout the tile modules.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

from .geometry import GVec3, gv
from .golden import Golden, HALF, ONE, SIGMA, TAU, ZERO, fibonacci

Rational = Fraction


def _fr(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class D6Vector:
    """A 6D vector as rational coordinates in the orthonormal l-basis."""

    coords: Tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]

    @classmethod
    def of(cls, *coords) -> "D6Vector":
        if len(coords) != 6:
            raise ValueError("need 6 coordinates")
        return cls(tuple(_fr(c) for c in coords))

    @classmethod
    def zero(cls) -> "D6Vector":
        return cls.of(0, 0, 0, 0, 0, 0)

    def __add__(self, other: "D6Vector") -> "D6Vector":
        return D6Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "D6Vector") -> "D6Vector":
        return D6Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "D6Vector":
        return D6Vector(tuple(-a for a in self.coords))

    def __rmul__(self, s) -> "D6Vector":
        s = _fr(s)
        return D6Vector(tuple(s * a for a in self.coords))

    def dot(self, other: "D6Vector") -> Fraction:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def in_root_lattice(self) -> bool:
        """Integer coordinates with even sum."""
        return self.is_integral() and sum(self.coords) % 2 == 0

    def in_weight_lattice(self) -> bool:
        """All coordinates integral, or all half-odd-integral."""
        if self.is_integral():
            return True
        return all(c.denominator == 2 for c in self.coords)


def basis_l(i: int) -> D6Vector:
    coords = [Fraction(0)] * 6
    coords[i - 1] = Fraction(1)
    return D6Vector(tuple(coords))


def simple_roots() -> Tuple[D6Vector, ...]:
    """alpha_i = l_i - l_{i+1} for i < 6 and alpha_6 = l_5 + l_6."""
    alphas = [basis_l(i) - basis_l(i + 1) for i in range(1, 6)]
    alphas.append(basis_l(5) + basis_l(6))
    return tuple(alphas)


def fundamental_weights() -> Tuple[D6Vector, ...]:
    l = [basis_l(i) for i in range(1, 7)]
    w1 = l[0]
    w2 = l[0] + l[1]
    w3 = w2 + l[2]
    w4 = w3 + l[3]
    w5 = HALF_F * (l[0] + l[1] + l[2] + l[3] + l[4] - l[5])
    w6 = HALF_F * (l[0] + l[1] + l[2] + l[3] + l[4] + l[5])
    return (w1, w2, w3, w4, w5, w6)


HALF_F = Fraction(1, 2)


def cartan_matrix() -> Tuple[Tuple[int, ...], ...]:
    """Gram matrix of the simple roots (exact, as integers)."""
    alphas = simple_roots()
    return tuple(
        tuple(int(a.dot(b)) for b in alphas) for a in alphas
    )


# Rows of the orthonormal basis matrix, times sqrt(2(2+tau)).  The first
# three components of row i are the parallel projection of l_i, the last
# three the perpendicular one.
@lru_cache(maxsize=None)
def _basis_rows() -> Tuple[Tuple[GVec3, GVec3], ...]:
    t = TAU
    rows = (
        ((1, t, 0), (t, -1, 0)),
        ((-1, t, 0), (-t, -1, 0)),
        ((0, 1, t), (0, t, -1)),
        ((0, 1, -t), (0, t, 1)),
        ((t, 0, 1), (-1, 0, t)),
        ((-t, 0, 1), (1, 0, t)),
    )
    return tuple((gv(*par), gv(*perp)) for par, perp in rows)


#: Squared scale of the suppressed basis prefactor: (1/sqrt(2(2+tau)))^2.
PROJ_NORM2 = (Golden(4) + Golden(0, 2)).inverse()  # 1/(4 + 2 tau) = (3 - tau)/10

#: Squared prefactor of the radial scale c(m1, m2): 2/(2+tau).
SCALE_PREFACTOR2 = Golden(2) * (Golden(2) + TAU).inverse()


def project(v: D6Vector) -> Tuple[GVec3, GVec3]:
    """Parallel and perpendicular components, in units of 1/sqrt(2(2+tau)).

    True lengths satisfy norm2(true) = PROJ_NORM2 * norm2(returned).
    """
    rows = _basis_rows()
    par = gv(0, 0, 0)
    perp = gv(0, 0, 0)
    for m, (rp, rq) in zip(v.coords, rows):
        if m:
            par = par + m * rp
            perp = perp + m * rq
    return (par, perp)


def reassemble(par: GVec3, perp: GVec3) -> D6Vector:
    """Invert ``project``: recover rational l-coordinates exactly."""
    rows = _basis_rows()
    norm = Golden(4) + Golden(0, 2)  # rows have squared length 2(2+tau)
    coords = []
    for rp, rq in rows:
        m = (par.dot(rp) + perp.dot(rq)) / norm
        if not m.is_rational():
            raise ValueError("components do not reassemble to a lattice vector")
        coords.append(m.a)
    return D6Vector(tuple(coords))


def decompose(v: D6Vector) -> Tuple[Tuple[Golden, Golden, Golden], Tuple[Golden, Golden, Golden]]:
    """Coefficients on the two weight triples (parallel, perpendicular).

    The perpendicular triple is the componentwise golden conjugate of the
    parallel one.  Both carry a common suppressed factor 1/sqrt(2+tau).
    """
    m1, m2, m3, m4, m5, m6 = (Golden(c) for c in v.coords)
    c1 = m1 - m2 + TAU * (m5 - m6)
    c2 = m2 - m3 + TAU * (m4 - m5)
    c3 = m5 + m6 + TAU * (m3 - m4)
    par = (c1, c2, c3)
    perp = tuple(c.conjugate() for c in par)
    return par, perp


def weight_triple_par() -> Tuple[GVec3, GVec3, GVec3]:
    """The three weight directions in the suppressed-factor convention.

    decompose/project satisfy par(v) = c1*w1 + c2*w2 + c3*w3 with these
    vectors (each carries the same 1/sqrt(2+tau) bookkeeping as decompose).
    """
    return (gv(1, TAU, 0), gv(0, 2 * TAU, 0), gv(0, TAU * TAU, 1))


@dataclass(frozen=True)
class EmbeddingReport:
    gram_par: Tuple[Tuple[Golden, ...], ...]
    gram_perp: Tuple[Tuple[Golden, ...], ...]
    generators_match: bool

    @property
    def ok(self) -> bool:
        t, s = TAU, SIGMA
        two, one, zero = Golden(2), ONE, ZERO
        expect_par = ((two, -one, zero), (-one, two, -t), (zero, -t, two))
        expect_perp = ((two, -one, zero), (-one, two, -s), (zero, -s, two))
        return (
            self.gram_par == expect_par
            and self.gram_perp == expect_perp
            and self.generators_match
        )


def h3_embedding_check() -> EmbeddingReport:
    """Build the embedded mirror-root triple and verify it both ways.

    The roots beta_i = (alpha_i + tau * alpha_i') live in 6D with golden
    coefficients; their Gram matrix (with the 1/(2+tau) normalization)
    must block-reproduce the golden half of the deformed Cartan matrix,
    and the reflections in their parallel projections must equal the
    three group generators exactly.  The conjugate triple gives the
    sigma block.
    """
    from . import group

    alphas = simple_roots()
    pairs = ((alphas[0], alphas[4]), (alphas[1], alphas[3]), (alphas[5], alphas[2]))

    def golden_coords(a: D6Vector, b: D6Vector, coef: Golden) -> Tuple[Golden, ...]:
        return tuple(
            Golden(x) + coef * Golden(y) for x, y in zip(a.coords, b.coords)
        )

    def gram(triple, norm: Golden):
        inv = norm.inverse()
        return tuple(
            tuple(sum((x * y for x, y in zip(u, v)), ZERO) * inv for v in triple)
            for u in triple
        )

    par_triple = [golden_coords(a, b, TAU) for a, b in pairs]
    perp_triple = [golden_coords(a, b, SIGMA) for a, b in pairs]
    gram_par = gram(par_triple, Golden(2) + TAU)
    gram_perp = gram(perp_triple, Golden(2) + SIGMA)

    # Reflections in the projected roots must reproduce the generators.
    from .geometry import reflection

    gens = group.generators()
    match = True
    for (a, b), gen in zip(pairs, gens):
        six = D6Vector(tuple(x for x in a.coords))  # rational part
        par_a, _ = project(a)
        par_b, _ = project(b)
        root_par = par_a + TAU * par_b
        match = match and reflection(root_par) == gen
    return EmbeddingReport(gram_par, gram_perp, match)


@dataclass(frozen=True)
class PairM:
    """An integer pair with even sum, the radial-scale parameter family."""

    m1: int
    m2: int

    def __post_init__(self) -> None:
        if (self.m1 + self.m2) % 2 != 0:
            raise ValueError(f"pair {(self.m1, self.m2)} must have even sum")

    @property
    def is_zero(self) -> bool:
        return self.m1 == 0 and self.m2 == 0

    @property
    def parity_class(self) -> str:
        return "both-even" if self.m1 % 2 == 0 else "both-odd"


def scale_golden(pair: PairM) -> Golden:
    """Golden part of the radial scale: m1 - m2 + 2 m2 tau.

    The full scale is sqrt(SCALE_PREFACTOR2) times this; only the golden
    part (and squares/ratios of the full scale) are ever needed.
    """
    return Golden(pair.m1 - pair.m2, 2 * pair.m2)


def inflate_pair(pair: PairM, n: int) -> PairM:
    """Rescale the pair by tau**n: linear in Fibonacci numbers, parity kept."""
    fn1 = fibonacci(n - 1)
    fn = fibonacci(n)
    m1 = pair.m1 * fn1 + (pair.m1 + 5 * pair.m2) * fn // 2
    m2 = pair.m2 * fn1 + (pair.m1 + pair.m2) * fn // 2
    return PairM(m1, m2)


class PolyhedronRow(enum.Enum):
    ICOSAHEDRON = "icosahedron"
    DODECAHEDRON = "dodecahedron"
    ICOSIDODECAHEDRON = "icosidodecahedron"
    TRUNCATED_ICOSAHEDRON = "truncated-icosahedron"
    SMALL_RHOMBICOSIDODECAHEDRON = "small-rhombicosidodecahedron"
    TRUNCATED_DODECAHEDRON = "truncated-dodecahedron"
    GREAT_RHOMBICOSIDODECAHEDRON = "great-rhombicosidodecahedron"

    @classmethod
    def from_name(cls, name: str) -> "PolyhedronRow":
        for row in cls:
            if row.value == name:
                return row
        raise ValueError(f"unknown polyhedron row {name!r}")


def _l_combo(coeffs: Sequence) -> D6Vector:
    return D6Vector(tuple(_fr(c) for c in coeffs))


def pair_vector_l_form(row: PolyhedronRow, pair: PairM) -> D6Vector:
    m1, m2 = pair.m1, pair.m2
    h = HALF_F
    R = PolyhedronRow
    if row is R.ICOSAHEDRON:
        return _l_combo((m1, m2, m2, m2, m2, -m2))
    if row is R.DODECAHEDRON:
        a, b = h * (m1 + 3 * m2), h * (m1 - m2)
        return _l_combo((a, a, a, b, b, b))
    if row is R.ICOSIDODECAHEDRON:
        a = m1 + m2
        return _l_combo((a, a, 2 * m2, 2 * m2, 0, 0))
    if row is R.TRUNCATED_ICOSAHEDRON:
        return _l_combo((2 * m1 + m2, m1 + 2 * m2, 3 * m2, 3 * m2, m2, -m2))
    if row is R.SMALL_RHOMBICOSIDODECAHEDRON:
        return _l_combo(
            (
                h * 3 * (m1 + m2),
                h * (m1 + 5 * m2),
                h * (m1 + 5 * m2),
                h * (m1 + m2),
                h * (m1 + m2),
                h * (m1 - 3 * m2),
            )
        )
    if row is R.TRUNCATED_DODECAHEDRON:
        return _l_combo(
            (
                h * (3 * m1 + 5 * m2),
                h * (3 * m1 + 5 * m2),
                h * (m1 + 7 * m2),
                h * (m1 + 3 * m2),
                h * (m1 - m2),
                h * (m1 - m2),
            )
        )
    if row is R.GREAT_RHOMBICOSIDODECAHEDRON:
        return _l_combo(
            (
                h * 5 * (m1 + m2),
                h * (3 * m1 + 7 * m2),
                h * (m1 + 9 * m2),
                h * (m1 + 5 * m2),
                h * (m1 + m2),
                h * (m1 - 3 * m2),
            )
        )
    raise ValueError(row)


_OMEGA_COMBOS: Dict[PolyhedronRow, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {
    # (weights multiplied by m1 - m2, weights multiplied by 2 m2), 1-based
    PolyhedronRow.ICOSAHEDRON: ((1,), (5,)),
    PolyhedronRow.DODECAHEDRON: ((6,), (3,)),
    PolyhedronRow.ICOSIDODECAHEDRON: ((2,), (4,)),
    PolyhedronRow.TRUNCATED_ICOSAHEDRON: ((1, 2), (4, 5)),
    PolyhedronRow.SMALL_RHOMBICOSIDODECAHEDRON: ((1, 6), (3, 5)),
    PolyhedronRow.TRUNCATED_DODECAHEDRON: ((2, 6), (3, 4)),
    PolyhedronRow.GREAT_RHOMBICOSIDODECAHEDRON: ((1, 2, 6), (3, 4, 5)),
}


def pair_vector_omega_form(row: PolyhedronRow, pair: PairM) -> D6Vector:
    weights = fundamental_weights()
    first, second = _OMEGA_COMBOS[row]
    v = D6Vector.zero()
    for i in first:
        v = v + (pair.m1 - pair.m2) * weights[i - 1]
    for i in second:
        v = v + (2 * pair.m2) * weights[i - 1]
    return v


def pair_vector(row: PolyhedronRow, pair: PairM) -> D6Vector:
    """The lattice vector for a catalog row; l-form and weight-form must agree."""
    lv = pair_vector_l_form(row, pair)
    wv = pair_vector_omega_form(row, pair)
    if lv != wv:
        raise RuntimeError(f"l-basis and weight-basis forms disagree for {row}")
    return lv


def seed_point(row: PolyhedronRow) -> GVec3:
    """Halved-coordinate seed whose group orbit is the row's vertex set.

    The projected pair vector equals scale_golden(pair) times twice this
    point in the suppressed-factor convention of ``project``.
    """
    t = TAU
    R = PolyhedronRow
    seeds = {
        R.ICOSAHEDRON: gv(HALF, HALF * t, 0),
        R.DODECAHEDRON: gv(0, HALF * t * t, HALF),
        R.ICOSIDODECAHEDRON: gv(0, t, 0),
        R.TRUNCATED_ICOSAHEDRON: gv(HALF, 3 * HALF * t, 0),
        R.SMALL_RHOMBICOSIDODECAHEDRON: gv(HALF, HALF * (ONE + 2 * t), HALF),
        R.TRUNCATED_DODECAHEDRON: gv(0, HALF * (ONE + 3 * t), HALF),
        R.GREAT_RHOMBICOSIDODECAHEDRON: gv(HALF, HALF * (ONE + 4 * t), HALF),
    }
    return seeds[row]
