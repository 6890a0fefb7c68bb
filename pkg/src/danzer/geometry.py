"""Exact 3D linear algebra over the golden field.

Vectors, matrices and rigid motions whose entries are ``Golden`` scalars.
Irrational lengths (sqrt(2+tau), sqrt 3, ...) are never materialized:
every comparison goes through squared norms, which stay in the field.
Orientation and containment predicates are therefore exact, not epsilon
approximations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple

from .golden import Golden, GoldenLike, ONE, ZERO


def gold(x: GoldenLike) -> Golden:
    return Golden.coerce(x)


@dataclass(frozen=True)
class GVec3:
    """A 3-vector with Golden components; equality and hashing are exact."""

    x: Golden
    y: Golden
    z: Golden

    def __iter__(self) -> Iterator[Golden]:
        return iter((self.x, self.y, self.z))

    def __add__(self, other: "GVec3") -> "GVec3":
        return GVec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "GVec3") -> "GVec3":
        return GVec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "GVec3":
        return GVec3(-self.x, -self.y, -self.z)

    def __rmul__(self, s: GoldenLike) -> "GVec3":
        s = gold(s)
        return GVec3(s * self.x, s * self.y, s * self.z)

    def __mul__(self, s: GoldenLike) -> "GVec3":
        return self.__rmul__(s)

    def dot(self, other: "GVec3") -> Golden:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "GVec3") -> "GVec3":
        return GVec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self) -> Golden:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not (self.x or self.y or self.z)

    def to_floats(self) -> Tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.z))

    def sort_key(self) -> tuple:
        """Deterministic total order key (exact value order per component)."""
        return (self.x, self.y, self.z)


def gv(x: GoldenLike, y: GoldenLike, z: GoldenLike) -> GVec3:
    return GVec3(gold(x), gold(y), gold(z))


ORIGIN = gv(0, 0, 0)


@dataclass(frozen=True)
class GMat3:
    """A 3x3 matrix over the golden field, row major."""

    rows: Tuple[Tuple[Golden, Golden, Golden], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[GoldenLike]]) -> "GMat3":
        return cls(tuple(tuple(gold(e) for e in row) for row in rows))

    @classmethod
    def identity(cls) -> "GMat3":
        return _IDENTITY

    @classmethod
    def diagonal(cls, d0: GoldenLike, d1: GoldenLike, d2: GoldenLike) -> "GMat3":
        z = ZERO
        return cls.from_rows(((d0, z, z), (z, d1, z), (z, z, d2)))

    def row(self, i: int) -> GVec3:
        return GVec3(*self.rows[i])

    def column(self, j: int) -> GVec3:
        return GVec3(self.rows[0][j], self.rows[1][j], self.rows[2][j])

    def transpose(self) -> "GMat3":
        r = self.rows
        return GMat3(tuple(tuple(r[i][j] for i in range(3)) for j in range(3)))

    def __neg__(self) -> "GMat3":
        return GMat3(tuple(tuple(-e for e in row) for row in self.rows))

    def __matmul__(self, other):
        if isinstance(other, GMat3):
            bt = other.transpose().rows
            return GMat3(
                tuple(
                    tuple(sum((row[k] * col[k] for k in range(3)), ZERO) for col in bt)
                    for row in self.rows
                )
            )
        if isinstance(other, GVec3):
            return GVec3(
                self.row(0).dot(other), self.row(1).dot(other), self.row(2).dot(other)
            )
        return NotImplemented

    def det(self) -> Golden:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def trace(self) -> Golden:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def principal_minor_sum(self) -> Golden:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return (e * i - f * h) + (a * i - c * g) + (a * e - b * d)

    def char_poly(self) -> Tuple[Golden, Golden, Golden, Golden]:
        """Coefficients (c3, c2, c1, c0) of det(x*I - M) = c3 x^3 + ... + c0."""
        return (ONE, -self.trace(), self.principal_minor_sum(), -self.det())

    def inverse(self) -> "GMat3":
        d = self.det()
        if not d:
            raise ZeroDivisionError("singular matrix")
        (a, b, c), (e, f, g), (h, i, j) = self.rows
        cof = (
            (f * j - g * i, c * i - b * j, b * g - c * f),
            (g * h - e * j, a * j - c * h, c * e - a * g),
            (e * i - f * h, b * h - a * i, a * f - b * e),
        )
        inv_d = d.inverse()
        return GMat3(tuple(tuple(inv_d * x for x in row) for row in cof))

    def is_orthogonal(self) -> bool:
        return self @ self.transpose() == _IDENTITY

    def to_floats(self) -> Tuple[Tuple[float, float, float], ...]:
        return tuple(tuple(float(e) for e in row) for row in self.rows)

    def sort_key(self) -> tuple:
        return tuple(e for row in self.rows for e in row)


def gm(rows: Sequence[Sequence[GoldenLike]]) -> GMat3:
    return GMat3.from_rows(rows)


_IDENTITY = GMat3(
    tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3))
)


def reflection(normal: GVec3) -> GMat3:
    """Reflection through the plane with the given (not necessarily unit) normal."""
    n2 = normal.norm2()
    if not n2:
        raise ValueError("zero normal")
    scale = Golden(2) / n2
    n = (normal.x, normal.y, normal.z)
    return GMat3(
        tuple(
            tuple(
                (ONE if i == j else ZERO) - scale * n[i] * n[j] for j in range(3)
            )
            for i in range(3)
        )
    )


@dataclass(frozen=True)
class Motion:
    """A rigid placement p -> rot @ p + tr with exactly orthogonal rot, det +-1.

    ``det(rot) = -1`` marks a mirror placement.
    """

    rot: GMat3
    tr: GVec3

    def __post_init__(self) -> None:
        if not self.rot.is_orthogonal():
            raise ValueError("rotation part must be orthogonal")
        d = self.rot.det()
        if d != ONE and d != -ONE:
            raise ValueError("rotation part must have determinant +1 or -1")

    @classmethod
    def identity(cls) -> "Motion":
        return cls(_IDENTITY, ORIGIN)

    @classmethod
    def rotation(cls, rot: GMat3) -> "Motion":
        return cls(rot, ORIGIN)

    def __call__(self, p: GVec3) -> GVec3:
        return self.rot @ p + self.tr

    def __matmul__(self, other: "Motion") -> "Motion":
        """Composition: (self @ other)(p) = self(other(p)); other acts first."""
        return Motion(self.rot @ other.rot, self.rot @ other.tr + self.tr)

    def invert(self) -> "Motion":
        rt = self.rot.transpose()
        return Motion(rt, -(rt @ self.tr))

    def det(self) -> Golden:
        return self.rot.det()

    def is_mirror(self) -> bool:
        return self.rot.det() == -ONE

    def sort_key(self) -> tuple:
        return self.rot.sort_key() + self.tr.sort_key()


def tetra_signed_volume(p0: GVec3, p1: GVec3, p2: GVec3, p3: GVec3) -> Golden:
    """(1/6) det(p1-p0, p2-p0, p3-p0), exact."""
    u, v, w = p1 - p0, p2 - p0, p3 - p0
    det = u.dot(v.cross(w))
    return Golden(Fraction(1, 6)) * det


def barycentric(p: GVec3, tet: Sequence[GVec3]) -> Tuple[Golden, Golden, Golden, Golden]:
    """Exact barycentric coordinates of p w.r.t. a nondegenerate tetrahedron."""
    v0, v1, v2, v3 = tet
    d = tetra_signed_volume(v0, v1, v2, v3)
    if not d:
        raise ValueError("degenerate tetrahedron")
    inv = d.inverse()
    b0 = tetra_signed_volume(p, v1, v2, v3) * inv
    b1 = tetra_signed_volume(v0, p, v2, v3) * inv
    b2 = tetra_signed_volume(v0, v1, p, v3) * inv
    b3 = tetra_signed_volume(v0, v1, v2, p) * inv
    return (b0, b1, b2, b3)


def point_in_tetrahedron(p: GVec3, tet: Sequence[GVec3]) -> bool:
    """Closed-cell containment: boundary counts as inside."""
    return all(c.sign() >= 0 for c in barycentric(p, tet))


def _tetra_edges(tet: Sequence[GVec3]) -> list:
    return [b - a for a, b in itertools.combinations(tet, 2)]


def _tetra_face_normals(tet: Sequence[GVec3]) -> list:
    out = []
    for skip in range(4):
        a, b, c = [tet[i] for i in range(4) if i != skip]
        out.append((b - a).cross(c - a))
    return out


def _separated_on_axis(axis: GVec3, ta: Sequence[GVec3], tb: Sequence[GVec3]) -> bool:
    da = [axis.dot(p) for p in ta]
    db = [axis.dot(p) for p in tb]
    return max(da) <= min(db) or max(db) <= min(da)


def tetrahedra_interiors_disjoint(ta: Sequence[GVec3], tb: Sequence[GVec3]) -> bool:
    """Exact separating-axis test over face normals and edge cross products.

    Returns True iff the two closed tetrahedra meet at most in boundary
    points (touching faces are fine, overlapping interiors are not).
    """
    axes = _tetra_face_normals(ta) + _tetra_face_normals(tb)
    for ea in _tetra_edges(ta):
        for eb in _tetra_edges(tb):
            axes.append(ea.cross(eb))
    for axis in axes:
        if axis.is_zero():
            continue
        if _separated_on_axis(axis, ta, tb):
            return True
    return False


def solve_congruence(src: Sequence[GVec3], dst: Sequence[GVec3]) -> Motion:
    """The unique Motion mapping the vertex set src onto dst.

    Vertices are matched by their multiset of squared edge lengths, which
    must be distinct per vertex (true for every ABCK tetrahedron); raises
    if the sets are not congruent.
    """
    if len(src) != 4 or len(dst) != 4:
        raise ValueError("expected tetrahedra (4 vertices each)")

    def edge_profile(pts):
        prof = []
        for i, p in enumerate(pts):
            dists = sorted(
                ((p - q).norm2() for j, q in enumerate(pts) if j != i),
                key=lambda g: (g.a, g.b),
            )
            prof.append(tuple(dists))
        return prof

    sp, dp = edge_profile(src), edge_profile(dst)
    if sorted(sp) != sorted(dp):
        raise ValueError("vertex sets are not congruent")
    if len(set(sp)) != 4:
        raise ValueError("ambiguous congruence: repeated vertex profiles")
    pairing = [dp.index(profile) for profile in sp]
    s0 = src[0]
    d0 = dst[pairing[0]]
    basis = GMat3.from_rows(
        tuple(tuple(src[i] - s0) for i in (1, 2, 3))
    ).transpose()
    images = GMat3.from_rows(
        tuple(tuple(dst[pairing[i]] - d0) for i in (1, 2, 3))
    ).transpose()
    rot = images @ basis.inverse()
    return Motion(rot, d0 - rot @ s0)
