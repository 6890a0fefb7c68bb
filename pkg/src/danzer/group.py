"""The icosahedral reflection group of order 120, built from three mirrors.

The generators are the explicit golden-entry matrices

    R1 = diag(-1, 1, 1)
    R2 = (1/2) [[1, -s, -t], [-s, t, 1], [-t, 1, s]]
    R3 = diag(1, 1, -1)

with t = tau, s = sigma.  They satisfy

    R1^2 = R2^2 = R3^2 = (R1 R3)^2 = (R1 R2)^3 = (R2 R3)^5 = 1

and close, under multiplication, into exactly 120 orthogonal matrices
(60 rotations and 60 mirror elements).  Orbits of the three weight
points give the icosahedron (12), icosidodecahedron (30) and
dodecahedron (20) vertex configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .geometry import GMat3, GVec3, gm, gv
from .golden import HALF, ONE, SIGMA, TAU, Golden


def generators() -> Tuple[GMat3, GMat3, GMat3]:
    r1 = GMat3.diagonal(-ONE, ONE, ONE)
    r2 = gm(
        (
            (HALF, -HALF * SIGMA, -HALF * TAU),
            (-HALF * SIGMA, HALF * TAU, HALF),
            (-HALF * TAU, HALF, HALF * SIGMA),
        )
    )
    r3 = GMat3.diagonal(ONE, ONE, -ONE)
    return (r1, r2, r3)


@dataclass(frozen=True)
class GroupElement:
    mat: GMat3
    word: Tuple[int, ...]  # generator indices of a shortest word found by BFS


@lru_cache(maxsize=None)
def generate_group() -> Tuple[GroupElement, ...]:
    """Breadth-first closure of the generators; exactly 120 elements."""
    gens = generators()
    seen: Dict[GMat3, Tuple[int, ...]] = {GMat3.identity(): ()}
    frontier = [GMat3.identity()]
    while frontier:
        new_frontier = []
        for mat in frontier:
            word = seen[mat]
            for idx, g in enumerate(gens):
                prod = mat @ g
                if prod not in seen:
                    seen[prod] = word + (idx + 1,)
                    new_frontier.append(prod)
        frontier = new_frontier
    if len(seen) != 120:
        raise RuntimeError(
            f"group closure produced {len(seen)} elements, expected 120; "
            "generator data is corrupted"
        )
    elements = sorted(seen.items(), key=lambda kv: (len(kv[1]), kv[1]))
    return tuple(GroupElement(mat, word) for mat, word in elements)


def matrices() -> Tuple[GMat3, ...]:
    return tuple(e.mat for e in generate_group())


def rotations() -> Tuple[GMat3, ...]:
    return tuple(m for m in matrices() if m.det() == ONE)


def contains(mat: GMat3) -> bool:
    return any(mat == e.mat for e in generate_group())


@dataclass(frozen=True)
class RelationCheck:
    name: str
    holds: bool


def verify_coxeter_relations() -> List[RelationCheck]:
    """Check the defining mirror relations exactly, plus the order-5 sharpness."""
    r1, r2, r3 = generators()
    ident = GMat3.identity()

    def power(m: GMat3, n: int) -> GMat3:
        out = ident
        for _ in range(n):
            out = out @ m
        return out

    checks = [
        RelationCheck("R1^2 = 1", power(r1, 2) == ident),
        RelationCheck("R2^2 = 1", power(r2, 2) == ident),
        RelationCheck("R3^2 = 1", power(r3, 2) == ident),
        RelationCheck("(R1 R3)^2 = 1", power(r1 @ r3, 2) == ident),
        RelationCheck("(R1 R2)^3 = 1", power(r1 @ r2, 3) == ident),
        RelationCheck("(R2 R3)^5 = 1", power(r2 @ r3, 5) == ident),
        RelationCheck("(R2 R3)^1 != 1", (r2 @ r3) != ident),
    ]
    return checks


def coxeter_element() -> GMat3:
    r1, r2, r3 = generators()
    return r1 @ r2 @ r3


def coxeter_char_poly() -> Tuple[Golden, Golden, Golden, Golden]:
    """Characteristic polynomial coefficients of R1 R2 R3 (leading first)."""
    return coxeter_element().char_poly()


def orbit(p: GVec3) -> frozenset:
    """Deduplicated exact orbit {g p : g in the group}."""
    return frozenset(m @ p for m in matrices())


def sorted_orbit(p: GVec3) -> Tuple[GVec3, ...]:
    return tuple(sorted(orbit(p), key=lambda v: v.sort_key()))


def stabilizer(p: GVec3) -> Tuple[GMat3, ...]:
    return tuple(m for m in matrices() if m @ p == p)


def weight_points() -> Tuple[GVec3, GVec3, GVec3]:
    """Representative points on the 5-, 2- and 3-fold axes (halved coordinates).

    These are the three vertices of the fundamental tetrahedron other than
    the origin; their orbits have sizes 12, 30 and 20.
    """
    five = gv(HALF, HALF * TAU, 0)
    two = gv(0, HALF * TAU, 0)
    three = gv(0, HALF * TAU, -HALF * SIGMA)
    return (five, two, three)


@lru_cache(maxsize=None)
def axis_directions() -> Tuple[GVec3, ...]:
    """All 62 symmetry-axis directions: 12 five-fold, 30 two-fold, 20 three-fold."""
    five, _, three = weight_points()
    two = gv(0, ONE, 0)
    dirs: List[GVec3] = []
    for seed in (five, two, three):
        dirs.extend(sorted_orbit(seed))
    if len(dirs) != 62:
        raise RuntimeError("axis orbit sizes are wrong")
    return tuple(dirs)
