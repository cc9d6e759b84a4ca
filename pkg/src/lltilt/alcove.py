"""Type A affine alcove geometry in ρ-shifted GL_m coordinates.

A weight λ = (λ_1, ..., λ_m) at level l is handled through x = λ + ρ with
ρ = (m, m-1, ..., 1). The reflecting hyperplanes are x_i - x_j = k*l, and
the affine Weyl group acts by permutations and by l-multiples of sum-zero
integer vectors, so an orbit is pinned down by the multiset of x mod l and
the coordinate sum.

Coordinates are never normalised by the first-column ambiguity: the sum of
x records the size of the partition, which translation onto a neighbouring
block changes by the number of nodes added.
"""
from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple

from lltilt.laurent import ONE, ZERO, LaurentPoly

Coords = tuple[int, ...]


class ProjectionError(ValueError):
    """No point of the requested orbit lies in the facette closure."""


class Hyperplane(NamedTuple):
    """The locus x_i - x_j = k*level (1-based i < j)."""

    i: int
    j: int
    k: int


def rho(m: int) -> Coords:
    return tuple(range(m, 0, -1))


def shift(coords, m: int | None = None) -> Coords:
    """λ -> λ + ρ."""
    m = len(coords) if m is None else m
    return tuple(c + r for c, r in zip(coords, rho(m)))


def unshift(x: Coords) -> Coords:
    return tuple(c - r for c, r in zip(x, rho(len(x))))


@dataclass(frozen=True)
class Weight:
    coords: Coords
    l: int

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def m(self) -> int:
        return len(self.coords)

    @property
    def x(self) -> Coords:
        return shift(self.coords)

    @classmethod
    def from_x(cls, x, l: int) -> Weight:
        return cls(unshift(tuple(x)), l)

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "l": self.l, "coords": list(self.coords)}, separators=(",", ":"))


@dataclass(frozen=True)
class Orbit:
    """A W_l-orbit: residue multiset of x mod level plus the coordinate sum."""

    level: int
    residues: tuple[int, ...]
    total: int

    @classmethod
    def of(cls, x: Coords, level: int) -> Orbit:
        return cls(level, tuple(sorted(c % level for c in x)), sum(x))

    @property
    def m(self) -> int:
        return len(self.residues)

    def contains(self, y: Coords) -> bool:
        return sum(y) == self.total and tuple(sorted(c % self.level for c in y)) == self.residues

    def n_walls(self) -> int:
        return sum(math.comb(v, 2) for v in Counter(self.residues).values())

    def stabilizer_order(self) -> int:
        return math.prod(math.factorial(v) for v in Counter(self.residues).values())

    def is_regular(self) -> bool:
        return self.n_walls() == 0


# ---------------------------------------------------------------- walls

def walls_through(x: Coords, level: int) -> list[Hyperplane]:
    m = len(x)
    return [
        Hyperplane(i + 1, j + 1, (x[i] - x[j]) // level)
        for i in range(m)
        for j in range(i + 1, m)
        if (x[i] - x[j]) % level == 0
    ]


def n_walls(x: Coords, level: int) -> int:
    return len(walls_through(x, level))


def side(x: Coords, H: Hyperplane, level: int) -> int:
    """-1 below, 0 on, +1 above H."""
    d = x[H.i - 1] - x[H.j - 1] - H.k * level
    return (d > 0) - (d < 0)


def is_dominant(x: Coords) -> bool:
    """Strictly inside the dominant chamber (x strictly decreasing)."""
    return all(a > b for a, b in zip(x, x[1:]))


def is_regular(x: Coords, level: int) -> bool:
    return len({c % level for c in x}) == len(x)


# ---------------------------------------------------------------- facette search

def _interval(d: int, level: int, closed: bool) -> tuple[int, int]:
    """Allowed range for a pairwise difference, as inclusive integer bounds."""
    if d % level == 0:
        return (d, d) if closed else (d - level + 1, d + level - 1)
    lo = (d // level) * level
    return (lo, lo + level) if closed else (lo + 1, lo + level - 1)


def _search(ref: Coords, orbit: Orbit, closed: bool) -> list[Coords]:
    """Orbit points z related to ref pairwise.

    closed=True: z in the closure of the facette of ref.
    closed=False: ref in the closure of the facette of z.
    """
    L, m = orbit.level, len(ref)
    if orbit.m != m:
        raise ValueError("rank mismatch between weight and orbit")
    bounds = {
        (i, j): _interval(ref[i] - ref[j], L, closed) for i in range(m) for j in range(i + 1, m)
    }
    # |δ_i - δ_j| <= L and Σδ is fixed, so each δ_i sits within L of the mean
    mean = (orbit.total - sum(ref)) / m
    dlo, dhi = math.floor(mean) - L, math.ceil(mean) + L
    avail = Counter(orbit.residues)
    out: list[Coords] = []
    z: list[int] = []

    def rec(i: int, partial: int):
        if i == m:
            if partial == orbit.total:
                out.append(tuple(z))
            return
        rest = m - i - 1
        for v in range(ref[i] + dlo, ref[i] + dhi + 1):
            r = v % L
            if not avail[r]:
                continue
            ok = True
            for j in range(i):
                lo, hi = bounds[(j, i)]
                if not lo <= z[j] - v <= hi:
                    ok = False
                    break
            if not ok:
                continue
            lo_sum = partial + v + sum(ref[k] + dlo for k in range(i + 1, m))
            hi_sum = partial + v + sum(ref[k] + dhi for k in range(i + 1, m))
            if rest and not lo_sum <= orbit.total <= hi_sum:
                continue
            avail[r] -= 1
            z.append(v)
            rec(i + 1, partial + v)
            z.pop()
            avail[r] += 1

    rec(0, 0)
    return out


def project(x: Coords, orbit: Orbit) -> Coords:
    """The unique point of ``orbit`` in the closure of the facette of x."""
    hits = _search(tuple(x), orbit, closed=True)
    if not hits:
        raise ProjectionError(f"orbit {orbit} misses the facette closure of {x}")
    if len(hits) > 1:
        raise ProjectionError(f"orbit {orbit} meets the closure of {x} in {len(hits)} points")
    return hits[0]


def preimages(z: Coords, orbit: Orbit) -> list[Coords]:
    """All y in ``orbit`` whose facette closure contains z (so project(y) == z)."""
    return sorted(_search(tuple(z), orbit, closed=False), reverse=True)


def u_o_counts(y: Coords, z: Coords, level: int) -> tuple[int, int]:
    """(#walls through z with y below, #walls through z with y above)."""
    u = o = 0
    for H in walls_through(z, level):
        s = side(y, H, level)
        u += s < 0
        o += s > 0
    return u, o


def u_count(x: Coords, orbit: Orbit) -> int:
    return u_o_counts(x, project(x, orbit), orbit.level)[0]


def o_count(x: Coords, orbit: Orbit) -> int:
    return u_o_counts(x, project(x, orbit), orbit.level)[1]


def dominates(a: Coords, b: Coords) -> bool:
    """b <= a in the dominance (positive-root cone) order."""
    if sum(a) != sum(b):
        return False
    s = 0
    for p, q in zip(a, b):
        s += p - q
        if s < 0:
            return False
    return True


def orbit_points_below(orbit: Orbit, bound: Coords) -> list[Coords]:
    """Dominant orbit points y with y <= bound in dominance order, descending."""
    m, L = orbit.m, orbit.level
    partial_bound = [sum(bound[: k + 1]) for k in range(m)]
    if partial_bound[-1] != orbit.total:
        return []
    lowest = orbit.total - (partial_bound[-2] if m > 1 else 0)
    out: list[Coords] = []
    avail = Counter(orbit.residues)
    y: list[int] = []

    def rec(i: int, s: int):
        if i == m:
            if s == orbit.total:
                out.append(tuple(y))
            return
        hi = partial_bound[i] - s
        if i:
            hi = min(hi, y[-1] - 1)
        lo = lowest + (m - 1 - i) if i < m - 1 else orbit.total - s
        for v in range(hi, lo - 1, -1):
            if avail[v % L]:
                avail[v % L] -= 1
                y.append(v)
                rec(i + 1, s + v)
                y.pop()
                avail[v % L] += 1

    rec(0, 0)
    return sorted(out, reverse=True)


def reflect(x: Coords, H: Hyperplane, level: int) -> Coords:
    d = x[H.i - 1] - x[H.j - 1] - H.k * level
    y = list(x)
    y[H.i - 1] -= d
    y[H.j - 1] += d
    return tuple(y)


# ---------------------------------------------------------------- patterns

def _desc(x: Coords):
    return x


@dataclass
class Pattern:
    """Finitely supported map (ρ-shifted weight) -> Laurent polynomial."""

    level: int
    terms: dict[Coords, LaurentPoly] = field(default_factory=dict)

    @classmethod
    def single(cls, x: Coords, level: int, c: LaurentPoly = ONE) -> Pattern:
        return cls(level, {tuple(x): c})

    def add(self, x: Coords, c: LaurentPoly):
        x = tuple(x)
        new = self.terms.get(x, ZERO) + c
        if new.is_zero():
            self.terms.pop(x, None)
        else:
            self.terms[x] = new

    def __getitem__(self, x) -> LaurentPoly:
        return self.terms.get(tuple(x), ZERO)

    def items(self) -> list[tuple[Coords, LaurentPoly]]:
        return sorted(self.terms.items(), key=lambda kv: _desc(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def top(self) -> Coords | None:
        return self.items()[0][0] if self.terms else None

    @property
    def block(self) -> Orbit | None:
        return Orbit.of(self.top, self.level) if self.terms else None

    def copy(self) -> Pattern:
        return Pattern(self.level, dict(self.terms))

    def __add__(self, other: Pattern) -> Pattern:
        out = self.copy()
        for x, c in other.terms.items():
            out.add(x, c)
        return out

    def scale(self, c) -> Pattern:
        c = LaurentPoly.coerce(c)
        return Pattern(self.level, {x: v * c for x, v in self.terms.items() if not (v * c).is_zero()})

    def __sub__(self, other: Pattern) -> Pattern:
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return self.level == other.level and self.terms == other.terms

    def translate(self, c: int) -> Pattern:
        """Add c to every coordinate (the first-column ambiguity)."""
        return Pattern(self.level, {tuple(v + c for v in x): p for x, p in self.terms.items()})

    def at_one(self) -> dict[Coords, int]:
        return {x: c.at_one() for x, c in self.items()}

    def is_indecomposable(self) -> bool:
        items = self.items()
        return bool(items) and items[0][1] == ONE and all(c.in_qZq() for _, c in items[1:])

    def to_dict(self) -> dict:
        top = self.top
        blk = self.block
        return {
            "l": self.level,
            "m": len(top) if top else 0,
            "block": {"residues": list(blk.residues), "total": blk.total} if blk else None,
            "top": list(unshift(top)) if top else None,
            "terms": [
                {"weight": list(unshift(x)), "coeff": c.to_json(), "top": x == top} for x, c in self.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __repr__(self):
        return " + ".join(f"({c})[{','.join(map(str, unshift(x)))}]" for x, c in self.items()) or "0"


def kill_nondominant(p: Pattern) -> Pattern:
    return Pattern(p.level, {x: c for x, c in p.terms.items() if is_dominant(x)})


def iter_terms(p: Mapping[Coords, LaurentPoly] | Pattern) -> Iterator[tuple[Coords, LaurentPoly]]:
    yield from (p.items() if isinstance(p, Pattern) else sorted(p.items(), reverse=True))
