"""Indecomposable tilting patterns on a regular orbit, by wall crossing.

Alcoves are represented by their point in a fixed regular orbit Ω. The wall
of colour s of the alcove w·C is the image under w of the wall s of the
fundamental alcove C, so the mirror alcove is w(s(x_0)) where x_0 is the
point of Ω in C and w is the affine permutation with w(x_0) = x.

Wall crossing (As the mirror of A, killed when As is not dominant):

    A  ->  As + q A       if As is above A
    A  ->  As + q^{-1} A  if As is below A
"""
from __future__ import annotations

import threading
from typing import Callable

from lltilt.alcove import Coords, Orbit, Pattern, is_dominant, is_regular
from lltilt.laurent import ONE, LaurentPoly, symmetric_completion


class MissingPatternError(KeyError):
    pass


def fundamental_point(orbit: Orbit) -> Coords:
    """The point of a regular orbit in the fundamental alcove."""
    L, m = orbit.level, orbit.m
    r = sorted(set(orbit.residues))
    if len(r) != m:
        raise ValueError(f"orbit {orbit} is not regular")
    base = sum(r)
    for s in range(m):
        vals = r[s:] + [v + L for v in r[:s]]
        excess = orbit.total - base - s * L
        if excess % (m * L) == 0:
            b = excess // (m * L)
            return tuple(sorted((v + b * L for v in vals), reverse=True))
    raise ValueError(f"orbit {orbit} has no point in the fundamental alcove")


def _affine_perm(x: Coords, x0: Coords, L: int) -> tuple[list[int], list[int]]:
    pos = {c % L: k for k, c in enumerate(x0)}
    pi = [pos[c % L] for c in x]
    t = [(c - x0[k]) // L for c, k in zip(x, pi)]
    return pi, t


def simple_reflection(x0: Coords, s: int, L: int) -> Coords:
    """s = 1..m-1 swaps neighbours; s = 0 reflects in x_1 - x_m = L."""
    y = list(x0)
    if s == 0:
        d = x0[0] - x0[-1] - L
        y[0] -= d
        y[-1] += d
    else:
        y[s - 1], y[s] = y[s], y[s - 1]
    return tuple(y)


def mirror(x: Coords, s: int, orbit: Orbit) -> Coords:
    """The alcove As, as a point of the same orbit."""
    L = orbit.level
    x0 = fundamental_point(orbit)
    pi, t = _affine_perm(x, x0, L)
    v = simple_reflection(x0, s, L)
    return tuple(v[k] + L * tp for k, tp in zip(pi, t))


def _above(a: Coords, b: Coords) -> bool:
    """a and b differ by a reflection: is a on the positive side?"""
    for p, q in zip(a, b):
        if p != q:
            return p > q
    return False


def theta_s(p: Pattern, s: int, orbit: Orbit | None = None) -> Pattern:
    if p.is_zero():
        return Pattern(p.level)
    orbit = orbit or p.block
    out = Pattern(p.level)
    for x, c in p.items():
        if not is_regular(x, p.level):
            raise ValueError(f"wall crossing needs regular weights, got {x}")
        xs = mirror(x, s, orbit)
        if not is_dominant(xs):
            continue
        out.add(xs, c)
        out.add(x, c.shift(1 if _above(xs, x) else -1))
    return out


def reduce_to_indecomposable(
    p: Pattern, known: Callable[[Coords], Pattern] | dict
) -> tuple[Pattern, list[tuple[Coords, LaurentPoly]]]:
    """Subtract bar-invariant multiples of known patterns below the top.

    Works top-down so every subtraction only disturbs strictly lower weights.
    The log lists (weight, γ) for every subtraction.
    """
    lookup = known.__getitem__ if isinstance(known, dict) else known
    top = p.top
    if top is None or p[top] != ONE:
        raise ValueError(f"pattern top coefficient must be 1, got {p[top] if top else 0}")
    log: list[tuple[Coords, LaurentPoly]] = []
    while True:
        bad = [(x, c) for x, c in p.items() if x != top and not c.in_qZq()]
        if not bad:
            return p, log
        x, c = bad[0]
        g = symmetric_completion(c)
        try:
            known_x = lookup(x)
        except KeyError as exc:
            raise MissingPatternError(f"no known pattern for {x}") from exc
        p = p - known_x.scale(g)
        log.append((x, g))


_lock = threading.Lock()
_memo: dict[tuple[Coords, int], Pattern] = {}


def regular_pattern(x: Coords, level: int) -> Pattern:
    """Indecomposable pattern P_A for the alcove of the regular dominant point x."""
    x = tuple(x)
    key = (x, level)
    with _lock:
        if key in _memo:
            return _memo[key]
    if not (is_dominant(x) and is_regular(x, level)):
        raise ValueError(f"{x} is not dominant regular at level {level}")
    orbit = Orbit.of(x, level)
    x0 = fundamental_point(orbit)
    if x == x0:
        out = Pattern.single(x, level)
    else:
        for s in range(len(x)):
            xs = mirror(x, s, orbit)
            if is_dominant(xs) and _above(x, xs):
                break
        else:
            raise RuntimeError(f"no descending wall for {x}")
        raw = theta_s(regular_pattern(xs, level), s, orbit)
        out, _ = reduce_to_indecomposable(raw, lambda y: regular_pattern(y, level))
    with _lock:
        _memo[key] = out
    return out


def alcove_distance(x: Coords, level: int) -> int:
    """Number of hyperplanes separating the alcove of x from the fundamental one."""
    m = len(x)
    x0 = fundamental_point(Orbit.of(x, level))
    n = 0
    for i in range(m):
        for j in range(i + 1, m):
            a, b = x[i] - x[j], x0[i] - x0[j]
            n += abs(a // level - b // level)
    return n


def dominant_alcoves(orbit: Orbit, max_steps: int) -> list[Coords]:
    """Dominant points of a regular orbit within max_steps wall crossings of C."""
    x0 = fundamental_point(orbit)
    seen = {x0}
    frontier = [x0]
    for _ in range(max_steps):
        nxt = []
        for x in frontier:
            for s in range(orbit.m):
                y = mirror(x, s, orbit)
                if is_dominant(y) and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, reverse=True)
