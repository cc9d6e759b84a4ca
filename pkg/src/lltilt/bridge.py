"""Partitions as GL_m weights, and executable cross-checks between the
Fock-space side and the alcove side.

A partition λ with at most m rows is the weight (λ_1, ..., λ_m); its
ρ-shifted coordinates are x_i = λ_i - i + m + 1, so row i ends in residue
(λ_i - i) mod l exactly when x_i ≡ m + 1 + that residue. Two rows with equal
end residue put the weight on a wall.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any

from lltilt.alcove import Coords, Hyperplane, Orbit, Pattern, Weight, project, rho, u_o_counts, unshift, walls_through
from lltilt.fock import FockVector, apply_f, apply_f_divided, canonical_basis
from lltilt.laurent import ONE, LaurentPoly
from lltilt.partition import Node, Partition, addable_nodes, is_l_regular, removable_nodes
from lltilt.singular import InvalidPathError, compute_pattern, theta_general
from lltilt.soergel import regular_pattern


@dataclass(frozen=True)
class Dictionary:
    l: int
    m: int
    r: int = 1

    def weight_of(self, lam) -> Weight:
        return weight_of(lam, self.m, self.l)

    def x_of(self, lam) -> Coords:
        return x_of(lam, self.m)


def x_of(lam, m: int) -> Coords:
    lam = Partition(lam)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than m = {m} rows")
    return tuple(lam.part(i + 1) + m - i for i in range(m))


def weight_of(lam, m: int, l: int) -> Weight:
    lam = Partition(lam)
    if len(lam) > m:
        raise ValueError(f"{lam} has more than m = {m} rows")
    return Weight(tuple(lam.part(i + 1) for i in range(m)), l)


def partition_of(w: Weight | Coords, shifted: bool = False) -> Partition:
    coords = w.coords if isinstance(w, Weight) else tuple(w)
    if shifted:
        coords = tuple(c - r for c, r in zip(coords, rho(len(coords))))
    return Partition(coords)


def end_residue(lam, i: int, l: int) -> int:
    return (Partition(lam).part(i) - i) % l


def dictionary_walls(lam, m: int, l: int) -> list[Hyperplane]:
    """Walls predicted from equal end residues of rows 1..m."""
    lam = Partition(lam)
    ends = [lam.part(i) - i for i in range(1, m + 1)]
    return [
        Hyperplane(i + 1, j + 1, (ends[i] - ends[j]) // l)
        for i in range(m)
        for j in range(i + 1, m)
        if (ends[i] - ends[j]) % l == 0
    ]


def scale(w: Weight, r: int) -> Weight:
    """rλ + (r-1)ρ at level r*l; its ρ-shift is r times that of λ."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return Weight(tuple(r * c + (r - 1) * p for c, p in zip(w.coords, rho(w.m))), r * w.l)


# ---------------------------------------------------------------- reports

@dataclass
class Report:
    name: str
    checked: int = 0
    passed: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed and not self.failures

    def record(self, ok: bool, inp, lhs=None, rhs=None):
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append({"input": inp, "lhs": lhs, "rhs": rhs})

    def merge(self, other: Report) -> Report:
        return Report(self.name, self.checked + other.checked, self.passed + other.passed,
                      self.failures + other.failures)

    def to_dict(self):
        return {"name": self.name, "checked": self.checked, "passed": self.passed, "failures": self.failures}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), default=str)


def _fock_as_map(v: FockVector, m: int) -> dict[Partition, LaurentPoly]:
    return {lam: c for lam, c in v.items() if len(lam) <= m}


def _pattern_as_map(p: Pattern) -> dict[Partition, LaurentPoly]:
    return {partition_of(x, shifted=True): c for x, c in p.items()}


def _show(d: dict[Partition, LaurentPoly]) -> dict[str, str]:
    return {str(k): str(v) for k, v in sorted(d.items(), key=lambda kv: tuple(kv[0]), reverse=True)}


def _perturbed_f(i: int, v: FockVector) -> FockVector:
    # wrong orientation: count i-nodes in later rows
    out = FockVector(v.l)
    for lam, c in v.items():
        for g in addable_nodes(lam, i, v.l):
            add = sum(1 for n in addable_nodes(lam, i, v.l) if n.row > g.row)
            rem = sum(1 for n in removable_nodes(lam, i, v.l) if n.row > g.row)
            out = out + FockVector(v.l, {lam.add_node(g): c.shift(add - rem)})
    return out


def theta_of_step(lam, i: int, n: int, l: int, m: int) -> Pattern:
    """The singular Θ matching f_i^(n) on Δ(lam); zero if too few nodes fit."""
    lam = Partition(lam)
    nodes = [g for g in addable_nodes(lam, i, l) if g.row <= m]
    x = x_of(lam, m)
    if len(nodes) < n:
        return Pattern(l)
    target = lam
    for g in nodes[:n]:
        target = target.add_node(g)
    return theta_general(Pattern.single(x, l), x_of(target, m), x)


def check_theorem1(lam, i: int, l: int, m: int | None = None, perturb: bool = False) -> Report:
    return check_theorem2(lam, i, 1, l, m, perturb)


def check_theorem2(lam, i: int, n: int, l: int, m: int | None = None, perturb: bool = False) -> Report:
    lam = Partition(lam)
    m = lam.size + n + 1 if m is None else m
    rep = Report("theorem2" if n > 1 else "theorem1")
    v = FockVector.basis(l, lam)
    if perturb:
        for _ in range(n):
            v = _perturbed_f(i, v)
        if n > 1:
            from lltilt.laurent import exact_divide, q_factorial
            v = FockVector(l, {k: exact_divide(c, q_factorial(n)) for k, c in v.items()})
    else:
        v = apply_f_divided(i, n, v)
    lhs = _fock_as_map(v, m)
    rhs = _pattern_as_map(theta_of_step(lam, i, n, l, m))
    rep.record(lhs == rhs, {"lambda": list(lam), "i": i, "n": n, "l": l, "m": m}, _show(lhs), _show(rhs))
    return rep


def check_main(l: int, n: int) -> Report:
    """LLT row d_{λ·}(q) against the singular tilting pattern of λ, for every l-regular λ of n."""
    m = n + 1
    rep = Report("main")
    for elt in canonical_basis(l, n):
        lhs = _fock_as_map(elt.expansion, m)
        rhs = _pattern_as_map(compute_pattern(x_of(elt.label, m), l))
        rep.record(lhs == rhs, {"lambda": list(elt.label), "l": l, "n": n}, _show(lhs), _show(rhs))
    return rep


# ---------------------------------------------------------------- node-count shift

def shift_from_nodes(lam, gamma: Node, i: int, l: int) -> int:
    """q-exponent of adding γ: addable minus removable i-nodes in rows above γ."""
    lam = Partition(lam)
    add = sum(1 for g in addable_nodes(lam, i, l) if g.row < gamma.row)
    rem = sum(1 for g in removable_nodes(lam, i, l) if g.row < gamma.row)
    return add - rem


def shift_from_geometry(lam, gamma: Node, l: int, m: int) -> int:
    """u(τ, Γ_λ) - o(τ, Γ_μ) with τ the half-node point between λ and μ = λ + γ."""
    lam = Partition(lam)
    mu = lam.add_node(gamma)
    x, y = x_of(lam, m), x_of(mu, m)
    tau = tuple(a + b for a, b in zip(x, y))
    two_x, two_y = tuple(2 * c for c in x), tuple(2 * c for c in y)
    u, _ = u_o_counts(tau, two_x, 2 * l)
    _, o = u_o_counts(tau, two_y, 2 * l)
    return u - o


# ---------------------------------------------------------------- path independence

def random_path(lam, l: int, m: int, rng: random.Random, tries: int = 50) -> list[Coords]:
    """A random admissible divided-power path from ∅ to lam.

    Each step adds the topmost k addable i-nodes, stays inside lam, keeps the
    partition l-regular and must produce its target as leading term with
    coefficient 1.
    """
    lam = Partition(lam)
    inside = set(lam.nodes())
    for _ in range(tries):
        cur = Partition()
        path = [x_of(cur, m)]
        p = Pattern.single(path[0], l)
        while cur != lam:
            moves = []
            for i in range(l):
                nodes = addable_nodes(cur, i, l)
                for k in range(1, len(nodes) + 1):
                    if all(g in inside for g in nodes[:k]):
                        nxt = cur
                        for g in nodes[:k]:
                            nxt = nxt.add_node(g)
                        if is_l_regular(nxt, l):
                            moves.append(nxt)
            rng.shuffle(moves)
            for nxt in moves:
                raw = theta_general(p, x_of(nxt, m), x_of(cur, m))
                if raw.top == x_of(nxt, m) and raw[raw.top] == ONE:
                    from lltilt.soergel import reduce_to_indecomposable

                    p, _ = reduce_to_indecomposable(raw, lambda y: compute_pattern(y, l))
                    cur = nxt
                    path.append(x_of(cur, m))
                    break
            else:
                break
        if cur == lam:
            return path
    raise InvalidPathError(f"no admissible random path to {lam} found")


def check_path_independence(lam, l: int, pairs: int = 20, seed: int = 0) -> Report:
    lam = Partition(lam)
    m = lam.size + 1
    rng = random.Random(f"{seed}:{l}:{tuple(lam)}")
    rep = Report("theorem3")
    x = x_of(lam, m)
    reference = compute_pattern(x, l)
    for k in range(pairs):
        a = random_path(lam, l, m, rng)
        b = random_path(lam, l, m, rng)
        pa, pb = compute_pattern(x, l, a), compute_pattern(x, l, b)
        same = pa == pb == reference
        rep.record(same, {"lambda": list(lam), "l": l, "pair": k,
                          "paths": [[list(partition_of(v, True)) for v in pth] for pth in (a, b)]},
                   repr(pa), repr(pb))
    return rep


# ---------------------------------------------------------------- sum identity

def corollary1_sums(mu_x: Coords, l: int) -> tuple[dict[Coords, int], dict[Coords, int], int, int]:
    """Singular multiplicities of P_μ at q=1 and the summed regular ones.

    The regular companion is λ = r(μ+ρ) + (m-1, ..., 1, 0) at level r*l with
    r = m: it sits above every wall through r(μ+ρ), so u(λ, Γ) = 0 and
    λ_Γ = r(μ+ρ). Returns (singular, regular_sum, N_Γ, |W_Γ|) with the
    regular sums keyed by the unscaled singular weight.
    """
    mu_x = tuple(mu_x)
    m = len(mu_x)
    r = max(m, 2)
    big = tuple(r * c for c in mu_x)
    lam = tuple(b + (m - 1 - k) for k, b in enumerate(big))
    gamma = Orbit.of(big, r * l)
    assert project(lam, gamma) == big and u_o_counts(lam, big, r * l)[0] == 0
    sing = compute_pattern(mu_x, l).at_one()
    reg: dict[Coords, int] = {}
    for y, c in regular_pattern(lam, r * l).items():
        z = project(y, gamma)
        key = tuple(v // r for v in z)
        reg[key] = reg.get(key, 0) + c.at_one()
    reg = {k: v for k, v in reg.items() if v}
    return sing, reg, gamma.n_walls(), gamma.stabilizer_order()


def check_corollary1(mu_x: Coords, l: int, normaliser: str = "hyperplanes") -> Report:
    """[Q(μ):Δ(μ̄)] = (1/N) Σ [Q(λ):Δ(λ̄)].

    normaliser="hyperplanes" uses N_Γ, the number of walls through μ;
    normaliser="stabilizer" uses |W_Γ|, the number of alcoves around μ.
    """
    sing, reg, n_h, n_w = corollary1_sums(mu_x, l)
    N = n_h if normaliser == "hyperplanes" else n_w
    rep = Report(f"corollary1[{normaliser}]")
    keys = sorted(set(sing) | set(reg), reverse=True)
    for k in keys:
        s, tot = sing.get(k, 0), reg.get(k, 0)
        ok = N != 0 and tot % N == 0 and tot // N == s
        rep.record(ok, {"mu": list(unshift(mu_x)), "mubar": list(unshift(k)),
                        "l": l, "N": N}, s, f"{tot}/{N}")
    return rep


def check_walls(lam, m: int, l: int) -> bool:
    return set(walls_through(x_of(lam, m), l)) == set(dictionary_walls(lam, m, l))
