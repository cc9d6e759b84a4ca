"""The level-one q-Fock space and the LLT canonical basis algorithm.

f_i adds an i-node γ to |λ> with weight q^N, where N counts the addable
minus the removable i-nodes of λ lying in rows strictly above γ (smaller row
index). This orientation is the one for which G((2)) = |(2)> + q|(1,1)> at
l = 2; the opposite choice breaks the mod-qL normalisation.
"""
from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from lltilt.laurent import ONE, ZERO, LaurentPoly, exact_divide, q_factorial, q_int, symmetric_completion
from lltilt.partition import (
    Partition,
    Step,
    addable_nodes,
    dominance_leq,
    enumerate_partitions,
    is_l_regular,
    ladder_word,
    removable_nodes,
)


class NotInSubmoduleError(ValueError):
    """A vector has a component outside the span of the w-basis."""


class CanonicalBasisError(RuntimeError):
    """An LLT output violated one of its defining conditions."""


def _key(p: Partition):
    # descending reverse-lex is a linear extension of dominance
    return tuple(p)


class FockVector:
    __slots__ = ("l", "_t")

    def __init__(self, l: int, terms: Mapping[Partition, LaurentPoly] | Iterable | None = None):
        self.l = l
        self._t: dict[Partition, LaurentPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for lam, c in items:
            self._add_term(Partition(lam), LaurentPoly.coerce(c))

    def _add_term(self, lam: Partition, c: LaurentPoly):
        new = self._t.get(lam, ZERO) + c
        if new.is_zero():
            self._t.pop(lam, None)
        else:
            self._t[lam] = new

    @classmethod
    def vacuum(cls, l: int) -> FockVector:
        return cls(l, {Partition(): ONE})

    @classmethod
    def basis(cls, l: int, lam) -> FockVector:
        return cls(l, {Partition(lam): ONE})

    def __getitem__(self, lam) -> LaurentPoly:
        return self._t.get(Partition(lam), ZERO)

    def items(self):
        """Terms sorted by descending partition (dominance-compatible)."""
        return sorted(self._t.items(), key=lambda kv: _key(kv[0]), reverse=True)

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def is_zero(self) -> bool:
        return not self._t

    def __len__(self):
        return len(self._t)

    def __add__(self, other: FockVector) -> FockVector:
        out = FockVector(self.l, self._t)
        for lam, c in other._t.items():
            out._add_term(lam, c)
        return out

    def __neg__(self):
        return FockVector(self.l, {k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> FockVector:
        c = LaurentPoly.coerce(c)
        return FockVector(self.l, {k: v * c for k, v in self._t.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.l == other.l and self._t == other._t

    def __repr__(self):
        if not self._t:
            return "0"
        return " + ".join(f"({c})|{lam}>" for lam, c in self.items())

    def to_json(self):
        return [[list(lam), c.to_json()] for lam, c in self.items()]


# ---------------------------------------------------------------- operators

def _f_exponent(lam: Partition, gamma, i: int, l: int) -> int:
    add = sum(1 for n in addable_nodes(lam, i, l) if n.row < gamma.row)
    rem = sum(1 for n in removable_nodes(lam, i, l) if n.row < gamma.row)
    return add - rem


def _e_exponent(lam: Partition, gamma, i: int, l: int) -> int:
    add = sum(1 for n in addable_nodes(lam, i, l) if n.row > gamma.row)
    rem = sum(1 for n in removable_nodes(lam, i, l) if n.row > gamma.row)
    return rem - add


def apply_f(i: int, v: FockVector) -> FockVector:
    l = v.l
    out = FockVector(l)
    for lam, c in v.items():
        for g in addable_nodes(lam, i, l):
            out._add_term(lam.add_node(g), c.shift(_f_exponent(lam, g, i, l)))
    return out


def apply_e(i: int, v: FockVector) -> FockVector:
    l = v.l
    out = FockVector(l)
    for lam, c in v.items():
        for g in removable_nodes(lam, i, l):
            out._add_term(lam.remove_node(g), c.shift(_e_exponent(lam, g, i, l)))
    return out


def k_weight(lam: Partition, i: int, l: int) -> int:
    """Exponent of K_i on |lam>: #addable i-nodes minus #removable i-nodes."""
    return len(addable_nodes(lam, i, l)) - len(removable_nodes(lam, i, l))


def apply_f_divided(i: int, n: int, v: FockVector) -> FockVector:
    if n < 1:
        raise ValueError("divided power needs n >= 1")
    w = v
    for _ in range(n):
        w = apply_f(i, w)
    if n == 1:
        return w
    d = q_factorial(n)
    return FockVector(v.l, {lam: exact_divide(c, d) for lam, c in w.items()})


def apply_word(word: Iterable[Step], l: int, start: FockVector | None = None) -> FockVector:
    """Apply a written-order word of divided powers right-to-left."""
    v = FockVector.vacuum(l) if start is None else start
    for step in reversed(tuple(word)):
        i, n = step
        v = apply_f_divided(i, n, v)
    return v


# ---------------------------------------------------------------- w-basis and bar

_lock = threading.Lock()
_w_memo: dict[tuple[int, int], dict[Partition, FockVector]] = {}
_g_memo: dict[tuple[int, int], dict[Partition, FockVector]] = {}


def w_basis(l: int, n: int) -> dict[Partition, FockVector]:
    key = (l, n)
    with _lock:
        if key in _w_memo:
            return _w_memo[key]
    out = {lam: apply_word(ladder_word(lam, l), l) for lam in enumerate_partitions(n, True, l)}
    for lam, w in out.items():
        if w[lam] != ONE or any(_key(mu) > _key(lam) for mu in w.support()):
            raise CanonicalBasisError(f"ladder word of {lam} does not lead with |{lam}>")
    with _lock:
        _w_memo[key] = out
    return out


def express_in_w_basis(v: FockVector, wb: Mapping[Partition, FockVector]) -> dict[Partition, LaurentPoly]:
    """Coefficients a_ν with v = Σ a_ν w_ν, by elimination on leading terms."""
    coeffs: dict[Partition, LaurentPoly] = {}
    rest = v
    while not rest.is_zero():
        top, c = rest.items()[0]
        if top not in wb:
            raise NotInSubmoduleError(f"residual term ({c})|{top}> is not a w-basis leader")
        coeffs[top] = c
        rest = rest - wb[top].scale(c)
    return coeffs


def bar_involution(v: FockVector, wb: Mapping[Partition, FockVector] | None = None) -> FockVector:
    if v.is_zero():
        return v
    if wb is None:
        sizes = {lam.size for lam in v.support()}
        if len(sizes) != 1:
            raise NotInSubmoduleError("bar involution needs a homogeneous vector")
        wb = w_basis(v.l, sizes.pop())
    out = FockVector(v.l)
    for nu, a in express_in_w_basis(v, wb).items():
        out = out + wb[nu].scale(a.bar())
    return out


# ---------------------------------------------------------------- LLT

@dataclass(frozen=True)
class CanonicalBasisElement:
    label: Partition
    expansion: FockVector


def _llt_block(l: int, n: int) -> dict[Partition, FockVector]:
    key = (l, n)
    with _lock:
        if key in _g_memo:
            return _g_memo[key]
    wb = w_basis(l, n)
    G: dict[Partition, FockVector] = {}
    regs = sorted(wb, key=_key)
    for lam in regs:
        v = wb[lam]
        # each pass fixes the largest offending coefficient; smaller G(μ) only touch lower terms
        budget = 1 + sum(len(G[mu]) * 64 for mu in G)
        while True:
            bad = [(mu, c) for mu, c in v.items() if mu != lam and not c.in_qZq()]
            if not bad:
                break
            mu, c = bad[0]
            if mu not in G:
                raise CanonicalBasisError(f"offending |{mu}> in G({lam}) is not l-regular or not below {lam}")
            if not dominance_leq(mu, lam):
                raise CanonicalBasisError(f"offending {mu} is incomparable with {lam}")
            v = v - G[mu].scale(symmetric_completion(c))
            budget -= 1
            if budget < 0:
                raise CanonicalBasisError(f"elimination for G({lam}) did not terminate")
        if v[lam] != ONE:
            raise CanonicalBasisError(f"G({lam}) has leading coefficient {v[lam]}")
        G[lam] = v
    with _lock:
        _g_memo[key] = G
    return G


def canonical_basis(l: int, n: int) -> list[CanonicalBasisElement]:
    if l < 2 or n < 0:
        raise ValueError("need l >= 2 and n >= 0")
    G = _llt_block(l, n)
    return [CanonicalBasisElement(lam, G[lam]) for lam in sorted(G, key=_key, reverse=True)]


def canonical_element(lam, l: int) -> FockVector:
    lam = Partition(lam)
    return _llt_block(l, lam.size)[lam]


@dataclass
class DecompositionMatrix:
    l: int
    n: int
    rows: list[Partition]
    cols: list[Partition]
    entries: dict[tuple[Partition, Partition], LaurentPoly] = field(default_factory=dict)

    def __getitem__(self, key) -> LaurentPoly:
        lam, mu = key
        return self.entries.get((Partition(lam), Partition(mu)), ZERO)

    def to_dict(self):
        return {
            "l": self.l,
            "n": self.n,
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [
                [list(r), list(c), self.entries[(r, c)].to_json()]
                for r in self.rows
                for c in self.cols
                if (r, c) in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_latex(self) -> str:
        head = " & ".join(_latex_part(c) for c in self.cols)
        lines = [
            "\\begin{tabular}{l|" + "c" * len(self.cols) + "}",
            " & " + head + " \\\\",
            "\\hline",
        ]
        for r in self.rows:
            cells = [_latex_poly(self[r, c]) for c in self.cols]
            lines.append(_latex_part(r) + " & " + " & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)

    def to_table(self) -> str:
        cells = [[""] + [str(c) for c in self.cols]]
        for r in self.rows:
            cells.append([str(r)] + [str(self[r, c]) if self[r, c] else "." for c in self.cols])
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        return "\n".join("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in cells)


def _latex_part(p: Partition) -> str:
    return "$\\emptyset$" if not p else "$(" + ",".join(map(str, p)) + ")$"


def _latex_poly(c: LaurentPoly) -> str:
    if c.is_zero():
        return "$\\cdot$"
    return "$" + str(c).replace("*", "") + "$"


def decomposition_matrix(l: int, n: int) -> DecompositionMatrix:
    G = _llt_block(l, n)
    cols = enumerate_partitions(n)
    rows = [lam for lam in cols if lam in G]
    entries = {(lam, mu): c for lam in rows for mu, c in G[lam].items()}
    return DecompositionMatrix(l, n, rows, cols, entries)


__all__ = [
    "CanonicalBasisElement",
    "CanonicalBasisError",
    "DecompositionMatrix",
    "FockVector",
    "NotInSubmoduleError",
    "apply_e",
    "apply_f",
    "apply_f_divided",
    "apply_word",
    "bar_involution",
    "canonical_basis",
    "canonical_element",
    "decomposition_matrix",
    "express_in_w_basis",
    "is_l_regular",
    "k_weight",
    "q_int",
    "w_basis",
]
