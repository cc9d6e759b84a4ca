"""Compare summed regular multiplicities with singular ones at q = 1.

For each singular dominant μ prints N_Γ (walls through μ), |W_Γ| and the
observed ratio Σ regular / singular, which is constant per block.
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction

from lltilt.alcove import Orbit, shift, unshift
from lltilt.bridge import corollary1_sums
from lltilt.partition import enumerate_partitions, is_l_regular


@dataclass
class Config:
    levels: tuple[int, ...] = (2, 3)
    m_max: int = 4
    n_max: int = 5


def blocks(cfg: Config):
    for l in cfg.levels:
        for m in range(2, cfg.m_max + 1):
            for n in range(cfg.n_max + 1):
                for lam in enumerate_partitions(n):
                    if len(lam) < m and is_l_regular(lam, l):
                        x = shift(tuple(lam.part(i + 1) for i in range(m)))
                        if not Orbit.of(x, l).is_regular():
                            yield l, x


def main(cfg: Config):
    print(f"{'l':>2} {'mu':<16} {'N':>2} {'|W|':>4}  ratios")
    agree_n = agree_w = total = 0
    for l, x in blocks(cfg):
        sing, reg, n_h, n_w = corollary1_sums(x, l)
        ratios = sorted({Fraction(reg.get(k, 0), v) for k, v in sing.items()})
        total += 1
        agree_n += ratios == [n_h]
        agree_w += ratios == [n_w]
        print(f"{l:>2} {str(list(unshift(x))):<16} {n_h:>2} {n_w:>4}  {', '.join(map(str, ratios))}")
    print(f"\nratio == N_Gamma on {agree_n}/{total} blocks, ratio == |W_Gamma| on {agree_w}/{total}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--m-max", type=int, default=4)
    ap.add_argument("--n-max", type=int, default=5)
    a = ap.parse_args()
    main(Config(tuple(a.levels), a.m_max, a.n_max))
