"""Sample random admissible paths and time the path-independence check per target."""
import argparse
import time
from dataclasses import dataclass

from lltilt.bridge import check_path_independence
from lltilt.partition import enumerate_partitions


@dataclass
class Config:
    l: int = 2
    n_max: int = 6
    pairs: int = 20
    seed: int = 0


def main(cfg: Config) -> int:
    bad = 0
    for n in range(cfg.n_max + 1):
        for lam in enumerate_partitions(n, True, cfg.l):
            t = time.perf_counter()
            rep = check_path_independence(lam, cfg.l, cfg.pairs, cfg.seed)
            bad += not rep.ok
            print(f"{lam!r:<14} {rep.passed}/{rep.checked}  {time.perf_counter() - t:6.2f}s")
    return bad


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k.replace('_', '-')}", type=type(v), default=v)
    raise SystemExit(main(Config(**vars(ap.parse_args()))))
