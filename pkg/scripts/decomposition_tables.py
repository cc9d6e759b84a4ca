"""Dump graded decomposition matrices for a range of n, one file per (l, n)."""
import argparse
from dataclasses import dataclass
from pathlib import Path

from lltilt.fock import decomposition_matrix


@dataclass
class Config:
    l: int = 2
    n_max: int = 8
    fmt: str = "table"
    out: Path = Path("tables")


def main(cfg: Config):
    cfg.out.mkdir(parents=True, exist_ok=True)
    ext = {"table": "txt", "latex": "tex", "json": "json"}[cfg.fmt]
    for n in range(cfg.n_max + 1):
        D = decomposition_matrix(cfg.l, n)
        text = {"table": D.to_table, "latex": D.to_latex, "json": D.to_json}[cfg.fmt]()
        path = cfg.out / f"d_l{cfg.l}_n{n}.{ext}"
        path.write_text(text + "\n")
        nonzero = sum(1 for c in D.entries.values() if not c.is_zero())
        print(f"l={cfg.l} n={n}: {len(D.rows)}x{len(D.cols)}, {nonzero} nonzero -> {path}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--format", dest="fmt", choices=["table", "latex", "json"], default="table")
    ap.add_argument("--out", type=Path, default=Path("tables"))
    main(Config(**vars(ap.parse_args())))
