"""Command-line front end: ``lltilt canon | pattern | crosscheck | cache``."""
from __future__ import annotations

import argparse
import functools
import hashlib
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from lltilt import __version__
from lltilt.alcove import is_dominant, is_regular, shift
from lltilt.partition import Partition, enumerate_partitions, is_l_regular

CACHE_ENV = "LLTILT_CACHE_DIR"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- cache

def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "lltilt")


@functools.lru_cache(maxsize=1)
def code_fingerprint() -> str:
    """Hash of the package sources, so edited code never reads stale entries."""
    h = hashlib.sha256(__version__.encode())
    for f in sorted(Path(__file__).parent.glob("*.py")):
        h.update(f.name.encode())
        h.update(f.read_bytes())
    return h.hexdigest()[:16]


def cache_key(params: dict) -> str:
    blob = json.dumps({"params": params, "code": code_fingerprint()}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_get(params: dict) -> str | None:
    path = cache_dir() / f"{cache_key(params)}.json"
    if not path.exists():
        return None
    return json.loads(path.read_text())["payload"]


def cache_put(params: dict, payload: str):
    d = cache_dir()
    d.mkdir(parents=True, exist_ok=True)
    entry = {"key": params, "code": code_fingerprint(), "created": time.time(), "payload": payload}
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(entry, fh)
    os.replace(tmp, d / f"{cache_key(params)}.json")


def cached(params: dict, no_cache: bool, compute) -> str:
    if not no_cache:
        hit = cache_get(params)
        if hit is not None:
            return hit
    out = compute()
    if not no_cache:
        cache_put(params, out)
    return out


# ---------------------------------------------------------------- commands

def _check_l(l: int):
    if l < 2:
        raise UsageError("--l must be at least 2")


def render_canon(l: int, n: int, fmt: str) -> str:
    from lltilt.fock import decomposition_matrix

    D = decomposition_matrix(l, n)
    if fmt == "json":
        return D.to_json()
    if fmt == "latex":
        return D.to_latex()
    return D.to_table()


def cmd_canon(args) -> str:
    _check_l(args.l)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    params = {"cmd": "canon", "l": args.l, "n": args.n, "format": args.format}
    return cached(params, args.no_cache, lambda: render_canon(args.l, args.n, args.format))


def _parse_list(text: str, what: str):
    try:
        val = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed {what}: {text!r}") from exc
    if not isinstance(val, list) or not all(isinstance(v, int) for v in val):
        raise UsageError(f"malformed {what}: {text!r}")
    return val


def _target(args) -> tuple[int, ...]:
    if (args.weight is None) == (args.partition is None):
        raise UsageError("give exactly one of --weight or --partition")
    if args.partition is not None:
        try:
            lam = Partition(_parse_list(args.partition, "partition"))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        m = args.m or lam.size + 1
        if len(lam) > m:
            raise UsageError(f"partition has more than m = {m} rows")
        coords = [lam.part(i + 1) for i in range(m)]
    else:
        coords = _parse_list(args.weight, "weight")
        if args.m and args.m != len(coords):
            raise UsageError("--m disagrees with the weight length")
    if not coords:
        raise UsageError("empty weight")
    x = shift(tuple(coords))
    if not is_dominant(x):
        raise UsageError(f"weight {coords} is not dominant")
    return x


def render_pattern(x, l: int, route: str, path, fmt: str, at_one: bool) -> str:
    from lltilt.singular import compute_pattern
    from lltilt.soergel import regular_pattern

    if route == "regular":
        if not is_regular(x, l):
            raise UsageError("the regular route needs a regular weight (and l >= m)")
        p = regular_pattern(x, l)
    else:
        p = compute_pattern(x, l, path)
    if fmt == "json":
        d = p.to_dict()
        if at_one:
            for t in d["terms"]:
                t["at_one"] = sum(c for _, c in t["coeff"])
        return json.dumps(d, separators=(",", ":"))
    rows = []
    for y, c in p.items():
        w = "[" + ",".join(str(a - b) for a, b in zip(y, range(len(y), 0, -1))) + "]"
        rows.append([w, str(c)] + ([str(c.at_one())] if at_one else []))
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(v.ljust(wd) for v, wd in zip(r, widths)).rstrip() for r in rows)


def cmd_pattern(args) -> str:
    _check_l(args.l)
    x = _target(args)
    path = None
    if args.path:
        try:
            raw = json.loads(args.path)
            path = [shift(tuple(Partition(p).part(i + 1) for i in range(len(x)))) for p in raw]
        except (json.JSONDecodeError, ValueError, TypeError) as exc:
            raise UsageError(f"malformed --path: {exc}") from exc
    params = {"cmd": "pattern", "l": args.l, "x": list(x), "route": args.route,
              "path": [list(p) for p in path] if path else None, "format": args.format, "at_one": args.at_one}
    return cached(params, args.no_cache, lambda: render_pattern(x, args.l, args.route, path, args.format, args.at_one))


def _crosscheck_task(task):
    from lltilt import bridge

    kind, payload = task
    if kind == "t1":
        lam, i, l, perturb = payload
        return bridge.check_theorem1(lam, i, l, perturb=perturb)
    if kind == "t2":
        lam, i, n, l = payload
        return bridge.check_theorem2(lam, i, n, l)
    if kind == "t3":
        lam, l, pairs, seed = payload
        return bridge.check_path_independence(lam, l, pairs, seed)
    if kind == "main":
        l, n = payload
        return bridge.check_main(l, n)
    raise ValueError(kind)


def crosscheck_tasks(l: int, n_max: int, pairs: int, seed: int, perturb: bool) -> list:
    tasks = []
    for size in range(n_max + 1):
        for lam in enumerate_partitions(size):
            for i in range(l):
                tasks.append(("t1", (tuple(lam), i, l, perturb)))
    for size in range(n_max):
        for lam in enumerate_partitions(size):
            for i in range(l):
                for n in (2, 3):
                    tasks.append(("t2", (tuple(lam), i, n, l)))
    for size in range(n_max + 1):
        for lam in enumerate_partitions(size, True, l):
            tasks.append(("t3", (tuple(lam), l, pairs, seed)))
    for n in range(n_max + 1):
        tasks.append(("main", (l, n)))
    return tasks


def run_crosscheck(l: int, n_max: int, pairs: int = 20, seed: int = 0, perturb: bool = False, jobs: int = 1):
    from lltilt.bridge import Report

    tasks = crosscheck_tasks(l, n_max, pairs, seed, perturb)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_crosscheck_task, tasks, chunksize=8))
    else:
        results = [_crosscheck_task(t) for t in tasks]
    merged: dict[str, Report] = {}
    for r in results:
        merged[r.name] = merged[r.name].merge(r) if r.name in merged else r
    order = ["theorem1", "theorem2", "theorem3", "main"]
    return [merged[k] for k in order if k in merged]


def cmd_crosscheck(args) -> tuple[str, int]:
    _check_l(args.l)
    reports = run_crosscheck(args.l, args.n_max, args.pairs, args.seed, args.perturb, args.jobs)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        out = json.dumps({"l": args.l, "n_max": args.n_max, "ok": ok,
                          "reports": [r.to_dict() for r in reports]}, separators=(",", ":"), default=str)
    else:
        lines = [f"{r.name:<9} l={args.l} n<={args.n_max}: {r.passed}/{r.checked} {'ok' if r.ok else 'FAIL'}"
                 for r in reports]
        for r in reports:
            for f in r.failures[:3]:
                lines.append(f"  {r.name} failure: {json.dumps(f, default=str)}")
        lines.append("PASS" if ok else "FAIL")
        out = "\n".join(lines)
    return out, 0 if ok else 1


def cmd_cache(args) -> str:
    d = cache_dir()
    files = sorted(d.glob("*.json")) if d.exists() else []
    if args.action == "clear":
        for f in files:
            f.unlink()
        return f"removed {len(files)} entries from {d}"
    lines = [f"{d}: {len(files)} entries"]
    for f in files:
        entry = json.loads(f.read_text())
        lines.append(f"{f.stem[:12]}  {json.dumps(entry['key'], sort_keys=True)}")
    return "\n".join(lines)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lltilt", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("canon", help="canonical basis / graded decomposition matrix")
    c.add_argument("--l", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=["json", "latex", "table"], default="table")
    c.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("pattern", help="tilting pattern of a dominant weight")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--weight", help="weight coordinates, e.g. '[2,1,0]'")
    p.add_argument("--partition", help="partition, e.g. '[2,1]'")
    p.add_argument("--m", type=int, default=None, help="rank (default: size + 1)")
    p.add_argument("--route", choices=["singular", "regular"], default="singular")
    p.add_argument("--path", help="JSON list of partitions from [] to the target")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--at-one", action="store_true", help="add the q=1 multiplicities")
    p.add_argument("--no-cache", action="store_true")

    x = sub.add_parser("crosscheck", help="Fock space vs singular combinatorics")
    x.add_argument("--l", type=int, required=True)
    x.add_argument("--n-max", type=int, required=True)
    x.add_argument("--pairs", type=int, default=20)
    x.add_argument("--seed", type=int, default=0)
    x.add_argument("--jobs", type=int, default=1)
    x.add_argument("--format", choices=["json", "table"], default="table")
    x.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)

    k = sub.add_parser("cache", help="inspect or clear the result cache")
    k.add_argument("action", choices=["inspect", "clear"])
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.cmd == "canon":
            out, code = cmd_canon(args), 0
        elif args.cmd == "pattern":
            out, code = cmd_pattern(args), 0
        elif args.cmd == "crosscheck":
            out, code = cmd_crosscheck(args)
        else:
            out, code = cmd_cache(args), 0
    except UsageError as exc:
        ap.exit(2, f"lltilt: error: {exc}\n")
    sys.stdout.write(out + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
