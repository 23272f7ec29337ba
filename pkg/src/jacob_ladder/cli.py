"""Command-line front end: ``jacob-ladder <command> [options]``.

Every command writes a single CSV or JSON document to stdout.  The
configuration is echoed into the document header so that output is
reproducible from the document alone.
"""

from __future__ import annotations

import argparse
import csv
import fcntl
import io
import json
import math
import os
import sys
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

import numpy as np

from .ladder import Constants, LadderError, phi1, reverse_sequence
from .laws import LawId, euler_reference_dirichlet, hli_residual, sweep, verify_law
from .primes import CapabilityError
from .quadrature import CheckpointStore, QuadratureError, StoreError, integrate_z2
from .zeta_core import DomainError, z

CACHE_ENV = "JACOB_LADDER_CACHE"
COMMANDS = ("z", "integral", "ladder", "verify", "sweep", "residual", "constants")
LAW_COLUMNS = ["law_id", "T", "k", "r", "lhs", "rhs", "abs_residual", "rel_residual", "notes"]


@dataclass
class RunConfig:
    command: str
    T: float | None = None
    k: int = 1
    r: int = 1
    law_id: str | None = None
    tol: float | None = None
    c0: float = 0.0
    a_exp: float = 1.0 / 3.0
    out_format: str = "csv"
    cache_path: str | None = None
    t_from: float | None = None
    t_to: float | None = None
    t_start: float | None = None
    t_end: float | None = None
    points: int = 5
    grid: str = "log"
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        for name in ("T", "tol", "t_start", "t_end"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v > 0):
                raise ValueError(f"--{name.replace('_', '-')} must be a positive finite number")
        for name in ("t_from", "t_to"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v >= 0):
                raise ValueError(f"--{name[2:]} must be a nonnegative finite number")
        if not (1 <= self.r <= self.k):
            raise ValueError("need 1 <= r <= k")
        if self.points < 1:
            raise ValueError("--points must be >= 1")
        if self.law_id is not None:
            LawId(self.law_id)
        self.constants()  # range checks on c0 / a_exp
        need = {
            "z": ["T"], "ladder": ["T"], "verify": ["T", "law_id"], "residual": ["T"],
            "integral": ["t_from", "t_to"], "sweep": ["law_id", "t_start", "t_end"],
        }.get(self.command, [])
        for name in need:
            if getattr(self, name) is None:
                raise ValueError(f"{self.command} requires --{_flag(name)}")
        if self.command == "integral" and self.t_to < self.t_from:
            raise ValueError("--to must not be below --from")
        if self.command == "sweep" and self.t_end < self.t_start:
            raise ValueError("--T-end must not be below --T-start")

    def constants(self) -> Constants:
        return Constants(c0=self.c0, a_exp=self.a_exp)

    def header(self) -> dict:
        d = asdict(self)
        d.pop("extra")
        return d


def _flag(name: str) -> str:
    return {"t_from": "from", "t_to": "to", "t_start": "T-start", "t_end": "T-end", "law_id": "law"}.get(name, name)


# ---------------------------------------------------------------------------
# serialisation


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def render(config: RunConfig, columns: list[str], rows: list[dict]) -> str:
    if config.out_format == "json":
        doc = {"config": config.header(), "columns": columns, "rows": rows}
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write("# config: " + json.dumps(config.header(), sort_keys=True) + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_fmt(row[c]) for c in columns])
    return buf.getvalue()


@contextmanager
def open_store(path: str | None):
    """Checkpoint store guarded by an exclusive advisory lock on ``path.lock``."""
    if path is None:
        yield CheckpointStore()
        return
    lock_path = path + ".lock"
    with open(lock_path, "w") as lock:
        try:
            fcntl.flock(lock, fcntl.LOCK_EX | fcntl.LOCK_NB)
        except BlockingIOError:
            raise StoreError(f"checkpoint file {path} is locked by another writer") from None
        store = CheckpointStore(path)
        try:
            yield store
        finally:
            if store.dirty:
                store.save()
            fcntl.flock(lock, fcntl.LOCK_UN)


# ---------------------------------------------------------------------------
# commands


def _heights(cfg: RunConfig) -> list[float]:
    if cfg.points == 1:
        return [cfg.t_start]
    if cfg.grid == "log":
        return [float(v) for v in np.geomspace(cfg.t_start, cfg.t_end, cfg.points)]
    return [float(v) for v in np.linspace(cfg.t_start, cfg.t_end, cfg.points)]


def execute(cfg: RunConfig, store: CheckpointStore) -> tuple[list[str], list[dict]]:
    consts = cfg.constants()
    cmd = cfg.command
    if cmd == "z":
        s = z(cfg.T)
        return ["t", "z", "terms_used", "method"], [asdict(s)]
    if cmd == "integral":
        res = integrate_z2(cfg.t_from, cfg.t_to, cfg.tol)
        return ["a", "b", "value", "err_estimate", "panels"], [asdict(res)]
    if cmd == "ladder":
        seq = reverse_sequence(cfg.T, cfg.k, consts, store)
        rows = []
        for i, t in enumerate(seq.points):
            p = phi1(t, consts, store)
            rows.append({"r": i, "t": t, "j": p.j, "phi1": p.phi1, "residual": p.residual})
        return ["r", "t", "j", "phi1", "residual"], rows
    if cmd == "verify":
        rep = verify_law(cfg.law_id, cfg.T, cfg.k, cfg.r, consts, store)
        return LAW_COLUMNS, [rep.as_row()]
    if cmd == "sweep":
        reps = sweep(cfg.law_id, _heights(cfg), cfg.k, cfg.r, consts, store)
        return LAW_COLUMNS, [rep.as_row() for rep in reps]
    if cmd == "residual":
        d = hli_residual(cfg.T, consts, store)
        return ["t", "r_t", "ratio_quarter", "ratio_third"], [asdict(d)]
    if cmd == "constants":
        row = consts.as_dict()
        row["c_dirichlet"] = euler_reference_dirichlet(1e-12)
        return list(row), [row]
    raise ValueError(cmd)  # pragma: no cover


def run(cfg: RunConfig, out=None, err=None) -> int:
    """Execute ``cfg``; returns the process exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg.validate()
    except ValueError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    try:
        with open_store(cfg.cache_path) as store:
            columns, rows = execute(cfg, store)
    except (QuadratureError, LadderError, CapabilityError, StoreError, DomainError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    out.write(render(cfg, columns, rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--T", type=float, help="height T")
    common.add_argument("--k", type=int, default=1)
    common.add_argument("--r", type=int, default=1)
    common.add_argument("--law", dest="law_id", choices=[m.value for m in LawId])
    common.add_argument("--tol", type=float)
    common.add_argument("--c0", type=float, default=0.0)
    common.add_argument("--a-exp", dest="a_exp", type=float, default=1.0 / 3.0)
    common.add_argument("--out", dest="out_format", choices=["csv", "json"], default="csv")
    common.add_argument("--cache", dest="cache_path", help=f"checkpoint file (overrides ${CACHE_ENV})")

    p = argparse.ArgumentParser(prog="jacob-ladder", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("z", parents=[common], help="evaluate Z(T)")
    pi = sub.add_parser("integral", parents=[common], help="integral of Z^2 over [from, to]")
    pi.add_argument("--from", dest="t_from", type=float)
    pi.add_argument("--to", dest="t_to", type=float)
    sub.add_parser("ladder", parents=[common], help="phi1 along the reverse sequence T^0..T^k")
    sub.add_parser("verify", parents=[common], help="one law report")
    ps = sub.add_parser("sweep", parents=[common], help="law reports over a grid of T")
    ps.add_argument("--T-start", dest="t_start", type=float)
    ps.add_argument("--T-end", dest="t_end", type=float)
    ps.add_argument("--points", type=int, default=5)
    ps.add_argument("--grid", choices=["log", "linear"], default="log")
    sub.add_parser("residual", parents=[common], help="error term R(T) of the mean-square formula")
    sub.add_parser("constants", parents=[common], help="constant bundle")
    return p


def main(argv=None) -> int:
    args = vars(build_parser().parse_args(argv))
    if args.get("cache_path") is None:
        args["cache_path"] = os.environ.get(CACHE_ENV) or None
    fields = {k: v for k, v in args.items() if k in RunConfig.__dataclass_fields__}
    return run(RunConfig(**fields))


if __name__ == "__main__":
    sys.exit(main())
