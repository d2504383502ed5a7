"""Command line driver: verification suites, JSON reports and small computations."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import suites
from .borel import Borel
from .cartan import CartanDatum, validate
from .errors import DomainError
from .report import FAIL, PASS, Record, Report
from .repmod import braiding, highest_weight_module, intertwiner_check, qybe_check
from .shuffle import ShuffleAlgebra, ShuffleElem

BACKENDS = ("symbolic", "exact", "specialized")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    type: str | None = "A2"
    cartan: str | None = None
    suites: list = field(default_factory=lambda: list(suites.SUITES))
    depth: int = 2
    backend: str = "symbolic"
    seed: int = 0
    out: str | None = None

    def validate(self):
        if self.depth < 1:
            raise UsageError("depth must be positive")
        if self.depth > suites.MAX_DEPTH:
            raise UsageError(f"depth {self.depth} exceeds the bound {suites.MAX_DEPTH}; refused")
        if self.backend not in BACKENDS:
            raise UsageError(f"backend must be one of {', '.join(BACKENDS)}")
        unknown = [s for s in self.suites if s not in suites.RUNNERS]
        if unknown:
            raise UsageError(f"unknown suite(s) {', '.join(unknown)}; valid: {', '.join(suites.SUITES)}")

    def datum(self) -> CartanDatum:
        if self.cartan:
            try:
                d = CartanDatum.from_json(Path(self.cartan).read_text())
            except (OSError, ValueError, KeyError) as exc:
                raise UsageError(f"cannot read Cartan file: {exc}") from exc
            bad = validate(d)
            if bad:
                raise UsageError("invalid Cartan datum: " + "; ".join(bad))
            return d
        try:
            return CartanDatum.of_type(self.type)
        except DomainError as exc:
            raise UsageError(str(exc)) from exc


def run_suite(cfg: RunConfig) -> Report:
    cfg.validate()
    datum = cfg.datum()
    rep = Report(asdict(cfg))
    for name in cfg.suites:
        anchor = suites.CHECKS[name].anchor
        start = time.perf_counter()
        it = suites.run(name, datum, cfg.depth, cfg.backend, cfg.seed)
        while True:
            try:
                sub, ok, witness = next(it)
            except StopIteration:
                break
            except DomainError as exc:
                rep.add(Record(name, anchor, "skipped", str(exc), _ms(start)))
                break
            rep.add(Record(f"{name}/{sub}", anchor, PASS if ok else FAIL, "" if ok else str(witness), _ms(start)))
            start = time.perf_counter()
    return rep


def _ms(start) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _emit(obj, out: str | None):
    text = json.dumps(obj, indent=2, sort_keys=True) if not isinstance(obj, str) else obj
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _print_summary(rep: Report):
    for r in rep.records:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[r.status]
        line = f"[{mark}] {r.name} ({r.elapsed_ms:.1f} ms)"
        if r.witness and r.status != "pass":
            line += f": {r.witness[:200]}"
        print(line, file=sys.stderr)
    s = rep.summary
    print(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped of {s['total']}", file=sys.stderr)


def _config_from(args) -> RunConfig:
    cfg = RunConfig()
    for key in ("type", "cartan", "depth", "backend", "seed", "out"):
        val = getattr(args, key, None)
        if val is not None:
            setattr(cfg, key, val)
    if getattr(args, "suite", None):
        cfg.suites = [s.strip() for s in args.suite.split(",") if s.strip()]
    if getattr(args, "config", None):
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config: {exc}") from exc
        for key, val in data.items():
            if not hasattr(cfg, key):
                raise UsageError(f"unknown config key {key!r}")
            setattr(cfg, key, val)
    if cfg.cartan:
        cfg.type = None
    return cfg


# ---------------------------------------------------------------- commands

def cmd_check(args) -> int:
    rep = run_suite(_config_from(args))
    _print_summary(rep)
    _emit(rep.to_json(), rep.config.get("out"))
    return 0 if rep.ok else 1


def cmd_shuffle(args) -> int:
    cfg = _config_from(args)
    if args.action == "serre-check":
        cfg.suites = ["shuffle-serre"]
        return cmd_check_cfg(cfg)
    if not args.left or not args.right:
        raise UsageError("shuffle eval needs --left and --right words")
    S = ShuffleAlgebra(cfg.datum().param_matrix())
    a = ShuffleElem.word(*[i - 1 for i in _ints(args.left)])
    b = ShuffleElem.word(*[i - 1 for i in _ints(args.right)])
    _emit({"left": list(_ints(args.left)), "right": list(_ints(args.right)),
           "shuffle": S.shuffle(a, b).to_json()}, cfg.out)
    return 0


def cmd_check_cfg(cfg: RunConfig) -> int:
    rep = run_suite(cfg)
    _print_summary(rep)
    _emit(rep.to_json(), cfg.out)
    return 0 if rep.ok else 1


def cmd_gram(args) -> int:
    cfg = _config_from(args)
    beta = _ints(args.degree)
    datum = cfg.datum()
    if len(beta) != datum.n or min(beta) < 0:
        raise UsageError(f"degree needs {datum.n} nonnegative entries")
    if sum(beta) > suites.MAX_DEPTH:
        raise UsageError(f"degree height {sum(beta)} exceeds the bound {suites.MAX_DEPTH}; refused")
    B = Borel(datum)
    g = B.gram(beta)

    def w(x):
        return [i + 1 for i in x]

    db = B.dual_bases(beta) if any(beta) else None
    out = {
        "degree": list(beta),
        "rows": [w(x) for x in g.rows],
        "cols": [w(x) for x in g.cols],
        "matrix": [[str(x) for x in row] for row in g.matrix],
        "rank": g.rank,
    }
    if db is not None:
        out["dual_bases"] = {
            "u": [w(x) for x in db.u_words],
            "v_words": [w(x) for x in db.v_words],
            "v_coeffs": [[str(c) for c in row] for row in db.coeffs],
        }
    _emit(out, cfg.out)
    return 0


def cmd_twist(args) -> int:
    cfg = _config_from(args)
    cfg.suites = ["twist"]
    return cmd_check_cfg(cfg)


def cmd_module(args) -> int:
    cfg = _config_from(args)
    datum = cfg.datum()
    lam = _ints(args.highest)
    if len(lam) != datum.n:
        raise UsageError(f"highest weight needs {datum.n} entries")
    M = highest_weight_module(datum, lam)
    _emit(M.to_json(), cfg.out)
    return 0


def _modules(datum, specs):
    out = []
    for s in specs:
        lam = _ints(s)
        if len(lam) != datum.n:
            raise UsageError(f"highest weight {s!r} needs {datum.n} entries")
        out.append(highest_weight_module(datum, lam))
    return out


def _backend(cfg, modules):
    from .repmod import SYMBOLIC, backend_for
    if cfg.backend in ("symbolic", "exact"):
        return SYMBOLIC
    return backend_for(modules, cfg.seed)


def cmd_rmatrix(args) -> int:
    cfg = _config_from(args)
    datum = cfg.datum()
    mods = _modules(datum, args.modules)
    if len(mods) != 2:
        raise UsageError("rmatrix needs exactly two --modules")
    b = _backend(cfg, mods)
    R = braiding(mods[0], mods[1], b)
    bad = intertwiner_check(mods[0], mods[1], b)
    _emit({"modules": args.modules, "backend": b.name, "seed": b.seed,
           "matrix": [[str(x) for x in row] for row in R], "intertwiner": not bad, "failing": bad}, cfg.out)
    return 0 if not bad else 1


def cmd_qybe(args) -> int:
    cfg = _config_from(args)
    datum = cfg.datum()
    specs = args.m or ["1"] * 3
    mods = _modules(datum, specs)
    if len(mods) != 3:
        raise UsageError("qybe needs three modules")
    b = _backend(cfg, mods)
    start = time.perf_counter()
    ok = qybe_check(*mods, b)
    _emit({"modules": specs, "backend": b.name, "seed": b.seed,
           "assignment": None if b.assignment is None else {k: str(v) for k, v in b.assignment.items()},
           "holds": ok, "elapsed_ms": _ms(start)}, cfg.out)
    return 0 if ok else 1


def cmd_explain(args) -> int:
    try:
        print(suites.explain(args.name))
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    return 0


# ------------------------------------------------------------------ parser

def _common(p):
    p.add_argument("--type", help="preset Cartan type (A1, A2, B2, C2, G2, A1xA1)")
    p.add_argument("--cartan", help="Cartan datum JSON file")
    p.add_argument("--depth", type=int, help="degree/depth bound")
    p.add_argument("--backend", help="symbolic (alias exact) or specialized")
    p.add_argument("--seed", type=int, help="seed for specialized assignments")
    p.add_argument("--out", help="write JSON here instead of standard output")
    p.add_argument("--config", help="JSON config file; its keys override flags")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mpqg", description="Multi-parameter quantum group checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run verification suites")
    _common(p)
    p.add_argument("--suite", help="comma-separated suites: " + ", ".join(suites.SUITES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("shuffle", help="quantum shuffle products")
    p.add_argument("action", choices=["eval", "serre-check"])
    _common(p)
    p.add_argument("--left", help="first word, 1-based letters, comma separated")
    p.add_argument("--right", help="second word")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("gram", help="pairing matrix and dual bases of one degree")
    _common(p)
    p.add_argument("--degree", required=True, help="degree vector, comma separated")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("twist", help="cocycle twist relation suite")
    p.add_argument("action", choices=["check"])
    _common(p)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("module", help="highest-weight modules")
    p.add_argument("action", choices=["build"])
    _common(p)
    p.add_argument("--highest", required=True, help="highest weight in fundamental coordinates")
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("rmatrix", help="braiding of two highest-weight modules")
    _common(p)
    p.add_argument("--modules", nargs=2, required=True, metavar="WEIGHT")
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("qybe", help="braid relation on a triple tensor product")
    _common(p)
    p.add_argument("--m", nargs=3, metavar="WEIGHT", help="three highest weights")
    p.set_defaults(func=cmd_qybe)

    p = sub.add_parser("explain", help="describe a check")
    p.add_argument("name")
    p.set_defaults(func=cmd_explain)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        ap.error(str(exc))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
