"""Command-line entry point: ``zeta compute | verify | scan | catalog``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .enumeration import BudgetExhausted, count
from .ffield import NotPrimeError, check_prime, primes_in_range
from .liealg import CatalogError, LieRing, ParseError, catalog, catalog_entries, load_ring
from .zeta import FLAVORS, DomainError, InsufficientSamples, ZetaPoly, closed_form, uniformity_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunRecord:
    ring: str
    params: dict
    p: int
    flavor: str
    method: str
    coefficients: list
    meta: dict = field(default_factory=dict)

    def to_dict(self, with_meta: bool = True) -> dict:
        d = {
            "ring": self.ring,
            "params": dict(sorted(self.params.items())),
            "p": self.p,
            "flavor": self.flavor,
            "method": self.method,
            "coefficients": list(self.coefficients),
        }
        if with_meta:
            d["meta"] = {"elapsed_ms": self.meta.get("elapsed_ms", 0), "nodes": self.meta.get("nodes", 0)}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "RunRecord":
        return cls(d["ring"], dict(d["params"]), d["p"], d["flavor"], d["method"], list(d["coefficients"]),
                   dict(d.get("meta", {})))

    def to_json(self, with_meta: bool = True) -> str:
        return json.dumps(self.to_dict(with_meta))


# --------------------------------------------------------------------------
# argument helpers


def parse_params(items) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise UsageError(f"malformed --param {item!r}; expected key=value")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer, got {val!r}") from None
    return out


def parse_primes(spec: str) -> list[int]:
    """``a:b`` for every prime in [a, b], or a comma-separated list of primes."""
    spec = spec.strip()
    if ":" in spec:
        lo, _, hi = spec.partition(":")
        try:
            a, b = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"malformed prime range {spec!r}") from None
        if a > b:
            raise UsageError(f"empty prime range {spec!r}")
        return primes_in_range(a, b)
    out = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            q = int(tok)
        except ValueError:
            raise UsageError(f"malformed prime {tok!r}") from None
        out.append(check_prime(q))
    if not out:
        raise UsageError("no primes given")
    return sorted(set(out))


def resolve_ring(name: str, params: dict) -> LieRing:
    path = Path(name)
    if path.suffix or os.sep in name or path.is_file():
        if not path.is_file():
            raise UsageError(f"ring file {name!r} not found")
        if params:
            raise UsageError("--param applies to catalog rings only")
        return load_ring(path)
    return catalog(name, **params)


def compute_record(ring_name: str, params: dict, p: int, flavor: str, method: str = "auto",
                   budget: int | None = None) -> RunRecord:
    ring = resolve_ring(ring_name, params)
    t0 = time.perf_counter()
    res = count(ring, p, flavor, method=method, budget=budget)
    ms = int((time.perf_counter() - t0) * 1000)
    return RunRecord(ring_name, params, p, flavor, res.method, list(res.poly.coefficients),
                     {"elapsed_ms": ms, "nodes": res.nodes})


# --------------------------------------------------------------------------
# subcommands


def cmd_compute(args) -> int:
    params = parse_params(args.param)
    p = check_prime(args.prime)
    rec = compute_record(args.ring, params, p, args.flavor, args.method, args.budget)
    if args.format == "json":
        print(rec.to_json(with_meta=not args.no_meta))
    else:
        print(ZetaPoly(rec.p, rec.flavor, rec.coefficients).text())
    return EXIT_OK


@dataclass(frozen=True)
class Case:
    ring: str
    params: tuple
    flavor: str
    oracle: str  # closed-form name, or "brute" to compare against plain enumeration
    oracle_params: tuple
    primes: tuple
    method: str = "auto"

    @property
    def params_dict(self):
        return dict(self.params)


def _c(ring, params, flavor, oracle, oparams, primes, method="auto"):
    return Case(ring, tuple(sorted(params.items())), flavor, oracle, tuple(sorted(oparams.items())),
                tuple(primes), method)


SUITES: dict[str, list[Case]] = {
    "heisenberg": [
        _c("heisenberg", {}, "ideal", "H_ideal", {}, (2, 3, 5, 7, 11), "brute"),
        _c("heisenberg", {}, "sub", "H_sub", {}, (2, 3, 5, 7, 11), "brute"),
    ],
    "mc-ideal": [_c("M", {"c": c}, "ideal", "Mc_ideal", {"c": c}, (2, 3, 5)) for c in (2, 3, 4, 5)],
    "mc-sub": [_c("M", {"c": c}, "sub", "Mc_sub", {"c": c}, (2, 3)) for c in (2, 3, 4)],
    "fil4": [
        _c("fil4", {}, "ideal", "fil4_ideal", {}, (2, 3, 5)),
        _c("M", {"c": 4}, "ideal", "fil4_ideal", {}, (2, 3, 5)),
    ],
    "free-nilpotent": [
        _c("f", {"c": 2, "d": 2}, "ideal", "fc2_ideal", {"c": 2}, (2, 3, 5)),
        _c("f", {"c": 3, "d": 2}, "ideal", "fc2_ideal", {"c": 3}, (2, 3, 5)),
        _c("f", {"c": 4, "d": 2}, "ideal", "fc2_ideal", {"c": 4}, (2,)),
    ],
    "class2": [
        _c(r, prm, "ideal", "brute", {}, (2, 3, 5), "class2")
        for r, prm in (("heisenberg", {}), ("f", {"c": 2, "d": 2}), ("f", {"c": 2, "d": 3}),
                       ("grenham", {"n": 3}), ("H_m", {"m": 2}), ("g64", {}))
    ],
    "f2d": [_c("f", {"c": 2, "d": d}, "ideal", "f2d_ideal", {"d": d}, (2, 3, 5), "class2") for d in (2, 3, 4)],
    "grenham": [_c("grenham", {"n": n}, "ideal", "grenham_ideal", {"n": n}, (2, 3, 5), "class2") for n in (2, 3, 4)],
    "LE": [_c("L_E", {}, "ideal", "LE_ideal", {}, (3, 5, 7, 11, 13), "class2")],
    "Lnp8": [_c("L_np8", {}, "ideal", "Lnp8_ideal", {}, (5, 7, 11, 13, 31), "class2")],
    "vl": [_c("vl", {"a": a, "b": b}, "ideal", "vl_ideal", {"a": a, "b": b}, (5, 7), "brute")
           for a, b in ((1, 1), (1, 0), (0, 0))],
    "sl2": [_c("sl2", {}, "sub", "sl2_sub", {}, (5, 7, 11), "brute")],
    "trn": [_c("tr", {"n": n}, "ideal", "trn_ideal", {"n": n}, (2, 3, 5), "brute") for n in (1, 2, 3)],
    "graded-mc": [_c("M", {"c": c}, "graded-ideal", "graded_Mc", {"c": c}, (2, 3, 5), "brute") for c in (2, 3, 4, 5)],
    "other": [
        _c("H_m", {"m": 1}, "ideal", "Hm_ideal", {"m": 1}, (2, 3, 5)),
        _c("H_m", {"m": 2}, "ideal", "Hm_ideal", {"m": 2}, (2, 3, 5)),
        _c("g53", {}, "ideal", "g53_ideal", {}, (2, 3, 5)),
        _c("g64", {}, "ideal", "g64_ideal", {}, (2, 3, 5)),
    ],
}


def golden_dir() -> Path:
    return Path(str(resources.files("fpzeta") / "golden"))


def _golden_key(rec: dict) -> str:
    params = ",".join(f"{k}={v}" for k, v in sorted(rec["params"].items()))
    return f"{rec['ring']}[{params}]/{rec['flavor']}/p={rec['p']}"


def load_golden(suite: str, directory: Path | None = None) -> dict[str, list[int]] | None:
    path = (directory or golden_dir()) / f"{suite}.json"
    if not path.is_file():
        return None
    data = json.loads(path.read_text())
    return {_golden_key(r): r["coefficients"] for r in data}


def write_golden(suite: str, records: list[RunRecord], directory: Path | None = None) -> Path:
    directory = directory or golden_dir()
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{suite}.json"
    payload = [r.to_dict(with_meta=False) for r in records]
    path.write_text(json.dumps(payload, indent=1) + "\n")
    return path


def _oracle(case: Case, p: int, rec: RunRecord) -> tuple[list[int] | None, str]:
    if case.oracle == "brute":
        res = count(resolve_ring(case.ring, case.params_dict), p, case.flavor, method="brute")
        return list(res.poly.coefficients), "brute"
    try:
        return list(closed_form(case.oracle, p, **dict(case.oracle_params)).coefficients), case.oracle
    except DomainError as exc:
        return None, f"{case.oracle}: {exc}"


def run_suite(name: str, primes: list[int] | None = None, regen: bool = False,
              golden: Path | None = None, out=None) -> bool:
    out = out or sys.stdout
    cases = SUITES[name]
    expected = {} if regen else load_golden(name, golden)
    ok_all = True
    if not regen and expected is None:
        print(f"FAIL {name}: no golden file in {golden or golden_dir()}", file=out)
        expected, ok_all = {}, False
    records = []
    for case in cases:
        for p in primes or case.primes:
            rec = compute_record(case.ring, case.params_dict, p, case.flavor, case.method)
            records.append(rec)
            want, source = _oracle(case, p, rec)
            label = f"{name:15s} {case.ring}{case.params_dict or ''} {case.flavor} p={p} [{rec.method}]"
            if want is None:
                print(f"SKIP {label}: {source}", file=out)
                continue
            problems = []
            if rec.coefficients != want:
                problems.append(f"enumeration {rec.coefficients} != {source} {want}")
            gold = expected.get(_golden_key(rec.to_dict(False)))
            if gold is not None and gold != rec.coefficients:
                problems.append(f"enumeration {rec.coefficients} != golden {gold}")
            if problems:
                ok_all = False
                print(f"FAIL {label}: " + "; ".join(problems), file=out)
            else:
                print(f"PASS {label}", file=out)
    if regen:
        path = write_golden(name, records, golden)
        print(f"wrote {path}", file=out)
    return ok_all


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    primes = parse_primes(args.primes) if args.primes else None
    golden = Path(args.golden_dir) if args.golden_dir else None
    ok = True
    for name in names:
        ok &= run_suite(name, primes, regen=args.regen_golden, golden=golden)
    print("all suites passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_MISMATCH


def _scan_one(job):
    ring_name, params, p, flavor, method, budget = job
    return compute_record(ring_name, params, p, flavor, method, budget)


def scan_threads(njobs: int) -> int:
    env = os.environ.get("ZETA_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            cap = max(1, int(env))
        except ValueError:
            raise UsageError(f"ZETA_THREADS must be an integer, got {env!r}") from None
    return max(1, min(cap, njobs))


def cmd_scan(args) -> int:
    params = parse_params(args.param)
    primes = parse_primes(args.primes)
    resolve_ring(args.ring, params)  # fail fast on bad ring or params
    jobs = [(args.ring, params, p, args.flavor, args.method, args.budget) for p in primes]
    nw = scan_threads(len(jobs))
    if nw == 1:
        recs = [_scan_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=nw) as ex:
            recs = list(ex.map(_scan_one, jobs))
    polys = [ZetaPoly(r.p, r.flavor, r.coefficients) for r in recs]
    report = uniformity_report(args.ring, params, args.flavor, polys, args.degree, args.modulus)
    print(json.dumps(report.to_dict(), indent=None if args.compact else 1))
    return EXIT_OK


def cmd_catalog(args) -> int:
    rows = []
    for e in catalog_entries():
        try:
            sample = catalog(e.name, **dict(e.defaults))
            dim, grading = sample.dim, sample.grading
        except CatalogError:
            dim, grading = None, None
        rows.append({
            "name": e.name,
            "aliases": list(e.aliases),
            "params": list(e.params),
            "ranges": e.ranges,
            "example_params": dict(e.defaults),
            "dim": dim,
            "grading": list(grading) if grading else None,
            "description": e.description,
        })
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for r in rows:
            prm = ",".join(r["params"]) or "-"
            shown = ",".join(f"{k}={v}" for k, v in r["example_params"].items())
            dim = f"dim {r['dim']}" + (f" at {shown}" if shown else "")
            grading = f" grading {r['grading']}" if r["grading"] else ""
            rng = f" ({r['ranges']})" if r["ranges"] else ""
            print(f"{r['name']:12s} params {prm}{rng}; {dim}{grading}; {r['description']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zeta", description="Zeta polynomials of Lie rings over F_p.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_ring(sp):
        sp.add_argument("--ring", required=True, help="catalog name or path to a ring file")
        sp.add_argument("--param", action="append", metavar="K=V", help="catalog parameter (repeatable)")
        sp.add_argument("--flavor", choices=FLAVORS, default="ideal")
        sp.add_argument("--method", choices=("auto", "brute", "class2"), default="auto")
        sp.add_argument("--budget", type=int, default=None, help="node limit; exceeding it exits with 3")

    c = sub.add_parser("compute", help="zeta polynomial at one prime")
    add_ring(c)
    c.add_argument("--prime", type=int, required=True)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("--no-meta", action="store_true", help="omit timing and node counts")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="compare enumeration with closed forms")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--primes", help="override the suite primes: a:b or p1,p2,...")
    v.add_argument("--golden-dir", help="directory with golden JSON files")
    v.add_argument("--regen-golden", action="store_true", help="rewrite golden files from this run")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="fit coefficients across primes")
    add_ring(s)
    s.add_argument("--primes", required=True, help="a:b or p1,p2,...")
    s.add_argument("--degree", type=int, default=4, help="degree bound D")
    s.add_argument("--modulus", type=int, default=None, help="fit per residue class mod N")
    s.add_argument("--compact", action="store_true", help="single-line JSON")
    s.set_defaults(func=cmd_scan)

    k = sub.add_parser("catalog", help="list catalog rings")
    k.add_argument("--format", choices=("json", "text"), default="text")
    k.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, NotPrimeError, ParseError, CatalogError, DomainError, InsufficientSamples,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
