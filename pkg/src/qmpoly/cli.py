"""Command-line interface.

Input files are JSON lines.  Each line describes one code:

    {"p": 2, "e": 1, "q": 2, "m": 3, "n": 2,
     "generators": [[[row], ...], ...], "label": "optional"}

A file with several code lines is a flag, outermost code first.  A line
with "kind": "table" instead carries a rank table in lattice order:

    {"kind": "table", "p": 2, "e": 1, "n": 2, "m": 2, "values": [...]}

Exit codes: 0 all good, 1 a checked property is violated, 2 input
error, 3 a resource guard was exceeded.  The default lattice guard can
be overridden with the QMPOLY_MAX_LATTICE environment variable or the
--max-lattice flag.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .delsarte import (DelsarteCode, anticode_weights, gabidulin,
                       random_code, random_subcode, support_space,
                       to_polymatroid)
from .errors import GuardExceeded
from .field import GF, field, is_prime
from .flags import Flag, NestingError, flag_polymatroid, verify_flag_duality
from .lattice import DEFAULT_SUBSPACE_GUARD, Subspace, enumerate_subspaces
from .matrix import Matrix
from .polymatroid import (PolymatroidTable, check_axioms,
                          generalized_weights, nullity_profiles,
                          wei_duality_report, weight_witnesses)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

SCHEMA = "qmpoly.report/1"
GUARD_ENV = "QMPOLY_MAX_LATTICE"


class InputError(ValueError):
    """Malformed input file or parameters; maps to exit code 2."""


# -- file format -------------------------------------------------------


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise InputError(f"field order {q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    e = 0
    rem = q
    while rem % p == 0:
        rem //= p
        e += 1
    if rem != 1:
        raise InputError(f"field order {q} is not a prime power")
    return p, e


def code_to_obj(code: DelsarteCode, label: str | None = None) -> dict:
    obj = {
        "p": code.field.p,
        "e": code.field.e,
        "q": code.field.q,
        "m": code.nrows,
        "n": code.ncols,
        "generators": [[list(row) for row in g.rows] for g in code.generators],
    }
    if label is not None:
        obj["label"] = label
    return obj


def dump_code_lines(codes, labels=None) -> str:
    labels = labels or [None] * len(codes)
    return "".join(json.dumps(code_to_obj(c, l)) + "\n"
                   for c, l in zip(codes, labels))


def _require(obj: dict, key: str, kind) -> object:
    if key not in obj:
        raise InputError(f"missing field '{key}'")
    val = obj[key]
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise InputError(f"field '{key}' must be an integer")
    if kind is list and not isinstance(val, list):
        raise InputError(f"field '{key}' must be a list")
    return val


def parse_field(obj: dict) -> GF:
    p = _require(obj, "p", int)
    e = _require(obj, "e", int)
    if not is_prime(p):
        raise InputError(f"field 'p': {p} is not prime")
    if e < 1:
        raise InputError(f"field 'e': {e} must be >= 1")
    f = field(p, e)
    if "q" in obj and obj["q"] != f.q:
        raise InputError(f"field 'q': {obj['q']} does not equal p^e = {f.q}")
    return f


def parse_code_obj(obj: dict) -> tuple[DelsarteCode, str | None]:
    f = parse_field(obj)
    m = _require(obj, "m", int)
    n = _require(obj, "n", int)
    if m < 1 or n < 1:
        raise InputError("fields 'm' and 'n' must be >= 1")
    gens_raw = _require(obj, "generators", list)
    if len(gens_raw) > m * n:
        raise InputError(
            f"field 'generators': {len(gens_raw)} generators exceed m*n = {m * n}")
    gens = []
    for gi, g in enumerate(gens_raw):
        if not (isinstance(g, list) and len(g) == m
                and all(isinstance(r, list) and len(r) == n for r in g)):
            raise InputError(f"field 'generators[{gi}]': expected an {m}x{n} matrix")
        for row in g:
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < f.q:
                    raise InputError(
                        f"field 'generators[{gi}]': entry {v!r} outside GF({f.q})")
        gens.append(Matrix(f, g, n))
    try:
        code = DelsarteCode.from_generators(f, m, n, gens)
    except ValueError as exc:
        raise InputError(f"field 'generators': {exc}") from None
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise InputError("field 'label' must be a string")
    return code, label


def parse_table_obj(obj: dict, guard: int) -> PolymatroidTable:
    f = parse_field(obj)
    n = _require(obj, "n", int)
    m = _require(obj, "m", int)
    values = _require(obj, "values", list)
    lat = enumerate_subspaces(f, n, guard)
    if len(values) != len(lat):
        raise InputError(
            f"field 'values': {len(values)} entries for a lattice of {len(lat)}")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise InputError("field 'values' must hold integers")
    return PolymatroidTable(lat, m, values)


def load_input(path: str, guard: int):
    """Returns ("code", code, label), ("flag", flag, labels) or
    ("table", table, None)."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if not lines:
        raise InputError(f"{path} is empty")
    objs = []
    for i, ln in enumerate(lines):
        try:
            objs.append(json.loads(ln))
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{i + 1}: invalid JSON ({exc})") from None
    if any(o.get("kind") == "table" for o in objs):
        if len(objs) != 1:
            raise InputError("a table file holds exactly one line")
        return "table", parse_table_obj(objs[0], guard), None
    parsed = [parse_code_obj(o) for o in objs]
    if len(parsed) == 1:
        code, label = parsed[0]
        return "code", code, label
    try:
        flag = Flag([c for c, _ in parsed])
    except NestingError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return "flag", flag, [l for _, l in parsed]


# -- reports -----------------------------------------------------------


def _subspace_rows(lat, idx: int) -> list[list[int]]:
    return [list(r) for r in lat.members[idx].basis.rows]


def _wei_obj(report) -> dict:
    return {
        "residues": [
            {
                "s": r.residue,
                "dual_side": sorted(r.dual_side),
                "primal_side": sorted(r.primal_side),
                "partition_ok": r.partition_ok,
            }
            for r in report.residues
        ],
        "partition_ok": report.partition_ok,
        "disjoint_ok": report.disjoint_ok,
        "monotone_gaps_ok": report.monotone_gaps_ok,
    }


def _axiom_obj(report, lat) -> dict:
    def check(c):
        out = {"ok": c.ok}
        if c.witness is not None:
            out["witness"] = [_subspace_rows(lat, i) for i in c.witness]
        if c.note:
            out["note"] = c.note
        return out

    return {
        "r1": check(report.r1),
        "r2": check(report.r2),
        "r3": check(report.r3),
        "r4": check(report.r4),
        "verdict": report.verdict.value,
    }


def build_report(kind: str, obj, label, table: PolymatroidTable,
                 want_anticode: bool) -> dict:
    lat = table.lattice
    weights = generalized_weights(table)
    dual_weights = generalized_weights(table.dual())
    profiles = nullity_profiles(table)
    axioms = check_axioms(table)
    wei = wei_duality_report(table)
    witnesses = [_subspace_rows(lat, i) for i in weight_witnesses(table)]
    report = {
        "schema": SCHEMA,
        "input": {
            "kind": kind,
            "q": lat.field.q,
            "p": lat.field.p,
            "e": lat.field.e,
            "m": table.m,
            "n": lat.n,
            "label": label,
        },
        "K": table.rank,
        "weights": list(weights.values),
        "dual_weights": list(dual_weights.values),
    }
    if want_anticode:
        report["a_weights"] = list(anticode_weights(obj).values)
    report["h"] = list(profiles.nullity)
    report["hstar"] = list(profiles.conullity)
    report["axioms"] = _axiom_obj(axioms, lat)
    report["wei"] = _wei_obj(wei)
    report["witnesses"] = witnesses
    return report


def _print_text_report(rep: dict, out) -> None:
    info = rep["input"]
    print(f"{info['kind']} over GF({info['q']}), shape {info['m']}x{info['n']}"
          + (f", label {info['label']}" if info.get("label") else ""), file=out)
    print(f"K = {rep['K']}", file=out)
    print("weights:      " + " ".join(map(str, rep["weights"])), file=out)
    print("dual weights: " + " ".join(map(str, rep["dual_weights"])), file=out)
    if "a_weights" in rep:
        print("anticode weights: " + " ".join(map(str, rep["a_weights"])), file=out)
    print("h:     " + " ".join(map(str, rep["h"])), file=out)
    print("hstar: " + " ".join(map(str, rep["hstar"])), file=out)
    print(f"axioms: {rep['axioms']['verdict']}"
          f" (r1={rep['axioms']['r1']['ok']} r2={rep['axioms']['r2']['ok']}"
          f" r3={rep['axioms']['r3']['ok']} r4={rep['axioms']['r4']['ok']})",
          file=out)
    for r in rep["wei"]["residues"]:
        print(f"wei s={r['s']}: dual {r['dual_side']} | primal {r['primal_side']}"
              f" partition_ok={r['partition_ok']}", file=out)
    print(f"wei: partition_ok={rep['wei']['partition_ok']}"
          f" disjoint_ok={rep['wei']['disjoint_ok']}"
          f" monotone_gaps_ok={rep['wei']['monotone_gaps_ok']}", file=out)


# -- commands ----------------------------------------------------------


def cmd_weights(args) -> int:
    guard = args.max_lattice
    kind, obj, label = load_input(args.input, guard)
    if kind == "table":
        table = obj
        if args.anticode:
            raise InputError("--anticode applies to codes, not tables")
    elif kind == "code":
        if obj.dim == 0:
            raise InputError("empty code has no weights")
        lat = enumerate_subspaces(obj.field, obj.ncols, guard)
        table = to_polymatroid(obj, lat)
    else:
        if args.anticode:
            raise InputError("--anticode applies to codes, not flags")
        if obj.rank == 0:
            raise InputError("rank-zero flag has no weights")
        lat = enumerate_subspaces(obj.field, obj.shape[1], guard)
        table = flag_polymatroid(obj, lat)
    if isinstance(label, list):
        label = ", ".join(l for l in label if l) or None
    rep = build_report(kind, obj, label, table, args.anticode)
    if args.format == "json":
        print(json.dumps(rep))
    else:
        _print_text_report(rep, sys.stdout)
    return EXIT_OK


def _verify_one(kind: str, obj, table, checks: list[str], guard: int,
                failures: list[dict], infos: list[str]) -> None:
    lat = table.lattice
    if "axioms" in checks:
        rep = check_axioms(table)
        need_r3 = kind == "code"
        ok = rep.r1.ok and rep.r2.ok and rep.r4.ok and (rep.r3.ok or not need_r3)
        if not ok:
            bad = next(name for name, c in
                       [("r1", rep.r1), ("r2", rep.r2), ("r4", rep.r4)]
                       + ([("r3", rep.r3)] if need_r3 else [])
                       if not c.ok)
            check = getattr(rep, bad)
            failures.append({
                "check": "axioms",
                "axiom": bad,
                "verdict": rep.verdict.value,
                "witness": [_subspace_rows(lat, i) for i in check.witness],
            })
        else:
            infos.append(f"axioms: {rep.verdict.value}")
            if not rep.r3.ok:
                infos.append(
                    "axioms: R3 fails (informational), witness indices "
                    f"{rep.r3.witness}")
    if "wei" in checks:
        try:
            wei = wei_duality_report(table)
        except ValueError as exc:
            failures.append({"check": "wei", "error": str(exc)})
        else:
            if wei.partition_ok and wei.disjoint_ok and wei.monotone_gaps_ok:
                infos.append("wei: partition, disjointness and gaps hold")
            else:
                failures.append({"check": "wei", **_wei_obj(wei)})
        prof = nullity_profiles(table)
        n, m, k = lat.n, table.m, table.rank
        identity_ok = all(
            prof.conullity[x] == prof.nullity[n - x] - m * (n - x) + k
            for x in range(n + 1))
        if identity_ok:
            infos.append("wei: nullity/conullity profile identity holds")
        else:
            failures.append({"check": "wei",
                             "error": "profile identity violated",
                             "h": list(prof.nullity),
                             "hstar": list(prof.conullity)})
    if "flag-duality" in checks:
        flag = obj if kind == "flag" else (Flag((obj,)) if kind == "code" else None)
        if flag is None:
            infos.append("flag-duality: not applicable to tables")
        else:
            fd = verify_flag_duality(flag, lat)
            if fd.ok:
                infos.append(
                    f"flag-duality: {fd.expected} identity holds (length {fd.length})")
            else:
                failures.append({
                    "check": "flag-duality",
                    "expected": fd.expected,
                    "first_mismatch": _subspace_rows(lat, fd.first_mismatch),
                })


def _random_flag(f: GF, m: int, n: int, length: int,
                 rng: random.Random) -> Flag:
    dims = sorted(rng.sample(range(m * n + 1), length), reverse=True)
    codes = [random_code(f, m, n, dims[0], rng)]
    for d in dims[1:]:
        codes.append(random_subcode(codes[-1], d, rng))
    return Flag(codes)


def cmd_verify(args) -> int:
    guard = args.max_lattice
    checks = [name for name, on in
              [("axioms", args.axioms), ("wei", args.wei),
               ("flag-duality", args.flag_duality)] if on]
    if not checks:
        checks = ["axioms", "wei", "flag-duality"]
    failures: list[dict] = []
    infos: list[str] = []

    if args.input is not None:
        kind, obj, _ = load_input(args.input, guard)
        if kind == "table":
            table = obj
        elif kind == "code":
            table = to_polymatroid(
                obj, enumerate_subspaces(obj.field, obj.ncols, guard))
        else:
            table = flag_polymatroid(
                obj, enumerate_subspaces(obj.field, obj.shape[1], guard))
        _verify_one(kind, obj, table, checks, guard, failures, infos)
    else:
        rng = random.Random(args.seed)
        shapes = [(2, 2), (3, 2), (2, 3)]
        f = field(2)
        for t in range(args.trials):
            m, n = shapes[t % len(shapes)]
            lat = enumerate_subspaces(f, n, guard)
            k = rng.randrange(1, m * n)
            code = random_code(f, m, n, k, rng)
            _verify_one("code", code, to_polymatroid(code, lat),
                        [c for c in checks if c != "flag-duality"], guard,
                        failures, infos)
            if "flag-duality" in checks or "wei" in checks:
                flag = _random_flag(f, m, n, 2 + t % 2, rng)
                table = flag_polymatroid(flag, lat)
                _verify_one("flag", flag, table, checks, guard,
                            failures, infos)
        infos.append(f"suite: {args.trials} trials, seed {args.seed}")

    out = {"schema": SCHEMA, "checks": checks,
           "ok": not failures, "failures": failures, "info": infos}
    if args.format == "json":
        print(json.dumps(out))
    else:
        for line in infos:
            print(line)
        for fail in failures:
            print("VIOLATION: " + json.dumps(fail))
        print("ok" if not failures else "FAILED")
    return EXIT_OK if not failures else EXIT_VIOLATION


def _parse_row(text: str, n: int, q: int) -> list[int]:
    try:
        row = [int(v) for v in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"cannot parse basis row {text!r}") from None
    if len(row) != n:
        raise InputError(f"basis row {text!r} does not have {n} entries")
    if any(not 0 <= v < q for v in row):
        raise InputError(f"basis row {text!r} has entries outside GF({q})")
    return row


def cmd_gen(args) -> int:
    params = args.params
    rng = random.Random(args.seed)

    def take_ints(count, names):
        if len(params) < count:
            raise InputError(
                f"{args.kind} needs parameters: {' '.join(names)}")
        try:
            return [int(v) for v in params[:count]]
        except ValueError:
            raise InputError(f"{args.kind} parameters must be integers") from None

    if args.kind == "gabidulin":
        q, m, n, k = take_ints(4, ["q", "m", "n", "k"])
        p, e = _factor_prime_power(q)
        try:
            code = gabidulin(field(p, e), m, n, k)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        label = f"gabidulin-q{q}-m{m}-n{n}-k{k}"
    elif args.kind == "uniform-support":
        q, m, n = take_ints(3, ["q", "m", "n"])
        p, e = _factor_prime_power(q)
        f = field(p, e)
        rows = [_parse_row(t, n, q) for t in params[3:]]
        if not rows:
            raise InputError("uniform-support needs at least one basis row")
        x = Subspace(f, n, rows)
        code = support_space(x, m)
        label = f"uniform-support-q{q}-m{m}-n{n}-dim{x.dim}"
    elif args.kind == "random":
        q, m, n, k = take_ints(4, ["q", "m", "n", "K"])
        p, e = _factor_prime_power(q)
        if not 0 <= k <= m * n:
            raise InputError(f"dimension K={k} outside 0..{m * n}")
        code = random_code(field(p, e), m, n, k, rng)
        label = f"random-q{q}-m{m}-n{n}-K{k}-seed{args.seed}"
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown generator kind {args.kind}")

    text = dump_code_lines([code], [label])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- entry point -------------------------------------------------------


def _default_guard() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return DEFAULT_SUBSPACE_GUARD
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{GUARD_ENV}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmpoly",
        description="Generalized weights and duality checks for rank-metric "
                    "codes, flags of codes, and subspace rank tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    pw = sub.add_parser("weights", help="weight profile and duality report")
    pw.add_argument("input", help="code, flag or table file (JSON lines)")
    pw.add_argument("--format", choices=["text", "json"], default="text")
    pw.add_argument("--anticode", action="store_true",
                    help="also report anticode-based weights")
    pw.add_argument("--max-lattice", type=int, default=None)
    pw.set_defaults(fn=cmd_weights)

    pv = sub.add_parser("verify", help="check axioms and duality theorems")
    pv.add_argument("input", nargs="?", default=None,
                    help="input file; omit to run a random suite")
    pv.add_argument("--axioms", action="store_true")
    pv.add_argument("--wei", action="store_true")
    pv.add_argument("--flag-duality", action="store_true")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--trials", type=int, default=20)
    pv.add_argument("--format", choices=["text", "json"], default="text")
    pv.add_argument("--max-lattice", type=int, default=None)
    pv.set_defaults(fn=cmd_verify)

    pg = sub.add_parser("gen", help="generate a code file")
    pg.add_argument("kind", choices=["gabidulin", "uniform-support", "random"])
    pg.add_argument("params", nargs="*",
                    help="gabidulin: q m n k | uniform-support: q m n row... "
                         "| random: q m n K")
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--out", default=None)
    pg.set_defaults(fn=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "max_lattice", None) is None and hasattr(args, "max_lattice"):
            args.max_lattice = _default_guard()
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


def run() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    run()
