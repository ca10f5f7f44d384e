"""Command-line entry point.

Every command prints (or writes) one JSON document with a top-level
``"schema": 1``.  Exit codes: 0 when every requested check passes, 1 when a
check fails (the first counterexample is in the output), 2 for usage errors.

Options may also come from ``--config FILE`` holding a JSON object or
``key=value`` lines; flags given on the command line take precedence.  When
``--output`` is absent and ``TETRA3D_OUT_DIR`` is set, output goes to a file
in that directory.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Callable, Sequence

from . import qgroup, reduction, spectral
from .fock import parse_index
from .reports import Report
from .threedim_r import (LINEAR_LEMMAS, QUADRATIC_LEMMAS, RECURSIONS, check_aq_intertwiner,
                         check_boundary_eigen, check_involution, check_symmetries,
                         check_tetrahedron, r_element, sweep)

SCHEMA = 1
OUT_DIR_ENV = "TETRA3D_OUT_DIR"

CATALOG: dict[str, str] = {
    "tetrahedron": "tetrahedron equation R124 R135 R236 R456 = R456 R236 R135 R124",
    "involution": "R is its own inverse",
    "symmetries": "index reversal and Pochhammer-weighted transpose of R",
    "boundary": "boundary vectors are fixed by R (ket and bra forms)",
    **{f"recursion-{k}": f"difference relation {k} of the R elements" for k in RECURSIONS},
    **{f"lemma-{k}": f"linear identity {k} among R elements" for k in LINEAR_LEMMAS},
    **{f"lemma-{k}": f"quadratic identity {k} among R elements" for k in QUADRATIC_LEMMAS},
    "intertwiner-aq": "R intertwines the A_q(sl_3) representations pi_121 and pi_212",
    "ybe": "Yang-Baxter equation for S^{s,t}(z)",
    "reversal": "S^{t,s}(z) in terms of S^{s,t}(z^{s/t}) with reversed labels",
    "relations": "defining relations of the quantum affine algebra on the Fock module",
    "theorem": "S^{s,t}(z) equals the gauge-transformed quantum R matrix",
    "str": "trace reduction S^tr(z) intertwines the A^{(1)}_{n-1} coproduct",
    "spectral-D2": "P R(z) eigenvalues prod (z + q^j)/(1 + q^j z) for D^{(2)}_{n+1}",
    "spectral-A2": "P R(z) eigenvalues prod (z -+ i q^{j-1/2})/(1 -+ i q^{j-1/2} z) for A^{(2)}_{2n}",
    "spectral-C1": "P R(z) eigenvalues for C^{(1)}_n, even and odd parity blocks",
    "singular": "singular vectors found by elimination equal the closed forms",
}


def list_suites() -> dict[str, str]:
    return dict(CATALOG)


# -- argument parsing -------------------------------------------------------------------


class UsageError(Exception):
    pass


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected s,t but got {text!r}")
    s, t = (int(p) for p in parts)
    return s, t


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _index(text: str) -> tuple[int, ...]:
    try:
        return parse_index(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parity(text: str) -> tuple[int, int]:
    signs = {"+": 1, "-": -1, "1": 1, "-1": -1}
    parts = text.split(",")
    if len(parts) != 2 or any(p not in signs for p in parts):
        raise argparse.ArgumentTypeError(f"expected a parity block like +,- but got {text!r}")
    return signs[parts[0]], signs[parts[1]]


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", help="write the result to this file instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=_nonneg, default=os.cpu_count() or 1,
                   help="worker processes for independent sub-checks")
    p.add_argument("--config", help="JSON or key=value file with default options")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tetra3d", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("relem", help="one element of the 3d R")
    p.add_argument("--idx", type=_index, required=True, help="a,b,c,i,j,k")
    _common(p)

    for name in ("selem", "strelem"):
        p = sub.add_parser(name, help=f"one element of {'S^{s,t}' if name == 'selem' else 'S^tr'}")
        if name == "selem":
            p.add_argument("--pair", type=_pair, default=(1, 1), help="s,t")
            p.add_argument("--raw", action="store_true", help="omit the normalization factor")
        p.add_argument("--a", type=_index, required=True)
        p.add_argument("--b", type=_index, required=True)
        p.add_argument("--i", type=_index, required=True)
        p.add_argument("--j", type=_index, required=True)
        p.add_argument("--order", type=_nonneg, default=8)
        _common(p)

    p = sub.add_parser("smatrix", help="all elements of S^{s,t} on a sector")
    p.add_argument("--pair", type=_pair, default=(1, 1))
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--degree", type=_nonneg, default=2)
    p.add_argument("--order", type=_nonneg, default=6)
    p.add_argument("--parity", type=_parity)
    p.add_argument("--raw", action="store_true")
    _common(p)

    p = sub.add_parser("spectral", help="eigenvalue of P R(z) on one singular vector")
    p.add_argument("--alg", choices=("D2", "A2", "C1"), required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--l", type=_nonneg, default=1)
    p.add_argument("--eps", type=int, choices=(1, -1), default=1)
    p.add_argument("--order", type=_nonneg, default=6)
    _common(p)

    p = sub.add_parser("list-suites", help="catalog of verification suites")
    _common(p)

    verify = sub.add_parser("verify", help="run a verification suite")
    vsub = verify.add_subparsers(dest="suite", required=True)

    p = vsub.add_parser("tetrahedron")
    p.add_argument("--max", type=_nonneg, default=2, help="largest level of each leg")
    _common(p)
    p = vsub.add_parser("involution")
    p.add_argument("--bound", type=_nonneg, default=4)
    _common(p)
    p = vsub.add_parser("symmetries")
    p.add_argument("--bound", type=_nonneg, default=4)
    _common(p)
    p = vsub.add_parser("boundary")
    p.add_argument("--kind", type=int, choices=(1, 2), action="append")
    p.add_argument("--side", choices=("ket", "bra"), action="append")
    p.add_argument("--degree", type=_nonneg, default=6)
    _common(p)
    p = vsub.add_parser("recursions")
    p.add_argument("--bound", type=_nonneg, default=3)
    p.add_argument("--convention", choices=("formula", "zero"), default="formula")
    _common(p)
    p = vsub.add_parser("lemmas")
    p.add_argument("--bound", type=_nonneg, default=4)
    p.add_argument("--quadratic-bound", type=_nonneg, default=2)
    p.add_argument("--only", action="append", help="restrict to these identity ids")
    p.add_argument("--convention", choices=("formula", "zero"), default="formula")
    _common(p)
    p = vsub.add_parser("intertwiner-aq")
    p.add_argument("--degree", type=_nonneg, default=3)
    _common(p)
    p = vsub.add_parser("ybe")
    p.add_argument("--pair", type=_pair, default=(1, 1))
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--degree", type=_nonneg, default=2)
    p.add_argument("--order", type=_nonneg, default=6)
    p.add_argument("--parity", type=_parity)
    _common(p)
    p = vsub.add_parser("reversal")
    p.add_argument("--pair", type=_pair, default=(1, 2), help="s,t: S^{t,s} against S^{s,t}")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--degree", type=_nonneg, default=2)
    p.add_argument("--order", type=_nonneg, default=8)
    _common(p)
    p = vsub.add_parser("relations")
    p.add_argument("--alg", choices=qgroup.ALGEBRAS, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--cutoff", type=_nonneg, default=None,
                   help="largest weight reached (default: 6 plus the margin)")
    p.add_argument("--margin", type=_nonneg, default=None)
    _common(p)
    p = vsub.add_parser("theorem")
    p.add_argument("--pair", type=_pair, default=(1, 1))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--degree", type=_nonneg, default=2)
    p.add_argument("--order", type=_nonneg, default=6)
    _common(p)
    p = vsub.add_parser("str")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-weight", type=_nonneg, default=2)
    p.add_argument("--order", type=_nonneg, default=6)
    p.add_argument("--ybe", action="store_true", help="also run the Yang-Baxter equation")
    _common(p)
    p = vsub.add_parser("spectral")
    p.add_argument("--alg", choices=("D2", "A2", "C1"), action="append")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--max-l", type=_nonneg, default=3)
    p.add_argument("--order", type=_nonneg, default=6)
    _common(p)
    return parser


# -- config handling ---------------------------------------------------------------------


def load_config(path: str) -> dict:
    text = Path(path).read_text()
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if not isinstance(data, dict):
            raise UsageError("config JSON must be an object")
        return data
    data = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"config line without '=': {line!r}")
        key, value = line.split("=", 1)
        data[key.strip()] = value.strip()
    return data


def _config_tokens(config: dict) -> list[str]:
    tokens = []
    for key, value in config.items():
        if key == "command":
            continue
        flag = "--" + key.replace("_", "-")
        values = value if isinstance(value, list) else [value]
        for v in values:
            if v is True or (isinstance(v, str) and v.lower() == "true"):
                tokens.append(flag)
            elif v is False or (isinstance(v, str) and v.lower() == "false"):
                continue
            else:
                if isinstance(v, (list, tuple)):
                    v = ",".join(str(x) for x in v)
                tokens += [flag, str(v)]
    return tokens


def expand_argv(argv: Sequence[str]) -> list[str]:
    """Splice ``--config`` contents in before the explicit flags."""
    argv = list(argv)
    if "--config" not in argv:
        return argv
    pos = argv.index("--config")
    if pos + 1 >= len(argv):
        raise UsageError("--config needs a file name")
    config = load_config(argv[pos + 1])
    rest = argv[:pos] + argv[pos + 2:]
    head = []
    while rest and not rest[0].startswith("-"):
        head.append(rest.pop(0))
    if not head:
        command = config.get("command")
        if not command:
            raise UsageError("no command given on the command line or in the config")
        head = command.split() if isinstance(command, str) else list(command)
    return head + _config_tokens(config) + rest


# -- commands ------------------------------------------------------------------------------


def _run_tasks(tasks: list[Callable[[], Report]], jobs: int) -> list[Report]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            futures = [pool.submit(t) for t in tasks]
            return [f.result() for f in futures]
    return [t() for t in tasks]


def _suite_tasks(args) -> tuple[dict, list[Callable[[], Report]]]:
    s = args.suite
    if s == "tetrahedron":
        return {"max": args.max}, [partial(check_tetrahedron, None, args.max)]
    if s == "involution":
        return {"bound": args.bound}, [partial(check_involution, args.bound)]
    if s == "symmetries":
        return {"bound": args.bound}, [partial(check_symmetries, args.bound)]
    if s == "boundary":
        kinds = args.kind or [1, 2]
        sides = args.side or ["ket", "bra"]
        return ({"kinds": kinds, "sides": sides, "degree": args.degree},
                [partial(check_boundary_eigen, k, side, args.degree) for k in kinds for side in sides])
    if s == "recursions":
        return ({"bound": args.bound, "convention": args.convention},
                [partial(sweep, rid, args.bound, args.convention) for rid in RECURSIONS])
    if s == "lemmas":
        ids = args.only or list(LINEAR_LEMMAS) + list(QUADRATIC_LEMMAS)
        unknown = [i for i in ids if i not in LINEAR_LEMMAS and i not in QUADRATIC_LEMMAS]
        if unknown:
            raise UsageError(f"unknown identity ids {unknown}")
        tasks = [partial(sweep, rid, args.quadratic_bound if rid in QUADRATIC_LEMMAS else args.bound,
                         args.convention) for rid in ids]
        return {"ids": ids, "bound": args.bound, "quadratic_bound": args.quadratic_bound,
                "convention": args.convention}, tasks
    if s == "intertwiner-aq":
        return {"degree": args.degree}, [partial(check_aq_intertwiner, None, args.degree)]
    if s == "ybe":
        spec = reduction.SSpec(*args.pair, args.n, args.order, args.parity)
        return ({"pair": list(args.pair), "n": args.n, "degree": args.degree, "order": args.order},
                [partial(reduction.check_ybe, spec, args.degree, args.order)])
    if s == "reversal":
        s_, t_ = args.pair
        return ({"pair": list(args.pair), "n": args.n, "degree": args.degree, "order": args.order},
                [partial(reduction.check_reversal, s_, t_, args.n, args.degree, args.order)])
    if s == "relations":
        spec = qgroup.AlgebraSpec(args.alg, args.n)
        margin = qgroup.relation_margin(spec) if args.margin is None else args.margin
        cutoff = 6 + margin if args.cutoff is None else args.cutoff
        return ({"alg": args.alg, "n": args.n, "cutoff": cutoff, "margin": margin},
                [partial(qgroup.check_defining_relations, spec, cutoff, margin)])
    if s == "theorem":
        spec = reduction.SSpec(*args.pair, args.n)
        return ({"pair": list(args.pair), "n": args.n, "degree": args.degree, "order": args.order},
                [partial(qgroup.check_theorem_main, spec, args.degree, args.order)])
    if s == "str":
        tasks = [partial(qgroup.check_str_intertwining, args.n, args.max_weight, args.order)]
        if args.ybe:
            tasks.append(partial(reduction.check_str_ybe, args.n, args.max_weight, args.order))
        return {"n": args.n, "max_weight": args.max_weight, "order": args.order}, tasks
    if s == "spectral":
        algs = args.alg or ["D2", "A2", "C1"]
        pairs = {v: k for k, v in qgroup.PAIRING.items()}
        tasks = []
        for alg in algs:
            sspec = reduction.SSpec(*pairs[alg], args.n)
            for l, eps in spectral.spectral_labels(alg, args.max_l, args.n):
                tasks.append(partial(spectral.check_spectral, sspec, alg, l, eps, args.order))
        return {"algs": algs, "n": args.n, "max_l": args.max_l, "order": args.order}, tasks
    raise UsageError(f"unknown suite {s!r}")


def cmd_verify(args) -> tuple[dict, bool, list[list]]:
    params, tasks = _suite_tasks(args)
    top = Report(args.suite, params)
    for rep in _run_tasks(tasks, args.jobs):
        top.merge(rep)
    doc = {"schema": SCHEMA, "command": "verify", "suite": args.suite, "pass": top.passed,
           "report": top.to_json()}
    rows = [["check", "pass", "cases", "failures"]]
    rows += [[d["id"], d["pass"], d["cases"], d["failures"]] for d in top.details]
    return doc, top.passed, rows


def _series_rows(prefix: list, series) -> list[list]:
    return [prefix + [e[0] if len(e) == 1 else list(e), str(c)] for e, c in series.items()]


def cmd_relem(args) -> tuple[dict, bool, list[list]]:
    if len(args.idx) != 6:
        raise UsageError("--idx needs six integers a,b,c,i,j,k")
    value = r_element(*args.idx)
    doc = {"schema": SCHEMA, "command": "relem", "index": list(args.idx),
           "value": value.to_json(), "text": str(value)}
    return doc, True, [["index", "value"], [",".join(map(str, args.idx)), str(value)]]


def cmd_selem(args) -> tuple[dict, bool, list[list]]:
    n = len(args.a)
    if args.command == "selem":
        spec = reduction.SSpec(*args.pair, n, args.order)
        elem = reduction.s_element(spec, args.a, args.b, args.i, args.j, args.raw)
        value, extra = elem.value, {"pair": list(args.pair), "raw": args.raw}
    else:
        value = reduction.str_element(n, args.a, args.b, args.i, args.j, args.order)
        extra = {}
    doc = {"schema": SCHEMA, "command": args.command, **extra,
           "out": [list(args.a), list(args.b)], "in": [list(args.i), list(args.j)],
           "order": args.order, "value": value.to_json(), "text": repr(value)}
    return doc, True, [["exponent", "coefficient"]] + _series_rows([], value)


def cmd_smatrix(args) -> tuple[dict, bool, list[list]]:
    spec = reduction.SSpec(*args.pair, args.n, args.order, args.parity)
    elems = reduction.s_elements_for_sector(spec, args.degree, args.raw)
    doc = {"schema": SCHEMA, "command": "smatrix", "pair": list(args.pair), "n": args.n,
           "degree": args.degree, "order": args.order,
           "parity": list(args.parity) if args.parity else None, "raw": args.raw,
           "elements": [e.to_json() for e in elems]}
    rows = [["a", "b", "i", "j", "exponent", "coefficient"]]
    for e in elems:
        key = [",".join(map(str, x)) for x in e.out_pair + e.in_pair]
        rows += _series_rows(key, e.value)
    return doc, True, rows


def cmd_spectral(args) -> tuple[dict, bool, list[list]]:
    pairs = {v: k for k, v in qgroup.PAIRING.items()}
    sspec = reduction.SSpec(*pairs[args.alg], args.n)
    rep = spectral.check_spectral(sspec, args.alg, args.l, args.eps, args.order)
    rho = spectral.eigenvalue_product(args.alg, args.l, args.eps, args.order)
    doc = {"schema": SCHEMA, "command": "spectral", "alg": args.alg, "n": args.n,
           "label": {"l": args.l, "eps": args.eps}, "order": args.order,
           "eigenvalue": rho.to_json(), "pass": rep.passed, "report": rep.to_json()}
    return doc, rep.passed, [["exponent", "coefficient"]] + _series_rows([], rho)


def cmd_list_suites(args) -> tuple[dict, bool, list[list]]:
    cat = list_suites()
    return ({"schema": SCHEMA, "command": "list-suites", "suites": cat}, True,
            [["suite", "checks"]] + [[k, v] for k, v in cat.items()])


COMMANDS = {"relem": cmd_relem, "selem": cmd_selem, "strelem": cmd_selem, "smatrix": cmd_smatrix,
            "spectral": cmd_spectral, "list-suites": cmd_list_suites, "verify": cmd_verify}


def _render(doc: dict, rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _destination(args) -> Path | None:
    if args.output:
        return Path(args.output)
    out_dir = os.environ.get(OUT_DIR_ENV)
    if out_dir:
        name = args.command + (f"-{args.suite}" if args.command == "verify" else "")
        return Path(out_dir) / f"{name}.{args.format}"
    return None


def run(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        argv = expand_argv(argv)
    except (UsageError, OSError, json.JSONDecodeError) as exc:
        print(f"tetra3d: error: {exc}", file=sys.stderr)
        return 2
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        doc, ok, rows = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"tetra3d: error: {exc}", file=sys.stderr)
        return 2
    text = _render(doc, rows, args.format)
    dest = _destination(args)
    if dest is None:
        sys.stdout.write(text)
    else:
        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_text(text)
        print(f"{'PASS' if ok else 'FAIL'} {dest}")
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
