"""Command line interface for the property suites and instance checks.

Subcommands:

* selfcheck: run every suite with one configuration.
* suite <name>: run a single suite, optionally replaying one trial.
* theorem / pairing / tau / ext: operate on a JSON instance file.
* gen: emit random instances as JSON for later replay.

Exit codes: 0 all checks passed, 1 a property was violated, 2 bad input
or usage.  Machine-readable reports (--json) are byte-identical across
identical invocations; wall times go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .arpairing import (
    pairing_gram,
    pairing_prime,
    pairing_prime_fast,
    sign_calibration,
    verify_tau_invariance,
)
from .artranslate import tau_inverse_rep, tau_rep
from .exactmat import parse_field
from .harness import GenConfig, SUITES, SuiteReport, gen_instance, load_instance, run_suite
from .repcat import PreconditionError, ext1_space, hom_dim


def _add_config_flags(p: argparse.ArgumentParser, with_trials: bool = True):
    p.add_argument("--field", default="fp:10007",
                   help="coefficient field: q or fp:<prime> (default fp:10007)")
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    if with_trials:
        p.add_argument("--trials", type=int, default=500,
                       help="number of trials (default 500)")
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--max-arrows", type=int, default=8)
    p.add_argument("--max-dim", type=int, default=5)


def _config(args: argparse.Namespace) -> GenConfig:
    return GenConfig(
        seed=args.seed,
        max_vertices=args.max_vertices,
        max_arrows=args.max_arrows,
        max_dim=args.max_dim,
        field=parse_field(args.field),
        trials=getattr(args, "trials", 500),
    )


def _dump_json(payload, path: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")


def _read_instance(path: str) -> dict:
    with open(path) as fh:
        return load_instance(json.load(fh))


def _emit_replay_file(report: SuiteReport):
    name = f"arquiver-counterexample-{report.suite}.json"
    with open(name, "w") as fh:
        fh.write(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    print(f"counterexample written to {name}", file=sys.stderr)


def _cmd_selfcheck(args) -> int:
    cfg = _config(args)
    reports = []
    ok = True
    for name in SUITES:
        start = time.perf_counter()
        rep = run_suite(name, cfg, jobs=args.jobs)
        print(rep.summary_line())
        print(f"# {name}: {time.perf_counter() - start:.1f}s", file=sys.stderr)
        reports.append(rep)
        if not rep.ok:
            ok = False
            _emit_replay_file(rep)
    if args.json:
        _dump_json({"ok": ok, "suites": [r.to_json() for r in reports]},
                   args.json)
    return 0 if ok else 1


def _cmd_suite(args) -> int:
    cfg = _config(args)
    if args.name not in SUITES:
        print(f"error: unknown suite {args.name!r}; choose from "
              f"{', '.join(SUITES)}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    rep = run_suite(args.name, cfg, jobs=args.jobs, only_trial=args.trial)
    print(rep.summary_line())
    print(f"# {args.name}: {time.perf_counter() - start:.1f}s", file=sys.stderr)
    if not rep.ok:
        _emit_replay_file(rep)
    if args.json:
        _dump_json(rep.to_json(), args.json)
    return 0 if rep.ok else 1


def _cmd_theorem(args) -> int:
    inst = _read_instance(args.instance)
    fs = inst["field"]
    report = verify_tau_invariance(inst["z"], inst["f"])
    payload = report.to_json(fs)
    print(f"lhs {payload['lhs']}  rhs {payload['rhs']}  "
          f"{'ok' if report.equal else 'VIOLATED'}")
    if args.json:
        _dump_json(payload, args.json)
    return 0 if report.equal else 1


def _cmd_pairing(args) -> int:
    inst = _read_instance(args.instance)
    fs = inst["field"]
    z, f = inst["z"], inst["f"]
    reference = pairing_prime(z, f)
    fast = pairing_prime_fast(z, f)
    payload = {
        "reference": fs.format(reference),
        "fast": fs.format(fast),
        "equal": reference == fast,
        "calibration": sign_calibration().to_json(),
    }
    print(f"reference {payload['reference']}  fast {payload['fast']}  "
          f"{'ok' if payload['equal'] else 'VIOLATED'}")
    if args.json:
        _dump_json(payload, args.json)
    return 0 if payload["equal"] else 1


def _cmd_tau(args) -> int:
    inst = _read_instance(args.instance)
    payload = {}
    for key in ("x", "y"):
        if key not in inst:
            continue
        rep = inst[key]
        payload[key] = {
            "dims": list(rep.dims),
            "tau_dims": list(tau_rep(rep).dims),
            "tau_inverse_dims": list(tau_inverse_rep(rep).dims),
        }
    if not payload:
        print("error: instance has no reps under keys x or y", file=sys.stderr)
        return 2
    for key, info in payload.items():
        print(f"{key}: dims {info['dims']}  tau {info['tau_dims']}  "
              f"tau^- {info['tau_inverse_dims']}")
    if args.json:
        _dump_json(payload, args.json)
    return 0


def _cmd_ext(args) -> int:
    inst = _read_instance(args.instance)
    if "x" not in inst or "y" not in inst:
        print("error: instance must contain reps x and y", file=sys.stderr)
        return 2
    x, y = inst["x"], inst["y"]
    gram = pairing_gram(x, y)
    payload = {
        "ext_dim": ext1_space(x, y).dim,
        "hom_from_translate": hom_dim(tau_inverse_rep(y), x),
        "hom_into_translate": hom_dim(y, tau_rep(x)),
        "gram": gram.to_json(),
    }
    print(f"dim Ext^1 {payload['ext_dim']}  "
          f"dim Hom(tau^- y, x) {payload['hom_from_translate']}  "
          f"dim Hom(y, tau x) {payload['hom_into_translate']}  "
          f"gram rank {payload['gram']['rank']}")
    if args.json:
        _dump_json(payload, args.json)
    return 0


def _cmd_gen(args) -> int:
    cfg = _config(args)
    out = []
    for trial in range(cfg.trials):
        inst = gen_instance(cfg, trial)
        if inst is not None:
            out.append(inst)
    _dump_json(out, args.json)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arquiver",
        description="Exact randomized checks of translate and pairing "
                    "identities for representations of acyclic quivers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("selfcheck", help="run every suite")
    _add_config_flags(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="write the machine-readable report here")
    p.set_defaults(fn=_cmd_selfcheck)

    p = sub.add_parser("suite", help="run one suite")
    p.add_argument("name", help="suite name: " + ", ".join(SUITES))
    _add_config_flags(p)
    p.add_argument("--trial", type=int, default=None,
                   help="replay a single trial index")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="write the machine-readable report here")
    p.set_defaults(fn=_cmd_suite)

    for name, helptext in (
            ("theorem", "check translate invariance of the pairing on one instance"),
            ("pairing", "evaluate the pairing on one instance, both routes"),
            ("tau", "translate dimension vectors of the reps in an instance"),
            ("ext", "Ext dimension and pairing Gram data for (x, y)")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("instance", help="JSON instance file")
        p.add_argument("--json", help="write the machine-readable report here")
        p.set_defaults(fn={"theorem": _cmd_theorem, "pairing": _cmd_pairing,
                           "tau": _cmd_tau, "ext": _cmd_ext}[name])

    p = sub.add_parser("gen", help="emit random instances as JSON")
    _add_config_flags(p)
    p.add_argument("--json", help="write the instances here instead of stdout")
    p.set_defaults(fn=_cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except PreconditionError as exc:
        print(f"error: instance violates a precondition: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
