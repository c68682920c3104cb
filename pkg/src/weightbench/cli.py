"""Command-line front end: loads inputs, dispatches to the library and writes JSON reports.

Exit codes: 0 all checks hold, 1 a checked equality failed, 2 input error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .alperin import check_alperin, check_equivariant
from .chains import (DEFAULT_CHAIN_CAP, alternating_sum_report, enumerate_dade_chains,
                     pair_chains, regular_chain_enumeration)
from .errors import CapExceeded, WeightbenchError
from .fusion import normalizer_radicals_check, p_subgroup_classes, validate_frobenius_axioms
from .kstarcyclic import (CyclicData, generator_orbits, is_reduced, fixed_rank_sweep,
                          orbit_ideal_fixed_dim, parse_spec_text, compare_fixed_ranks)
from .permgroup import DEFAULT_ELEMENT_CAP, check_prime, load_automorphism, load_group

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
CORPUS_PRIMES = (2, 3, 5, 7)
COMMANDS = ("fusion", "chains", "cancel-verify", "alperin-check", "equivariant-check",
            "cyclic-lemma", "corpus-sweep")


@dataclass
class RunConfig:
    command: str
    groups: list = field(default_factory=list)
    prime: int | None = None
    auto: str | None = None
    cap_elements: int = DEFAULT_ELEMENT_CAP
    cap_chains: int = DEFAULT_CHAIN_CAP
    output: str | None = None
    jobs: int = 1
    corpus_dir: str | None = None
    order: int | None = None
    exhaustive: bool = False
    spec: str | None = None
    timing: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.prime is not None:
            check_prime(self.prime)
        if self.cap_elements < 1 or self.cap_chains < 1 or self.jobs < 1:
            raise ValueError("caps and job counts must be positive")


def default_corpus_dir():
    return Path(__file__).resolve().parent / "corpus"


def corpus_dir(config=None):
    if config is not None and config.corpus_dir:
        return Path(config.corpus_dir)
    env = os.environ.get("WEIGHTBENCH_CORPUS")
    return Path(env) if env else default_corpus_dir()


def resolve_input(name, config=None):
    """A path as given, or the same name looked up in the corpus directory."""
    path = Path(name)
    if path.is_file():
        return path
    base = corpus_dir(config)
    for cand in (base / path.name, base / f"{path.name}.grp"):
        if cand.is_file():
            return cand
    raise FileNotFoundError(f"no such input file: {name}")


def _digest(paths, extra):
    h = hashlib.sha256()
    for p in paths:
        h.update(Path(p).read_bytes())
    h.update(json.dumps(extra, sort_keys=True).encode())
    return h.hexdigest()


def _group_id(path):
    return Path(path).stem


def _need_prime(config):
    if config.prime is None:
        raise ValueError(f"{config.command} needs -p/--prime")
    return config.prime


def _load(config):
    if len(config.groups) != 1:
        raise ValueError(f"{config.command} takes exactly one group file")
    path = resolve_input(config.groups[0], config)
    return path, load_group(path, cap=config.cap_elements)


# -- per-command payloads ------------------------------------------------------

def fusion_payload(group, p):
    F = p_subgroup_classes(group, p)
    axioms = validate_frobenius_axioms(group, p)
    return {"fusion": F.to_json(), "axioms": axioms}, axioms["passed"]


def chains_payload(group, p, cap):
    F = p_subgroup_classes(group, p)
    enum = regular_chain_enumeration(F, True, cap)
    dade = enumerate_dade_chains(group, p, cap)
    return {"prime": p,
            "centric_chains": [c.to_json() for c in enum.classes],
            "dade_chains": [{"orders": c.representative.orders(), "length": c.length,
                             "normalizer_order": c.normalizer.order} for c in dade]}, True


def cancel_payload(group, p, cap):
    sums = alternating_sum_report(group, p, cap)
    F = p_subgroup_classes(group, p)
    pairings = {mode: pair_chains(F, mode, cap) for mode in ("tau", "varpi")}
    normal = normalizer_radicals_check(group, p)
    ok = sums["all_equal"] and all(r.ok for r in pairings.values()) and normal["passed"]
    return {"alternating_sums": sums,
            "pairings": {k: v.to_json() for k, v in pairings.items()},
            "normalizer_radicals": normal}, ok


def alperin_payload(group, p, gid):
    rep = check_alperin(group, p, gid)
    return rep.to_json(), rep.equal


def equivariant_payload(group, p, auto, gid):
    rep = check_equivariant(group, p, auto, gid)
    return rep.to_json(), rep.equal


def cyclic_payload(config):
    p = config.prime
    if config.order is None:
        raise ValueError("cyclic-lemma needs -m")
    m = config.order
    if config.spec:
        text = Path(config.spec).read_text(encoding="utf-8")
        A = CyclicData(m, p)
        C, C2 = parse_spec_text(text, m)
        res = compare_fixed_ranks(A, C, C2)
        ideals = []
        for name, gens in (("C", C), ("C'", C2)):
            if not is_reduced(A, gens):
                continue
            for orb in generator_orbits(A, gens):
                ideals.append({"subgroup": name, "orbit": orb,
                               "dim": orbit_ideal_fixed_dim(A, gens, orb)})
        res["orbit_ideals"] = ideals
        res["C"] = [list(s.key()) for s in C]
        res["C_prime"] = [list(s.key()) for s in C2]
        return {"m": m, "prime": p, "pair": res}, res["equal"]
    orders = range(1, m + 1) if config.exhaustive else [m]
    sweeps = [fixed_rank_sweep(n, p) for n in orders if p is None or n % p]
    ok = all(s["all_equal"] and s["orbit_ideals_dim_one"] for s in sweeps)
    return {"max_order": m, "prime": p, "exhaustive": config.exhaustive, "sweeps": sweeps,
            "all_equal": all(s["all_equal"] for s in sweeps),
            "residual_all_equal": all(s["residual_all_equal"] for s in sweeps),
            "orbit_ideals_dim_one": all(s["orbit_ideals_dim_one"] for s in sweeps)}, ok


# -- corpus sweep --------------------------------------------------------------

def corpus_jobs(base):
    jobs = []
    for path in sorted(Path(base).glob("*.grp")):
        jobs.append(str(path))
    return jobs


def _sweep_one(args):
    path, cap_elements, cap_chains = args
    G = load_group(path, cap=cap_elements)
    gid = _group_id(path)
    out = []
    for p in CORPUS_PRIMES:
        if G.order % p:
            continue
        alp, ok1 = alperin_payload(G, p, gid)
        can, ok2 = cancel_payload(G, p, cap_chains)
        out.append({"group": gid, "prime": p, "order": G.order, "alperin": alp,
                    "cancel_verify": can, "passed": ok1 and ok2})
    return out


def corpus_sweep_payload(config):
    base = corpus_dir(config)
    paths = corpus_jobs(base)
    if not paths:
        raise FileNotFoundError(f"no group files in {base}")
    args = [(p, config.cap_elements, config.cap_chains) for p in paths]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_sweep_one, args))
    else:
        results = [_sweep_one(a) for a in args]
    entries = sorted((e for chunk in results for e in chunk),
                     key=lambda e: (e["group"], e["prime"]))
    failed = [f"{e['group']}/p={e['prime']}" for e in entries if not e["passed"]]
    summary = {"pairs": len(entries), "failed": failed}
    return {"entries": entries, "summary": summary}, not failed, paths


# -- driver --------------------------------------------------------------------

def run(config):
    """Execute one command; returns (report dict, exit code)."""
    start = time.perf_counter()
    inputs = []
    if config.command == "cyclic-lemma":
        payload, ok = cyclic_payload(config)
        if config.spec:
            inputs.append(config.spec)
    elif config.command == "corpus-sweep":
        payload, ok, inputs = corpus_sweep_payload(config)
    else:
        path, G = _load(config)
        inputs.append(path)
        gid = _group_id(path)
        p = _need_prime(config)
        if config.command == "fusion":
            payload, ok = fusion_payload(G, p)
        elif config.command == "chains":
            payload, ok = chains_payload(G, p, config.cap_chains)
        elif config.command == "cancel-verify":
            payload, ok = cancel_payload(G, p, config.cap_chains)
        elif config.command == "alperin-check":
            payload, ok = alperin_payload(G, p, gid)
        else:
            if not config.auto:
                raise ValueError("equivariant-check needs --auto")
            auto_path = resolve_input(config.auto, config)
            inputs.append(auto_path)
            payload, ok = equivariant_payload(G, p, load_automorphism(auto_path, G), gid)
    params = {"command": config.command, "prime": config.prime, "order": config.order,
              "exhaustive": config.exhaustive, "cap_elements": config.cap_elements,
              "cap_chains": config.cap_chains}
    report = {"tool": "weightbench", "version": __version__, "command": config.command,
              "input_digest": _digest(inputs, params), "payload": payload,
              "status": "pass" if ok else "fail"}
    if config.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 3)
    return report, EXIT_OK if ok else EXIT_FAIL


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def build_parser():
    ap = argparse.ArgumentParser(prog="weightbench",
                                 description="Weight-count and fusion checks on finite permutation groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", "--prime", type=int)
    common.add_argument("--cap-elements", type=int, default=DEFAULT_ELEMENT_CAP)
    common.add_argument("--cap-chains", type=int, default=DEFAULT_CHAIN_CAP)
    common.add_argument("-o", "--output")
    common.add_argument("--corpus-dir")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("fusion", "chains", "cancel-verify", "alperin-check"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("group")
    sp = sub.add_parser("equivariant-check", parents=[common])
    sp.add_argument("group")
    sp.add_argument("--auto", required=True)
    sp = sub.add_parser("cyclic-lemma", parents=[common])
    sp.add_argument("-m", "--order", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="sweep every order up to -m")
    mode.add_argument("--spec", help="file with lines 'C t,u ...' and \"C' t,u ...\"")
    sp = sub.add_parser("corpus-sweep", parents=[common])
    sp.add_argument("--jobs", type=int, default=1)
    return ap


def config_from_args(ns):
    return RunConfig(command=ns.command,
                     groups=[ns.group] if getattr(ns, "group", None) else [],
                     prime=ns.prime, auto=getattr(ns, "auto", None),
                     cap_elements=ns.cap_elements, cap_chains=ns.cap_chains,
                     output=ns.output, jobs=getattr(ns, "jobs", 1),
                     corpus_dir=ns.corpus_dir, order=getattr(ns, "order", None),
                     exhaustive=getattr(ns, "exhaustive", False),
                     spec=getattr(ns, "spec", None), timing=ns.timing)


def main(argv=None):
    ns = build_parser().parse_args(argv)
    try:
        config = config_from_args(ns)
        report, code = run(config)
    except CapExceeded as exc:
        print(f"weightbench: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (WeightbenchError, ValueError, OSError) as exc:
        print(f"weightbench: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = dumps(report)
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
