"""Command-line front end.

Verbs: gen, verify, effectiveness, lexcheck, info, orbits.  Outputs are
canonical JSON (sorted keys), so identical inputs and seeds produce
byte-identical files.  Exit codes: 0 success, 1 failed audit/agreement,
2 bad input, 3 cap exceeded, 4 construction/strategy rejection, 5 golden
mismatch.  See docs/formats.md for the file formats.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audit, bitcube, lexmax
from .cones import irredundant_core
from .constructions import (CanonicalBasis, Explicit, KUniversal, PerOrbitWeights,
                            dirichlet_domain, gdd, ssp, ssp_reduced)
from .errors import (CapExceeded, InputError, NontrivialStabilizer,
                     StrategyExhausted)
from .formats import (cut_lines, dump_json, load_group, parse_vector,
                      system_json, vector_json)
from .groups import DEFAULT_ENUM_CAP
from .sampling import grid_vector, trial_rng

EXIT_OK = 0
EXIT_AUDIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3
EXIT_CONSTRUCTION = 4
EXIT_GOLDEN_MISMATCH = 5

CONSTRUCTIONS = ("dirichlet", "ssp", "ssp-reduced", "gdd")


def _parse_strategy(spec: str):
    if spec == "canonical":
        return CanonicalBasis()
    if spec.startswith("orbit-weights:"):
        return PerOrbitWeights(int(spec.split(":", 1)[1]))
    if spec.startswith("k-universal:"):
        return KUniversal(int(spec.split(":", 1)[1]))
    if spec.startswith("file:"):
        path = spec.split(":", 1)[1]
        try:
            with open(path) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError("cannot read gamma file %s: %s" % (path, exc)) from None
        if not isinstance(doc, list):
            raise InputError("gamma file must hold a JSON list of vectors")
        return Explicit([parse_vector(v) for v in doc])
    raise InputError(
        "unknown gamma spec %r (use canonical, orbit-weights:<base>, "
        "k-universal:<k>, or file:<path>)" % spec
    )


def _build(group, construction: str, gamma_spec: str | None, enum_cap: int):
    if construction == "dirichlet":
        strategy = _parse_strategy(gamma_spec or "k-universal:2")
        vectors = strategy.candidates(group)
        if len(vectors) != 1:
            raise InputError("dirichlet needs exactly one gamma vector, got %d"
                             % len(vectors))
        return dirichlet_domain(group, vectors[0], enum_cap)
    if construction == "ssp":
        return ssp(group)
    if construction == "ssp-reduced":
        return ssp_reduced(group)
    if construction == "gdd":
        strategy = _parse_strategy(gamma_spec or "orbit-weights:2")
        return gdd(group, strategy, enum_cap)
    raise InputError("unknown construction %r" % construction)


def _write(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_info(args) -> int:
    group = load_group(args.group)
    chain = group.chain
    doc = {
        "degree": group.degree,
        "order": group.order(),
        "orbits": [[p + 1 for p in orbit] for orbit in group.index_orbits()],
        "generators": [g.cycle_string() for g in group.generators],
        "chain": {
            "base": [b + 1 for b in chain.base],
            "transversal_sizes": chain.transversal_sizes(),
        },
    }
    _write(dump_json(doc), args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    group = load_group(args.group)
    system = _build(group, args.construction, args.gamma, args.enum_cap)
    if args.irredundant:
        system = irredundant_core(system)
    payload = dump_json(system_json(system))
    _write(payload, args.output)
    if args.cuts:
        _write(cut_lines(system), args.cuts)
    if args.check_golden:
        try:
            with open(args.check_golden) as fh:
                golden = fh.read()
        except OSError as exc:
            raise InputError("cannot read golden file: %s" % exc) from None
        if golden != payload:
            sys.stderr.write("golden mismatch against %s\n" % args.check_golden)
            return EXIT_GOLDEN_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    group = load_group(args.group)
    system = _build(group, args.construction, args.gamma, args.enum_cap)
    report = audit.verify_fundamental_domain(
        group, system, trials=args.trials, seed=args.seed,
        binary_cap=args.binary_cap, enum_cap=args.enum_cap,
    )
    doc = report.to_dict()
    doc["construction"] = args.construction
    doc["inequalities"] = len(system)
    _write(dump_json(doc), args.output)
    return EXIT_OK if report.ok else EXIT_AUDIT_FAILED


def cmd_effectiveness(args) -> int:
    group = load_group(args.group)
    system = _build(group, args.construction, args.gamma, args.enum_cap)
    report = audit.effectiveness(group, system, n_cap=args.n_cap)
    doc = report.to_dict()
    doc["construction"] = args.construction
    doc["inequalities"] = len(system)
    doc["backend"] = bitcube.backend_name()
    _write(dump_json(doc), args.output)
    return EXIT_OK


def cmd_lexcheck(args) -> int:
    group = load_group(args.group)
    n = group.degree
    ssp_system = ssp(group)
    if args.vectors:
        try:
            with open(args.vectors) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError("cannot read vector file %s: %s" % (args.vectors, exc)) from None
        if not isinstance(doc, list):
            raise InputError("vector file must hold a JSON list of vectors")
        vectors = [parse_vector(v, n) for v in doc]
    else:
        vectors = [grid_vector(trial_rng(args.seed, t), n) for t in range(args.samples)]
    results = []
    all_agree = True
    for vec in vectors:
        in_closure = lexmax.in_closure_lex(group, vec, args.orbit_cap)
        ssp_member = ssp_system.weakly_contains(vec)
        agree = in_closure == ssp_member
        all_agree = all_agree and agree
        results.append({
            "vector": vector_json(vec),
            "in_lex": lexmax.in_lex(group, vec, args.orbit_cap),
            "in_closure": in_closure,
            "lex_max": vector_json(lexmax.lex_max_in_orbit(group, vec, args.orbit_cap)),
            "ssp_member": ssp_member,
            "agree": agree,
        })
    doc = {
        "results": results,
        "all_agree": all_agree,
        "seed": None if args.vectors else args.seed,
        "lex_closed": lexmax.is_lex_closed(group),
    }
    _write(dump_json(doc), args.output)
    return EXIT_OK if all_agree else EXIT_AUDIT_FAILED


def cmd_orbits(args) -> int:
    group = load_group(args.group)
    n = group.degree
    if n > args.binary_cap:
        raise CapExceeded("degree %d exceeds binary cap %d" % (n, args.binary_cap))
    reps = bitcube.orbit_reps(n, [g.images for g in group.generators])
    sizes: dict[int, int] = {}
    for mask in range(1 << n):
        r = reps[mask]
        sizes[r] = sizes.get(r, 0) + 1
    doc = {
        "degree": n,
        "binary_orbits": [
            {"representative": [(rep >> i) & 1 for i in range(n)], "size": size}
            for rep, size in sorted(sizes.items())
        ],
    }
    _write(dump_json(doc), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fundom",
        description="Symmetry-breaking cones for permutation groups: "
                    "construction, verification, and effectiveness audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, construction=False):
        p.add_argument("group", help="group JSON file ({'n': ..., 'generators': [...]})")
        p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP,
                       help="element/orbit enumeration cap")
        if construction:
            p.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
            p.add_argument("--gamma", default=None,
                           help="gamma strategy: canonical | orbit-weights:<base> | "
                                "k-universal:<k> | file:<path>")

    p = sub.add_parser("info", help="degree, order, orbits, chain shape")
    add_common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("gen", help="build a cone and write inequality JSON")
    add_common(p, construction=True)
    p.add_argument("--cuts", default=None, help="also write plain-text cut lines here")
    p.add_argument("--irredundant", action="store_true",
                   help="drop inequalities implied by the rest")
    p.add_argument("--check-golden", default=None,
                   help="compare the produced JSON against this golden file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="audit the fundamental-domain axioms")
    add_common(p, construction=True)
    p.add_argument("--trials", type=int, default=audit.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--binary-cap", type=int, default=audit.DEFAULT_BINARY_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("effectiveness", help="worst-case binary orbit representation")
    add_common(p, construction=True)
    p.add_argument("--n-cap", type=int, default=audit.DEFAULT_BINARY_CAP)
    p.set_defaults(func=cmd_effectiveness)

    p = sub.add_parser("lexcheck", help="closure-of-lex membership vs the table cone")
    add_common(p)
    p.add_argument("--vectors", default=None, help="JSON list of vectors to check")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orbit-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.set_defaults(func=cmd_lexcheck)

    p = sub.add_parser("orbits", help="list binary orbits up to the cap")
    add_common(p)
    p.add_argument("--binary-cap", type=int, default=audit.DEFAULT_BINARY_CAP)
    p.set_defaults(func=cmd_orbits)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_BAD_INPUT
    except CapExceeded as exc:
        sys.stderr.write("cap exceeded: %s\n" % exc)
        return EXIT_CAP
    except (StrategyExhausted, NontrivialStabilizer) as exc:
        sys.stderr.write("construction rejected: %s\n" % exc)
        return EXIT_CONSTRUCTION
    except ValueError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
