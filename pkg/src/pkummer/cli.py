"""The `pk` command line tool: validate / cohomology / decompose / classify.

Instances are JSON documents (schema v1):

    {
      "schema": 1,
      "name": "e1",                 # optional
      "n": 4,                       # Kummer order; K = Q(zeta_n)
      "m": 3,                       # number of components of S = K^m
      "group": [4],                 # invariant factors d1 | d2 | ...
      "action": {
        "1":  {"domain": [0, 1], "sigma": [[1, 0], [2, 1]]},
        "2":  {"domain": [0, 2], "sigma": [[0, 2], [2, 0]]},
        "3":  {"domain": [1, 2], "sigma": [[0, 1], [1, 2]]}
      }
    }

Group elements are keyed by the comma-joined coordinates of their tuple
("2" for g^2 in a cyclic group, "1,0" in a product).  `domain` lists the
support of the image ideal S_g; `sigma` lists [source, target] component
pairs of the partial bijection onto it.  The identity element may be
omitted; it always acts as the identity on all of S.  Components are
0-based.

Reports are canonical JSON (schema v1): sorted keys, no timing or other
run-dependent data, so identical inputs produce byte-identical reports.
Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 malformed
input, 3 a resource guard tripped.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .cohomology import (Cochain, EnumerationLimitError, coboundary,
                         enumerate_torsion_cocycles, h1_torsion, is_coboundary1,
                         is_cocycle1, torsion_exponents)
from .kummer import (KummerData, NotKummerianError, SumNotSError, decompose,
                     find_direct_subsets)
from .partial_action import (FinAbGroup, NoTraceOneError, NotGaloisError,
                             PartialAction)
from .radical import parametrize
from .split_algebra import SplitAlgebra, rank_over

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_GUARD = 3


class InstanceError(Exception):
    """Malformed instance file; message carries the offending field."""


def _element_key(group: FinAbGroup, label: str):
    try:
        parts = tuple(int(p) for p in label.split(",")) if label else ()
    except ValueError:
        raise InstanceError(f"group element key {label!r} is not a coordinate tuple")
    if len(parts) != len(group.factors):
        raise InstanceError(f"group element key {label!r} has wrong arity")
    if any(not 0 <= x < d for x, d in zip(parts, group.factors)):
        raise InstanceError(f"group element key {label!r} out of range")
    return parts


def element_label(g: tuple) -> str:
    return ",".join(map(str, g))


def parse_instance(doc: dict):
    """Decode an instance document into a validated PartialAction."""
    if not isinstance(doc, dict):
        raise InstanceError("instance must be a JSON object")
    if doc.get("schema") != 1:
        raise InstanceError("unsupported or missing schema version (want 1)")
    for key in ("n", "m", "group", "action"):
        if key not in doc:
            raise InstanceError(f"missing field {key!r}")
    n, m = doc["n"], doc["m"]
    if not (isinstance(n, int) and n >= 2):
        raise InstanceError("n must be an integer >= 2")
    if not (isinstance(m, int) and m >= 1):
        raise InstanceError("m must be an integer >= 1")
    try:
        group = FinAbGroup(doc["group"])
    except (TypeError, ValueError) as exc:
        raise InstanceError(f"bad group: {exc}")
    algebra = SplitAlgebra(n, m)
    domains, sigmas = {}, {}
    for label, entry in doc["action"].items():
        g = _element_key(group, label)
        if not isinstance(entry, dict) or "domain" not in entry or "sigma" not in entry:
            raise InstanceError(f"action entry {label!r} needs 'domain' and 'sigma'")
        dom = entry["domain"]
        if not all(isinstance(c, int) and 0 <= c < m for c in dom):
            raise InstanceError(f"action entry {label!r}: domain components out of range")
        pairs = entry["sigma"]
        sigma = {}
        for pair in pairs:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise InstanceError(f"action entry {label!r}: sigma entries are [src, dst] pairs")
            src, dst = pair
            if not all(isinstance(c, int) and 0 <= c < m for c in (src, dst)):
                raise InstanceError(f"action entry {label!r}: sigma components out of range")
            if src in sigma:
                raise InstanceError(f"action entry {label!r}: sigma maps {src} twice")
            sigma[src] = dst
        if len(set(sigma.values())) != len(sigma):
            raise InstanceError(f"action entry {label!r}: sigma is not injective")
        if set(sigma.values()) != set(dom):
            raise InstanceError(f"action entry {label!r}: sigma targets must equal the domain")
        domains[g] = frozenset(dom)
        sigmas[g] = sigma
    return PartialAction(algebra, group, domains, sigmas)


def load_instance(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc}")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")
    action = parse_instance(doc)
    digest = hashlib.sha256(
        json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()).hexdigest()
    return action, doc.get("name", path), digest


def _report_skeleton(command: str, name: str, digest: str) -> dict:
    return {
        "schema": 1,
        "command": command,
        "instance": {"name": name, "digest": digest},
        "checks": [],
    }


def _check(report: dict, name: str, ok: bool, detail=None):
    entry = {"name": name, "ok": bool(ok)}
    if detail is not None:
        entry["detail"] = detail
    report["checks"].append(entry)
    return ok


def cmd_validate(action: PartialAction, report: dict) -> int:
    violation = action.validate()
    _check(report, "axioms", violation is None, violation)
    if violation is not None:
        return EXIT_MATH_FAIL
    _check(report, "unital_ideals", True,
           {element_label(g): sorted(action.domains[g]) for g in action.group.elements()})
    code = EXIT_OK
    try:
        w = action.find_trace_one()
        _check(report, "trace_one", True, w.serialize())
    except NoTraceOneError as exc:
        _check(report, "trace_one", False, str(exc))
        code = EXIT_MATH_FAIL
    try:
        xs, ys = action.find_galois_coordinates()
        ok = action.verify_coordinates(xs, ys)
        _check(report, "galois_coordinates", ok,
               {"xs": [x.serialize() for x in xs], "ys": [y.serialize() for y in ys]})
        if not ok:
            code = EXIT_MATH_FAIL
    except NotGaloisError as exc:
        _check(report, "galois_coordinates", False, str(exc))
        code = EXIT_MATH_FAIL
    report["objects"] = {"invariant_ring": action.invariants().serialize()}
    return code


def cmd_cohomology(action: PartialAction, report: dict, max_enum: int) -> int:
    violation = action.validate()
    _check(report, "axioms", violation is None, violation)
    if violation is not None:
        return EXIT_MATH_FAIL
    n = action.algebra.n
    try:
        cocycles = enumerate_torsion_cocycles(action, n, max_enum)
    except EnumerationLimitError as exc:
        _check(report, "torsion_enumeration", False, str(exc))
        return EXIT_RESOURCE_GUARD
    boundaries = [f for f in cocycles if _is_b1(f)]
    classes = h1_torsion(action, n, max_enum)
    report["objects"] = {
        "z1_torsion_size": len(cocycles),
        "b1_torsion_size": len(boundaries),
        "h1_torsion_size": len(classes),
        "h1_representatives": [list(torsion_exponents(f, n)) for f in classes],
    }
    _check(report, "all_enumerated_are_cocycles", all(is_cocycle1(f) for f in cocycles))
    ident1 = Cochain.identity(action, 2)
    sample = cocycles[: min(4, len(cocycles))]
    dd = all(coboundary(f) == ident1 for f in sample)
    _check(report, "delta_delta_identity", dd,
           "delta^1 of sampled cocycles is the identity 2-cochain")
    return EXIT_OK if dd else EXIT_MATH_FAIL


def _is_b1(f) -> bool:
    return is_coboundary1(f) is not None


def cmd_decompose(action: PartialAction, report: dict) -> int:
    violation = action.validate()
    _check(report, "axioms", violation is None, violation)
    if violation is not None:
        return EXIT_MATH_FAIL
    try:
        kd = KummerData.build(action)
    except (NotKummerianError, NotGaloisError, NoTraceOneError) as exc:
        _check(report, "kummer_data", False, str(exc))
        return EXIT_MATH_FAIL
    _check(report, "kummer_data", True)
    try:
        dec = decompose(kd)
    except SumNotSError as exc:
        _check(report, "character_modules_span", False, str(exc))
        return EXIT_MATH_FAIL
    _check(report, "character_modules_span", True)
    subsets = find_direct_subsets(kd, dec)
    modules = []
    for chi, qm in zip(dec.characters, dec.modules):
        gen = kd.action.group.generator()
        modules.append({
            "exponent": chi.exps[gen] if kd.action.group.order > 1 else 0,
            "basis": qm.space.serialize(),
            "block_ranks": {str(list(b)): r
                            for b, r in rank_over(qm.space, kd.invariant_ring).items()},
        })
    report["objects"] = {
        "invariant_ring": kd.invariant_ring.serialize(),
        "modules": modules,
        "full_sum_direct": dec.full_sum_direct,
        "is_global": dec.is_global,
        "direct_subsets": [{"exponents": list(s), "saturated": sat} for s, sat in subsets],
    }
    return EXIT_OK


def cmd_classify(action: PartialAction, report: dict) -> int:
    violation = action.validate()
    _check(report, "axioms", violation is None, violation)
    if violation is not None:
        return EXIT_MATH_FAIL
    try:
        kd = KummerData.build(action)
        record = parametrize(kd)
    except (NotKummerianError, NotGaloisError, NoTraceOneError, SumNotSError) as exc:
        _check(report, "classification", False, str(exc))
        return EXIT_MATH_FAIL
    _check(report, "classification", True)
    report["objects"] = {
        "direct_subsets": [list(s) for s in record.direct_subsets],
        "saturated_subsets": [
            {
                "exponents": list(rep.subset),
                "subgroup": [element_label(g) for g in rep.subgroup],
                "matches_extension_by_zero": rep.matches_extension_by_zero,
                "lambda_is_graded_algebra_iso": rep.lambda_is_graded_algebra_iso,
            }
            for rep in record.saturated_reports
        ],
        "extension_by_zero_subgroup": (
            [element_label(g) for g in record.ext_by_zero_subgroup]
            if record.ext_by_zero_subgroup is not None else None),
        "theorem_checks": (
            {
                "invariants_chain": record.theorem_checks.invariants_chain,
                "rank_equals_order": record.theorem_checks.rank_equals_order,
                "extension_by_zero": record.theorem_checks.extension_by_zero,
            }
            if record.theorem_checks is not None else None),
        "verdict": record.verdict,
    }
    return EXIT_OK


def render_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="pk",
        description="exact checks for partial actions, cocycles, Kummer "
                    "decompositions and radical extensions")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in [
        ("validate", "axioms, unitality, Galois coordinates, trace-one element"),
        ("cohomology", "torsion Z1/B1/H1 census and coboundary checks"),
        ("decompose", "character modules, ranks and direct subsets"),
        ("classify", "radical/I-radical classification verdict"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("instance", help="path to an instance JSON file")
        p.add_argument("--report", help="write the JSON report to this path")
        if name == "cohomology":
            p.add_argument("--max-enum", type=int, default=10 ** 6,
                           help="bound on the torsion cocycle solution set")
    args = parser.parse_args(argv)

    try:
        action, name, digest = load_instance(args.instance)
    except InstanceError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    report = _report_skeleton(args.command, name, digest)
    if args.command == "validate":
        code = cmd_validate(action, report)
    elif args.command == "cohomology":
        code = cmd_cohomology(action, report, args.max_enum)
    elif args.command == "decompose":
        code = cmd_decompose(action, report)
    else:
        code = cmd_classify(action, report)
    report["exit_code"] = code

    text = render_report(report)
    sys.stdout.write(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
