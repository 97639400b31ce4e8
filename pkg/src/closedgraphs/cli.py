"""Command-line interface.

Subcommands: check, label, complex, gb, verify, oracle.  Exit codes:
0 affirmative/success, 1 negative verdict, 2 usage or input error,
3 internal assertion failure or audit counterexample.  JSON output is the
machine interface; the human text renders the same payload.  Identical
inputs, flags, and seed produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .complexes import (
    ComplexViolation,
    clique_complex,
    is_closed_complex,
    linear_quasi_tree_order,
)
from .errors import (
    CapExceededError,
    ClosedGraphsError,
    EdgeListParseError,
    InternalInvariantError,
    LabellingError,
    NotClosedComplexError,
    OrderSpecError,
    UnknownVertexError,
)
from .graphs import Graph, Labelling, find_induced_claw, load_graph
from .groebner import BASES, TermOrder, buchberger, is_quadratic, oriented_generators, reduce_basis
from .labelling import ClosednessResult, find_closed_labelling
from .oracle import DEFAULT_CAP, RandomSource, brute_force_closed, equivalence_suite

ENV_CAP = "CLOSEDGRAPHS_CAP"


def resolve_cap(flag_value) -> int:
    if flag_value is not None:
        cap = int(flag_value)
    elif os.environ.get(ENV_CAP):
        try:
            cap = int(os.environ[ENV_CAP])
        except ValueError:
            raise OrderSpecError(f"{ENV_CAP} must be an integer, got {os.environ[ENV_CAP]!r}")
    else:
        cap = DEFAULT_CAP
    if cap < 1:
        raise OrderSpecError(f"cap must be positive, got {cap}")
    return cap


def parse_order_spec(spec: str, n: int) -> TermOrder:
    """Parse lex|deglex|degrevlex[:permutation][:weights] (0-based slots)."""
    parts = spec.split(":")
    if len(parts) > 3 or parts[0] not in BASES:
        raise OrderSpecError(f"bad order spec {spec!r}")
    try:
        perm = tuple(int(t) for t in parts[1].split(",")) if len(parts) > 1 and parts[1] else tuple(range(2 * n))
        weights = tuple(int(t) for t in parts[2].split(",")) if len(parts) > 2 and parts[2] else None
    except ValueError:
        raise OrderSpecError(f"bad order spec {spec!r}: permutation and weights must be integers")
    if len(perm) != 2 * n:
        raise OrderSpecError(f"permutation must list all {2 * n} variable slots")
    try:
        return TermOrder(parts[0], perm, weights)
    except ValueError as exc:
        raise OrderSpecError(f"bad order spec {spec!r}: {exc}")


def parse_labelling_spec(spec: str) -> Labelling:
    """Parse "a=1,b=2,..."."""
    mapping = {}
    for item in spec.split(","):
        if "=" not in item:
            raise LabellingError(f"bad labelling entry {item!r}, expected name=integer")
        name, _, value = item.partition("=")
        try:
            mapping[name.strip()] = int(value)
        except ValueError:
            raise LabellingError(f"bad label {value!r} for vertex {name.strip()!r}")
    return Labelling(mapping)


def _violation_json(v: ComplexViolation | None) -> dict | None:
    if v is None:
        return None
    if v.condition == "covering":
        return {"condition": "covering", "indices": list(v.indices)}
    (i, j), (k, l) = v.indices
    return {"condition": "incomparability", "indices": [[i, j], [k, l]]}


def _labelling_json(result: ClosednessResult) -> dict:
    labels = dict(sorted(result.labelling.items()))
    blocks = []
    for cert in result.certificates:
        blocks.extend(cert.partition.to_json_list())
    return {"labels": labels, "blocks": blocks}


def _claw_json(g: Graph) -> dict | None:
    claw = find_induced_claw(g)
    if claw is None:
        return None
    center, leaves = claw
    return {"center": center, "leaves": list(leaves)}


def cmd_check(g: Graph, args) -> tuple[dict, int]:
    result = find_closed_labelling(g)
    if result.closed:
        payload = {
            "closed": True,
            "labelling": _labelling_json(result),
            "components": [cert.to_json_dict() for cert in result.certificates],
            "failure": None,
            "claw": None,
        }
        return payload, 0
    failure = result.failure
    payload = {
        "closed": False,
        "labelling": None,
        "components": [],
        "failure": {
            "stage": failure.stage,
            "component": list(failure.component),
            "violation": _violation_json(failure.violation),
        },
        "claw": _claw_json(g),
    }
    return payload, 1


def cmd_label(g: Graph, args) -> tuple[dict, int]:
    payload, code = cmd_check(g, args)
    if code == 0:
        return payload["labelling"], 0
    return {"labels": None, "failure": payload["failure"]}, 1


def cmd_complex(g: Graph, args) -> tuple[dict, int]:
    sc = clique_complex(g)
    oc = linear_quasi_tree_order(sc)
    payload = {
        "facets": [sorted(f) for f in sc.facets],
        "order": None,
        "linear_quasi_tree": oc is not None,
        "closed": False,
        "violation": None,
    }
    if oc is None:
        return payload, 1
    payload["order"] = list(oc.order)
    ok, violation = is_closed_complex(oc)
    payload["closed"] = ok
    payload["violation"] = _violation_json(violation)
    return payload, 0 if ok else 1


def cmd_gb(g: Graph, args) -> tuple[dict, int]:
    lab = parse_labelling_spec(args.labelling) if args.labelling else Labelling.alphabetical(g.vertices)
    order = parse_order_spec(args.order, g.n)
    gb = reduce_basis(buchberger(oriented_generators(g, lab, order), order))
    quadratic = is_quadratic(gb)
    payload = {
        "labelling": dict(sorted(lab.items())),
        "basis": gb.to_json_dict(),
        "quadratic": quadratic,
    }
    return payload, 0 if quadratic else 1


def cmd_verify(g: Graph, args) -> tuple[dict, int]:
    cap = resolve_cap(args.cap)
    report = equivalence_suite(g, trials=args.trials, rs=RandomSource(args.seed), cap=cap)
    payload = report.to_json_dict(include_timing=False)
    payload["cap"] = cap
    if not args.json:
        print(f"elapsed: {report.elapsed_seconds:.3f}s", file=sys.stderr)
    return payload, 0 if report.all_passed else 3


def cmd_oracle(g: Graph, args) -> tuple[dict, int]:
    cap = resolve_cap(args.cap)
    lab = brute_force_closed(g, cap=cap)
    payload = {
        "closed": lab is not None,
        "labelling": dict(sorted(lab.items())) if lab is not None else None,
        "cap": cap,
    }
    return payload, 0 if lab is not None else 1


def _fmt_labels(labels: dict) -> str:
    return " ".join(f"{v}={l}" for v, l in sorted(labels.items(), key=lambda kv: kv[1]))


def render_check(payload: dict) -> str:
    lines = [f"closed: {'yes' if payload['closed'] else 'no'}"]
    if payload["closed"]:
        lines.append("labelling: " + _fmt_labels(payload["labelling"]["labels"]))
    else:
        f = payload["failure"]
        stage = f["stage"]
        where = ",".join(f["component"])
        if stage == "quasi-tree-order":
            lines.append(f"component {{{where}}}: no linear quasi-tree order")
        else:
            lines.append(f"component {{{where}}}: {_describe_violation(f['violation'])}")
        if payload["claw"]:
            claw = payload["claw"]
            lines.append(f"induced claw: center {claw['center']}, leaves {', '.join(claw['leaves'])}")
    return "\n".join(lines)


def render_label(payload: dict) -> str:
    if payload.get("labels"):
        return _fmt_labels(payload["labels"])
    return "not closed"


def _describe_violation(v: dict | None) -> str:
    if v is None:
        return "no violation"
    if v["condition"] == "covering":
        i, d = v["indices"]
        return f"covering condition fails at i={i}, d={d}"
    (i, j), (k, l) = v["indices"]
    return f"incomparability fails for cells ({i},{j}) and ({k},{l})"


def render_complex(payload: dict) -> str:
    lines = []
    for pos, facet in enumerate(payload["facets"], start=1):
        lines.append(f"F{pos} = {{{','.join(facet)}}}")
    if payload["linear_quasi_tree"]:
        order = ", ".join(f"F{i + 1}" for i in payload["order"])
        lines.append("linear quasi-tree: yes")
        lines.append(f"order: {order}")
    else:
        lines.append("linear quasi-tree: no")
    lines.append(f"closed: {'yes' if payload['closed'] else 'no'}")
    if payload["violation"] is not None:
        lines.append(_describe_violation(payload["violation"]))
    return "\n".join(lines)


def render_gb(payload: dict) -> str:
    basis = payload["basis"]
    lines = [
        "labelling: " + _fmt_labels(payload["labelling"]),
        f"reduced basis ({len(basis['elements'])} elements, max degree {basis['max_degree']}):",
    ]
    lines.extend(f"  {e}" for e in basis["elements"])
    lines.append(f"quadratic: {'yes' if payload['quadratic'] else 'no'}")
    return "\n".join(lines)


def render_verify(payload: dict) -> str:
    lines = [f"closed: {'yes' if payload['closed'] else 'no'}"]
    for check in payload["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        detail = json.dumps(check["detail"], sort_keys=True)
        lines.append(f"{status} {check['name']} {detail}")
    lines.append("all checks passed" if payload["all_passed"] else "COUNTEREXAMPLE FOUND")
    if payload["counterexample"] is not None:
        lines.append(json.dumps(payload["counterexample"], sort_keys=True, indent=2))
    return "\n".join(lines)


def render_oracle(payload: dict) -> str:
    if payload["closed"]:
        return "closed\nlabelling: " + _fmt_labels(payload["labelling"])
    return "not closed (all labellings exhausted)"


COMMANDS = {
    "check": (cmd_check, render_check),
    "label": (cmd_label, render_label),
    "complex": (cmd_complex, render_complex),
    "gb": (cmd_gb, render_gb),
    "verify": (cmd_verify, render_verify),
    "oracle": (cmd_oracle, render_oracle),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="edge-list file: one 'u v' pair per line, '#' comments")
    common.add_argument("--json", action="store_true", help="emit the JSON payload instead of text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized subcommands")
    common.add_argument("--trials", type=int, default=50, help="random term orders to sample")
    common.add_argument("--cap", type=int, default=None, help=f"brute-force vertex cap (default {DEFAULT_CAP}; env {ENV_CAP})")
    parser = argparse.ArgumentParser(prog="closedgraphs", description="Closed-graph decision and certification toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "decide closedness; print a witness labelling or the failing stage",
        "label": "like check, but print only the labelling",
        "complex": "print the clique complex, its leaf order, and the closed-complex verdict",
        "gb": "reduced Groebner basis of the edge ideal and the quadraticity verdict",
        "verify": "run the full equivalence audit (brute force vs pipeline vs bases)",
        "oracle": "brute-force search over all labellings (cap-guarded)",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "gb":
            sp.add_argument("--order", default="lex", help="lex|deglex|degrevlex[:permutation][:weights], 0-based slots")
            sp.add_argument("--labelling", default=None, help='vertex labels as "a=1,b=2,..." (default: alphabetical)')
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler, renderer = COMMANDS[args.command]
    try:
        g = load_graph(Path(args.path).read_text())
        payload, code = handler(g, args)
    except (EdgeListParseError, UnknownVertexError, LabellingError, OrderSpecError, CapExceededError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InternalInvariantError, NotClosedComplexError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(renderer(payload))
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
