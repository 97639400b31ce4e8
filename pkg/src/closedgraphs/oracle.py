"""Ground truth by exhaustion, random instances, and the equivalence audit.

The brute-force search enumerates vertex labellings per component in
lexicographic order, so its first hit is reproducible.  Random closed
graphs are built from interval clique families, which are closed under the
identity labelling by construction.  The equivalence audit cross-checks
the brute-force verdict, the constructive pipeline, and the quadraticity
of reduced bases, and reports a counterexample dump if anything disagrees.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterator, Optional

from .errors import CapExceededError
from .graphs import Graph, Labelling, connected_components, is_closed_wrt
from .groebner import GroebnerBasis, TermOrder, buchberger, is_quadratic, oriented_generators, reduce_basis
from .labelling import find_closed_labelling
from .orientation import orient, topological_labelling

DEFAULT_CAP = 9


class RandomSource:
    """Seeded deterministic randomness (Mersenne Twister); same seed, same stream."""

    __slots__ = ("seed", "rng")

    def __init__(self, seed: int):
        self.seed = int(seed)
        self.rng = random.Random(self.seed)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed})"


def _cherries(comp: Graph, verts: list[str]) -> list[tuple[int, int, int]]:
    """Index triples (a, mid, b): mid adjacent to both, a and b non-adjacent.

    A labelling is closed exactly when the middle label of every cherry
    lies strictly between the endpoint labels.
    """
    idx = {v: i for i, v in enumerate(verts)}
    out = []
    for mid in verts:
        for a, b in combinations(sorted(comp.neighbors(mid)), 2):
            if not comp.has_edge(a, b):
                out.append((idx[a], idx[mid], idx[b]))
    return out


def _first_closed_assignment(comp: Graph) -> Optional[dict[str, int]]:
    verts = sorted(comp.vertices)
    cherries = _cherries(comp, verts)
    k = len(verts)
    for perm in permutations(range(1, k + 1)):
        if all((perm[a] - perm[m]) * (perm[b] - perm[m]) < 0 for a, m, b in cherries):
            return {verts[i]: perm[i] for i in range(k)}
    return None


def brute_force_closed(g: Graph, cap: int = DEFAULT_CAP) -> Optional[Labelling]:
    """First closed labelling in lexicographic enumeration order, or None.

    Components are searched independently (closedness never couples them)
    and concatenated in name order with label offsets.
    """
    if g.n > cap:
        raise CapExceededError(
            f"graph has {g.n} vertices; brute-force search is capped at {cap} "
            f"(raise the cap to force the n! enumeration)"
        )
    labels: dict[str, int] = {}
    offset = 0
    for comp in connected_components(g):
        found = _first_closed_assignment(comp)
        if found is None:
            return None
        for v, l in found.items():
            labels[v] = l + offset
        offset += comp.n
    lab = Labelling(labels)
    ok, _ = is_closed_wrt(g, lab)
    assert ok, "enumeration accepted a labelling the reference check rejects"
    return lab


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labelled connected graph on vertices "1".."n", in edge-mask order."""
    names = [str(i) for i in range(1, n + 1)]
    pairs = list(combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        adj = [0] * n
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        reached = 1
        frontier = 1
        while frontier:
            nxt = 0
            for i in range(n):
                if frontier >> i & 1:
                    nxt |= adj[i]
            frontier = nxt & ~reached
            reached |= frontier
        if reached != (1 << n) - 1:
            continue
        yield Graph(
            [(names[i], names[j]) for bit, (i, j) in enumerate(pairs) if mask >> bit & 1]
        )


def random_closed_graph(rs: RandomSource, n: int, r: int) -> tuple[Graph, Labelling]:
    """A graph whose maximal cliques are r staggered intervals covering 1..n.

    Interval lower ends strictly increase from 1, upper ends strictly
    increase to n, each interval is nontrivial, and consecutive intervals
    overlap; such a family is closed under the identity labelling.  Vertex
    names are zero-padded so name order equals label order.
    """
    if n < 2 or not 1 <= r <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= r <= n-1, got n={n}, r={r}")
    while True:
        ms = [1] + sorted(rs.rng.sample(range(2, n), r - 1))
        tops = sorted(rs.rng.sample(range(2, n), r - 1)) + [n]
        if all(ms[i] < tops[i] for i in range(r)) and all(
            ms[i + 1] <= tops[i] for i in range(r - 1)
        ):
            break
    width = len(str(n))
    name = lambda i: str(i).zfill(width)
    edges = []
    for lo, hi in zip(ms, tops):
        edges.extend((name(a), name(b)) for a, b in combinations(range(lo, hi + 1), 2))
    g = Graph(edges)
    lab = Labelling({name(i): i for i in range(1, n + 1)})
    return g, lab


def random_term_order(rs: RandomSource, n: int) -> TermOrder:
    """Random base, random slot permutation, and (half the time) small weights."""
    slots = list(range(2 * n))
    rs.rng.shuffle(slots)
    base = rs.rng.choice(("lex", "deglex", "degrevlex"))
    weights = None
    if rs.rng.random() < 0.5:
        weights = tuple(rs.rng.randint(0, 3) for _ in range(2 * n))
    return TermOrder(base, tuple(slots), weights)


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: dict

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class EquivalenceReport:
    seed: int
    trials: int
    closed: bool
    labelling: Optional[Labelling]
    checks: list[CheckOutcome] = field(default_factory=list)
    counterexample: Optional[dict] = None
    elapsed_seconds: float = 0.0

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self, include_timing: bool = False) -> dict:
        doc = {
            "seed": self.seed,
            "trials": self.trials,
            "closed": self.closed,
            "labelling": dict(sorted(self.labelling.items())) if self.labelling else None,
            "checks": [c.to_json_dict() for c in self.checks],
            "all_passed": self.all_passed,
            "counterexample": self.counterexample,
        }
        if include_timing:
            doc["elapsed_seconds"] = self.elapsed_seconds
        return doc


def _reduced_basis(g: Graph, lab: Labelling, order: TermOrder) -> GroebnerBasis:
    return reduce_basis(buchberger(oriented_generators(g, lab, order), order))


def equivalence_suite(g: Graph, trials: int, rs: RandomSource, cap: int = DEFAULT_CAP) -> EquivalenceReport:
    """Cross-check every characterization of closedness on one graph.

    Checks: the brute-force and constructive verdicts agree; when closed,
    the reduced lex basis under each found labelling is quadratic; when not
    closed, no sampled term order yields a quadratic basis; every sampled
    orientation is acyclic; and every quadratic basis hands back a
    closedness-witnessing labelling through the orientation.  The first
    failed check populates the counterexample dump.
    """
    if g.n > cap:
        raise CapExceededError(f"graph has {g.n} vertices; the audit is capped at {cap}")
    start = time.perf_counter()
    brute = brute_force_closed(g, cap=cap)
    pipeline = find_closed_labelling(g)
    report = EquivalenceReport(
        seed=rs.seed, trials=trials, closed=brute is not None, labelling=brute or pipeline.labelling
    )

    def record(name: str, passed: bool, detail: dict, dump: Optional[dict] = None) -> None:
        report.checks.append(CheckOutcome(name, passed, detail))
        if not passed and report.counterexample is None:
            ce = {"check": name, "edges": sorted(tuple(sorted(e)) for e in g.edges)}
            ce.update(dump or {})
            report.counterexample = ce

    agree = (brute is None) == (pipeline.labelling is None)
    detail = {
        "brute_force_closed": brute is not None,
        "pipeline_closed": pipeline.labelling is not None,
    }
    if pipeline.failure is not None:
        detail["pipeline_failure"] = pipeline.failure.describe()
    record("verdict-agreement", agree, detail)

    lex = TermOrder.lex_xy(g.n)
    quadratic_cases: list[tuple[Labelling, TermOrder]] = []
    if brute is not None:
        sources = [("brute-force", brute)]
        if pipeline.labelling is not None:
            sources.append(("construction", pipeline.labelling))
        for src, lab in sources:
            gb = _reduced_basis(g, lab, lex)
            quad = is_quadratic(gb)
            record(
                f"lex-basis-quadratic-under-{src}-labelling",
                quad,
                {"max_degree": gb.max_degree, "elements": len(gb.elements)},
                dump={"labelling": dict(sorted(lab.items())), "basis": gb.to_json_dict()},
            )
            if quad:
                quadratic_cases.append((lab, lex))

    base_lab = Labelling.alphabetical(g.vertices)
    acyclic_count = 0
    quadratic_trials = 0
    first_quadratic = None
    route_failures = []
    for t in range(trials):
        order = random_term_order(rs, g.n)
        og = orient(g, base_lab, order)
        topo, _cycle = topological_labelling(og)
        if topo is not None:
            acyclic_count += 1
        gb = _reduced_basis(g, base_lab, order)
        if is_quadratic(gb):
            quadratic_trials += 1
            if first_quadratic is None:
                first_quadratic = order
            ok = topo is not None and is_closed_wrt(g, topo)[0]
            if not ok:
                route_failures.append(order.to_json_dict())
    for lab, order in quadratic_cases:
        topo, _cycle = topological_labelling(orient(g, lab, order))
        ok = topo is not None and is_closed_wrt(g, topo)[0]
        if not ok:
            route_failures.append(order.to_json_dict())

    record(
        "orientations-acyclic",
        acyclic_count == trials,
        {"acyclic": acyclic_count, "trials": trials},
    )
    if brute is None:
        record(
            "random-orders-never-quadratic",
            quadratic_trials == 0,
            {"quadratic": quadratic_trials, "trials": trials},
            dump={"order": first_quadratic.to_json_dict() if first_quadratic else None},
        )
    record(
        "quadratic-implies-closed-labelling",
        not route_failures,
        {"quadratic_cases": quadratic_trials + len(quadratic_cases)},
        dump={"orders": route_failures} if route_failures else None,
    )
    report.elapsed_seconds = time.perf_counter() - start
    return report
