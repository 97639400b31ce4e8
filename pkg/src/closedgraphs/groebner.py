"""Pure-difference binomial arithmetic and Buchberger's algorithm.

The ambient ring has 2n variables: slots 0..n-1 are x_1..x_n and slots
n..2n-1 are y_1..y_n.  A monomial is an exponent tuple of length 2n.  Every
polynomial handled here is a difference of two monomials with coefficients
+1/-1, and all operations (S-polynomials, reduction, interreduction)
preserve that shape, so no coefficient arithmetic is needed.

Edge generators: an edge {i,j} with labels i < j contributes the pair
(x_i*y_j, x_j*y_i), the 2x2 determinant on columns i and j.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, count
from typing import Optional, Sequence

from .errors import InternalInvariantError, LabellingError
from .graphs import Graph, Labelling

Monomial = tuple[int, ...]

BASES = ("lex", "deglex", "degrevlex")

_MAX_EXPONENT = 1 << 30  # desk-scale ideals stay tiny; fail loudly otherwise


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > _MAX_EXPONENT for e in out):
        raise OverflowError("exponent overflow")
    return out


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient a / b; requires divisibility."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError("monomial division with remainder")
    return out


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomial(n: int, xs: Sequence[int] = (), ys: Sequence[int] = ()) -> Monomial:
    """Build an exponent tuple from 1-based variable indices (with multiplicity)."""
    exps = [0] * (2 * n)
    for i in xs:
        exps[i - 1] += 1
    for i in ys:
        exps[n + i - 1] += 1
    return tuple(exps)


def mono_str(m: Monomial) -> str:
    n = len(m) // 2
    parts = []
    for slot, e in enumerate(m):
        if e == 0:
            continue
        name = f"x{slot + 1}" if slot < n else f"y{slot - n + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def monomial_multidegree(m: Monomial) -> tuple[int, ...]:
    """Collapse x_i and y_i exponents into one degree per column index."""
    n = len(m) // 2
    return tuple(m[i] + m[n + i] for i in range(n))


@dataclass(frozen=True)
class Binomial:
    """lead - trail with lead strictly greater under the ambient order."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self):
        if len(self.lead) != len(self.trail):
            raise ValueError("lead and trail live in different rings")
        if self.lead == self.trail:
            raise ValueError("zero binomial; represent zero as None")

    @property
    def degree(self) -> int:
        return max(mono_degree(self.lead), mono_degree(self.trail))

    def __str__(self) -> str:
        return f"{mono_str(self.lead)} - {mono_str(self.trail)}"


def binomial_str(b: Binomial) -> str:
    return str(b)


def multidegree(b: Binomial) -> tuple[int, ...]:
    """Shared column-collapsed degree of both monomials.

    A mismatch means the element is not multihomogeneous, which cannot
    happen for elements of an edge-generated ideal; it is reported as an
    internal error.
    """
    lead_md = monomial_multidegree(b.lead)
    trail_md = monomial_multidegree(b.trail)
    if lead_md != trail_md:
        raise InternalInvariantError(f"element {b} is not multihomogeneous")
    return lead_md


class TermOrder:
    """A monomial order: optional weight vector, then a base order on permuted slots.

    `perm` lists the variable slots from most to least significant for the
    base comparison.  With nonnegative weights and total base tie-breaking
    this is always a genuine term order (total, multiplicative, with 1
    minimal).
    """

    __slots__ = ("base", "perm", "weights")

    def __init__(self, base: str, perm: Sequence[int], weights: Optional[Sequence[int]] = None):
        if base not in BASES:
            raise ValueError(f"unknown base order {base!r}")
        perm = tuple(int(i) for i in perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError("perm must be a permutation of the variable slots")
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != len(perm):
                raise ValueError("weight vector length must match the slot count")
            if any(w < 0 for w in weights):
                raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("TermOrder is immutable")

    @property
    def num_slots(self) -> int:
        return len(self.perm)

    @classmethod
    def lex_xy(cls, n: int) -> "TermOrder":
        """Lexicographic with x_1 > ... > x_n > y_1 > ... > y_n."""
        return cls("lex", tuple(range(2 * n)))

    @classmethod
    def of_base(cls, base: str, n: int) -> "TermOrder":
        return cls(base, tuple(range(2 * n)))

    def key(self, m: Monomial):
        """Sort key: monomials compare ascending by key."""
        if len(m) != self.num_slots:
            raise ValueError(f"monomial has {len(m)} slots, order expects {self.num_slots}")
        pv = tuple(m[s] for s in self.perm)
        parts: list = []
        if self.weights is not None:
            parts.append(sum(w * e for w, e in zip(self.weights, m)))
        if self.base == "lex":
            parts.append(pv)
        elif self.base == "deglex":
            parts.append(sum(m))
            parts.append(pv)
        else:  # degrevlex: smaller exponent on the least significant slot wins
            parts.append(sum(m))
            parts.append(tuple(-pv[k] for k in range(len(pv) - 1, -1, -1)))
        return tuple(parts)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0, or +1 as a is below, equal to, or above b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TermOrder)
            and self.base == other.base
            and self.perm == other.perm
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.base, self.perm, self.weights))

    def __repr__(self) -> str:
        w = "" if self.weights is None else f", weights={list(self.weights)}"
        return f"TermOrder({self.base}, perm={list(self.perm)}{w})"

    def to_json_dict(self) -> dict:
        return {
            "base": self.base,
            "permutation": list(self.perm),
            "weights": list(self.weights) if self.weights is not None else None,
        }


def oriented_binomial(m1: Monomial, m2: Monomial, order: TermOrder) -> Optional[Binomial]:
    """Binomial with the larger monomial leading; None when the pair cancels."""
    c = order.compare(m1, m2)
    if c == 0:
        return None
    return Binomial(m1, m2) if c > 0 else Binomial(m2, m1)


def _require_contiguous(lab: Labelling) -> None:
    if not lab.is_onto_range:
        raise LabellingError("variable indexing needs labels exactly 1..n")


def edge_binomials(g: Graph, lab: Labelling) -> list[tuple[Monomial, Monomial]]:
    """Orientation-free generator pairs (x_i*y_j, x_j*y_i), one per edge, i < j."""
    _require_contiguous(lab)
    if set(lab) != set(g.vertices):
        raise LabellingError("labelling domain does not match the vertex set")
    n = g.n
    pairs = []
    for e in sorted(g.edges, key=lambda e: tuple(sorted(lab[v] for v in e))):
        i, j = sorted(lab[v] for v in e)
        pairs.append((monomial(n, xs=[i], ys=[j]), monomial(n, xs=[j], ys=[i])))
    return pairs


def oriented_generators(g: Graph, lab: Labelling, order: TermOrder) -> list[Binomial]:
    return [oriented_binomial(m1, m2, order) for m1, m2 in edge_binomials(g, lab)]


def s_polynomial(b1: Binomial, b2: Binomial, order: TermOrder) -> Optional[Binomial]:
    """Cancel the leading terms over their lcm; None when the result is zero."""
    l = mono_lcm(b1.lead, b2.lead)
    m1 = mono_mul(mono_div(l, b1.lead), b1.trail)
    m2 = mono_mul(mono_div(l, b2.lead), b2.trail)
    return oriented_binomial(m1, m2, order)


def normal_form(b: Optional[Binomial], reducers: Sequence[Binomial], order: TermOrder) -> Optional[Binomial]:
    """Rewrite monomials divisible by a reducer lead until none is, or zero.

    The reducer is always the first applicable one by position, and the
    leading monomial is rewritten before the trailing one, so reduction is
    deterministic.
    """
    if b is None:
        return None
    lead, trail = b.lead, b.trail
    while True:
        red = next((g for g in reducers if mono_divides(g.lead, lead)), None)
        if red is not None:
            m = mono_mul(mono_div(lead, red.lead), red.trail)
            if m == trail:
                return None
            if order.compare(m, trail) > 0:
                lead = m
            else:
                lead, trail = trail, m
            continue
        red = next((g for g in reducers if mono_divides(g.lead, trail)), None)
        if red is not None:
            trail = mono_mul(mono_div(trail, red.lead), red.trail)
            continue
        return Binomial(lead, trail)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    order: TermOrder
    reduced: bool

    @property
    def max_degree(self) -> int:
        return max(e.degree for e in self.elements) if self.elements else 0

    def to_json_dict(self) -> dict:
        return {
            "order": self.order.to_json_dict(),
            "elements": [str(e) for e in self.elements],
            "reduced": self.reduced,
            "max_degree": self.max_degree,
        }


def buchberger(gens: Sequence[Binomial], order: TermOrder) -> GroebnerBasis:
    """Complete the generators to a Groebner basis.

    Pairs are processed by smallest lcm degree (ties by insertion order);
    pairs with coprime leads are skipped.  Termination is guaranteed since
    leading monomials strictly grow the monomial ideal they span.
    """
    basis: list[Binomial] = []
    for g in gens:
        if g is not None and g not in basis:
            basis.append(g)
    heap: list[tuple[int, int, int, int]] = []
    ticket = count()

    def push(i: int, j: int) -> None:
        a, b = basis[i], basis[j]
        if mono_coprime(a.lead, b.lead):
            return
        heapq.heappush(heap, (mono_degree(mono_lcm(a.lead, b.lead)), next(ticket), i, j))

    for i, j in combinations(range(len(basis)), 2):
        push(i, j)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h is None:
            continue
        basis.append(h)
        k = len(basis) - 1
        for t in range(k):
            push(t, k)
    return GroebnerBasis(tuple(basis), order, reduced=False)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis: minimal leads, fully tail-reduced, sorted by lead."""
    order = gb.order
    elems = list(gb.elements)
    minimal = []
    for i, b in enumerate(elems):
        redundant = False
        for j, c in enumerate(elems):
            if i == j:
                continue
            if mono_divides(c.lead, b.lead) and (c.lead != b.lead or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(b)
    out = []
    for b in minimal:
        others = [c for c in minimal if c is not b]
        trail = b.trail
        while True:
            red = next((c for c in others if mono_divides(c.lead, trail)), None)
            if red is None:
                break
            trail = mono_mul(mono_div(trail, red.lead), red.trail)
        out.append(Binomial(b.lead, trail))
    out.sort(key=lambda e: order.key(e.lead))
    return GroebnerBasis(tuple(out), order, reduced=True)


def is_quadratic(gb: GroebnerBasis) -> bool:
    """True when every element of the reduced basis has degree 2 on both sides."""
    if not gb.reduced:
        raise ValueError("quadraticity is decided on the reduced basis")
    return all(mono_degree(e.lead) == 2 and mono_degree(e.trail) == 2 for e in gb.elements)


def certify_basis(gb: GroebnerBasis) -> tuple[bool, Optional[tuple[int, int]]]:
    """Full post-hoc scan: every S-pair must reduce to zero (no skipping)."""
    elems = gb.elements
    for i, j in combinations(range(len(elems)), 2):
        s = s_polynomial(elems[i], elems[j], gb.order)
        if s is not None and normal_form(s, elems, gb.order) is not None:
            return False, (i, j)
    return True, None
