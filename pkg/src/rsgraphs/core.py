"""Graph / decomposition data model and the certifying verifier.

A decomposition claims that the edge set of a graph splits into t pairwise
edge-disjoint induced matchings of a common size r.  Nothing in this module
trusts that claim: `verify_decomposition` re-checks every invariant and
returns a report with explicit witnesses, and `induced_matching_check` is the
single-matching primitive behind it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Edge = tuple[int, int]


class GraphError(ValueError):
    """Structurally malformed input (bad vertex ids, loops, unknown edges)."""


class ParameterError(ValueError):
    """Arguments outside a routine's documented domain."""


class PreconditionError(ValueError):
    """An operation was handed input that fails its stated precondition."""


def _norm_edge(u: int, v: int, n: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex out of range in edge ({u}, {v}); n = {n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1, edges stored as (u, v) with u < v."""

    n: int
    edges: frozenset

    @classmethod
    def from_edges(cls, n, edge_iter) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        edges = frozenset(_norm_edge(u, v, n) for u, v in edge_iter)
        return cls(n, edges)

    @cached_property
    def adjacency(self):
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self):
        return [len(a) for a in self.adjacency]


def is_bipartite(g: Graph):
    """Return a 0/1 coloring list if g is bipartite, else None."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


@dataclass(frozen=True)
class MatchingDecomposition:
    """A graph together with t edge lists claimed to partition E into induced matchings of size r."""

    graph: Graph
    matchings: tuple
    r: int

    @classmethod
    def make(cls, graph: Graph, matchings, r: int) -> "MatchingDecomposition":
        if r < 0:
            raise GraphError("claimed matching size must be non-negative")
        normed = tuple(
            tuple(sorted(_norm_edge(u, v, graph.n) for u, v in m)) for m in matchings
        )
        return cls(graph, normed, r)

    @property
    def t(self) -> int:
        return len(self.matchings)

    def endpoint_sets(self):
        """V_i = set of vertices covered by matching i (repeats included only once)."""
        out = []
        for m in self.matchings:
            s = set()
            for u, v in m:
                s.add(u)
                s.add(v)
            out.append(s)
        return out


@dataclass(frozen=True)
class RSParameters:
    n: int
    r: int
    t: int
    c: Fraction

    @classmethod
    def of(cls, n: int, r: int, t: int) -> "RSParameters":
        c = Fraction(r, n) if n else Fraction(0)
        return cls(n, r, t, c)


@dataclass(frozen=True)
class Violation:
    invariant: str
    matchings: tuple      # indices of the matchings involved (may be empty)
    witness: tuple        # offending vertices / edges / sizes
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple
    degree_histogram: dict
    max_edge_degree_sum: int
    max_pair_intersection: int
    isolated_vertices: int
    notes: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {
            "passed": self.passed,
            "violations": [
                {
                    "invariant": v.invariant,
                    "matchings": list(v.matchings),
                    "witness": list(v.witness),
                    "detail": v.detail,
                }
                for v in self.violations
            ],
            "stats": {
                "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
                "max_edge_degree_sum": self.max_edge_degree_sum,
                "max_pair_intersection": self.max_pair_intersection,
                "isolated_vertices": self.isolated_vertices,
            },
            "notes": list(self.notes),
        }


def induced_matching_check(g: Graph, m):
    """Check that edge list m is an induced matching of g.

    Returns None on pass, otherwise a witness: either an edge of g joining two
    covered vertices outside m, or the second of two edges sharing an endpoint.
    Raises GraphError if m contains an edge absent from g.
    """
    edges = []
    for u, v in m:
        e = _norm_edge(u, v, g.n)
        if e not in g.edges:
            raise GraphError(f"edge {e} is not an edge of the graph")
        edges.append(e)
    covered = set()
    for u, v in sorted(edges):
        if u in covered or v in covered:
            return (u, v)
        covered.add(u)
        covered.add(v)
    eset = set(edges)
    for u in sorted(covered):
        for w in sorted(g.adjacency[u]):
            if u < w and w in covered and (u, w) not in eset:
                return (u, w)
    return None


def verify_decomposition(dec: MatchingDecomposition) -> VerificationReport:
    """Certify the (r, t)-RS property of dec, collecting all violated invariants.

    Besides the partition/matching/inducedness invariants this checks the two
    edge-local consequences used throughout: d_u + d_v <= t + 1 on every edge,
    and |V_i cap V_j| <= r for i != j.  Witnesses are the lexicographically
    first offenders.  Stats are reported whether or not the verdict is pass.
    """
    g = dec.graph
    t = dec.t
    r = dec.r
    violations = []

    owner = {}
    for i, m in enumerate(dec.matchings):
        if len(m) != r:
            violations.append(
                Violation("size-mismatch", (i,), (len(m),),
                          f"matching {i} has {len(m)} edges, declared r = {r}")
            )
        bad_member = None
        for e in m:
            if e not in g.edges and (bad_member is None or e < bad_member):
                bad_member = e
        if bad_member is not None:
            violations.append(
                Violation("edge-not-in-graph", (i,), bad_member,
                          f"matching {i} lists {bad_member}, which is not an edge of the graph")
            )
        for e in m:
            if e in owner:
                j = owner[e]
                violations.append(
                    Violation("not-edge-disjoint", (j, i) if j != i else (i,), e,
                              f"edge {e} appears in matchings {j} and {i}")
                )
            else:
                owner[e] = i

    missing = sorted(g.edges - set(owner))
    if missing:
        violations.append(
            Violation("not-a-partition", (), missing[0],
                      f"{len(missing)} edges of the graph are not covered, first {missing[0]}")
        )

    vsets = dec.endpoint_sets()
    for i, m in enumerate(dec.matchings):
        present = [e for e in m if e in g.edges]
        covered = set()
        matching_ok = True
        for u, v in sorted(present):
            if u in covered or v in covered:
                violations.append(
                    Violation("not-a-matching", (i,), (u, v),
                              f"edge ({u}, {v}) shares an endpoint with an earlier edge of matching {i}")
                )
                matching_ok = False
                break
            covered.add(u)
            covered.add(v)
        if matching_ok:
            eset = set(present)
            witness = None
            for u in sorted(covered):
                for w in g.adjacency[u]:
                    if u < w and w in covered and (u, w) not in eset:
                        if witness is None or (u, w) < witness:
                            witness = (u, w)
            if witness is not None:
                violations.append(
                    Violation("not-induced", (i,), witness,
                              f"edge {witness} of the graph joins two covered vertices of matching {i}")
                )

    deg = g.degrees
    max_sum = 0
    degsum_witness = None
    for u, v in sorted(g.edges):
        s = deg[u] + deg[v]
        max_sum = max(max_sum, s)
        if s > t + 1 and degsum_witness is None:
            degsum_witness = (u, v)
    if degsum_witness is not None:
        u, v = degsum_witness
        violations.append(
            Violation("degree-sum", (), degsum_witness,
                      f"edge ({u}, {v}) has d_u + d_v = {deg[u] + deg[v]} > t + 1 = {t + 1}")
        )

    max_inter = 0
    for i in range(t):
        for j in range(i + 1, t):
            inter = len(vsets[i] & vsets[j])
            max_inter = max(max_inter, inter)
            if inter > r:
                violations.append(
                    Violation("endpoint-intersection", (i, j), (inter,),
                              f"|V_{i} cap V_{j}| = {inter} > r = {r}")
                )

    isolated = deg.count(0)
    notes = []
    if isolated:
        notes.append(f"{isolated} isolated vertices present; they count toward n")

    return VerificationReport(
        violations=tuple(violations),
        degree_histogram=dict(Counter(deg)),
        max_edge_degree_sum=max_sum,
        max_pair_intersection=max_inter,
        isolated_vertices=isolated,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class DecompositionSummary:
    params: RSParameters
    degree_min: int
    degree_max: int
    max_pair_intersection: int


def decomposition_stats(dec: MatchingDecomposition) -> DecompositionSummary:
    """Exact parameters of a verified decomposition; refuses unverified input."""
    report = verify_decomposition(dec)
    if not report.passed:
        first = report.violations[0]
        raise PreconditionError(
            f"decomposition fails verification: {first.invariant} ({first.detail})"
        )
    g = dec.graph
    deg = g.degrees
    return DecompositionSummary(
        params=RSParameters.of(g.n, dec.r, dec.t),
        degree_min=min(deg) if deg else 0,
        degree_max=max(deg) if deg else 0,
        max_pair_intersection=report.max_pair_intersection,
    )
