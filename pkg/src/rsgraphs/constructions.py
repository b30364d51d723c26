"""Deterministic generators for the induced-matching graph families.

Each generator returns a MatchingDecomposition with a fixed canonical vertex
labeling (colex subset order for the Kneser family, integer bit values for the
hypercube, part offsets for the bipartite families) so serialized output is
reproducible byte for byte.  The Cayley construction is additionally certified
by the verifier before being returned; it is never trusted on faith.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .core import (
    Graph,
    MatchingDecomposition,
    ParameterError,
    PreconditionError,
    verify_decomposition,
)


class ResourceLimitError(ValueError):
    """A construction would exceed the configured size budget."""


DEFAULT_VERTEX_BUDGET = 100_000


def _require_verified(dec: MatchingDecomposition, what: str) -> None:
    report = verify_decomposition(dec)
    if not report.passed:
        first = report.violations[0]
        raise PreconditionError(f"{what}: input decomposition fails verification ({first.invariant})")


def kneser_rs(k: int, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> MatchingDecomposition:
    """Kneser graph KG(2k+1, k) split into 2k+1 induced matchings.

    Vertices are the k-subsets of {1, ..., 2k+1} in colexicographic order;
    matching i pairs up the subsets that are disjoint and miss element i.
    Parameters: n = C(2k+1, k), t = 2k+1, r = C(2k, k)/2 = (n/4)(1 + 1/t).
    """
    if k < 1:
        raise ParameterError("k must be >= 1")
    m = 2 * k + 1
    n = math.comb(m, k)
    if n > vertex_budget:
        raise ResourceLimitError(f"KG({m}, {k}) has {n} vertices, budget is {vertex_budget}")

    subsets = sorted(combinations(range(1, m + 1), k), key=lambda s: tuple(reversed(s)))
    index = {s: i for i, s in enumerate(subsets)}
    universe = frozenset(range(1, m + 1))

    matchings = []
    edges = []
    for i in range(1, m + 1):
        mi = []
        for a in subsets:
            sa = set(a)
            if i in sa:
                continue
            b = tuple(sorted(universe - sa - {i}))
            ia, ib = index[a], index[b]
            if ia < ib:
                mi.append((ia, ib))
        mi.sort()
        matchings.append(mi)
        edges.extend(mi)

    graph = Graph.from_edges(n, edges)
    r = math.comb(2 * k, k) // 2
    return MatchingDecomposition.make(graph, matchings, r)


def hypercube_rs(k: int, augmented: bool = False) -> MatchingDecomposition:
    """k-dimensional hypercube split into 2k induced matchings of size n/4.

    Vertices are bit vectors labeled by integer value.  Matching i (1-based,
    i <= k) holds the direction-i edges whose lower endpoint has even parity
    and a zero i-th bit; matching k+i is the odd-parity counterpart.  With k
    even, `augmented` adds the even- and odd-antipodal perfect pairings,
    giving t = 2k + 2 at the same r = n/4.
    """
    if k < 2:
        raise ParameterError("k must be >= 2 so that n/4 matchings are nonempty")
    if augmented and k % 2:
        raise ParameterError("augmented variant requires even k")
    n = 1 << k

    matchings = []
    for parity in (0, 1):
        for i in range(k):
            bit = 1 << i
            mi = [
                (v, v | bit)
                for v in range(n)
                if not v & bit and bin(v).count("1") % 2 == parity
            ]
            mi.sort()
            matchings.append(mi)

    if augmented:
        ones = n - 1
        for parity in (0, 1):
            mi = [
                (v, v ^ ones)
                for v in range(n)
                if v < v ^ ones and bin(v).count("1") % 2 == parity
            ]
            mi.sort()
            matchings.append(mi)

    edges = [e for mi in matchings for e in mi]
    graph = Graph.from_edges(n, edges)
    return MatchingDecomposition.make(graph, matchings, n // 4)


def disjoint_union(dec: MatchingDecomposition, copies: int) -> MatchingDecomposition:
    """Vertex-disjoint copies; matching i of the output unions the copy translates.

    t is unchanged, r scales by `copies`, so the ratio r/n is preserved exactly.
    """
    if copies < 1:
        raise ParameterError("copies must be >= 1")
    _require_verified(dec, "disjoint_union")
    n = dec.graph.n
    matchings = [
        [(u + c * n, v + c * n) for c in range(copies) for (u, v) in mi]
        for mi in dec.matchings
    ]
    edges = [e for mi in matchings for e in mi]
    graph = Graph.from_edges(copies * n, edges)
    return MatchingDecomposition.make(graph, matchings, dec.r * copies)


def double_cover(dec: MatchingDecomposition) -> MatchingDecomposition:
    """Bipartite double cover G x K2: a (2r, t) decomposition on 2n vertices.

    Vertex (v, 0) keeps label v; (v, 1) becomes v + n.  Each matching edge
    (u, v) contributes both cross edges (u, v+n) and (v, u+n).
    """
    _require_verified(dec, "double_cover")
    n = dec.graph.n
    matchings = []
    for mi in dec.matchings:
        out = []
        for u, v in mi:
            out.append((u, v + n))
            out.append((v, u + n))
        out.sort()
        matchings.append(out)
    edges = [e for mi in matchings for e in mi]
    graph = Graph.from_edges(2 * n, edges)
    return MatchingDecomposition.make(graph, matchings, 2 * dec.r)


@dataclass(frozen=True)
class APFreeSet:
    """Strictly increasing positive integers <= limit with no 3-term progression."""

    limit: int
    elements: tuple
    method: str
    note: str = ""

    def __len__(self):
        return len(self.elements)


def has_three_term_progression(elements) -> bool:
    """Brute-force oracle: is there x + z = 2y with x, y, z in the set, x != z?"""
    values = sorted(set(elements))
    present = set(values)
    for i, x in enumerate(values):
        for z in values[i + 1:]:
            if (x + z) % 2 == 0 and (x + z) // 2 in present:
                return True
    return False


AP_VERIFY_LIMIT = 10 ** 5


def _greedy_base3(m: int):
    # x is kept iff x - 1 has no digit 2 in base 3
    out = []
    for x in range(1, m + 1):
        v = x - 1
        while v:
            if v % 3 == 2:
                break
            v //= 3
        else:
            out.append(x)
    return out


def _behrend_layer(m: int):
    d = max(1, round(math.sqrt(math.log(m))))
    q = int(round(m ** (1.0 / d)))
    while q ** d > m:
        q -= 1
    half = q // 2
    if half < 1:
        return None
    layers = {}
    digits = [0] * d

    def rec(pos, value, sq):
        if pos == d:
            layers.setdefault(sq, []).append(value + 1)
            return
        for x in range(half):
            rec(pos + 1, value + x * q ** pos, sq + x * x)

    rec(0, 0, 0)
    best = max(layers.values(), key=lambda vals: (len(vals), -min(vals)))
    return sorted(best)


def ap_free_set(method: str, limit: int) -> APFreeSet:
    """Construct a 3-AP-free subset of [limit] and brute-force verify it.

    `greedy-base3` keeps x when x-1 has no base-3 digit 2.  `behrend` encodes
    the densest sphere layer of small digit vectors in base q; for tiny limits
    it falls back to greedy-base3 (noted in the output).
    """
    if limit < 1:
        raise ParameterError("limit must be >= 1")
    if method not in ("greedy-base3", "behrend"):
        raise ParameterError(f"unknown method {method!r}")

    note = ""
    used = method
    if method == "behrend":
        if limit < 8:
            elements = _greedy_base3(limit)
            used = "greedy-base3"
            note = "behrend degenerate below 8; fell back to greedy-base3"
        else:
            elements = _behrend_layer(limit)
            if elements is None:
                elements = _greedy_base3(limit)
                used = "greedy-base3"
                note = "behrend digit range collapsed; fell back to greedy-base3"
    else:
        elements = _greedy_base3(limit)

    if limit <= AP_VERIFY_LIMIT:
        if has_three_term_progression(elements):
            raise AssertionError("constructed set contains a 3-term progression")
    else:
        note = (note + "; " if note else "") + f"limit above {AP_VERIFY_LIMIT}, brute-force check skipped"
    if elements and (elements[-1] > limit or elements[0] < 1):
        raise AssertionError("constructed set leaves [limit]")
    return APFreeSet(limit, tuple(elements), used, note)


def cayley_rs(modulus: int, s: APFreeSet) -> MatchingDecomposition:
    """Bipartite Cayley-style family over Z_N driven by a 3-AP-free difference set.

    Parts X = {0..N-1} and Y = {N..2N-1}; (x, N+y) is an edge iff (y - x) mod N
    is in S.  Matching M_z (z in Z_N) is {(z-2a, N + z-a) : a in S}.  N odd
    makes each M_z a matching; S being 3-AP-free and confined to [1, (N-1)/3]
    makes it induced.  The output is certified by the verifier before return.
    """
    n_mod = modulus
    if n_mod < 1 or n_mod % 2 == 0:
        raise ParameterError("modulus must be odd")
    elems = s.elements
    if not elems:
        raise ParameterError("difference set is empty")
    if 3 * max(elems) > n_mod - 1:
        raise ParameterError(
            f"max(S) = {max(elems)} exceeds (N-1)/3; wraparound would create spurious progressions"
        )

    matchings = []
    for z in range(n_mod):
        mz = sorted(((z - 2 * a) % n_mod, n_mod + (z - a) % n_mod) for a in elems)
        matchings.append(mz)
    edges = [e for mz in matchings for e in mz]
    graph = Graph.from_edges(2 * n_mod, edges)
    dec = MatchingDecomposition.make(graph, matchings, len(elems))

    report = verify_decomposition(dec)
    if not report.passed:
        first = report.violations[0]
        raise AssertionError(f"cayley construction failed certification: {first.invariant}")
    return dec
