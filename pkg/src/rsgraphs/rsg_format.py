"""Plain-text .rsg serialization: header `rsg n t r`, then `u v m` edge records.

Parsing builds the graph and decomposition but never verifies them; corrupt or
inconsistent files stay inspectable.  Emission is canonical (records sorted by
(m, u, v), newline-terminated) so parse-then-emit is byte-identical.
"""

from __future__ import annotations

from .core import Graph, MatchingDecomposition


class RsgParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_rsg(text: str) -> MatchingDecomposition:
    lines = text.splitlines()
    if not lines:
        raise RsgParseError(1, "empty document, expected 'rsg n t r' header")
    tokens = lines[0].split()
    if len(tokens) != 4 or tokens[0] != "rsg":
        raise RsgParseError(1, f"malformed header {lines[0]!r}, expected 'rsg n t r'")
    try:
        n, t, r = (int(tok) for tok in tokens[1:])
    except ValueError:
        raise RsgParseError(1, f"non-integer header fields in {lines[0]!r}")
    if n < 0 or t < 0 or r < 0:
        raise RsgParseError(1, "header fields must be non-negative")

    matchings = [[] for _ in range(t)]
    seen = {}
    for offset, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != 3:
            raise RsgParseError(offset, f"malformed record {line!r}, expected 'u v m'")
        try:
            u, v, m = (int(tok) for tok in tokens)
        except ValueError:
            raise RsgParseError(offset, f"non-integer record fields in {line!r}")
        if not (0 <= u < v < n):
            raise RsgParseError(offset, f"vertex pair ({u}, {v}) violates 0 <= u < v < n = {n}")
        if not (0 <= m < t):
            raise RsgParseError(offset, f"matching index {m} out of range [0, {t})")
        if (u, v) in seen:
            raise RsgParseError(offset, f"duplicate edge ({u}, {v}), first seen on line {seen[(u, v)]}")
        seen[(u, v)] = offset
        matchings[m].append((u, v))

    graph = Graph.from_edges(n, seen)
    return MatchingDecomposition.make(graph, matchings, r)


def emit_rsg(dec: MatchingDecomposition) -> str:
    records = sorted(
        (m, u, v)
        for m, matching in enumerate(dec.matchings)
        for u, v in matching
    )
    out = [f"rsg {dec.graph.n} {dec.t} {dec.r}"]
    out.extend(f"{u} {v} {m}" for m, u, v in records)
    return "\n".join(out) + "\n"
