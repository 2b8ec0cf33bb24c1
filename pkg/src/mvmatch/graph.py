"""Graph and matching representation, DIMACS I/O, generators, validation.

Vertices are numbered 1..n; index 0 is reserved as a "none" sentinel
throughout the package. Edges keep their insertion order, and adjacency
lists enumerate incident edge ids in that order. Graphs are immutable
after construction and safe to share between matcher instances.
"""

from __future__ import annotations

import math
import random
from typing import Iterable, Optional


class ParseError(ValueError):
    """Raised for malformed DIMACS or matching input; names the bad line."""

    def __init__(self, message: str, line: int = 0) -> None:
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class Graph:
    """Simple undirected graph with 1-based vertices and ordered edges.

    Attributes:
        n: number of vertices (vertices are 1..n).
        edges: list of (u, v) pairs with u < v, in insertion order.
        adjacency: adjacency[v] is the list of incident edge ids of v,
            in edge insertion order. adjacency[0] is unused.
        notes: informational messages produced while building the graph
            (e.g. collapsed duplicate edges from a DIMACS file).
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 notes: Optional[list[str]] = None) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        self.edges: list[tuple[int, int]] = []
        self.adjacency: list[list[int]] = [[] for _ in range(n + 1)]
        self.notes: list[str] = list(notes) if notes else []
        seen: set[tuple[int, int]] = set()
        for (u, v) in edges:
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                self.notes.append(f"duplicate edge {u} {v} collapsed")
                continue
            seen.add((u, v))
            eid = len(self.edges)
            self.edges.append((u, v))
            self.adjacency[u].append(eid)
            self.adjacency[v].append(eid)

    @property
    def m(self) -> int:
        return len(self.edges)

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if v == u else u

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in {self.edges[e] for e in self.adjacency[u]}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Matching:
    """A matching as a symmetric mate map; mate[v] == 0 means v is free."""

    def __init__(self, n: int, mate: Optional[list[int]] = None) -> None:
        self.n = n
        self.mate: list[int] = list(mate) if mate is not None else [0] * (n + 1)
        if len(self.mate) != n + 1:
            raise ValueError("mate array must have length n + 1")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Matching":
        m = cls(n)
        for (u, v) in pairs:
            m.add(u, v)
        return m

    def add(self, u: int, v: int) -> None:
        if self.mate[u] or self.mate[v]:
            raise ValueError(f"vertex already matched in pair ({u}, {v})")
        self.mate[u] = v
        self.mate[v] = u

    def is_free(self, v: int) -> bool:
        return self.mate[v] == 0

    def size(self) -> int:
        return sum(1 for v in range(1, self.n + 1) if self.mate[v] > v)

    def pairs(self) -> list[tuple[int, int]]:
        """Matched edges as (u, v) with u < v, ascending."""
        return [(v, self.mate[v]) for v in range(1, self.n + 1)
                if self.mate[v] > v]

    def copy(self) -> "Matching":
        return Matching(self.n, self.mate)

    def __repr__(self) -> str:
        return f"Matching(size={self.size()})"


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS edge-format graph ("c" comments, "p edge n m", "e u v").

    Duplicate edges (including reversed duplicates) are collapsed; the first
    occurrence is kept and a note is recorded on the returned graph.

    Raises:
        ParseError: malformed header, vertex out of range, self-loop, or
            edge-count mismatch, each reported with its line number.
    """
    n = -1
    declared_m = -1
    header_line = 0
    edges: list[tuple[int, int]] = []
    notes: list[str] = []
    seen: set[tuple[int, int]] = set()
    edge_lines = 0
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n >= 0:
                raise ParseError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, declared_m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError(f"malformed header {line!r}", lineno)
            header_line = lineno
        elif fields[0] == "e":
            if n < 0:
                raise ParseError("edge before problem line", lineno)
            if len(fields) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(f"vertex out of range in edge {u} {v}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edge_lines += 1
            if edge_lines > declared_m:
                raise ParseError(
                    f"more than the declared {declared_m} edges", lineno)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                notes.append(f"duplicate edge {u} {v} at line {lineno} collapsed")
            else:
                seen.add(key)
                edges.append(key)
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n < 0:
        raise ParseError("missing problem line", lineno or 1)
    if edge_lines != declared_m:
        raise ParseError(
            f"edge-count mismatch: header declares {declared_m}, found {edge_lines}",
            header_line)
    return Graph(n, edges, notes)


def write_dimacs(g: Graph) -> str:
    """Serialize a graph in DIMACS edge format."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for (u, v) in g.edges)
    return "\n".join(lines) + "\n"


def generate_random(n: int, m: int, seed: int) -> Graph:
    """Generate a simple graph with exactly m distinct edges, pure in (n, m, seed).

    The generator samples m indices without replacement from the triangular
    enumeration of vertex pairs (pair (u, v) with u < v has index
    (v-1)(v-2)/2 + u - 1) using random.Random(seed).sample, then decodes and
    sorts them by index. This procedure is part of the package contract and
    stays stable across releases.

    Raises:
        ValueError: if m exceeds n(n-1)/2.
    """
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"m={m} exceeds the {total} possible edges on {n} vertices")
    rng = random.Random(seed)
    ks = sorted(rng.sample(range(total), m)) if m else []
    edges = []
    for k in ks:
        # Decode triangular index: v is the smallest value with (v-1)(v-2)/2 > k.
        v = (1 + math.isqrt(8 * k + 1)) // 2 + 1
        while (v - 1) * (v - 2) // 2 > k:
            v -= 1
        while v * (v - 1) // 2 <= k:
            v += 1
        u = k - (v - 1) * (v - 2) // 2 + 1
        edges.append((u, v))
    return Graph(n, edges)


def greedy_matching(g: Graph) -> Matching:
    """Maximal matching by scanning edges in insertion order."""
    m = Matching(g.n)
    for (u, v) in g.edges:
        if m.mate[u] == 0 and m.mate[v] == 0:
            m.mate[u] = v
            m.mate[v] = u
    return m


def validate_matching(g: Graph, m: Matching,
                      diagnostics: Optional[list[str]] = None) -> bool:
    """Check the matching invariants against g.

    Returns True iff the mate map is symmetric, every matched pair is an
    edge of g, and sizes agree. When a list is supplied via `diagnostics`,
    a description of each violation is appended to it.
    """
    problems: list[str] = []
    if m.n != g.n or len(m.mate) != g.n + 1:
        problems.append(f"matching is over {m.n} vertices, graph has {g.n}")
    edge_set = {e for e in g.edges}
    for v in range(1, min(m.n, g.n) + 1):
        w = m.mate[v]
        if w == 0:
            continue
        if not (1 <= w <= g.n):
            problems.append(f"mate({v}) = {w} out of range")
            continue
        if m.mate[w] != v:
            problems.append(f"mate map not symmetric at {v}: mate({v})={w}, mate({w})={m.mate[w]}")
        if v < w and (v, w) not in edge_set:
            problems.append(f"matched pair {v}-{w} is not an edge")
    if diagnostics is not None:
        diagnostics.extend(problems)
    return not problems


def is_maximal(g: Graph, m: Matching) -> bool:
    """True iff no edge has both endpoints free (direct scan)."""
    return all(m.mate[u] != 0 or m.mate[v] != 0 for (u, v) in g.edges)


def write_result(m: Matching, stat_lines: Optional[Iterable[str]] = None) -> str:
    """Emit the result format: "s <size>", then "m u v" per matched edge
    (u < v, ascending), then optional "c" comment lines. Byte-exact for a
    given matching and stats."""
    out = [f"s {m.size()}"]
    out.extend(f"m {u} {v}" for (u, v) in m.pairs())
    if stat_lines:
        out.extend(f"c {line}" for line in stat_lines)
    return "\n".join(out) + "\n"


def parse_matching(text: str, n: int) -> Matching:
    """Parse the matching subset of the result format ("m u v" lines;
    "s" and "c" lines are checked/ignored). Round-trips write_result."""
    m = Matching(n)
    declared: Optional[int] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "s":
            if len(fields) != 2:
                raise ParseError(f"malformed size line {line!r}", lineno)
            declared = int(fields[1])
        elif fields[0] == "m":
            if len(fields) != 3:
                raise ParseError(f"malformed matching line {line!r}", lineno)
            u, v = int(fields[1]), int(fields[2])
            if not (1 <= u <= n) or not (1 <= v <= n) or u == v:
                raise ParseError(f"bad matched pair {u} {v}", lineno)
            try:
                m.add(u, v)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if declared is not None and declared != m.size():
        raise ParseError(f"size line declares {declared}, found {m.size()}")
    return m
