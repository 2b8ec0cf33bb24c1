"""Independent reference implementations used to verify the matching engine.

Nothing in this module shares code with the engine: the blossom matcher is
a textbook augmenting-path/blossom-shrinking algorithm, the exhaustive
matcher branches over vertex assignments, and levels are recomputed either
by state-space BFS or by full enumeration of simple alternating paths.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .graph import Graph, Matching

INF = 1 << 30

BRUTE_FORCE_EDGE_LIMIT = 24
ENUMERATION_VERTEX_LIMIT = 16
LEVEL_ORACLE_VERTEX_LIMIT = 2000


def brute_force_max(g: Graph) -> int:
    """Exact maximum matching cardinality by exhaustive branching.

    Branches on the lowest covered vertex: match it with each available
    neighbor or leave it unmatched, pruning with the trivial upper bound.

    Raises:
        ValueError: if the graph has more than 24 edges.
    """
    if g.m > BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(
            f"instance too large for brute force ({g.m} > {BRUTE_FORCE_EDGE_LIMIT} edges)")
    covered = sorted({v for e in g.edges for v in e})
    neighbors: dict[int, list[int]] = {v: [] for v in covered}
    for (u, v) in g.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    k = len(covered)
    used: set[int] = set()
    best = 0

    def rec(idx: int, count: int) -> None:
        nonlocal best
        if count + (k - idx) // 2 <= best:
            return
        if idx == k:
            best = max(best, count)
            return
        v = covered[idx]
        if v in used:
            rec(idx + 1, count)
            return
        for w in neighbors[v]:
            if w not in used and w > v:
                used.add(v)
                used.add(w)
                rec(idx + 1, count + 1)
                used.discard(v)
                used.discard(w)
        rec(idx + 1, count)

    rec(0, 0)
    return best


def reference_blossom_max(g: Graph) -> Matching:
    """Maximum matching by the classical blossom-shrinking algorithm.

    BFS alternating forest from each free vertex; odd cycles are contracted
    by rebasing vertices onto the cycle's base. O(n^3) worst case, intended
    for instances up to a couple of thousand vertices.
    """
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for (u, v) in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    match = [0] * (n + 1)
    parent = [0] * (n + 1)
    base = list(range(n + 1))

    # Greedy start saves a linear number of searches.
    for v in range(1, n + 1):
        if match[v] == 0:
            for w in adj[v]:
                if match[w] == 0:
                    match[v] = w
                    match[w] = v
                    break

    def lca(a: int, b: int) -> int:
        seen = [False] * (n + 1)
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == 0:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> bool:
        used = [False] * (n + 1)
        for i in range(n + 1):
            parent[i] = 0
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != 0 and parent[match[to]] != 0):
                    # Odd cycle: contract everything down to the common base.
                    cur_base = lca(v, to)
                    in_blossom = [False] * (n + 1)
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(1, n + 1):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == 0:
                    parent[to] = v
                    if match[to] == 0:
                        # Augment along the tree path back to the root.
                        u = to
                        while u != 0:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(1, n + 1):
        if match[v] == 0:
            find_path(v)
    return Matching(n, match)


class LevelOracleResult:
    """Per-vertex shortest even/odd alternating-walk lengths (INF if none)."""

    def __init__(self, even: list[int], odd: list[int]) -> None:
        self.even = even
        self.odd = odd

    def min_level(self, v: int) -> int:
        return min(self.even[v], self.odd[v])


def level_oracle(g: Graph, m: Matching) -> LevelOracleResult:
    """Shortest even/odd alternating-path lengths by BFS over (vertex, parity).

    The BFS walks the state space honoring matched-edge alternation: from an
    even state every unmatched edge may be taken, from an odd state only the
    matched edge. This equals the engine's levels for every level a search
    phase finalizes; comparisons against it are restricted accordingly.

    Raises:
        ValueError: if the graph is too large for the oracle.
    """
    if g.n > LEVEL_ORACLE_VERTEX_LIMIT:
        raise ValueError(f"instance too large for level oracle (n={g.n})")
    even = [INF] * (g.n + 1)
    odd = [INF] * (g.n + 1)
    queue: deque[tuple[int, int]] = deque()
    for v in range(1, g.n + 1):
        if m.mate[v] == 0:
            even[v] = 0
            queue.append((v, 0))
    while queue:
        v, parity = queue.popleft()
        dist = even[v] if parity == 0 else odd[v]
        if parity == 0:
            for eid in g.adjacency[v]:
                w = g.other_end(eid, v)
                if m.mate[v] == w:
                    continue
                if odd[w] > dist + 1:
                    odd[w] = dist + 1
                    queue.append((w, 1))
        else:
            w = m.mate[v]
            if w != 0 and even[w] > dist + 1:
                even[w] = dist + 1
                queue.append((w, 0))
    return LevelOracleResult(even, odd)


def enumerate_alternating_paths(
        g: Graph, m: Matching,
        live: Optional[set[int]] = None,
) -> dict[tuple[int, int], tuple[int, list[tuple[int, ...]]]]:
    """All shortest simple alternating paths per (vertex, parity), exhaustively.

    Walks every simple alternating path from every free vertex (paths start
    with an unmatched edge, matched edges are crossed on odd-to-even steps)
    and keeps, for each reachable (vertex, parity), the minimum length and
    every path realizing it. Only usable on tiny graphs.

    Args:
        live: optional vertex subset to restrict the graph to (matching
            restricted implicitly).

    Returns:
        dict mapping (v, parity) to (min_length, [paths as vertex tuples]).
    """
    if g.n > ENUMERATION_VERTEX_LIMIT:
        raise ValueError(f"instance too large for path enumeration (n={g.n})")
    alive = live if live is not None else set(range(1, g.n + 1))
    best: dict[tuple[int, int], tuple[int, list[tuple[int, ...]]]] = {}

    def record(v: int, parity: int, path: tuple[int, ...]) -> None:
        length = len(path) - 1
        key = (v, parity)
        cur = best.get(key)
        if cur is None or length < cur[0]:
            best[key] = (length, [path])
        elif length == cur[0]:
            cur[1].append(path)

    def dfs(v: int, parity: int, path: tuple[int, ...], on_path: set[int]) -> None:
        record(v, parity, path)
        if parity == 0:
            for eid in g.adjacency[v]:
                w = g.other_end(eid, v)
                if w in alive and w not in on_path and m.mate[v] != w:
                    on_path.add(w)
                    dfs(w, 1, path + (w,), on_path)
                    on_path.discard(w)
        else:
            w = m.mate[v]
            if w != 0 and w in alive and w not in on_path:
                on_path.add(w)
                dfs(w, 0, path + (w,), on_path)
                on_path.discard(w)

    for f in range(1, g.n + 1):
        if f in alive and m.mate[f] == 0:
            dfs(f, 0, (f,), {f})
    return best


def enumerated_levels(g: Graph, m: Matching,
                      live: Optional[set[int]] = None) -> LevelOracleResult:
    """Exact even/odd levels over simple alternating paths (tiny graphs)."""
    paths = enumerate_alternating_paths(g, m, live)
    even = [INF] * (g.n + 1)
    odd = [INF] * (g.n + 1)
    for (v, parity), (length, _) in paths.items():
        if parity == 0:
            even[v] = length
        else:
            odd[v] = length
    return LevelOracleResult(even, odd)


def has_augmenting_path(g: Graph, m: Matching) -> bool:
    """True iff some free vertex reaches another free vertex alternately.

    Checked via the blossom matcher on a copy (walk-based level reachability
    is not sound for this query on general graphs).
    """
    return reference_blossom_max(g).size() > m.size()


def petal_property_check(g: Graph, m: Matching, petals: list,
                         diagnostics: Optional[list[str]] = None) -> bool:
    """Verify structural petal properties against exhaustive path enumeration.

    For every reported petal record (bud b, member set P, live vertex set):
    every minimum-length simple alternating path realizing any member's
    minimum level must pass through b, and P must equal the union of the
    member-to-bud subpaths of those paths. Only for graphs small enough to
    enumerate.

    Each record must provide attributes `bud`, `members`, and `live`
    (falling back to all vertices when `live` is absent).

    Returns False (with a counterexample appended to `diagnostics` when
    given) as soon as a petal violates either property.
    """
    problems: list[str] = []
    for petal in petals:
        bud = petal.bud
        members = set(petal.members)
        live = set(getattr(petal, "live", None) or range(1, g.n + 1))
        paths = enumerate_alternating_paths(g, m, live)
        union: set[int] = {bud}
        ok = True
        for v in sorted(members):
            entry = paths.get((v, 0)) or paths.get((v, 1))
            # Use the parity realizing the *minimum* level of v.
            even_entry = paths.get((v, 0))
            odd_entry = paths.get((v, 1))
            candidates = [e for e in (even_entry, odd_entry) if e is not None]
            if not candidates:
                problems.append(f"petal bud {bud}: member {v} unreachable")
                ok = False
                continue
            min_len = min(e[0] for e in candidates)
            min_paths = [p for e in candidates if e[0] == min_len for p in e[1]]
            for path in min_paths:
                if bud not in path:
                    problems.append(
                        f"petal bud {bud}: min path {path} to {v} avoids the bud")
                    ok = False
                    continue
                idx = path.index(bud)
                union.update(path[idx:])
            del entry
        if ok and union != members:
            extra = sorted(union - members)
            missing = sorted(members - union)
            problems.append(
                f"petal bud {bud}: member set {sorted(members)} vs subpath union "
                f"{sorted(union)} (extra {extra}, missing {missing})")
    if diagnostics is not None:
        diagnostics.extend(problems)
    return not problems
