"""Maximum cardinality matching in general graphs (blossom contraction).

Classic augmenting-path search with blossom bases kept in a ``base`` array;
a greedy matching seeds the search so only a few augmentations remain on the
dense gadget graphs the factor solver produces. Deterministic: vertices are
scanned in ascending id and adjacency lists are sorted.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph

__all__ = ["Matching", "max_matching", "has_perfect_matching"]


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def partner_array(self, n: int) -> list[int]:
        """match[v] = partner of v, or -1 if exposed."""
        match = [-1] * n
        for u, v in self.pairs:
            match[u] = v
            match[v] = u
        return match


def max_matching(g: Graph) -> Matching:
    n = g.n
    adj = g.adjacency
    match = [-1] * n
    for v in range(n):
        if match[v] < 0:
            for u in adj[v]:
                if match[u] < 0:
                    match[v] = u
                    match[u] = v
                    break
    for v in range(n):
        if match[v] < 0:
            _try_augment(n, adj, match, v)
    pairs = tuple((v, match[v]) for v in range(n) if 0 <= v < match[v])
    return Matching(pairs)


def has_perfect_matching(g: Graph) -> bool:
    return 2 * len(max_matching(g)) == g.n


def _try_augment(n, adj, match, root) -> bool:
    """Search for an augmenting path from an exposed root; apply it if found."""
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_queue[root] = True
    q = deque([root])
    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                # edge closes an odd cycle: contract the blossom
                cur_base = _lca(match, base, parent, v, to)
                in_blossom = [False] * n
                _mark_path(match, base, parent, in_blossom, v, cur_base, to)
                _mark_path(match, base, parent, in_blossom, to, cur_base, v)
                for i in range(n):
                    if in_blossom[base[i]]:
                        base[i] = cur_base
                        if not in_queue[i]:
                            in_queue[i] = True
                            q.append(i)
            elif parent[to] < 0:
                parent[to] = v
                if match[to] < 0:
                    # augment along the alternating path back to the root
                    while to >= 0:
                        pv = match[parent[to]]
                        match[to] = parent[to]
                        match[parent[to]] = to
                        to = pv
                    return True
                nxt = match[to]
                in_queue[nxt] = True
                q.append(nxt)
    return False


def _lca(match, base, parent, a, b) -> int:
    seen = set()
    v = a
    while True:
        v = base[v]
        seen.add(v)
        if match[v] < 0:
            break
        v = parent[match[v]]
    v = b
    while True:
        v = base[v]
        if v in seen:
            return v
        v = parent[match[v]]


def _mark_path(match, base, parent, in_blossom, v, stop, child) -> None:
    while base[v] != stop:
        in_blossom[base[v]] = True
        in_blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]
