"""Labeled rooted trees on ``{1..n}`` and their inversion statistics.

A tree is stored as a root plus a parent tuple: ``parents[v - 1]`` is the
parent of vertex ``v`` and the root's slot holds 0. Trees are enumerated as
(Pruefer code, root) pairs in lexicographic order.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import ParameterError
from .seqcore import Distribution

__all__ = [
    "RootedTree",
    "prufer_decode",
    "prufer_encode",
    "orient",
    "enumerate_rooted_trees",
    "is_uprooted",
    "enumerate_uprooted",
    "root_degree",
    "inversions",
    "surface_inversions",
    "uprooted_statistic_distribution",
    "tree_inversion_distribution",
    "STATISTICS",
]

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class RootedTree:
    n: int
    root: int
    parents: tuple[int, ...]

    def __post_init__(self):
        n, root, parents = self.n, self.root, tuple(self.parents)
        object.__setattr__(self, "parents", parents)
        if n < 1 or len(parents) != n:
            raise ParameterError(f"need {n} parent slots, got {len(parents)}")
        if not 1 <= root <= n or parents[root - 1] != 0:
            raise ParameterError(f"root {root} must be in 1..{n} with no parent")
        for v in range(1, n + 1):
            if v != root and not 1 <= parents[v - 1] <= n:
                raise ParameterError(f"vertex {v} has invalid parent {parents[v - 1]}")
        for v in range(1, n + 1):
            seen = 0
            while v != root:
                v = parents[v - 1]
                seen += 1
                if seen > n:
                    raise ParameterError("parent pointers contain a cycle")

    def parent(self, v: int) -> int | None:
        return None if v == self.root else self.parents[v - 1]

    def children(self, v: int) -> list[int]:
        return [c for c in range(1, self.n + 1) if c != self.root and self.parents[c - 1] == v]

    def ancestors(self, v: int) -> Iterator[int]:
        """Proper ancestors of ``v``, nearest first."""
        while v != self.root:
            v = self.parents[v - 1]
            yield v

    def edges(self) -> list[Edge]:
        return sorted(
            (min(v, p), max(v, p))
            for v, p in enumerate(self.parents, start=1)
            if v != self.root
        )

    def to_record(self) -> dict:
        return {"root": self.root, "parents": list(self.parents)}


def prufer_decode(code: Sequence[int], n: int) -> list[Edge]:
    """Edges (as sorted pairs, in sorted order) of the tree with this Pruefer code."""
    if n < 2:
        raise ParameterError(f"Pruefer codes need n >= 2, got {n}")
    code = list(code)
    if len(code) != n - 2:
        raise ParameterError(f"code for n={n} must have length {n - 2}, got {len(code)}")
    if any(not 1 <= c <= n for c in code):
        raise ParameterError(f"code labels must lie in 1..{n}: {code}")
    deg = [1] * (n + 1)
    for c in code:
        deg[c] += 1
    leaves = [v for v in range(1, n + 1) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for c in code:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, c), max(leaf, c)))
        deg[c] -= 1
        if deg[c] == 1:
            heapq.heappush(leaves, c)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return sorted(edges)


def prufer_encode(edges: Iterable[Edge], n: int) -> tuple[int, ...]:
    if n < 2:
        raise ParameterError(f"Pruefer codes need n >= 2, got {n}")
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    count = 0
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
        count += 1
    if count != n - 1:
        raise ParameterError(f"a tree on {n} vertices has {n - 1} edges, got {count}")
    leaves = [v for v in adj if len(adj[v]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        code.append(nb)
        adj[nb].discard(leaf)
        adj[leaf].clear()
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return tuple(code)


def orient(edges: Iterable[Edge], n: int, root: int) -> RootedTree:
    """Root an unrooted tree given by its edge list."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parents = [0] * n
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                parents[w - 1] = u
                queue.append(w)
    if len(seen) != n:
        raise ParameterError("edge list is not a spanning tree")
    return RootedTree(n, root, tuple(parents))


def _codes(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(1, n + 1), repeat=max(n - 2, 0))


def _trees(n: int, roots: Sequence[int]) -> Iterator[RootedTree]:
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if n == 1:
        yield RootedTree(1, 1, (0,))
        return
    for code in _codes(n):
        edges = prufer_decode(code, n)
        for root in roots:
            yield orient(edges, n, root)


def enumerate_rooted_trees(n: int) -> Iterator[RootedTree]:
    """All ``n**(n-1)`` rooted labeled trees on ``{1..n}``."""
    return _trees(n, range(1, n + 1))


def is_uprooted(tree: RootedTree) -> bool:
    """True when the root is larger than each of its children."""
    return all(c < tree.root for c in tree.children(tree.root))


def enumerate_uprooted(n: int) -> Iterator[RootedTree]:
    if n < 2:
        raise ParameterError(f"n must be at least 2, got {n}")
    return filter(is_uprooted, enumerate_rooted_trees(n))


def root_degree(tree: RootedTree) -> int:
    return len(tree.children(tree.root))


def inversions(tree: RootedTree) -> int:
    """Pairs (a, b) with b a proper descendant of a and a > b."""
    return sum(a > b for b in range(1, tree.n + 1) for a in tree.ancestors(b))


def surface_inversions(tree: RootedTree) -> int:
    """Inversions in which neither vertex is the root."""
    root = tree.root
    return sum(
        a > b
        for b in range(1, tree.n + 1)
        if b != root
        for a in tree.ancestors(b)
        if a != root
    )


STATISTICS = {
    "root_degree": root_degree,
    "surface_inversions": surface_inversions,
}


def uprooted_statistic_distribution(n: int, statistic: str) -> Distribution:
    try:
        fn = STATISTICS[statistic]
    except KeyError:
        raise ParameterError(
            f"unknown statistic {statistic!r}; choose from {sorted(STATISTICS)}"
        ) from None
    return Distribution.from_values(fn(t) for t in enumerate_uprooted(n))


def tree_inversion_distribution(n: int) -> Distribution:
    """Inversion counts over all ``n**(n-2)`` trees on ``{1..n}`` rooted at 1."""
    return Distribution.from_values(inversions(t) for t in _trees(n, (1,)))
