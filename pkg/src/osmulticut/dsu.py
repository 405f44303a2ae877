"""Disjoint-set forest and the connectivity queries built on it."""

from __future__ import annotations

from typing import Iterable


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already one set."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def components(n: int, edges: Iterable[tuple[int, int]]) -> DisjointSet:
    ds = DisjointSet(n)
    for a, b in edges:
        ds.union(a, b)
    return ds


def all_connected(n: int, edges: Iterable[tuple[int, int]], pairs: Iterable[tuple[int, int]]) -> bool:
    ds = components(n, edges)
    return all(ds.find(a) == ds.find(b) for a, b in pairs)
