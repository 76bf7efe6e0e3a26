"""Lattice operations on finite partitions: join, meet / common-knowledge
components, refinement, coarsening enumeration, and connectivity witnesses.
"""

from __future__ import annotations

from typing import Iterator, Optional, Sequence

from .errors import DomainError, ResourceLimitError
from .types import Partition

DEFAULT_COARSENING_CAP = 10


def _require_same_space(p: Partition, q: Partition) -> None:
    if p.space != q.space:
        raise DomainError("partitions are defined over different state spaces")


def join(p: Partition, q: Partition) -> Partition:
    """Coarsest common refinement: the nonempty pairwise block intersections.

    This is the information of an agent observing both partitions at once.
    """
    _require_same_space(p, q)
    blocks = []
    for a in p.blocks:
        sa = set(a)
        for b in q.blocks:
            inter = tuple(s for s in b if s in sa)
            if inter:
                blocks.append(inter)
    return Partition(p.space, tuple(blocks))


def ckc_decompose(players: Sequence[Partition]) -> Partition:
    """Finest common coarsening (meet) of the given partitions.

    Blocks are the connected components of the relation linking two states
    whenever some partition puts them in one block; each block is a common
    knowledge component (CKC) of the agents holding these partitions.
    """
    if not players:
        raise DomainError("need at least one partition")
    space = players[0].space
    for p in players[1:]:
        _require_same_space(players[0], p)
    parent = list(range(len(space)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for p in players:
        for block in p.blocks:
            first = space.index(block[0])
            for s in block[1:]:
                union(first, space.index(s))
    groups: dict[int, list[str]] = {}
    for i, s in enumerate(space.states):
        groups.setdefault(find(i), []).append(s)
    return Partition(space, tuple(tuple(g) for g in groups.values()))


def refines(p: Partition, q: Partition) -> bool:
    """True iff every block of p lies inside some block of q."""
    _require_same_space(p, q)
    for block in p.blocks:
        host = set(q.block_of(block[0]))
        if any(s not in host for s in block):
            return False
    return True


def set_partitions(items: Sequence) -> Iterator[tuple[tuple, ...]]:
    """All set partitions of `items` as tuples of tuples, enumerated by
    restricted growth strings in lexicographic order (everything merged
    first, all singletons last). Deterministic by construction."""
    k = len(items)
    if k == 0:
        yield ()
        return
    a = [0] * k
    while True:
        groups: dict[int, list] = {}
        for i, g in enumerate(a):
            groups.setdefault(g, []).append(items[i])
        yield tuple(tuple(g) for g in groups.values())
        i = k - 1
        while i > 0 and a[i] > max(a[:i]):
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, k):
            a[j] = 0


def coarsenings(p: Partition, cap: int = DEFAULT_COARSENING_CAP) -> tuple[Partition, ...]:
    """Every partition obtainable by merging blocks of p, in restricted-
    growth-string order. There are Bell(#blocks) of them, so enumeration is
    refused beyond `cap` blocks."""
    k = len(p.blocks)
    if k > cap:
        raise ResourceLimitError(
            f"partition has {k} blocks; coarsening enumeration is capped at {cap} blocks",
            cap=cap,
        )
    out = []
    for grouping in set_partitions(p.blocks):
        merged = tuple(tuple(s for blk in group for s in blk) for group in grouping)
        out.append(Partition(p.space, merged))
    return tuple(out)


def connect_path(
    players: Sequence[Partition], a: str, b: str
) -> Optional[tuple[tuple[str, Optional[int]], ...]]:
    """Shortest chain of states from a to b where each hop stays inside one
    player's block.

    Returns ((state, player index), ...) where the index at position k names
    the partition linking state k to state k+1 (None on the final entry).
    Ties are broken by state order, then player order. Returns None when a
    and b lie in different common knowledge components.
    """
    if not players:
        raise DomainError("need at least one partition")
    space = players[0].space
    for p in players[1:]:
        _require_same_space(players[0], p)
    space.index(a), space.index(b)
    if a == b:
        return ((a, None),)
    parent: dict[str, tuple[str, int]] = {}
    visited = {a}
    frontier = [a]
    while frontier and b not in visited:
        layer = sorted(frontier, key=space.index)
        frontier = []
        for s in layer:
            for pi, part in enumerate(players):
                for t in part.block_of(s):
                    if t not in visited:
                        visited.add(t)
                        parent[t] = (s, pi)
                        frontier.append(t)
    if b not in visited:
        return None
    hops: list[tuple[str, Optional[int]]] = [(b, None)]
    cur = b
    while cur != a:
        prev, pi = parent[cur]
        hops.append((prev, pi))
        cur = prev
    hops.reverse()
    return tuple(hops)
