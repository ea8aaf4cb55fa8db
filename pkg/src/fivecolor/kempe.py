"""Kempe chains and the guaranteed pick of a spare color.

Works on plain rotation rows (indexable: rows[v] iterates neighbors) and a
mutable mapping of colors.  Uncolored vertices (missing or None) are
invisible to chains: a chain is a connected piece of the subgraph induced
by the colored vertices whose colors lie in a two-color pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class BadColorPair(ValueError):
    pass


class DiagonalContradiction(RuntimeError):
    """Both diagonal chain swaps around one vertex were unavailable.

    The planarity argument rules this out: two vertex-disjoint chains
    cannot both connect opposite neighbors around a common vertex.  If it
    fires, the coloring state is corrupt.
    """


@dataclass(frozen=True)
class ChainView:
    start: int
    pair: tuple
    members: frozenset

    def __contains__(self, v):
        return v in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _check_pair(pair):
    a, b = pair
    if a == b or not {a, b} <= {1, 2, 3, 4}:
        raise BadColorPair(f"chain colors must be two distinct of 1..4, got {pair!r}")
    return a, b


def chain(rows, colors, start, pair):
    """The Kempe chain through `start` on the given color pair."""
    a, b = _check_pair(pair)
    c0 = colors.get(start)
    if c0 not in (a, b):
        raise BadColorPair(f"vertex {start} has color {c0!r}, not in {pair!r}")
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in rows[u]:
            if w not in seen and colors.get(w) in (a, b):
                seen.add(w)
                queue.append(w)
    return ChainView(start, (a, b), frozenset(seen))


def swap(rows, colors, view):
    """Exchange the two colors on every chain member.

    A maximal chain stays proper by construction; the neighborhood check
    guards against swapping something that is not a maximal chain.
    """
    a, b = view.pair
    for v in view.members:
        colors[v] = b if colors[v] == a else a
    for v in view.members:
        for w in rows[v]:
            assert colors.get(w) != colors[v], (
                f"swap broke edge {v}-{w} (color {colors[v]})"
            )


def free_color(rows, colors, v, stats=None):
    """A color of 1..4 that v can take, swapping one chain if necessary.

    Requires at most 4 neighbors colored 1..4 (vertices with color 5 and
    uncolored ones do not block).  When all four colors appear, the four
    blocking neighbors w1..w4 sit in rotation order around v; by planarity
    either the (c1, c3) chain at w1 misses w3 or the (c2, c4) chain at w2
    misses w4, and the corresponding swap frees a color.
    """
    if stats is not None:
        stats["free_color_calls"] = stats.get("free_color_calls", 0) + 1
    blockers = [w for w in rows[v] if colors.get(w) not in (None, 5)]
    palette = [colors[w] for w in blockers]
    assert len(blockers) <= 4, (
        f"vertex {v} has {len(blockers)} neighbors colored 1..4"
    )
    for c in (1, 2, 3, 4):
        if c not in palette:
            return c
    w1, w2, w3, w4 = blockers
    c1, c2, c3, c4 = palette
    view = chain(rows, colors, w1, (c1, c3))
    if w3 not in view:
        swap(rows, colors, view)
        if stats is not None:
            stats["chain_swaps"] = stats.get("chain_swaps", 0) + 1
        return c1
    view = chain(rows, colors, w2, (c2, c4))
    if w4 not in view:
        swap(rows, colors, view)
        if stats is not None:
            stats["chain_swaps"] = stats.get("chain_swaps", 0) + 1
        return c2
    raise DiagonalContradiction(
        f"vertex {v}: chains {c1}/{c3} and {c2}/{c4} both closed"
    )
