"""Five-coloring a planar embedding with a small fifth color class.

Descent deletes vertices until at most three remain: degree-4-or-less
vertices straight off a heap, and once the minimum degree reaches 5 a
catalog occurrence as one block.  Every hole is re-triangulated on the
spot and every mutation is logged, so the ascent can replay the log
backwards and color each vertex the moment its full neighborhood is back.

A plain deleted vertex takes a spare color among its at most four colored
neighbors (a Kempe swap frees one when all four differ).  An occurrence is
where color 5 may be spent: its scheme nominates candidates in order, a
candidate is blocked if it already sees a 5 next door, and the chosen one
must leave a peel order for the rest of the pattern that keeps every later
recoloring under four blockers.  The catalog validator has checked all of
this against worst-case degrees, so a failure here is a tripwire, not a
recoverable condition.

Each occurrence spends at most one 5 and removes at least six vertices, so
the fifth class never exceeds a sixth of the graph.
"""

from __future__ import annotations

import heapq
from collections import Counter
from collections.abc import MutableMapping
from dataclasses import dataclass, field

from .catalog import TrialSequence
from .embedding import fill_walk
from .kempe import free_color
from .matching import find_reducible


class SchemeExhausted(RuntimeError):
    """No fifth-color candidate of an occurrence admits a full peel."""


class Coloring(MutableMapping):
    """Vertex -> color (1..5) with class sizes kept current."""

    def __init__(self, items=()):
        self._colors = {}
        self._sizes = Counter()
        for v, c in dict(items).items():
            self[v] = c

    def __getitem__(self, v):
        return self._colors[v]

    def __setitem__(self, v, c):
        if c not in (1, 2, 3, 4, 5):
            raise ValueError(f"color must be 1..5, got {c!r}")
        old = self._colors.get(v)
        if old is not None:
            self._sizes[old] -= 1
        self._colors[v] = c
        self._sizes[c] += 1

    def __delitem__(self, v):
        self._sizes[self._colors.pop(v)] -= 1

    def __iter__(self):
        return iter(self._colors)

    def __len__(self):
        return len(self._colors)

    def class_size(self, c):
        return self._sizes[c]

    @property
    def counts(self):
        return {c: self._sizes[c] for c in (1, 2, 3, 4, 5)}

    def __repr__(self):
        return f"Coloring({self._colors!r})"


@dataclass
class RunStats:
    f1_steps: int = 0
    occ_steps: Counter = field(default_factory=Counter)  # family -> count
    scans: int = 0
    fifth_assigned: int = 0
    fallback_peels: int = 0
    kempe: dict = field(default_factory=dict)

    @property
    def free_color_calls(self):
        return self.kempe.get("free_color_calls", 0)

    @property
    def chain_swaps(self):
        return self.kempe.get("chain_swaps", 0)


def select_fifth(rows, occ, colors):
    """Choose who gets color 5 and how the rest of the pattern peels.

    Candidates come in scheme order (trial images, or hub before leaves);
    one is blocked if any current neighbor is already colored 5.  The
    winner is the first whose removal lets the remaining members peel:
    repeatedly take the lowest vertex with at most 4 relevant neighbors
    (not peeled, not the candidate, not colored 5).  Peeled-but-uncolored
    members still count, matching the order the ascent will color them in.
    Returns (candidate or None, peel order).
    """
    scheme = occ.entry.scheme
    if isinstance(scheme, TrialSequence):
        cands = [occ.mapping[p] for p in scheme.order]
    else:
        cands = [occ.mapping[0]]
        cands += [occ.mapping[k] for k in sorted(occ.mapping) if k != 0]
    members = occ.vertices
    for cand in cands + [None]:
        if cand is not None and any(colors.get(w) == 5 for w in rows[cand]):
            continue
        todo = sorted(v for v in members if v != cand)
        gone = set()
        order = []
        progress = True
        while todo and progress:
            progress = False
            for v in todo:
                eff = sum(
                    1
                    for w in rows[v]
                    if w not in gone and w != cand and colors.get(w) != 5
                )
                if eff <= 4:
                    order.append(v)
                    gone.add(v)
                    todo.remove(v)
                    progress = True
                    break
        if not todo:
            return cand, tuple(order)
    raise SchemeExhausted(
        f"{occ.entry.name} at vertex {occ.anchor}: every candidate leaves "
        f"an unpeelable remainder"
    )


def reinsert(rows, colors, peel, stats=None):
    """Color a peeled sequence in reverse, each via its spare color."""
    kstats = stats.kempe if stats is not None else None
    for v in reversed(peel):
        colors[v] = free_color(rows, colors, v, kstats)


def reduce_once(rows, occ, colors, stats=None):
    """Apply one occurrence's scheme against an outside coloring.

    Expects every vertex of the pattern uncolored and its surroundings
    colored; afterwards the whole pattern is properly colored with at most
    one new 5.  Returns (fifth vertex or None, peel order).
    """
    fifth, peel = select_fifth(rows, occ, colors)
    if fifth is not None:
        colors[fifth] = 5
        if stats is not None:
            stats.fifth_assigned += 1
    elif stats is not None:
        stats.fallback_peels += 1
    reinsert(rows, colors, peel, stats)
    return fifth, peel


class _Work:
    """Mutable rotation rows plus the undo log of the descent."""

    def __init__(self, g):
        self.rows = [None if r is None else list(r) for r in g.rotation]
        self.n_alive = g.n
        self.heap = []
        self.levels = []

    # -- primitives, each returning an undoable op ------------------------

    def _remove_vertex(self, v):
        row = self.rows[v]
        undo = []
        for u in row:
            r = self.rows[u]
            if r is None:
                continue  # deleted alongside v in the same block
            pos = r.index(v)
            del r[pos]
            undo.append((u, pos))
        self.rows[v] = None
        self.n_alive -= 1
        return ("del", v, row, undo)

    def _undo(self, op):
        if op[0] == "del":
            _, v, row, undo = op
            for u, pos in reversed(undo):
                self.rows[u].insert(pos, v)
            self.rows[v] = row
            self.n_alive += 1
        else:
            _, a, pa, b, pb = op
            assert self.rows[a][pa] == b and self.rows[b][pb] == a
            del self.rows[a][pa]
            del self.rows[b][pb]

    def _push_if_low(self, v):
        if self.rows[v] is not None and len(self.rows[v]) <= 4:
            heapq.heappush(self.heap, v)

    def _pop_low(self):
        while self.heap:
            v = heapq.heappop(self.heap)
            if self.rows[v] is not None and len(self.rows[v]) <= 4:
                return v
        return None

    # -- hole filling ------------------------------------------------------

    def _fill_quad(self, q0, q1, q2, q3):
        """Chord (q0, q2) across a quadrilateral hole, in rotation order."""
        pa = self.rows[q0].index(q3)
        self.rows[q0].insert(pa, q2)
        pb = self.rows[q2].index(q1)
        self.rows[q2].insert(pb, q0)
        return ("fill", q0, pa, q2, pb)

    def _fill_holes(self, boundary, ops):
        """Re-triangulate every face touching the boundary vertices."""
        rows = self.rows
        seen = set()
        walks = []
        for u in boundary:
            for w in rows[u]:
                if (u, w) in seen:
                    continue
                walk = []
                a, b = u, w
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    row = rows[b]
                    a, b = b, row[(row.index(a) - 1) % len(row)]
                walks.append(walk)
        touched = set()

        def log(a, pa, b, pb):
            ops.append(("fill", a, pa, b, pb))
            touched.add(a)
            touched.add(b)

        for walk in walks:
            if len(walk) >= 4:
                fill_walk(rows, walk, lambda a, b: b in rows[a], on_chord=log)
        return touched

    # -- descent steps -----------------------------------------------------

    def _step_low(self, v):
        link = list(self.rows[v])
        ops = [self._remove_vertex(v)]
        if len(link) == 4:
            q0, q1, q2, q3 = link
            if q2 in self.rows[q0]:
                q0, q1, q2, q3 = q1, q2, q3, q0
            ops.append(self._fill_quad(q0, q1, q2, q3))
        for u in link:
            self._push_if_low(u)
        return ops

    def _step_occurrence(self, occ):
        doomed = sorted(occ.vertices)
        boundary = set()
        for v in doomed:
            boundary.update(self.rows[v])
        boundary -= set(doomed)
        ops = [self._remove_vertex(v) for v in doomed]
        touched = self._fill_holes(boundary, ops)
        for u in boundary | touched:
            self._push_if_low(u)
        return ops

    def descend(self, stats):
        ops = []
        seeds = [v for v in range(len(self.rows)) if self.rows[v] is not None]
        self._fill_holes(seeds, ops)
        self.levels.append(("init", None, ops))
        for v in range(len(self.rows)):
            if self.rows[v] is not None:
                self._push_if_low(v)
        while self.n_alive > 3:
            v = self._pop_low()
            if v is not None:
                self.levels.append(("low", v, self._step_low(v)))
                stats.f1_steps += 1
            else:
                stats.scans += 1
                occ = find_reducible(self.rows)
                self.levels.append(("occ", occ, self._step_occurrence(occ)))
                stats.occ_steps[occ.entry.family] += 1

    def ascend(self, stats):
        colors = Coloring()
        base = [v for v in range(len(self.rows)) if self.rows[v] is not None]
        for c, v in enumerate(sorted(base), start=1):
            colors[v] = c
        for kind, payload, ops in reversed(self.levels):
            for op in reversed(ops):
                self._undo(op)
            if kind == "low":
                colors[payload] = free_color(self.rows, colors, payload, stats.kempe)
            elif kind == "occ":
                reduce_once(self.rows, payload, colors, stats)
        return colors


def color_planar(g, stats=None):
    """Properly color an embedded planar graph with colors 1..5.

    Color 5 is rationed: at most one use per deleted occurrence, so its
    class holds at most n/6 vertices.  Returns a Coloring over all present
    vertices of g.
    """
    if stats is None:
        stats = RunStats()
    work = _Work(g)
    work.descend(stats)
    colors = work.ascend(stats)
    assert [None if r is None else tuple(r) for r in work.rows] == list(g.rotation)
    return colors


def check_coloring(g, colors):
    """Verify a proper 1..5 coloring of g; returns the class sizes."""
    sizes = Counter()
    for v in g.vertices():
        c = colors.get(v)
        if c not in (1, 2, 3, 4, 5):
            raise ValueError(f"vertex {v} has no valid color (got {c!r})")
        sizes[c] += 1
    for v in g.vertices():
        for w in g.rotation[v]:
            if colors[v] == colors[w]:
                raise ValueError(
                    f"edge {v}-{w} has both ends colored {colors[v]}"
                )
    return {c: sizes[c] for c in (1, 2, 3, 4, 5)}
