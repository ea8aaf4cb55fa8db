"""Combinatorial embeddings of planar graphs.

A graph is stored as a rotation system: for every vertex, the cyclic
counterclockwise order of its neighbors.  Faces are recovered by the standard
dart-tracing rule (the dart after (u, v) is (v, w) where w precedes u in the
rotation of v), and an embedding is accepted as planar iff every connected
component satisfies n - m + f = 2.

Vertex ids are stable: deleting vertices leaves holes in the id space
(rotation row set to None) instead of renumbering.
"""

from __future__ import annotations

from collections import deque


class EmbeddingError(ValueError):
    """Base class for invalid rotation-system input."""


class LoopEdge(EmbeddingError):
    pass


class DuplicateNeighbor(EmbeddingError):
    pass


class AsymmetricAdjacency(EmbeddingError):
    pass


class NotPlanarEmbedding(EmbeddingError):
    pass


class UntriangulatableFace(EmbeddingError):
    pass


class EmbeddedGraph:
    """Immutable rotation system.

    rotation[v] is a tuple of neighbor ids in ccw order, or None if v has
    been deleted.  Edit operations return new objects.
    """

    __slots__ = ("rotation", "_m")

    def __init__(self, rotation, _skip_validation=False):
        rows = tuple(None if r is None else tuple(r) for r in rotation)
        object.__setattr__(self, "rotation", rows)
        object.__setattr__(
            self, "_m", sum(len(r) for r in rows if r is not None) // 2
        )
        if not _skip_validation:
            _validate(self)

    def __setattr__(self, name, value):
        raise AttributeError("EmbeddedGraph is immutable")

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self):
        """Number of present vertices."""
        return sum(1 for r in self.rotation if r is not None)

    @property
    def m(self):
        return self._m

    @property
    def size(self):
        """Extent of the id space (present or not)."""
        return len(self.rotation)

    def present(self, v):
        return 0 <= v < len(self.rotation) and self.rotation[v] is not None

    def vertices(self):
        return (v for v, r in enumerate(self.rotation) if r is not None)

    def degree(self, v):
        return len(self.rotation[v])

    def neighbors(self, v):
        return self.rotation[v]

    def has_edge(self, u, v):
        return self.present(u) and v in self.rotation[u]

    def edges(self):
        for u in self.vertices():
            for w in self.rotation[u]:
                if u < w:
                    yield (u, w)

    def __eq__(self, other):
        return isinstance(other, EmbeddedGraph) and self.rotation == other.rotation

    def __hash__(self):
        return hash(self.rotation)

    def __repr__(self):
        return f"<{type(self).__name__} n={self.n} m={self.m}>"


def build(rotations):
    """Validate a rotation system and wrap it as an EmbeddedGraph.

    Accepts any sequence of neighbor sequences (None rows mark deleted ids).
    Raises LoopEdge / DuplicateNeighbor / AsymmetricAdjacency on malformed
    adjacency and NotPlanarEmbedding when any component violates Euler's
    formula.
    """
    return EmbeddedGraph(rotations)


def _validate(g):
    rows = g.rotation
    n_rows = len(rows)
    for v, row in enumerate(rows):
        if row is None:
            continue
        seen = set()
        for w in row:
            if w == v:
                raise LoopEdge(f"vertex {v} lists itself")
            if not (0 <= w < n_rows) or rows[w] is None:
                raise AsymmetricAdjacency(f"vertex {v} lists missing vertex {w}")
            if w in seen:
                raise DuplicateNeighbor(f"vertex {v} lists {w} twice")
            seen.add(w)
        for w in row:
            if v not in rows[w]:
                raise AsymmetricAdjacency(f"edge {v}->{w} has no reverse")
    _check_euler(g)


def _check_euler(g):
    # Per component: n - m + f = 2.  An isolated vertex has no darts; it
    # still bounds the one sphere face, hence f := 1 for it.
    rows = g.rotation
    comp = {}
    comps = []
    for v in g.vertices():
        if v in comp:
            continue
        cid = len(comps)
        members = [v]
        comp[v] = cid
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in rows[u]:
                if w not in comp:
                    comp[w] = cid
                    members.append(w)
                    queue.append(w)
        comps.append(members)
    if not comps:
        return
    faces_per_comp = [0] * len(comps)
    for walk in _trace(rows):
        faces_per_comp[comp[walk[0]]] += 1
    for cid, members in enumerate(comps):
        nc = len(members)
        mc = sum(len(rows[v]) for v in members) // 2
        fc = faces_per_comp[cid] if mc else 1
        if nc - mc + fc != 2:
            raise NotPlanarEmbedding(
                f"component of vertex {members[0]}: n={nc} m={mc} f={fc}, "
                f"Euler characteristic {nc - mc + fc} != 2"
            )


def _trace(rows):
    """Yield every face walk of the rotation system, as a vertex list.

    Each dart (u, v) lies on exactly one walk.  Walks start at their
    lexicographically smallest dart, and are produced in order of that dart.
    """
    pred = {}
    for v, row in enumerate(rows):
        if row:
            pred[v] = {row[i]: row[i - 1] for i in range(len(row))}
    seen = set()
    out = []
    for u, row in enumerate(rows):
        if not row:
            continue
        for w in row:
            if (u, w) in seen:
                continue
            walk = []
            a, b = u, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, pred[b][a]
            k = len(walk)
            best = min(range(k), key=lambda i: (walk[i], walk[(i + 1) % k]))
            out.append(walk[best:] + walk[:best])
    return out


def trace_faces(g):
    """All face walks of the embedding, canonical start, deterministic order."""
    return tuple(tuple(w) for w in _trace(g.rotation))


def from_faces(n, faces):
    """Stitch an embedding out of oriented face walks.

    Every dart (consecutive pair along a walk, cyclically) must occur exactly
    once over all faces; the rotation of v is recovered by chaining the rule
    "after corner (a, v, c) the next neighbor of v ccw from c is a".  Each
    recovered rotation starts at the smallest neighbor id, so the result does
    not depend on the order the faces are given in.
    """
    nxt = [dict() for _ in range(n)]
    for face in faces:
        k = len(face)
        if k < 2:
            raise EmbeddingError(f"face walk too short: {face!r}")
        for i in range(k):
            a, b, c = face[i - 2], face[i - 1], face[i]
            if not (0 <= b < n):
                raise EmbeddingError(f"face vertex {b} out of range")
            if c in nxt[b]:
                raise EmbeddingError(f"dart ({b}, {c}) occurs in two faces")
            nxt[b][c] = a
    rotations = []
    for v in range(n):
        links = nxt[v]
        if not links:
            rotations.append(())
            continue
        start = min(links)
        cycle = [start]
        cur = links[start]
        while cur != start:
            cycle.append(cur)
            cur = links[cur]
            if len(cycle) > len(links):
                raise EmbeddingError(f"rotation of {v} does not close")
        if len(cycle) != len(links):
            raise EmbeddingError(f"rotation of {v} splits into several cycles")
        rotations.append(cycle)
    return build(rotations)


# -- triangulation ---------------------------------------------------------


def _insert_chord(rows, walk, i, j):
    """Add the chord (walk[i], walk[j]) inside the face bounded by walk.

    At each endpoint the new neighbor lands between the two walk neighbors
    of that corner: the face-tracing identity puts walk[i+1] immediately
    before walk[i-1] in rotation(walk[i]), and the chord goes between them.
    Returns the two insertion positions (for undo logs).
    """
    a, b = walk[i], walk[j]
    pa = rows[a].index(walk[i - 1])
    rows[a].insert(pa, b)
    pb = rows[b].index(walk[j - 1])
    rows[b].insert(pb, a)
    return pa, pb


def fill_walk(rows, walk, adjacent, on_chord=None):
    """Triangulate one face walk in place.

    `rows` are mutable rotation lists, `adjacent(u, v)` answers edge queries
    against the current graph (must reflect chords as they are added), and
    `on_chord(u, pos_u, v, pos_v)` observes each insertion.  First-fit scan:
    spans of 2 first (cutting one corner), widening only if every span-2
    chord is blocked.  Raises UntriangulatableFace if no legal chord exists
    on a walk longer than 3.
    """
    stack = [list(walk)]
    while stack:
        w = stack.pop()
        k = len(w)
        if k <= 3:
            continue
        placed = False
        for span in range(2, k - 1):
            for i in range(k):
                j = (i + span) % k
                a, b = w[i], w[j]
                if a == b or adjacent(a, b):
                    continue
                pa, pb = _insert_chord(rows, w, i, j)
                if on_chord is not None:
                    on_chord(a, pa, b, pb)
                if i < j:
                    first, second = w[i : j + 1], w[j:] + w[: i + 1]
                else:
                    first, second = w[i:] + w[: j + 1], w[j : i + 1]
                stack.append(first)
                stack.append(second)
                placed = True
                break
            if placed:
                break
        if not placed:
            raise UntriangulatableFace(f"no chord fits face walk {w!r}")


class Triangulation(EmbeddedGraph):
    """An embedding whose every face is a triangle.

    Produced by triangulate(); carries the face list and the chords that
    were added to the input.
    """

    __slots__ = ("faces", "added_edges")

    def __init__(self, rotation, faces, added_edges, _skip_validation=False):
        super().__init__(rotation, _skip_validation=_skip_validation)
        object.__setattr__(self, "faces", tuple(tuple(f) for f in faces))
        object.__setattr__(self, "added_edges", tuple(added_edges))

    def link_cycle(self, v):
        return self.rotation[v]


def triangulate(g):
    """Fill every face of length >= 4 with chords.

    Requires a connected embedding on at least 3 vertices.  Already
    triangulated input comes back with an identical edge set and no
    added_edges.
    """
    if g.n < 3:
        raise EmbeddingError(f"need at least 3 vertices, have {g.n}")
    present = list(g.vertices())
    reach = {present[0]}
    queue = deque(reach)
    while queue:
        u = queue.popleft()
        for w in g.rotation[u]:
            if w not in reach:
                reach.add(w)
                queue.append(w)
    if len(reach) != g.n:
        raise EmbeddingError("triangulate requires a connected graph")

    rows = [None if r is None else list(r) for r in g.rotation]
    adj = [None if r is None else set(r) for r in g.rotation]
    added = []

    def adjacent(u, v):
        return v in adj[u]

    def on_chord(u, _pu, v, _pv):
        adj[u].add(v)
        adj[v].add(u)
        added.append((u, v) if u < v else (v, u))

    for walk in _trace(g.rotation):
        if len(walk) >= 4:
            fill_walk(rows, walk, adjacent, on_chord)

    tri = Triangulation(rows, _trace(rows), added)
    for face in tri.faces:
        if len(face) != 3:
            raise UntriangulatableFace(f"face {face!r} survived filling")
    return tri


def remove_vertices(g, doomed):
    """Delete a set of vertices, tombstoning their ids."""
    doomed = set(doomed)
    for v in doomed:
        if not g.present(v):
            raise EmbeddingError(f"vertex {v} not present")
    rows = [
        None
        if (r is None or v in doomed)
        else tuple(w for w in r if w not in doomed)
        for v, r in enumerate(g.rotation)
    ]
    return EmbeddedGraph(rows)
