"""Dynkin quivers, height functions, and the doubled slot quiver.

A Dynkin quiver is an orientation of a simply-laced Dynkin tree.  A height
function labels each vertex with an integer that drops by one along every
arrow; it fixes the parity splitting of the slot grid (quiver vertex,
integer level) into stable slots and framing slots.  On the grid lives the
doubled quiver whose arrows all drop the level by one: two families running
along tree edges (one per direction) and one family running inside each
column.  Every stable slot carries one mesh relation among the length-two
paths emanating from it.
"""

from typing import NamedTuple

from .errors import HeightMismatch


class Arrow(NamedTuple):
    source: str
    target: str
    label: str

    def __repr__(self):
        return f"{self.label}:{self.source}->{self.target}"


_AUTO_LABELS = "abcdefghijklmnopqrstuvwxyz"

COXETER_NUMBERS = {"A": lambda n: n + 1, "D": lambda n: 2 * n - 2,
                   "E": lambda n: {6: 12, 7: 18, 8: 30}[n]}


def _tree_shape(nvertices, adjacency):
    """Classify a tree by ADE shape; returns e.g. ('A', 4) or ('D', 4)."""
    degs = {v: len(nb) for v, nb in adjacency.items()}
    if any(d > 3 for d in degs.values()):
        return None
    branch = [v for v, d in degs.items() if d == 3]
    if not branch:
        return ("A", nvertices)
    if len(branch) > 1:
        return None
    b = branch[0]
    lengths = []
    for start in adjacency[b]:
        ln, prev, cur = 1, b, start
        while degs[cur] == 2:
            nxt = [w for w in adjacency[cur] if w != prev][0]
            prev, cur = cur, nxt
            ln += 1
        lengths.append(ln)
    lengths.sort()
    if lengths[0] != 1:
        return None
    if lengths[1] == 1:
        return ("D", nvertices)
    if lengths[1] == 2 and lengths[2] in (2, 3, 4):
        return ("E", nvertices)
    return None


class DynkinQuiver:
    """An orientation of a simply-laced Dynkin tree.

    Vertices are user-chosen strings; arrows may carry labels (single
    letters are auto-assigned in input order when omitted).  The underlying
    graph is validated against the declared type: connected, no repeated
    edges, and the ADE degree pattern.
    """

    def __init__(self, dynkin_type, vertices, arrows):
        self.dynkin_type = dynkin_type
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        labelled = []
        for k, a in enumerate(arrows):
            if len(a) == 3:
                s, t, lab = a
            else:
                s, t = a
                lab = _AUTO_LABELS[k] if k < len(_AUTO_LABELS) else f"a{k}"
            labelled.append(Arrow(str(s), str(t), str(lab)))
        self.arrows = tuple(labelled)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._validate()
        self._adj = {v: [] for v in self.vertices}
        self._out = {v: [] for v in self.vertices}
        self._in = {v: [] for v in self.vertices}
        for a in self.arrows:
            self._adj[a.source].append(a.target)
            self._adj[a.target].append(a.source)
            self._out[a.source].append(a)
            self._in[a.target].append(a)

    def _validate(self):
        letter, rank = self.dynkin_type[0], int(self.dynkin_type[1:])
        if letter not in "ADE":
            raise ValueError(f"unsupported type {self.dynkin_type}")
        if rank != len(self.vertices):
            raise ValueError(
                f"type {self.dynkin_type} needs {rank} vertices, got {len(self.vertices)}")
        if letter == "A" and rank < 1 or letter == "D" and rank < 4:
            raise ValueError(f"bad rank for type {self.dynkin_type}")
        if letter == "E" and rank not in (6, 7, 8):
            raise ValueError(f"bad rank for type {self.dynkin_type}")
        if len(self.arrows) != max(rank - 1, 0):
            raise ValueError("a Dynkin tree on n vertices has n-1 edges")
        adjacency = {v: set() for v in self.vertices}
        for a in self.arrows:
            if a.source not in self._index or a.target not in self._index:
                raise ValueError(f"arrow {a} uses an unknown vertex")
            if a.source == a.target or a.target in adjacency[a.source]:
                raise ValueError(f"loop or repeated edge at arrow {a}")
            adjacency[a.source].add(a.target)
            adjacency[a.target].add(a.source)
        # connectivity
        if self.vertices:
            seen = {self.vertices[0]}
            stack = [self.vertices[0]]
            while stack:
                for w in adjacency[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(self.vertices):
                raise ValueError("underlying graph is not connected")
        # E-types are recognized by branch lengths (1,2,k) off the unique
        # degree-3 vertex, i.e. Bourbaki numbering of the three legs.
        shape = _tree_shape(len(self.vertices), adjacency)
        if shape != (letter, rank):
            raise ValueError(
                f"underlying tree has shape {shape}, declared {(letter, rank)}")

    # -- basic access -------------------------------------------------------

    def index(self, v):
        return self._index[v]

    def neighbors(self, v):
        return tuple(self._adj[v])

    def out_arrows(self, v):
        return tuple(self._out[v])

    def in_arrows(self, v):
        return tuple(self._in[v])

    def arrow_between(self, u, v):
        for a in self._out[u]:
            if a.target == v:
                return a
        return None

    def coxeter_number(self):
        letter, rank = self.dynkin_type[0], int(self.dynkin_type[1:])
        return COXETER_NUMBERS[letter](rank)

    def path_between(self, u, v):
        """The unique directed path u -> v as a tuple of arrows, or None.

        Trees have at most one path between two vertices, so a simple DFS
        along arrow directions settles existence.
        """
        if u == v:
            return ()
        for a in self._out[u]:
            rest = self.path_between(a.target, v)
            if rest is not None:
                return (a,) + rest
        return None

    def opposite(self):
        return DynkinQuiver(
            self.dynkin_type, self.vertices,
            [(a.target, a.source, a.label) for a in self.arrows])

    def __repr__(self):
        return f"DynkinQuiver({self.dynkin_type}, {list(self.vertices)}, {list(self.arrows)})"


# -- height functions and slots ----------------------------------------------


def validate_height_function(quiver, xi):
    """Check xi: vertices -> Z drops by one along every arrow."""
    missing = [v for v in quiver.vertices if v not in xi]
    if missing:
        raise ValueError(f"height function undefined on {missing}")
    for a in quiver.arrows:
        if xi[a.target] != xi[a.source] - 1:
            raise HeightMismatch(a, xi[a.source], xi[a.target])


class Slot(NamedTuple):
    """A grid point (quiver vertex, integer level)."""

    column: str
    level: int

    def __repr__(self):
        return f"({self.column},{self.level})"

    def down(self, k=1):
        return Slot(self.column, self.level - k)

    def up(self, k=1):
        return Slot(self.column, self.level + k)


def is_stable_slot(xi, slot):
    """Stable slots have even level - height parity; the rest carry framing."""
    return (slot.level - xi[slot.column]) % 2 == 0


def slot_sort_key(quiver, slot):
    return (slot.level, quiver.index(slot.column))


# Arrow keys of the doubled quiver.  All arrows drop the level by one:
#   ("edge", label, n)    (i,n) -> (j,n-1)   for a quiver arrow label: i->j
#   ("edge_r", label, n)  (j,n) -> (i,n-1)   the reversed running mate
#   ("col", column, n)    (c,n) -> (c,n-1)   inside one column
# Sources of "edge" copies are stable; so are sources of "edge_r" copies.


class SlotArrow(NamedTuple):
    key: tuple
    source: Slot
    target: Slot


def slot_successors(quiver, xi, slot):
    """All doubled-quiver arrows out of a slot, as SlotArrows."""
    out = []
    i, n = slot
    out.append(SlotArrow(("col", i, n), slot, slot.down()))
    if is_stable_slot(xi, slot):
        for a in quiver.out_arrows(i):
            out.append(SlotArrow(("edge", a.label, n), slot, Slot(a.target, n - 1)))
        for a in quiver.in_arrows(i):
            out.append(SlotArrow(("edge_r", a.label, n), slot, Slot(a.source, n - 1)))
    return out


def mesh_relation_terms(quiver, xi, slot):
    """The mesh relation at a stable slot: list of (sign, (first, second)).

    Each term is a two-arrow path from the slot to the slot two levels
    below, given in traversal order.  Signs follow the convention that the
    column route and the forward edge routes enter with +1 and the reversed
    edge routes with -1.
    """
    assert is_stable_slot(xi, slot)
    i, n = slot
    terms = [(1, (("col", i, n), ("col", i, n - 1)))]
    for a in quiver.out_arrows(i):
        terms.append((1, (("edge", a.label, n), ("edge_r", a.label, n - 1))))
    for a in quiver.in_arrows(i):
        terms.append((-1, (("edge_r", a.label, n), ("edge", a.label, n - 1))))
    return terms


class SlotQuiverWindow(NamedTuple):
    """A finite band of the doubled quiver: slots, arrows, mesh relations.

    Levels form the half-open interval [level_lo, level_hi).  The relation
    list holds one entry per stable slot whose full mesh (levels n, n-1,
    n-2) lies inside the window.
    """

    quiver: object
    xi: dict
    level_lo: int
    level_hi: int
    slots: tuple
    arrows: tuple
    relations: tuple

    def stable_slots(self):
        return tuple(s for s in self.slots if is_stable_slot(self.xi, s))

    def framing_slots(self):
        return tuple(s for s in self.slots if not is_stable_slot(self.xi, s))


def build_slot_quiver(quiver, xi, level_range):
    """Materialize the doubled quiver over a half-open level range."""
    validate_height_function(quiver, xi)
    lo, hi = level_range
    slots = tuple(
        Slot(v, n)
        for n in range(lo, hi)
        for v in quiver.vertices
    )
    inside = set(slots)
    arrows = []
    for s in slots:
        for sa in slot_successors(quiver, xi, s):
            if sa.target in inside:
                arrows.append(sa)
    relations = []
    for s in slots:
        if is_stable_slot(xi, s) and s.level - 2 >= lo:
            relations.append((s, tuple(mesh_relation_terms(quiver, xi, s))))
    return SlotQuiverWindow(quiver, xi, lo, hi, slots, tuple(arrows), tuple(relations))
