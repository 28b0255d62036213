"""Knitting a window of the Auslander-Reiten quiver of the repetitive algebra.

Vertices live on the slot grid: stable slots carry the non-projective
indecomposables, and a framing slot carries an indecomposable projective
exactly when the knitting detects its radical one level below.  Arrows of
the mesh run upward in level (the slot-quiver arrows point the other way;
the two quivers are opposite to each other).

Knitting is seeded on the section (i, xi_i) by the quiver-algebra
projectives placed in degree 0, then advances mesh by mesh:

    dim(end) + dim(start) = sum of dims over the middle slots,

inserting a projective middle whenever the mesh start equals its radical
(upward pass) or the mesh end equals its socle quotient (downward pass).
Both detections are dimension-vector lookups and fail loudly on collisions
rather than guessing.
"""

import json

from .dimvec import DimVector, RepVertex, unit
from .errors import (AmbiguousIdentification, AmbiguousProjectiveInsertion,
                     KnitError, WindowTooSmall)
from .quiver import Slot, is_stable_slot, validate_height_function
from .repetitive import (kq_projective_dims, projective_dim_vector,
                         radical_dim_vector, top_quotient_dim_vector)


class ARVertex:
    """One indecomposable in the window: a slot, a kind, a dimension vector."""

    __slots__ = ("slot", "kind", "dim", "rep_vertex")

    def __init__(self, slot, kind, dim, rep_vertex=None):
        self.slot = slot
        self.kind = kind              # "stable" | "projective"
        self.dim = dim
        self.rep_vertex = rep_vertex  # set for projectives

    def __repr__(self):
        tag = f" = P({self.rep_vertex})" if self.kind == "projective" else ""
        return f"<{self.slot} {self.dim}{tag}>"


class Mesh:
    """start -> middles -> end; at most one middle is projective."""

    __slots__ = ("start", "middles", "end")

    def __init__(self, start, middles, end):
        self.start = start
        self.middles = tuple(middles)
        self.end = end


def seed_section(quiver, xi):
    """One seed per column: the quiver-algebra projective at (i, xi_i).

    The degree-0 embedding lets the connecting arrows act by zero, so the
    seed dimension vector at column i is supported on the degree-0 vertices
    reachable from i.
    """
    validate_height_function(quiver, xi)
    return [(Slot(i, xi[i]), kq_projective_dims(quiver, i)) for i in quiver.vertices]


def default_margin(quiver):
    return 2 * quiver.coxeter_number()


class ARWindow:
    def __init__(self, quiver, xi, level_lo, level_hi, margin):
        self.quiver = quiver
        self.xi = xi
        self.level_lo = level_lo
        self.level_hi = level_hi
        self.margin = margin
        self.vertices = {}      # Slot -> ARVertex
        self.meshes = {}        # end Slot -> Mesh
        self.psi = {}           # RepVertex -> Slot of its projective
        self._by_dim = {}       # DimVector -> [Slot]
        self._hom_cache = {}

    # -- construction helpers ------------------------------------------------

    def _add(self, vertex):
        self.vertices[vertex.slot] = vertex
        self._by_dim.setdefault(vertex.dim, []).append(vertex.slot)
        if vertex.kind == "projective":
            self.psi[vertex.rep_vertex] = vertex.slot

    # -- querying --------------------------------------------------------------

    def interior_levels(self):
        return range(self.level_lo + self.margin, self.level_hi - self.margin)

    def is_interior(self, slot):
        return self.level_lo + self.margin <= slot.level < self.level_hi - self.margin

    def vertex(self, slot):
        try:
            return self.vertices[slot]
        except KeyError:
            raise WindowTooSmall(f"slot {slot} is not populated in this window")

    def stable_vertices(self, interior_only=True):
        out = [v for v in self.vertices.values() if v.kind == "stable"
               and (not interior_only or self.is_interior(v.slot))]
        out.sort(key=lambda v: (v.slot.level, self.quiver.index(v.slot.column)))
        return out

    def projective_vertices(self, interior_only=True):
        out = [v for v in self.vertices.values() if v.kind == "projective"
               and (not interior_only or self.is_interior(v.slot))]
        out.sort(key=lambda v: (v.slot.level, self.quiver.index(v.slot.column)))
        return out

    def all_vertices(self, interior_only=True):
        out = [v for v in self.vertices.values()
               if not interior_only or self.is_interior(v.slot)]
        out.sort(key=lambda v: (v.slot.level, self.quiver.index(v.slot.column)))
        return out

    def lookup_dim(self, dim, kind=None):
        """The unique populated slot with this dimension vector."""
        slots = [s for s in self._by_dim.get(dim, [])
                 if kind is None or self.vertices[s].kind == kind]
        if not slots:
            raise WindowTooSmall(f"no window vertex with dimension vector {dim}")
        if len(slots) > 1:
            raise AmbiguousIdentification(
                f"dimension vector {dim} occurs at slots {slots}")
        return self.vertices[slots[0]]

    def simple_vertex(self, x):
        """The window vertex of the simple module at a repetitive vertex."""
        return self.lookup_dim(unit(x))

    def psi_slot(self, x):
        try:
            return self.psi[x]
        except KeyError:
            raise WindowTooSmall(f"projective at {x} not inserted in this window")

    # -- exports ---------------------------------------------------------------

    def to_dot(self):
        lines = ["digraph ar_window {", "  rankdir=BT;"]
        for v in self.all_vertices(interior_only=False):
            shape = "box" if v.kind == "projective" else "ellipse"
            label = f"{v.slot}\\n{v.dim}"
            lines.append(f'  "{v.slot}" [shape={shape}, label="{label}"];')
        for mesh in sorted(self.meshes.values(), key=lambda m: (m.end.level, m.end.column)):
            for mid in mesh.middles:
                lines.append(f'  "{mesh.start}" -> "{mid}";')
                lines.append(f'  "{mid}" -> "{mesh.end}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        payload = []
        for v in self.all_vertices(interior_only=False):
            payload.append({
                "slot": [v.slot.column, v.slot.level],
                "kind": v.kind,
                "dim": {repr(k): n for k, n in v.dim.sorted_items()},
                "projective_of": repr(v.rep_vertex) if v.rep_vertex else None,
            })
        return json.dumps(payload, indent=1, sort_keys=True)


def _match_radical(quiver, dim):
    """Projective vertices whose radical has this dimension vector."""
    return _match_against(quiver, dim, radical_dim_vector)


def _match_top_quotient(quiver, dim):
    return _match_against(quiver, dim, top_quotient_dim_vector)


def _match_against(quiver, dim, builder):
    if not dim:
        return []
    degrees = dim.degrees()
    lo, hi = min(degrees) - 1, max(degrees) + 1
    hits = []
    for m in range(lo, hi + 1):
        for i in quiver.vertices:
            x = RepVertex(i, m)
            if builder(quiver, x) == dim:
                hits.append(x)
    return hits


def knit(quiver, xi, level_range, margin=None):
    """Knit the window; every stable slot in range gets populated."""
    validate_height_function(quiver, xi)
    if margin is None:
        margin = default_margin(quiver)
    lo, hi = level_range
    seeds = seed_section(quiver, xi)
    seed_levels = [s.level for s, _ in seeds]
    if lo + margin > min(seed_levels) or max(seed_levels) >= hi - margin:
        raise WindowTooSmall(
            f"window [{lo},{hi}) does not contain the seed section "
            f"levels {sorted(set(seed_levels))} plus margin {margin}")

    win = ARWindow(quiver, xi, lo, hi, margin)
    for slot, dim in seeds:
        win._add(ARVertex(slot, "stable", dim))

    used_projectives = set()

    def insert_projective(x, slot):
        if x in used_projectives:
            raise AmbiguousProjectiveInsertion(
                f"projective at {x} matched twice, second time at {slot}")
        used_projectives.add(x)
        win._add(ARVertex(slot, "projective", projective_dim_vector(quiver, x), x))

    def mesh_dims(middles):
        total = DimVector()
        for s in middles:
            total = total + win.vertices[s].dim
        return total

    # upward pass: fill (i, n) for n > xi_i, two levels at a time
    for n in range(min(seed_levels) + 1, hi):
        for i in quiver.vertices:
            slot = Slot(i, n)
            if not is_stable_slot(xi, slot) or n < xi[i] + 2:
                continue
            start = Slot(i, n - 2)
            middles = [Slot(j, n - 1) for j in quiver.neighbors(i)]
            hits = _match_radical(quiver, win.vertices[start].dim)
            if len(hits) > 1:
                raise AmbiguousProjectiveInsertion(
                    f"mesh start at {start} matches radicals of {hits}")
            if hits:
                insert_projective(hits[0], Slot(i, n - 1))
                middles.append(Slot(i, n - 1))
            total = mesh_dims(middles)
            if not _nonneg(total, win.vertices[start].dim):
                _knit_fail(slot)
            dim = total - win.vertices[start].dim
            win._add(ARVertex(slot, "stable", dim))
            win.meshes[slot] = Mesh(start, sorted(middles), slot)

    # downward pass: fill (i, n) for n < xi_i from the mesh ending two above
    for n in range(max(seed_levels) - 1, lo - 1, -1):
        for i in quiver.vertices:
            slot = Slot(i, n)
            if not is_stable_slot(xi, slot) or n > xi[i] - 2:
                continue
            end = Slot(i, n + 2)
            middles = [Slot(j, n + 1) for j in quiver.neighbors(i)]
            hits = _match_top_quotient(quiver, win.vertices[end].dim)
            if len(hits) > 1:
                raise AmbiguousProjectiveInsertion(
                    f"mesh end at {end} matches socle quotients of {hits}")
            if hits:
                insert_projective(hits[0], Slot(i, n + 1))
                middles.append(Slot(i, n + 1))
            if not _nonneg(mesh_dims(middles), win.vertices[end].dim):
                _knit_fail(slot)
            dim = mesh_dims(middles) - win.vertices[end].dim
            win._add(ARVertex(slot, "stable", dim))
            win.meshes[end] = Mesh(slot, sorted(middles), end)

    return win


def _nonneg(total, sub):
    return total.dominates(sub)


def _knit_fail(slot):
    raise KnitError(f"negative dimension while knitting mesh at {slot}")


# -- slot-level operators ------------------------------------------------------


def tau(window, vertex):
    """Mesh translate: two levels down in the same column."""
    _require_stable(vertex)
    return window.vertex(vertex.slot.down(2))


def tau_inv(window, vertex):
    _require_stable(vertex)
    return window.vertex(vertex.slot.up(2))


def _require_stable(vertex):
    if vertex.kind != "stable":
        raise ValueError(f"{vertex} is projective; mesh translation is undefined")


def top_multiplicities(window, vertex):
    """Multiset of simple tops, as dim Hom into each candidate simple."""
    from .homs import hom_dim
    out = {}
    for x in sorted(vertex.dim.support()):
        simple = window.simple_vertex(x)
        m = hom_dim(window, vertex.slot, simple.slot)
        if m:
            out[x] = m
    return out


def socle_multiplicities(window, vertex):
    from .homs import hom_dim
    out = {}
    for x in sorted(vertex.dim.support()):
        simple = window.simple_vertex(x)
        m = hom_dim(window, simple.slot, vertex.slot)
        if m:
            out[x] = m
    return out


def omega(window, vertex):
    """Kernel of the projective cover, located in the window.

    The cover is read off the top of the module; the image vertex is found
    by its dimension vector, with collisions reported rather than resolved.
    """
    _require_stable(vertex)
    cover = DimVector()
    for x, m in top_multiplicities(window, vertex).items():
        cover = cover + projective_dim_vector(window.quiver, x).scaled(m)
    return window.lookup_dim(cover - vertex.dim, kind="stable")


def omega_inv(window, vertex):
    """Cokernel of the injective envelope; injectives are projectives here,
    and the envelope of the simple at i[m] is the projective at i[m-1]."""
    _require_stable(vertex)
    envelope = DimVector()
    for x, m in socle_multiplicities(window, vertex).items():
        envelope = envelope + projective_dim_vector(
            window.quiver, x.shifted(-1)).scaled(m)
    image = window.lookup_dim(envelope - vertex.dim, kind="stable")
    # the cosyzygy sits strictly higher in the window; callers rely on this
    assert image.slot.level > vertex.slot.level
    return image


def psi_of_projective(window, x):
    """Slot of the projective at repetitive vertex x."""
    return window.psi_slot(x)


def psi_inv(window, slot):
    """The window vertex sitting at a populated slot."""
    return window.vertex(slot)


def degree_shift(window, vertex, k=1):
    """The window vertex isomorphic to the degree-shifted module."""
    return window.lookup_dim(vertex.dim.shifted(k), kind=vertex.kind)
