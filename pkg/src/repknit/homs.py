"""Exact Hom dimensions over the knitted window.

For a fixed source M, dim Hom(M, -) satisfies a forward recursion over the
meshes: on a non-projective end L it is additive over the mesh minus the
start, plus 1 at L = M; on a projective it equals its value on the radical,
plus 1 at the projective itself.  The recursion is seeded with zero below
the level of M, which encodes that all nonzero maps follow mesh paths; the
self-check command compares every value against the matrix oracle instead
of taking that for granted.

On top of the tables sit the projectively-stable dimensions, the mesh
elements r of the split Grothendieck group, and expansions in the r basis.
"""

from .errors import WindowTooSmall
from .quiver import Slot


def hom_table(window, src_slot):
    """dim Hom(M, -) for every populated slot at or above level(M)."""
    if src_slot in window._hom_cache:
        return window._hom_cache[src_slot]
    # the recursion only ever looks upward, so a source needs two knitted
    # levels below it and nothing more
    if src_slot.level < window.level_lo + 2:
        raise WindowTooSmall(f"hom source {src_slot} is too close to the bottom")
    src = window.vertex(src_slot)
    f = {}

    def val(slot):
        return f.get(slot, 0)

    for level in range(src_slot.level, window.level_hi):
        for i in window.quiver.vertices:
            slot = Slot(i, level)
            vertex = window.vertices.get(slot)
            if vertex is None:
                continue
            if vertex.kind == "projective":
                f[slot] = val(slot.down()) + (1 if slot == src_slot else 0)
            else:
                if slot == src_slot:
                    f[slot] = 1
                    continue
                mesh = window.meshes.get(slot)
                if mesh is None:
                    raise WindowTooSmall(f"no mesh ends at {slot}")
                f[slot] = (sum(val(m) for m in mesh.middles) - val(mesh.start))
    # The recursion is two levels deep, so a table vanishing on the top two
    # level rows vanishes everywhere above the window: only then is the
    # truncation at level_hi harmless.
    for slot, value in f.items():
        if value and slot.level >= window.level_hi - 2:
            raise WindowTooSmall(
                f"hom support of {src_slot} reaches boundary slot {slot}")
        if value < 0:
            raise WindowTooSmall(
                f"hom recursion from {src_slot} went negative at {slot}")
    window._hom_cache[src_slot] = f
    return f


def hom_dim(window, src_slot, dst_slot):
    """dim Hom between the indecomposables at two slots."""
    if dst_slot.level < src_slot.level:
        return 0
    return hom_table(window, src_slot).get(dst_slot, 0)


def hom_module(window, mclass, nclass):
    """Bilinear extension of hom_dim to classes with multiplicities."""
    total = 0
    for s1, m1 in mclass.summands:
        for s2, m2 in nclass.summands:
            total += m1 * m2 * hom_dim(window, s1, s2)
    return total


def hom_to_semisimple(window, src_slot, dim):
    """dim Hom(M, S^d) = sum over d of top multiplicities of M."""
    total = 0
    for x, n in dim.entries.items():
        simple = window.simple_vertex(x)
        total += n * hom_dim(window, src_slot, simple.slot)
    return total


def proj_dim(window, vertex, nclass):
    """Dimension of the maps into the class that factor through a projective.

    For a projective source this is the full Hom space, i.e. the entry of
    the class's dimension vector under the source vertex.  For a stable
    source it equals Hom into the semisimple of the same dimension vector
    minus Hom into the class, both taken from the cosyzygy.
    """
    from .arquiver import omega_inv
    d = nclass.dim
    if vertex.kind == "projective":
        return d[vertex.rep_vertex]
    cosyz = omega_inv(window, vertex)
    return hom_to_semisimple(window, cosyz.slot, d) - _hom_class(window, cosyz.slot, nclass)


def _hom_class(window, src_slot, nclass):
    return sum(m * hom_dim(window, src_slot, s) for s, m in nclass.summands)


def r_element(window, vertex):
    """The mesh element of the split Grothendieck group, as slot -> coeff."""
    out = {vertex.slot: 1}
    if vertex.kind == "projective":
        rad = window.vertex(vertex.slot.down())
        out[rad.slot] = out.get(rad.slot, 0) - 1
        return out
    mesh = window.meshes.get(vertex.slot)
    if mesh is None:
        raise WindowTooSmall(f"no mesh ends at {vertex.slot}")
    for m in mesh.middles:
        out[m] = out.get(m, 0) - 1
    out[mesh.start] = out.get(mesh.start, 0) + 1
    return {s: c for s, c in out.items() if c}


def h_eval(window, x, y):
    """The hom form on integer combinations of classes, both as slot -> coeff."""
    total = 0
    for s1, c1 in x.items():
        if c1 == 0:
            continue
        table = hom_table(window, s1)
        for s2, c2 in y.items():
            total += c1 * c2 * table.get(s2, 0)
    return total


def expand_in_r_basis(window, nclass):
    """Coefficients of sum(d_x [S_x]) - [N] over the stable mesh elements.

    The coefficient at a stable M is the hom form of [M] against that
    element; projective mesh elements never contribute.
    """
    d = nclass.dim
    out = {}
    for v in window.stable_vertices():
        coeff = hom_to_semisimple(window, v.slot, d) - _hom_class(window, v.slot, nclass)
        if coeff:
            out[v.slot] = coeff
    return out


def class_vector(window, nclass):
    """A ModuleClass as a coefficient map over slots."""
    return {s: m for s, m in nclass.summands}


def semisimple_vector(window, dim):
    out = {}
    for x, n in dim.entries.items():
        out[window.simple_vertex(x).slot] = n
    return out


def evaluate_r_combination(window, coeffs):
    """Expand sum coeff_M r_M back into class coordinates (slot -> int)."""
    out = {}
    for slot, c in coeffs.items():
        if not c:
            continue
        for s, k in r_element(window, window.vertex(slot)).items():
            out[s] = out.get(s, 0) + c * k
    return {s: c for s, c in out.items() if c}
