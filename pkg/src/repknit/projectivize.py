"""Corner algebras at a finite set of framing slots.

Pick a finite set of framing slots.  Its hull consists of every slot lying
on a path between two picked slots; paths between picked slots never leave
the hull, and all arrows drop the level by one, so the space of paths
between two picked slots is graded by a single length.  The corner algebra
is that path space modulo the mesh-relation ideal, computed by exact
elimination: the ideal component between two slots is spanned by
relation-in-the-middle products, all of which stay inside the hull.

When the picked slots are exactly the images of the window's projectives,
the corner dimensions must reproduce Hom dimensions between projectives of
the repetitive algebra, which are entries of projective dimension vectors.
This check runs at the dimension level; sign twists of the relations do
not move dimensions.
"""

from .errors import CapExceeded
from .linalg import Span
from .quiver import Slot, is_stable_slot, mesh_relation_terms, slot_successors
from .repetitive import projective_dim_vector


def validate_sigma(xi, sigma):
    bad = [s for s in sigma if is_stable_slot(xi, s)]
    if bad:
        raise ValueError(f"framing-slot set contains stable slots {sorted(bad)}")


def convex_hull(quiver, xi, sigma):
    """Slots on some path between two picked slots, picked slots included."""
    sigma = set(sigma)
    if not sigma:
        return []
    levels = [s.level for s in sigma]
    lo, hi = min(levels), max(levels)
    band = [Slot(v, n) for n in range(lo, hi + 1) for v in quiver.vertices]
    succ = {s: [a.target for a in slot_successors(quiver, xi, s)
                if lo <= a.target.level] for s in band}
    reach_from = set(sigma)
    stack = list(sigma)
    while stack:
        s = stack.pop()
        for t in succ.get(s, []):
            if t not in reach_from:
                reach_from.add(t)
                stack.append(t)
    pred = {}
    for s in band:
        for t in succ[s]:
            pred.setdefault(t, []).append(s)
    reach_to = set(sigma)
    stack = list(sigma)
    while stack:
        s = stack.pop()
        for t in pred.get(s, []):
            if t not in reach_to:
                reach_to.add(t)
                stack.append(t)
    hull = sorted(reach_from & reach_to, key=lambda s: (-s.level, quiver.index(s.column)))
    return hull


def _paths(quiver, xi, src, dst, inside, cache=None):
    """All doubled-quiver paths src -> dst staying inside a slot set."""
    if src == dst:
        return [()]
    if cache is not None and (src, dst) in cache:
        return cache[(src, dst)]
    # level-by-level dynamic programming: paths to dst from each slot
    if cache is not None:
        out = []
        for a in slot_successors(quiver, xi, src):
            if a.target.level < dst.level or a.target not in inside:
                continue
            for tail in _paths(quiver, xi, a.target, dst, inside, cache):
                out.append((a.key,) + tail)
        cache[(src, dst)] = out
        return out
    found = []

    def walk(s, acc):
        for a in slot_successors(quiver, xi, s):
            if a.target.level < dst.level or a.target not in inside:
                continue
            acc.append(a.key)
            if a.target == dst:
                found.append(tuple(acc))
            else:
                walk(a.target, acc)
            acc.pop()

    walk(src, [])
    return found


class PairTable:
    """Quotient data for one ordered pair of picked slots."""

    __slots__ = ("paths", "index", "span")

    def __init__(self, paths, span):
        self.paths = paths
        self.index = {p: k for k, p in enumerate(paths)}
        self.span = span

    def dim(self):
        return len(self.paths) - self.span.dim

    def reduce(self, vec):
        return self.span._reduce(vec)

    def vector_of_path(self, path):
        vec = [0] * len(self.paths)
        vec[self.index[path]] = 1
        return vec


def _pair_table(quiver, xi, hull_set, x, y, closed_framing=frozenset(), cache=None):
    paths = sorted(_paths(quiver, xi, x, y, hull_set, cache))
    if x == y:
        return PairTable([()], Span(1))
    table = PairTable(paths, Span(len(paths)))
    if not paths:
        return table
    # ideal component: v * (mesh relation at m) * u over all stable m in
    # the hull with room for the two-level drop
    for m in hull_set:
        if not is_stable_slot(xi, m):
            continue
        if not (y.level + 2 <= m.level <= x.level):
            continue
        lower = Slot(m.column, m.level - 2)
        if lower not in hull_set:
            continue
        head_paths = _paths(quiver, xi, x, m, hull_set, cache)
        tail_paths = _paths(quiver, xi, lower, y, hull_set, cache)
        if not head_paths or not tail_paths:
            continue
        terms = mesh_relation_terms(quiver, xi, m)
        for v in head_paths:
            for u in tail_paths:
                vec = [0] * len(paths)
                hit = False
                for sign, (first, second) in terms:
                    whole = v + (first, second) + u
                    if whole in table.index:
                        vec[table.index[whole]] += sign
                        hit = True
                if hit and any(vec):
                    table.span.add(vec)
    # optionally kill the column composite through designated framing
    # slots: this encodes that no module sits there, turning the corner
    # into the one cut out by the mesh category
    for z in closed_framing:
        if not (y.level + 1 <= z.level <= x.level - 1) or z in (x, y):
            continue
        above, below = z.up(), z.down()
        if above not in hull_set or below not in hull_set:
            continue
        through = (("col", z.column, above.level), ("col", z.column, z.level))
        for v in _paths(quiver, xi, x, above, hull_set, cache):
            for u in _paths(quiver, xi, below, y, hull_set, cache):
                whole = v + through + u
                if whole in table.index:
                    vec = [0] * len(paths)
                    vec[table.index[whole]] = 1
                    table.span.add(vec)
    return table


class GradedBasisTable:
    """Per ordered slot pair, the graded dimension of the corner component.

    The grading is by path length; arrows drop the level by one, so each
    component is concentrated in the degree equal to the level difference.
    """

    def __init__(self, quiver, xi, sigma, pair_tables):
        self.quiver = quiver
        self.xi = xi
        self.sigma = sigma
        self._pairs = pair_tables

    def dims(self, x, y):
        """Dict length -> dimension for paths x -> y."""
        table = self._pairs[(x, y)]
        if x == y:
            return {0: 1}
        d = table.dim()
        return {x.level - y.level: d} if d else {}

    def total_dim(self, x, y):
        return sum(self.dims(x, y).values())

    def algebra_dim(self):
        return sum(self.total_dim(x, y) for x in self.sigma for y in self.sigma)

    def to_tsv(self):
        lines = ["source\ttarget\tlength\tdim"]
        for x in self.sigma:
            for y in self.sigma:
                for length, d in sorted(self.dims(x, y).items()):
                    lines.append(f"{x}\t{y}\t{length}\t{d}")
        return "\n".join(lines) + "\n"


def graded_basis_dims(quiver, xi, sigma, cap=None, close_other_framing=False):
    """Graded dimensions of the corner algebra at the picked slots.

    With close_other_framing the hull's framing slots outside the picked
    set additionally kill their column composites; that computes the
    corner of the mesh category instead of the plain relation quotient.
    """
    validate_sigma(xi, sigma)
    sigma = sorted(set(sigma), key=lambda s: (-s.level, quiver.index(s.column)))
    hull = convex_hull(quiver, xi, sigma)
    if cap is None:
        cap = len(hull)
    span = max((x.level - y.level for x in sigma for y in sigma), default=0)
    if span > cap:
        raise CapExceeded(
            f"path length {span} exceeds the cap {cap}; dimensions not stabilized")
    hull_set = set(hull)
    closed = frozenset(
        s for s in hull if not is_stable_slot(xi, s) and s not in sigma
    ) if close_other_framing else frozenset()
    tables = {}
    cache = {}
    for x in sigma:
        for y in sigma:
            tables[(x, y)] = _pair_table(quiver, xi, hull_set, x, y, closed, cache)
    return GradedBasisTable(quiver, xi, tuple(sigma), tables)


class CornerRelation:
    """A vanishing combination of length-two composites of corner arrows.

    Terms are (coeff, composite_name, source, middle, target), normalized
    so the first nonzero coefficient is +1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = terms

    def routes(self):
        """The (source, middle, target) triples appearing in the relation."""
        return [(x, z, y) for _, _, x, z, y in self.terms]

    def text(self):
        parts = []
        for c, name, _, _, _ in self.terms:
            if c == 1:
                parts.append(("+ " if parts else "") + name)
            elif c == -1:
                parts.append("- " + name if parts else f"-{name}")
            else:
                parts.append(("+ " if c > 0 and parts else "") + f"{c}{name}")
        return " ".join(parts) + " = 0"


class CornerPresentation:
    """Vertices, arrow counts, and quadratic relations of the corner algebra."""

    def __init__(self, quiver, xi, sigma):
        validate_sigma(xi, sigma)
        self.quiver = quiver
        self.xi = xi
        self.table = graded_basis_dims(quiver, xi, sigma)
        self.sigma = self.table.sigma
        self.hull = convex_hull(quiver, xi, sigma)
        self._arrows = None
        self._relations = None
        self._build()

    def _build(self):
        sigma = self.sigma
        tables = self.table._pairs
        # arrows x -> y: a complement of the radical-square component
        arrows = []
        for x in sigma:
            for y in sigma:
                if x == y:
                    continue
                table = tables[(x, y)]
                if not table.paths:
                    continue
                rad2 = Span(len(table.paths))
                for r in table.span.rows:
                    rad2.add(list(r))
                for z in sigma:
                    if z == x or z == y:
                        continue
                    for head in tables[(x, z)].paths:
                        for tail in tables[(z, y)].paths:
                            rad2.add(table.vector_of_path(head + tail))
                count = 0
                for p in table.paths:
                    if rad2.add(table.vector_of_path(p)):
                        count += 1
                        arrows.append((x, y, p))
        arrows.sort(key=lambda a: (self._vix(a[0]), self._vix(a[1]), a[2]))
        names = {}
        for k, (x, y, p) in enumerate(arrows):
            names[(x, y, p)] = _arrow_name(k)
        self._arrows = [(names[(x, y, p)], x, y, p) for x, y, p in arrows]
        # quadratic relations: kernel of composing pairs of named arrows
        relations = []
        by_source = {}
        for name, x, y, p in self._arrows:
            by_source.setdefault(x, []).append((name, x, y, p))
        for x in sigma:
            for y in sigma:
                composites = []
                for n1, _, z, p1 in by_source.get(x, []):
                    for n2, _, t, p2 in by_source.get(z, []):
                        if t == y:
                            composites.append((f"{n2}{n1}", z, p1 + p2))
                if not composites:
                    continue
                table = tables[(x, y)]
                span = Span(len(table.paths))
                for r in table.span.rows:
                    span.add(list(r))
                vectors = [table.vector_of_path(p) for _, _, p in composites]
                for coeffs in _kernel_mod_span(vectors, span):
                    terms = tuple(
                        (c, name, x, z, y)
                        for (name, z, _), c in zip(composites, coeffs) if c)
                    relations.append(CornerRelation(terms))
        self._relations = relations

    def _vix(self, slot):
        return (-slot.level, self.quiver.index(slot.column))

    @property
    def vertices(self):
        return self.sigma

    @property
    def arrows(self):
        return self._arrows

    @property
    def quadratic_relations(self):
        return self._relations

    def arrow_count(self):
        return len(self._arrows)

    def degree_two_path_count(self):
        count = 0
        by_source = {}
        for name, x, y, p in self._arrows:
            by_source.setdefault(x, []).append((y, p))
        for name, x, y, p in self._arrows:
            count += len(by_source.get(y, []))
        return count

    def report(self):
        lines = [f"vertices\t{len(self.sigma)}"]
        for k, s in enumerate(self.sigma, 1):
            lines.append(f"vertex\t{k}\t{s}")
        lines.append(f"arrows\t{len(self._arrows)}")
        for name, x, y, _ in self._arrows:
            lines.append(f"arrow\t{name}\t{x}\t{y}")
        lines.append(f"quadratic_relations\t{len(self._relations)}")
        for r in self._relations:
            lines.append(f"relation\t{r.text()}")
        return "\n".join(lines) + "\n"


def _arrow_name(k):
    letters = "abcdefghijklmnopqrstuvwxyz"
    if k < len(letters):
        return letters[k]
    return f"a{k}"


def _kernel_mod_span(vectors, span):
    """Coefficient vectors c with sum c_i v_i inside the span, each scaled
    so its first nonzero coefficient is +1."""
    from fractions import Fraction

    from .linalg import nullspace
    reduced = [span._reduce(list(v)) for v in vectors]
    ncols = len(reduced)
    if not reduced or not reduced[0]:
        return []
    rows = [[reduced[j][i] for j in range(ncols)] for i in range(len(reduced[0]))]
    kernel = []
    for vec in nullspace(rows, ncols):
        scale = next((x for x in vec if x), Fraction(1))
        kernel.append([x / scale for x in vec])
    return kernel


def corner_presentation(quiver, xi, sigma):
    return CornerPresentation(quiver, xi, sigma)


class RepetitiveIsoReport:
    """Corner-versus-Hom comparison at the projective images.

    mesh_mismatches compares the mesh-category corner (column composites
    through unused framing slots vanish); this is the identification that
    holds on the nose.  plain_mismatches compares the plain relation
    quotient, whose corner is strictly larger whenever the hull contains
    framing slots carrying no projective: the all-stable zigzag between two
    distant projective images survives the plain relations.
    """

    def __init__(self, pairs_checked, mesh_mismatches, plain_mismatches):
        self.pairs_checked = pairs_checked
        self.mesh_mismatches = mesh_mismatches
        self.plain_mismatches = plain_mismatches

    @property
    def ok(self):
        return not self.mesh_mismatches

    def summary(self):
        head = (f"pairs={self.pairs_checked} "
                f"mesh_corner={'ok' if not self.mesh_mismatches else 'MISMATCH'} "
                f"plain_corner_extra={len(self.plain_mismatches)}")
        return head


def verify_repetitive_iso(window, degree_lo, degree_hi):
    """Corner dimensions at the projective images versus Hom dimensions.

    For projectives P at x and P' at y, paths from the slot of P to the
    slot of P' reverse to maps P' -> P, whose dimension is the entry of P's
    dimension vector at the vertex of P'.
    """
    quiver, xi = window.quiver, window.xi
    chosen = sorted(x for x in window.psi
                    if degree_lo <= x.degree < degree_hi)
    sigma = [window.psi_slot(x) for x in chosen]
    mesh_table = graded_basis_dims(quiver, xi, sigma, close_other_framing=True)
    plain_table = graded_basis_dims(quiver, xi, sigma)
    mesh_mm, plain_mm = [], []
    for x in chosen:
        for y in chosen:
            want = projective_dim_vector(quiver, x)[y]
            got = mesh_table.total_dim(window.psi_slot(x), window.psi_slot(y))
            if got != want:
                mesh_mm.append(
                    f"pair ({x}, {y}): mesh corner dim {got} != hom dim {want}")
            got = plain_table.total_dim(window.psi_slot(x), window.psi_slot(y))
            if got != want:
                plain_mm.append(
                    f"pair ({x}, {y}): plain corner dim {got} != hom dim {want}")
    return RepetitiveIsoReport(len(chosen) ** 2, mesh_mm, plain_mm)
