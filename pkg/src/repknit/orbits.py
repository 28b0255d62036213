"""Module classes of a fixed dimension vector and their stratum dictionary.

A class is a multiset of window indecomposables.  It corresponds to a pair
of graded dimension functions: V records, at the slot of each stable
indecomposable M, the dimension of the maps M -> N factoring through a
projective; W records the dimension vector of N at the slots of the
projectives.  The inverse reads multiplicities off the dominance defects

    W(i,n) - V(i,n+1) - V(i,n-1) + sum over neighbours V(j,n)  >= 0,

one defect per framing slot, the defect at a slot being the multiplicity
of a specific indecomposable attached to the mesh above it.  The closure
order of the strata is the Hom order and is computed both ways.
"""

from .dimvec import DimVector
from .errors import NotDominant, WindowTooSmall, WSupportNotProjective
from .homs import hom_module, proj_dim
from .quiver import Slot, is_stable_slot


class ModuleClass:
    """A multiset of window vertices with multiplicities; immutable."""

    __slots__ = ("summands", "dim", "_window")

    def __init__(self, window, summands):
        pairs = sorted(((s, m) for s, m in summands if m),
                       key=lambda it: (it[0].level, it[0].column))
        self.summands = tuple(pairs)
        self._window = window
        total = DimVector()
        for s, m in pairs:
            if m < 0:
                raise ValueError("negative multiplicity")
            total = total + window.vertex(s).dim.scaled(m)
        self.dim = total

    def __eq__(self, other):
        return isinstance(other, ModuleClass) and self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def sort_key(self):
        key = []
        for s, m in self.summands:
            key.extend([(s.level, s.column)] * m)
        return key

    def summand_count(self):
        return sum(m for _, m in self.summands)

    def is_semisimple(self):
        return all(self._window.vertex(s).dim.total() == 1 for s, _ in self.summands)

    def without_projectives(self):
        keep = [(s, m) for s, m in self.summands
                if self._window.vertex(s).kind == "stable"]
        return ModuleClass(self._window, keep)

    def with_summand(self, slot, mult=1):
        merged = dict(self.summands)
        merged[slot] = merged.get(slot, 0) + mult
        return ModuleClass(self._window, merged.items())

    def label(self):
        ordered = sorted(
            self.summands,
            key=lambda it: min((v.degree, v.base)
                               for v in self._window.vertex(it[0]).dim.support()))
        parts = []
        for s, m in ordered:
            v = self._window.vertex(s)
            word = _summand_word(v.dim)
            parts.append(word if m == 1 else f"{m}*{word}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"ModuleClass({self.label()})"


def _summand_word(dim):
    if dim.total() == 1:
        return repr(next(iter(dim.entries)))
    return "[" + repr(dim) + "]"


class DominantPair:
    """Graded dimensions (V on stable slots, W on framing slots)."""

    __slots__ = ("V", "W")

    def __init__(self, V, W):
        self.V = {s: n for s, n in V.items() if n}
        self.W = {s: n for s, n in W.items() if n}

    def __eq__(self, other):
        return isinstance(other, DominantPair) and self.V == other.V and self.W == other.W

    def __hash__(self):
        return hash((frozenset(self.V.items()), frozenset(self.W.items())))

    def __repr__(self):
        v = ", ".join(f"V{s}={n}" for s, n in sorted(self.V.items()))
        w = ", ".join(f"W{s}={n}" for s, n in sorted(self.W.items()))
        return f"DominantPair({v or 'V=0'}; {w or 'W=0'})"


def dominance_defect(quiver, xi, pair, slot):
    """W(i,n) - V(i,n+1) - V(i,n-1) + sum of V over neighbouring columns."""
    assert not is_stable_slot(xi, slot)
    i, n = slot
    total = pair.W.get(slot, 0)
    total -= pair.V.get(Slot(i, n + 1), 0) + pair.V.get(Slot(i, n - 1), 0)
    for j in quiver.neighbors(i):
        total += pair.V.get(Slot(j, n), 0)
    return total


def _framing_slots_near(quiver, xi, pair):
    """All framing slots where the defect could be nonzero."""
    levels = [s.level for s in pair.V] + [s.level for s in pair.W]
    if not levels:
        return []
    out = []
    for n in range(min(levels) - 1, max(levels) + 2):
        for i in quiver.vertices:
            s = Slot(i, n)
            if not is_stable_slot(xi, s):
                out.append(s)
    return out


def check_dominance(quiver, xi, pair):
    """True when every framing-slot inequality holds."""
    return all(dominance_defect(quiver, xi, pair, s) >= 0
               for s in _framing_slots_near(quiver, xi, pair))


def enumerate_modules(window, d):
    """All classes of window indecomposables with total dimension vector d.

    Complete as long as every indecomposable whose support meets the degree
    box of d lies in the window interior; if such a vertex sits in the
    margin the window was too small and we refuse to answer.
    """
    if not d:
        return [ModuleClass(window, [])]
    box = d.support()
    candidates = []
    for v in window.all_vertices(interior_only=False):
        if v.dim.support() & box:
            if not window.is_interior(v.slot):
                raise WindowTooSmall(
                    f"vertex at {v.slot} meets the requested support in the margin")
            if d.dominates(v.dim):
                candidates.append(v)
    candidates.sort(key=lambda v: (v.slot.level, v.slot.column))
    found = []

    def search(k, remaining, acc):
        if not remaining:
            found.append(ModuleClass(window, list(acc)))
            return
        if k == len(candidates):
            return
        v = candidates[k]
        top = _max_multiplicity(remaining, v.dim)
        for m in range(top, -1, -1):
            if m:
                acc.append((v.slot, m))
            ok = m == 0 or remaining.dominates(v.dim.scaled(m))
            if ok:
                search(k + 1, remaining - v.dim.scaled(m) if m else remaining, acc)
            if m:
                acc.pop()

    search(0, d, [])
    found.sort(key=lambda c: c.sort_key())
    return found


def _max_multiplicity(remaining, dim):
    top = None
    for v, n in dim.entries.items():
        q = remaining[v] // n
        top = q if top is None else min(top, q)
    return top or 0


def w_slot_map(window, d):
    """Map each vertex in the support of d to the slot of its projective."""
    out = {}
    for x in sorted(d.support()):
        slot = window.psi_slot(x)
        out[x] = slot
    return out


def module_to_pair(window, nclass):
    """The graded pair attached to a class: V from projectively-stable
    dimensions at every stable window vertex, W from the dimension vector.

    Above the levels of the class's summands and of the simples in its
    support the stable dimensions all vanish (the cosyzygy strictly raises
    the level and maps out of it must follow mesh paths), so the scan stops
    there.
    """
    W = {}
    for x, slot in w_slot_map(window, nclass.dim).items():
        W[slot] = nclass.dim[x]
    V = {}
    if W:
        # dominance confines the support of V to the open level hull of W:
        # a nonzero top (or bottom) entry would push the defect right above
        # (below) it negative
        w_levels = sorted(s.level for s in W)
        for v in window.stable_vertices(interior_only=False):
            if not w_levels[0] < v.slot.level < w_levels[-1]:
                continue
            value = proj_dim(window, v, nclass)
            if value:
                V[v.slot] = value
    return DominantPair(V, W)


def w_to_dimension_vector(window, W):
    """Read the module dimension vector off a framing-slot assignment.

    Every W slot must carry a projective of the window; this is precisely
    the hypothesis under which the stratum dictionary applies, and the
    error names the first slot where it fails.
    """
    slot_to_x = {s: x for x, s in window.psi.items()}
    entries = {}
    for s, n in sorted(W.items()):
        if s not in slot_to_x:
            raise WSupportNotProjective(
                f"slot {s} carries no projective of the window")
        entries[slot_to_x[s]] = n
    return DimVector(entries)


def pair_to_module(window, pair):
    """Inverse of module_to_pair: multiplicities from dominance defects.

    The defect at a framing slot equals the multiplicity of the
    indecomposable obtained from the vertex one level below by the inverse
    syzygy; projective multiplicities soak up the remaining dimension
    vector, lowest degree first.
    """
    from .arquiver import omega_inv
    quiver, xi = window.quiver, window.xi
    d = w_to_dimension_vector(window, pair.W)
    mults = {}
    for s in _framing_slots_near(quiver, xi, pair):
        defect = dominance_defect(quiver, xi, pair, s)
        if defect < 0:
            raise NotDominant(f"defect {defect} at slot {s}")
        if defect == 0:
            continue
        below = window.vertex(s.down())
        target = omega_inv(window, below)
        mults[target.slot] = mults.get(target.slot, 0) + defect
    stable_part = ModuleClass(window, mults.items())
    if not d.dominates(stable_part.dim):
        raise NotDominant(
            "stable multiplicities exceed the requested dimension vector")
    residual = d - stable_part.dim
    for slot, m in _projective_decomposition(window, residual):
        mults[slot] = mults.get(slot, 0) + m
    return ModuleClass(window, mults.items())


def _topological_vertices(quiver):
    """Quiver vertices ordered so that path sources come first."""
    remaining = set(quiver.vertices)
    order = []
    while remaining:
        for v in quiver.vertices:
            if v in remaining and all(a.source not in remaining
                                      for a in quiver.in_arrows(v)):
                order.append(v)
                remaining.discard(v)
    return order


def _projective_decomposition(window, residual):
    """Write a dimension vector as projectives, lowest degree first.

    Within one degree the projectives' degree-m layers are the tree-path
    indicators, which are unitriangular along a topological order: at each
    vertex in turn the remaining entry is forced to be that projective's
    multiplicity.
    """
    from .dimvec import RepVertex
    from .repetitive import projective_dim_vector
    topo = _topological_vertices(window.quiver)
    out = []
    while residual:
        m = min(residual.degrees())
        for base in topo:
            x = RepVertex(base, m)
            n = residual[x]
            if not n:
                continue
            pdv = projective_dim_vector(window.quiver, x)
            if not residual.dominates(pdv.scaled(n)):
                raise NotDominant(
                    f"residual {residual} is not a nonnegative sum of projectives")
            out.append((window.psi_slot(x), n))
            residual = residual - pdv.scaled(n)
        if residual and min(residual.degrees()) == m:
            raise NotDominant(
                f"residual {residual} is not a nonnegative sum of projectives")
    return out


def enumerate_dominant_pairs(quiver, xi, W):
    """All dominant pairs with the given W, by level-ordered search.

    V must vanish outside the open level hull of the W support (the defect
    directly above the top of V, or below its bottom, would go negative),
    so the search space is finite: slots are filled bottom-up, each bounded
    by the defect inequality at the framing slot just below it.
    """
    if not W:
        return [DominantPair({}, {})]
    levels = sorted(s.level for s in W)
    lo, hi = levels[0] + 1, levels[-1] - 1
    slots = [Slot(i, n) for n in range(lo, hi + 1) for i in quiver.vertices
             if is_stable_slot(xi, Slot(i, n))]
    found = []

    def bound_at(assign, s):
        below = Slot(s.column, s.level - 1)
        total = W.get(below, 0) - assign.get(Slot(s.column, s.level - 2), 0)
        for j in quiver.neighbors(s.column):
            total += assign.get(Slot(j, s.level - 1), 0)
        return total

    def search(k, assign):
        if k == len(slots):
            pair = DominantPair(dict(assign), dict(W))
            if check_dominance(quiver, xi, pair):
                found.append(pair)
            return
        s = slots[k]
        top = bound_at(assign, s)
        for value in range(0, max(top, 0) + 1):
            if value:
                assign[s] = value
            search(k + 1, assign)
            if value:
                del assign[s]

    search(0, {})
    found.sort(key=lambda p: sorted(p.V.items()))
    return found


class StrataPoset:
    """Classes of one dimension vector under the closure (Hom) order.

    less(a, b) means every Hom dimension into a is at most the one into b;
    the semisimple class is then the unique maximum.
    """

    def __init__(self, classes, leq):
        self.classes = list(classes)
        self._leq = leq

    def less_equal(self, a, b):
        return self._leq[(a, b)]

    def maxima(self):
        return [c for c in self.classes
                if all(self.less_equal(o, c) for o in self.classes)]

    def hasse_edges(self):
        edges = []
        for a in self.classes:
            for b in self.classes:
                if a == b or not self.less_equal(a, b):
                    continue
                if any(c != a and c != b and self.less_equal(a, c) and self.less_equal(c, b)
                       for c in self.classes):
                    continue
                edges.append((a, b))
        return edges

    def to_dot(self):
        lines = ["digraph strata {", "  rankdir=BT;"]
        for c in self.classes:
            lines.append(f'  "{c.label()}";')
        for a, b in self.hasse_edges():
            lines.append(f'  "{a.label()}" -> "{b.label()}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def degeneration_order(window, classes):
    """Order the classes by Hom comparison; cross-check the V criterion."""
    if not classes:
        return StrataPoset([], {})
    dims = {c.dim for c in classes}
    if len(dims) != 1:
        raise ValueError("classes of different dimension vectors")
    probes = window.all_vertices()
    pairs = {c: module_to_pair(window, c) for c in classes}
    leq = {}
    for a in classes:
        for b in classes:
            by_hom = all(
                hom_module(window, ModuleClass(window, [(p.slot, 1)]), a)
                <= hom_module(window, ModuleClass(window, [(p.slot, 1)]), b)
                for p in probes)
            by_v = all(pairs[a].V.get(s, 0) >= pairs[b].V.get(s, 0)
                       for s in set(pairs[a].V) | set(pairs[b].V))
            if by_hom != by_v:
                raise AssertionError(
                    f"Hom order and V order disagree on {a.label()} vs {b.label()}")
            leq[(a, b)] = by_hom
    return StrataPoset(classes, leq)


class BijectionReport:
    def __init__(self, d, classes, pairs, roundtrips_ok, mismatches):
        self.d = d
        self.classes = classes
        self.pairs = pairs
        self.roundtrips_ok = roundtrips_ok
        self.mismatches = mismatches

    @property
    def ok(self):
        return not self.mismatches and self.roundtrips_ok

    def summary(self):
        return (f"classes={len(self.classes)} dominant_pairs={len(self.pairs)} "
                f"roundtrips={'ok' if self.roundtrips_ok else 'FAILED'} "
                f"{'OK' if self.ok else 'MISMATCH: ' + '; '.join(self.mismatches)}")


def verify_bijection(window, d):
    """Count classes and dominant pairs for W = W(d) and check roundtrips."""
    classes = enumerate_modules(window, d)
    W = {slot: d[x] for x, slot in w_slot_map(window, d).items()}
    pairs = enumerate_dominant_pairs(window.quiver, window.xi, W)
    mismatches = []
    if len(classes) != len(pairs):
        mismatches.append(f"{len(classes)} classes vs {len(pairs)} dominant pairs")
    roundtrips_ok = True
    pair_set = set(pairs)
    for c in classes:
        p = module_to_pair(window, c)
        if p not in pair_set:
            roundtrips_ok = False
            mismatches.append(f"pair of {c.label()} missing from the search")
        if pair_to_module(window, p) != c:
            roundtrips_ok = False
            mismatches.append(f"roundtrip failed for {c.label()}")
    for p in pairs:
        if module_to_pair(window, pair_to_module(window, p)) != p:
            roundtrips_ok = False
            mismatches.append(f"roundtrip failed for {p}")
    return BijectionReport(d, classes, pairs, roundtrips_ok, mismatches)
