"""The repetitive quiver of a Dynkin quiver, with its relations.

The repetitive quiver has a copy of every quiver vertex in each integer
degree, the quiver's arrows inside each degree, and one connecting arrow per
maximal path running from the path's end in degree m to its start in degree
m+1.  A composite is nonzero exactly when it is a contiguous subpath of a
"full path": start anywhere on a maximal path, run to its end, jump through
the connecting arrow, and run back to the starting column in the next
degree.

The relation list we emit is a reduced generating set: one commutation
relation per pair of maximal paths through a common segment, plus the
minimal zero paths that are not already consequences of shorter emitted
relations.  Candidates of equal length are tested against the same ideal,
which keeps symmetric pairs symmetric in the output.
"""

from typing import NamedTuple

from .dimvec import DimVector, RepVertex
from .linalg import Span


class MaximalPath(NamedTuple):
    arrows: tuple       # traversal order: arrows[0] leaves the source
    source: str
    target: str
    label: str


class RepArrow(NamedTuple):
    kind: str           # "edge" (inside a degree) or "wrap" (connecting)
    label: str
    degree: int
    source: RepVertex
    target: RepVertex

    @property
    def key(self):
        return (self.kind, self.label, self.degree)

    def shifted(self, k):
        return RepArrow(self.kind, self.label, self.degree + k,
                        self.source.shifted(k), self.target.shifted(k))


class Relation(NamedTuple):
    """A signed integer combination of parallel paths, as (coeff, path) terms."""

    terms: tuple

    @property
    def source(self):
        return self.terms[0][1][0].source

    @property
    def target(self):
        return self.terms[0][1][-1].target

    def shifted(self, k):
        return Relation(tuple(
            (c, tuple(a.shifted(k) for a in path)) for c, path in self.terms))

    def pretty(self):
        parts = []
        for c, path in self.terms:
            word = format_path(path)
            if not parts:
                parts.append(word if c == 1 else f"-{word}" if c == -1 else f"{c}{word}")
            else:
                parts.append(("+ " if c > 0 else "- ") + (word if abs(c) == 1 else f"{abs(c)}{word}"))
        lhs = " ".join(parts)
        return f"{lhs} = 0"


def format_path(path):
    """Composition-order word for a traversal-order arrow tuple."""
    return "".join(a.label for a in reversed(path))


def path_label(arrows):
    return "".join(a.label for a in reversed(arrows)) if arrows else ""


def maximal_paths(quiver):
    """All paths that extend by no arrow on either side.

    In a tree these are exactly the source-to-sink paths; an isolated vertex
    (type A1) contributes its trivial path.
    """
    out = []
    sources = [v for v in quiver.vertices if not quiver.in_arrows(v)]
    for s in sources:
        stack = [(s, ())]
        while stack:
            v, arrows = stack.pop()
            outgoing = quiver.out_arrows(v)
            if not outgoing:
                lab = path_label(arrows) if arrows else f"e_{v}"
                out.append(MaximalPath(arrows, s, v, lab))
            for a in outgoing:
                stack.append((a.target, arrows + (a,)))
    out.sort(key=lambda w: (len(w.arrows), w.label))
    return out


def wrap_label(w):
    if len(w.arrows) == 1:
        return f"{w.label}*"
    return f"({w.label})*"


def _edge_arrow(a, m):
    return RepArrow("edge", a.label, m, RepVertex(a.source, m), RepVertex(a.target, m))


def _wrap_arrow(w, m):
    return RepArrow("wrap", wrap_label(w), m,
                    RepVertex(w.target, m), RepVertex(w.source, m + 1))


def _quiver_path_arrows(path):
    """Underlying quiver arrows of a same-degree edge-arrow run."""
    return tuple((a.label) for a in path)


def _is_good(path, max_by_label):
    """Is this repetitive-quiver path a subpath of some full path?

    Paths without a connecting arrow always are.  With one connecting arrow
    for the maximal path w, the piece before it must be a suffix of w, the
    piece after a prefix of w, and together they may not overshoot one turn
    around w.  Two or more connecting arrows never fit inside a full path.
    """
    wraps = [k for k, a in enumerate(path) if a.kind == "wrap"]
    if not wraps:
        return True
    if len(wraps) > 1:
        return False
    k = wraps[0]
    w = max_by_label[path[k].label]
    pre = _quiver_path_arrows(path[:k])
    post = _quiver_path_arrows(path[k + 1:])
    wlabels = _quiver_path_arrows(w.arrows)
    npre, npost = len(pre), len(post)
    if npre + npost > len(w.arrows):
        return False
    if npre and tuple(wlabels[len(wlabels) - npre:]) != pre:
        return False
    if npost and tuple(wlabels[:npost]) != post:
        return False
    return True


def _rep_successors(quiver, maxpaths, v, max_degree):
    """Arrows of the repetitive quiver out of v, within degrees <= max_degree."""
    out = [_edge_arrow(a, v.degree) for a in quiver.out_arrows(v.base)]
    if v.degree + 1 <= max_degree:
        for w in maxpaths:
            if w.target == v.base:
                out.append(_wrap_arrow(w, v.degree))
    return out


def _paths_between(quiver, maxpaths, src, dst, max_degree):
    """All repetitive-quiver paths src -> dst with degrees <= max_degree."""
    found = []

    def walk(v, acc):
        if v == dst and acc:
            found.append(tuple(acc))
        for a in _rep_successors(quiver, maxpaths, v, max_degree):
            # levels strictly separate: stop once the degree overshoots
            if a.target.degree > dst.degree:
                continue
            if a.target.degree == dst.degree and a.target != dst:
                # same degree: may still walk within the tree toward dst
                pass
            acc.append(a)
            walk(a.target, acc)
            acc.pop()

    if src == dst:
        return [()]
    walk(src, [])
    return found


def _shared_segment(w1, w2):
    """Largest common contiguous segment of two maximal paths, as positions.

    Returns (i1, i2, length) over vertex sequences, or None when the paths
    are disjoint.  Two paths in a tree meet in a single segment, traversed
    the same way.
    """
    verts1 = [w1.source] + [a.target for a in w1.arrows]
    verts2 = [w2.source] + [a.target for a in w2.arrows]
    common = set(verts1) & set(verts2)
    if not common:
        return None
    pos1 = sorted(verts1.index(v) for v in common)
    pos2 = sorted(verts2.index(v) for v in common)
    assert pos1 == list(range(pos1[0], pos1[0] + len(pos1)))
    assert pos2 == list(range(pos2[0], pos2[0] + len(pos2)))
    assert verts1[pos1[0]:pos1[-1] + 1] == verts2[pos2[0]:pos2[-1] + 1]
    return pos1[0], pos2[0], len(pos1) - 1


def _commutation_relations(maxpaths):
    rels = []
    for i in range(len(maxpaths)):
        for j in range(i + 1, len(maxpaths)):
            w1, w2 = maxpaths[i], maxpaths[j]
            seg = _shared_segment(w1, w2)
            if seg is None:
                continue
            i1, i2, seglen = seg

            def term(w, start):
                pre = w.arrows[:start]                    # source -> segment start
                post = w.arrows[start + seglen:]          # segment end -> target
                path = tuple(_edge_arrow(a, 0) for a in post)
                path += (_wrap_arrow(w, 0),)
                path += tuple(_edge_arrow(a, 1) for a in pre)
                return path

            rels.append(Relation(((1, term(w1, i1)), (-1, term(w2, i2)))))
    return rels


def _zero_candidates(quiver, maxpaths, max_by_label):
    """Minimal zero paths: not inside a full path, all proper subpaths are."""
    if not maxpaths:
        return []
    max_len = max(len(w.arrows) for w in maxpaths) + 2
    found = []

    def walk(v, acc):
        if len(acc) >= 2 and not _is_good(tuple(acc), max_by_label):
            if _is_good(tuple(acc[1:]), max_by_label) and _is_good(tuple(acc[:-1]), max_by_label):
                found.append(tuple(acc))
            return  # longer extensions contain this zero path
        if len(acc) == max_len:
            return
        for a in _rep_successors(quiver, maxpaths, v, 2):
            acc.append(a)
            walk(a.target, acc)
            acc.pop()

    for base in quiver.vertices:
        walk(RepVertex(base, 0), [])
    found.sort(key=lambda p: (len(p), format_path(p)))
    return found


def _in_generated_ideal(quiver, maxpaths, generators, candidate):
    """Exact membership of a single path in the two-sided ideal of generators.

    Everything happens in a three-degree template window: the candidate and
    all products u*g*v sharing its endpoints live there, since every arrow
    keeps or raises the degree.
    """
    src, dst = candidate[0].source, candidate[-1].target
    component = _paths_between(quiver, maxpaths, src, dst, max_degree=2)
    index = {p: k for k, p in enumerate(component)}
    span = Span(len(component))
    for gen in generators:
        degs = {a.source.degree for t in gen.terms for a in t[1]}
        degs |= {a.target.degree for t in gen.terms for a in t[1]}
        top = max(degs)
        for shift in range(0, 3 - top):
            g = gen.shifted(shift)
            for v in _paths_between(quiver, maxpaths, src, g.source, 2):
                for u in _paths_between(quiver, maxpaths, g.target, dst, 2):
                    vec = [0] * len(component)
                    for coeff, term in g.terms:
                        whole = v + term + u
                        vec[index[whole]] += coeff
                    if any(vec):
                        span.add(vec)
    target_vec = [0] * len(component)
    target_vec[index[candidate]] = 1
    return span.contains(target_vec)


def base_relations(quiver):
    """Degree-0 representatives of the relation generating set."""
    maxpaths = maximal_paths(quiver)
    max_by_label = {wrap_label(w): w for w in maxpaths}
    rels = _commutation_relations(maxpaths)
    accepted_zero = []
    candidates = _zero_candidates(quiver, maxpaths, max_by_label)
    by_length = {}
    for c in candidates:
        by_length.setdefault(len(c), []).append(c)
    for length in sorted(by_length):
        context = rels + accepted_zero
        batch = [c for c in by_length[length]
                 if not _in_generated_ideal(quiver, maxpaths, context, c)]
        accepted_zero.extend(Relation(((1, c),)) for c in batch)
    return accepted_zero + rels


class RepetitivePresentation:
    """A degree window of the repetitive quiver with arrows and relations."""

    def __init__(self, quiver, degree_range):
        self.quiver = quiver
        self.degree_lo, self.degree_hi = degree_range
        if self.degree_lo >= self.degree_hi:
            raise ValueError("empty degree range")
        self.maxpaths = maximal_paths(quiver)
        self.vertices = tuple(
            RepVertex(v, m)
            for m in range(self.degree_lo, self.degree_hi)
            for v in quiver.vertices
        )
        arrows = []
        for m in range(self.degree_lo, self.degree_hi):
            for a in quiver.arrows:
                arrows.append(_edge_arrow(a, m))
            if m + 1 < self.degree_hi:
                for w in self.maxpaths:
                    arrows.append(_wrap_arrow(w, m))
        self.arrows = tuple(arrows)
        self._arrow_by_key = {a.key: a for a in self.arrows}
        self.base_relations = tuple(base_relations(quiver))
        inst = []
        vset = set(self.vertices)
        for rel in self.base_relations:
            span = {a.target.degree for _, p in rel.terms for a in p} | {0}
            top = max(span)
            for m in range(self.degree_lo, self.degree_hi - top):
                shifted = rel.shifted(m)
                if all(a.source in vset and a.target in vset
                       for _, p in shifted.terms for a in p):
                    inst.append(shifted)
        self.relations = tuple(inst)

    def arrow(self, key):
        return self._arrow_by_key[key]

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def base_relation_words(self):
        return [r.pretty() for r in self.base_relations]


def build_repetitive_presentation(quiver, degree_range):
    return RepetitivePresentation(quiver, degree_range)


def projective_dim_vector(quiver, x):
    """Dimension vector of the indecomposable projective at a vertex.

    Tree paths are unique, so each entry is 0 or 1: degree-m entries record
    vertices reachable from the base, degree-(m+1) entries the vertices that
    reach it.
    """
    entries = {}
    for j in quiver.vertices:
        if quiver.path_between(x.base, j) is not None:
            entries[RepVertex(j, x.degree)] = 1
        if quiver.path_between(j, x.base) is not None:
            entries[RepVertex(j, x.degree + 1)] = 1
    return DimVector(entries)


def radical_dim_vector(quiver, x):
    pdv = projective_dim_vector(quiver, x)
    return pdv - DimVector({x: 1})


def top_quotient_dim_vector(quiver, x):
    """Dimension vector of projective-over-socle; the socle sits one degree up."""
    pdv = projective_dim_vector(quiver, x)
    return pdv - DimVector({RepVertex(x.base, x.degree + 1): 1})


def kq_projective_dims(quiver, i, degree=0):
    """The quiver-algebra projective at i, embedded in a single degree."""
    entries = {}
    for j in quiver.vertices:
        if quiver.path_between(i, j) is not None:
            entries[RepVertex(j, degree)] = 1
    return DimVector(entries)
