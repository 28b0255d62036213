"""Brute-force verification layer: explicit matrix representations.

Everything here is deliberately naive: representations are dictionaries of
exact rational matrices indexed by the arrows of the repetitive quiver, Hom
spaces are kernels of intertwining systems, and syzygies come from explicit
projective covers.  The knitting engine is never consulted, so agreement
between the two layers is meaningful evidence.
"""

from fractions import Fraction

from .dimvec import DimVector, RepVertex
from .errors import CoverNotSurjective
from .linalg import Span, nullspace, rank, solve
from .repetitive import _edge_arrow, _wrap_arrow, maximal_paths


def _zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def _matmul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = _zeros(rows, cols)
    for i in range(rows):
        for k in range(inner):
            if a[i][k]:
                for j in range(cols):
                    if b[k][j]:
                        out[i][j] += a[i][k] * b[k][j]
    return out


class ExplicitRep:
    """A representation of the repetitive quiver: dims per vertex, matrices
    per arrow key (kind, label, degree).  Missing keys mean zero maps."""

    def __init__(self, quiver, dims, mats):
        self.quiver = quiver
        self.dims = {v: d for v, d in dims.items() if d}
        self.mats = mats
        self.maxpaths = maximal_paths(quiver)

    def dim(self, v):
        return self.dims.get(v, 0)

    def dim_vector(self):
        return DimVector(dict(self.dims))

    def total(self):
        return sum(self.dims.values())

    def arrows(self):
        """All arrows with a nonzero-dimensional source or target."""
        degrees = sorted({v.degree for v in self.dims})
        out = []
        for m in degrees:
            for a in self.quiver.arrows:
                out.append(_edge_arrow(a, m))
            for w in self.maxpaths:
                out.append(_wrap_arrow(w, m))
                if m - 1 not in degrees:
                    out.append(_wrap_arrow(w, m - 1))
        return out

    def matrix(self, arrow):
        rows, cols = self.dim(arrow.target), self.dim(arrow.source)
        got = self.mats.get(arrow.key)
        if got is None:
            return _zeros(rows, cols)
        return got

    def apply_path(self, path, vectors):
        """Apply a traversal-order arrow path to column vectors."""
        for arrow in path:
            mat = self.matrix(arrow)
            vectors = [_matvec(mat, v) for v in vectors]
        return vectors

    def check_relations(self, presentation):
        """Every relation instance inside the support must evaluate to zero."""
        for rel in presentation.relations:
            rows = self.dim(rel.target)
            cols = self.dim(rel.source)
            if rows == 0 or cols == 0:
                continue
            total = _zeros(rows, cols)
            for coeff, path in rel.terms:
                mat = [[Fraction(1) if i == j else Fraction(0) for j in range(cols)]
                       for i in range(cols)]
                for arrow in path:
                    mat = _matmul(self.matrix(arrow), mat)
                for i in range(rows):
                    for j in range(cols):
                        total[i][j] += coeff * mat[i][j]
            if any(any(x for x in row) for row in total):
                return False
        return True


def _matvec(mat, vec):
    return [sum(row[j] * vec[j] for j in range(len(vec))) for row in mat]


def explicit_zero(quiver):
    return ExplicitRep(quiver, {}, {})


def explicit_simple(quiver, x):
    return ExplicitRep(quiver, {x: 1}, {})


def explicit_projective(quiver, x):
    """The projective at x in its path basis.

    Degree-m components are indexed by the paths leaving the base vertex,
    degree-(m+1) components by duals of the paths entering it.  Quiver
    arrows act by path extension on the first block and by stripping the
    leading arrow on the second; a connecting arrow carries a terminal
    segment of its maximal path to the dual of the complementary initial
    segment.
    """
    i, m = x.base, x.degree
    q = quiver
    down = {}   # vertex j -> index of basis path i -> j   (degree m block)
    up = {}     # vertex j -> index of dual path j -> i    (degree m+1 block)
    down_paths, up_paths = {}, {}
    dims = {}
    for j in q.vertices:
        p = q.path_between(i, j)
        if p is not None:
            down[j] = 0
            down_paths[j] = p
            dims[RepVertex(j, m)] = 1
        p = q.path_between(j, i)
        if p is not None:
            up[j] = 0
            up_paths[j] = p
            dims[RepVertex(j, m + 1)] = 1
    mats = {}
    one = [[Fraction(1)]]
    for a in q.arrows:
        # degree-m block: extend path i -> source by the arrow
        if a.source in down and a.target in down:
            mats[("edge", a.label, m)] = one
        # degree-(m+1) block: strip the arrow if it starts the dual path
        if a.source in up and a.target in up:
            p = up_paths[a.source]
            if p and p[0].label == a.label:
                mats[("edge", a.label, m + 1)] = one
    for w in maximal_paths(q):
        # the connecting arrow sends the terminal segment of w starting at
        # a vertex j on w to the dual of the initial segment ending there
        j = w.target
        if j in down and w.source in up:
            onw = [w.source] + [a.target for a in w.arrows]
            if i in onw:
                mats[("wrap", _wrap_arrow(w, m).label, m)] = one
    return ExplicitRep(q, dims, mats)


def embed_kq_module(quiver, vertex_dims, arrow_mats, degree=0):
    """Embed a quiver representation in one degree; connecting arrows act by 0."""
    dims = {RepVertex(v, degree): d for v, d in vertex_dims.items() if d}
    mats = {}
    for label, mat in arrow_mats.items():
        if mat and any(any(row) for row in mat):
            mats[("edge", label, degree)] = [[Fraction(x) for x in row] for row in mat]
    return ExplicitRep(quiver, dims, mats)


def explicit_kq_projective(quiver, i, degree=0):
    """The quiver-algebra projective at i, embedded in one degree.

    Thin on the cone of vertices reachable from i; every arrow inside the
    cone extends the unique tree path, so all matrices are (1).
    """
    dims = {j: 1 for j in quiver.vertices
            if quiver.path_between(i, j) is not None}
    mats = {a.label: [[1]] for a in quiver.arrows
            if a.source in dims and a.target in dims}
    return embed_kq_module(quiver, dims, mats, degree)


def explicit_kq_injective(quiver, i, degree=0):
    """The quiver-algebra injective at i, embedded in one degree."""
    dims = {j: 1 for j in quiver.vertices
            if quiver.path_between(j, i) is not None}
    mats = {a.label: [[1]] for a in quiver.arrows
            if a.source in dims and a.target in dims}
    return embed_kq_module(quiver, dims, mats, degree)


def explicit_interval(quiver, start, length):
    """Interval module on the line of a linearly oriented type-A quiver.

    Positions walk the repetitive quiver of the line: position p sits at
    vertex (p mod n) in degree (p div n).  Valid for any thin module whose
    support is a path of full-path-free length, which covers every
    indecomposable when the quiver is a linearly oriented A_n.
    """
    order = list(quiver.vertices)
    n = len(order)

    def vertex_at(pos):
        return RepVertex(order[pos % n], pos // n)

    dims = {vertex_at(p): 1 for p in range(start, start + length)}
    mats = {}
    one = [[Fraction(1)]]
    for p in range(start, start + length - 1):
        v, w = vertex_at(p), vertex_at(p + 1)
        if v.degree == w.degree:
            a = quiver.arrow_between(v.base, w.base)
            mats[("edge", a.label, v.degree)] = one
        else:
            wpath = maximal_paths(quiver)[0]
            mats[_wrap_arrow(wpath, v.degree).key] = one
    return ExplicitRep(quiver, dims, mats)


def direct_sum(reps):
    if not reps:
        raise ValueError("empty direct sum")
    q = reps[0].quiver
    dims = {}
    for r in reps:
        for v, d in r.dims.items():
            dims[v] = dims.get(v, 0) + d
    mats = {}
    keys = set()
    for r in reps:
        keys.update(r.mats)
    for key in keys:
        kind, label, degree = key
        blocks = []
        for r in reps:
            arrow = _find_arrow(r, key)
            blocks.append((r.dim(arrow.source), r.dim(arrow.target), r.matrix(arrow)))
        rows = sum(b[1] for b in blocks)
        cols = sum(b[0] for b in blocks)
        mat = _zeros(rows, cols)
        ro = co = 0
        for c, rdim, block in blocks:
            for ii in range(rdim):
                for jj in range(c):
                    mat[ro + ii][co + jj] = block[ii][jj]
            ro += rdim
            co += c
        if rows and cols:
            mats[key] = mat
    return ExplicitRep(q, dims, mats)


def _find_arrow(rep, key):
    kind, label, degree = key
    if kind == "edge":
        for a in rep.quiver.arrows:
            if a.label == label:
                return _edge_arrow(a, degree)
    else:
        for w in rep.maxpaths:
            if _wrap_arrow(w, degree).label == label:
                return _wrap_arrow(w, degree)
    raise KeyError(key)


def hom_space(r1, r2):
    """dim of the space of intertwiners r1 -> r2, by exact linear solve."""
    verts = sorted(set(r1.dims) | set(r2.dims))
    offs, total = {}, 0
    for v in verts:
        offs[v] = total
        total += r1.dim(v) * r2.dim(v)
    if total == 0:
        return 0
    rows = []
    for arrow in set(r1.arrows()) | set(r2.arrows()):
        s, t = arrow.source, arrow.target
        c1, c2 = r1.dim(s), r1.dim(t)
        d1, d2 = r2.dim(s), r2.dim(t)
        if c1 * d2 == 0:
            continue
        m1 = r1.matrix(arrow)   # c2 x c1
        m2 = r2.matrix(arrow)   # d2 x d1
        # unknown f_v is (r2.dim(v) x r1.dim(v)); equation f_t M1 = M2 f_s
        for i in range(d2):
            for j in range(c1):
                row = [Fraction(0)] * total
                for k in range(c2):
                    if m1[k][j]:
                        row[offs[t] + i * c2 + k] += m1[k][j]
                for k in range(d1):
                    if m2[i][k]:
                        row[offs[s] + k * c1 + j] -= m2[i][k]
                if any(row):
                    rows.append(row)
    return total - rank(rows) if rows else total


def endo_dim(rep):
    return hom_space(rep, rep)


def radical_dims(rep):
    """Per-vertex dimension of the radical (sum of incoming arrow images)."""
    out = {}
    for v in rep.dims:
        cols = []
        for arrow in rep.arrows():
            if arrow.target == v and rep.dim(arrow.source):
                mat = rep.matrix(arrow)
                for j in range(rep.dim(arrow.source)):
                    cols.append([mat[i][j] for i in range(rep.dim(v))])
        out[v] = rank(cols)
    return out


def top_dims(rep):
    rad = radical_dims(rep)
    return {v: rep.dim(v) - rad[v] for v in rep.dims if rep.dim(v) - rad[v]}


def socle_dims(rep):
    """Per-vertex dimension of the socle (joint kernel of outgoing arrows)."""
    out = {}
    for v in rep.dims:
        rows = []
        for arrow in rep.arrows():
            if arrow.source == v and rep.dim(arrow.target):
                rows.extend(rep.matrix(arrow))
        k = rep.dim(v) - rank(rows) if rows else rep.dim(v)
        if k:
            out[v] = k
    return out


def _canonical_path_to(quiver, x, basis_vertex, is_dual):
    """Traversal path in the repetitive quiver reaching a basis element of
    the projective at x from its generator.

    Degree-m block: the plain quiver path.  Dual block at u: pick a maximal
    path through u and then through the base vertex, run its terminal
    segment, cross the connecting arrow (landing on the dual at the maximal
    path's source), and strip back down to u with same-degree arrows.
    """
    i = x.base
    if not is_dual:
        p = quiver.path_between(i, basis_vertex)
        return tuple(_edge_arrow(a, x.degree) for a in p)
    for w in maximal_paths(quiver):
        onw = [w.source] + [a.target for a in w.arrows]
        if basis_vertex in onw and i in onw \
                and onw.index(basis_vertex) <= onw.index(i):
            k = onw.index(i)
            path = tuple(_edge_arrow(a, x.degree) for a in w.arrows[k:])
            path += (_wrap_arrow(w, x.degree),)
            path += tuple(_edge_arrow(a, x.degree + 1)
                          for a in w.arrows[:onw.index(basis_vertex)])
            return path
    raise ValueError(f"no maximal path through {basis_vertex} -> {i}")


def projective_cover(rep):
    """(cover map data, list of (RepVertex, lift vector)) for a minimal cover.

    Returns the cover as a block structure: for every chosen top generator a
    pair (projective vertex, columns of the induced map into rep).
    """
    rad = radical_dims(rep)
    gens = []
    for v in sorted(rep.dims):
        need = rep.dim(v) - rad[v]
        if need <= 0:
            continue
        # lift a basis of top at v: standard vectors independent mod radical
        cols = []
        for arrow in rep.arrows():
            if arrow.target == v and rep.dim(arrow.source):
                mat = rep.matrix(arrow)
                for j in range(rep.dim(arrow.source)):
                    cols.append([mat[i][j] for i in range(rep.dim(v))])
        span = Span(rep.dim(v))
        for c in cols:
            span.add(c)
        for e in range(rep.dim(v)):
            vec = [Fraction(1) if i == e else Fraction(0) for i in range(rep.dim(v))]
            if span.add(vec):
                gens.append((v, vec))
    return gens


def syzygy(rep):
    """Kernel of the minimal projective cover, as an explicit representation."""
    q = rep.quiver
    gens = projective_cover(rep)
    cover = direct_sum([explicit_projective(q, v) for v, _ in gens]) \
        if gens else explicit_zero(q)
    # cover map per vertex: columns indexed by cover basis, rows by rep
    # basis; projectives are thin, so each generator adds one column per
    # vertex of its support, in generator order (matching direct_sum)
    phi = {u: _zeros(rep.dim(u), cover.dim(u)) for u in set(cover.dims) | set(rep.dims)}
    col_at = {u: 0 for u in phi}
    for (v, lift) in gens:
        proj = explicit_projective(q, v)
        for u in sorted(proj.dims):
            is_dual = (u.degree == v.degree + 1)
            path = _canonical_path_to(q, v, u.base, is_dual)
            img = rep.apply_path(path, [lift])[0]
            col = col_at[u]
            for i in range(rep.dim(u)):
                phi[u][i][col] = img[i] if i < len(img) else Fraction(0)
            col_at[u] += 1
    for u in rep.dims:
        if rank(phi[u]) != rep.dim(u):
            raise CoverNotSurjective(f"cover not surjective at {u}")
    # kernel basis per vertex
    kbasis = {}
    for u in cover.dims:
        basis = nullspace(phi.get(u, []), cover.dim(u)) if phi.get(u) else \
            [[Fraction(1) if i == j else Fraction(0) for j in range(cover.dim(u))]
             for i in range(cover.dim(u))]
        if basis:
            kbasis[u] = basis
    dims = {u: len(b) for u, b in kbasis.items()}
    mats = {}
    for arrow in cover.arrows():
        s, t = arrow.source, arrow.target
        if s not in kbasis or t not in kbasis:
            continue
        amat = cover.matrix(arrow)
        cols = []
        for vec in kbasis[s]:
            img = _matvec(amat, vec)
            # express img in the kernel basis at t
            tmat = [[kbasis[t][b][i] for b in range(len(kbasis[t]))]
                    for i in range(cover.dim(t))]
            coeffs = solve(tmat, img)
            if coeffs is None:
                raise CoverNotSurjective(f"kernel not arrow-stable at {t}")
            cols.append(coeffs)
        mats[arrow.key] = [[cols[j][i] for j in range(len(cols))]
                           for i in range(len(kbasis[t]))]
    return ExplicitRep(q, dims, mats)


def degree_shifted(rep, k):
    dims = {v.shifted(k): d for v, d in rep.dims.items()}
    mats = {(kind, label, degree + k): m for (kind, label, degree), m in rep.mats.items()}
    return ExplicitRep(rep.quiver, dims, mats)


def dual_rep(rep):
    """The dual module over the opposite quiver, degrees negated."""
    q = rep.quiver
    qop = q.opposite()
    dims = {RepVertex(v.base, -v.degree): d for v, d in rep.dims.items()}
    wrap_of = {_wrap_arrow(w, 0).label: w for w in rep.maxpaths}
    # maximal paths of the opposite quiver, found by their arrow-label sets
    opp_by_labels = {
        (frozenset(a.label for a in w.arrows), w.source if not w.arrows else None): w
        for w in maximal_paths(qop)}
    mats = {}
    for (kind, label, degree), mat in rep.mats.items():
        t = _transpose(mat)
        if kind == "edge":
            mats[("edge", label, -degree)] = t
        else:
            # wrap of w: j[m] -> i[m+1] dualizes to i[-m-1] -> j[-m], the
            # wrap of the reversed path at degree -m-1
            w = wrap_of[label]
            key_set = frozenset(a.label for a in w.arrows)
            wop = opp_by_labels[(key_set, w.source if not w.arrows else None)]
            mats[_wrap_arrow(wop, -degree - 1).key] = t
    return ExplicitRep(qop, dims, mats)


def _transpose(mat):
    if not mat:
        return []
    return [[mat[i][j] for i in range(len(mat))] for j in range(len(mat[0]))]


def cosyzygy(rep):
    """Cokernel of the injective envelope, via duality with the syzygy."""
    return dual_rep(syzygy(dual_rep(rep)))
