"""Laurent monomials in the framing-slot variables.

A variable sits at every framing slot; the distinguished monomial of a
stable slot multiplies the two column neighbours and divides by the
neighbouring columns' variables at the middle level.  A pair (V, W) turns
into W-variables times inverse stable-slot monomials, and the exponents of
the result are exactly the dominance defects, which ties dominance of the
pair to nonnegativity of the monomial and yields the class dictionary:
each variable's exponent is the multiplicity of one indecomposable, and
projective summands never show.
"""

from .errors import NotDominant
from .orbits import ModuleClass, module_to_pair
from .quiver import Slot, is_stable_slot


class LaurentMonomial:
    """Finitely supported integer exponents over framing slots; immutable."""

    __slots__ = ("exponents", "_hash")

    def __init__(self, exponents=None):
        clean = {s: e for s, e in (exponents or {}).items() if e}
        self.exponents = clean
        self._hash = hash(frozenset(clean.items()))

    def __eq__(self, other):
        return isinstance(other, LaurentMonomial) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        out = dict(self.exponents)
        for s, e in other.exponents.items():
            out[s] = out.get(s, 0) + e
        return LaurentMonomial(out)

    def __pow__(self, k):
        return LaurentMonomial({s: k * e for s, e in self.exponents.items()})

    def inverse(self):
        return self ** -1

    def is_one(self):
        return not self.exponents

    def is_dominant(self):
        return all(e >= 0 for e in self.exponents.values())

    def sorted_items(self, quiver):
        return sorted(self.exponents.items(),
                      key=lambda it: (quiver.index(it[0].column), it[0].level))

    def text(self, quiver):
        if not self.exponents:
            return "1"
        parts = []
        for s, e in self.sorted_items(quiver):
            head = f"Y[{s.column},{s.level}]"
            parts.append(head if e == 1 else f"{head}^{e}")
        return " ".join(parts)

    def __repr__(self):
        if not self.exponents:
            return "1"
        parts = []
        for s, e in sorted(self.exponents.items()):
            head = f"Y[{s.column},{s.level}]"
            parts.append(head if e == 1 else f"{head}^{e}")
        return " ".join(parts)


def one():
    return LaurentMonomial()


def variable(slot, exponent=1):
    return LaurentMonomial({slot: exponent})


def a_monomial(quiver, xi, slot):
    """The stable-slot monomial: both column neighbours over the adjacent
    columns' variables at the middle level."""
    if not is_stable_slot(xi, slot):
        raise ValueError(f"{slot} is not a stable slot")
    i, n = slot
    exps = {Slot(i, n - 1): 1, Slot(i, n + 1): 1}
    for j in quiver.neighbors(i):
        exps[Slot(j, n)] = exps.get(Slot(j, n), 0) - 1
    return LaurentMonomial(exps)


def pair_to_monomial(quiver, xi, pair):
    """W-variables times inverse stable-slot monomials over V.

    The exponent at each framing slot comes out as the dominance defect
    there, so the result is dominant exactly when the pair is.
    """
    out = {s: n for s, n in pair.W.items()}
    for s, n in pair.V.items():
        for t, e in a_monomial(quiver, xi, s).exponents.items():
            out[t] = out.get(t, 0) - n * e
    return LaurentMonomial(out)


def monomial_of_module(window, nclass):
    """The dominant monomial of a class; blind to projective summands."""
    return pair_to_monomial(window.quiver, window.xi, module_to_pair(window, nclass))


def module_of_monomial(window, monomial):
    """The unique projective-free class with this monomial.

    Each variable's exponent is the multiplicity of the indecomposable
    obtained from the vertex one level below the variable's slot by the
    inverse syzygy.
    """
    from .arquiver import omega_inv
    if not monomial.is_dominant():
        raise NotDominant(f"monomial {monomial!r} has a negative exponent")
    mults = {}
    for s, e in sorted(monomial.exponents.items()):
        below = window.vertex(s.down())
        target = omega_inv(window, below)
        mults[target.slot] = mults.get(target.slot, 0) + e
    return ModuleClass(window, mults.items())


class CompositionCandidate:
    """One class of the ambient dimension vector, with its monomial and the
    closure comparison against the reference class."""

    __slots__ = ("monomial", "module_class", "in_closure")

    def __init__(self, monomial, module_class, in_closure):
        self.monomial = monomial
        self.module_class = module_class
        self.in_closure = in_closure


def composition_candidates(window, m_prime):
    """Scaffolding for composition-multiplicity bookkeeping.

    Given the monomial of a reference class, list every class of the same
    dimension vector together with its monomial, flagging the ones whose
    orbit closure contains the reference class (componentwise V
    comparison).  Multiplicity values themselves require intersection
    cohomology input and are out of scope; the flagged poset is the
    hand-off point.
    """
    from .orbits import enumerate_modules
    ref = module_of_monomial(window, m_prime)
    ref_pair = module_to_pair(window, ref)
    out = []
    for c in enumerate_modules(window, ref.dim):
        pair = module_to_pair(window, c)
        dominates = all(pair.V.get(s, 0) >= n for s, n in ref_pair.V.items())
        out.append(CompositionCandidate(
            pair_to_monomial(window.quiver, window.xi, pair), c, dominates))
    return out
