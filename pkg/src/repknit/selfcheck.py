"""Engine-versus-oracle comparisons and structural invariant checks.

The knitting engine and the matrix oracle compute the same quantities by
unrelated means: the engine by mesh recursion over slots, the oracle by
exact linear algebra on explicit representations built from simples by
repeated syzygies.  The self-check drives both over a window and demands
exact agreement, alongside the structural invariants (mesh additivity,
period counts against the positive-root oracle, and the reconstruction
identity of the split Grothendieck group).
"""

import random

from .arquiver import omega, omega_inv, tau, tau_inv
from .dimvec import RepVertex
from .errors import RepknitError
from .homs import evaluate_r_combination, h_eval, hom_dim, r_element
from .oracle import (cosyzygy, endo_dim, explicit_interval,
                     explicit_kq_injective, explicit_kq_projective,
                     explicit_projective, explicit_simple, hom_space, syzygy)
from .repetitive import maximal_paths
from .roots import positive_root_count


def stable_window_reps(window, level_lo, level_hi):
    """Explicit representations for every stable slot in a level band.

    Simples are explicit; the rest of the band is reached by syzygy and
    cosyzygy chains from simples of nearby degrees, identified by their
    dimension vectors.  Raises if the band is not fully covered.
    """
    h = window.quiver.coxeter_number()
    locate = {}
    degrees = set()
    for v in window.stable_vertices(interior_only=False):
        locate[v.dim] = v.slot
        if level_lo - 2 * h <= v.slot.level < level_hi + 2 * h:
            degrees.update(v.dim.degrees())
    targets = {slot for dim, slot in locate.items()
               if level_lo <= slot.level < level_hi}
    reps = {}

    def claim(rep, slot):
        if slot in targets and slot not in reps:
            reps[slot] = rep

    chain_cap = 4 * h
    for m in range(min(degrees) - 1, max(degrees) + 2):
        seeds = []
        for base in window.quiver.vertices:
            seeds.append(explicit_simple(window.quiver, RepVertex(base, m)))
            seeds.append(explicit_kq_projective(window.quiver, base, m))
            seeds.append(explicit_kq_injective(window.quiver, base, m))
        for seed in seeds:
            seed_slot = locate.get(seed.dim_vector())
            if seed_slot is not None:
                claim(seed, seed_slot)
            for step in (syzygy, cosyzygy):
                current = seed
                for _ in range(chain_cap):
                    current = step(current)
                    if not current.dims:
                        break
                    slot = locate.get(current.dim_vector())
                    if slot is None:
                        break  # walked out of the knitted window
                    claim(current, slot)
    missing = sorted(targets - set(reps))
    if missing:
        raise RepknitError(
            f"oracle chains left stable slots uncovered: {missing}")
    return reps


def interval_window_reps(window, level_lo, level_hi):
    """Interval-module oracle for linearly oriented type A.

    Independent of the syzygy machinery: every indecomposable of the line
    algebra is an interval of bounded length, constructed directly.
    """
    quiver = window.quiver
    n = len(quiver.vertices)
    if len(maximal_paths(quiver)) != 1:
        raise ValueError("interval oracle needs a linearly oriented quiver")
    targets = {}
    for v in window.stable_vertices(interior_only=False):
        if level_lo <= v.slot.level < level_hi:
            targets[v.dim] = v.slot
    degrees = set()
    for dim in targets:
        degrees.update(dim.degrees())
    reps = {}
    for m in range(min(degrees) - 1, max(degrees) + 2):
        for offset in range(n):
            for length in range(1, n + 1):
                rep = explicit_interval(quiver, n * m + offset, length)
                slot = targets.get(rep.dim_vector())
                if slot is not None and slot not in reps:
                    reps[slot] = rep
    missing = [slot for dim, slot in targets.items() if slot not in reps]
    if missing:
        raise RepknitError(
            f"interval oracle left stable slots uncovered: {sorted(missing)}")
    return reps


def add_projective_reps(window, reps, level_lo, level_hi):
    out = dict(reps)
    for v in window.projective_vertices(interior_only=False):
        if level_lo <= v.slot.level < level_hi:
            out[v.slot] = explicit_projective(window.quiver, v.rep_vertex)
    return out


class CheckResult:
    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = ok
        self.detail = detail

    def line(self):
        status = "pass" if self.ok else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{status}  {self.name}{tail}"


def check_period_count(window):
    h = window.quiver.coxeter_number()
    base = window.level_lo + window.margin
    count = sum(1 for v in window.stable_vertices()
                if base <= v.slot.level < base + h)
    want = positive_root_count(window.quiver)
    return CheckResult(
        "stable vertices per period == positive roots",
        count == want, f"{count} vs {want}")


def check_mesh_additivity(window):
    bad = []
    for end, mesh in window.meshes.items():
        total = window.vertex(mesh.start).dim + window.vertex(end).dim
        mids = None
        for m in mesh.middles:
            mids = window.vertex(m).dim if mids is None else mids + window.vertex(m).dim
        if mids != total:
            bad.append(str(end))
    return CheckResult("mesh additivity at every mesh", not bad, ";".join(bad[:3]))


def check_projective_single_mesh(window):
    seen = {}
    for end, mesh in window.meshes.items():
        for m in mesh.middles:
            if window.vertex(m).kind == "projective":
                seen.setdefault(m, []).append(end)
    bad = [s for s, ends in seen.items() if len(ends) != 1]
    return CheckResult("each projective sits in exactly one mesh", not bad,
                       ";".join(map(str, bad[:3])))


def check_engine_vs_oracle(window, level_lo, level_hi, use_intervals=False):
    builder = interval_window_reps if use_intervals else stable_window_reps
    reps = builder(window, level_lo, level_hi)
    reps = add_projective_reps(window, reps, level_lo, level_hi)
    slots = sorted(reps, key=lambda s: (s.level, s.column))
    bad = []
    pairs = 0
    for s1 in slots:
        for s2 in slots:
            pairs += 1
            engine = hom_dim(window, s1, s2)
            matrix = hom_space(reps[s1], reps[s2])
            if engine != matrix:
                bad.append(f"{s1}->{s2}: engine {engine} oracle {matrix}")
    return CheckResult(
        f"hom engine equals matrix oracle on {pairs} pairs", not bad,
        "; ".join(bad[:3]))


def check_endomorphism_bricks(window, reps):
    bad = [str(s) for s, rep in sorted(reps.items()) if endo_dim(rep) != 1]
    return CheckResult("oracle endomorphism algebras are one-dimensional",
                       not bad, ";".join(bad[:3]))


def check_omega_vs_oracle(window, reps):
    bad = []
    for slot, rep in sorted(reps.items()):
        vertex = window.vertices[slot]
        if vertex.kind != "stable":
            continue
        image = omega(window, vertex)
        oracle_dim = syzygy(rep).dim_vector()
        if image.dim != oracle_dim:
            bad.append(f"{slot}: engine {image.dim} oracle {oracle_dim}")
        image = omega_inv(window, vertex)
        oracle_dim = cosyzygy(rep).dim_vector()
        if image.dim != oracle_dim:
            bad.append(f"{slot} (inverse): engine {image.dim} oracle {oracle_dim}")
    return CheckResult("syzygy slot maps agree with the oracle", not bad,
                       "; ".join(bad[:2]))


def check_reconstruction(window, seed, samples=100):
    """Both expansions of a random element: over classes via the pairing
    against mesh elements, and over mesh elements via the transposed
    pairing.  Each must reproduce the element exactly."""
    rng = random.Random(seed)
    h = window.quiver.coxeter_number()
    lo = window.level_lo + window.margin
    hi = window.level_hi - window.margin - 2 * h
    block = [v for v in window.all_vertices() if lo <= v.slot.level < hi]
    if not block:
        return CheckResult("reconstruction identity", False, "window too small")
    # mesh elements exist two levels above the bottom; iterate over all of
    # them, since the transposed pairing reaches below the element's support
    probes = [v for v in window.all_vertices(interior_only=False)
              if v.slot.level >= window.level_lo + 2]
    bad = 0
    for _ in range(samples):
        support = rng.sample(block, k=min(len(block), rng.randint(1, 4)))
        x = {v.slot: rng.randint(-3, 3) for v in support}
        x = {s: c for s, c in x.items() if c}
        if not x:
            continue
        top = max(s.level for s in x)
        class_coeffs = {}
        r_coeffs = {}
        for v in probes:
            c = h_eval(window, x, r_element(window, v))
            if c:
                class_coeffs[v.slot] = c
            # maps out of v vanish above the support of x, so the
            # transposed pairing only needs probes below it
            if v.slot.level <= top:
                c = h_eval(window, {v.slot: 1}, x)
                if c:
                    r_coeffs[v.slot] = c
        if class_coeffs != x:
            bad += 1
        elif evaluate_r_combination(window, r_coeffs) != x:
            bad += 1
    return CheckResult(f"reconstruction identities on {samples} seeded elements",
                       bad == 0, f"{bad} failures")


def check_pairing_identity(window, level_lo, level_hi):
    block = [v for v in window.all_vertices()
             if level_lo <= v.slot.level < level_hi]
    bad = []
    for a in block:
        ra = r_element(window, a)
        for b in block:
            want = 1 if a.slot == b.slot else 0
            got = h_eval(window, {b.slot: 1}, ra)
            if got != want:
                bad.append(f"h([{b.slot}], r_{a.slot}) = {got}")
    return CheckResult(
        f"pairing matrix is the identity on a {len(block)}-vertex block",
        not bad, "; ".join(bad[:3]))


def check_tau_roundtrip(window):
    bad = []
    for v in window.stable_vertices():
        if not window.is_interior(v.slot.down(2)) or not window.is_interior(v.slot.up(2)):
            continue
        if tau_inv(window, tau(window, v)).slot != v.slot:
            bad.append(str(v.slot))
    return CheckResult("tau / tau-inverse roundtrip", not bad, ";".join(bad[:3]))


def run_selfcheck(window, seed=0, use_intervals=False, oracle_levels=None):
    """The full check suite; returns a list of CheckResult."""
    h = window.quiver.coxeter_number()
    if oracle_levels is None:
        base = max(window.level_lo + window.margin, min(window.xi.values()) - h)
        oracle_levels = (base, base + h)
    results = [
        check_period_count(window),
        check_mesh_additivity(window),
        check_projective_single_mesh(window),
        check_tau_roundtrip(window),
    ]
    try:
        builder = interval_window_reps if use_intervals else stable_window_reps
        reps = builder(window, *oracle_levels)
        results.append(check_engine_vs_oracle(
            window, *oracle_levels, use_intervals=use_intervals))
        results.append(check_endomorphism_bricks(window, reps))
        results.append(check_omega_vs_oracle(window, reps))
    except RepknitError as exc:
        results.append(CheckResult("oracle construction", False, str(exc)))
    results.append(check_reconstruction(window, seed))
    results.append(check_pairing_identity(window, *oracle_levels))
    return results
