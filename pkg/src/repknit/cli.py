"""Batch command line: deterministic text artifacts from a JSON config.

    repknit <subcommand> --config job.json [--window lo:hi] [--seed N]
            [--out DIR] [--format tsv|json|dot]

Subcommands: describe, knit, orbits, bijection-table, poset, monomial,
sigma-algebra, hom, selfcheck.  Output is byte-identical across runs for
identical configs and seeds.  REPKNIT_LOG=debug turns on progress logging.
"""

import argparse
import json
import logging
import os
import sys

from .arquiver import default_margin, knit
from .config import load_config
from .errors import RepknitError
from .homs import hom_dim
from .monomials import (LaurentMonomial, module_of_monomial,
                        monomial_of_module)
from .orbits import (degeneration_order, enumerate_modules, module_to_pair,
                     verify_bijection)
from .projectivize import corner_presentation, graded_basis_dims
from .quiver import build_slot_quiver
from .repetitive import build_repetitive_presentation
from .selfcheck import run_selfcheck

log = logging.getLogger("repknit")


def _setup_logging():
    level = os.environ.get("REPKNIT_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def _window_for(config, span_degrees=2):
    quiver, xi = config.quiver, config.xi
    margin = config.margin if config.margin is not None else default_margin(quiver)
    if config.levels is not None:
        return knit(quiver, xi, config.levels, margin)
    h = quiver.coxeter_number()
    degrees = [0]
    if config.dimension_vector:
        degrees += [v.degree for v in config.dimension_vector.support()]
    reach = (max(map(abs, degrees)) + span_degrees) * (2 * h)
    lo = min(xi.values()) - reach - margin
    hi = max(xi.values()) + reach + margin + 1
    return knit(quiver, xi, (lo, hi), margin)


def _shifted(slot, shift):
    return f"({slot.column},{slot.level + shift})"


def cmd_describe(config, args):
    quiver = config.quiver
    lines = [f"type\t{quiver.dynkin_type}"]
    lines.append("vertices\t" + " ".join(quiver.vertices))
    for a in quiver.arrows:
        lines.append(f"arrow\t{a.label}\t{a.source}\t{a.target}")
    lines.append("height\t" + " ".join(f"{v}:{config.xi[v]}" for v in quiver.vertices))
    lo = min(config.xi.values()) - 2
    hi = max(config.xi.values()) + 3
    sq = build_slot_quiver(quiver, config.xi, (lo, hi))
    lines.append(f"slot_band\t[{lo},{hi})\tslots={len(sq.slots)}"
                 f"\tarrows={len(sq.arrows)}\trelations={len(sq.relations)}")
    pres = build_repetitive_presentation(quiver, (0, 3))
    lines.append(f"repetitive_vertices_per_degree\t{len(quiver.vertices)}")
    for w in pres.maxpaths:
        lines.append(f"maximal_path\t{w.label}\t{w.source}\t{w.target}")
    for word in pres.base_relation_words():
        lines.append(f"relation_per_degree\t{word}")
    return "\n".join(lines) + "\n", "describe.txt"


def cmd_knit(config, args):
    window = _window_for(config)
    if args.format == "json":
        return window.to_json() + "\n", "knit.json"
    if args.format == "tsv":
        lines = ["slot\tkind\tdim"]
        for v in window.all_vertices():
            lines.append(f"{_shifted(v.slot, config.display_level_shift)}"
                         f"\t{v.kind}\t{v.dim}")
        return "\n".join(lines) + "\n", "knit.tsv"
    return window.to_dot(), "knit.dot"


def _require_dimension_vector(config):
    if config.dimension_vector is None:
        raise RepknitError("this subcommand needs dimension_vector in the config")
    return config.dimension_vector


def cmd_orbits(config, args):
    d = _require_dimension_vector(config)
    window = _window_for(config)
    classes = enumerate_modules(window, d)
    lines = [f"classes\t{len(classes)}"]
    for c in classes:
        lines.append(c.label())
    return "\n".join(lines) + "\n", "orbits.txt"


def bijection_table_text(window, d, shift=0):
    """Rows are stable slots with a nonzero entry for some class, highest
    level first; columns are the classes in canonical order."""
    classes = enumerate_modules(window, d)
    pairs = [module_to_pair(window, c) for c in classes]
    rows = sorted({s for p in pairs for s in p.V},
                  key=lambda s: (-s.level, window.quiver.index(s.column)))
    lines = ["V-slot\t" + "\t".join(c.label() for c in classes)]
    for s in rows:
        cells = "\t".join(str(p.V.get(s, 0)) for p in pairs)
        lines.append(f"V({s.column},{s.level + shift})\t{cells}")
    return "\n".join(lines) + "\n"


def cmd_bijection_table(config, args):
    d = _require_dimension_vector(config)
    window = _window_for(config)
    report = verify_bijection(window, d)
    table = bijection_table_text(window, d, config.display_level_shift)
    footer = f"# {report.summary()}\n"
    return table + footer, "bijection-table.tsv"


def cmd_poset(config, args):
    d = _require_dimension_vector(config)
    window = _window_for(config)
    classes = enumerate_modules(window, d)
    poset = degeneration_order(window, classes)
    if args.format == "tsv":
        lines = ["lower\tupper"]
        for a, b in poset.hasse_edges():
            lines.append(f"{a.label()}\t{b.label()}")
        return "\n".join(lines) + "\n", "poset.tsv"
    return poset.to_dot(), "poset.dot"


def cmd_monomial(config, args):
    window = _window_for(config)
    if config.monomial is not None:
        m = LaurentMonomial(config.monomial)
        cls = module_of_monomial(window, m)
        payload = {
            "monomial": {f"Y[{s.column},{s.level}]": e
                         for s, e in sorted(m.exponents.items())},
            "class": cls.label(),
        }
        return json.dumps(payload, indent=1, sort_keys=True) + "\n", "monomial.json"
    d = _require_dimension_vector(config)
    out = []
    for c in enumerate_modules(window, d):
        m = monomial_of_module(window, c)
        out.append({
            "class": c.label(),
            "exponents": {f"Y[{s.column},{s.level}]": e
                          for s, e in sorted(m.exponents.items())},
        })
    return json.dumps(out, indent=1, sort_keys=True) + "\n", "monomial.json"


def cmd_sigma_algebra(config, args):
    if config.sigma is None:
        raise RepknitError("sigma-algebra needs sigma in the config")
    pres = corner_presentation(config.quiver, config.xi, config.sigma)
    table = graded_basis_dims(config.quiver, config.xi, config.sigma)
    return pres.report() + table.to_tsv(), "sigma-algebra.tsv"


def cmd_hom(config, args):
    window = _window_for(config)
    h = window.quiver.coxeter_number()
    base = window.level_lo + window.margin
    band = [v for v in window.all_vertices() if base <= v.slot.level < base + 2 * h]
    lines = ["source\\target\t" + "\t".join(str(v.slot) for v in band)]
    for v in band:
        row = [str(hom_dim(window, v.slot, u.slot)) for u in band]
        lines.append(str(v.slot) + "\t" + "\t".join(row))
    return "\n".join(lines) + "\n", "hom.tsv"


def cmd_selfcheck(config, args):
    window = _window_for(config)
    results = run_selfcheck(window, seed=args.seed)
    lines = [r.line() for r in results]
    ok = all(r.ok for r in results)
    lines.append("selfcheck " + ("OK" if ok else "FAILED"))
    return "\n".join(lines) + "\n", "selfcheck.txt", 0 if ok else 1


COMMANDS = {
    "describe": cmd_describe,
    "knit": cmd_knit,
    "orbits": cmd_orbits,
    "bijection-table": cmd_bijection_table,
    "poset": cmd_poset,
    "monomial": cmd_monomial,
    "sigma-algebra": cmd_sigma_algebra,
    "hom": cmd_hom,
    "selfcheck": cmd_selfcheck,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="repknit", description=__doc__)
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", required=True, help="path to the JSON job file")
    parser.add_argument("--window", help="override level window as lo:hi")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--out", help="directory for the output artifact")
    parser.add_argument("--format", choices=["tsv", "json", "dot"], default=None)
    return parser


def main(argv=None):
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        if args.window:
            try:
                lo, hi = args.window.split(":")
                config.levels = (int(lo), int(hi))
            except ValueError:
                raise RepknitError(f"bad --window {args.window!r}, expected lo:hi")
        result = COMMANDS[args.command](config, args)
    except RepknitError as exc:
        print(f"repknit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if len(result) == 3:
        text, name, code = result
    else:
        text, name = result
        code = 0
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, name)
        with open(path, "w") as fh:
            fh.write(text)
        print(path)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
