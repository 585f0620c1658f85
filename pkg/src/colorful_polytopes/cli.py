"""Command-line front end.

Exit status: 0 when every emitted check passes, 1 when a check fails, 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import families as fam
from .colorful import HypothesisError, build_polytope, facet_families, k_table
from .exchange import support_projection, validate
from .poset import check_axioms
from .quotient import covering_map, poset_isomorphic, quotient
from .reports import (
    REPORT_KINDS,
    Check,
    axiom_checks,
    checks_to_csv,
    checks_to_json,
    facet_checks,
    group_checks,
    report_table,
    symmetric_group,
    verify,
)
from .surface import surface_report
from .symmetry import COLOR_PRESERVING, COLOR_RESPECTING, FULL, graph_automorphisms

FORMATS = ("text", "json", "csv", "dot")
MODES = {"full": FULL, "preserving": COLOR_PRESERVING, "respecting": COLOR_RESPECTING}

VERBS = (
    "build",
    "build-polytope",
    "check-axioms",
    "verify",
    "aut",
    "verify-group",
    "quotient",
    "check-covering",
    "check-iso",
    "surface",
    "facet-stats",
    "report",
)


@dataclass
class RunConfig:
    verb: str
    family: str = fam.COLORFUL_ASSOCIAHEDRON
    n: int | None = None
    output_format: str = "text"
    seed: int = 0
    exhaustive: bool = False
    from_file: str | None = None
    out: str | None = None
    mode: str = "respecting"
    kind: str = "counts"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        family = fam.FROM_FILE if args.from_file else args.family
        return cls(
            verb=args.verb,
            family=family,
            n=args.n,
            output_format=args.format,
            seed=args.seed,
            exhaustive=args.exhaustive,
            from_file=args.from_file,
            out=args.out,
            mode=args.mode,
            kind=args.kind,
        )


class Output:
    """Collects the report; written to ``--out`` or standard output at the end."""

    def __init__(self):
        self.parts: list[str] = []

    def write(self, text: str):
        self.parts.append(text if text.endswith("\n") else text + "\n")

    def json(self, obj):
        self.write(json.dumps(obj, indent=2, default=str))

    def flush(self, path: str | None):
        text = "".join(self.parts)
        if path:
            with open(path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colorful-polytopes", description="Colorful associahedra and cyclohedra.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--family", choices=[f for f in fam.FAMILIES if f != fam.FROM_FILE], default=fam.COLORFUL_ASSOCIAHEDRON)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled flag-connectivity")
    p.add_argument("--exhaustive", action="store_true", help="exhaustive flag-connectivity at every rank")
    p.add_argument("--from-file", default=None, help="exchange graph JSON")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--mode", choices=list(MODES), default="respecting", help="aut: which group")
    p.add_argument("--kind", choices=REPORT_KINDS, default="counts", help="report: which table")
    return p


# --------------------------------------------------------------------------


def _graph(cfg: RunConfig):
    if cfg.family == fam.FROM_FILE:
        g = fam.load_graph(cfg.from_file)
        rep = validate(g)
        if not rep.colorful_hypotheses:
            raise fam.InputError("; ".join(rep.violations) or "graph is not regular, connected and properly colored")
        return g
    if cfg.n is None:
        raise fam.InputError("-n is required")
    return fam.family_graph(cfg.family, cfg.n)


def _poset(cfg: RunConfig):
    if cfg.family == fam.FROM_FILE:
        return build_polytope(_graph(cfg))
    if cfg.n is None:
        raise fam.InputError("-n is required")
    return fam.family_polytope(cfg.family, cfg.n)


def _need_colored(cfg: RunConfig):
    if cfg.family not in fam.COLORED:
        raise fam.InputError(f"{cfg.verb} needs a colorful family, got {cfg.family}")
    if cfg.n is None:
        raise fam.InputError("-n is required")
    fam.check_range(cfg.family, cfg.n)


def _emit_checks(out: Output, cfg: RunConfig, checks: list[Check], header: str | None = None) -> int:
    if cfg.output_format == "json":
        out.write(checks_to_json(checks))
    elif cfg.output_format == "csv":
        out.write(checks_to_csv(checks))
    else:
        if header:
            out.write(header)
        for c in checks:
            out.write(c.line())
            if not c.ok and c.witness is not None:
                out.write(f"  witness: {json.dumps(c.witness, default=str)[:2000]}")
    return 0 if all(c.ok for c in checks) else 1


def _exhaustive(cfg: RunConfig):
    return True if cfg.exhaustive else None


def run(cfg: RunConfig, out: Output) -> int:
    fmt = cfg.output_format
    if cfg.verb == "build":
        g = _graph(cfg)
        if fmt == "dot":
            out.write(g.to_dot())
        elif fmt == "json":
            out.json(g.to_json())
        else:
            rep = validate(g)
            out.write(f"vertices: {rep.num_vertices}\nedges: {rep.num_edges}\nregularity: {rep.regularity}")
            out.write(f"colors: {rep.num_colors}\nproper: {rep.is_proper}\nconnected: {rep.is_connected}")
        return 0

    if cfg.verb == "build-polytope":
        p = _poset(cfg)
        if fmt == "json":
            out.json(p.to_json())
        elif fmt == "csv":
            out.write(p.summary_csv())
        elif fmt == "dot":
            raise fam.InputError("build-polytope has no DOT export")
        else:
            out.write(f"rank: {p.rank}\nf-vector: {' '.join(map(str, p.f_vector()))}\nflags: {len(p.flags())}")
        return 0

    if cfg.verb == "check-axioms":
        p = _poset(cfg)
        fam_n = (None, None) if cfg.family == fam.FROM_FILE else (cfg.family, cfg.n)
        return _emit_checks(out, cfg, axiom_checks(p, *fam_n, exhaustive=_exhaustive(cfg), seed=cfg.seed))

    if cfg.verb == "verify":
        if cfg.family == fam.FROM_FILE:
            checks = verify(fam.FROM_FILE, graph=_graph(cfg), exhaustive=_exhaustive(cfg), seed=cfg.seed)
        else:
            if cfg.n is None:
                raise fam.InputError("-n is required")
            checks = verify(cfg.family, cfg.n, exhaustive=_exhaustive(cfg), seed=cfg.seed)
        return _emit_checks(out, cfg, checks, f"# verify {cfg.family} n={cfg.n}")

    if cfg.verb == "aut":
        g = _graph(cfg)
        mode = MODES[cfg.mode]
        if mode != FULL and not g.colored:
            raise fam.InputError(f"--mode={cfg.mode} needs an edge-colored graph")
        G = graph_automorphisms(g, mode)
        if fmt == "json":
            out.json(G.to_json())
        else:
            out.write(f"mode: {cfg.mode}\norder: {G.order}\ngenerators: {len(G.generators)}")
        return 0

    if cfg.verb == "verify-group":
        if cfg.family == fam.FROM_FILE or cfg.n is None:
            raise fam.InputError("verify-group needs --family and -n")
        g, p = fam.family_graph(cfg.family, cfg.n), fam.family_polytope(cfg.family, cfg.n)
        return _emit_checks(out, cfg, group_checks(cfg.family, cfg.n, p, g))

    if cfg.verb == "quotient":
        _need_colored(cfg)
        g, p = fam.family_graph(cfg.family, cfg.n), fam.family_polytope(cfg.family, cfg.n)
        q = quotient(p, symmetric_group(g))
        if fmt == "json":
            data = q.to_json()
            data["orbit_sizes"] = [len(o) for o in q.orbits]
            out.json(data)
        elif fmt == "csv":
            out.write(q.summary_csv())
        else:
            ax = check_axioms(q)
            out.write(f"orbits: {len(q)}\nf-vector: {' '.join(map(str, q.f_vector()))}")
            out.write(f"axioms: {'pass' if ax.passed else 'fail'}")
            return 0 if ax.passed else 1
        return 0

    if cfg.verb == "check-iso":
        _need_colored(cfg)
        g, p = fam.family_graph(cfg.family, cfg.n), fam.family_polytope(cfg.family, cfg.n)
        classical = fam.family_polytope(fam.classical_of(cfg.family), cfg.n)
        ok, w = poset_isomorphic(quotient(p, symmetric_group(g)), classical)
        if fmt == "json":
            out.json({"isomorphic": ok, "witness": None if w is None else [[repr(a), repr(b)] for a, b in w.items()]})
        else:
            out.write(f"quotient by S_{cfg.n} isomorphic to {fam.classical_of(cfg.family)} {cfg.n}: {'pass' if ok else 'fail'}")
            if ok:
                for a, b in w.items():
                    out.write(f"  {a!r} -> {b!r}")
        return 0 if ok else 1

    if cfg.verb == "check-covering":
        _need_colored(cfg)
        g, p = fam.family_graph(cfg.family, cfg.n), fam.family_polytope(cfg.family, cfg.n)
        classical_name = fam.classical_of(cfg.family)
        cov = covering_map(p, fam.family_polytope(classical_name, cfg.n), support_projection(g, fam.family_graph(classical_name, cfg.n)))
        if fmt == "json":
            out.json({"valid": cov.valid, "degree": cov.degree, "failures": cov.failures, "witness": cov.witness()})
        else:
            out.write(f"covering map: {'pass' if cov.valid else 'fail'}\nfiber size: {cov.degree}")
            for msg in cov.failures[:20]:
                out.write(f"  {msg}")
        return 0 if cov.valid else 1

    if cfg.verb == "surface":
        p = _poset(cfg)
        if p.rank != 3:
            raise fam.InputError(f"surface needs a rank-3 polytope, got rank {p.rank}")
        rep = surface_report(p)
        if fmt == "json":
            out.json(rep.to_json())
        elif fmt == "csv":
            out.write(rep.to_csv())
        else:
            for k, v in rep.to_json().items():
                out.write(f"{k}: {v}")
        return 0

    if cfg.verb == "facet-stats":
        if cfg.family == fam.FROM_FILE or cfg.n is None:
            raise fam.InputError("facet-stats needs --family and -n")
        fam.check_range(cfg.family, cfg.n, verify=True)
        p = fam.family_polytope(cfg.family, cfg.n)
        if fmt == "json" and cfg.family == fam.COLORFUL_ASSOCIAHEDRON and cfg.n >= 3:
            checks = facet_checks(cfg.family, cfg.n, p)
            fams = facet_families(p)
            out.json(
                {
                    "families": {f"{i},{c}": sorted(p.vertex_sets[f]) for (i, c), f in sorted(fams.items())},
                    "K": k_table(p),
                    "checks": [c.to_json() for c in checks],
                }
            )
            return 0 if all(c.ok for c in checks) else 1
        return _emit_checks(out, cfg, facet_checks(cfg.family, cfg.n, p))

    if cfg.verb == "report":
        t = report_table(cfg.kind, cfg.n)
        if fmt == "json":
            out.json(t.to_json())
        elif fmt == "csv":
            out.write(t.to_csv())
        else:
            out.write(t.to_text())
        return 0 if t.ok else 1

    raise fam.InputError(f"unknown verb {cfg.verb!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    out = Output()
    try:
        if cfg.family != fam.FROM_FILE and cfg.n is not None and cfg.verb != "report":
            fam.check_range(cfg.family, cfg.n, verify=cfg.verb == "verify")
        status = run(cfg, out)
    except (fam.InputError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush(cfg.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
