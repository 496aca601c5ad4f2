"""Command-line interface: reproducible reports for every computation.

Subcommands mirror the library modules: `lattice` enumerates Picard-lattice
classes, `nodal` runs multiplicity schemes from a root-configuration file,
`spin` / `spin-table` count spin structures on dual graphs, `theta` runs the
F2 layer, and `detrep` drives the symmetric determinantal pipeline.  Reports
go to standard output (TSV or aligned pretty format); errors to standard
error.  Exit codes: 0 success, 2 input error, 3 degenerate input.
"""

from __future__ import annotations

import argparse
import sys
from collections import defaultdict

from . import detrep, lattice as lt, nodal, spin, theta_f2
from .lattice import ClassKind

EXIT_INPUT = 2
EXIT_DEGENERATE = 3


def _emit(rows: list[tuple], header: tuple[str, ...], fmt: str) -> None:
    """Print a table of stringable cells as TSV or aligned columns."""
    cells = [tuple(str(c) for c in row) for row in rows]
    if fmt == "tsv":
        print("\t".join(header))
        for row in cells:
            print("\t".join(row))
        return
    widths = [len(h) for h in header]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for row in cells:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())


def _fmt_point(rep) -> str:
    if isinstance(rep, tuple) and all(isinstance(c, int) for c in rep):
        return lt.format_class(rep)
    return str(rep)


# ---------------------------------------------------------------------------
# Subcommands.

_KINDS = {
    "exceptional": ClassKind.EXCEPTIONAL,
    "root": ClassKind.ROOT,
    "blowdown": ClassKind.BLOWDOWN,
}


def cmd_lattice(args) -> int:
    lat = lt.make_lattice(args.degree)
    if args.kind == "double-six":
        orbits = lt.double_six_orbits(lat)
        rows = [(" ".join(sorted(lt.format_class(d) for d in orbit)),)
                for orbit in orbits]
        _emit(rows, ("orbit",), args.format)
        print(f"total\t{len(orbits)}" if args.format == "tsv"
              else f"total: {len(orbits)}")
        return 0
    classes = lt.enumerate_classes(lat, _KINDS[args.kind])
    _emit([(lt.format_class(d),) for d in classes], ("class",), args.format)
    print(f"total\t{len(classes)}" if args.format == "tsv"
          else f"total: {len(classes)}")
    return 0


_SCHEMES = {
    "lines": nodal.line_scheme,
    "bitangents": nodal.bitangent_scheme,
    "blowdowns": nodal.blowdown_scheme,
    "doublesix": nodal.double_six_scheme,
    "eventheta": nodal.even_theta_scheme,
    "aronhold": nodal.aronhold_scheme,
}


def cmd_nodal(args) -> int:
    with open(args.config) as fh:
        cfg = nodal.parse_config(fh.read())
    dynkin = nodal.validate_config(cfg)
    if args.scheme == "profile":
        profile = nodal.intersection_profile(cfg)
        header = ("family",) + tuple(str(c) for c in nodal.PROFILE_COLUMNS)
        rows = [(name,) + row for name, row in profile]
        rows.append(("total",) + nodal.profile_column_totals(profile))
        _emit(rows, header, args.format)
        return 0
    scheme = _SCHEMES[args.scheme](cfg)
    rows = [(_fmt_point(rep), m) for rep, m in scheme.points]
    _emit(rows, ("representative", "multiplicity"), args.format)
    profile = " + ".join(f"{n}x{m}" for m, n in
                         sorted(scheme.multiplicity_profile().items()))
    if args.format == "tsv":
        print(f"dynkin\t{dynkin or '-'}")
        print(f"profile\t{profile}")
        print(f"total\t{scheme.total}")
    else:
        print(f"configuration: {dynkin or 'empty'}")
        print(f"profile: {profile}")
        print(f"total: {scheme.total}")
    return 0


def cmd_spin(args) -> int:
    with open(args.graph) as fh:
        graph = spin.parse_graph(fh.read())
    rows = []
    for support in spin.spin_scheme(graph):
        delta = " ".join(f"({graph.edges[i][0]},{graph.edges[i][1]})"
                         for i in support.delta) or "-"
        rows.append((delta, support.count, support.multiplicity))
    _emit(rows, ("support", "count", "multiplicity"), args.format)
    total = sum(s.count * s.multiplicity for s in spin.spin_scheme(graph))
    g = graph.genus
    line = f"genus {g}, total degree {total} = 2^{2 * g}"
    print(f"summary\t{line}" if args.format == "tsv" else line)
    return 0


def cmd_spin_table(args) -> int:
    rows = []
    for n in range(args.nodes + 1):
        for row in spin.spin_table_irreducible(args.genus, n):
            rows.append((n, row.resolved, row.count, row.multiplicity,
                         row.odd, row.even))
    _emit(rows, ("nodes", "resolved", "count", "multiplicity", "odd", "even"),
          args.format)
    return 0


def cmd_theta(args) -> int:
    if args.task == "aronhold":
        sets = theta_f2.enumerate_aronhold()
        by_even = defaultdict(int)
        rows = []
        for s in sets:
            even = theta_f2.even_theta_of_aronhold(s)
            by_even[even] += 1
            rows.append((" ".join(str(t) for t in s), str(even)))
        _emit(rows, ("aronhold_set", "even_theta"), args.format)
        sizes = sorted(set(by_even.values()))
        line = (f"{len(sets)} Aronhold sets over {len(by_even)} even classes,"
                f" {sizes[0]} per class" if len(sizes) == 1
                else f"{len(sets)} Aronhold sets, uneven fibers {sizes}")
        print(f"summary\t{line}" if args.format == "tsv" else line)
        return 0
    if args.task == "conic-pairs":
        intermediate, z, pairs = theta_f2.count_conic_pairs()
        _emit([("intermediate", intermediate), ("Z", z), ("pairs", pairs)],
              ("quantity", "value"), args.format)
        return 0
    space = theta_f2.make_space(args.dim // 2, args.arf)
    if space.dim != args.dim:
        print(f"error: dimension must be even, got {args.dim}", file=sys.stderr)
        return EXIT_INPUT
    count = theta_f2.count_zeros(space)
    _emit([("dim", args.dim), ("arf", args.arf), ("zeros", count)],
          ("quantity", "value"), args.format)
    return 0


def cmd_detrep(args) -> int:
    with open(args.input) as fh:
        fields = detrep.parse_data_block(fh.read())
    if args.action == "quartic":
        missing = {"L", "Q", "H"} - set(fields)
        if missing:
            raise ValueError(f"quartic action needs keys {sorted(missing)}")
        f, line = detrep.quartic_from_odd_theta(fields["L"], fields["Q"],
                                                fields["H"])
        _emit([("quartic", str(f)), ("bitangent", str(line))],
              ("quantity", "value"), args.format)
        print("bitangent verified" if args.format == "pretty"
              else "status\tbitangent verified")
        return 0
    data = detrep.data_from_block(fields)
    if args.action == "quintic":
        _emit([("quintic", str(detrep.discriminant_quintic(data)))],
              ("quantity", "value"), args.format)
        return 0
    if args.action == "conic":
        _emit([("conic", str(detrep.contact_conic(data)))],
              ("quantity", "value"), args.format)
        return 0
    f = detrep.discriminant_quintic(data)
    t = detrep.contact_conic(data)
    report = detrep.total_tangency_check(f, t, seed=args.seed)
    _emit([("quintic", str(f)), ("conic", str(t)),
           ("verdict", report.verdict.value),
           ("shear", f"{report.shear[0]} {report.shear[1]}")],
          ("quantity", "value"), args.format)
    return 0


# ---------------------------------------------------------------------------
# Parser wiring.

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dptheta",
        description="Exact combinatorial invariants of Del Pezzo surfaces, "
                    "spin curves and theta characteristics.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "pretty"),
                        default="pretty", help="report format")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("lattice", help="enumerate Picard-lattice classes")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kind", required=True,
                   choices=("exceptional", "root", "blowdown", "double-six"))
    p.set_defaults(func=cmd_lattice)

    p = add_parser("nodal", help="multiplicity schemes of a root configuration")
    p.add_argument("config", help="configuration file (degree/root lines)")
    p.add_argument("--scheme", required=True,
                   choices=tuple(_SCHEMES) + ("profile",))
    p.set_defaults(func=cmd_nodal)

    p = add_parser("spin", help="spin structures on a dual graph")
    p.add_argument("graph", help="graph file (v/e lines)")
    p.set_defaults(func=cmd_spin)

    p = add_parser("spin-table", help="irreducible-curve multiplicity tables")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--nodes", type=int, required=True)
    p.set_defaults(func=cmd_spin_table)

    p = add_parser("theta", help="F2 theta-characteristic computations")
    p.add_argument("task", choices=("aronhold", "conic-pairs", "zeros"))
    p.add_argument("--dim", type=int, default=6)
    p.add_argument("--arf", type=int, default=0, choices=(0, 1))
    p.set_defaults(func=cmd_theta)

    p = add_parser("detrep", help="symmetric determinantal pipeline")
    p.add_argument("input", help="data file of NAME: polynomial lines")
    p.add_argument("--action", required=True,
                   choices=("quintic", "conic", "check", "quartic"))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_detrep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except detrep.DegenerateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
