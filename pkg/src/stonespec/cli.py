"""Command line interface.

Exit codes: 0 success / all checks pass, 1 check-suite failure (the
counterexample is printed), 2 input error (bad file, unknown object, bad
arguments).  All output ordering is canonical; ``--seed`` is echoed so runs
are reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

from . import checks, dsl
from . import family as fam
from . import measurable as mea
from .errors import InputError, InvalidFamilyError, UnsupportedStructureError
from .stone import stone_space


def _load(path: str) -> dsl.InstanceFile:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    result = dsl.parse(text)
    if not result.ok:
        lines = "\n".join(f"{path}:{d}" for d in result.diagnostics)
        raise InputError(f"parse failed:\n{lines}")
    return result.file


def _find(file: dsl.InstanceFile, name: str, kinds) -> dsl.BlockInfo:
    info = file.find(name)
    if info is None:
        raise InputError(f"no object named {name!r} in the file")
    if info.kind not in kinds:
        raise InputError(f"{name!r} is a {info.kind}, expected {' or '.join(kinds)}")
    return info


def _lattice_of(info: dsl.BlockInfo):
    if info.kind == "lattice":
        return info.obj
    return info.obj.lattice()


def cmd_validate(args, out) -> int:
    file = _load(args.file)
    if not file.blocks:
        raise InputError(f"{args.file}: nothing to validate (empty instance file)")
    bad = 0
    for b in file.blocks:
        if b.kind in ("lattice", "topology", "field"):
            lat = _lattice_of(b)
            report = lat.validate()
            status = "ok" if report.ok else "INVALID"
            print(f"{b.kind} {b.name}: {status}", file=out)
            if not report.ok:
                bad += 1
                for v in report.entries:
                    print(f"  {v.code}: {v.message}", file=out)
        else:
            print(f"{b.kind} {b.name}: ok", file=out)
    return 1 if bad else 0


def cmd_quasipoints(args, out) -> int:
    file = _load(args.file)
    info = _find(file, args.object, ("lattice", "field", "topology"))
    lat = _lattice_of(info)
    space = stone_space(lat)
    names = [space.point_name(k) for k in range(space.n_points)]
    if args.json:
        doc = {
            "points": {name: [lat.names[i] for i in _member_ids(space, k)]
                       for k, name in enumerate(names)},
            "base": {lat.names[a]: [names[k] for k in _member_ids_of_mask(space.base[a])]
                     for a in range(lat.n)},
        }
        print(json.dumps(doc, sort_keys=True), file=out)
        return 0
    for k, name in enumerate(names):
        print(f"{name}: " + ", ".join(
            lat.names[i] for i in _member_ids(space, k)), file=out)
    print(f"{space.n_points} quasipoints", file=out)
    print("base sets:", file=out)
    for a in range(lat.n):
        hits = ", ".join(names[k] for k in _member_ids_of_mask(space.base[a]))
        print(f"  Q_{lat.names[a]}: {hits if hits else '-'}", file=out)
    return 0


def _member_ids_of_mask(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _member_ids(space, k):
    return _member_ids_of_mask(space.points[k])


def cmd_observable(args, out) -> int:
    file = _load(args.file)
    info = _find(file, args.family, ("family", "family2"))
    if info.kind == "family":
        g = fam.observable_function(info.obj)
        table = g.as_dict()
        if args.json:
            print(json.dumps({k: str(v) for k, v in table.items()},
                             sort_keys=True), file=out)
        else:
            for k in range(g.space.n_points):
                print(f"{g.space.point_name(k)}: {g.values[k]}", file=out)
    else:
        g = fam.observable_function_complex(info.obj)
        space = g.re.space
        if args.json:
            print(json.dumps(
                {space.point_name(k): f"{g.re.values[k]}+{g.im.values[k]}i"
                 for k in range(space.n_points)}, sort_keys=True), file=out)
        else:
            for k in range(space.n_points):
                print(f"{space.point_name(k)}: {g.re.values[k]} + {g.im.values[k]}i",
                      file=out)
    return 0


def cmd_spectrum(args, out) -> int:
    file = _load(args.file)
    info = _find(file, args.family, ("family",))
    print(str(fam.spectrum_of(info.obj)), file=out)
    return 0


def cmd_decompose(args, out) -> int:
    file = _load(args.file)
    info = _find(file, args.family, ("family2",))
    e1, e2 = fam.decompose(info.obj)
    lat = e1.lattice
    print("first:  " + "; ".join(f"{t}: {lat.names[v]}"
                                 for t, v in zip(e1.thresholds, e1.values)), file=out)
    print("second: " + "; ".join(f"{t}: {lat.names[v]}"
                                 for t, v in zip(e2.thresholds, e2.values)), file=out)
    return 0


def cmd_quotient(args, out) -> int:
    file = _load(args.file)
    f_info = _find(file, args.field, ("field",))
    i_info = _find(file, args.ideal, ("ideal",))
    q = mea.quotient(f_info.obj, i_info.obj)
    print("classes: " + ", ".join(
        q.reduced.set_name(m) for m in q.reduced.members()), file=out)
    space = q.stone()
    for j, k in enumerate(q.embedded_point_indices()):
        orig = f_info.obj.stone()
        print(f"{space.point_name(j)} ~ {orig.point_name(k)}", file=out)
    return 0


def cmd_lift(args, out) -> int:
    file = _load(args.file)
    f_info = _find(file, args.field, ("field",))
    i_info = _find(file, args.ideal, ("ideal",))
    fm_info = _find(file, args.family, ("family",))
    field = f_info.obj
    q = mea.quotient(field, i_info.obj)
    lat = field.lattice()
    if fm_info.obj.lattice is not lat and fm_info.obj.lattice != lat:
        raise InputError("the family must live in the named field")
    reduced_lat = q.lattice()
    jumps = [(t, reduced_lat.payload.index(q.class_of(lat.payload[v])))
             for t, v in zip(fm_info.obj.thresholds, fm_info.obj.values)]
    quotient_family = fam.SpectralFamily(reduced_lat, jumps)
    phi = mea.lift_spectral_family(q, quotient_family)
    for p, v in zip(field.ground, phi.values):
        print(f"{p}: {v}", file=out)
    return 0


def cmd_integrate(args, out) -> int:
    file = _load(args.file)
    info = _find(file, args.family, ("family",))
    e = info.obj
    try:
        eps = Fraction(args.eps)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"malformed rational --eps {args.eps!r}") from None
    if eps <= 0:
        raise InputError("--eps must be positive")
    lo, hi = e.bounds()
    steps = int((hi - lo) / eps) + 1
    grid = [lo + k * eps for k in range(steps + 1)]
    s = fam.riemann_stieltjes(e, grid)
    g = fam.observable_function(e)
    err = max(abs(a - b) for a, b in zip(s.values, g.values))
    for k in range(s.space.n_points):
        print(f"{s.space.point_name(k)}: {s.values[k]}", file=out)
    print(f"max deviation from f_E: {err} (eps = {eps})", file=out)
    return 0


def cmd_check(args, out) -> int:
    print(f"seed: {args.seed}", file=out)
    print(f"max-size: {args.max_size}", file=out)
    names = sorted(checks.SUITES) if args.suite == "all" else [args.suite]
    total_fail = 0
    total_cases = 0
    for name in names:
        result = checks.run_suite(name, max_size=args.max_size, seed=args.seed)
        for line in result.lines():
            print(line, file=out)
        total_fail += len(result.failures)
        total_cases += result.cases
    print(f"TOTAL: {total_fail} failures / {total_cases} cases", file=out)
    return 1 if total_fail else 0


def cmd_emit(args, out) -> int:
    file = _load(args.file)
    info = _find(file, args.object, dsl.KINDS)
    if args.format == "json":
        print(json.dumps(dsl.emit_json(info, file), sort_keys=True, indent=2),
              file=out)
    else:
        print(dsl.emit_dot(info), file=out)
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stonespec",
        description="Stone spectra, spectral families and observable functions "
                    "for finite lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="parse a file and validate every block")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("quasipoints", help="table of the Stone spectrum of an object")
    sp.add_argument("file")
    sp.add_argument("object")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_quasipoints)

    sp = sub.add_parser("observable", help="f_E table of a family")
    sp.add_argument("file")
    sp.add_argument("family")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_observable)

    sp = sub.add_parser("spectrum", help="spectrum and resolvent of a family")
    sp.add_argument("file")
    sp.add_argument("family")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("decompose", help="split a two-parameter family")
    sp.add_argument("file")
    sp.add_argument("family")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("quotient", help="quotient a field by an ideal")
    sp.add_argument("file")
    sp.add_argument("field")
    sp.add_argument("ideal")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("lift", help="lift a family through a quotient")
    sp.add_argument("file")
    sp.add_argument("field")
    sp.add_argument("ideal")
    sp.add_argument("family")
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("integrate", help="step-sum integration along an eps grid")
    sp.add_argument("file")
    sp.add_argument("family")
    sp.add_argument("--eps", required=True)
    sp.set_defaults(func=cmd_integrate)

    sp = sub.add_parser("check", help="run a theorem-check suite (or 'all')")
    sp.add_argument("suite")
    sp.add_argument("--max-size", type=int, default=4, dest="max_size")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("emit", help="emit an object as JSON or DOT")
    sp.add_argument("format", choices=("json", "dot"))
    sp.add_argument("file")
    sp.add_argument("object")
    sp.set_defaults(func=cmd_emit)

    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args, out)
    except (InputError, InvalidFamilyError, UnsupportedStructureError) as e:
        print(f"error: {e}", file=err)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
