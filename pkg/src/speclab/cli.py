"""Command-line interface: ``speclab <subcommand> [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import builtins, rankfn, spectra, tube, verify
from .catmodel import (
    LOCALLY_FINITE, Model, declared_thick_hull, formal, generators, read_model_file, save_model,
    thick_closure,
)
from .errors import SpeclabError, UsageError, VerificationFailure


# -- model selection ---------------------------------------------------------


def _model(args) -> Model:
    if bool(args.model) == bool(args.model_file):
        raise UsageError("give exactly one of --model NAME or --model-file PATH")
    if args.model_file:
        return read_model_file(args.model_file)
    lambdas = args.lambdas.split(",") if args.lambdas else None
    return builtins.builtin_model(args.model, n=args.n, p=args.p, nmax=args.nmax, jmax=args.jmax,
                                  lambdas=lambdas, bound=args.bound, K=args.K, L_max=args.L)


def _thick(model: Model, spec: str) -> int:
    gens = generators(model, spec)
    if model.mode == LOCALLY_FINITE:
        return thick_closure(gens, model)
    if gens == 0:
        return 0
    return declared_thick_hull(gens, model)


def _thick_name(model: Model, members: int) -> str:
    for e in model.lattice or ():
        if e.members == members:
            return e.name
    return spectra.thick_label(members, model)


# -- emitters ----------------------------------------------------------------


def _emit_json(doc, out) -> None:
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _emit_space(space, model, args, title, out) -> None:
    if args.format == "dot":
        out.write(spectra.space_to_dot(space, title))
    elif args.format == "doc":
        _emit_json(spectra.space_doc(space, model), out)
    else:
        kind = "discrete" if space.is_discrete() else "indiscrete" if space.is_indiscrete() else "mixed"
        out.write(f"{title}: {space.size} points, {kind}, T0={space.is_t0()}\n")
        for i, name in enumerate(space.points):
            out.write(f"  {name}: closure {{{', '.join(space.subset_names(space.closure(i)))}}}\n")


def _emit_lattice(lat, model, args, title, out) -> None:
    if args.format == "dot":
        out.write(spectra.lattice_to_dot(lat, title))
    elif args.format == "doc":
        _emit_json(spectra.lattice_doc(lat, model), out)
    else:
        out.write(f"{title}: {lat.size} elements\n")
        for i, name in enumerate(lat.names):
            covers = ", ".join(lat.names[j] for j in lat.lower[i]) or "-"
            out.write(f"  {i} {name}  covers: {covers}\n")


def _emit_record(record: dict, args, out) -> None:
    if args.format == "dot":
        raise UsageError("dot output is only available for spaces and lattices")
    if args.format == "doc":
        _emit_json(record, out)
        return
    for key, value in record.items():
        if isinstance(value, list):
            value = ", ".join(str(v) for v in value) or "-"
        out.write(f"{key}: {value}\n")


# -- subcommands -------------------------------------------------------------


def cmd_model(args, out) -> int:
    model = _model(args)
    if args.format == "doc":
        _emit_json(save_model(model), out)
        return 0
    if args.format == "dot":
        raise UsageError("dot output is only available for spaces and lattices")
    out.write(f"model {model.name} ({model.mode}): {model.size} classes\n")
    for c in model.classes:
        out.write(f"  {c.id} {c.name} period={c.shift_period}\n")
    for p in model.primes or ():
        out.write(f"  prime {p.name}: {', '.join(model.names(p.members)) or '-'}\n")
    if model.lattice is not None:
        out.write(f"  declared lattice: {len(model.lattice)} elements\n")
    out.write(f"  triangles: {len(model.triangles)}\n")
    return 0


def cmd_sspec(args, out) -> int:
    model = _model(args)
    _emit_space(spectra.shift_spectrum(model), model, args, f"sspec({model.name})", out)
    return 0


def cmd_shspec(args, out) -> int:
    model = _model(args)
    _emit_space(spectra.shift_homological_spectrum(model), model, args, f"shspec({model.name})", out)
    return 0


def cmd_lattice(args, out) -> int:
    model = _model(args)
    _emit_lattice(spectra.lattice_of(model), model, args, f"thick({model.name})", out)
    return 0


def cmd_radical(args, out) -> int:
    model = _model(args)
    members = _thick(model, args.thick)
    rad = spectra.radical(members, spectra.shift_spectrum(model))
    _emit_record({
        "thick": _thick_name(model, members),
        "radical": _thick_name(model, rad),
        "members": model.names(rad),
        "is_radical": rad == members,
    }, args, out)
    return 0


def _point_mask(space, spec: str) -> int:
    if spec.strip() in ("", "0"):
        return 0
    mask = 0
    for name in (p.strip() for p in spec.split(";")):
        if name not in space.points:
            raise UsageError(f"unknown point {name!r}; points are {'; '.join(space.points)}")
        mask |= 1 << space.points.index(name)
    return mask


def cmd_psi(args, out) -> int:
    model = _model(args)
    space = spectra.shift_spectrum(model)
    u = _point_mask(space, args.points)
    rec = {"points": space.subset_names(u)}
    if space.closure_of(u) != u:
        rec["note"] = "subset is not specialization closed"
    res = spectra.psi(u, space)
    rec.update(thick=_thick_name(model, res), members=model.names(res))
    _emit_record(rec, args, out)
    return 0


def cmd_support(args, out) -> int:
    model = _model(args)
    space = spectra.shift_spectrum(model)
    obj = formal(model, args.object)
    _emit_record({"object": args.object, "support": space.subset_names(spectra.support(obj, space))}, args, out)
    return 0


def cmd_matsui(args, out) -> int:
    model = _model(args)
    lat = spectra.lattice_of(model)
    _emit_space(spectra.matsui_spectrum(lat, model), model, args, f"Spc_M({model.name})", out)
    return 0


def cmd_fspcnt(args, out) -> int:
    model = _model(args)
    lat = spectra.lattice_of(model)
    space = spectra.fspcnt_space(lat)
    if args.format == "text":
        closed = space.closed_sets()
        out.write(f"fspcnt({model.name}): {space.size} points, {len(closed)} closed sets\n")
        for i, name in enumerate(space.points):
            out.write(f"  {name}: closure {{{', '.join(space.subset_names(space.closure(i)))}}}\n")
        return 0
    _emit_space(space, model, args, f"fspcnt({model.name})", out)
    return 0


def _theta(args, model):
    obj = formal(model, args.object)
    if args.lower:
        return rankfn.theta_lower(obj, model)
    return rankfn.theta_upper(obj, model)


def cmd_rank(args, out) -> int:
    model = _model(args)
    rho = _theta(args, model)
    rec = {"rank": rho.label}
    if args.rank_cmd == "theta":
        rec["values"] = [f"{k}={v}" for k, v in rho.as_dict(model).items()]
    elif args.rank_cmd == "kernel":
        k = rankfn.kernel(rho, model)
        rec.update(kernel=_thick_name(model, k), members=model.names(k),
                   radical=spectra.radical(k, spectra.shift_spectrum(model)) == k)
    elif args.rank_cmd == "decompose":
        cands = rankfn.irreducible_candidates(model)
        dec = rankfn.decompose(rho, model, cands)
        if not dec.ok:
            rec["decomposition"] = "none"
        else:
            rec["decomposition"] = [f"{n}*{cands[j].label}" for j, n in sorted(dec.multiplicities.items())]
    else:
        report = rankfn.check_axioms(rho, model.triangles, model)
        rec.update(triangles=report.checked, ok=report.ok, violations=report.violations)
        _emit_record(rec, args, out)
        return 0 if report.ok else VerificationFailure.exit_code
    _emit_record(rec, args, out)
    return 0


def _arcs(n: int, spec: str) -> tube.ArcCollection:
    pairs = []
    for part in (p.strip() for p in spec.split(",") if p.strip()):
        a, sep, b = part.partition("-")
        if not sep:
            raise UsageError(f"arc {part!r} must look like start-end")
        try:
            pairs.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"arc {part!r} must look like start-end") from None
    c = tube.ArcCollection.of(n, pairs)
    if not tube.is_noncrossing(c):
        raise UsageError(f"arcs {c} cross")
    return c


def cmd_tube(args, out) -> int:
    n = 3 if args.n is None else args.n
    if n < 1:
        raise UsageError("tube rank must be positive")
    L_max = tube.default_lmax(n) if args.L is None else args.L
    if args.tube_cmd == "verify":
        return _report(verify.verify_tube(n, L_max), args, out)
    if args.tube_cmd == "enumerate":
        cols = tube.enumerate_noncrossing(n)
        rec = {"n": n, "count": len(cols), "collections": [str(c) for c in cols]}
        if args.format == "doc":
            rec["collections"] = [c.pairs() for c in cols]
        _emit_record(rec, args, out)
        return 0
    c = _arcs(n, args.arcs)
    if args.tube_cmd == "wide":
        w = tube.wide_from_arcs(c, L_max)
        rec = {"arcs": str(c), "L_max": L_max, "size": len(w),
               "objects": [str(x) for x in sorted(w, key=lambda x: (x.length, x.socle))]}
    else:
        pc = tube.perp_construction(c, L_max)
        rec = {"arcs": str(c), "exceptional": pc.exceptional, "Z1": [str(x) for x in pc.z1],
               "Z2": [str(x) for x in pc.z2]}
    _emit_record(rec, args, out)
    return 0


def _suite(name: str):
    if name == "kronecker":
        return verify.verify_kronecker()
    if name == "table1":
        return verify.verify_table1()
    if name == "dinfinity":
        return verify.verify_dinfinity()
    return verify.verify_tube(int(name[4:]))


def _report(rows, args, out) -> int:
    if args.format == "dot":
        raise UsageError("dot output is only available for spaces and lattices")
    if args.format == "doc":
        _emit_json({"passed": verify.all_passed(rows), "rows": verify.rows_doc(rows)}, out)
    else:
        for r in rows:
            out.write(r.line() + "\n")
        out.write(f"{sum(r.passed for r in rows)}/{len(rows)} passed\n")
    return 0 if verify.all_passed(rows) else VerificationFailure.exit_code


def cmd_verify(args, out) -> int:
    if args.suite == "all":
        names = ["kronecker", "table1", "dinfinity", "tube2", "tube3", "tube4"]
    else:
        names = [args.suite]
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            parts = list(pool.map(_suite, names))
    else:
        parts = [_suite(nm) for nm in names]
    return _report([r for part in parts for r in part], args, out)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", help="built-in model name")
    common.add_argument("--model-file", help="JSON model document")
    common.add_argument("--n", type=int, help="rank for An / tube_n")
    common.add_argument("--p", type=int, help="prime for stmod_Cp")
    common.add_argument("--nmax", type=int, help="Kronecker preprojective/preinjective bound")
    common.add_argument("--jmax", type=int, help="Kronecker regular length bound")
    common.add_argument("--lambdas", help="comma separated Kronecker parameters (inf allowed)")
    common.add_argument("--bound", type=int, help="prime bound for specZ")
    common.add_argument("--K", type=int, help="truncation for A_infinity / D_infinity")
    common.add_argument("--L", type=int, help="maximal regular length for tubes")
    common.add_argument("--format", choices=("text", "doc", "dot"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify all")

    parser = argparse.ArgumentParser(prog="speclab", description="Shift spectra of finite categorical models.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    for name, fn, doc in (
        ("model", cmd_model, "describe a model"),
        ("sspec", cmd_sspec, "shift spectrum"),
        ("shspec", cmd_shspec, "shift-homological spectrum"),
        ("lattice", cmd_lattice, "lattice of thick subcategories"),
        ("matsui", cmd_matsui, "Matsui spectrum of the thick lattice"),
        ("fspcnt", cmd_fspcnt, "lattice elements with the up-set topology"),
    ):
        p = sub.add_parser(name, parents=[common], help=doc)
        p.set_defaults(func=fn)

    p = sub.add_parser("radical", parents=[common], help="radical of a thick subcategory")
    p.add_argument("--thick", required=True, help="generators, e.g. 'S1,P2' or 0")
    p.set_defaults(func=cmd_radical)

    p = sub.add_parser("psi", parents=[common], help="thick subcategory of a point set")
    p.add_argument("--points", required=True, help="semicolon separated point names, or 0")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("support", parents=[common], help="support of an object")
    p.add_argument("--object", required=True, help="formal object, e.g. 'S1+P2[1]'")
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("rank", help="rank functions")
    rsub = p.add_subparsers(dest="rank_cmd", required=True)
    for name in ("theta", "kernel", "decompose", "check"):
        q = rsub.add_parser(name, parents=[common])
        q.add_argument("--object", required=True, help="formal object A")
        q.add_argument("--lower", action="store_true", help="use X -> dim Hom(A, X) instead")
        q.set_defaults(func=cmd_rank)

    p = sub.add_parser("tube", help="tubes and arc collections")
    tsub = p.add_subparsers(dest="tube_cmd", required=True)
    for name in ("enumerate", "wide", "perp", "verify"):
        q = tsub.add_parser(name, parents=[common])
        if name in ("wide", "perp"):
            q.add_argument("--arcs", required=True, help="comma separated start-end pairs, e.g. '0-1,2-2'")
        q.set_defaults(func=cmd_tube)

    p = sub.add_parser("verify", help="verification suites")
    p.add_argument("suite", choices=("kronecker", "table1", "dinfinity", "all"))
    p.add_argument("--format", choices=("text", "doc", "dot"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else UsageError.exit_code
    try:
        return args.func(args, out)
    except SpeclabError as exc:
        print(f"speclab: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
