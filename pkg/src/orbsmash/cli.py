"""Command line interface over bundle files.

Every subcommand reads one bundle, runs a battery of checks, and prints a
JSON report to stdout: the command name, a digest of the input, the checks
sorted by name, and the overall verdict.  Exit status 0 means every check
passed, 1 means at least one failed, 2 means the input could not be used at
all (unreadable file, malformed bundle, unknown names).  With --no-timing
the report depends only on the input bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .bundle import (
    Bundle,
    BundleFormatError,
    BuiltBundle,
    dumps_bundle,
    loads_bundle,
    make_bundle,
)
from .covering import is_covering, is_precovering, validate_invariant
from .duality import TheoremFixtures, verify_main_theorem
from .gcat import EquivMorphism, validate_action, validate_equiv_morphism, validate_equivariant
from .graded import DegMorphism, validate_deg_functor, validate_deg_morphism, validate_grading
from .lincat import StructureError, validate_category, validate_functor
from .orbit import FactorizationError, factorize_through_P, orbit_category
from .report import VerificationReport
from .smash import smash_product, verify_free_action


class InputError(Exception):
    """The request cannot be carried out against this input."""


def _read_input(args) -> tuple[Bundle, str]:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    digest = "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()
    bundle = loads_bundle(text)
    if args.ring is not None and bundle.ring.label() != args.ring:
        raise InputError(f"bundle ring is {bundle.ring.label()}, expected {args.ring}")
    return bundle, digest


def _selected(names, available, what: str) -> list:
    if not names:
        return list(available)
    for n in names:
        if n not in available:
            raise InputError(f"unknown {what} {n!r}")
    return list(names)


def _gcat_names(built: BuiltBundle) -> list:
    return [n for n, e in built.categories.items() if e.gcat is not None]


def _graded_names(built: BuiltBundle) -> list:
    return [n for n, e in built.categories.items() if e.graded is not None]


def _invariant_names(built: BuiltBundle) -> list:
    return [n for n, e in built.functors.items() if e.kind == "invariant"]


def cmd_validate(args, built: BuiltBundle, rep: VerificationReport):
    if args.check:
        known = set(built.categories) | set(built.functors) | set(built.nat_trans)
        for n in args.check:
            if n not in known:
                raise InputError(f"unknown name {n!r}")
    for name, entry in built.categories.items():
        if args.check and name not in args.check:
            continue
        rep.extend(validate_category(entry.base), prefix=f"category.{name}.")
        if entry.gcat is not None:
            rep.extend(validate_action(entry.gcat), prefix=f"category.{name}.action.")
        if entry.graded is not None:
            rep.extend(validate_grading(entry.graded), prefix=f"category.{name}.grading.")
    for name, entry in built.functors.items():
        if args.check and name not in args.check:
            continue
        prefix = f"functor.{name}."
        if entry.kind == "plain":
            rep.extend(validate_functor(entry.value), prefix=prefix)
        elif entry.kind == "equivariant":
            rep.extend(validate_functor(entry.value.e), prefix=prefix)
            rep.extend(validate_equivariant(entry.value), prefix=prefix)
        elif entry.kind == "invariant":
            rep.extend(validate_functor(entry.value.f), prefix=prefix)
            rep.extend(validate_invariant(entry.value), prefix=prefix)
        else:
            rep.extend(validate_functor(entry.value.h), prefix=prefix)
            rep.extend(validate_deg_functor(entry.value), prefix=prefix)
    for name, entry in built.nat_trans.items():
        if args.check and name not in args.check:
            continue
        prefix = f"nat_trans.{name}."
        src = built.functors.get(entry.src)
        tgt = built.functors.get(entry.tgt)
        rep.add(f"nat_trans.{name}.natural", True)
        if src and tgt and src.kind == "equivariant" and tgt.kind == "equivariant":
            sub = validate_equiv_morphism(EquivMorphism(entry.nt), src.value, tgt.value)
            rep.extend(sub, prefix=prefix)
        elif src and tgt and src.kind == "degree" and tgt.kind == "degree":
            sub = validate_deg_morphism(DegMorphism(entry.nt), src.value, tgt.value)
            rep.extend(sub, prefix=prefix)
    return None


def cmd_orbit(args, built: BuiltBundle, rep: VerificationReport):
    names = _selected(args.check, _gcat_names(built), "category with an action")
    if not names:
        raise InputError("no category with a group action in the bundle")
    out_cats = {}
    out_fns = {}
    for name in names:
        entry = built.categories[name]
        sub = validate_action(entry.gcat)
        rep.add(f"orbit.{name}.action.valid", sub.passed,
                detail="" if sub.passed else sub.failures()[0].name)
        if not sub.passed:
            continue
        try:
            orb = orbit_category(entry.gcat)
        except (StructureError, ValueError) as exc:
            rep.add(f"orbit.{name}.constructed", False, detail=str(exc))
            continue
        rep.add(f"orbit.{name}.constructed", True)
        rep.add(f"orbit.{name}.p.invariant", validate_invariant(orb.p).passed)
        out_cats[name] = entry
        out_cats[f"{name}/G"] = orb.carrier
        out_fns[f"P_{name}"] = ("invariant", name, f"{name}/G", orb.p)
    if args.output and out_cats:
        return make_bundle(built.ring, built.group, out_cats, functors=out_fns)
    return None


def cmd_smash(args, built: BuiltBundle, rep: VerificationReport):
    names = _selected(args.check, _graded_names(built), "graded category")
    if not names:
        raise InputError("no graded category in the bundle")
    out_cats = {}
    out_fns = {}
    for name in names:
        entry = built.categories[name]
        sub = validate_grading(entry.graded)
        rep.add(f"smash.{name}.grading.valid", sub.passed,
                detail="" if sub.passed else sub.failures()[0].name)
        if not sub.passed:
            continue
        try:
            sm = smash_product(entry.graded)
        except (StructureError, ValueError) as exc:
            rep.add(f"smash.{name}.constructed", False, detail=str(exc))
            continue
        rep.add(f"smash.{name}.constructed", True)
        rep.add(f"smash.{name}.action.free", verify_free_action(sm).passed)
        rep.add(f"smash.{name}.q.invariant", validate_invariant(sm.q).passed)
        out_cats[name] = entry
        out_cats[f"{name}#G"] = sm.carrier
        out_fns[f"Q_{name}"] = ("invariant", f"{name}#G", name, sm.q)
    if args.output and out_cats:
        return make_bundle(built.ring, built.group, out_cats, functors=out_fns)
    return None


def cmd_check_covering(args, built: BuiltBundle, rep: VerificationReport):
    names = _selected(args.check, _invariant_names(built), "invariant functor")
    if not names:
        raise InputError("no invariant functor in the bundle")
    for name in names:
        fn = built.functors[name].value
        rep.extend(validate_invariant(fn), prefix=f"functor.{name}.")
        rep.extend(is_precovering(fn), prefix=f"functor.{name}.")
        rep.extend(is_covering(fn), prefix=f"functor.{name}.")
    return None


def cmd_factorize(args, built: BuiltBundle, rep: VerificationReport):
    names = _selected(args.check, _invariant_names(built), "invariant functor")
    if not names:
        raise InputError("no invariant functor in the bundle")
    out_cats = {}
    out_fns = {}
    for name in names:
        entry = built.functors[name]
        fn = entry.value
        try:
            orb = orbit_category(fn.dom)
            induced = factorize_through_P(orb, fn)
        except (FactorizationError, StructureError, ArithmeticError) as exc:
            rep.add(f"factorize.{name}.exists", False, detail=str(exc))
            continue
        rep.add(f"factorize.{name}.exists", True)
        out_cats[entry.dom] = built.categories[entry.dom]
        out_cats[f"{entry.dom}/G"] = orb.carrier
        out_cats[entry.cod] = built.categories[entry.cod]
        out_fns[f"H_{name}"] = ("plain", f"{entry.dom}/G", entry.cod, induced)
    if args.output and out_cats:
        return make_bundle(built.ring, built.group, out_cats, functors=out_fns)
    return None


def cmd_verify_theorem(args, built: BuiltBundle, rep: VerificationReport):
    fx = TheoremFixtures()
    fx.gcats = [(n, built.categories[n].gcat) for n in _gcat_names(built)]
    fx.gradeds = [(n, built.categories[n].graded) for n in _graded_names(built)]
    fx.equiv_cells = [
        (n, e.value) for n, e in built.functors.items() if e.kind == "equivariant"
    ]
    fx.deg_cells = [
        (n, e.value) for n, e in built.functors.items() if e.kind == "degree"
    ]
    for n, entry in built.nat_trans.items():
        src = built.functors.get(entry.src)
        tgt = built.functors.get(entry.tgt)
        if src is None or tgt is None:
            continue
        if src.kind == "equivariant" and tgt.kind == "equivariant":
            fx.equiv_2cells.append((n, EquivMorphism(entry.nt), src.value, tgt.value))
        elif src.kind == "degree" and tgt.kind == "degree":
            fx.deg_2cells.append((n, DegMorphism(entry.nt), src.value, tgt.value))
    if not (fx.gcats or fx.gradeds):
        raise InputError("nothing to verify: no action and no grading in the bundle")
    theorem = verify_main_theorem(fx)
    for name, chk in theorem.all_checks():
        rep.add(name, chk.ok, locus=chk.locus, detail=chk.detail)
    return None


def cmd_roundtrip(args, built: BuiltBundle, rep: VerificationReport):
    cats = dict(built.categories)
    fns = {n: (e.kind, e.dom, e.cod, e.value) for n, e in built.functors.items()}
    nts = {n: (e.src, e.tgt, e.nt) for n, e in built.nat_trans.items()}
    first = make_bundle(built.ring, built.group, cats, functors=fns, nat_trans=nts)
    text1 = dumps_bundle(first)
    reparsed = loads_bundle(text1)
    rebuilt, load_rep = reparsed.build()
    rep.add("roundtrip.reload", load_rep.passed,
            detail="" if load_rep.passed else load_rep.failures()[0].detail)
    cats2 = dict(rebuilt.categories)
    fns2 = {n: (e.kind, e.dom, e.cod, e.value) for n, e in rebuilt.functors.items()}
    nts2 = {n: (e.src, e.tgt, e.nt) for n, e in rebuilt.nat_trans.items()}
    text2 = dumps_bundle(make_bundle(rebuilt.ring, rebuilt.group, cats2, fns2, nts2))
    rep.add("roundtrip.stable", text1 == text2)
    return first


_HANDLERS = {
    "validate": cmd_validate,
    "orbit": cmd_orbit,
    "smash": cmd_smash,
    "check-covering": cmd_check_covering,
    "factorize": cmd_factorize,
    "verify-theorem": cmd_verify_theorem,
    "roundtrip": cmd_roundtrip,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbsmash",
        description="construct orbit categories and smash products and verify their duality",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "validate": "check every structure in the bundle against its axioms",
        "orbit": "build orbit categories of the acted categories",
        "smash": "build smash products of the graded categories",
        "check-covering": "test invariant functors for the covering property",
        "factorize": "factor invariant functors through the orbit projection",
        "verify-theorem": "run the full duality battery on the bundle",
        "roundtrip": "re-serialize the bundle and check stability",
    }
    for name, desc in descriptions.items():
        p = sub.add_parser(name, help=desc)
        p.add_argument("--input", required=True, help="bundle file to read")
        p.add_argument("--output", help="write constructed structures to this bundle file")
        p.add_argument(
            "--check", action="append", default=[],
            help="restrict to this named category or functor (repeatable)",
        )
        p.add_argument("--no-timing", action="store_true", help="omit wall_time_ms")
        p.add_argument("--ring", help="require this coefficient ring (Q or Fp:p)")
    return parser


def _error_report(command: str, message: str) -> str:
    return json.dumps({"command": command, "error": message}, indent=2)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.monotonic()
    try:
        bundle, digest = _read_input(args)
    except (InputError, BundleFormatError) as exc:
        print(_error_report(args.command, str(exc)))
        return 2

    built, load_rep = bundle.build()
    rep = VerificationReport(subject=args.command)
    rep.extend(load_rep)
    output_data = None
    try:
        output_data = _HANDLERS[args.command](args, built, rep)
    except InputError as exc:
        print(_error_report(args.command, str(exc)))
        return 2

    checks = sorted(
        (c.to_dict() for c in rep.checks), key=lambda c: (c["name"], c["locus"])
    )
    report = {
        "command": args.command,
        "input_digest": digest,
        "checks": checks,
        "passed": rep.passed,
    }
    if not args.no_timing:
        report["wall_time_ms"] = int((time.monotonic() - started) * 1000)
    if output_data is not None and args.output:
        Path(args.output).write_text(dumps_bundle(output_data))
    print(json.dumps(report, indent=2))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
