"""JSON bundles: one file carrying a group, categories, functors, 2-cells.

A bundle is the exchange format of the command line tools.  Parsing is a pure
schema check and raises BundleFormatError with the offending field path;
whether the parsed data satisfies the mathematical axioms is decided later,
by build() and by the validators, so that a well-formed file describing a
broken structure is reported as a failed check rather than a parse error.

Scalars are strings: "3", "-1/2" over Q, a decimal residue over a prime
field.  Composite keys join object ids with "|", which is why ids must not
contain it.  Composition tables are sparse: entry [g][f] lists the nonzero
[index, coeff] pairs of the composite g o f over the basis of hom(x, z).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .covering import InvFunctor
from .exactlin import Mat, RingSpec, ShapeError
from .gcat import EquivFunctor, FinGroup, GCategory, validate_group
from .graded import DegFunctor, GradedCat
from .lincat import (
    BoundaryError,
    LinCat,
    LinFunctor,
    Morphism,
    NatTrans,
    NaturalityError,
    StructureError,
    compose_functors,
)
from .report import VerificationReport

FORMAT = "gcat-bundle/1"

_KINDS = ("plain", "equivariant", "invariant", "degree")


class BundleFormatError(ValueError):
    """A bundle file violates the schema; `path` names the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _fail(path: str, message: str):
    raise BundleFormatError(path, message)


def _expect(value, typ, path: str, what: str):
    if not isinstance(value, typ):
        _fail(path, f"expected {what}, got {type(value).__name__}")
    return value


def _expect_name(value, path: str) -> str:
    _expect(value, str, path, "a string")
    if not value or "|" in value or "\n" in value:
        _fail(path, "names are nonempty strings without '|'")
    return value


def _split_key(key: str, parts: int, path: str) -> tuple:
    _expect(key, str, path, "a string key")
    pieces = key.split("|")
    if len(pieces) != parts or any(not p for p in pieces):
        _fail(path, f"expected {parts} ids joined by '|'")
    return tuple(pieces)


def _expect_scalar(ring: RingSpec, value, path: str) -> str:
    _expect(value, str, path, "a scalar string")
    try:
        ring.from_str(value)
    except (ValueError, ArithmeticError):
        _fail(path, f"unreadable scalar {value!r}")
    return value


def _scalar_list(ring, value, path) -> list:
    _expect(value, list, path, "a list of scalars")
    return [_expect_scalar(ring, v, f"{path}[{i}]") for i, v in enumerate(value)]


def _scalar_matrix(ring, value, path) -> list:
    _expect(value, list, path, "a list of rows")
    return [_scalar_list(ring, row, f"{path}[{i}]") for i, row in enumerate(value)]


@dataclass
class RawCategory:
    objects: list
    homs: dict
    identity: dict
    comp: dict
    action: list | None
    grading: dict | None


@dataclass
class RawFunctor:
    kind: str
    dom: str
    cod: str
    objects: dict
    mats: dict
    adjuster: object


@dataclass
class RawNatTrans:
    src: str
    tgt: str
    components: dict


@dataclass
class Bundle:
    """A schema-checked bundle, not yet interpreted mathematically."""

    ring: RingSpec
    group: FinGroup
    categories: dict
    functors: dict
    nat_trans: dict

    def build(self) -> tuple["BuiltBundle", VerificationReport]:
        return build_bundle(self)


def parse_bundle(data) -> Bundle:
    """Schema check; raises BundleFormatError, never a math error."""
    _expect(data, dict, "$", "a JSON object")
    if data.get("format") != FORMAT:
        _fail("format", f"expected {FORMAT!r}, got {data.get('format')!r}")
    try:
        ring = RingSpec.from_label(_expect(data.get("ring"), str, "ring", "a ring label"))
    except (ShapeError, ValueError):
        _fail("ring", f"unknown ring label {data.get('ring')!r}")

    grp = _expect(data.get("group"), dict, "group", "an object")
    order = _expect(grp.get("order"), int, "group.order", "an integer")
    mul = _expect(grp.get("mul"), list, "group.mul", "a table")
    if order < 1 or len(mul) != order:
        _fail("group.mul", f"table must have {order} rows")
    for i, row in enumerate(mul):
        _expect(row, list, f"group.mul[{i}]", "a row")
        if len(row) != order or any(not isinstance(v, int) for v in row):
            _fail(f"group.mul[{i}]", f"expected {order} integers")
    try:
        group = FinGroup(tuple(tuple(r) for r in mul))
    except StructureError as exc:
        _fail("group.mul", str(exc))
    if not validate_group(group).passed:
        _fail("group.mul", "table does not satisfy the group axioms")

    cats = {}
    raw_cats = _expect(data.get("categories"), dict, "categories", "an object")
    for name, entry in raw_cats.items():
        _expect_name(name, "categories.<name>")
        cats[name] = _parse_category(ring, group, entry, f"categories.{name}")

    functors = {}
    raw_fns = _expect(data.get("functors", {}), dict, "functors", "an object")
    for name, entry in raw_fns.items():
        _expect_name(name, "functors.<name>")
        functors[name] = _parse_functor(ring, group, cats, entry, f"functors.{name}")

    nts = {}
    raw_nts = _expect(data.get("nat_trans", {}), dict, "nat_trans", "an object")
    for name, entry in raw_nts.items():
        _expect_name(name, "nat_trans.<name>")
        nts[name] = _parse_nat_trans(ring, functors, entry, f"nat_trans.{name}")

    return Bundle(ring=ring, group=group, categories=cats, functors=functors, nat_trans=nts)


def _parse_category(ring, group, entry, path) -> RawCategory:
    _expect(entry, dict, path, "an object")
    objects = _expect(entry.get("objects"), list, f"{path}.objects", "a list")
    objects = [_expect_name(x, f"{path}.objects[{i}]") for i, x in enumerate(objects)]

    homs = {}
    for key, labels in _expect(entry.get("homs", {}), dict, f"{path}.homs", "an object").items():
        pair = _split_key(key, 2, f"{path}.homs.{key}")
        _expect(labels, list, f"{path}.homs.{key}", "a list of labels")
        homs[pair] = [
            _expect_name(l, f"{path}.homs.{key}[{i}]") for i, l in enumerate(labels)
        ]

    identity = {}
    for x, vec in _expect(entry.get("identity"), dict, f"{path}.identity", "an object").items():
        identity[x] = _scalar_list(ring, vec, f"{path}.identity.{x}")

    comp = {}
    for key, table in _expect(entry.get("comp", {}), dict, f"{path}.comp", "an object").items():
        triple = _split_key(key, 3, f"{path}.comp.{key}")
        tpath = f"{path}.comp.{key}"
        _expect(table, list, tpath, "a table")
        parsed = []
        for j, row in enumerate(table):
            _expect(row, list, f"{tpath}[{j}]", "a row")
            prow = []
            for i, cell in enumerate(row):
                _expect(cell, list, f"{tpath}[{j}][{i}]", "a list of [index, coeff] pairs")
                pcell = []
                for t, pairv in enumerate(cell):
                    ppath = f"{tpath}[{j}][{i}][{t}]"
                    _expect(pairv, list, ppath, "an [index, coeff] pair")
                    if len(pairv) != 2 or not isinstance(pairv[0], int):
                        _fail(ppath, "expected [index, coeff]")
                    pcell.append((pairv[0], _expect_scalar(ring, pairv[1], ppath)))
                prow.append(pcell)
            parsed.append(prow)
        comp[triple] = parsed

    action = None
    if "action" in entry:
        raw = _expect(entry["action"], list, f"{path}.action", "a list")
        if len(raw) != group.order:
            _fail(f"{path}.action", f"expected {group.order} entries")
        action = []
        for a, one in enumerate(raw):
            apath = f"{path}.action[{a}]"
            _expect(one, dict, apath, "an object")
            omap = _expect(one.get("objects"), dict, f"{apath}.objects", "an object")
            omap = {x: _expect_name(y, f"{apath}.objects.{x}") for x, y in omap.items()}
            mats = {}
            for key, rows in _expect(one.get("mats", {}), dict, f"{apath}.mats", "an object").items():
                pair = _split_key(key, 2, f"{apath}.mats.{key}")
                mats[pair] = _scalar_matrix(ring, rows, f"{apath}.mats.{key}")
            action.append({"objects": omap, "mats": mats})

    grading = None
    if "grading" in entry:
        grading = {}
        raw = _expect(entry["grading"], dict, f"{path}.grading", "an object")
        for key, degs in raw.items():
            pair = _split_key(key, 2, f"{path}.grading.{key}")
            _expect(degs, list, f"{path}.grading.{key}", "a list of degrees")
            for i, d in enumerate(degs):
                if not isinstance(d, int) or not 0 <= d < group.order:
                    _fail(f"{path}.grading.{key}[{i}]", "degree out of range")
            grading[pair] = list(degs)

    return RawCategory(
        objects=objects, homs=homs, identity=identity, comp=comp,
        action=action, grading=grading,
    )


def _parse_functor(ring, group, cats, entry, path) -> RawFunctor:
    _expect(entry, dict, path, "an object")
    kind = entry.get("kind")
    if kind not in _KINDS:
        _fail(f"{path}.kind", f"expected one of {_KINDS}, got {kind!r}")
    dom = entry.get("dom")
    cod = entry.get("cod")
    for fieldname, value in (("dom", dom), ("cod", cod)):
        if value not in cats:
            _fail(f"{path}.{fieldname}", f"unknown category {value!r}")
    omap = _expect(entry.get("objects"), dict, f"{path}.objects", "an object")
    omap = {x: _expect_name(y, f"{path}.objects.{x}") for x, y in omap.items()}
    mats = {}
    for key, rows in _expect(entry.get("mats", {}), dict, f"{path}.mats", "an object").items():
        pair = _split_key(key, 2, f"{path}.mats.{key}")
        mats[pair] = _scalar_matrix(ring, rows, f"{path}.mats.{key}")

    adjuster = None
    if kind in ("equivariant", "invariant"):
        raw = _expect(entry.get("adjuster"), list, f"{path}.adjuster", "a list")
        if len(raw) != group.order:
            _fail(f"{path}.adjuster", f"expected {group.order} entries")
        adjuster = []
        for a, comps in enumerate(raw):
            apath = f"{path}.adjuster[{a}]"
            _expect(comps, dict, apath, "an object")
            adjuster.append(
                {x: _scalar_list(ring, v, f"{apath}.{x}") for x, v in comps.items()}
            )
    elif kind == "degree":
        raw = _expect(entry.get("adjuster"), dict, f"{path}.adjuster", "an object")
        for x, d in raw.items():
            if not isinstance(d, int) or not 0 <= d < group.order:
                _fail(f"{path}.adjuster.{x}", "degree out of range")
        adjuster = dict(raw)
    elif "adjuster" in entry:
        _fail(f"{path}.adjuster", "plain functors take no adjuster")

    return RawFunctor(kind=kind, dom=dom, cod=cod, objects=omap, mats=mats, adjuster=adjuster)


def _parse_nat_trans(ring, functors, entry, path) -> RawNatTrans:
    _expect(entry, dict, path, "an object")
    src, tgt = entry.get("src"), entry.get("tgt")
    for fieldname, value in (("src", src), ("tgt", tgt)):
        if value not in functors:
            _fail(f"{path}.{fieldname}", f"unknown functor {value!r}")
    comps = _expect(entry.get("components"), dict, f"{path}.components", "an object")
    comps = {x: _scalar_list(ring, v, f"{path}.components.{x}") for x, v in comps.items()}
    return RawNatTrans(src=src, tgt=tgt, components=comps)


@dataclass
class CategoryEntry:
    """One category of a built bundle, with its optional action and grading."""

    name: str
    base: LinCat
    gcat: GCategory | None = None
    graded: GradedCat | None = None


@dataclass
class FunctorEntry:
    name: str
    kind: str
    dom: str
    cod: str
    value: object


@dataclass
class NatTransEntry:
    name: str
    src: str
    tgt: str
    nt: NatTrans


@dataclass
class BuiltBundle:
    ring: RingSpec
    group: FinGroup
    categories: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)
    nat_trans: dict = field(default_factory=dict)


_BUILD_ERRORS = (StructureError, BoundaryError, NaturalityError, ValueError, ArithmeticError)


def build_bundle(bundle: Bundle) -> tuple[BuiltBundle, VerificationReport]:
    """Interpret a parsed bundle; construction failures become failed checks."""
    rep = VerificationReport(subject="bundle load")
    built = BuiltBundle(ring=bundle.ring, group=bundle.group)

    for name, raw in bundle.categories.items():
        try:
            built.categories[name] = _build_category(bundle, name, raw)
            rep.add("load.category", True, locus=f"name={name}")
        except _BUILD_ERRORS as exc:
            rep.add("load.category", False, locus=f"name={name}", detail=str(exc))

    for name, raw in bundle.functors.items():
        if raw.dom not in built.categories or raw.cod not in built.categories:
            rep.add("load.functor", False, locus=f"name={name}",
                    detail="dom or cod category failed to load")
            continue
        try:
            built.functors[name] = _build_functor(bundle, built, name, raw)
            rep.add("load.functor", True, locus=f"name={name}")
        except _BUILD_ERRORS as exc:
            rep.add("load.functor", False, locus=f"name={name}", detail=str(exc))

    for name, raw in bundle.nat_trans.items():
        if raw.src not in built.functors or raw.tgt not in built.functors:
            rep.add("load.nat_trans", False, locus=f"name={name}",
                    detail="src or tgt functor failed to load")
            continue
        try:
            built.nat_trans[name] = _build_nat_trans(built, name, raw)
            rep.add("load.nat_trans", True, locus=f"name={name}")
        except _BUILD_ERRORS as exc:
            rep.add("load.nat_trans", False, locus=f"name={name}", detail=str(exc))

    return built, rep


def _dense_comp(ring, raw: RawCategory, homs) -> dict:
    def dim(x, y):
        return len(homs.get((x, y), ()))

    comp = {}
    for (x, y, z), table in raw.comp.items():
        dg, df, dout = dim(y, z), dim(x, y), dim(x, z)
        if len(table) != dg or any(len(row) != df for row in table):
            raise StructureError(f"comp table ({x},{y},{z}) has wrong shape")
        dense = []
        for row in table:
            drow = []
            for cell in row:
                vec = [ring.zero] * dout
                for idx, cstr in cell:
                    if not 0 <= idx < dout:
                        raise StructureError(
                            f"comp table ({x},{y},{z}) output index {idx} out of range"
                        )
                    vec[idx] = ring.from_str(cstr)
                drow.append(tuple(vec))
            dense.append(tuple(drow))
        comp[(x, y, z)] = tuple(dense)
    return comp


def _mat_from_rows(ring, rows, want_rows, want_cols) -> Mat:
    if not rows:
        return Mat.zeros(ring, want_rows, want_cols) if want_rows == 0 else Mat.from_rows(ring, rows)
    return Mat.from_rows(ring, rows)


def _build_category(bundle: Bundle, name: str, raw: RawCategory) -> CategoryEntry:
    ring = bundle.ring
    homs = {k: tuple(v) for k, v in raw.homs.items()}
    base = LinCat(
        ring=ring,
        objects=tuple(raw.objects),
        hom=homs,
        identity=dict(raw.identity),
        comp=_dense_comp(ring, raw, homs),
    )
    entry = CategoryEntry(name=name, base=base)
    if raw.action is not None:
        functors = []
        for one in raw.action:
            mats = {
                (x, y): _mat_from_rows(
                    ring, rows,
                    base.dim(one["objects"].get(x, x), one["objects"].get(y, y)),
                    base.dim(x, y),
                )
                for (x, y), rows in one["mats"].items()
            }
            functors.append(
                LinFunctor(dom=base, cod=base, obj_map=one["objects"], hom_mats=mats)
            )
        entry.gcat = GCategory(base=base, group=bundle.group, action=tuple(functors))
    if raw.grading is not None:
        entry.graded = GradedCat(
            base=base, group=bundle.group,
            deg={k: tuple(v) for k, v in raw.grading.items()},
        )
    return entry


def _functor_mats(ring, raw: RawFunctor, dom: LinCat, cod: LinCat) -> dict:
    mats = {}
    for (x, y), rows in raw.mats.items():
        fx = raw.objects.get(x, x)
        fy = raw.objects.get(y, y)
        mats[(x, y)] = _mat_from_rows(ring, rows, cod.dim(fx, fy), dom.dim(x, y))
    return mats


def _adjuster_nt(comps: dict, src: LinFunctor, tgt: LinFunctor, a: int) -> NatTrans:
    """One adjuster component family as a natural transformation."""
    ring = src.dom.ring
    components = {}
    for x in src.dom.objects:
        if x not in comps:
            raise StructureError(f"adjuster[{a}] missing component at {x}")
        components[x] = Morphism(
            src.obj(x), tgt.obj(x), tuple(ring.coerce(v) for v in comps[x])
        )
    return NatTrans(src=src, tgt=tgt, components=components)


def _build_functor(bundle, built, name, raw: RawFunctor) -> FunctorEntry:
    ring = bundle.ring
    dom_entry = built.categories[raw.dom]
    cod_entry = built.categories[raw.cod]
    underlying = LinFunctor(
        dom=dom_entry.base,
        cod=cod_entry.base,
        obj_map=raw.objects,
        hom_mats=_functor_mats(ring, raw, dom_entry.base, cod_entry.base),
    )

    if raw.kind == "plain":
        value = underlying
    elif raw.kind == "equivariant":
        if dom_entry.gcat is None or cod_entry.gcat is None:
            raise StructureError("equivariant functor needs group actions on both sides")
        rho = tuple(
            _adjuster_nt(
                comps,
                compose_functors(cod_entry.gcat.action[a], underlying),
                compose_functors(underlying, dom_entry.gcat.action[a]),
                a,
            )
            for a, comps in enumerate(raw.adjuster)
        )
        value = EquivFunctor(dom=dom_entry.gcat, cod=cod_entry.gcat, e=underlying, rho=rho)
    elif raw.kind == "invariant":
        if dom_entry.gcat is None:
            raise StructureError("invariant functor needs a group action on its source")
        phi = tuple(
            _adjuster_nt(
                comps,
                underlying,
                compose_functors(underlying, dom_entry.gcat.action[a]),
                a,
            )
            for a, comps in enumerate(raw.adjuster)
        )
        value = InvFunctor(dom=dom_entry.gcat, cod=cod_entry.base, f=underlying, phi=phi)
    else:
        if dom_entry.graded is None or cod_entry.graded is None:
            raise StructureError("degree functor needs gradings on both sides")
        r = dict(raw.adjuster)
        value = DegFunctor(dom=dom_entry.graded, cod=cod_entry.graded, h=underlying, r=r)

    return FunctorEntry(name=name, kind=raw.kind, dom=raw.dom, cod=raw.cod, value=value)


def _underlying_functor(entry: FunctorEntry) -> LinFunctor:
    value = entry.value
    if isinstance(value, LinFunctor):
        return value
    if isinstance(value, EquivFunctor):
        return value.e
    if isinstance(value, InvFunctor):
        return value.f
    return value.h


def _build_nat_trans(built, name, raw: RawNatTrans) -> NatTransEntry:
    src = _underlying_functor(built.functors[raw.src])
    tgt = _underlying_functor(built.functors[raw.tgt])
    ring = src.dom.ring
    components = {}
    for x in src.dom.objects:
        if x not in raw.components:
            raise StructureError(f"component missing at {x}")
        components[x] = Morphism(
            src.obj(x), tgt.obj(x), tuple(ring.coerce(v) for v in raw.components[x])
        )
    nt = NatTrans(src=src, tgt=tgt, components=components)
    return NatTransEntry(name=name, src=raw.src, tgt=raw.tgt, nt=nt)


def _emit_scalars(ring, values) -> list:
    return [ring.to_str(v) for v in values]


def _emit_mat(ring, m: Mat) -> list:
    return [[ring.to_str(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)]


def lincat_entry(c: LinCat) -> dict:
    """The serializable form of a bare category."""
    ring = c.ring
    entry = {
        "objects": list(c.objects),
        "homs": {f"{x}|{y}": list(c.basis(x, y)) for (x, y) in c.pairs()},
        "identity": {x: _emit_scalars(ring, c.id_coeffs(x)) for x in c.objects},
        "comp": {},
    }
    for (x, y, z), table in c.comp.items():
        entry["comp"][f"{x}|{y}|{z}"] = [
            [
                [[k, ring.to_str(v)] for k, v in enumerate(vec) if v != ring.zero]
                for vec in row
            ]
            for row in table
        ]
    return entry


def _action_entry(g: GCategory) -> list:
    ring = g.base.ring
    out = []
    for f in g.action:
        out.append(
            {
                "objects": {x: f.obj(x) for x in g.base.objects},
                "mats": {
                    f"{x}|{y}": _emit_mat(ring, f.mat(x, y)) for (x, y) in g.base.pairs()
                },
            }
        )
    return out


def category_entry(value) -> dict:
    """Serialize a LinCat, GCategory, or GradedCat (or an already-built
    CategoryEntry carrying several structures on one base)."""
    if isinstance(value, CategoryEntry):
        base = value.base
        entry = lincat_entry(base)
        if value.gcat is not None:
            entry["action"] = _action_entry(value.gcat)
        if value.graded is not None:
            entry["grading"] = {
                f"{x}|{y}": list(value.graded.degrees(x, y))
                for (x, y) in base.pairs()
            }
        return entry
    if isinstance(value, GCategory):
        entry = lincat_entry(value.base)
        entry["action"] = _action_entry(value)
        return entry
    if isinstance(value, GradedCat):
        entry = lincat_entry(value.base)
        entry["grading"] = {
            f"{x}|{y}": list(value.degrees(x, y)) for (x, y) in value.base.pairs()
        }
        return entry
    return lincat_entry(value)


def functor_entry(kind: str, dom: str, cod: str, value) -> dict:
    """Serialize a functor of any of the four kinds."""
    if kind not in _KINDS:
        raise StructureError(f"unknown functor kind {kind!r}")
    if isinstance(value, EquivFunctor):
        underlying = value.e
    elif isinstance(value, InvFunctor):
        underlying = value.f
    elif isinstance(value, DegFunctor):
        underlying = value.h
    else:
        underlying = value
    ring = underlying.dom.ring
    entry = {
        "kind": kind,
        "dom": dom,
        "cod": cod,
        "objects": {x: underlying.obj(x) for x in underlying.dom.objects},
        "mats": {
            f"{x}|{y}": _emit_mat(ring, underlying.mat(x, y))
            for (x, y) in underlying.dom.pairs()
        },
    }
    if kind == "equivariant":
        entry["adjuster"] = [
            {x: _emit_scalars(ring, nt.at(x).coeffs) for x in underlying.dom.objects}
            for nt in value.rho
        ]
    elif kind == "invariant":
        entry["adjuster"] = [
            {x: _emit_scalars(ring, nt.at(x).coeffs) for x in underlying.dom.objects}
            for nt in value.phi
        ]
    elif kind == "degree":
        entry["adjuster"] = {x: value.r[x] for x in underlying.dom.objects}
    return entry


def nat_trans_entry(src: str, tgt: str, nt: NatTrans) -> dict:
    ring = nt.src.dom.ring
    return {
        "src": src,
        "tgt": tgt,
        "components": {
            x: _emit_scalars(ring, nt.at(x).coeffs) for x in nt.src.dom.objects
        },
    }


def make_bundle(ring: RingSpec, group: FinGroup, categories: dict,
                functors: dict | None = None, nat_trans: dict | None = None) -> dict:
    """Assemble a bundle dict with canonical field order.

    categories maps names to LinCat / GCategory / GradedCat / CategoryEntry
    values; functors maps names to (kind, dom_name, cod_name, value) tuples;
    nat_trans maps names to (src_name, tgt_name, NatTrans) tuples.
    """
    out = {
        "format": FORMAT,
        "ring": ring.label(),
        "group": {"order": group.order, "mul": [list(r) for r in group.mul_table]},
        "categories": {name: category_entry(v) for name, v in categories.items()},
        "functors": {},
        "nat_trans": {},
    }
    for name, (kind, dom, cod, value) in (functors or {}).items():
        out["functors"][name] = functor_entry(kind, dom, cod, value)
    for name, (src, tgt, nt) in (nat_trans or {}).items():
        out["nat_trans"][name] = nat_trans_entry(src, tgt, nt)
    return out


def dumps_bundle(data: dict) -> str:
    """Canonical text form: two-space indent, keys in insertion order."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def loads_bundle(text: str) -> Bundle:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleFormatError("$", f"not valid JSON: {exc}") from None
    return parse_bundle(data)
