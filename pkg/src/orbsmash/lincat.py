"""Finite k-linear categories presented by hom bases and structure constants.

A category is given by an ordered list of object ids, an ordered basis for
every hom space, the coefficient vector of each identity, and the structure
constants of composition.  All scalars live in one RingSpec.  Values are
treated as immutable once constructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import (
    Mat,
    RingSpec,
    InconsistentSystemError,
    ShapeError,
    mat_mul,
    solve_linear,
    vec_add,
    vec_scale,
    zero_vec,
)
from .report import VerificationReport


class StructureError(ValueError):
    pass


class ComposeError(ValueError):
    pass


class BoundaryError(ValueError):
    pass


class NaturalityError(ValueError):
    pass


def _check_name(kind: str, s) -> str:
    if not isinstance(s, str) or not s or "|" in s or "\n" in s:
        raise StructureError(f"bad {kind} {s!r}: names are nonempty strings without '|'")
    return s


@dataclass(frozen=True)
class Morphism:
    """A morphism as a coefficient vector over the basis of hom(src, tgt)."""

    src: str
    tgt: str
    coeffs: tuple

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass
class LinCat:
    ring: RingSpec
    objects: tuple
    hom: dict
    identity: dict
    comp: dict

    def __post_init__(self):
        objects = tuple(_check_name("object id", x) for x in self.objects)
        if len(set(objects)) != len(objects):
            raise StructureError("duplicate object ids")
        self.objects = objects
        oset = set(objects)

        hom = {}
        for (x, y), labels in self.hom.items():
            if x not in oset or y not in oset:
                raise StructureError(f"hom key ({x},{y}) references unknown object")
            labels = tuple(_check_name("basis label", l) for l in labels)
            if len(set(labels)) != len(labels):
                raise StructureError(f"duplicate basis labels in hom({x},{y})")
            if labels:
                hom[(x, y)] = labels
        # canonical pair order: row object major
        self.hom = {
            (x, y): hom[(x, y)] for x in objects for y in objects if (x, y) in hom
        }

        ident = {}
        for x in objects:
            if x not in self.identity:
                raise StructureError(f"missing identity vector for {x}")
            v = tuple(self.ring.coerce(c) for c in self.identity[x])
            if len(v) != self.dim(x, x):
                raise StructureError(f"identity vector for {x} has wrong length")
            ident[x] = v
        self.identity = ident

        comp = {}
        for (x, y, z), table in self.comp.items():
            dg, df, dout = self.dim(y, z), self.dim(x, y), self.dim(x, z)
            if dg == 0 or df == 0:
                continue
            rows = tuple(
                tuple(tuple(self.ring.coerce(c) for c in vec) for vec in row)
                for row in table
            )
            if len(rows) != dg or any(len(r) != df for r in rows):
                raise StructureError(f"comp table ({x},{y},{z}) has wrong shape")
            for row in rows:
                for vec in row:
                    if len(vec) != dout:
                        raise StructureError(
                            f"comp table ({x},{y},{z}) has output vectors of wrong length"
                        )
            if any(c != self.ring.zero for row in rows for vec in row for c in vec):
                comp[(x, y, z)] = rows
        self.comp = {
            (x, y, z): comp[(x, y, z)]
            for x in objects
            for y in objects
            for z in objects
            if (x, y, z) in comp
        }

    @staticmethod
    def from_tables(ring, objects, hom, identity, comp_rules):
        """Build from label-level data.

        comp_rules maps (x, y, z) to {(g_label, f_label): {out_label: coeff}}
        giving g o f expanded over the basis of hom(x, z).
        """
        hom = {k: tuple(v) for k, v in hom.items() if v}
        cat = LinCat(ring, tuple(objects), dict(hom), dict(identity), {})
        comp = {}
        for (x, y, z), rules in comp_rules.items():
            gl, fl, ol = cat.basis(y, z), cat.basis(x, y), cat.basis(x, z)
            table = [
                [[ring.zero] * len(ol) for _ in fl] for _ in gl
            ]
            for (g, f), out in rules.items():
                if g not in gl or f not in fl:
                    raise StructureError(f"comp rule ({g},{f}) not in bases at ({x},{y},{z})")
                for lbl, c in out.items():
                    if lbl not in ol:
                        raise StructureError(f"output label {lbl} not in hom({x},{z})")
                    table[gl.index(g)][fl.index(f)][ol.index(lbl)] = ring.coerce(c)
            comp[(x, y, z)] = tuple(tuple(tuple(v) for v in row) for row in table)
        return LinCat(ring, cat.objects, cat.hom, cat.identity, comp)

    def basis(self, x, y) -> tuple:
        return self.hom.get((x, y), ())

    def dim(self, x, y) -> int:
        return len(self.basis(x, y))

    def id_coeffs(self, x) -> tuple:
        return self.identity[x]

    def id_morphism(self, x) -> Morphism:
        return Morphism(x, x, self.identity[x])

    def zero_morphism(self, x, y) -> Morphism:
        return Morphism(x, y, zero_vec(self.ring, self.dim(x, y)))

    def basis_morphism(self, x, y, i) -> Morphism:
        n = self.dim(x, y)
        if not 0 <= i < n:
            raise StructureError(f"basis index {i} out of range for hom({x},{y})")
        return Morphism(x, y, tuple(self.ring.one if j == i else self.ring.zero for j in range(n)))

    def morphism(self, x, y, coeffs) -> Morphism:
        coeffs = tuple(self.ring.coerce(c) for c in coeffs)
        if len(coeffs) != self.dim(x, y):
            raise StructureError(f"coefficient vector has wrong length for hom({x},{y})")
        return Morphism(x, y, coeffs)

    def table(self, x, y, z):
        return self.comp.get((x, y, z))

    def pairs(self):
        """Object pairs with nonzero hom, in canonical order."""
        return list(self.hom.keys())


def compose_morphisms(c: LinCat, g: Morphism, f: Morphism) -> Morphism:
    """The composite g o f, f applied first."""
    if f.tgt != g.src:
        raise ComposeError(f"cannot compose {g.src}->{g.tgt} after {f.src}->{f.tgt}")
    ring = c.ring
    x, y, z = f.src, f.tgt, g.tgt
    out = list(zero_vec(ring, c.dim(x, z)))
    table = c.table(x, y, z)
    if table is not None:
        for j, gj in enumerate(g.coeffs):
            if gj == ring.zero:
                continue
            row = table[j]
            for i, fi in enumerate(f.coeffs):
                if fi == ring.zero:
                    continue
                s = ring.mul(gj, fi)
                vec = row[i]
                for k, v in enumerate(vec):
                    if v != ring.zero:
                        out[k] = ring.add(out[k], ring.mul(s, v))
    return Morphism(x, z, tuple(out))


def morphism_add(c: LinCat, a: Morphism, b: Morphism) -> Morphism:
    if (a.src, a.tgt) != (b.src, b.tgt):
        raise ComposeError("cannot add morphisms with different boundaries")
    return Morphism(a.src, a.tgt, vec_add(c.ring, a.coeffs, b.coeffs))


def morphism_scale(c: LinCat, s, a: Morphism) -> Morphism:
    return Morphism(a.src, a.tgt, vec_scale(c.ring, c.ring.coerce(s), a.coeffs))


def validate_category(c: LinCat) -> VerificationReport:
    """Check the identity laws and associativity on all basis morphisms."""
    rep = VerificationReport(subject="category")
    for (x, y) in c.pairs():
        for i, lbl in enumerate(c.basis(x, y)):
            f = c.basis_morphism(x, y, i)
            left = compose_morphisms(c, c.id_morphism(y), f)
            rep.add("identity.left", left == f, locus=f"x={x},y={y},f={lbl}")
            right = compose_morphisms(c, f, c.id_morphism(x))
            rep.add("identity.right", right == f, locus=f"x={x},y={y},f={lbl}")
    for (x, y) in c.pairs():
        for (y2, z) in c.pairs():
            if y2 != y:
                continue
            for (z2, w) in c.pairs():
                if z2 != z:
                    continue
                for i, fl in enumerate(c.basis(x, y)):
                    f = c.basis_morphism(x, y, i)
                    for j, gl in enumerate(c.basis(y, z)):
                        g = c.basis_morphism(y, z, j)
                        gf = compose_morphisms(c, g, f)
                        for k, hl in enumerate(c.basis(z, w)):
                            h = c.basis_morphism(z, w, k)
                            lhs = compose_morphisms(c, h, gf)
                            rhs = compose_morphisms(c, compose_morphisms(c, h, g), f)
                            rep.add(
                                "associativity",
                                lhs == rhs,
                                locus=f"f={fl},g={gl},h={hl}",
                            )
    return rep


@dataclass
class LinFunctor:
    """A k-linear functor: object map plus one matrix per hom space."""

    dom: LinCat
    cod: LinCat
    obj_map: dict
    hom_mats: dict

    def __post_init__(self):
        if self.dom.ring != self.cod.ring:
            raise StructureError("functor between categories over different rings")
        om = {}
        for x in self.dom.objects:
            if x not in self.obj_map:
                raise StructureError(f"obj_map missing {x}")
            fx = self.obj_map[x]
            if fx not in self.cod.objects:
                raise StructureError(f"obj_map sends {x} to unknown object {fx}")
            om[x] = fx
        self.obj_map = om
        mats = {}
        for (x, y) in self.dom.pairs():
            m = self.hom_mats.get((x, y))
            if m is None:
                raise StructureError(f"hom matrix missing for ({x},{y})")
            fx, fy = om[x], om[y]
            want = (self.cod.dim(fx, fy), self.dom.dim(x, y))
            if (m.rows, m.cols) != want:
                raise StructureError(
                    f"hom matrix for ({x},{y}) has shape {(m.rows, m.cols)}, want {want}"
                )
            if m.ring != self.dom.ring:
                raise StructureError("hom matrix over wrong ring")
            mats[(x, y)] = m
        self.hom_mats = mats

    def obj(self, x):
        return self.obj_map[x]

    def mat(self, x, y) -> Mat:
        m = self.hom_mats.get((x, y))
        if m is None:
            return Mat.zeros(self.dom.ring, self.cod.dim(self.obj_map[x], self.obj_map[y]), 0)
        return m

    def apply(self, m: Morphism) -> Morphism:
        return Morphism(
            self.obj_map[m.src],
            self.obj_map[m.tgt],
            self.mat(m.src, m.tgt).apply(m.coeffs),
        )


def identity_functor(c: LinCat) -> LinFunctor:
    return LinFunctor(
        dom=c,
        cod=c,
        obj_map={x: x for x in c.objects},
        hom_mats={(x, y): Mat.identity(c.ring, c.dim(x, y)) for (x, y) in c.pairs()},
    )


def validate_functor(f: LinFunctor) -> VerificationReport:
    """Check preservation of identities and of composition on basis pairs."""
    rep = VerificationReport(subject="functor")
    for x in f.dom.objects:
        img = f.apply(f.dom.id_morphism(x))
        rep.add("preserves.identity", img == f.cod.id_morphism(f.obj(x)), locus=f"x={x}")
    for (x, y) in f.dom.pairs():
        for (y2, z) in f.dom.pairs():
            if y2 != y:
                continue
            for i, fl in enumerate(f.dom.basis(x, y)):
                a = f.dom.basis_morphism(x, y, i)
                fa = f.apply(a)
                for j, gl in enumerate(f.dom.basis(y, z)):
                    b = f.dom.basis_morphism(y, z, j)
                    lhs = f.apply(compose_morphisms(f.dom, b, a))
                    rhs = compose_morphisms(f.cod, f.apply(b), fa)
                    rep.add("preserves.composition", lhs == rhs, locus=f"f={fl},g={gl}")
    return rep


def compose_functors(g: LinFunctor, f: LinFunctor) -> LinFunctor:
    """The composite g o f, f applied first."""
    if f.cod != g.dom:
        raise BoundaryError("functor composition boundary mismatch")
    return LinFunctor(
        dom=f.dom,
        cod=g.cod,
        obj_map={x: g.obj(f.obj(x)) for x in f.dom.objects},
        hom_mats={
            (x, y): mat_mul(g.mat(f.obj(x), f.obj(y)), f.mat(x, y))
            for (x, y) in f.dom.pairs()
        },
    )


def functor_equal(f: LinFunctor, g: LinFunctor) -> bool:
    """Exact equality: same boundaries, same object map, same matrices."""
    return (
        f.dom == g.dom
        and f.cod == g.cod
        and f.obj_map == g.obj_map
        and f.hom_mats == g.hom_mats
    )


@dataclass
class NatTrans:
    """A natural transformation; naturality is validated at construction."""

    src: LinFunctor
    tgt: LinFunctor
    components: dict

    def __post_init__(self):
        if self.src.dom != self.tgt.dom or self.src.cod != self.tgt.cod:
            raise BoundaryError("natural transformation between functors with different boundaries")
        dom, cod = self.src.dom, self.src.cod
        comps = {}
        for x in dom.objects:
            if x not in self.components:
                raise StructureError(f"component missing at {x}")
            m = self.components[x]
            if (m.src, m.tgt) != (self.src.obj(x), self.tgt.obj(x)):
                raise BoundaryError(
                    f"component at {x} has boundary ({m.src},{m.tgt}), "
                    f"want ({self.src.obj(x)},{self.tgt.obj(x)})"
                )
            if len(m.coeffs) != cod.dim(m.src, m.tgt):
                raise StructureError(f"component at {x} has wrong coefficient length")
            comps[x] = m
        self.components = comps
        for (x, y) in dom.pairs():
            for i, lbl in enumerate(dom.basis(x, y)):
                f = dom.basis_morphism(x, y, i)
                lhs = compose_morphisms(cod, self.tgt.apply(f), comps[x])
                rhs = compose_morphisms(cod, comps[y], self.src.apply(f))
                if lhs != rhs:
                    raise NaturalityError(f"naturality fails at f={lbl} ({x}->{y})")

    def at(self, x) -> Morphism:
        return self.components[x]


def identity_nt(f: LinFunctor) -> NatTrans:
    return NatTrans(f, f, {x: f.cod.id_morphism(f.obj(x)) for x in f.dom.objects})


def nt_equal(a: NatTrans, b: NatTrans) -> bool:
    return (
        functor_equal(a.src, b.src)
        and functor_equal(a.tgt, b.tgt)
        and a.components == b.components
    )


def nt_vertical(b: NatTrans, a: NatTrans) -> NatTrans:
    """Vertical composite b after a (a: F -> G, b: G -> H)."""
    if not functor_equal(a.tgt, b.src):
        raise BoundaryError("vertical composition boundary mismatch")
    cod = a.src.cod
    return NatTrans(
        a.src,
        b.tgt,
        {x: compose_morphisms(cod, b.at(x), a.at(x)) for x in a.src.dom.objects},
    )


def whisker_left(h: LinFunctor, a: NatTrans) -> NatTrans:
    """h applied after a: components h(a_x)."""
    if a.src.cod != h.dom:
        raise BoundaryError("left whisker boundary mismatch")
    return NatTrans(
        compose_functors(h, a.src),
        compose_functors(h, a.tgt),
        {x: h.apply(a.at(x)) for x in a.src.dom.objects},
    )


def whisker_right(a: NatTrans, h: LinFunctor) -> NatTrans:
    """a restricted along h: components a_{h(x)}."""
    if h.cod != a.src.dom:
        raise BoundaryError("right whisker boundary mismatch")
    return NatTrans(
        compose_functors(a.src, h),
        compose_functors(a.tgt, h),
        {x: a.at(h.obj(x)) for x in h.dom.objects},
    )


def nt_horizontal(b: NatTrans, a: NatTrans) -> NatTrans:
    """Horizontal composite b * a, with (b * a)_x = b_{G'(x)} o F(a_x).

    a runs between functors A -> B, b between functors B -> C.
    """
    if a.src.cod != b.src.dom:
        raise BoundaryError("horizontal composition boundary mismatch")
    cod = b.src.cod
    comps = {
        x: compose_morphisms(cod, b.at(a.tgt.obj(x)), b.src.apply(a.at(x)))
        for x in a.src.dom.objects
    }
    return NatTrans(
        compose_functors(b.src, a.src),
        compose_functors(b.tgt, a.tgt),
        comps,
    )


def try_invert_morphism(c: LinCat, m: Morphism) -> Morphism | None:
    """Two-sided inverse of m if one exists, else None.

    Solves the linear system w o m = id, m o w = id over the basis of
    hom(tgt, src); a two-sided inverse is unique, so the system is never
    underdetermined when consistent.
    """
    u, v = m.src, m.tgt
    ring = c.ring
    n = c.dim(v, u)
    lhs_rows = []
    for j in range(n):
        e = c.basis_morphism(v, u, j)
        col = compose_morphisms(c, e, m).coeffs + compose_morphisms(c, m, e).coeffs
        lhs_rows.append(col)
    a = Mat.from_columns(ring, c.dim(u, u) + c.dim(v, v), lhs_rows)
    rhs = Mat.from_columns(ring, a.rows, [c.id_coeffs(u) + c.id_coeffs(v)])
    try:
        sol = solve_linear(a, rhs)
    except InconsistentSystemError:
        return None
    return Morphism(v, u, sol.column(0))


def is_invertible_morphism(c: LinCat, m: Morphism) -> bool:
    return try_invert_morphism(c, m) is not None
