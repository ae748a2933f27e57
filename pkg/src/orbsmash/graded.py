"""Group-graded linear categories and degree-preserving functors.

A grading assigns one group element to every hom basis vector.  A morphism is
homogeneous of degree d when its support lies in the degree-d positions, so
the degree-d component of hom(x, y) is a distinguished subspace and products
must respect deg(g o f) = deg(g) deg(f).  Identities have degree 1.

A degree-preserving functor carries a degree adjuster r assigning a group
element to every object; it must satisfy H(B^{r_y a}(x, y)) <= A^{a r_x}(Hx, Hy),
the graded analogue of an equivariance adjuster.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gcat import FinGroup
from .lincat import (
    BoundaryError,
    LinCat,
    LinFunctor,
    NatTrans,
    StructureError,
    compose_functors,
    compose_morphisms,
    functor_equal,
    identity_functor,
    nt_equal,
    nt_horizontal,
    nt_vertical,
)
from .report import VerificationReport


@dataclass
class GradedCat:
    """A linear category with a group element attached to every basis vector."""

    base: LinCat
    group: FinGroup
    deg: dict

    def __post_init__(self):
        deg = {}
        for (x, y) in self.base.pairs():
            d = self.deg.get((x, y))
            if d is None:
                raise StructureError(f"degree vector missing for hom({x},{y})")
            d = tuple(d)
            if len(d) != self.base.dim(x, y):
                raise StructureError(f"degree vector for hom({x},{y}) has wrong length")
            if any(not isinstance(v, int) or not 0 <= v < self.group.order for v in d):
                raise StructureError(f"degree out of range in hom({x},{y})")
            deg[(x, y)] = d
        self.deg = deg

    def degrees(self, x, y) -> tuple:
        return self.deg.get((x, y), ())

    def degree_positions(self, x, y, d: int) -> tuple:
        return tuple(i for i, v in enumerate(self.degrees(x, y)) if v == d)

    def component_labels(self, x, y, d: int) -> tuple:
        basis = self.base.basis(x, y)
        return tuple(basis[i] for i in self.degree_positions(x, y, d))


def morphism_supported_in_degree(b: GradedCat, m, d: int) -> bool:
    """True when every nonzero coefficient of m sits in a degree-d position."""
    degs = b.degrees(m.src, m.tgt)
    z = b.base.ring.zero
    return all(c == z or degs[i] == d for i, c in enumerate(m.coeffs))


def validate_grading(b: GradedCat) -> VerificationReport:
    """Check that identities are degree 1 and composition multiplies degrees."""
    rep = VerificationReport(subject="grading")
    g = b.group
    for x in b.base.objects:
        rep.add(
            "identity.degree",
            morphism_supported_in_degree(b, b.base.id_morphism(x), 0),
            locus=f"x={x}",
        )
    for (x, y) in b.base.pairs():
        for (y2, z) in b.base.pairs():
            if y2 != y:
                continue
            for i, fl in enumerate(b.base.basis(x, y)):
                f = b.base.basis_morphism(x, y, i)
                df = b.degrees(x, y)[i]
                for j, gl in enumerate(b.base.basis(y, z)):
                    gm = b.base.basis_morphism(y, z, j)
                    dg = b.degrees(y, z)[j]
                    prod = compose_morphisms(b.base, gm, f)
                    rep.add(
                        "composition.degree",
                        morphism_supported_in_degree(b, prod, g.mul(dg, df)),
                        locus=f"x={x},y={y},z={z},f={fl},g={gl}",
                    )
    return rep


def trivial_grading(base: LinCat, group: FinGroup) -> GradedCat:
    return GradedCat(
        base=base, group=group,
        deg={(x, y): (0,) * base.dim(x, y) for (x, y) in base.pairs()},
    )


@dataclass
class DegFunctor:
    """A degree-preserving functor (H, r) between graded categories."""

    dom: GradedCat
    cod: GradedCat
    h: LinFunctor
    r: dict

    def __post_init__(self):
        if self.h.dom != self.dom.base or self.h.cod != self.cod.base:
            raise StructureError("underlying functor has wrong boundaries")
        if self.dom.group != self.cod.group:
            raise StructureError("degree functor between categories of different groups")
        r = {}
        for x in self.dom.base.objects:
            if x not in self.r:
                raise StructureError(f"degree adjuster missing at {x}")
            v = self.r[x]
            if not isinstance(v, int) or not 0 <= v < self.dom.group.order:
                raise StructureError(f"degree adjuster out of range at {x}")
            r[x] = v
        self.r = r

    def is_strict(self) -> bool:
        return all(v == 0 for v in self.r.values())


def identity_deg_functor(b: GradedCat) -> DegFunctor:
    return DegFunctor(
        dom=b, cod=b, h=identity_functor(b.base),
        r={x: 0 for x in b.base.objects},
    )


def strict_deg_functor(h: LinFunctor, dom: GradedCat, cod: GradedCat) -> DegFunctor:
    return DegFunctor(dom=dom, cod=cod, h=h, r={x: 0 for x in dom.base.objects})


def validate_deg_functor(f: DegFunctor) -> VerificationReport:
    """Check the image degree of every basis vector against the adjuster."""
    rep = VerificationReport(subject="degree-preserving functor")
    g = f.dom.group
    for (x, y) in f.dom.base.pairs():
        rx, ry = f.r[x], f.r[y]
        for i, lbl in enumerate(f.dom.base.basis(x, y)):
            d = f.dom.degrees(x, y)[i]
            img = f.h.apply(f.dom.base.basis_morphism(x, y, i))
            want = g.mul(g.mul(g.inv(ry), d), rx)
            rep.add(
                "image.degree",
                morphism_supported_in_degree(f.cod, img, want),
                locus=f"x={x},y={y},f={lbl}",
            )
    return rep


def compose_deg_functors(f2: DegFunctor, f1: DegFunctor) -> DegFunctor:
    """Composite with adjuster r''_x = r_x r'_{H x}."""
    if f1.cod != f2.dom:
        raise BoundaryError("degree functor composition boundary mismatch")
    g = f1.dom.group
    return DegFunctor(
        dom=f1.dom,
        cod=f2.cod,
        h=compose_functors(f2.h, f1.h),
        r={x: g.mul(f1.r[x], f2.r[f1.h.obj(x)]) for x in f1.dom.base.objects},
    )


def deg_functor_equal(f: DegFunctor, g: DegFunctor) -> bool:
    return (
        f.dom == g.dom
        and f.cod == g.cod
        and functor_equal(f.h, g.h)
        and f.r == g.r
    )


@dataclass
class DegMorphism:
    """A 2-cell between degree-preserving functors; components must be
    homogeneous of degree s_x^{-1} r_x."""

    theta: NatTrans


def validate_deg_morphism(
    m: DegMorphism, src: DegFunctor, tgt: DegFunctor
) -> VerificationReport:
    rep = VerificationReport(subject="graded 2-cell")
    rep.add(
        "boundary",
        functor_equal(m.theta.src, src.h) and functor_equal(m.theta.tgt, tgt.h),
    )
    if not rep.passed:
        return rep
    g = src.dom.group
    for x in src.dom.base.objects:
        want = g.mul(g.inv(tgt.r[x]), src.r[x])
        rep.add(
            "component.degree",
            morphism_supported_in_degree(src.cod, m.theta.at(x), want),
            locus=f"x={x}",
        )
    return rep


def deg_morphism_vertical(b: DegMorphism, a: DegMorphism) -> DegMorphism:
    return DegMorphism(nt_vertical(b.theta, a.theta))


def deg_morphism_horizontal(b: DegMorphism, a: DegMorphism) -> DegMorphism:
    return DegMorphism(nt_horizontal(b.theta, a.theta))


def deg_morphism_equal(a: DegMorphism, b: DegMorphism) -> bool:
    return nt_equal(a.theta, b.theta)
