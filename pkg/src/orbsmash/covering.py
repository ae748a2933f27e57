"""Invariant functors out of a G-category and the covering property.

An invariant functor (F, phi): C -> B carries natural isomorphisms
phi_a: F -> F A_a with the cocycle phi_{ba} = (phi_b A_a) phi_a.  For each
object pair the two comparison maps

    F1: (+)_a C(A_a x, y) -> B(Fx, Fy),  (f_a) -> sum_a F(f_a) . phi_a x
    F2: (+)_b C(x, A_b y) -> B(Fx, Fy),  (f_b) -> sum_b phi_{b^-1}(A_b y) . F(f_b)

are assembled as matrices over the concatenated basis (group-element index
major, local basis index minor).  F is precovering when every F1 is
invertible, and covering when it is precovering and dense.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import Mat, is_invertible
from .gcat import GCategory
from .lincat import (
    BoundaryError,
    LinCat,
    LinFunctor,
    Morphism,
    NatTrans,
    StructureError,
    compose_functors,
    compose_morphisms,
    functor_equal,
    identity_nt,
    is_invertible_morphism,
    nt_equal,
    nt_vertical,
    whisker_left,
    whisker_right,
)
from .report import VerificationReport


class WitnessError(ValueError):
    pass


@dataclass
class InvFunctor:
    """An invariant functor (F, phi) from a G-category to a plain category."""

    dom: GCategory
    cod: LinCat
    f: LinFunctor
    phi: tuple

    def __post_init__(self):
        self.phi = tuple(self.phi)
        if self.f.dom != self.dom.base or self.f.cod != self.cod:
            raise StructureError("underlying functor has wrong boundaries")
        if len(self.phi) != self.dom.group.order:
            raise StructureError("adjuster family has wrong length")

    def is_strict(self) -> bool:
        return all(
            nt_equal(self.phi[a], identity_nt(self.phi[a].src))
            for a in self.dom.group.elements
        )


def invariant_with_trivial_adjuster(f: LinFunctor, dom: GCategory) -> InvFunctor:
    """Wrap a functor with F A_a = F on the nose, phi = identity."""
    phi = []
    for a in dom.group.elements:
        comp = compose_functors(f, dom.action[a])
        if not functor_equal(f, comp):
            raise StructureError(f"functor is not strictly invariant at a={a}")
        phi.append(identity_nt(f))
    return InvFunctor(dom=dom, cod=f.cod, f=f, phi=tuple(phi))


def validate_invariant(fn: InvFunctor) -> VerificationReport:
    """Check adjuster boundaries, invertibility, the cocycle, and its
    consequences phi_1 = id and phi_a^{-1} = phi_{a^{-1}} A_a."""
    rep = VerificationReport(subject="invariant functor")
    g = fn.dom.group
    cod = fn.cod
    for a in g.elements:
        nt = fn.phi[a]
        ok_b = functor_equal(nt.src, fn.f) and functor_equal(
            nt.tgt, compose_functors(fn.f, fn.dom.action[a])
        )
        rep.add("adjuster.boundary", ok_b, locus=f"a={a}")
        for x in fn.dom.base.objects:
            rep.add(
                "adjuster.invertible",
                is_invertible_morphism(cod, nt.at(x)),
                locus=f"a={a},x={x}",
            )
    for a in g.elements:
        for b in g.elements:
            ba = g.mul(b, a)
            for x in fn.dom.base.objects:
                expected = compose_morphisms(
                    cod, fn.phi[b].at(fn.dom.act_obj(a, x)), fn.phi[a].at(x)
                )
                rep.add(
                    "adjuster.cocycle",
                    fn.phi[ba].at(x) == expected,
                    locus=f"a={a},b={b},x={x}",
                )
    for x in fn.dom.base.objects:
        rep.add(
            "adjuster.unit",
            fn.phi[0].at(x) == cod.id_morphism(fn.f.obj(x)),
            locus=f"x={x}",
        )
    for a in g.elements:
        ai = g.inv(a)
        for x in fn.dom.base.objects:
            ax = fn.dom.act_obj(a, x)
            back = compose_morphisms(cod, fn.phi[ai].at(ax), fn.phi[a].at(x))
            forth = compose_morphisms(cod, fn.phi[a].at(x), fn.phi[ai].at(ax))
            ok = back == cod.id_morphism(fn.f.obj(x)) and forth == cod.id_morphism(
                fn.f.obj(ax)
            )
            rep.add("adjuster.inverse", ok, locus=f"a={a},x={x}")
    return rep


def compose_with_functor(h: LinFunctor, fn: InvFunctor) -> InvFunctor:
    """Postcompose with a plain functor: H(F, phi) = (HF, H phi)."""
    if h.dom != fn.cod:
        raise BoundaryError("composition boundary mismatch")
    return InvFunctor(
        dom=fn.dom,
        cod=h.cod,
        f=compose_functors(h, fn.f),
        phi=tuple(whisker_left(h, fn.phi[a]) for a in fn.dom.group.elements),
    )


def compose_equiv_then_inv(fn: InvFunctor, e) -> InvFunctor:
    """Precompose with an equivariant functor:
    (F, phi)(E, rho) = (FE, (F rho_a)(phi_a E))."""
    from .gcat import EquivFunctor

    assert isinstance(e, EquivFunctor)
    if e.cod != fn.dom:
        raise BoundaryError("composition boundary mismatch")
    phi = []
    for a in e.dom.group.elements:
        first = whisker_right(fn.phi[a], e.e)
        second = whisker_left(fn.f, e.rho[a])
        phi.append(nt_vertical(second, first))
    return InvFunctor(
        dom=e.dom, cod=fn.cod, f=compose_functors(fn.f, e.e), phi=tuple(phi)
    )


def concatenated_basis(c: GCategory, x: str, y: str) -> list:
    """Index pairs (a, i) for the basis of (+)_a C(A_a x, y), a-major."""
    out = []
    for a in c.group.elements:
        ax = c.act_obj(a, x)
        for i in range(c.base.dim(ax, y)):
            out.append((a, i))
    return out


def f1_map(fn: InvFunctor, x: str, y: str) -> Mat:
    """Matrix of (f_a)_a -> sum_a F(f_a) . phi_a x over the concatenated basis."""
    cod = fn.cod
    fx, fy = fn.f.obj(x), fn.f.obj(y)
    columns = []
    for a in fn.dom.group.elements:
        ax = fn.dom.act_obj(a, x)
        phi_ax = fn.phi[a].at(x)
        for i in range(fn.dom.base.dim(ax, y)):
            img = fn.f.apply(fn.dom.base.basis_morphism(ax, y, i))
            columns.append(compose_morphisms(cod, img, phi_ax).coeffs)
    return Mat.from_columns(cod.ring, cod.dim(fx, fy), columns)


def f2_map(fn: InvFunctor, x: str, y: str) -> Mat:
    """Matrix of (f_b)_b -> sum_b phi_{b^{-1}}(A_b y) . F(f_b)."""
    cod = fn.cod
    g = fn.dom.group
    fx, fy = fn.f.obj(x), fn.f.obj(y)
    columns = []
    for b in g.elements:
        by = fn.dom.act_obj(b, y)
        phi_back = fn.phi[g.inv(b)].at(by)
        for i in range(fn.dom.base.dim(x, by)):
            img = fn.f.apply(fn.dom.base.basis_morphism(x, by, i))
            columns.append(compose_morphisms(cod, phi_back, img).coeffs)
    return Mat.from_columns(cod.ring, cod.dim(fx, fy), columns)


def is_precovering(fn: InvFunctor) -> VerificationReport:
    """Every comparison matrix F1 must be square and invertible."""
    rep = VerificationReport(subject="precovering")
    for x in fn.dom.base.objects:
        for y in fn.dom.base.objects:
            m = f1_map(fn, x, y)
            rep.add(
                "f1.invertible",
                m.rows == m.cols and is_invertible(m),
                locus=f"x={x},y={y}",
                detail=f"shape {m.rows}x{m.cols}",
            )
    return rep


def verify_iso_witness(c: LinCat, fwd: Morphism, bwd: Morphism) -> bool:
    """True when fwd and bwd are mutually inverse."""
    if fwd.src != bwd.tgt or fwd.tgt != bwd.src:
        return False
    return (
        compose_morphisms(c, bwd, fwd) == c.id_morphism(fwd.src)
        and compose_morphisms(c, fwd, bwd) == c.id_morphism(fwd.tgt)
    )


def is_covering(fn: InvFunctor, density_witnesses: dict | None = None) -> VerificationReport:
    """Precovering plus density.

    Density is certified either by object-surjectivity or, per missed object,
    by a user-supplied isomorphism witness {y: (fwd, bwd)} with fwd: F x -> y.
    Witnesses are verified, never searched for.
    """
    rep = is_precovering(fn)
    rep.subject = "covering"
    hit = {fn.f.obj(x) for x in fn.dom.base.objects}
    for y in fn.cod.objects:
        if y in hit:
            rep.add("dense", True, locus=f"y={y}")
            continue
        w = (density_witnesses or {}).get(y)
        if w is None:
            rep.add("dense", False, locus=f"y={y}", detail="object not hit, no witness")
            continue
        fwd, bwd = w
        if fwd.tgt != y or fwd.src not in hit:
            rep.add("dense", False, locus=f"y={y}", detail="witness has wrong boundaries")
            continue
        ok = verify_iso_witness(fn.cod, fwd, bwd)
        rep.add("dense", ok, locus=f"y={y}",
                detail="witness verified" if ok else "witness fails")
    return rep


@dataclass
class InvMorphism:
    """A 2-cell between invariant functors.

    Carries its boundaries: rebuilding the functors a 2-cell descends to on
    an orbit category needs both adjusters, not just the transformation.
    """

    src: InvFunctor
    tgt: InvFunctor
    eta: NatTrans


def validate_inv_morphism(m: InvMorphism) -> VerificationReport:
    """Check (eta A_a) phi_a = phi'_a eta for every group element."""
    rep = VerificationReport(subject="invariant 2-cell")
    rep.add(
        "boundary",
        functor_equal(m.eta.src, m.src.f) and functor_equal(m.eta.tgt, m.tgt.f),
    )
    if not rep.passed:
        return rep
    cod = m.src.cod
    for a in m.src.dom.group.elements:
        for x in m.src.dom.base.objects:
            lhs = compose_morphisms(
                cod, m.eta.at(m.src.dom.act_obj(a, x)), m.src.phi[a].at(x)
            )
            rhs = compose_morphisms(cod, m.tgt.phi[a].at(x), m.eta.at(x))
            rep.add("square", lhs == rhs, locus=f"a={a},x={x}")
    return rep
