"""Finite groups acting strictly on finite linear categories.

Group elements are the indices 0..n-1 with 0 the identity; the group is a
multiplication table.  An action assigns to every element an automorphism of
the category so that index products match functor composites exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import is_invertible
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
    identity_nt,
    validate_functor,
    is_invertible_morphism,
    nt_equal,
    nt_horizontal,
    nt_vertical,
    whisker_left,
    whisker_right,
)
from .report import VerificationReport


@dataclass(frozen=True)
class FinGroup:
    """A finite group as a multiplication table over indices, 0 = identity."""

    mul_table: tuple

    def __post_init__(self):
        n = len(self.mul_table)
        if n == 0:
            raise StructureError("empty multiplication table")
        rows = tuple(tuple(r) for r in self.mul_table)
        if any(len(r) != n for r in rows):
            raise StructureError("multiplication table is not square")
        if any(not isinstance(v, int) or not 0 <= v < n for r in rows for v in r):
            raise StructureError("multiplication table entries out of range")
        object.__setattr__(self, "mul_table", rows)

    @property
    def order(self) -> int:
        return len(self.mul_table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        for b in self.elements:
            if self.mul(a, b) == 0 and self.mul(b, a) == 0:
                return b
        raise StructureError(f"element {a} has no inverse; not a group")

    @staticmethod
    def trivial() -> "FinGroup":
        return FinGroup(((0,),))

    @staticmethod
    def cyclic(n: int) -> "FinGroup":
        return FinGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def validate_group(g: FinGroup) -> VerificationReport:
    """Check the group axioms over the multiplication table."""
    rep = VerificationReport(subject="group")
    n = g.order
    rep.add("identity.left", all(g.mul(0, a) == a for a in range(n)))
    rep.add("identity.right", all(g.mul(a, 0) == a for a in range(n)))
    for a in range(n):
        has_inv = any(g.mul(a, b) == 0 and g.mul(b, a) == 0 for b in range(n))
        rep.add("inverses", has_inv, locus=f"a={a}")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                ok = g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
                rep.add("associativity", ok, locus=f"a={a},b={b},c={c}")
    return rep


@dataclass
class GCategory:
    """A linear category with a strict action: action[a] is the automorphism A_a."""

    base: LinCat
    group: FinGroup
    action: tuple

    def __post_init__(self):
        self.action = tuple(self.action)
        if len(self.action) != self.group.order:
            raise StructureError(
                f"action has {len(self.action)} functors for a group of order {self.group.order}"
            )
        for a, f in enumerate(self.action):
            if f.dom != self.base or f.cod != self.base:
                raise StructureError(f"action[{a}] is not an endofunctor of the base")

    def act_obj(self, a: int, x: str) -> str:
        return self.action[a].obj(x)

    def functor(self, a: int) -> LinFunctor:
        return self.action[a]


def trivial_gcategory(base: LinCat, group: FinGroup) -> GCategory:
    ident = identity_functor(base)
    return GCategory(base=base, group=group, action=tuple(ident for _ in group.elements))


def validate_action(c: GCategory) -> VerificationReport:
    """Check that the action is by automorphisms and is strictly multiplicative."""
    rep = VerificationReport(subject="group action")
    base, g = c.base, c.group
    for a in g.elements:
        f = c.action[a]
        sub = validate_functor(f)
        rep.add("functor.valid", sub.passed, locus=f"a={a}",
                detail="" if sub.passed else sub.failures()[0].name)
        objs = [f.obj(x) for x in base.objects]
        rep.add("objects.bijective", len(set(objs)) == len(base.objects), locus=f"a={a}")
        for (x, y) in base.pairs():
            m = f.mat(x, y)
            rep.add(
                "hom.invertible",
                m.rows == m.cols and is_invertible(m),
                locus=f"a={a},x={x},y={y}",
            )
    rep.add("unit", functor_equal(c.action[0], identity_functor(base)), locus="a=0")
    for a in g.elements:
        for b in g.elements:
            lhs = compose_functors(c.action[b], c.action[a])
            rhs = c.action[g.mul(b, a)]
            rep.add("multiplicative", functor_equal(lhs, rhs), locus=f"a={a},b={b}")
    return rep


@dataclass
class EquivFunctor:
    """An equivariant functor (E, rho) between G-categories.

    rho[a] is a natural isomorphism A'_a E -> E A_a correcting the failure of
    strict commutation; the family must satisfy the cocycle condition
    rho_{ba} = (rho_b A_a) (A'_b rho_a).
    """

    dom: GCategory
    cod: GCategory
    e: LinFunctor
    rho: tuple

    def __post_init__(self):
        self.rho = tuple(self.rho)
        if self.e.dom != self.dom.base or self.e.cod != self.cod.base:
            raise StructureError("underlying functor has wrong boundaries")
        if len(self.rho) != self.dom.group.order:
            raise StructureError("adjuster family has wrong length")
        if self.dom.group != self.cod.group:
            raise StructureError("equivariant functor between categories of different groups")

    def is_strict(self) -> bool:
        return all(
            nt_equal(self.rho[a], identity_nt(self.rho[a].src))
            for a in self.dom.group.elements
        )


def identity_equivariant(c: GCategory) -> EquivFunctor:
    e = identity_functor(c.base)
    return EquivFunctor(
        dom=c, cod=c, e=e,
        rho=tuple(identity_nt(c.action[a]) for a in c.group.elements),
    )


def strict_equivariant(e: LinFunctor, dom: GCategory, cod: GCategory) -> EquivFunctor:
    """Wrap a functor that commutes with the actions on the nose."""
    rho = []
    for a in dom.group.elements:
        left = compose_functors(cod.action[a], e)
        right = compose_functors(e, dom.action[a])
        if not functor_equal(left, right):
            raise StructureError(f"functor does not commute strictly with the action at a={a}")
        rho.append(identity_nt(left))
    return EquivFunctor(dom=dom, cod=cod, e=e, rho=tuple(rho))


def validate_equivariant(f: EquivFunctor) -> VerificationReport:
    """Check adjuster boundaries, invertibility, and the cocycle condition."""
    rep = VerificationReport(subject="equivariant functor")
    g = f.dom.group
    base_cod = f.cod.base
    for a in g.elements:
        nt = f.rho[a]
        ok_b = functor_equal(nt.src, compose_functors(f.cod.action[a], f.e)) and functor_equal(
            nt.tgt, compose_functors(f.e, f.dom.action[a])
        )
        rep.add("adjuster.boundary", ok_b, locus=f"a={a}")
        for x in f.dom.base.objects:
            rep.add(
                "adjuster.invertible",
                is_invertible_morphism(base_cod, nt.at(x)),
                locus=f"a={a},x={x}",
            )
    for a in g.elements:
        for b in g.elements:
            ba = g.mul(b, a)
            for x in f.dom.base.objects:
                mapped = f.cod.action[b].apply(f.rho[a].at(x))
                expected = compose_morphisms(
                    base_cod, f.rho[b].at(f.dom.act_obj(a, x)), mapped
                )
                rep.add(
                    "adjuster.cocycle",
                    f.rho[ba].at(x) == expected,
                    locus=f"a={a},b={b},x={x}",
                )
    return rep


def compose_equivariant(f2: EquivFunctor, f1: EquivFunctor) -> EquivFunctor:
    """Composite (E', rho')(E, rho) = (E'E, (E' rho_a)(rho'_a E))."""
    if f1.cod != f2.dom:
        raise BoundaryError("equivariant composition boundary mismatch")
    e = compose_functors(f2.e, f1.e)
    rho = []
    for a in f1.dom.group.elements:
        first = whisker_right(f2.rho[a], f1.e)
        second = whisker_left(f2.e, f1.rho[a])
        rho.append(nt_vertical(second, first))
    return EquivFunctor(dom=f1.dom, cod=f2.cod, e=e, rho=tuple(rho))


@dataclass
class EquivMorphism:
    """A 2-cell between equivariant functors; compatibility with the
    adjusters is checked by validate_equiv_morphism."""

    eta: NatTrans


def validate_equiv_morphism(
    m: EquivMorphism, src: EquivFunctor, tgt: EquivFunctor
) -> VerificationReport:
    """Check (eta A_a) rho_a = rho'_a (A'_a eta) for every group element."""
    rep = VerificationReport(subject="equivariant 2-cell")
    rep.add(
        "boundary",
        functor_equal(m.eta.src, src.e) and functor_equal(m.eta.tgt, tgt.e),
    )
    if not rep.passed:
        return rep
    base_cod = src.cod.base
    for a in src.dom.group.elements:
        for x in src.dom.base.objects:
            lhs = compose_morphisms(
                base_cod, m.eta.at(src.dom.act_obj(a, x)), src.rho[a].at(x)
            )
            rhs = compose_morphisms(
                base_cod, tgt.rho[a].at(x), src.cod.action[a].apply(m.eta.at(x))
            )
            rep.add("square", lhs == rhs, locus=f"a={a},x={x}")
    return rep


def equiv_morphism_vertical(b: EquivMorphism, a: EquivMorphism) -> EquivMorphism:
    return EquivMorphism(nt_vertical(b.eta, a.eta))


def equiv_morphism_horizontal(b: EquivMorphism, a: EquivMorphism) -> EquivMorphism:
    return EquivMorphism(nt_horizontal(b.eta, a.eta))


def equivariant_equal(f: EquivFunctor, g: EquivFunctor) -> bool:
    """Exact equality of equivariant functors, adjusters included."""
    if not (f.dom == g.dom and f.cod == g.cod and functor_equal(f.e, g.e)):
        return False
    return all(
        nt_equal(f.rho[a], g.rho[a]) for a in f.dom.group.elements
    )
