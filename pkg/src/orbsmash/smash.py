"""Smash products of group-graded linear categories.

The smash product B#G replaces each object x by a G-indexed family x^(a) and
puts (B#G)(x^(a), y^(b)) equal to the degree b^{-1}a component of B(x, y),
with composition inherited from B.  The group acts freely by c . x^(a) =
x^(ca), identically on morphism coefficients, and the forgetful functor
Q: B#G -> B is a G-covering with trivial adjuster.
"""

from __future__ import annotations

from dataclasses import dataclass

from .covering import InvFunctor
from .exactlin import Mat, zero_vec
from .gcat import GCategory
from .graded import GradedCat
from .lincat import (
    LinCat,
    LinFunctor,
    NatTrans,
    StructureError,
    compose_functors,
)
from .report import VerificationReport


def smash_obj_id(x: str, a: int) -> str:
    return f"{x}#{a}"


def smash_obj_pair(obj: str) -> tuple:
    x, _, a = obj.rpartition("#")
    return x, int(a)


@dataclass
class SmashCat:
    """A smash product with its free action and canonical covering."""

    source: GradedCat
    carrier: GCategory
    q: InvFunctor

    def obj_id(self, x: str, a: int) -> str:
        return smash_obj_id(x, a)

    def obj_pair(self, obj: str) -> tuple:
        return smash_obj_pair(obj)


def smash_product(b: GradedCat) -> SmashCat:
    """Construct B#G, its free G-action, and the covering (Q, id)."""
    base, g = b.base, b.group
    ring = base.ring
    oid = smash_obj_id

    objects = tuple(oid(x, a) for x in base.objects for a in g.elements)

    hom = {}
    positions = {}
    for x in base.objects:
        for y in base.objects:
            for a in g.elements:
                for bb in g.elements:
                    d = g.mul(g.inv(bb), a)
                    pos = b.degree_positions(x, y, d)
                    positions[(oid(x, a), oid(y, bb))] = pos
                    labels = tuple(base.basis(x, y)[i] for i in pos)
                    if labels:
                        hom[(oid(x, a), oid(y, bb))] = labels

    identity = {}
    for x in base.objects:
        idv = base.id_coeffs(x)
        deg1 = b.degree_positions(x, x, 0)
        outside = [i for i, c in enumerate(idv) if c != ring.zero and i not in deg1]
        if outside:
            raise StructureError(
                f"identity of {x} is not concentrated in degree 1; run validate_grading"
            )
        for a in g.elements:
            identity[oid(x, a)] = tuple(idv[i] for i in deg1)

    comp = {}
    for x in base.objects:
        for y in base.objects:
            for z in base.objects:
                for a in g.elements:
                    for bb in g.elements:
                        kf = (oid(x, a), oid(y, bb))
                        if kf not in hom:
                            continue
                        for cc in g.elements:
                            kg = (oid(y, bb), oid(z, cc))
                            if kg not in hom:
                                continue
                            ko = (oid(x, a), oid(z, cc))
                            pos_f = positions[kf]
                            pos_g = positions[kg]
                            pos_o = positions[ko]
                            table = []
                            for j in pos_g:
                                gm = base.basis_morphism(y, z, j)
                                row = []
                                for i in pos_f:
                                    fm = base.basis_morphism(x, y, i)
                                    prod = base_compose(b, gm, fm, pos_o)
                                    row.append(prod)
                                table.append(tuple(row))
                            comp[(kf[0], kf[1], oid(z, cc))] = tuple(table)

    carrier_base = LinCat(ring, objects, hom, identity, comp)

    action = []
    for cc in g.elements:
        obj_map = {oid(x, a): oid(x, g.mul(cc, a)) for x in base.objects for a in g.elements}
        mats = {}
        for (u, v) in carrier_base.pairs():
            n = carrier_base.dim(u, v)
            mats[(u, v)] = Mat.identity(ring, n)
        action.append(
            LinFunctor(dom=carrier_base, cod=carrier_base, obj_map=obj_map, hom_mats=mats)
        )
    carrier = GCategory(base=carrier_base, group=g, action=tuple(action))

    q_mats = {}
    for (u, v) in carrier_base.pairs():
        x, _ = smash_obj_pair(u)
        y, _ = smash_obj_pair(v)
        pos = positions[(u, v)]
        cols = []
        for k in pos:
            col = list(zero_vec(ring, base.dim(x, y)))
            col[k] = ring.one
            cols.append(tuple(col))
        q_mats[(u, v)] = Mat.from_columns(ring, base.dim(x, y), cols)
    q_functor = LinFunctor(
        dom=carrier_base,
        cod=base,
        obj_map={oid(x, a): x for x in base.objects for a in g.elements},
        hom_mats=q_mats,
    )
    phi = []
    for a in g.elements:
        comp_q = compose_functors(q_functor, action[a])
        nt = NatTrans(
            src=q_functor,
            tgt=comp_q,
            components={u: base.id_morphism(q_functor.obj(u)) for u in objects},
        )
        phi.append(nt)
    q = InvFunctor(dom=carrier, cod=base, f=q_functor, phi=tuple(phi))
    return SmashCat(source=b, carrier=carrier, q=q)


def base_compose(b: GradedCat, gm, fm, pos_out) -> tuple:
    """Compose in the base and restrict to the expected degree positions.

    The grading forces the support of the product into one degree component;
    any stray coefficient means the input grading was invalid.
    """
    from .lincat import compose_morphisms

    prod = compose_morphisms(b.base, gm, fm)
    ring = b.base.ring
    keep = set(pos_out)
    for i, c in enumerate(prod.coeffs):
        if c != ring.zero and i not in keep:
            raise StructureError(
                "composition leaves the expected degree component; run validate_grading"
            )
    return tuple(prod.coeffs[i] for i in pos_out)


def verify_free_action(s: SmashCat) -> VerificationReport:
    """The action permutes the objects x^(a) by left translation and fixes
    morphism coefficients; no nonidentity element fixes an object."""
    rep = VerificationReport(subject="free action")
    g = s.carrier.group
    for cc in g.elements:
        f = s.carrier.action[cc]
        for obj in s.carrier.base.objects:
            x, a = s.obj_pair(obj)
            rep.add(
                "translation",
                f.obj(obj) == s.obj_id(x, g.mul(cc, a)),
                locus=f"c={cc},obj={obj}",
            )
            if cc != 0:
                rep.add("free", f.obj(obj) != obj, locus=f"c={cc},obj={obj}")
        for (u, v) in s.carrier.base.pairs():
            rep.add(
                "coefficients.fixed",
                f.mat(u, v).is_identity(),
                locus=f"c={cc},u={u},v={v}",
            )
    return rep


def q_factorization(s: SmashCat) -> LinFunctor:
    """The equivalence (B#G)/G -> B induced by Q, via the universal property.

    Q is object-surjective, so density of the factored functor needs no
    witnesses; full faithfulness is certified by matrix inversion.
    """
    from .orbit import factorize_through_P, orbit_category

    orb = orbit_category(s.carrier)
    h = factorize_through_P(orb, s.q)
    return h
