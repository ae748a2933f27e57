"""The two 2-functors between G-categories and G-graded categories.

Taking orbit categories sends an equivariant functor (E, rho) to the unique
degree-preserving functor (E, rho)/G that the universal property of the
covering (P, psi) produces, and a 2-cell eta to the 2-cell with components
P'(eta x).  Taking smash products sends a degree-preserving functor (H, r)
to (H, r)#G with x^(a) mapped to (Hx)^(a r_x), and a 2-cell theta to the
2-cell with components theta x.

The unit and counit data connecting the two constructions:

    epsilon_C:  C -> (C/G)#G        strictly 2-natural equivalence
    epsilon'_C: (C/G)#G -> C        quasi-inverse, natural up to Psi
    omega_B:    B -> (B#G)/G        natural up to Phi
    omega'_B:   (B#G)/G -> B        strictly 2-natural quasi-inverse

with the exact equalities epsilon' epsilon = id and omega' omega = id, the
natural isomorphisms Theta: id -> epsilon epsilon' and Xi: omega omega' -> id,
and the two triangle identities ((omega'_B)#G) epsilon_{B#G} = id and
omega'_{C/G} (epsilon_C)/G = id.  verify_main_theorem runs the whole battery
over a fixture collection.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .covering import InvFunctor, compose_equiv_then_inv, is_covering, validate_invariant
from .exactlin import Mat
from .gcat import (
    EquivFunctor,
    EquivMorphism,
    GCategory,
    compose_equivariant,
    equiv_morphism_horizontal,
    equiv_morphism_vertical,
    equivariant_equal,
    identity_equivariant,
    strict_equivariant,
    validate_action,
    validate_equiv_morphism,
    validate_equivariant,
)
from .graded import (
    DegFunctor,
    DegMorphism,
    GradedCat,
    compose_deg_functors,
    deg_functor_equal,
    deg_morphism_equal,
    deg_morphism_horizontal,
    deg_morphism_vertical,
    identity_deg_functor,
    validate_deg_functor,
    validate_deg_morphism,
    validate_grading,
)
from .lincat import (
    LinFunctor,
    Morphism,
    NatTrans,
    StructureError,
    compose_functors,
    identity_functor,
    identity_nt,
    is_invertible_morphism,
    nt_equal,
    nt_vertical,
    validate_category,
    whisker_left,
    whisker_right,
)
from .orbit import OrbitCat, factorize_through_P, orbit_category
from .report import VerificationReport
from .smash import SmashCat, smash_obj_id, smash_obj_pair, smash_product, verify_free_action


def slash_on_functor(e: EquivFunctor) -> DegFunctor:
    """(E, rho)/G: the functor between orbit categories induced by the
    universal property; strictly degree-preserving."""
    orb_dom = orbit_category(e.dom)
    orb_cod = orbit_category(e.cod)
    composed = compose_equiv_then_inv(orb_cod.p, e)
    h = factorize_through_P(orb_dom, composed)
    return DegFunctor(
        dom=orb_dom.carrier,
        cod=orb_cod.carrier,
        h=h,
        r={x: 0 for x in orb_dom.carrier.base.objects},
    )


def slash_on_2cell(m: EquivMorphism, src: EquivFunctor, tgt: EquivFunctor) -> DegMorphism:
    """eta/G, with component P'(eta x) at the orbit object P x."""
    orb_cod = orbit_category(src.cod)
    h_src = slash_on_functor(src)
    h_tgt = slash_on_functor(tgt)
    comps = {
        x: orb_cod.p.f.apply(m.eta.at(x)) for x in src.dom.base.objects
    }
    return DegMorphism(NatTrans(src=h_src.h, tgt=h_tgt.h, components=comps))


def hash_on_functor(f: DegFunctor) -> EquivFunctor:
    """(H, r)#G: x^(a) -> (Hx)^(a r_x), identically on morphism coefficients;
    strictly equivariant."""
    sm_dom = smash_product(f.dom)
    sm_cod = smash_product(f.cod)
    g = f.dom.group
    ring = f.dom.base.ring

    obj_map = {}
    for u in sm_dom.carrier.base.objects:
        x, a = smash_obj_pair(u)
        obj_map[u] = smash_obj_id(f.h.obj(x), g.mul(a, f.r[x]))

    mats = {}
    for (u, v) in sm_dom.carrier.base.pairs():
        x, a = smash_obj_pair(u)
        y, bb = smash_obj_pair(v)
        d = g.mul(g.inv(bb), a)
        pos_f = f.dom.degree_positions(x, y, d)
        hx, hy = f.h.obj(x), f.h.obj(y)
        d_out = g.mul(g.mul(g.inv(f.r[y]), d), f.r[x])
        pos_o = f.cod.degree_positions(hx, hy, d_out)
        full = f.h.mat(x, y)
        outside = set(range(full.rows)) - set(pos_o)
        for j in pos_f:
            for i in outside:
                if full.at(i, j) != ring.zero:
                    raise StructureError(
                        "functor is not degree-preserving; run validate_deg_functor"
                    )
        if pos_f and pos_o:
            rows = [[full.at(i, j) for j in pos_f] for i in pos_o]
            mats[(u, v)] = Mat.from_rows(ring, rows)
        else:
            mats[(u, v)] = Mat.zeros(ring, len(pos_o), len(pos_f))
    e = LinFunctor(
        dom=sm_dom.carrier.base, cod=sm_cod.carrier.base, obj_map=obj_map, hom_mats=mats
    )
    return strict_equivariant(e, sm_dom.carrier, sm_cod.carrier)


def hash_on_2cell(m: DegMorphism, src: DegFunctor, tgt: DegFunctor) -> EquivMorphism:
    """theta#G, with component theta x at every x^(a)."""
    e_src = hash_on_functor(src)
    e_tgt = hash_on_functor(tgt)
    g = src.dom.group
    ring = src.dom.base.ring
    comps = {}
    for u in e_src.dom.base.objects:
        x, a = smash_obj_pair(u)
        comp = m.theta.at(x)
        hx, ix = src.h.obj(x), tgt.h.obj(x)
        d = g.mul(g.inv(tgt.r[x]), src.r[x])
        pos = src.cod.degree_positions(hx, ix, d)
        keep = set(pos)
        for i, c in enumerate(comp.coeffs):
            if c != ring.zero and i not in keep:
                raise StructureError(
                    "2-cell component is not homogeneous; run validate_deg_morphism"
                )
        comps[u] = Morphism(
            e_src.e.obj(u), e_tgt.e.obj(u), tuple(comp.coeffs[i] for i in pos)
        )
    return EquivMorphism(NatTrans(src=e_src.e, tgt=e_tgt.e, components=comps))


def epsilon(c: GCategory) -> EquivFunctor:
    """epsilon_C: C -> (C/G)#G, x -> (Px)^(1), with adjuster psi_a x."""
    orb = orbit_category(c)
    sm = smash_product(orb.carrier)
    base = c.base
    ring = base.ring
    obj_map = {x: sm.obj_id(x, 0) for x in base.objects}
    mats = {}
    for (x, y) in base.pairs():
        n = base.dim(x, y)
        mats[(x, y)] = Mat.identity(ring, n)
    e = LinFunctor(dom=base, cod=sm.carrier.base, obj_map=obj_map, hom_mats=mats)
    rho = []
    for a in c.group.elements:
        comps = {}
        for x in base.objects:
            ax = c.act_obj(a, x)
            comps[x] = Morphism(
                sm.obj_id(x, a), sm.obj_id(ax, 0), base.id_coeffs(ax)
            )
        rho.append(
            NatTrans(
                src=compose_functors(sm.carrier.action[a], e),
                tgt=compose_functors(e, c.action[a]),
                components=comps,
            )
        )
    return EquivFunctor(dom=c, cod=sm.carrier, e=e, rho=tuple(rho))


def epsilon_prime(c: GCategory) -> EquivFunctor:
    """epsilon'_C: (C/G)#G -> C, (Px)^(a) -> A_a x; on a morphism of degree
    b^{-1}a it applies A_b to the block component; strictly equivariant."""
    orb = orbit_category(c)
    sm = smash_product(orb.carrier)
    g = c.group
    base = c.base
    obj_map = {}
    for u in sm.carrier.base.objects:
        x, a = smash_obj_pair(u)
        obj_map[u] = c.act_obj(a, x)
    mats = {}
    for (u, v) in sm.carrier.base.pairs():
        x, a = smash_obj_pair(u)
        y, bb = smash_obj_pair(v)
        blk = g.mul(g.inv(bb), a)
        src_obj = c.act_obj(blk, x)
        mats[(u, v)] = c.action[bb].mat(src_obj, y)
    e = LinFunctor(dom=sm.carrier.base, cod=base, obj_map=obj_map, hom_mats=mats)
    return strict_equivariant(e, sm.carrier, c)


def omega(b: GradedCat) -> DegFunctor:
    """omega_B: B -> (B#G)/G, x -> P(x^(1)); a degree-d basis vector lands in
    block d; strictly degree-preserving."""
    sm = smash_product(b)
    orb = orbit_category(sm.carrier)
    base = b.base
    ring = base.ring
    obj_map = {x: sm.obj_id(x, 0) for x in base.objects}
    mats = {}
    for (x, y) in base.pairs():
        u, v = sm.obj_id(x, 0), sm.obj_id(y, 0)
        rows = orb.carrier.base.dim(u, v)
        cols = []
        for i in range(base.dim(x, y)):
            d = b.degrees(x, y)[i]
            local = b.degree_positions(x, y, d).index(i)
            pos = orb.block_offset(u, v, d) + local
            col = [ring.zero] * rows
            col[pos] = ring.one
            cols.append(tuple(col))
        mats[(x, y)] = Mat.from_columns(ring, rows, cols)
    h = LinFunctor(dom=base, cod=orb.carrier.base, obj_map=obj_map, hom_mats=mats)
    return DegFunctor(dom=b, cod=orb.carrier, h=h, r={x: 0 for x in base.objects})


def omega_prime(b: GradedCat) -> DegFunctor:
    """omega'_B: (B#G)/G -> B, the universal factorization of (Q, id) through
    (P, psi), with degree adjuster r(P(x^(a))) = a."""
    sm = smash_product(b)
    orb = orbit_category(sm.carrier)
    h = factorize_through_P(orb, sm.q)
    r = {}
    for u in orb.carrier.base.objects:
        _, a = smash_obj_pair(u)
        r[u] = a
    return DegFunctor(dom=orb.carrier, cod=b, h=h, r=r)


def theta_iso(c: GCategory) -> NatTrans:
    """Theta: id -> epsilon_C epsilon'_C on (C/G)#G, component psi_a x."""
    eps = epsilon(c)
    epsp = epsilon_prime(c)
    sm_base = eps.cod.base
    comps = {}
    for u in sm_base.objects:
        x, a = smash_obj_pair(u)
        ax = c.act_obj(a, x)
        comps[u] = Morphism(u, smash_obj_id(ax, 0), c.base.id_coeffs(ax))
    return NatTrans(
        src=identity_functor(sm_base),
        tgt=compose_functors(eps.e, epsp.e),
        components=comps,
    )


def xi_iso(b: GradedCat) -> NatTrans:
    """Xi: omega_B omega'_B -> id on (B#G)/G, component psi_a(x^(1))."""
    om = omega(b)
    omp = omega_prime(b)
    orb = orbit_category(smash_product(b).carrier)
    comps = {}
    for u in orb.carrier.base.objects:
        x, a = smash_obj_pair(u)
        comps[u] = orb.p.phi[a].at(smash_obj_id(x, 0))
    return NatTrans(
        src=compose_functors(om.h, omp.h),
        tgt=identity_functor(orb.carrier.base),
        components=comps,
    )


def psi_square(e: EquivFunctor) -> NatTrans:
    """Psi: epsilon'_{C'} ((E, rho)/G)#G -> (E, rho) epsilon'_C, component rho_a x."""
    hashed = hash_on_functor(slash_on_functor(e))
    epsp_cod = epsilon_prime(e.cod)
    epsp_dom = epsilon_prime(e.dom)
    src = compose_functors(epsp_cod.e, hashed.e)
    tgt = compose_functors(e.e, epsp_dom.e)
    comps = {}
    for u in src.dom.objects:
        x, a = smash_obj_pair(u)
        comps[u] = e.rho[a].at(x)
    return NatTrans(src=src, tgt=tgt, components=comps)


def phi_square(f: DegFunctor) -> NatTrans:
    """Phi: omega_{B'} (H, r) -> ((H, r)#G)/G omega_B, component psi'_{r_x}((Hx)^(1))."""
    slashed = slash_on_functor(hash_on_functor(f))
    om_dom = omega(f.dom)
    om_cod = omega(f.cod)
    orb_cod = orbit_category(smash_product(f.cod).carrier)
    src = compose_functors(om_cod.h, f.h)
    tgt = compose_functors(slashed.h, om_dom.h)
    comps = {}
    for x in f.dom.base.objects:
        hx = f.h.obj(x)
        comps[x] = orb_cod.p.phi[f.r[x]].at(smash_obj_id(hx, 0))
    return NatTrans(src=src, tgt=tgt, components=comps)


def verify_triangles(c: GCategory | None = None, b: GradedCat | None = None) -> VerificationReport:
    """The two triangle identities, as exact equalities of 1-cells."""
    rep = VerificationReport(subject="triangle identities")
    if b is not None:
        sm = smash_product(b)
        lhs = compose_equivariant(hash_on_functor(omega_prime(b)), epsilon(sm.carrier))
        rhs = identity_equivariant(sm.carrier)
        rep.add("triangle.sharp", equivariant_equal(lhs, rhs))
    if c is not None:
        orb = orbit_category(c)
        lhs = compose_deg_functors(omega_prime(orb.carrier), slash_on_functor(epsilon(c)))
        rhs = identity_deg_functor(orb.carrier)
        rep.add("triangle.slash", deg_functor_equal(lhs, rhs))
    return rep


@dataclass
class TheoremFixtures:
    """Instances over which the duality is machine-checked.

    2-cells are given with their boundary 1-cells; composable chains among
    the 1-cells and 2-cells are detected automatically.
    """

    gcats: list = field(default_factory=list)
    gradeds: list = field(default_factory=list)
    equiv_cells: list = field(default_factory=list)
    equiv_2cells: list = field(default_factory=list)
    deg_cells: list = field(default_factory=list)
    deg_2cells: list = field(default_factory=list)


@dataclass
class TheoremReport:
    """Per-fixture verification records for the full duality battery."""

    sections: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(rep.passed for rep in self.sections.values())

    def section(self, name: str) -> VerificationReport:
        if name not in self.sections:
            self.sections[name] = VerificationReport(subject=name)
        return self.sections[name]

    def all_checks(self):
        for name in self.sections:
            for chk in self.sections[name].checks:
                yield f"{name}.{chk.name}", chk

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "sections": {k: v.to_dict() for k, v in self.sections.items()},
        }


def _nt_iso_checks(rep, base, nt, prefix):
    for x, m in nt.components.items():
        rep.add(
            f"{prefix}.invertible",
            is_invertible_morphism(base, m),
            locus=f"x={x}",
        )


def _check_gcat(rep: VerificationReport, c: GCategory) -> None:
    valid = validate_action(c).passed
    rep.add("action.valid", valid)
    if not valid:
        # the orbit construction presupposes a strict action.
        return
    orb = orbit_category(c)
    rep.add("orbit.category.valid", validate_category(orb.carrier.base).passed)
    rep.add("orbit.grading.valid", validate_grading(orb.carrier).passed)
    rep.add("orbit.p.invariant", validate_invariant(orb.p).passed)
    rep.add("orbit.p.covering", is_covering(orb.p).passed)

    eps = epsilon(c)
    epsp = epsilon_prime(c)
    rep.add("epsilon.equivariant", validate_equivariant(eps).passed)
    rep.add("epsilon_prime.equivariant", validate_equivariant(epsp).passed)
    rep.add("epsilon_prime.strict", epsp.is_strict())

    composite = compose_equivariant(epsp, eps)
    rep.add("eq1.retraction", equivariant_equal(composite, identity_equivariant(c)))

    theta = theta_iso(c)
    sm = smash_product(orb.carrier)
    _nt_iso_checks(rep, sm.carrier.base, theta, "eq2.theta")
    other = compose_equivariant(eps, epsp)
    sq = validate_equiv_morphism(EquivMorphism(theta), identity_equivariant(sm.carrier), other)
    rep.add("eq2.theta.two_cell", sq.passed,
            detail="" if sq.passed else sq.failures()[0].locus)

    tri = verify_triangles(c=c)
    rep.extend(tri)

    ident = identity_equivariant(c)
    rep.add(
        "slash.identity",
        deg_functor_equal(slash_on_functor(ident), identity_deg_functor(orb.carrier)),
    )


def _check_graded(rep: VerificationReport, b: GradedCat) -> None:
    cat_valid = validate_category(b.base).passed
    grading_valid = validate_grading(b).passed
    rep.add("category.valid", cat_valid)
    rep.add("grading.valid", grading_valid)
    if not (cat_valid and grading_valid):
        return
    sm = smash_product(b)
    rep.add("smash.category.valid", validate_category(sm.carrier.base).passed)
    rep.add("smash.action.valid", validate_action(sm.carrier).passed)
    rep.add("smash.action.free", verify_free_action(sm).passed)
    rep.add("smash.q.invariant", validate_invariant(sm.q).passed)
    rep.add("smash.q.covering", is_covering(sm.q).passed)

    om = omega(b)
    omp = omega_prime(b)
    rep.add("omega.degree_preserving", validate_deg_functor(om).passed)
    rep.add("omega.strict", om.is_strict())
    rep.add("omega_prime.degree_preserving", validate_deg_functor(omp).passed)

    composite = compose_deg_functors(omp, om)
    rep.add("eq3.retraction", deg_functor_equal(composite, identity_deg_functor(b)))

    xi = xi_iso(b)
    orb = orbit_category(sm.carrier)
    _nt_iso_checks(rep, orb.carrier.base, xi, "eq4.xi")
    other = compose_deg_functors(om, omp)
    sq = validate_deg_morphism(DegMorphism(xi), other, identity_deg_functor(orb.carrier))
    rep.add("eq4.xi.two_cell", sq.passed,
            detail="" if sq.passed else sq.failures()[0].locus)

    tri = verify_triangles(b=b)
    rep.extend(tri)

    ident = identity_deg_functor(b)
    rep.add(
        "hash.identity",
        equivariant_equal(hash_on_functor(ident), identity_equivariant(sm.carrier)),
    )


def _check_equiv_cell(rep: VerificationReport, e: EquivFunctor) -> None:
    valid = validate_equivariant(e).passed
    rep.add("cell.valid", valid)
    if not valid:
        # descending an invalid cell is undefined; report and stop.
        return
    slashed = slash_on_functor(e)
    rep.add("slash.degree_preserving", validate_deg_functor(slashed).passed)
    rep.add("slash.strict", slashed.is_strict())

    lhs = compose_equivariant(epsilon(e.cod), e)
    rhs = compose_equivariant(hash_on_functor(slashed), epsilon(e.dom))
    rep.add("epsilon.natural", equivariant_equal(lhs, rhs))

    psi = psi_square(e)
    _nt_iso_checks(rep, e.cod.base, psi, "psi")


def _check_deg_cell(rep: VerificationReport, f: DegFunctor) -> None:
    valid = validate_deg_functor(f).passed
    rep.add("cell.valid", valid)
    if not valid:
        return
    hashed = hash_on_functor(f)
    rep.add("hash.equivariant", validate_equivariant(hashed).passed)
    rep.add("hash.strict", hashed.is_strict())

    lhs = compose_deg_functors(omega_prime(f.cod), slash_on_functor(hashed))
    rhs = compose_deg_functors(f, omega_prime(f.dom))
    rep.add("omega_prime.natural", deg_functor_equal(lhs, rhs))

    phi = phi_square(f)
    orb_cod = orbit_category(smash_product(f.cod).carrier)
    _nt_iso_checks(rep, orb_cod.carrier.base, phi, "phi")


def _check_equiv_2cell(rep, m: EquivMorphism, src: EquivFunctor, tgt: EquivFunctor) -> None:
    valid = validate_equiv_morphism(m, src, tgt).passed
    rep.add("two_cell.valid", valid)
    if not valid:
        # the remaining checks presuppose the equivariance square.
        return
    slashed = slash_on_2cell(m, src, tgt)
    rep.add(
        "slash.two_cell.valid",
        validate_deg_morphism(slashed, slash_on_functor(src), slash_on_functor(tgt)).passed,
    )
    hashed = hash_on_2cell(slashed, slash_on_functor(src), slash_on_functor(tgt))

    lhs = whisker_left(epsilon(src.cod).e, m.eta)
    rhs = whisker_right(hashed.eta, epsilon(src.dom).e)
    rep.add("epsilon.natural.2cell", nt_equal(lhs, rhs))

    lhs = nt_vertical(whisker_right(m.eta, epsilon_prime(src.dom).e), psi_square(src))
    rhs = nt_vertical(psi_square(tgt), whisker_left(epsilon_prime(src.cod).e, hashed.eta))
    rep.add("psi.compatible", nt_equal(lhs, rhs))

    ident = EquivMorphism(identity_nt(src.e))
    rep.add(
        "slash.identity_2cell",
        deg_morphism_equal(
            slash_on_2cell(ident, src, src),
            DegMorphism(identity_nt(slash_on_functor(src).h)),
        ),
    )


def _check_deg_2cell(rep, m: DegMorphism, src: DegFunctor, tgt: DegFunctor) -> None:
    valid = validate_deg_morphism(m, src, tgt).passed
    rep.add("two_cell.valid", valid)
    if not valid:
        return
    hashed = hash_on_2cell(m, src, tgt)
    rep.add(
        "hash.two_cell.valid",
        validate_equiv_morphism(hashed, hash_on_functor(src), hash_on_functor(tgt)).passed,
    )
    slashed = slash_on_2cell(hashed, hash_on_functor(src), hash_on_functor(tgt))

    lhs = whisker_left(omega_prime(src.cod).h, slashed.theta)
    rhs = whisker_right(m.theta, omega_prime(src.dom).h)
    rep.add("omega_prime.natural.2cell", nt_equal(lhs, rhs))

    lhs = nt_vertical(whisker_right(slashed.theta, omega(src.dom).h), phi_square(src))
    rhs = nt_vertical(phi_square(tgt), whisker_left(omega(src.cod).h, m.theta))
    rep.add("phi.compatible", nt_equal(lhs, rhs))

    ident = DegMorphism(identity_nt(src.h))
    rep.add(
        "hash.identity_2cell",
        nt_equal(
            hash_on_2cell(ident, src, src).eta,
            identity_nt(hash_on_functor(src).e),
        ),
    )


def verify_main_theorem(fx: TheoremFixtures) -> TheoremReport:
    """Run the full duality battery over the fixture collection."""
    report = TheoremReport()

    def guarded(sec, thunk):
        # a construction failing on bad input is a failed check, not a crash.
        try:
            thunk(sec)
        except (ValueError, ArithmeticError) as exc:
            sec.add("error", False, detail=str(exc))

    for name, c in fx.gcats:
        guarded(report.section(f"gcat.{name}"), lambda s, c=c: _check_gcat(s, c))
    for name, b in fx.gradeds:
        guarded(report.section(f"graded.{name}"), lambda s, b=b: _check_graded(s, b))
    for name, e in fx.equiv_cells:
        guarded(report.section(f"equiv_cell.{name}"), lambda s, e=e: _check_equiv_cell(s, e))
    for name, f in fx.deg_cells:
        guarded(report.section(f"deg_cell.{name}"), lambda s, f=f: _check_deg_cell(s, f))
    for name, m, src, tgt in fx.equiv_2cells:
        guarded(
            report.section(f"equiv_2cell.{name}"),
            lambda s, m=m, a=src, b=tgt: _check_equiv_2cell(s, m, a, b),
        )
    for name, m, src, tgt in fx.deg_2cells:
        guarded(
            report.section(f"deg_2cell.{name}"),
            lambda s, m=m, a=src, b=tgt: _check_deg_2cell(s, m, a, b),
        )

    # composable 1-cell chains: functoriality of composition
    for n1, e1 in fx.equiv_cells:
        for n2, e2 in fx.equiv_cells:
            if e1.cod == e2.dom:

                def chain(sec, e1=e1, e2=e2):
                    lhs = slash_on_functor(compose_equivariant(e2, e1))
                    rhs = compose_deg_functors(slash_on_functor(e2), slash_on_functor(e1))
                    sec.add("slash.composition", deg_functor_equal(lhs, rhs))

                guarded(report.section(f"slash.composition.{n2}.after.{n1}"), chain)
    for n1, f1 in fx.deg_cells:
        for n2, f2 in fx.deg_cells:
            if f1.cod == f2.dom:

                def chain(sec, f1=f1, f2=f2):
                    lhs = hash_on_functor(compose_deg_functors(f2, f1))
                    rhs = compose_equivariant(hash_on_functor(f2), hash_on_functor(f1))
                    sec.add("hash.composition", equivariant_equal(lhs, rhs))

                guarded(report.section(f"hash.composition.{n2}.after.{n1}"), chain)

    # vertical composites of 2-cells
    for n1, m1, s1, t1 in fx.equiv_2cells:
        for n2, m2, s2, t2 in fx.equiv_2cells:
            if equivariant_equal(t1, s2):

                def vert(sec, m1=m1, m2=m2, s1=s1, t1=t1, s2=s2, t2=t2):
                    lhs = slash_on_2cell(equiv_morphism_vertical(m2, m1), s1, t2)
                    rhs = deg_morphism_vertical(
                        slash_on_2cell(m2, s2, t2), slash_on_2cell(m1, s1, t1)
                    )
                    sec.add("slash.vertical", deg_morphism_equal(lhs, rhs))

                guarded(report.section(f"slash.vertical.{n2}.after.{n1}"), vert)
    for n1, m1, s1, t1 in fx.deg_2cells:
        for n2, m2, s2, t2 in fx.deg_2cells:
            if deg_functor_equal(t1, s2):

                def vert(sec, m1=m1, m2=m2, s1=s1, t1=t1, s2=s2, t2=t2):
                    lhs = hash_on_2cell(deg_morphism_vertical(m2, m1), s1, t2)
                    rhs = equiv_morphism_vertical(
                        hash_on_2cell(m2, s2, t2), hash_on_2cell(m1, s1, t1)
                    )
                    sec.add("hash.vertical", nt_equal(lhs.eta, rhs.eta))

                guarded(report.section(f"hash.vertical.{n2}.after.{n1}"), vert)

    # horizontal composites of 2-cells
    for n1, m1, s1, t1 in fx.equiv_2cells:
        for n2, m2, s2, t2 in fx.equiv_2cells:
            if s1.cod == s2.dom:

                def horiz(sec, m1=m1, m2=m2, s1=s1, t1=t1, s2=s2, t2=t2):
                    lhs = slash_on_2cell(
                        equiv_morphism_horizontal(m2, m1),
                        compose_equivariant(s2, s1),
                        compose_equivariant(t2, t1),
                    )
                    rhs = deg_morphism_horizontal(
                        slash_on_2cell(m2, s2, t2), slash_on_2cell(m1, s1, t1)
                    )
                    sec.add("slash.horizontal", deg_morphism_equal(lhs, rhs))

                guarded(report.section(f"slash.horizontal.{n2}.beside.{n1}"), horiz)
    for n1, m1, s1, t1 in fx.deg_2cells:
        for n2, m2, s2, t2 in fx.deg_2cells:
            if s1.cod == s2.dom:

                def horiz(sec, m1=m1, m2=m2, s1=s1, t1=t1, s2=s2, t2=t2):
                    lhs = hash_on_2cell(
                        deg_morphism_horizontal(m2, m1),
                        compose_deg_functors(s2, s1),
                        compose_deg_functors(t2, t1),
                    )
                    rhs = equiv_morphism_horizontal(
                        hash_on_2cell(m2, s2, t2), hash_on_2cell(m1, s1, t1)
                    )
                    sec.add("hash.horizontal", nt_equal(lhs.eta, rhs.eta))

                guarded(report.section(f"hash.horizontal.{n2}.beside.{n1}"), horiz)

    return report
