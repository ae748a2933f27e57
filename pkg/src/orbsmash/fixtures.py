"""Small worked instances used by the test-suite and the documentation.

Every builder returns a fresh structure, so callers may mutate freely; two
calls with the same ring produce structurally equal values.  The negative
builders construct data that is well-formed but breaks exactly one axiom,
with the failure locus recorded in the docstring.
"""

from __future__ import annotations

from .bundle import make_bundle
from .duality import TheoremFixtures
from .exactlin import Mat, RingSpec
from .gcat import (
    EquivFunctor,
    EquivMorphism,
    FinGroup,
    GCategory,
    strict_equivariant,
    trivial_gcategory,
)
from .graded import DegFunctor, DegMorphism, GradedCat
from .lincat import (
    LinCat,
    LinFunctor,
    Morphism,
    NatTrans,
    compose_functors,
    identity_functor,
    identity_nt,
    morphism_scale,
)
from .smash import smash_product


def _ring(ring: RingSpec | None) -> RingSpec:
    return ring if ring is not None else RingSpec.rationals()


def one_object_category(ring: RingSpec | None = None) -> LinCat:
    """A single object with a one-dimensional endomorphism algebra."""
    ring = _ring(ring)
    return LinCat.from_tables(
        ring,
        ["*"],
        {("*", "*"): ("id",)},
        {"*": (1,)},
        {("*", "*", "*"): {("id", "id"): {"id": 1}}},
    )


def tg1(ring: RingSpec | None = None) -> GCategory:
    """The one-object category acted on by the trivial group."""
    return trivial_gcategory(one_object_category(ring), FinGroup.trivial())


def pt2(ring: RingSpec | None = None) -> GCategory:
    """The one-object category with the trivial action of Z/2."""
    return trivial_gcategory(one_object_category(ring), FinGroup.cyclic(2))


def sw2(ring: RingSpec | None = None) -> GCategory:
    """Two isolated objects swapped by Z/2."""
    ring = _ring(ring)
    base = LinCat.from_tables(
        ring,
        ["x0", "x1"],
        {("x0", "x0"): ("e0",), ("x1", "x1"): ("e1",)},
        {"x0": (1,), "x1": (1,)},
        {
            ("x0", "x0", "x0"): {("e0", "e0"): {"e0": 1}},
            ("x1", "x1", "x1"): {("e1", "e1"): {"e1": 1}},
        },
    )
    swap = LinFunctor(
        dom=base,
        cod=base,
        obj_map={"x0": "x1", "x1": "x0"},
        hom_mats={p: Mat.identity(ring, 1) for p in base.pairs()},
    )
    return GCategory(
        base=base, group=FinGroup.cyclic(2), action=(identity_functor(base), swap)
    )


def cy3(ring: RingSpec | None = None) -> GCategory:
    """Three objects in a cycle, rotated by Z/3.

    Each object carries its identity e_i and one arrow t_i to the next
    object; two arrows in a row compose to zero.
    """
    ring = _ring(ring)
    objs = [f"y{i}" for i in range(3)]
    hom = {}
    comp = {}
    for i in range(3):
        j = (i + 1) % 3
        hom[(f"y{i}", f"y{i}")] = (f"e{i}",)
        hom[(f"y{i}", f"y{j}")] = (f"t{i}",)
        comp[(f"y{i}", f"y{i}", f"y{i}")] = {(f"e{i}", f"e{i}"): {f"e{i}": 1}}
        comp[(f"y{i}", f"y{i}", f"y{j}")] = {(f"t{i}", f"e{i}"): {f"t{i}": 1}}
        comp[(f"y{i}", f"y{j}", f"y{j}")] = {(f"e{j}", f"t{i}"): {f"t{i}": 1}}
    base = LinCat.from_tables(ring, objs, hom, {x: (1,) for x in objs}, comp)
    rot = LinFunctor(
        dom=base,
        cod=base,
        obj_map={f"y{i}": f"y{(i + 1) % 3}" for i in range(3)},
        hom_mats={p: Mat.identity(ring, 1) for p in base.pairs()},
    )
    return GCategory(
        base=base,
        group=FinGroup.cyclic(3),
        action=(identity_functor(base), rot, compose_functors(rot, rot)),
    )


def ga2(ring: RingSpec | None = None) -> GradedCat:
    """The group algebra of Z/2 as a one-object category graded by Z/2."""
    ring = _ring(ring)
    base = LinCat.from_tables(
        ring,
        ["*"],
        {("*", "*"): ("u1", "us")},
        {"*": (1, 0)},
        {
            ("*", "*", "*"): {
                ("u1", "u1"): {"u1": 1},
                ("u1", "us"): {"us": 1},
                ("us", "u1"): {"us": 1},
                ("us", "us"): {"u1": 1},
            }
        },
    )
    return GradedCat(base=base, group=FinGroup.cyclic(2), deg={("*", "*"): (0, 1)})


def mc2(ring: RingSpec | None = None) -> GradedCat:
    """The 2x2 matrix algebra as a two-object category, off-diagonal in degree 1."""
    ring = _ring(ring)
    base = LinCat.from_tables(
        ring,
        ["m0", "m1"],
        {
            ("m0", "m0"): ("e0",),
            ("m0", "m1"): ("u",),
            ("m1", "m0"): ("v",),
            ("m1", "m1"): ("e1",),
        },
        {"m0": (1,), "m1": (1,)},
        {
            ("m0", "m0", "m0"): {("e0", "e0"): {"e0": 1}},
            ("m1", "m1", "m1"): {("e1", "e1"): {"e1": 1}},
            ("m0", "m0", "m1"): {("u", "e0"): {"u": 1}},
            ("m0", "m1", "m1"): {("e1", "u"): {"u": 1}},
            ("m1", "m1", "m0"): {("v", "e1"): {"v": 1}},
            ("m1", "m0", "m0"): {("e0", "v"): {"v": 1}},
            ("m0", "m1", "m0"): {("v", "u"): {"e0": 1}},
            ("m1", "m0", "m1"): {("u", "v"): {"e1": 1}},
        },
    )
    return GradedCat(
        base=base,
        group=FinGroup.cyclic(2),
        deg={
            ("m0", "m0"): (0,),
            ("m0", "m1"): (1,),
            ("m1", "m0"): (1,),
            ("m1", "m1"): (0,),
        },
    )


def sigma_pt2(ring: RingSpec | None = None) -> EquivFunctor:
    """The identity of pt2 with the sign adjuster: rho_1 = -id."""
    c = pt2(ring)
    e = identity_functor(c.base)
    rho1 = NatTrans(
        src=compose_functors(c.action[1], e),
        tgt=compose_functors(e, c.action[1]),
        components={"*": morphism_scale(c.base, -1, c.base.id_morphism("*"))},
    )
    return EquivFunctor(dom=c, cod=c, e=e, rho=(identity_nt(e), rho1))


def swap_sw2(ring: RingSpec | None = None) -> EquivFunctor:
    """The swap automorphism of sw2 as a strictly equivariant functor."""
    c = sw2(ring)
    return strict_equivariant(c.action[1], c, c)


def nonstrict_sw2(ring: RingSpec | None = None) -> EquivFunctor:
    """The identity of sw2 with the sign adjuster at the swap."""
    c = sw2(ring)
    e = identity_functor(c.base)
    swap = c.action[1]
    rho1 = NatTrans(
        src=compose_functors(swap, e),
        tgt=compose_functors(e, swap),
        components={
            x: morphism_scale(c.base, -1, c.base.id_morphism(swap.obj(x)))
            for x in c.base.objects
        },
    )
    return EquivFunctor(dom=c, cod=c, e=e, rho=(identity_nt(e), rho1))


def rot_cy3(ring: RingSpec | None = None) -> EquivFunctor:
    """The rotation of cy3 as a strictly equivariant functor."""
    c = cy3(ring)
    return strict_equivariant(c.action[1], c, c)


def sgn_ga2(ring: RingSpec | None = None) -> DegFunctor:
    """The sign involution of ga2: fixes u1, negates us; strictly graded."""
    b = ga2(ring)
    ring = b.base.ring
    h = LinFunctor(
        dom=b.base,
        cod=b.base,
        obj_map={"*": "*"},
        hom_mats={("*", "*"): Mat.from_rows(ring, [[1, 0], [0, -1]])},
    )
    return DegFunctor(dom=b, cod=b, h=h, r={"*": 0})


def fold_mc2(ring: RingSpec | None = None) -> DegFunctor:
    """Collapse mc2 onto the corner e0, with degree adjuster (0, 1).

    Every basis arrow is sent to e0; the nonconstant adjuster makes this
    degree-preserving even though u and v have degree 1.
    """
    b = mc2(ring)
    ring = b.base.ring
    h = LinFunctor(
        dom=b.base,
        cod=b.base,
        obj_map={"m0": "m0", "m1": "m0"},
        hom_mats={p: Mat.identity(ring, 1) for p in b.base.pairs()},
    )
    return DegFunctor(dom=b, cod=b, h=h, r={"m0": 0, "m1": 1})


def _scaled_identity_cell(e, scale) -> NatTrans:
    """The 2-cell on e whose every component is scale times an identity."""
    base = e.cod
    comps = {
        x: morphism_scale(base, scale, base.id_morphism(e.obj(x)))
        for x in e.dom.objects
    }
    return NatTrans(src=e, tgt=e, components=comps)


def ga2_smash_to_mc2(ring: RingSpec | None = None) -> LinFunctor:
    """The isomorphism ga2 # Z/2 -> mc2: the smash product of the group
    algebra is the full 2x2 matrix category."""
    b = ga2(ring)
    m = mc2(ring)
    sm = smash_product(b)
    ring = b.base.ring
    obj_map = {sm.obj_id("*", 0): "m0", sm.obj_id("*", 1): "m1"}
    return LinFunctor(
        dom=sm.carrier.base,
        cod=m.base,
        obj_map=obj_map,
        hom_mats={p: Mat.identity(ring, 1) for p in sm.carrier.base.pairs()},
    )


def theorem_suite(ring: RingSpec | None = None) -> TheoremFixtures:
    """The standard instance collection for the duality battery.

    Over the rationals the suite also carries prime-field copies of the
    one-object fixtures, so both coefficient rings are exercised.
    """
    ring = _ring(ring)
    fx = TheoremFixtures()
    fx.gcats = [
        ("tg1", tg1(ring)),
        ("pt2", pt2(ring)),
        ("sw2", sw2(ring)),
        ("cy3", cy3(ring)),
    ]
    fx.gradeds = [("ga2", ga2(ring)), ("mc2", mc2(ring))]

    sigma = sigma_pt2(ring)
    swap = swap_sw2(ring)
    nonstrict = nonstrict_sw2(ring)
    rot = rot_cy3(ring)
    sgn = sgn_ga2(ring)
    fold = fold_mc2(ring)
    fx.equiv_cells = [
        ("sigma_pt2", sigma),
        ("swap_sw2", swap),
        ("nonstrict_sw2", nonstrict),
        ("rot_cy3", rot),
    ]
    fx.deg_cells = [("sgn_ga2", sgn), ("fold_mc2", fold)]

    fx.equiv_2cells = [
        ("double_sigma", EquivMorphism(_scaled_identity_cell(sigma.e, 2)), sigma, sigma),
        ("triple_sigma", EquivMorphism(_scaled_identity_cell(sigma.e, 3)), sigma, sigma),
        ("double_swap", EquivMorphism(_scaled_identity_cell(swap.e, 2)), swap, swap),
    ]
    fx.deg_2cells = [
        ("double_sgn", DegMorphism(_scaled_identity_cell(sgn.h, 2)), sgn, sgn),
        ("triple_sgn", DegMorphism(_scaled_identity_cell(sgn.h, 3)), sgn, sgn),
        ("triple_fold", DegMorphism(_scaled_identity_cell(fold.h, 3)), fold, fold),
    ]

    if ring.kind == "rationals":
        f5 = RingSpec.prime_field(5)
        fx.gcats.append(("pt2_f5", pt2(f5)))
        fx.gradeds.append(("ga2_f5", ga2(f5)))
        fx.equiv_cells.append(("sigma_pt2_f5", sigma_pt2(f5)))
        fx.deg_cells.append(("sgn_ga2_f5", sgn_ga2(f5)))
    return fx


def sw2_scaled(ring: RingSpec | None = None) -> GCategory:
    """Negative control: the swap action scaled by 2 on the cross arrows.

    Each A_a is an honest functor, but A_1 A_1 doubles twice, so the family
    fails validate_action's `multiplicative` check exactly at a=1, b=1.
    """
    ring = _ring(ring)
    base = LinCat.from_tables(
        ring,
        ["x0", "x1"],
        {
            ("x0", "x0"): ("e0",),
            ("x0", "x1"): ("w01",),
            ("x1", "x0"): ("w10",),
            ("x1", "x1"): ("e1",),
        },
        {"x0": (1,), "x1": (1,)},
        {
            ("x0", "x0", "x0"): {("e0", "e0"): {"e0": 1}},
            ("x1", "x1", "x1"): {("e1", "e1"): {"e1": 1}},
            ("x0", "x0", "x1"): {("w01", "e0"): {"w01": 1}},
            ("x0", "x1", "x1"): {("e1", "w01"): {"w01": 1}},
            ("x1", "x1", "x0"): {("w10", "e1"): {"w10": 1}},
            ("x1", "x0", "x0"): {("e0", "w10"): {"w10": 1}},
        },
    )
    two = ring.coerce(2)
    swap = LinFunctor(
        dom=base,
        cod=base,
        obj_map={"x0": "x1", "x1": "x0"},
        hom_mats={
            ("x0", "x0"): Mat.identity(ring, 1),
            ("x1", "x1"): Mat.identity(ring, 1),
            ("x0", "x1"): Mat.from_rows(ring, [[two]]),
            ("x1", "x0"): Mat.from_rows(ring, [[two]]),
        },
    )
    return GCategory(
        base=base, group=FinGroup.cyclic(2), action=(identity_functor(base), swap)
    )


def ga2_misgraded(ring: RingSpec | None = None) -> GradedCat:
    """Negative control: a valid category whose stated grading is wrong.

    Composition is changed to us o us = us, so validate_grading fails its
    `composition.degree` check exactly at f=us, g=us.
    """
    ring = _ring(ring)
    base = LinCat.from_tables(
        ring,
        ["*"],
        {("*", "*"): ("u1", "us")},
        {"*": (1, 0)},
        {
            ("*", "*", "*"): {
                ("u1", "u1"): {"u1": 1},
                ("u1", "us"): {"us": 1},
                ("us", "u1"): {"us": 1},
                ("us", "us"): {"us": 1},
            }
        },
    )
    return GradedCat(base=base, group=FinGroup.cyclic(2), deg={("*", "*"): (0, 1)})


def pt2_bad_adjuster(ring: RingSpec | None = None) -> EquivFunctor:
    """Negative control: the constant -id adjuster family on pt2.

    Each component is natural and invertible, but the family fails
    validate_equivariant's `adjuster.cocycle` check at every pair (a, b),
    in particular at a=1, b=1.
    """
    c = pt2(ring)
    e = identity_functor(c.base)
    rho = []
    for a in c.group.elements:
        rho.append(
            NatTrans(
                src=compose_functors(c.action[a], e),
                tgt=compose_functors(e, c.action[a]),
                components={"*": morphism_scale(c.base, -1, c.base.id_morphism("*"))},
            )
        )
    return EquivFunctor(dom=c, cod=c, e=e, rho=tuple(rho))


def sw2_broken_eta(ring: RingSpec | None = None):
    """Negative control: a natural 2-cell violating equivariance.

    Components 1*id at x0 and 2*id at x1 are natural for the swap functor,
    but validate_equiv_morphism's `square` check fails at a=1.  Returns
    (morphism, src, tgt).
    """
    swap = swap_sw2(ring)
    base = swap.cod.base
    comps = {
        "x0": base.id_morphism("x1"),
        "x1": morphism_scale(base, 2, base.id_morphism("x0")),
    }
    eta = NatTrans(src=swap.e, tgt=swap.e, components=comps)
    return EquivMorphism(eta), swap, swap


def suite_bundles(ring: RingSpec | None = None) -> dict:
    """Serializable bundles covering the whole positive suite."""
    ring = _ring(ring)
    c2 = FinGroup.cyclic(2)
    c3 = FinGroup.cyclic(3)

    sigma = sigma_pt2(ring)
    swap = swap_sw2(ring)
    nonstrict = nonstrict_sw2(ring)
    sgn = sgn_ga2(ring)
    fold = fold_mc2(ring)
    rot = rot_cy3(ring)

    c2_bundle = make_bundle(
        ring,
        c2,
        {
            "PT2": pt2(ring),
            "SW2": sw2(ring),
            "GA2": ga2(ring),
            "MC2": mc2(ring),
        },
        functors={
            "sigma": ("equivariant", "PT2", "PT2", sigma),
            "swap": ("equivariant", "SW2", "SW2", swap),
            "nonstrict": ("equivariant", "SW2", "SW2", nonstrict),
            "sgn": ("degree", "GA2", "GA2", sgn),
            "fold": ("degree", "MC2", "MC2", fold),
        },
        nat_trans={
            "double_sigma": ("sigma", "sigma", _scaled_identity_cell(sigma.e, 2)),
            "double_swap": ("swap", "swap", _scaled_identity_cell(swap.e, 2)),
            "double_sgn": ("sgn", "sgn", _scaled_identity_cell(sgn.h, 2)),
            "triple_fold": ("fold", "fold", _scaled_identity_cell(fold.h, 3)),
        },
    )
    c3_bundle = make_bundle(
        ring,
        c3,
        {"CY3": cy3(ring)},
        functors={"rot": ("equivariant", "CY3", "CY3", rot)},
    )
    t1_bundle = make_bundle(ring, FinGroup.trivial(), {"TG1": tg1(ring)})
    f5 = RingSpec.prime_field(5)
    f5_bundle = make_bundle(
        f5,
        c2,
        {"PT2": pt2(f5), "GA2": ga2(f5)},
        functors={
            "sigma": ("equivariant", "PT2", "PT2", sigma_pt2(f5)),
            "sgn": ("degree", "GA2", "GA2", sgn_ga2(f5)),
        },
    )
    return {
        "t1_suite": t1_bundle,
        "c2_suite": c2_bundle,
        "c3_suite": c3_bundle,
        "f5_suite": f5_bundle,
    }


def negative_bundles(ring: RingSpec | None = None) -> dict:
    """Bundles that parse cleanly but each fail one documented check."""
    ring = _ring(ring)
    c2 = FinGroup.cyclic(2)

    bad_action = make_bundle(ring, c2, {"SW2X": sw2_scaled(ring)})
    bad_grading = make_bundle(ring, c2, {"GA2X": ga2_misgraded(ring)})
    bad_adjuster = make_bundle(
        ring,
        c2,
        {"PT2": pt2(ring)},
        functors={"sigma_bad": ("equivariant", "PT2", "PT2", pt2_bad_adjuster(ring))},
    )
    broken, swap, _ = sw2_broken_eta(ring)
    bad_two_cell = make_bundle(
        ring,
        c2,
        {"SW2": sw2(ring)},
        functors={"swap": ("equivariant", "SW2", "SW2", swap)},
        nat_trans={"broken": ("swap", "swap", broken.eta)},
    )
    return {
        "bad_action": bad_action,
        "bad_grading": bad_grading,
        "bad_adjuster": bad_adjuster,
        "bad_two_cell": bad_two_cell,
    }
