from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orbsmash.exactlin import Mat, RingSpec
from orbsmash.lincat import (
    BoundaryError,
    LinCat,
    LinFunctor,
    NatTrans,
    NaturalityError,
    StructureError,
    compose_functors,
    compose_morphisms,
    functor_equal,
    identity_functor,
    identity_nt,
    is_invertible_morphism,
    morphism_add,
    morphism_scale,
    nt_equal,
    nt_horizontal,
    nt_vertical,
    try_invert_morphism,
    validate_category,
    validate_functor,
    whisker_left,
    whisker_right,
)

QQ = RingSpec.rationals()


def group_algebra_c2(ring=QQ) -> LinCat:
    """One object, basis (e, s) with s o s = e: the group algebra of Z/2."""
    return LinCat.from_tables(
        ring,
        objects=["*"],
        hom={("*", "*"): ["e", "s"]},
        identity={"*": (ring.one, ring.zero)},
        comp_rules={
            ("*", "*", "*"): {
                ("e", "e"): {"e": 1},
                ("e", "s"): {"s": 1},
                ("s", "e"): {"s": 1},
                ("s", "s"): {"e": 1},
            }
        },
    )


def two_object_chain(ring=QQ) -> LinCat:
    """Objects a, b with a single arrow u: a -> b besides the identities."""
    return LinCat.from_tables(
        ring,
        objects=["a", "b"],
        hom={("a", "a"): ["ea"], ("b", "b"): ["eb"], ("a", "b"): ["u"]},
        identity={"a": (ring.one,), "b": (ring.one,)},
        comp_rules={
            ("a", "a", "a"): {("ea", "ea"): {"ea": 1}},
            ("b", "b", "b"): {("eb", "eb"): {"eb": 1}},
            ("a", "a", "b"): {("u", "ea"): {"u": 1}},
            ("a", "b", "b"): {("eb", "u"): {"u": 1}},
        },
    )


# ---------- category structure ----------


def test_group_algebra_axioms():
    rep = validate_category(group_algebra_c2())
    assert rep.passed, rep.failures()


def test_chain_axioms():
    rep = validate_category(two_object_chain())
    assert rep.passed, rep.failures()


def test_composition_table_of_c2():
    c = group_algebra_c2()
    s = c.basis_morphism("*", "*", 1)
    e = c.id_morphism("*")
    assert compose_morphisms(c, s, s) == e
    assert compose_morphisms(c, s, e) == s
    assert compose_morphisms(c, e, s) == s


def test_broken_associativity_is_caught():
    # s o s = s makes (s s) s differ from s (s s) only after scaling;
    # break the identity law instead: e o s = e.
    bad = LinCat.from_tables(
        QQ,
        objects=["*"],
        hom={("*", "*"): ["e", "s"]},
        identity={"*": (QQ.one, QQ.zero)},
        comp_rules={
            ("*", "*", "*"): {
                ("e", "e"): {"e": 1},
                ("e", "s"): {"e": 1},
                ("s", "e"): {"s": 1},
                ("s", "s"): {"e": 1},
            }
        },
    )
    rep = validate_category(bad)
    assert not rep.passed
    names = {chk.name for chk in rep.failures()}
    assert "identity.left" in names


def test_morphism_arithmetic():
    c = group_algebra_c2()
    e = c.id_morphism("*")
    s = c.basis_morphism("*", "*", 1)
    both = morphism_add(c, e, s)
    assert both.coeffs == (Fraction(1), Fraction(1))
    doubled = morphism_scale(c, 2, s)
    assert doubled.coeffs == (Fraction(0), Fraction(2))


def test_zero_dimensional_homs_are_dropped():
    c = LinCat.from_tables(
        QQ,
        objects=["a", "b"],
        hom={("a", "a"): ["ea"], ("b", "b"): ["eb"], ("a", "b"): []},
        identity={"a": (QQ.one,), "b": (QQ.one,)},
        comp_rules={
            ("a", "a", "a"): {("ea", "ea"): {"ea": 1}},
            ("b", "b", "b"): {("eb", "eb"): {"eb": 1}},
        },
    )
    assert c.dim("a", "b") == 0
    assert ("a", "b") not in c.hom
    assert c.zero_morphism("a", "b").is_zero()


# ---------- functors ----------


def sign_functor(c: LinCat) -> LinFunctor:
    """e -> e, s -> -s on the group algebra."""
    return LinFunctor(
        c, c, {"*": "*"}, {("*", "*"): Mat.from_rows(QQ, [[1, 0], [0, -1]])}
    )


def test_identity_functor_valid():
    c = group_algebra_c2()
    rep = validate_functor(identity_functor(c))
    assert rep.passed


def test_sign_functor_valid():
    c = group_algebra_c2()
    rep = validate_functor(sign_functor(c))
    assert rep.passed, rep.failures()


def test_functor_that_breaks_composition():
    c = group_algebra_c2()
    f = LinFunctor(c, c, {"*": "*"}, {("*", "*"): Mat.from_rows(QQ, [[1, 0], [0, 2]])})
    rep = validate_functor(f)
    names = {chk.name for chk in rep.failures()}
    assert "preserves.composition" in names


def test_functor_shape_mismatch_rejected():
    c = group_algebra_c2()
    with pytest.raises(StructureError):
        LinFunctor(c, c, {"*": "*"}, {("*", "*"): Mat.identity(QQ, 3)})


def test_compose_functors_applies_first_argument_last():
    c = group_algebra_c2()
    f = sign_functor(c)
    assert functor_equal(compose_functors(f, f), identity_functor(c))


def test_functor_apply_on_chain():
    c = two_object_chain()
    swap = LinFunctor(
        c,
        c,
        {"a": "a", "b": "b"},
        {
            ("a", "a"): Mat.identity(QQ, 1),
            ("b", "b"): Mat.identity(QQ, 1),
            ("a", "b"): Mat.from_rows(QQ, [[-1]]),
        },
    )
    assert validate_functor(swap).passed
    u = c.basis_morphism("a", "b", 0)
    assert swap.apply(u).coeffs == (Fraction(-1),)


# ---------- natural transformations ----------


def test_naturality_checked_at_construction():
    c = group_algebra_c2()
    ident = identity_functor(c)
    sgn = sign_functor(c)
    # no nonzero map intertwines identity with sign on k[C2]: s acts by
    # +1 on one side and -1 on the other.
    with pytest.raises(NaturalityError):
        NatTrans(ident, sgn, {"*": c.id_morphism("*")})
    zero = NatTrans(ident, sgn, {"*": c.zero_morphism("*", "*")})
    assert zero.at("*").is_zero()


def test_identity_nt_and_vertical():
    c = group_algebra_c2()
    sgn = sign_functor(c)
    one = identity_nt(sgn)
    assert nt_equal(nt_vertical(one, one), one)


def test_component_boundary_enforced():
    c = two_object_chain()
    ident = identity_functor(c)
    with pytest.raises(BoundaryError):
        # component at a lands at the wrong object
        NatTrans(ident, ident, {"a": c.basis_morphism("a", "b", 0), "b": c.id_morphism("b")})


def test_whiskering_boundaries():
    c = group_algebra_c2()
    sgn = sign_functor(c)
    one = identity_nt(identity_functor(c))
    left = whisker_left(sgn, one)
    right = whisker_right(one, sgn)
    assert left.src.obj("*") == "*"
    assert nt_equal(left, identity_nt(sgn))
    assert nt_equal(right, identity_nt(sgn))


def test_invert_morphism():
    c = group_algebra_c2()
    s = c.basis_morphism("*", "*", 1)
    inv = try_invert_morphism(c, s)
    assert inv is not None
    assert compose_morphisms(c, inv, s) == c.id_morphism("*")
    zero = c.zero_morphism("*", "*")
    assert try_invert_morphism(c, zero) is None
    assert not is_invertible_morphism(c, zero)


# ---------- scalar natural transformations on k[C2] ----------
#
# endo-NTs of the identity functor on the group algebra are exactly the
# central elements; on k[C2] everything is central, so any coefficient
# pair gives a transformation and vertical composition multiplies in
# the algebra. interchange is checked on that family.


def _central_nt(c, a, b):
    ident = identity_functor(c)
    return NatTrans(ident, ident, {"*": c.morphism("*", "*", (a, b))})


@given(
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-4, max_value=4),
)
def test_vertical_matches_algebra_product(a0, a1, b0, b1):
    c = group_algebra_c2()
    p = _central_nt(c, QQ.coerce(a0), QQ.coerce(a1))
    q = _central_nt(c, QQ.coerce(b0), QQ.coerce(b1))
    v = nt_vertical(q, p)
    # (b0 + b1 s)(a0 + a1 s) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0) s
    want = (
        Fraction(a0 * b0 + a1 * b1),
        Fraction(a0 * b1 + a1 * b0),
    )
    assert v.at("*").coeffs == want


@given(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
)
def test_interchange_law(pa, pb, qa, qb):
    c = group_algebra_c2()
    a = _central_nt(c, *map(QQ.coerce, pa))
    b = _central_nt(c, *map(QQ.coerce, pb))
    a2 = _central_nt(c, *map(QQ.coerce, qa))
    b2 = _central_nt(c, *map(QQ.coerce, qb))
    lhs = nt_horizontal(nt_vertical(b2, a2), nt_vertical(b, a))
    rhs = nt_vertical(nt_horizontal(b2, b), nt_horizontal(a2, a))
    assert nt_equal(lhs, rhs)
