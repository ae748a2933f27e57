from __future__ import annotations

from orbsmash.duality import (
    TheoremFixtures,
    epsilon,
    epsilon_prime,
    hash_on_2cell,
    hash_on_functor,
    omega,
    omega_prime,
    phi_square,
    psi_square,
    slash_on_2cell,
    slash_on_functor,
    theta_iso,
    verify_main_theorem,
    verify_triangles,
    xi_iso,
)
from orbsmash.exactlin import RingSpec
from orbsmash.fixtures import (
    cy3,
    fold_mc2,
    ga2,
    mc2,
    pt2,
    sgn_ga2,
    sigma_pt2,
    sw2,
    swap_sw2,
    theorem_suite,
)
from orbsmash.gcat import (
    compose_equivariant,
    equivariant_equal,
    identity_equivariant,
    validate_equiv_morphism,
    validate_equivariant,
)
from orbsmash.graded import (
    compose_deg_functors,
    deg_functor_equal,
    identity_deg_functor,
    validate_deg_functor,
    validate_deg_morphism,
)
from orbsmash.lincat import is_invertible_morphism


# ---------- the two directions on 1-cells ----------


def test_slash_of_strict_cell():
    f = slash_on_functor(swap_sw2())
    rep = validate_deg_functor(f)
    assert rep.passed, rep.failures()
    assert f.is_strict()


def test_slash_of_adjusted_cell():
    f = slash_on_functor(sigma_pt2())
    rep = validate_deg_functor(f)
    assert rep.passed, rep.failures()


def test_hash_of_strict_cell():
    e = hash_on_functor(sgn_ga2())
    rep = validate_equivariant(e)
    assert rep.passed, rep.failures()
    assert e.is_strict()


def test_hash_of_offset_cell():
    e = hash_on_functor(fold_mc2())
    rep = validate_equivariant(e)
    assert rep.passed, rep.failures()
    # the offset r moves objects: x^(a) -> (Hx)^(a r_x).
    assert e.e.obj("m1#0") == "m0#1"
    assert e.e.obj("m0#0") == "m0#0"


def test_slash_preserves_identity_cell():
    c = sw2()
    got = slash_on_functor(identity_equivariant(c))
    from orbsmash.orbit import orbit_category

    want = identity_deg_functor(orbit_category(c).carrier)
    assert deg_functor_equal(got, want)


def test_hash_preserves_identity_cell():
    b = ga2()
    got = hash_on_functor(identity_deg_functor(b))
    from orbsmash.smash import smash_product

    want = identity_equivariant(smash_product(b).carrier)
    assert equivariant_equal(got, want)


def test_slash_preserves_composition():
    f = sigma_pt2()
    lhs = slash_on_functor(compose_equivariant(f, f))
    rhs = compose_deg_functors(slash_on_functor(f), slash_on_functor(f))
    assert deg_functor_equal(lhs, rhs)


def test_hash_preserves_composition():
    f = sgn_ga2()
    lhs = hash_on_functor(compose_deg_functors(f, f))
    rhs = compose_equivariant(hash_on_functor(f), hash_on_functor(f))
    assert equivariant_equal(lhs, rhs)


# ---------- the two directions on 2-cells ----------


def test_slash_on_two_cell():
    fx = theorem_suite()
    for name, m, src, tgt in fx.equiv_2cells:
        dm = slash_on_2cell(m, src, tgt)
        rep = validate_deg_morphism(
            dm, slash_on_functor(src), slash_on_functor(tgt)
        )
        assert rep.passed, (name, rep.failures())


def test_hash_on_two_cell():
    fx = theorem_suite()
    for name, m, src, tgt in fx.deg_2cells:
        em = hash_on_2cell(m, src, tgt)
        rep = validate_equiv_morphism(
            em, hash_on_functor(src), hash_on_functor(tgt)
        )
        assert rep.passed, (name, rep.failures())


# ---------- units and counits ----------


def test_epsilon_is_equivariant():
    for c in [pt2(), sw2(), cy3()]:
        rep = validate_equivariant(epsilon(c))
        assert rep.passed, rep.failures()


def test_epsilon_prime_is_strict_equivariant():
    for c in [pt2(), sw2(), cy3()]:
        e = epsilon_prime(c)
        assert e.is_strict()
        rep = validate_equivariant(e)
        assert rep.passed, rep.failures()


def test_omega_is_strict():
    for b in [ga2(), mc2()]:
        f = omega(b)
        assert f.is_strict()
        rep = validate_deg_functor(f)
        assert rep.passed, rep.failures()


def test_omega_prime_offsets_record_the_group_index():
    b = mc2()
    f = omega_prime(b)
    rep = validate_deg_functor(f)
    assert rep.passed, rep.failures()
    assert f.r == {"m0#0": 0, "m0#1": 1, "m1#0": 0, "m1#1": 1}


def test_retraction_on_the_group_side():
    # epsilon' epsilon = id_C exactly.
    for c in [pt2(), sw2(), cy3()]:
        comp = compose_equivariant(epsilon_prime(c), epsilon(c))
        assert equivariant_equal(comp, identity_equivariant(c))


def test_retraction_on_the_graded_side():
    # omega' omega = id_B exactly.
    for b in [ga2(), mc2()]:
        comp = compose_deg_functors(omega_prime(b), omega(b))
        assert deg_functor_equal(comp, identity_deg_functor(b))


def test_theta_components_invertible():
    for c in [pt2(), sw2()]:
        nt = theta_iso(c)
        base = nt.src.cod
        for u in base.objects:
            assert is_invertible_morphism(base, nt.at(u))


def test_xi_components_invertible():
    for b in [ga2(), mc2()]:
        nt = xi_iso(b)
        base = nt.src.cod
        for u in base.objects:
            assert is_invertible_morphism(base, nt.at(u))


def test_triangle_identities():
    rep = verify_triangles(c=sw2(), b=mc2())
    assert rep.passed, rep.failures()
    names = {chk.name for chk in rep.checks}
    assert names == {"triangle.sharp", "triangle.slash"}


# ---------- naturality squares of the counits ----------


def test_psi_square_components_are_adjusters():
    e = sigma_pt2()
    nt = psi_square(e)
    # construction validates naturality; components must be invertible.
    base = nt.src.cod
    for u in nt.src.dom.objects:
        assert is_invertible_morphism(base, nt.at(u))


def test_phi_square_components_are_invertible():
    f = fold_mc2()
    nt = phi_square(f)
    base = nt.src.cod
    for x in nt.src.dom.objects:
        assert is_invertible_morphism(base, nt.at(x))


# ---------- the assembled battery ----------


import time

import pytest


@pytest.fixture(scope="module")
def battery():
    t0 = time.monotonic()
    rep = verify_main_theorem(theorem_suite())
    elapsed = time.monotonic() - t0
    return rep, elapsed


def test_full_battery_passes(battery):
    rep, _ = battery
    assert rep.passed
    checks = list(rep.all_checks())
    assert len(checks) == 245
    assert all(chk.ok for _, chk in checks)


def test_battery_covers_every_fixture_kind(battery):
    rep, _ = battery
    sections = set(rep.sections)
    assert any(s.startswith("gcat.") for s in sections)
    assert any(s.startswith("graded.") for s in sections)
    assert any(s.startswith("equiv_cell.") for s in sections)
    assert any(s.startswith("deg_cell.") for s in sections)
    assert any(s.startswith("equiv_2cell.") for s in sections)
    assert any(s.startswith("deg_2cell.") for s in sections)


def test_battery_over_prime_field_included(battery):
    rep, _ = battery
    assert "gcat.pt2_f5" in rep.sections
    assert "graded.ga2_f5" in rep.sections


def test_battery_detects_a_broken_two_cell():
    from orbsmash.fixtures import sw2_broken_eta

    m, src, tgt = sw2_broken_eta()
    fx = TheoremFixtures(
        gcats=[],
        gradeds=[],
        equiv_cells=[("swap", src)],
        deg_cells=[],
        equiv_2cells=[("broken", m, src, tgt)],
        deg_2cells=[],
    )
    rep = verify_main_theorem(fx)
    assert not rep.passed
    failing = [name for name, chk in rep.all_checks() if not chk.ok]
    assert "equiv_2cell.broken.two_cell.valid" in failing
    # the only failures involve the broken cell; the valid 1-cell is clean.
    assert all("broken" in name for name in failing)
    assert all(chk.ok for name, chk in rep.all_checks() if name.startswith("equiv_cell.swap."))


def test_battery_detects_a_broken_action():
    from orbsmash.fixtures import sw2_scaled

    fx = TheoremFixtures(
        gcats=[("scaled", sw2_scaled())],
        gradeds=[],
        equiv_cells=[],
        deg_cells=[],
        equiv_2cells=[],
        deg_2cells=[],
    )
    rep = verify_main_theorem(fx)
    assert not rep.passed
    failing = [name for name, chk in rep.all_checks() if not chk.ok]
    assert failing == ["gcat.scaled.action.valid"]


def test_battery_runs_quickly(battery):
    rep, elapsed = battery
    assert rep.passed
    assert elapsed < 10.0


def test_report_serializes(battery):
    rep, _ = battery
    d = rep.to_dict()
    assert d["passed"] is True
    assert set(d["sections"]) == set(rep.sections)
