from __future__ import annotations

import json

import pytest

from orbsmash.bundle import (
    BundleFormatError,
    dumps_bundle,
    loads_bundle,
    make_bundle,
)
from orbsmash.cli import main
from orbsmash.exactlin import RingSpec
from orbsmash.fixtures import negative_bundles, pt2, suite_bundles
from orbsmash.gcat import FinGroup


@pytest.fixture(scope="module")
def bundles():
    return suite_bundles()


@pytest.fixture(scope="module")
def negatives():
    return negative_bundles()


def _write(tmp_path, name, data):
    path = tmp_path / f"{name}.json"
    path.write_text(dumps_bundle(data))
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


# ---------- serialization layer ----------


def test_bundles_parse_and_build(bundles):
    for name, data in bundles.items():
        bundle = loads_bundle(dumps_bundle(data))
        built, rep = bundle.build()
        assert rep.passed, (name, rep.failures())
        assert built.categories


def test_serialization_is_deterministic(bundles):
    for data in bundles.values():
        assert dumps_bundle(data) == dumps_bundle(data)


def test_reserialization_is_stable(bundles):
    for name, data in bundles.items():
        text1 = dumps_bundle(data)
        built, _ = loads_bundle(text1).build()
        again = make_bundle(
            built.ring,
            built.group,
            dict(built.categories),
            functors={n: (e.kind, e.dom, e.cod, e.value) for n, e in built.functors.items()},
            nat_trans={n: (e.src, e.tgt, e.nt) for n, e in built.nat_trans.items()},
        )
        assert dumps_bundle(again) == text1, name


def test_negative_bundles_still_build(negatives):
    # broken axioms are a validation concern; these must load cleanly.
    for name, data in negatives.items():
        built, rep = loads_bundle(dumps_bundle(data)).build()
        assert rep.passed, (name, rep.failures())


def test_format_marker_is_checked():
    with pytest.raises(BundleFormatError) as exc:
        loads_bundle(json.dumps({"format": "nope"}))
    assert "format" in str(exc.value)


def test_json_syntax_error_reported_at_root():
    with pytest.raises(BundleFormatError) as exc:
        loads_bundle("{not json")
    assert "$" in str(exc.value)


def test_group_axioms_checked_at_parse():
    data = {
        "format": "gcat-bundle/1",
        "ring": "Q",
        "group": {"order": 2, "mul": [[0, 1], [1, 1]]},
        "categories": {},
        "functors": {},
        "nat_trans": {},
    }
    with pytest.raises(BundleFormatError):
        loads_bundle(json.dumps(data))


def test_unknown_functor_kind_rejected(bundles):
    data = json.loads(dumps_bundle(bundles["c3_suite"]))
    data["functors"]["rot"]["kind"] = "mystery"
    with pytest.raises(BundleFormatError) as exc:
        loads_bundle(json.dumps(data))
    assert "kind" in str(exc.value)


def test_adjuster_forbidden_on_plain_functor(bundles):
    data = json.loads(dumps_bundle(bundles["c3_suite"]))
    fn = data["functors"]["rot"]
    fn["kind"] = "plain"
    with pytest.raises(BundleFormatError):
        loads_bundle(json.dumps(data))


def test_non_natural_components_fail_at_build(bundles):
    data = json.loads(dumps_bundle(bundles["c3_suite"]))
    data["nat_trans"]["lopsided"] = {
        "src": "rot",
        "tgt": "rot",
        "components": {"y0": ["1"], "y1": ["2"], "y2": ["1"]},
    }
    built, rep = loads_bundle(json.dumps(data)).build()
    assert not rep.passed
    bad = rep.failures()
    assert [c.name for c in bad] == ["load.nat_trans"]
    assert bad[0].locus == "name=lopsided"
    assert "lopsided" not in built.nat_trans


# ---------- exit codes ----------


def test_validate_suite_exits_zero(tmp_path, capsys, bundles):
    for name, data in bundles.items():
        code, rep = _run(capsys, "validate", "--input", _write(tmp_path, name, data))
        assert code == 0, (name, rep)
        assert rep["passed"] is True


def test_validate_negatives_exit_one(tmp_path, capsys, negatives):
    for name, data in negatives.items():
        code, rep = _run(capsys, "validate", "--input", _write(tmp_path, name, data))
        assert code == 1, name
        assert rep["passed"] is False


def test_malformed_bundle_exits_two(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"format": "nope"}))
    code, rep = _run(capsys, "validate", "--input", str(path))
    assert code == 2
    assert rep == {"command": "validate", "error": "format: expected 'gcat-bundle/1', got 'nope'"}


def test_missing_file_exits_two(tmp_path, capsys):
    code, rep = _run(capsys, "validate", "--input", str(tmp_path / "absent.json"))
    assert code == 2
    assert "error" in rep


# ---------- documented failure loci of the negatives ----------


def _failing(rep):
    return sorted(
        (c["name"], c["locus"]) for c in rep["checks"] if not c["ok"]
    )


def test_bad_action_locus(tmp_path, capsys, negatives):
    code, rep = _run(
        capsys, "validate", "--input", _write(tmp_path, "ba", negatives["bad_action"])
    )
    assert code == 1
    assert _failing(rep) == [("category.SW2X.action.multiplicative", "a=1,b=1")]


def test_bad_grading_locus(tmp_path, capsys, negatives):
    code, rep = _run(
        capsys, "validate", "--input", _write(tmp_path, "bg", negatives["bad_grading"])
    )
    assert code == 1
    assert _failing(rep) == [
        ("category.GA2X.grading.composition.degree", "x=*,y=*,z=*,f=us,g=us")
    ]


def test_bad_adjuster_locus(tmp_path, capsys, negatives):
    code, rep = _run(
        capsys, "validate", "--input", _write(tmp_path, "bj", negatives["bad_adjuster"])
    )
    assert code == 1
    assert _failing(rep) == [
        ("functor.sigma_bad.adjuster.cocycle", "a=0,b=0,x=*"),
        ("functor.sigma_bad.adjuster.cocycle", "a=0,b=1,x=*"),
        ("functor.sigma_bad.adjuster.cocycle", "a=1,b=0,x=*"),
        ("functor.sigma_bad.adjuster.cocycle", "a=1,b=1,x=*"),
    ]


def test_bad_two_cell_locus(tmp_path, capsys, negatives):
    code, rep = _run(
        capsys, "validate", "--input", _write(tmp_path, "bt", negatives["bad_two_cell"])
    )
    assert code == 1
    assert _failing(rep) == [
        ("nat_trans.broken.square", "a=1,x=x0"),
        ("nat_trans.broken.square", "a=1,x=x1"),
    ]


# ---------- flags ----------


def test_ring_flag_mismatch(tmp_path, capsys, bundles):
    path = _write(tmp_path, "f5", bundles["f5_suite"])
    code, rep = _run(capsys, "validate", "--input", path, "--ring", "Q")
    assert code == 2
    assert "Fp:5" in rep["error"]
    code, rep = _run(capsys, "validate", "--input", path, "--ring", "Fp:5")
    assert code == 0


def test_check_flag_restricts(tmp_path, capsys, bundles):
    path = _write(tmp_path, "c2", bundles["c2_suite"])
    code, rep = _run(capsys, "validate", "--input", path, "--check", "PT2")
    assert code == 0
    targeted = [c for c in rep["checks"] if not c["name"].startswith("load.")]
    assert targeted
    assert all(c["name"].startswith("category.PT2.") for c in targeted)


def test_check_flag_unknown_name(tmp_path, capsys, bundles):
    path = _write(tmp_path, "c2", bundles["c2_suite"])
    code, rep = _run(capsys, "validate", "--input", path, "--check", "NOPE")
    assert code == 2
    assert "NOPE" in rep["error"]


def test_no_timing_omits_wall_time(tmp_path, capsys, bundles):
    path = _write(tmp_path, "c3", bundles["c3_suite"])
    code, rep = _run(capsys, "validate", "--input", path, "--no-timing")
    assert code == 0
    assert "wall_time_ms" not in rep
    code, rep = _run(capsys, "validate", "--input", path)
    assert "wall_time_ms" in rep


def test_report_is_deterministic_without_timing(tmp_path, capsys, bundles):
    path = _write(tmp_path, "c2", bundles["c2_suite"])
    main(["validate", "--input", path, "--no-timing"])
    first = capsys.readouterr().out
    main(["validate", "--input", path, "--no-timing"])
    second = capsys.readouterr().out
    assert first == second


def test_checks_sorted_by_name_then_locus(tmp_path, capsys, bundles):
    path = _write(tmp_path, "c2", bundles["c2_suite"])
    _, rep = _run(capsys, "validate", "--input", path, "--no-timing")
    keys = [(c["name"], c["locus"]) for c in rep["checks"]]
    assert keys == sorted(keys)


# ---------- construction pipelines ----------


def test_orbit_pipeline(tmp_path, capsys, bundles):
    src = _write(tmp_path, "c2", bundles["c2_suite"])
    out = str(tmp_path / "orbits.json")
    code, rep = _run(capsys, "orbit", "--input", src, "--output", out)
    assert code == 0, rep
    built, load_rep = loads_bundle((tmp_path / "orbits.json").read_text()).build()
    assert load_rep.passed
    assert "PT2/G" in built.categories
    assert "P_PT2" in built.functors
    # the emitted bundle passes validation in turn.
    code, rep = _run(capsys, "validate", "--input", out)
    assert code == 0, rep


def test_smash_pipeline(tmp_path, capsys, bundles):
    src = _write(tmp_path, "c2", bundles["c2_suite"])
    out = str(tmp_path / "smashes.json")
    code, rep = _run(capsys, "smash", "--input", src, "--output", out)
    assert code == 0, rep
    built, load_rep = loads_bundle((tmp_path / "smashes.json").read_text()).build()
    assert load_rep.passed
    assert "GA2#G" in built.categories
    assert "Q_GA2" in built.functors
    code, rep = _run(capsys, "validate", "--input", out)
    assert code == 0, rep


def test_covering_and_factorize_pipeline(tmp_path, capsys, bundles):
    src = _write(tmp_path, "c2", bundles["c2_suite"])
    orbits = str(tmp_path / "orbits.json")
    _run(capsys, "orbit", "--input", src, "--output", orbits)

    code, rep = _run(capsys, "check-covering", "--input", orbits)
    assert code == 0, rep

    fact = str(tmp_path / "factored.json")
    code, rep = _run(capsys, "factorize", "--input", orbits, "--output", fact)
    assert code == 0, rep
    built, load_rep = loads_bundle((tmp_path / "factored.json").read_text()).build()
    assert load_rep.passed
    assert any(n.startswith("H_") for n in built.functors)


def test_orbit_requires_an_action(tmp_path, capsys):
    data = make_bundle(RingSpec.rationals(), FinGroup.cyclic(2), {"PT2": pt2().base})
    path = _write(tmp_path, "plain", data)
    code, rep = _run(capsys, "orbit", "--input", path)
    assert code == 2
    assert "action" in rep["error"]


def test_verify_theorem_command(tmp_path, capsys, bundles):
    for name, data in bundles.items():
        path = _write(tmp_path, name, data)
        code, rep = _run(capsys, "verify-theorem", "--input", path)
        assert code == 0, (name, [c for c in rep["checks"] if not c["ok"]])
        assert rep["passed"] is True


def test_verify_theorem_flags_negatives(tmp_path, capsys, negatives):
    path = _write(tmp_path, "bad_action", negatives["bad_action"])
    code, rep = _run(capsys, "verify-theorem", "--input", path)
    assert code == 1
    failing = [c["name"] for c in rep["checks"] if not c["ok"]]
    assert "gcat.SW2X.action.valid" in failing


def test_roundtrip_command(tmp_path, capsys, bundles):
    for name, data in bundles.items():
        path = _write(tmp_path, name, data)
        code, rep = _run(capsys, "roundtrip", "--input", path)
        assert code == 0, (name, rep)
        byname = {c["name"]: c["ok"] for c in rep["checks"]}
        assert byname["roundtrip.reload"] and byname["roundtrip.stable"]
