import json
from pathlib import Path

import pytest

from torsionlab.corpus import REFERENCE_INDEX, SPECS, resolve_id, run_suite, suite_exit_code, verify

GOLDEN = Path(__file__).parent / "golden" / "suite_seed0.json"


@pytest.fixture(scope="module")
def suite():
    return run_suite(seed=0, timing=False)


def test_schema(suite):
    assert suite["version"] == 1
    assert [c["check_id"] for c in suite["checks"]] == list(SPECS)
    for c in suite["checks"]:
        assert set(c) == {"check_id", "status", "paper_ref", "bounds", "witnesses", "runtime_ms"}
        assert c["status"] in ("pass", "fail", "unknown")
        assert isinstance(c["runtime_ms"], int)
        assert "seed" in c["bounds"]


def test_all_pass(suite):
    assert {c["check_id"]: c["status"] for c in suite["checks"]} == {cid: "pass" for cid in SPECS}
    assert suite_exit_code(suite) == 0


def test_references_resolve(suite):
    for c in suite["checks"]:
        assert c["paper_ref"] in REFERENCE_INDEX
        for w in c["witnesses"]:
            assert w["ref"] in REFERENCE_INDEX


def test_golden(suite):
    text = json.dumps(suite, indent=2, sort_keys=True) + "\n"
    assert text == GOLDEN.read_text()


def test_seed_changes_samples():
    a = verify("2.90", seed=0, timing=False).to_json()
    b = verify("2.90", seed=1, timing=False).to_json()
    assert a["status"] == b["status"] == "pass"
    assert a != b


@pytest.mark.parametrize("cid,overrides", [("2.20", {"bound": 16, "samples": 40}),
                                           ("2.90", {"bound": 18, "samples": 60}),
                                           ("2.100", {"bound": 20, "samples": 40}),
                                           ("2.110+2.120", {"bound": 14, "samples": 20}),
                                           ("1.200A", {"bound": 20, "samples": 30})])
def test_larger_bounds_never_fail(cid, overrides):
    assert verify(cid, seed=2, timing=False, **overrides).status == "pass"


def test_aliases():
    assert resolve_id("2.120") == "2.110+2.120"
    with pytest.raises(KeyError):
        resolve_id("9.99")


def test_single_prime_tensor():
    r = verify("2.50", p=2, levels=1, samples=10, timing=False)
    assert r.status == "pass"
    assert [w["name"] for w in r.witnesses] == ["roots-p2", "delta-p2", "nilradical-idempotent-p2"]
