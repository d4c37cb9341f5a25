from artifact.identities import fts_suite, jordan_suite, suite_rng
from artifact.verify import KNOWN_DISCREPANCIES, _rec, failing_forms, verify_all


def test_rec_statuses():
    assert _rec("x", True)["status"] == "pass"
    assert _rec("x", False)["status"] == "fail"
    known = next(iter(KNOWN_DISCREPANCIES))
    assert _rec(known, False)["status"] == "xfail"
    unexpected = _rec(known, True)
    assert unexpected["status"] == "fail" and unexpected["detail"]["unexpected_pass"]


def test_suite_rng_is_seeded_per_name():
    assert suite_rng(1, "a").random() == suite_rng(1, "a").random()
    assert suite_rng(1, "a").random() != suite_rng(1, "b").random()
    assert suite_rng(1, "a").random() != suite_rng(2, "a").random()


def test_small_identity_suites():
    for d in ("R", "R+G(3,1)", "J3(Hs)"):
        r = jordan_suite(d, trials=5, seed=9)
        assert r["ok"], r
    r = fts_suite("J3(R)", trials=5, seed=9, oracle_checks=1)
    assert r["ok"] and r["nondegenerate"]


def test_verify_all_subset_and_failing_forms():
    rep = verify_all(seed=3, only=["roots", "related"], trials=5)
    assert rep["ok"] and list(rep["suites"]) == ["roots", "related"]
    assert rep["suites"]["related"]["counts"]["xfail"] == 1
    fake = {"suites": {"s": {"checks": [{"status": "fail", "detail": {"form": "G2(2)"}},
                                        {"status": "xfail", "detail": {"form": "E7(-25)"}}]}}}
    assert failing_forms(fake) == ["G2(2)"]
