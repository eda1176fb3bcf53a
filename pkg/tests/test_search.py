import json

import pytest

from cliquemax.report import EXTREMAL_FAMILY, UNIQUE
from cliquemax.search import SearchInterrupted, TaskLedger, config_hash, search_open_conjecture
from cliquemax.verify import ParameterError, verify_prop_cmp


def test_examples():
    r = search_open_conjecture(2, 2, 1, 3)
    assert r.observed_max == r.predicted_value == 2
    assert r.details["construction_attains_max"] and r.uniqueness_class == UNIQUE
    r = search_open_conjecture(2, 2, 0, 3)
    assert r.observed_max == 2 and r.details["double_count_bound"] == "2"
    assert r.claim_holds is None


def test_agrees_with_prop_when_a_is_one():
    for d, b in [(4, 3), (3, 2), (2, 1), (3, 3)]:
        s = search_open_conjecture(1, d, b, 3)
        p = verify_prop_cmp(d, b, 3)
        assert (s.observed_max, s.witness_count, s.predicted_value) == (p.observed_max, p.witness_count, p.predicted_value)
        assert sorted(s.witnesses) == sorted(p.witnesses)


def test_family_case():
    r = search_open_conjecture(2, 3, 2, 3, jobs=4)
    assert r.observed_max == 8 and r.uniqueness_class == EXTREMAL_FAMILY and r.witness_count == 2


def test_jobs_do_not_change_report():
    one = search_open_conjecture(2, 2, 2, 3, jobs=1)
    four = search_open_conjecture(2, 2, 2, 3, jobs=4)
    assert one.comparable() == four.comparable()


def test_resume_after_interruption(tmp_path):
    ledger = tmp_path / "run.jsonl"
    baseline = search_open_conjecture(2, 3, 1, 3)
    with pytest.raises(SearchInterrupted):
        search_open_conjecture(2, 3, 1, 3, ledger_path=ledger, stop_after=2)
    with pytest.raises(SearchInterrupted):
        search_open_conjecture(2, 3, 1, 3, ledger_path=ledger, stop_after=1, jobs=2)
    lines = ledger.read_text().splitlines()
    assert len(lines) >= 3
    # a torn trailing write is tolerated
    with ledger.open("a") as fh:
        fh.write('{"config_hash": "')
    resumed = search_open_conjecture(2, 3, 1, 3, ledger_path=ledger)
    assert resumed.comparable() == baseline.comparable()


def test_fresh_ignores_ledger(tmp_path):
    ledger = tmp_path / "run.jsonl"
    key = search_open_conjecture(2, 2, 1, 3).details["config_hash"]
    # a poisoned entry would change the result if it were reused
    TaskLedger(ledger, key).record("bogus", {"value": 99, "witnesses": [], "count": 1, "examined": 1})
    fresh = search_open_conjecture(2, 2, 1, 3, ledger_path=ledger, resume=False)
    assert fresh.observed_max == 2
    assert all(json.loads(line)["prefix"] != "bogus" for line in ledger.read_text().splitlines())


def test_config_hash_is_stable():
    assert config_hash({"b": 1, "a": 2}) == config_hash({"a": 2, "b": 1})
    assert config_hash({"a": 1}) != config_hash({"a": 2})


def test_parameter_errors():
    for args in [(0, 2, 1, 3), (2, 2, 3, 3), (3, 3, 0, 3), (2, 2, 1, 0)]:
        with pytest.raises(ParameterError):
            search_open_conjecture(*args)
