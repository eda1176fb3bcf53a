import json
import random
import warnings

import pytest

from cliquemax.cache import CACHE_ENV, CacheAuditError, CliqueCountCache, cached_count_cliques
from cliquemax.canon import canonical_form
from cliquemax.cli import cli_main
from cliquemax.counting import count_cliques
from cliquemax.graph import complete, cycle
from cliquemax.graph6 import graph6_decode
from cliquemax.report import (
    SCHEMA_VERSION, SchemaMismatch, UNIQUE, VerificationReport, report_read, report_write,
)
from conftest import random_graph


@pytest.mark.parametrize("argv, code", [
    (["verify-prop", "--delta", "3", "--b", "2", "--t", "3"], 0),
    (["identity", "--graph6", "D~{"], 0),
    (["verify-theorem", "--n", "6", "--delta", "2", "--t", "2"], 0),
    (["verify-theorem", "--n", "6", "--delta", "2", "--t", "3", "--t-max", "6"], 0),
    (["count", "--graph6", "D~{", "--t", "3"], 0),
    (["kk-check", "--n", "6", "--t", "3", "--t-max", "4"], 0),
    (["ft", "--t", "5", "--n", "60"], 0),
    (["smooth-demo", "--delta", "4", "--b", "3", "--t", "4", "--n", "5"], 0),
    (["enumerate", "--n", "5", "--delta", "2"], 0),
    (["search-open", "--a", "2", "--delta", "2", "--b", "1"], 0),
    (["frobnicate"], 2),
    (["verify-prop", "--delta", "3"], 2),
    (["verify-prop", "--delta", "3", "--b", "2", "--t", "3", "--bogus"], 2),
    (["verify-prop", "--delta", "3", "--b", "9", "--t", "3"], 2),
    (["identity", "--graph6", "!!"], 2),
    (["ft", "--t", "2"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert cli_main(argv) == code
    if code == 2:
        assert capsys.readouterr().err


def test_verify_prop_artifacts(tmp_path):
    out = tmp_path / "report.json"
    assert cli_main(["verify-prop", "--delta", "3", "--b", "2", "--t", "3", "--out", str(out)]) == 0
    r = report_read(out)
    assert r.predicted_value == 4 and r.observed_max == 4
    witnesses = (tmp_path / "report.json.witnesses.g6").read_text().split()
    assert len(witnesses) == 2 and all(count_cliques(graph6_decode(w), 3) == 4 for w in witnesses)
    manifest = json.loads((tmp_path / "report.json.manifest.json").read_text())
    assert manifest["subcommand"] == "verify-prop" and len(manifest["config_hash"]) == 16


def test_theorem_scope_warning_in_report(tmp_path):
    out = tmp_path / "t2.json"
    assert cli_main(["verify-theorem", "--n", "6", "--delta", "2", "--t", "2", "--out", str(out)]) == 0
    assert report_read(out).scope_warning


def test_manifest_hash_is_deterministic(tmp_path):
    hashes = []
    for name in ("a", "b"):
        out = tmp_path / f"{name}.json"
        cli_main(["verify-prop", "--delta", "2", "--b", "1", "--t", "3", "--out", str(out)])
        hashes.append(json.loads((tmp_path / f"{name}.json.manifest.json").read_text())["config_hash"])
    a, b = (report_read(tmp_path / f"{x}.json") for x in "ab")
    assert hashes[0] == hashes[1] and a.comparable() == b.comparable()


def test_search_open_resume_flags(tmp_path):
    out = tmp_path / "open.json"
    assert cli_main(["search-open", "--a", "2", "--delta", "2", "--b", "2", "--out", str(out)]) == 0
    assert (tmp_path / "open.json.ledger.jsonl").exists()
    first = report_read(out)
    assert cli_main(["search-open", "--a", "2", "--delta", "2", "--b", "2", "--resume", "--out", str(out)]) == 0
    assert report_read(out).comparable() == first.comparable()
    assert cli_main(["search-open", "--a", "2", "--delta", "2", "--b", "2", "--fresh", "--out", str(out)]) == 0
    assert cli_main(["search-open", "--a", "2", "--delta", "2", "--b", "2", "--fresh", "--resume"]) == 2


def test_graph6_file_input(tmp_path, capsys):
    p = tmp_path / "in.g6"
    p.write_text("D~{\nBw\n")
    assert cli_main(["identity", "--graph6", str(p)]) == 0
    assert capsys.readouterr().out.count("holds=True") == 2


def test_enumerate_to_file(tmp_path):
    out = tmp_path / "g.g6"
    assert cli_main(["enumerate", "--n", "6", "--delta", "4", "--mode", "min", "--out", str(out)]) == 0
    assert len(out.read_text().split()) == 4


# -- reports ---------------------------------------------------------------------

def sample_report(**kw):
    base = dict(mode="prop", parameters={"Delta": 3, "b": 2, "t": 3, "n": 6}, predicted_value=10**30,
                observed_max=10**30, witnesses=["E~~w"], witness_count=10**30 + 7, prediction_holds=True,
                uniqueness_class=UNIQUE, graphs_examined=123, elapsed=1.5, details={"k": "v"})
    base.update(kw)
    return VerificationReport(**base)


def test_report_round_trip(tmp_path):
    r = sample_report()
    p = tmp_path / "r.json"
    report_write(r, p)
    assert report_read(p) == r
    doc = json.loads(p.read_text())
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["observed_max"] == str(10**30)


def test_report_list_round_trip(tmp_path):
    rs = [sample_report(), sample_report(observed_max=3, scope_warning="x")]
    p = tmp_path / "rs.json"
    report_write(rs, p)
    assert report_read(p) == rs


def test_schema_mismatch(tmp_path):
    p = tmp_path / "r.json"
    report_write(sample_report(), p)
    doc = json.loads(p.read_text())
    doc["schema_version"] = SCHEMA_VERSION + 1
    p.write_text(json.dumps(doc))
    with pytest.raises(SchemaMismatch):
        report_read(p)


def test_unknown_uniqueness_class():
    with pytest.raises(ValueError):
        sample_report(uniqueness_class="maybe")


# -- cache -----------------------------------------------------------------------

def test_cache_put_get(tmp_path):
    cache = CliqueCountCache(tmp_path)
    cert = canonical_form(complete(5)).certificate
    assert cache.get(cert, 3) is None
    cache.put(cert, 3, 10)
    assert cache.get(cert, 3) == 10
    cache.put(cert, 9, 10**40)
    cache.save()
    again = CliqueCountCache(tmp_path)
    assert again.get(cert, 3) == 10 and again.get(cert, 9) == 10**40


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path / "c"))
    assert CliqueCountCache().directory == tmp_path / "c"


def test_corrupt_cache_rebuilt(tmp_path):
    (tmp_path / "clique_counts.json").write_text("{not json")
    with pytest.warns(RuntimeWarning):
        cache = CliqueCountCache(tmp_path)
    assert cache.entries == {}
    assert cached_count_cliques(cycle(5), 2, cache) == 5
    cache.save()
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert CliqueCountCache(tmp_path).get(canonical_form(cycle(5)).certificate, 2) == 5


def test_cache_audit(tmp_path):
    rng = random.Random(8)
    cache = CliqueCountCache(tmp_path)
    graphs = [random_graph(rng.randint(3, 12), 0.5, rng) for _ in range(60)]
    for g in graphs:
        cached_count_cliques(g, 3, cache)
    # every hit audited: all must agree with a recount
    for g in graphs:
        assert cached_count_cliques(g, 3, cache, audit_rate=1.0, rng=rng) == count_cliques(g, 3)
    assert cache.hits >= 60
    cert = canonical_form(graphs[0]).certificate
    cache.put(cert, 3, count_cliques(graphs[0], 3) + 1)
    with pytest.raises(CacheAuditError):
        cached_count_cliques(graphs[0], 3, cache, audit_rate=1.0)


def test_count_with_cache(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    assert cli_main(["count", "--graph6", "D~{", "--t", "3", "--cache"]) == 0
    first = capsys.readouterr().out
    assert cli_main(["count", "--graph6", "D~{", "--t", "3", "--cache"]) == 0
    assert capsys.readouterr().out == first
    assert (tmp_path / "clique_counts.json").exists()
