"""Resumable search over several disjoint cliques, where the answer is not known in general."""

import tempfile
from pathlib import Path

from cliquemax.search import SearchInterrupted, search_open_conjecture

with tempfile.TemporaryDirectory() as tmp:
    ledger = Path(tmp) / "ledger.jsonl"
    try:
        search_open_conjecture(2, 3, 2, 3, ledger_path=ledger, stop_after=3)
    except SearchInterrupted as exc:
        print("interrupted:", exc)
    report = search_open_conjecture(2, 3, 2, 3, ledger_path=ledger)

print(f"n = {report.parameters['n']}: max triangles {report.observed_max}, "
      f"2K4 + K2 gives {report.predicted_value}, attains = {report.details['construction_attains_max']}")
print(f"{report.witness_count} extremal classes among {report.graphs_examined} graphs:", report.witnesses)
