"""Exhaustive search for the open case ``a >= 2`` of the clique-count problem.

Over graphs on ``a(D+1) + b`` vertices with maximum degree at most ``D`` we
find the largest ``k_t`` and compare it with ``a K_{D+1} + K_b``.  The class
is split into independent enumeration tasks; each finished task appends one
line to a ledger file so an interrupted run resumes where it stopped.
Results merge in task order, so the final report does not depend on how
many workers ran or how often the run was interrupted.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable

from .counting import clique_counts, count_cliques, degree_double_count_bound, extremal_value_cliques
from .enumeration import EnumerationConfig, EnumerationTask, run_task, split_tasks
from .graph import extremal_cliques
from .graph6 import graph6_encode
from .report import ALL_GRAPHS_TRIVIAL, EXTREMAL_FAMILY, UNIQUE, VIOLATED, VerificationReport
from .verify import DEFAULT_WITNESS_LIMIT, Extremum, ParameterError

log = logging.getLogger(__name__)

SEARCH_MAX_VERTICES = 11


class SearchInterrupted(RuntimeError):
    """Raised after ``stop_after`` tasks; the ledger holds the finished ones."""


def config_hash(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def _split_depth(n: int) -> int:
    return min(n, max(0, n - 4))


def _run_one(task: EnumerationTask, t: int, limit: int) -> dict:
    ext = Extremum(limit=limit)
    for g in run_task(task):
        counts = clique_counts(g, t)
        ext.offer(counts[t] if t < len(counts) else 0, graph6_encode(g))
    return ext.as_dict()


def _run_one_packed(args) -> tuple[int, dict]:
    index, prefix, config, t, limit = args
    return index, _run_one(EnumerationTask(prefix, EnumerationConfig.from_dict(config)), t, limit)


class TaskLedger:
    """Append-only JSON-lines record of finished tasks for one configuration."""

    def __init__(self, path: Path, key: str):
        self.path = Path(path)
        self.key = key

    def load(self) -> dict[str, dict]:
        done: dict[str, dict] = {}
        if not self.path.exists():
            return done
        with self.path.open() as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    # a torn final line from an interrupted write
                    log.warning("skipping unreadable ledger line in %s", self.path)
                    continue
                if entry.get("config_hash") == self.key:
                    done[entry["prefix"]] = entry["result"]
        return done

    def record(self, prefix: str, result: dict) -> None:
        with self.path.open("a") as fh:
            fh.write(json.dumps({"config_hash": self.key, "prefix": prefix, "result": result}) + "\n")
            fh.flush()
            os.fsync(fh.fileno())

    def reset(self) -> None:
        if self.path.exists():
            self.path.unlink()


def search_open_conjecture(a: int, max_deg: int, b: int, t: int, *,
                           jobs: int = 1,
                           ledger_path=None,
                           resume: bool = True,
                           stop_after: int | None = None,
                           witness_limit: int = DEFAULT_WITNESS_LIMIT,
                           split_depth: int | None = None) -> VerificationReport:
    """Largest ``k_t`` over max-degree-``max_deg`` graphs on ``a(max_deg+1)+b`` vertices.

    The report says whether ``a K_{max_deg+1} + K_b`` attains it; nothing is
    asserted.  With ``ledger_path`` set, finished tasks are persisted and
    (with ``resume``) reused.  ``stop_after`` aborts with
    :class:`SearchInterrupted` after that many newly finished tasks.
    """
    if a < 1 or max_deg < 0 or not 0 <= b <= max_deg:
        raise ParameterError(f"need a >= 1 and 0 <= b <= Delta, got a={a}, Delta={max_deg}, b={b}")
    if t < 1:
        raise ParameterError(f"t must be positive, got {t}")
    n = a * (max_deg + 1) + b
    if not 1 <= n <= SEARCH_MAX_VERTICES:
        raise ParameterError(f"a(Delta+1)+b must lie in 1..{SEARCH_MAX_VERTICES}, got {n}")
    start = time.perf_counter()
    config = EnumerationConfig.max_degree(n, max_deg)
    params = {"a": a, "Delta": max_deg, "b": b, "t": t, "n": n}
    depth = _split_depth(n) if split_depth is None else split_depth
    key = config_hash({"mode": "open", "params": params, "depth": depth, "limit": witness_limit})
    tasks = split_tasks(config, depth)

    done: dict[str, dict] = {}
    ledger = None
    if ledger_path is not None:
        ledger = TaskLedger(Path(ledger_path), key)
        if resume:
            done = ledger.load()
        else:
            ledger.reset()
    pending = [(i, task.prefix, config.as_dict(), t, witness_limit)
               for i, task in enumerate(tasks) if task.prefix not in done]
    log.info("%d tasks, %d already finished", len(tasks), len(tasks) - len(pending))

    finished = 0
    for index, result in _execute(pending, jobs):
        prefix = tasks[index].prefix
        done[prefix] = result
        if ledger is not None:
            ledger.record(prefix, result)
        finished += 1
        if stop_after is not None and finished >= stop_after and len(done) < len(tasks):
            raise SearchInterrupted(f"stopped after {finished} tasks ({len(done)}/{len(tasks)} done)")

    total = Extremum(limit=witness_limit)
    for task in tasks:
        total = total.merge(Extremum.from_dict(done[task.prefix], witness_limit))

    predicted = extremal_value_cliques(max_deg, b, t, a=a)
    construction = extremal_cliques(a, max_deg, b)
    # the construction lies in the class, so it attains the max iff its count equals it
    attains = count_cliques(construction, t) == total.value
    if total.value > predicted:
        klass = VIOLATED
    elif total.value == 0 and predicted == 0:
        klass = ALL_GRAPHS_TRIVIAL
    elif attains and total.count == 1:
        klass = UNIQUE
    elif attains:
        klass = EXTREMAL_FAMILY
    else:
        klass = VIOLATED
    details = {
        "construction": graph6_encode(construction),
        "construction_attains_max": attains,
        "tasks": str(len(tasks)),
        "split_depth": str(depth),
        "config_hash": key,
    }
    if b == 0:
        details["double_count_bound"] = str(degree_double_count_bound(n, max_deg, t))
    return VerificationReport(
        mode="open",
        parameters=params,
        predicted_value=predicted,
        observed_max=total.value,
        witnesses=total.witnesses,
        witness_count=total.count,
        prediction_holds=total.value == predicted and attains,
        uniqueness_class=klass,
        graphs_examined=total.examined,
        elapsed=time.perf_counter() - start,
        details=details,
    )


def _execute(pending: list, jobs: int) -> Iterable[tuple[int, dict]]:
    if jobs <= 1 or len(pending) <= 1:
        for item in pending:
            yield _run_one_packed(item)
        return
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        yield from pool.map(_run_one_packed, pending, chunksize=1)
    finally:
        # an interrupted consumer must not wait for the queued tasks
        pool.shutdown(wait=True, cancel_futures=True)
