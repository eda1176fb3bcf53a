import random
from fractions import Fraction
from math import comb

import pytest

from cliquemax.algebra import RadicalSum
from cliquemax.canon import certificate_key
from cliquemax.counting import clique_profile
from cliquemax.enumeration import EnumerationConfig
from cliquemax.graph import complete, complete_bipartite, cycle, disjoint_union, extremal_cliques
from cliquemax.graph6 import graph6_decode
from cliquemax.report import ALL_GRAPHS_TRIVIAL, EXTREMAL_FAMILY, UNIQUE, VIOLATED
from cliquemax.smoothing import (
    EndpointLemmaViolation, EndpointPreconditionError, InfeasibleState, SmoothingState, endpoint_lemma_check,
    extreme_objective, objective, random_state, smooth_to_extreme,
)
from cliquemax.verify import (
    Extremum, ParameterError, independent_clique_duality, lemma_t3_case_split, recount_witnesses,
    scan_t3_case_split, verify_prop_cmp, verify_prop_range, verify_theorem_main, verify_theorem_range,
)


# -- extremum monoid ------------------------------------------------------------

def test_extremum_merge_is_associative_and_capped():
    rng = random.Random(4)
    items = [(rng.randint(0, 3), f"g{i}") for i in range(40)]
    parts = [Extremum(limit=5) for _ in range(4)]
    for i, (v, w) in enumerate(items):
        parts[i % 4].offer(v, w)
    left = parts[0].merge(parts[1]).merge(parts[2].merge(parts[3]))
    right = parts[0].merge(parts[1].merge(parts[2])).merge(parts[3])
    assert left.as_dict() == right.as_dict()
    assert left.value == 3 and left.count == sum(1 for v, _ in items if v == 3)
    assert len(left.witnesses) <= 5 and left.examined == 40


# -- theorem verifier -------------------------------------------------------------

def test_theorem_examples():
    r = verify_theorem_main(6, 2, 3)
    assert (r.predicted_value, r.observed_max, r.prediction_holds) == (4, 4, True)
    assert r.uniqueness_class == EXTREMAL_FAMILY
    r = verify_theorem_main(8, 4, 4)
    assert r.observed_max == r.predicted_value == 2
    assert r.uniqueness_class == UNIQUE and r.witness_count == 1
    assert certificate_key(graph6_decode(r.witnesses[0])) == certificate_key(complete_bipartite(4, 4))
    r = verify_theorem_main(7, 3, 3)
    assert r.observed_max == r.predicted_value == 5 and r.uniqueness_class == UNIQUE


def test_theorem_t2_flagged():
    r = verify_theorem_main(6, 2, 2)
    assert r.scope_warning is not None and r.claim_holds is None
    assert r.predicted_value == 7 and r.observed_max == 9


def test_theorem_range_trivial_and_recount():
    reports = verify_theorem_range(6, 3, range(3, 7))
    assert [r.observed_max for r in reports] == [2, 0, 0, 0]
    assert reports[1].uniqueness_class == ALL_GRAPHS_TRIVIAL
    assert all(recount_witnesses(r) for r in reports)


def test_theorem_parameter_errors():
    for args in [(6, 4, 3), (6, 0, 3), (11, 2, 3), (6, 2, 1)]:
        with pytest.raises(ParameterError):
            verify_theorem_main(*args)


# -- proposition verifier ---------------------------------------------------------

def test_prop_examples():
    r = verify_prop_cmp(3, 2, 3)
    assert r.predicted_value == r.observed_max == 4
    assert r.uniqueness_class == EXTREMAL_FAMILY and r.witness_count == 2
    assert r.details["family_matches"] is True
    r = verify_prop_cmp(4, 4, 3)
    assert r.observed_max == 14 and r.uniqueness_class == UNIQUE
    assert certificate_key(graph6_decode(r.witnesses[0])) == certificate_key(disjoint_union(complete(5), complete(4)))
    r = verify_prop_cmp(2, 3, 3)
    assert r.observed_max == 2 and r.uniqueness_class == UNIQUE


def test_prop_family_sizes():
    # b-vertex graphs up to isomorphism: 1, 2, 4, 11
    for b, size in [(1, 1), (2, 2), (3, 4)]:
        r = verify_prop_cmp(4, b, 4)
        assert r.witness_count == size and r.details["family_matches"]


def test_prop_beyond_clique_order():
    r = verify_prop_range(2, 2, [4, 5])
    assert all(x.uniqueness_class == ALL_GRAPHS_TRIVIAL and x.observed_max == 0 for x in r)


def test_prop_parameter_errors():
    for args in [(3, 0, 3), (3, 5, 3), (5, 5, 3), (3, 2, 2)]:
        with pytest.raises(ParameterError):
            verify_prop_cmp(*args)


def test_duality():
    for n, d in [(6, 2), (7, 3), (7, 4)]:
        assert independent_clique_duality(n, d, [3, 4])


# -- case split ---------------------------------------------------------------

def test_case_split_examples():
    s = lemma_t3_case_split(extremal_cliques(1, 4, 3), 3)
    assert s.case == "A" and s.vertex >= 5
    s = lemma_t3_case_split(cycle(6), 3)
    assert s.case == "A" and s.triangles_per_vertex == (0,) * 6
    with pytest.raises(ParameterError):
        lemma_t3_case_split(complete(6), 3)


def test_case_split_scans():
    for d, b in [(3, 2), (4, 2), (4, 3)]:
        tally = scan_t3_case_split(d, b)
        assert tally["B_failures"] == 0
    assert scan_t3_case_split(3, 2)["B"] == 4


# -- smoothing ----------------------------------------------------------------

def test_smoothing_random_runs():
    rng = random.Random(77)
    for d, b, t in [(4, 3, 4), (5, 2, 5), (6, 6, 4)]:
        expected = extreme_objective(d, b, t)
        assert expected == (d + 1) * comb(d, t - 1) + b * comb(b - 1, t - 1)
        for _ in range(20):
            res = smooth_to_extreme(random_state(d, b, t, rng))
            assert res.monotone
            assert all(not (y < x) for x, y in zip(res.objective_trace, res.objective_trace[1:]))
            assert res.objective_trace[-1] == expected
            assert (res.at_hi, res.at_lo) == (d + 1, b)
            assert res.push_steps <= d + b


def test_smoothing_fixed_point():
    xs = clique_profile(extremal_cliques(1, 4, 3), 3).per_vertex
    res = smooth_to_extreme(SmoothingState.for_class(4, 3, 4, xs))
    assert res.push_steps == 0 and res.raise_steps == 0
    assert len(res.objective_trace) == 1 and res.objective_trace[0] == 20


def test_push_apart_is_monotone():
    for t in (4, 5, 6):
        for x in (Fraction(7), Fraction(23, 2), Fraction(40)):
            for eps in (Fraction(1, 1000), Fraction(1, 3), Fraction(2)):
                before = objective([x, x], t)
                after = objective([x + eps, x - eps], t)
                assert not (after < before)


def test_smoothing_rejects_infeasible():
    with pytest.raises(InfeasibleState):
        SmoothingState.for_class(4, 0, 4, [0] * 5)
    with pytest.raises(InfeasibleState):
        SmoothingState.for_class(4, 3, 4, [1] * 7)
    with pytest.raises(InfeasibleState):
        smooth_to_extreme(SmoothingState.for_class(4, 3, 4, [6] * 8))
    with pytest.raises(InfeasibleState):
        smooth_to_extreme(SmoothingState([Fraction(1)], Fraction(0), Fraction(2), Fraction(5), 4))


def test_objective_is_radical_sum():
    assert isinstance(objective([Fraction(2), Fraction(3)], 4), RadicalSum)


# -- endpoint lemma -------------------------------------------------------------

def test_endpoint_lemma():
    assert endpoint_lemma_check([1, 1, 0, 0], 2)
    assert endpoint_lemma_check([1, 1, 1, 0, 0], 3)
    with pytest.raises(EndpointPreconditionError):
        endpoint_lemma_check([1, Fraction(1, 2), Fraction(1, 2)], 2)
    with pytest.raises(EndpointPreconditionError):
        endpoint_lemma_check([2, 0], 2)
    with pytest.raises(EndpointPreconditionError):
        endpoint_lemma_check([1, 0], 2)
    # broken hypotheses and a broken conclusion are reported differently
    assert not issubclass(EndpointLemmaViolation, EndpointPreconditionError)
