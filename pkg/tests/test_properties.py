from dataclasses import replace

import pytest

from lamlab.evaluation import properties
from lamlab.sampling.terms import RandomTermSampler, RandomTypeSampler
from lamlab.terms.syntax import Free, free_vars, is_closed


def test_random_terms_are_closed():
    for t in RandomTermSampler(100, 8, seed=3).get_instances():
        assert is_closed(t)


def test_random_terms_with_free_names():
    found = set()
    for t in RandomTermSampler(100, 8, free_names=("x", "y"), seed=3).get_instances():
        assert free_vars(t) <= {"x", "y"}
        found |= free_vars(t)
    assert found == {"x", "y"}


def test_samplers_are_reproducible():
    assert RandomTermSampler(20, 10, seed=5).get_instances() == RandomTermSampler(20, 10, seed=5).get_instances()
    assert RandomTypeSampler(20, 6, seed=5).get_instances() == RandomTypeSampler(20, 6, seed=5).get_instances()


@pytest.mark.parametrize("check,kwargs", [
    (properties.check_confluence, {"count": 60}),
    (properties.check_head_substitution_stability, {"count": 40}),
    (properties.check_context_stability, {"count": 20}),
    (properties.check_determinism, {"count": 40}),
    (properties.check_star_homomorphism, {"count": 50}),
    (properties.check_round_trip, {}),
    (properties.check_substitution_lemma, {}),
    (properties.check_erasure_coherence, {}),
])
def test_kernel_properties_hold(check, kwargs):
    report = check(**kwargs)
    assert report.passed, report.detail


def test_claim_ids_follow_the_kernel_prefix():
    assert properties.check_round_trip().claim_id == "kernel.round-trip"
    assert properties.check_confluence(count=5).claim_id == "kernel.confluence"


def test_confluence_reports_a_counterexample_for_a_broken_strategy(monkeypatch):
    def wrong_order(t, fuel, rng):
        trace = properties.normalize(t, fuel, record=False)
        return replace(trace, final=Free("wrong"))

    monkeypatch.setattr(properties, "normalize_randomly", wrong_order)
    report = properties.check_confluence(count=10)
    assert not report.passed
    assert "random order gives wrong" in report.detail
