import random

import hypothesis
import pytest

from lamlab.terms.equivalence import Verdict, beta_equiv, head_common_reduct
from lamlab.terms.reader import parse_term
from lamlab.terms.reduction import Status, head_step, head_reduce, normal_step, normalize, \
    normalize_randomly, redex_paths, random_step
from lamlab.terms.syntax import Free, church_numeral
from tests.strategies import closed_terms

OMEGA = parse_term(r"(\x.x x) (\x.x x)")


def test_head_reduction_stops_at_head_normal_form():
    trace = head_reduce(parse_term(r"(\x.\y.x) a b"), 10)
    assert trace.status == Status.HEAD_NORMAL_FORM
    assert trace.final == Free("a")
    assert trace.fuel_used == 2
    assert trace.steps == (parse_term(r"(\y.a) b"), Free("a"))


def test_head_reduction_leaves_arguments_alone():
    t = parse_term(r"\y.y ((\x.x) a)")
    assert head_step(t) is None
    assert normal_step(t) == parse_term(r"\y.y a")


def test_head_redex_under_binders():
    assert head_step(parse_term(r"\y.(\x.x) y b")) == parse_term(r"\y.y b")


def test_omega_runs_out_of_fuel():
    trace = head_reduce(OMEGA, 10)
    assert trace.status == Status.FUEL_EXHAUSTED
    assert not trace.terminated
    assert trace.fuel_used == 10
    assert trace.final == OMEGA


def test_fuel_is_not_exhausted_when_the_last_step_lands_on_a_normal_form():
    trace = normalize(parse_term(r"(\x.x) a"), 1)
    assert trace.status == Status.NORMAL_FORM
    assert trace.fuel_used == 1


def test_fuel_must_be_positive():
    with pytest.raises(ValueError):
        normalize(OMEGA, 0)


def test_normalize_is_leftmost_outermost():
    # the argument diverges but is discarded
    trace = normalize(parse_term(r"(\x.\y.y) ((\x.x x) (\x.x x))"), 5)
    assert trace.status == Status.NORMAL_FORM
    assert trace.final == parse_term(r"\y.y")


def test_unrecorded_traces_keep_only_the_final_term():
    trace = normalize(parse_term("(\\n.\\x.\\f.f (n x f)) 2"), 100, record=False)
    assert trace.steps == ()
    assert trace.final == church_numeral(3)


def test_redex_paths():
    t = parse_term(r"(\x.x) ((\y.y) a)")
    assert sorted(redex_paths(t)) == [(), ("arg",)]
    assert redex_paths(church_numeral(3)) == []
    assert random_step(church_numeral(3), random.Random(0)) is None


@pytest.mark.parametrize("left,right,expected", [
    (r"(\x.x) a", "a", Verdict.EQUAL),
    (r"\x.\y.x", r"\x.\y.y", Verdict.DISTINCT),
    (r"(\n.\x.\f.f (n x f)) 0", "1", Verdict.EQUAL),
    (r"(\x.x x) (\x.x x)", "a", Verdict.UNKNOWN),
])
def test_beta_equiv(left, right, expected):
    assert beta_equiv(parse_term(left), parse_term(right), 100).verdict == expected


def test_unknown_verdict_reports_the_fuel_spent():
    verdict = beta_equiv(OMEGA, Free("a"), 7)
    assert verdict.is_unknown
    assert str(verdict) == "Unknown(7)"


def test_head_common_reduct():
    t = parse_term(r"(\x.x) a ((\y.y) b)")
    u = parse_term(r"(\z.a) c ((\y.y) b)")
    assert head_common_reduct(t, u, 10).is_equal
    assert head_common_reduct(Free("a"), Free("b"), 10).is_distinct
    assert head_common_reduct(OMEGA, Free("b"), 10).is_unknown


@hypothesis.settings(deadline=None)
@hypothesis.given(closed_terms)
def test_strategies_agree_on_normal_forms(t):
    leftmost = normalize(t, 200, record=False)
    randomized = normalize_randomly(t, 200, random.Random(1))
    if leftmost.status == Status.NORMAL_FORM and randomized.status == Status.NORMAL_FORM:
        assert leftmost.final == randomized.final


@hypothesis.given(closed_terms)
def test_more_fuel_extends_the_head_trace(t):
    short = head_reduce(t, 5)
    longer = head_reduce(t, 10)
    assert longer.steps[:len(short.steps)] == short.steps
