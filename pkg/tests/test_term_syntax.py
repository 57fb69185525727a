import hypothesis
import pytest

from lamlab.terms.syntax import Var, Free, Lam, App, lam, instantiate, substitute, free_vars, \
    is_closed, iter_apply, church_numeral, size, spine, shift
from tests.strategies import terms, closed_terms

x, y, f = Free("x"), Free("y"), Free("f")
identity = Lam(Var(0, "z"), "z")


def test_binder_hints_do_not_affect_equality():
    assert Lam(Var(0, "x"), "x") == Lam(Var(0, "y"), "y")
    assert hash(Lam(Var(0, "x"), "x")) == hash(Lam(Var(0, "y"), "y"))
    assert Lam(Var(0), "x") != Lam(Free("x"), "x")


def test_lam_abstracts_the_named_variable():
    assert lam("x", App(x, y)) == Lam(App(Var(0), y))
    assert lam("x", lam("y", x)) == Lam(Lam(Var(1)))


def test_calling_a_term_builds_applications():
    assert f(x, y) == App(App(f, x), y)


def test_instantiate_contracts_a_redex():
    # (\a.\b.a) y  ->  \b.y
    assert instantiate(Lam(Var(1)), y) == Lam(y)
    # (\a.a a) (\z.z)
    assert instantiate(App(Var(0), Var(0)), identity) == App(identity, identity)


def test_instantiate_shifts_arguments_with_loose_indices():
    # under one binder, substituting Var(0) (the outer variable) must not be captured
    body = Lam(Var(1))
    assert instantiate(body, Var(0)) == Lam(Var(1))


def test_instantiate_shares_a_closed_argument_and_lowers_outer_indices():
    result = instantiate(Lam(App(Var(1), Var(2))), identity)
    assert result == Lam(App(identity, Var(1)))
    assert result.body.fn is identity


@pytest.mark.parametrize("t,expected", [
    (App(x, y), frozenset(["x", "y"])),
    (lam("x", App(x, y)), frozenset(["y"])),
    (church_numeral(3), frozenset()),
])
def test_free_vars(t, expected):
    assert free_vars(t) == expected


def test_is_closed_rejects_loose_indices_and_free_names():
    assert is_closed(identity)
    assert not is_closed(Var(0))
    assert not is_closed(Lam(Free("a")))


def test_substitute_is_capture_avoiding():
    # (\y.x)[y/x] = \y'.y
    t = lam("y", x)
    assert substitute(t, "x", y) == Lam(y)
    assert substitute(t, "x", y) != identity


def test_church_numerals():
    assert church_numeral(0) == lam("x", lam("f", x))
    assert church_numeral(2) == lam("x", lam("f", f(f(x))))
    assert len(set(church_numeral(n) for n in range(20))) == 20


def test_iter_apply():
    assert iter_apply(f, 0, x) == x
    assert iter_apply(f, 3, x) == f(f(f(x)))


def test_size_and_spine():
    assert size(App(App(f, x), y)) == 5
    assert spine(f(x, y)) == (f, [x, y])
    assert spine(identity) == (identity, [])


@hypothesis.given(terms)
def test_substituting_an_absent_name_is_identity(t):
    assert substitute(t, "absent", identity) == t


@hypothesis.given(closed_terms)
def test_closed_terms_are_closed(t):
    assert is_closed(t)
    assert shift(t, 3) == t
