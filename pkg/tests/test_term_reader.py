import hypothesis
import pytest

from lamlab.errors import ParseError, UnboundNameError
from lamlab.terms.reader import parse_term, print_term, parse_definitions, tokenize
from lamlab.terms.syntax import Var, Free, Lam, App, lam, church_numeral
from tests.strategies import terms

a, b, f, x = Free("a"), Free("b"), Free("f"), Free("x")


@pytest.mark.parametrize("text,expected", [
    (r"\x.x", Lam(Var(0))),
    (r"\x y.x", Lam(Lam(Var(1)))),
    (r"\x.\y.x", Lam(Lam(Var(1)))),
    ("a b f", App(App(a, b), f)),
    ("a (b f)", App(a, App(b, f))),
    (r"(\x.x) a", App(Lam(Var(0)), a)),
    (r"f \x.x", App(f, Lam(Var(0)))),
    (r"\x.a x b", Lam(App(App(a, Var(0)), b))),
    ("2", church_numeral(2)),
    ("f 0", App(f, church_numeral(0))),
    ("d0", Free("d0")),
    ("x' x", App(Free("x'"), x)),
])
def test_parse(text, expected):
    assert parse_term(text) == expected


def test_comments_and_line_breaks_are_ignored():
    assert parse_term("# identity\n\\x.\n  x  # body\n") == Lam(Var(0))


def test_bound_names_shadow_definitions():
    env = {"x": church_numeral(1), "a": church_numeral(2)}
    assert parse_term(r"\x.x a", env) == Lam(App(Var(0), church_numeral(2)))


def test_strict_mode_rejects_unbound_names():
    with pytest.raises(UnboundNameError) as info:
        parse_term(r"\x.x y", strict=True)
    assert (info.value.line, info.value.column) == (1, 6)


@pytest.mark.parametrize("text", [r"\x x", "(a b", "a )", r"\.x", "", "def"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_term(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_term("a\n  (b")
    assert info.value.line == 2
    assert "expected ')'" in str(info.value)


def test_tokens_carry_positions():
    tokens = tokenize("\\x.\n  f x")
    assert [(t.text, t.line, t.column) for t in tokens] == [
        ("\\", 1, 1), ("x", 1, 2), (".", 1, 3), ("f", 2, 3), ("x", 2, 5)]


@pytest.mark.parametrize("t,expected", [
    (lam("x", lam("f", App(f, x))), r"\x.\f.f x"),
    (church_numeral(2), r"\x.\f.f (f x)"),
    (App(Lam(Var(0), "z"), church_numeral(0)), r"(\z.z) (\x.\f.x)"),
    (App(App(a, b), App(a, b)), "a b (a b)"),
    # the hint x would capture the free x
    (Lam(App(Var(0), x), "x"), r"\x'.x' x"),
    # the inner hint x would capture the outer binder it refers to
    (Lam(Lam(App(Var(0), Var(1)), "x"), "x"), r"\x.\x'.x' x"),
])
def test_print(t, expected):
    assert print_term(t) == expected


def test_inner_binder_may_reuse_an_unused_outer_name():
    assert print_term(Lam(Lam(Var(0), "x"), "x")) == r"\x.\x.x"


@hypothesis.given(terms)
def test_print_then_parse_gives_back_the_term(t):
    assert parse_term(print_term(t)) == t


def test_definitions_use_earlier_names():
    definitions = parse_definitions("def I = \\x.x\n# apply\ndef II = I I\n")
    assert list(definitions) == ["I", "II"]
    assert definitions["II"] == App(Lam(Var(0)), Lam(Var(0)))


def test_definitions_need_the_keyword():
    with pytest.raises(ParseError):
        parse_definitions("I = \\x.x")
