import hypothesis
import pytest

from lamlab.errors import ParseError, UnboundVariableError, DomainMismatchError, NotAnArrowError, \
    FreenessViolationError, NotAForallError, StarTranslationError
from lamlab.systemf.checker import Context, check
from lamlab.systemf.reader import parse_type, print_type, parse_typed_term, print_typed_term, \
    read_definitions
from lamlab.systemf.syntax import TypedVar, TypedLam, TypedApp, TypeLam, TypeApp, church_witness, \
    erase, star_witness, typed_subst, typed_type_subst, rename_type_binders
from lamlab.systemf.types import TVar, TFree, Arrow, Forall, BOTTOM, neg, arrows, forall, \
    type_open, type_subst, free_type_vars, godel_star
from lamlab.terms.reader import parse_term
from lamlab.terms.syntax import church_numeral
from tests.strategies import types

X, Y = TFree("X"), TFree("Y")
N = parse_type("forall X. X -> (X -> X) -> X")
B = parse_type("forall X. X -> X -> X")


def test_forall_binds_by_index():
    assert forall("X", Arrow(X, Y)) == Forall(Arrow(TVar(0), Y))
    assert forall("X", X) == forall("Y", Y)
    assert free_type_vars(forall("X", Arrow(X, Y))) == frozenset(["Y"])


def test_type_open_and_substitution():
    assert type_open(Arrow(TVar(0), TVar(0)), N) == Arrow(N, N)
    # substituting under a quantifier never captures
    assert type_subst(forall("Y", Arrow(X, Y)), "X", Y) == Forall(Arrow(Y, TVar(0)))


@pytest.mark.parametrize("text,expected", [
    ("X -> Y -> X", arrows(X, Y, X)),
    ("(X -> Y) -> X", Arrow(Arrow(X, Y), X)),
    ("~X", neg(X)),
    ("~~X -> bot", Arrow(neg(neg(X)), BOTTOM)),
    ("forall X Y. X -> Y", forall("X", forall("Y", Arrow(X, Y)))),
    ("X -> forall Y. Y", Arrow(X, forall("Y", Y))),
    ("X*", neg(X)),
    ("(X -> Y)*", Arrow(neg(X), neg(Y))),
])
def test_parse_type(text, expected):
    assert parse_type(text) == expected


def test_aliases_expand_in_place():
    aliases = {"N": N}
    assert parse_type("N -> N", aliases) == Arrow(N, N)
    assert parse_type("N*", aliases) == godel_star(N)


@pytest.mark.parametrize("a,expected", [
    (N, "forall X. X -> (X -> X) -> X"),
    (godel_star(N), "forall X. ~X -> (~X -> ~X) -> ~X"),
    (neg(Arrow(X, Y)), "~(X -> Y)"),
    (neg(neg(X)), "~~X"),
    (Arrow(forall("X", X), BOTTOM), "~(forall X. X)"),
    # the binder hint X would capture the free X
    (Forall(Arrow(TVar(0), X), "X"), "forall X'. X' -> X"),
])
def test_print_type(a, expected):
    assert print_type(a) == expected


@hypothesis.given(types)
def test_print_then_parse_gives_back_the_type(a):
    assert parse_type(print_type(a)) == a


def test_star_translation():
    assert godel_star(X) == neg(X)
    assert godel_star(BOTTOM) == BOTTOM
    assert godel_star(N) == parse_type("forall X. ~X -> (~X -> ~X) -> ~X")


@hypothesis.given(types, types)
def test_star_is_homomorphic(a, b):
    assert godel_star(Arrow(a, b)) == Arrow(godel_star(a), godel_star(b))
    assert godel_star(forall("X", a)) == forall("X", godel_star(a))


def test_church_witness_checks_at_n():
    for n in range(5):
        assert check(None, church_witness(n)) == N
        assert erase(church_witness(n)) == church_numeral(n)


def test_typed_term_syntax():
    t = parse_typed_term(r"/\X. \x:X. \f:X -> X. f (f x)")
    assert t == church_witness(2)
    assert parse_typed_term(r"/\X Y. \x:X. \y:Y. x") == \
        TypeLam("X", TypeLam("Y", TypedLam("x", X, TypedLam("y", Y, TypedVar("x")))))
    assert parse_typed_term("n [X] x f") == \
        TypedApp(TypedApp(TypeApp(TypedVar("n"), X), TypedVar("x")), TypedVar("f"))
    assert parse_typed_term("3") == church_witness(3)


def test_type_binders_stay_named_inside_annotations():
    aliases = {"X": N}
    t = parse_typed_term(r"/\X. \x:X. x", aliases)
    assert t == TypeLam("X", TypedLam("x", X, TypedVar("x")))
    assert parse_typed_term(r"\x:X. x", aliases) == TypedLam("x", N, TypedVar("x"))


def test_print_typed_term():
    assert print_typed_term(church_witness(1)) == r"/\X. \x:X. \f:X -> X. f x"
    t = TypedApp(TypeApp(TypedVar("n"), N), TypedLam("x", X, TypedVar("x")))
    assert print_typed_term(t) == r"n [forall X. X -> (X -> X) -> X] (\x:X. x)"


def test_application_rule():
    ctx = Context([("f", Arrow(X, Y)), ("x", X)])
    assert check(ctx, parse_typed_term("f x")) == Y


def test_unbound_variable():
    with pytest.raises(UnboundVariableError) as info:
        check(None, TypedVar("x"))
    assert info.value.name == "x"


def test_domain_mismatch_carries_both_types():
    ctx = Context([("f", Arrow(X, Y)), ("y", Y)])
    with pytest.raises(DomainMismatchError) as info:
        check(ctx, parse_typed_term("f y"))
    assert info.value.expected == X
    assert info.value.actual == Y


def test_applying_a_non_function():
    with pytest.raises(NotAnArrowError):
        check(Context([("x", X)]), parse_typed_term("x x"))


def test_generalization_side_condition():
    # x : X is in the context, so X cannot be generalized
    with pytest.raises(FreenessViolationError) as info:
        check(Context([("x", X)]), parse_typed_term(r"/\X. x"))
    assert info.value.type_variable == "X"
    assert info.value.term_variable == "x"


def test_instantiating_a_non_forall():
    with pytest.raises(NotAForallError):
        check(Context([("x", X)]), parse_typed_term("x [Y]"))


def test_instantiation_rule():
    identity = parse_typed_term(r"/\X. \x:X. x")
    assert check(None, identity) == parse_type("forall X. X -> X")
    assert check(None, TypeApp(identity, N)) == Arrow(N, N)


def test_context_extension_shadows():
    ctx = Context([("x", X)]).extend("x", Y)
    assert ctx.lookup("x") == Y
    assert len(ctx) == 1
    with pytest.raises(AssertionError):
        Context([("x", X), ("x", Y)])


def test_typed_substitution_renames_binders():
    # (\y:X. x)[y/x] must not capture the free y
    t = TypedLam("y", X, TypedVar("x"))
    result = typed_subst(t, "x", TypedVar("y"))
    assert result.name != "y"
    assert result.body == TypedVar("y")
    assert erase(result) == erase(TypedLam("z", X, TypedVar("y")))


def test_typed_type_substitution_renames_type_binders():
    t = TypeLam("Y", TypedLam("x", X, TypedLam("y", Y, TypedVar("x"))))
    result = typed_type_subst(t, "X", Y)
    assert result.name != "Y"
    assert result.body.annotation == Y


def test_rename_type_binders():
    assert rename_type_binders(church_witness(1), ["X"]) == church_witness(1, "X'")
    assert rename_type_binders(church_witness(1), ["X", "X'"]) == church_witness(1, "X''")
    t = church_witness(2)
    assert rename_type_binders(t, ["Y"]) is t


def test_inlined_witnesses_avoid_the_type_variables_in_scope():
    env = {"I": parse_typed_term(r"/\X. \x:X. x")}
    t = parse_typed_term(r"/\X. \y:X. I", env=env)
    assert t.body.body == TypeLam("X'", TypedLam("x", TFree("X'"), TypedVar("x")))
    assert check(None, t) == parse_type("forall X. X -> forall Y. Y -> Y")

    # the numeral sits under y : X, so its own X is renamed
    t = parse_typed_term(r"/\X. \y:X. 2")
    assert t.body.body == church_witness(2, "X'")
    assert check(None, t) == Forall(Arrow(TVar(0, "X"), N), "X")


def test_star_witness():
    starred = star_witness(church_witness(2))
    assert check(None, starred) == godel_star(N)
    assert erase(starred) == church_numeral(2)
    with pytest.raises(StarTranslationError):
        star_witness(parse_typed_term("n [X]"))


def test_read_definitions_mixes_statements():
    definitions = read_definitions("\n".join([
        "type B = forall X. X -> X -> X",
        "def T = \\x.\\y.x",
        "tdef T : B =",
        "    /\\X. \\x:X. \\y:X. x",
        "tdef T2 : B -> B = \\b:B. T",
    ]))
    assert definitions.types["B"] == B
    assert definitions.terms["T"] == parse_term(r"\x.\y.x")
    assert definitions.typed["T"].claimed_type == B
    assert definitions.typed["T"].line == 3
    assert check(None, definitions.typed["T"].witness) == B
    assert check(None, definitions.typed["T2"].witness) == Arrow(B, B)


def test_read_definitions_rejects_unknown_statements():
    with pytest.raises(ParseError):
        read_definitions("let x = y")
