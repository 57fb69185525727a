"""
Church-style typed terms. Term variables and Λ-bound type variables are named, so
the side condition of generalization ("X not free in the context") can be checked
literally; erasure produces the nameless untyped term.
"""

from dataclasses import dataclass

from lamlab.errors import StarTranslationError
from lamlab.systemf.types import Type, TFree, Arrow, free_type_vars, type_subst, godel_star
from lamlab.terms.syntax import Var, Free, Lam, App
from lamlab.util import fresh_name


class TypedTerm(object):
    pass


@dataclass(frozen=True)
class TypedVar(TypedTerm):
    name: str


@dataclass(frozen=True)
class TypedLam(TypedTerm):
    name: str
    annotation: Type
    body: TypedTerm


@dataclass(frozen=True)
class TypedApp(TypedTerm):
    fn: TypedTerm
    arg: TypedTerm


@dataclass(frozen=True)
class TypeLam(TypedTerm):
    name: str
    body: TypedTerm


@dataclass(frozen=True)
class TypeApp(TypedTerm):
    fn: TypedTerm
    instance: Type


def typed_apply(fn, *args):

    for arg in args:
        fn = TypedApp(fn, arg)
    return fn


def church_witness(n, type_name="X"):
    """ΛX.λx:X.λf:X→X.(f^n x), the Church numeral typed at N."""

    x = TFree(type_name)
    body = TypedVar("x")
    for _ in range(n):
        body = TypedApp(TypedVar("f"), body)
    return TypeLam(type_name, TypedLam("x", x, TypedLam("f", Arrow(x, x), body)))


def erase(t, scope=()):
    """Drops annotations, type abstractions and type applications."""

    if isinstance(t, TypedVar):
        for index, name in enumerate(reversed(scope)):
            if name == t.name:
                return Var(index, name)
        return Free(t.name)
    if isinstance(t, TypedLam):
        return Lam(erase(t.body, scope + (t.name,)), t.name)
    if isinstance(t, TypedApp):
        return App(erase(t.fn, scope), erase(t.arg, scope))
    if isinstance(t, TypeLam):
        return erase(t.body, scope)
    return erase(t.fn, scope)


def typed_free_vars(t):

    if isinstance(t, TypedVar):
        return frozenset([t.name])
    if isinstance(t, TypedLam):
        return typed_free_vars(t.body) - frozenset([t.name])
    if isinstance(t, TypedApp):
        return typed_free_vars(t.fn) | typed_free_vars(t.arg)
    return typed_free_vars(t.body if isinstance(t, TypeLam) else t.fn)


def typed_free_type_vars(t):

    if isinstance(t, TypedVar):
        return frozenset()
    if isinstance(t, TypedLam):
        return free_type_vars(t.annotation) | typed_free_type_vars(t.body)
    if isinstance(t, TypedApp):
        return typed_free_type_vars(t.fn) | typed_free_type_vars(t.arg)
    if isinstance(t, TypeLam):
        return typed_free_type_vars(t.body) - frozenset([t.name])
    return typed_free_type_vars(t.fn) | free_type_vars(t.instance)


def _bound_names(t, out):

    if isinstance(t, (TypedLam, TypeLam)):
        out.add(t.name)
        _bound_names(t.body, out)
    elif isinstance(t, TypedApp):
        _bound_names(t.fn, out)
        _bound_names(t.arg, out)
    elif isinstance(t, TypeApp):
        _bound_names(t.fn, out)
    return out


def typed_subst(t, name, u):
    """Capture-avoiding substitution of the typed term u for the term variable name."""

    if isinstance(t, TypedVar):
        return u if t.name == name else t
    if isinstance(t, TypedApp):
        return TypedApp(typed_subst(t.fn, name, u), typed_subst(t.arg, name, u))
    if isinstance(t, TypeApp):
        return TypeApp(typed_subst(t.fn, name, u), t.instance)
    if name not in typed_free_vars(t):
        return t

    if isinstance(t, TypedLam):
        if t.name in typed_free_vars(u):
            avoid = typed_free_vars(u) | typed_free_vars(t.body) | _bound_names(t.body, set())
            renamed = fresh_name(t.name, avoid)
            body = typed_subst(t.body, t.name, TypedVar(renamed))
            return TypedLam(renamed, t.annotation, typed_subst(body, name, u))
        return TypedLam(t.name, t.annotation, typed_subst(t.body, name, u))

    # TypeLam: u's free type variables must not be captured
    if t.name in typed_free_type_vars(u):
        avoid = typed_free_type_vars(u) | typed_free_type_vars(t.body) | _bound_names(t.body, set())
        renamed = fresh_name(t.name, avoid)
        body = typed_type_subst(t.body, t.name, TFree(renamed))
        return TypeLam(renamed, typed_subst(body, name, u))
    return TypeLam(t.name, typed_subst(t.body, name, u))


def typed_type_subst(t, name, g):
    """Capture-avoiding substitution of the type g for the type variable name."""

    if isinstance(t, TypedVar):
        return t
    if isinstance(t, TypedLam):
        return TypedLam(t.name, type_subst(t.annotation, name, g), typed_type_subst(t.body, name, g))
    if isinstance(t, TypedApp):
        return TypedApp(typed_type_subst(t.fn, name, g), typed_type_subst(t.arg, name, g))
    if isinstance(t, TypeApp):
        return TypeApp(typed_type_subst(t.fn, name, g), type_subst(t.instance, name, g))

    if t.name == name or name not in typed_free_type_vars(t.body):
        return t
    if t.name in free_type_vars(g):
        avoid = free_type_vars(g) | typed_free_type_vars(t.body) | _bound_names(t.body, set())
        renamed = fresh_name(t.name, avoid)
        body = typed_type_subst(t.body, t.name, TFree(renamed))
        return TypeLam(renamed, typed_type_subst(body, name, g))
    return TypeLam(t.name, typed_type_subst(t.body, name, g))


def type_names(t):
    """Every type variable name bound or free in t (term binder names included)."""

    return _bound_names(t, set()) | typed_free_type_vars(t)


def rename_type_binders(t, avoid):
    """
    α-renames every Λ binder of t whose name is in avoid, so that t can be placed
    under a context mentioning those type variables.
    """

    avoid = frozenset(avoid)
    if not avoid & _bound_names(t, set()):
        return t
    taken = set(avoid) | type_names(t)

    def rename(s):
        if isinstance(s, TypedVar):
            return s
        if isinstance(s, TypedLam):
            return TypedLam(s.name, s.annotation, rename(s.body))
        if isinstance(s, TypedApp):
            return TypedApp(rename(s.fn), rename(s.arg))
        if isinstance(s, TypeApp):
            return TypeApp(rename(s.fn), s.instance)
        if s.name not in avoid:
            return TypeLam(s.name, rename(s.body))
        renamed = fresh_name(s.name, taken)
        taken.add(renamed)
        return TypeLam(renamed, rename(typed_type_subst(s.body, s.name, TFree(renamed))))

    return rename(t)


def star_witness(t):
    """
    Replaces every annotation A by A*. For a witness without type applications this
    turns Γ ⊢ t : A into Γ* ⊢ t : A*.
    """

    if isinstance(t, TypedVar):
        return t
    if isinstance(t, TypedLam):
        return TypedLam(t.name, godel_star(t.annotation), star_witness(t.body))
    if isinstance(t, TypedApp):
        return TypedApp(star_witness(t.fn), star_witness(t.arg))
    if isinstance(t, TypeLam):
        return TypeLam(t.name, star_witness(t.body))
    raise StarTranslationError("Cannot star a witness containing a type application")
