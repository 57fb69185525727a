"""
System F types. Quantifiers are nameless (TVar indices); free type variables are
named (TFree), which is what typed terms use for their Λ-bound variables.
"""

from dataclasses import dataclass, field


class Type(object):
    pass


@dataclass(frozen=True)
class TVar(Type):
    index: int
    hint: str = field(default="X", compare=False)


@dataclass(frozen=True)
class TFree(Type):
    name: str


@dataclass(frozen=True)
class Bottom(Type):
    pass


@dataclass(frozen=True)
class Arrow(Type):
    domain: Type
    codomain: Type


@dataclass(frozen=True)
class Forall(Type):
    body: Type
    hint: str = field(default="X", compare=False)


BOTTOM = Bottom()


def neg(a):

    return Arrow(a, BOTTOM)


def is_neg(a):

    return isinstance(a, Arrow) and isinstance(a.codomain, Bottom)


def arrows(*types):
    """arrows(A, B, C) is A -> B -> C."""

    result = types[-1]
    for a in reversed(types[:-1]):
        result = Arrow(a, result)
    return result


def type_shift(a, amount, cutoff=0):

    if amount == 0:
        return a
    if isinstance(a, TVar):
        return TVar(a.index + amount, a.hint) if a.index >= cutoff else a
    if isinstance(a, Arrow):
        return Arrow(type_shift(a.domain, amount, cutoff), type_shift(a.codomain, amount, cutoff))
    if isinstance(a, Forall):
        return Forall(type_shift(a.body, amount, cutoff + 1), a.hint)
    return a


def _replace_index(a, index, g, depth=0):

    if isinstance(a, TVar):
        if a.index == index + depth:
            return type_shift(g, depth)
        return a
    if isinstance(a, Arrow):
        return Arrow(_replace_index(a.domain, index, g, depth),
                     _replace_index(a.codomain, index, g, depth))
    if isinstance(a, Forall):
        return Forall(_replace_index(a.body, index, g, depth + 1), a.hint)
    return a


def type_open(body, g):
    """Instantiates the outermost quantifier: for Forall(body), returns body[g/X]."""

    return type_shift(_replace_index(body, 0, type_shift(g, 1)), -1)


def type_abstract(a, name, depth=0):

    if isinstance(a, TFree):
        return TVar(depth, name) if a.name == name else a
    if isinstance(a, TVar):
        return TVar(a.index + 1, a.hint) if a.index >= depth else a
    if isinstance(a, Arrow):
        return Arrow(type_abstract(a.domain, name, depth), type_abstract(a.codomain, name, depth))
    if isinstance(a, Forall):
        return Forall(type_abstract(a.body, name, depth + 1), a.hint)
    return a


def forall(name, body):

    return Forall(type_abstract(body, name), name)


def type_subst(a, name, g, depth=0):
    """Capture-avoiding substitution of g for the free type variable name."""

    if isinstance(a, TFree):
        return type_shift(g, depth) if a.name == name else a
    if isinstance(a, Arrow):
        return Arrow(type_subst(a.domain, name, g, depth), type_subst(a.codomain, name, g, depth))
    if isinstance(a, Forall):
        return Forall(type_subst(a.body, name, g, depth + 1), a.hint)
    return a


def free_type_vars(a):

    if isinstance(a, TFree):
        return frozenset([a.name])
    if isinstance(a, Arrow):
        return free_type_vars(a.domain) | free_type_vars(a.codomain)
    if isinstance(a, Forall):
        return free_type_vars(a.body)
    return frozenset()


def godel_star(a):
    """Replaces every type variable X by ¬X; homomorphic on ⊥, → and ∀."""

    if isinstance(a, (TVar, TFree)):
        return neg(a)
    if isinstance(a, Arrow):
        return Arrow(godel_star(a.domain), godel_star(a.codomain))
    if isinstance(a, Forall):
        return Forall(godel_star(a.body), a.hint)
    return a
