"""
Untyped λ-terms in a locally nameless representation.

Bound variables are de Bruijn indices, free variables are names. Binder names are
kept only as printing hints and take no part in equality, so two α-equivalent terms
compare (and hash) equal.
"""

from dataclasses import dataclass, field


class Term(object):

    def __call__(self, *args):

        result = self
        for arg in args:
            result = App(result, arg)
        return result


@dataclass(frozen=True)
class Var(Term):
    """Bound variable, counted outward from the innermost enclosing binder."""
    index: int
    hint: str = field(default="x", compare=False)


@dataclass(frozen=True)
class Free(Term):
    name: str


@dataclass(frozen=True)
class Lam(Term):
    body: Term
    hint: str = field(default="x", compare=False)


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term


def shift(t, amount, cutoff=0):
    """Adds amount to every bound index >= cutoff."""

    if amount == 0:
        return t
    if isinstance(t, Var):
        if t.index >= cutoff:
            return Var(t.index + amount, t.hint)
        return t
    if isinstance(t, Lam):
        return Lam(shift(t.body, amount, cutoff + 1), t.hint)
    if isinstance(t, App):
        return App(shift(t.fn, amount, cutoff), shift(t.arg, amount, cutoff))
    return t


def _open(t, u, closed, depth=0):
    """Replaces index depth by u and lowers the indices above it, in one pass."""

    if isinstance(t, Var):
        if t.index == depth:
            return u if closed else shift(u, depth)
        if t.index > depth:
            return Var(t.index - 1, t.hint)
        return t
    if isinstance(t, Lam):
        return Lam(_open(t.body, u, closed, depth + 1), t.hint)
    if isinstance(t, App):
        return App(_open(t.fn, u, closed, depth), _open(t.arg, u, closed, depth))
    return t


def instantiate(body, arg):
    """Contracts the redex (λ.body arg). A closed arg is shared, never copied."""

    return _open(body, arg, not has_loose_indices(arg))


def abstract(t, name, depth=0):
    """Turns every free occurrence of name into the index of a new outer binder."""

    if isinstance(t, Free):
        if t.name == name:
            return Var(depth, name)
        return t
    if isinstance(t, Var):
        if t.index >= depth:
            return Var(t.index + 1, t.hint)
        return t
    if isinstance(t, Lam):
        return Lam(abstract(t.body, name, depth + 1), t.hint)
    if isinstance(t, App):
        return App(abstract(t.fn, name, depth), abstract(t.arg, name, depth))
    return t


def lam(name, body):

    return Lam(abstract(body, name), name)


def substitute(t, name, u, depth=0):
    """
    Capture-avoiding substitution of u for the free variable name.

    Binders are indices, so u can never be captured; its own loose indices (if any)
    are shifted past every binder crossed.
    """

    if isinstance(t, Free):
        if t.name == name:
            return shift(u, depth)
        return t
    if isinstance(t, Lam):
        return Lam(substitute(t.body, name, u, depth + 1), t.hint)
    if isinstance(t, App):
        return App(substitute(t.fn, name, u, depth), substitute(t.arg, name, u, depth))
    return t


def free_vars(t):

    names = set()
    stack = [t]
    while stack:
        current = stack.pop()
        if isinstance(current, Free):
            names.add(current.name)
        elif isinstance(current, Lam):
            stack.append(current.body)
        elif isinstance(current, App):
            stack.append(current.fn)
            stack.append(current.arg)
    return frozenset(names)


def has_loose_indices(t, depth=0):

    if isinstance(t, Var):
        return t.index >= depth
    if isinstance(t, Lam):
        return has_loose_indices(t.body, depth + 1)
    if isinstance(t, App):
        return has_loose_indices(t.fn, depth) or has_loose_indices(t.arg, depth)
    return False


def is_closed(t):

    return not free_vars(t) and not has_loose_indices(t)


def alpha_eq(t, u):

    return t == u


def iter_apply(u, n, v):
    """Builds (u^n v): (u^0 v) = v and (u^(n+1) v) = (u (u^n v))."""

    result = v
    for _ in range(n):
        result = App(u, result)
    return result


def church_numeral(n):

    return Lam(Lam(iter_apply(Var(0, "f"), n, Var(1, "x")), "f"), "x")


def size(t):

    count = 0
    stack = [t]
    while stack:
        current = stack.pop()
        count += 1
        if isinstance(current, Lam):
            stack.append(current.body)
        elif isinstance(current, App):
            stack.append(current.fn)
            stack.append(current.arg)
    return count


def spine(t):
    """Splits t into its head and the list of arguments it is applied to."""

    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args
