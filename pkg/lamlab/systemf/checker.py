"""Syntax-directed checker for Church-style System F witnesses."""

from lamlab.errors import UnboundVariableError, DomainMismatchError, NotAnArrowError, \
    FreenessViolationError, NotAForallError
from lamlab.systemf.syntax import TypedVar, TypedLam, TypedApp, TypeLam, TypeApp
from lamlab.systemf.types import Arrow, Forall, forall, type_open, free_type_vars, type_subst
from lamlab.systemf.reader import print_type


class Context(object):
    """
    Ordered typing context x1 : A1, ..., xn : An with pairwise distinct names.
    Extending with a name already present shadows (replaces) the old entry.
    """


    def __init__(self, entries=()):

        self.entries = tuple(entries)
        names = [name for name, _ in self.entries]
        assert len(names) == len(set(names)), "Context names must be pairwise distinct"


    def extend(self, name, a):

        return Context([(n, b) for n, b in self.entries if n != name] + [(name, a)])


    def lookup(self, name):

        for n, a in reversed(self.entries):
            if n == name:
                return a
        return None


    def free_type_vars(self):

        result = frozenset()
        for _, a in self.entries:
            result |= free_type_vars(a)
        return result


    def substitute_type(self, name, g):

        return Context([(n, type_subst(a, name, g)) for n, a in self.entries])


    def __iter__(self):

        return iter(self.entries)


    def __len__(self):

        return len(self.entries)


EMPTY = Context()


def check(ctx, t):
    """Returns the unique type of t in ctx or raises a TypeCheckError."""

    if ctx is None:
        ctx = EMPTY
    elif not isinstance(ctx, Context):
        ctx = Context(ctx)

    if isinstance(t, TypedVar):
        a = ctx.lookup(t.name)
        if a is None:
            raise UnboundVariableError(t.name)
        return a

    if isinstance(t, TypedLam):
        return Arrow(t.annotation, check(ctx.extend(t.name, t.annotation), t.body))

    if isinstance(t, TypedApp):
        fn_type = check(ctx, t.fn)
        if not isinstance(fn_type, Arrow):
            raise NotAnArrowError("Cannot apply a term of type %s" % print_type(fn_type))
        arg_type = check(ctx, t.arg)
        if fn_type.domain != arg_type:
            raise DomainMismatchError(fn_type.domain, arg_type,
                                      print_type(fn_type.domain), print_type(arg_type))
        return fn_type.codomain

    if isinstance(t, TypeLam):
        for name, a in ctx:
            if t.name in free_type_vars(a):
                raise FreenessViolationError(t.name, name)
        return forall(t.name, check(ctx, t.body))

    if isinstance(t, TypeApp):
        fn_type = check(ctx, t.fn)
        if not isinstance(fn_type, Forall):
            raise NotAForallError("Cannot instantiate a term of type %s" % print_type(fn_type))
        return type_open(fn_type.body, t.instance)

    raise ValueError("Not a typed term: %r" % (t,))
