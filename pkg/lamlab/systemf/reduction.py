from lamlab.systemf.syntax import TypedLam, TypedApp, TypeLam, TypeApp, typed_subst, \
    typed_type_subst, type_names, rename_type_binders
from lamlab.systemf.types import free_type_vars


def typed_step(t):
    """
    Contracts the leftmost-outermost redex of an annotated term: either a β-redex
    (λx:A.b u) or an instantiation (ΛX.b)[G]. Returns None if there is none.
    """

    if isinstance(t, TypedApp):
        if isinstance(t.fn, TypedLam):
            body = t.fn.body
            return typed_subst(body, t.fn.name, rename_type_binders(t.arg, type_names(body)))
        fn = typed_step(t.fn)
        if fn is not None:
            return TypedApp(fn, t.arg)
        arg = typed_step(t.arg)
        return None if arg is None else TypedApp(t.fn, arg)

    if isinstance(t, TypeApp):
        if isinstance(t.fn, TypeLam):
            body = rename_type_binders(t.fn.body, free_type_vars(t.instance))
            return typed_type_subst(body, t.fn.name, t.instance)
        fn = typed_step(t.fn)
        return None if fn is None else TypeApp(fn, t.instance)

    if isinstance(t, TypedLam):
        body = typed_step(t.body)
        return None if body is None else TypedLam(t.name, t.annotation, body)

    if isinstance(t, TypeLam):
        body = typed_step(t.body)
        return None if body is None else TypeLam(t.name, body)

    return None
