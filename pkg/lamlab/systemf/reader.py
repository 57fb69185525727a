"""Surface syntax for types and typed terms, and the mixed `type`/`def`/`tdef` files."""

from collections import OrderedDict, namedtuple

from lamlab.terms.reader import TokenStream, TermParser, KEYWORDS, is_ident
from lamlab.systemf.types import TVar, TFree, Bottom, Arrow, Forall, BOTTOM, neg, godel_star, \
    free_type_vars
from lamlab.systemf.syntax import TypedVar, TypedLam, TypedApp, TypeLam, TypeApp, church_witness, \
    rename_type_binders
from lamlab.util import fresh_name


TYPE_KEYWORDS = KEYWORDS | frozenset(["forall", "bot"])

TypedDefinition = namedtuple("TypedDefinition", ["name", "claimed_type", "witness", "line"])


class TypeParser(object):
    """
    :param aliases: map from alias names to types, expanded in place
    :param bound_names: type variables bound by enclosing Λs; they stay named and
                        take precedence over aliases
    """


    def __init__(self, stream, aliases=None, bound_names=()):

        self.stream = stream
        self.aliases = aliases if aliases is not None else {}
        self.bound_names = bound_names


    def parse_type(self, scope):

        if self.stream.at("forall"):
            self.stream.next()
            names = [self.stream.expect_ident("type variable").text]
            while self._at_ident():
                names.append(self.stream.next().text)
            self.stream.expect(".")
            body = self.parse_type(scope + names)
            for name in reversed(names):
                body = Forall(body, name)
            return body
        return self.parse_arrow(scope)


    def parse_arrow(self, scope):

        left = self.parse_unary(scope)
        if self.stream.at("->"):
            self.stream.next()
            return Arrow(left, self.parse_type(scope))
        return left


    def parse_unary(self, scope):

        if self.stream.at("~"):
            self.stream.next()
            return neg(self.parse_unary(scope))
        a = self.parse_atom(scope)
        while self.stream.at("*"):
            self.stream.next()
            a = godel_star(a)
        return a


    def parse_atom(self, scope):

        token = self.stream.next()
        if token.text == "(":
            a = self.parse_type(scope)
            self.stream.expect(")")
            return a
        if token.text == "bot":
            return BOTTOM
        if not is_ident(token.text) or token.text in TYPE_KEYWORDS:
            raise self.stream.error("expected a type", token)

        name = token.text
        for index, bound in enumerate(reversed(scope)):
            if bound == name:
                return TVar(index, name)
        if name in self.bound_names:
            return TFree(name)
        if name in self.aliases:
            return self.aliases[name]
        return TFree(name)


    def _at_ident(self):

        token = self.stream.peek()
        return token is not None and is_ident(token.text) and token.text not in TYPE_KEYWORDS


class TypedTermParser(object):


    def __init__(self, stream, aliases=None, env=None):

        self.stream = stream
        self.aliases = aliases if aliases is not None else {}
        self.env = env if env is not None else {}
        self._annotations = []


    def parse_type(self, type_scope):

        return TypeParser(self.stream, self.aliases, type_scope).parse_type([])


    def parse_term(self, scope, type_scope):

        if self.stream.at("\\"):
            return self.parse_lam(scope, type_scope)
        if self.stream.at("/\\"):
            return self.parse_type_lam(scope, type_scope)
        return self.parse_app(scope, type_scope)


    def parse_lam(self, scope, type_scope):

        self.stream.expect("\\")
        name = self.stream.expect_ident("binder").text
        self.stream.expect(":")
        annotation = self.parse_type(type_scope)
        self.stream.expect(".")
        self._annotations.append(annotation)
        try:
            body = self.parse_term(scope + (name,), type_scope)
        finally:
            self._annotations.pop()
        return TypedLam(name, annotation, body)


    def parse_type_lam(self, scope, type_scope):

        self.stream.expect("/\\")
        names = [self.stream.expect_ident("type binder").text]
        while True:
            token = self.stream.peek()
            if token is None or not is_ident(token.text) or token.text in KEYWORDS:
                break
            names.append(self.stream.next().text)
        self.stream.expect(".")

        body = self.parse_term(scope, type_scope + tuple(names))
        for name in reversed(names):
            body = TypeLam(name, body)
        return body


    def parse_app(self, scope, type_scope):

        result = None
        while True:
            token = self.stream.peek()
            if token is None:
                break
            if token.text in ("\\", "/\\"):
                arg = self.parse_term(scope, type_scope)
                result = arg if result is None else TypedApp(result, arg)
                break
            if token.text == "[":
                if result is None:
                    raise self.stream.error("type application needs a function", token)
                self.stream.next()
                instance = self.parse_type(type_scope)
                self.stream.expect("]")
                result = TypeApp(result, instance)
                continue
            if not self._starts_atom(token):
                break
            arg = self.parse_atom(scope, type_scope)
            result = arg if result is None else TypedApp(result, arg)

        if result is None:
            raise self.stream.error("expected a typed term")
        return result


    def parse_atom(self, scope, type_scope):

        token = self.stream.next()
        if token.text == "(":
            term = self.parse_term(scope, type_scope)
            self.stream.expect(")")
            return term
        if token.text.isdigit():
            return self._inline(church_witness(int(token.text)), type_scope)
        if token.text in scope:
            return TypedVar(token.text)
        if token.text in self.env:
            return self._inline(self.env[token.text], type_scope)
        return TypedVar(token.text)


    def _inline(self, witness, type_scope):
        """Renames the Λ binders of a named witness away from the type variables in scope."""

        avoid = set(type_scope)
        for annotation in self._annotations:
            avoid |= free_type_vars(annotation)
        return rename_type_binders(witness, avoid)


    def _starts_atom(self, token):

        if token.text == "(" or token.text.isdigit():
            return True
        return is_ident(token.text) and token.text not in KEYWORDS


def parse_type(text, aliases=None):

    stream = TokenStream(text)
    a = TypeParser(stream, aliases).parse_type([])
    if not stream.at_end():
        raise stream.error("unexpected token")
    return a


def parse_typed_term(text, aliases=None, env=None):

    stream = TokenStream(text)
    t = TypedTermParser(stream, aliases, env).parse_term((), ())
    if not stream.at_end():
        raise stream.error("unexpected token")
    return t


def _loose_type_indices(a, depth=0, out=None):

    if out is None:
        out = set()
    if isinstance(a, TVar):
        if a.index >= depth:
            out.add(a.index - depth)
    elif isinstance(a, Arrow):
        _loose_type_indices(a.domain, depth, out)
        _loose_type_indices(a.codomain, depth, out)
    elif isinstance(a, Forall):
        _loose_type_indices(a.body, depth + 1, out)
    return out


def print_type(a):

    return _print_type(a, [], free_type_vars(a))


def _print_type(a, scope, free_names):

    if isinstance(a, Forall):
        names = []
        while isinstance(a, Forall):
            used_outer = set(scope[-j] for j in _loose_type_indices(a.body) if 1 <= j <= len(scope))
            name = fresh_name(a.hint, free_names | used_outer)
            names.append(name)
            scope = scope + [name]
            a = a.body
        return "forall %s. %s" % (" ".join(names), _print_type(a, scope, free_names))

    if isinstance(a, Arrow):
        if isinstance(a.codomain, Bottom):
            return "~" + _print_operand(a.domain, scope, free_names)
        return "%s -> %s" % (_print_operand(a.domain, scope, free_names),
                             _print_type(a.codomain, scope, free_names))

    if isinstance(a, Bottom):
        return "bot"
    if isinstance(a, TVar):
        if a.index < len(scope):
            return scope[-1 - a.index]
        return "#%d" % a.index
    return a.name


def _print_operand(a, scope, free_names):

    text = _print_type(a, scope, free_names)
    if isinstance(a, Forall) or (isinstance(a, Arrow) and not isinstance(a.codomain, Bottom)):
        return "(%s)" % text
    return text


def print_typed_term(t):

    if isinstance(t, TypedVar):
        return t.name
    if isinstance(t, TypedLam):
        return "\\%s:%s. %s" % (t.name, print_type(t.annotation), print_typed_term(t.body))
    if isinstance(t, TypeLam):
        return "/\\%s. %s" % (t.name, print_typed_term(t.body))

    fn = print_typed_term(t.fn)
    if isinstance(t.fn, (TypedLam, TypeLam)):
        fn = "(%s)" % fn
    if isinstance(t, TypeApp):
        return "%s [%s]" % (fn, print_type(t.instance))
    arg = print_typed_term(t.arg)
    if isinstance(t.arg, (TypedLam, TypeLam, TypedApp, TypeApp)):
        arg = "(%s)" % arg
    return "%s %s" % (fn, arg)


class Definitions(object):
    """Everything read from a definition file, in file order."""


    def __init__(self, terms=None, typed=None, types=None):

        self.terms = OrderedDict(terms or {})
        self.typed = OrderedDict(typed or {})
        self.types = OrderedDict(types or {})


    def typed_env(self):

        return dict((name, d.witness) for name, d in self.typed.items())


def read_definitions(text, base=None, strict=False):
    """
    Reads `type NAME = TYPE`, `def NAME = term` and `tdef NAME : TYPE = typedterm`
    statements. Names are inlined textually in later statements; terms, typed terms
    and types live in separate namespaces. Names from base are visible but not
    returned.
    """

    base = base if base is not None else Definitions()
    term_env = dict(base.terms)
    typed_env = base.typed_env()
    aliases = dict(base.types)
    result = Definitions()

    stream = TokenStream(text)
    while not stream.at_end():
        keyword = stream.next()
        if keyword.text == "def":
            name = stream.expect_ident("definition name").text
            stream.expect("=")
            term = TermParser(stream, term_env, strict).parse_term([])
            result.terms[name] = term
            term_env[name] = term
        elif keyword.text == "tdef":
            name = stream.expect_ident("definition name").text
            stream.expect(":")
            claimed = TypeParser(stream, aliases).parse_type([])
            stream.expect("=")
            witness = TypedTermParser(stream, aliases, typed_env).parse_term((), ())
            result.typed[name] = TypedDefinition(name, claimed, witness, keyword.line)
            typed_env[name] = witness
        elif keyword.text == "type":
            name = stream.expect_ident("type name").text
            stream.expect("=")
            a = TypeParser(stream, aliases).parse_type([])
            result.types[name] = a
            aliases[name] = a
        else:
            raise stream.error("expected 'def', 'tdef' or 'type'", keyword)
    return result
