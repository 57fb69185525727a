"""Surface syntax for untyped terms: tokenizer, parser, printer and `def` files."""

import re
from collections import OrderedDict, namedtuple

from nltk.tokenize import RegexpTokenizer

from lamlab.errors import ParseError, UnboundNameError
from lamlab.terms.syntax import Var, Free, Lam, App, church_numeral
from lamlab.util import fresh_name


Token = namedtuple("Token", ["text", "line", "column"])

KEYWORDS = frozenset(["def", "tdef", "type"])

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")

_tokenizer = RegexpTokenizer(r"/\\|\\|->|[A-Za-z_][A-Za-z0-9_']*|[0-9]+|\S")


def tokenize(text):

    tokens = []
    for line_number, line in enumerate(text.split("\n"), 1):
        code = line.split("#", 1)[0]
        for start, end in _tokenizer.span_tokenize(code):
            tokens.append(Token(code[start:end], line_number, start + 1))
    return tokens


def is_ident(text):

    return _IDENT.match(text) is not None


class TokenStream(object):


    def __init__(self, text):

        self.tokens = tokenize(text)
        self.position = 0
        lines = text.split("\n")
        self._end = (len(lines), len(lines[-1]) + 1)


    def peek(self, offset=0):

        index = self.position + offset
        if index < len(self.tokens):
            return self.tokens[index]
        return None


    def at(self, text):

        token = self.peek()
        return token is not None and token.text == text


    def at_end(self):

        return self.position >= len(self.tokens)


    def next(self):

        token = self.peek()
        if token is None:
            raise self.error("unexpected end of input")
        self.position += 1
        return token


    def expect(self, text):

        token = self.peek()
        if token is None or token.text != text:
            raise self.error("expected '%s'" % text, token)
        self.position += 1
        return token


    def expect_ident(self, what="identifier"):

        token = self.peek()
        if token is None or not is_ident(token.text) or token.text in KEYWORDS:
            raise self.error("expected %s" % what, token)
        self.position += 1
        return token


    def error(self, message, token=None, cls=ParseError):

        if token is None:
            token = self.peek()
        if token is None:
            line, column = self._end
            return cls("%s at end of input" % message, line, column)
        return cls("%s, found '%s'" % (message, token.text), token.line, token.column)


class TermParser(object):
    """
    Recursive-descent parser for the untyped grammar.

    :param env: map from definition names to terms, inlined where the name occurs
                unbound
    :param strict: if true, names that are neither bound nor defined are errors
    """


    def __init__(self, stream, env=None, strict=False):

        self.stream = stream
        self.env = env if env is not None else {}
        self.strict = strict


    def parse_term(self, scope):

        if self.stream.at("\\"):
            return self.parse_lam(scope)
        return self.parse_app(scope)


    def parse_lam(self, scope):

        self.stream.expect("\\")
        names = [self.stream.expect_ident("binder").text]
        while self._at_ident():
            names.append(self.stream.next().text)
        self.stream.expect(".")

        body = self.parse_term(scope + names)
        for name in reversed(names):
            body = Lam(body, name)
        return body


    def parse_app(self, scope):

        result = None
        while True:
            token = self.stream.peek()
            if token is None:
                break
            if token.text == "\\":
                arg = self.parse_lam(scope)
                result = arg if result is None else App(result, arg)
                break
            if not self._starts_atom(token):
                break
            arg = self.parse_atom(scope)
            result = arg if result is None else App(result, arg)

        if result is None:
            raise self.stream.error("expected a term")
        return result


    def parse_atom(self, scope):

        token = self.stream.next()
        if token.text == "(":
            term = self.parse_term(scope)
            self.stream.expect(")")
            return term
        if token.text.isdigit():
            return church_numeral(int(token.text))
        return self.resolve(token, scope)


    def resolve(self, token, scope):

        name = token.text
        for index, bound in enumerate(reversed(scope)):
            if bound == name:
                return Var(index, name)
        if name in self.env:
            return self.env[name]
        if self.strict:
            raise self.stream.error("unbound name '%s'" % name, token, UnboundNameError)
        return Free(name)


    def _at_ident(self):

        token = self.stream.peek()
        return token is not None and is_ident(token.text) and token.text not in KEYWORDS


    def _starts_atom(self, token):

        if token.text in ("(",) or token.text.isdigit():
            return True
        return is_ident(token.text) and token.text not in KEYWORDS


def parse_term(text, env=None, strict=False):

    stream = TokenStream(text)
    term = TermParser(stream, env, strict).parse_term([])
    if not stream.at_end():
        raise stream.error("unexpected token")
    return term


def parse_definitions(text, env=None, strict=False):
    """Reads `def NAME = term` statements; each definition may use the earlier ones."""

    stream = TokenStream(text)
    scope_env = dict(env or {})
    definitions = OrderedDict()
    while not stream.at_end():
        stream.expect("def")
        name = stream.expect_ident("definition name").text
        stream.expect("=")
        term = TermParser(stream, scope_env, strict).parse_term([])
        definitions[name] = term
        scope_env[name] = term
    return definitions


def _loose_indices(t, depth=0, out=None):

    if out is None:
        out = set()
    if isinstance(t, Var):
        if t.index >= depth:
            out.add(t.index - depth)
    elif isinstance(t, Lam):
        _loose_indices(t.body, depth + 1, out)
    elif isinstance(t, App):
        _loose_indices(t.fn, depth, out)
        _loose_indices(t.arg, depth, out)
    return out


def _collect_free(t, out):

    if isinstance(t, Free):
        out.add(t.name)
    elif isinstance(t, Lam):
        _collect_free(t.body, out)
    elif isinstance(t, App):
        _collect_free(t.fn, out)
        _collect_free(t.arg, out)
    return out


def print_term(t):
    """
    Renders t in surface syntax. Binders keep their hint unless the hint would
    capture a free name or an outer binder used inside the body; then it is primed.
    """

    return _print(t, [], frozenset(_collect_free(t, set())))


def _print(t, scope, free_names):

    if isinstance(t, Var):
        if t.index < len(scope):
            return scope[-1 - t.index]
        # loose index: not produced by the parser, printed so it stays visible
        return "#%d" % t.index
    if isinstance(t, Free):
        return t.name
    if isinstance(t, Lam):
        used_outer = set(scope[-j] for j in _loose_indices(t.body) if 1 <= j <= len(scope))
        name = fresh_name(t.hint, free_names | used_outer)
        return "\\%s.%s" % (name, _print(t.body, scope + [name], free_names))

    fn = _print(t.fn, scope, free_names)
    if isinstance(t.fn, Lam):
        fn = "(%s)" % fn
    arg = _print(t.arg, scope, free_names)
    if isinstance(t.arg, (Lam, App)):
        arg = "(%s)" % arg
    return "%s %s" % (fn, arg)
