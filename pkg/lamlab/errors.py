class LamlabError(Exception):
    pass


class ParseError(LamlabError):

    def __init__(self, message, line, column):

        super(ParseError, self).__init__("%d:%d: %s" % (line, column, message))
        self.message = message
        self.line = line
        self.column = column


class UnboundNameError(ParseError):
    pass


class TypeCheckError(LamlabError):
    pass


class UnboundVariableError(TypeCheckError):

    def __init__(self, name):

        super(UnboundVariableError, self).__init__("Unbound variable: %s" % name)
        self.name = name


class DomainMismatchError(TypeCheckError):

    def __init__(self, expected, actual, rendered_expected, rendered_actual):

        super(DomainMismatchError, self).__init__(
            "Argument type mismatch: function expects %s but argument has type %s"
            % (rendered_expected, rendered_actual))
        self.expected = expected
        self.actual = actual


class NotAnArrowError(TypeCheckError):
    pass


class FreenessViolationError(TypeCheckError):

    def __init__(self, type_variable, term_variable):

        super(FreenessViolationError, self).__init__(
            "Cannot generalize over %s: it is free in the type of %s"
            % (type_variable, term_variable))
        self.type_variable = type_variable
        self.term_variable = term_variable


class NotAForallError(TypeCheckError):
    pass


class StarTranslationError(LamlabError):
    pass


class MissingComponentError(LamlabError):
    pass


class UnknownSuiteError(LamlabError):
    pass


class UnknownSystemError(LamlabError):
    pass
