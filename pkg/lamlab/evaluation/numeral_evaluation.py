"""Checks of the numeral-system laws: distinct normal numerals, successor, zero test, predecessor."""

import logging

from lamlab import config
from lamlab.evaluation.report import passing, failing, unknown
from lamlab.terms.equivalence import beta_equiv
from lamlab.terms.reader import print_term
from lamlab.terms.reduction import normalize, Status
from lamlab.terms.syntax import App, is_closed, iter_apply
from lamlab.zoo.base import get_zoo


class NumeralSystemEvaluator(object):


    def __init__(self, system, fuel=None):

        self.system = system
        self.fuel = fuel if fuel is not None else config.default_fuel()


    def _claim_id(self, law):

        return "%s.%s" % (self.system.name, law)


    def check_law(self, claim_id, cases):
        """
        :param cases: iterable of (n, lhs, rhs); every lhs must be β-equivalent to its rhs
        """

        fuel = 0
        last_n = None
        for n, lhs, rhs in cases:
            verdict = beta_equiv(lhs, rhs, self.fuel)
            fuel += verdict.fuel_spent
            if verdict.is_distinct:
                normal_form = normalize(lhs, self.fuel, record=False).final
                return failing(claim_id, "%s normalizes to %s, expected %s"
                               % (print_term(lhs), print_term(normal_form), print_term(rhs)), fuel, n)
            if verdict.is_unknown:
                logging.warning("%s: no decision for n=%d within fuel %d" % (claim_id, n, self.fuel))
                return unknown(claim_id, "no normal form within fuel for %s or %s"
                               % (print_term(lhs), print_term(rhs)), fuel, n)
            last_n = n
        return passing(claim_id, "", fuel, last_n)


    def check_numerals(self, max_n, claim_id=None):

        claim_id = claim_id or self._claim_id("numerals")
        seen = {}
        for n in range(max_n + 1):
            numeral = self.system.numeral(n)
            if not is_closed(numeral):
                return failing(claim_id, "numeral %d = %s is not closed" % (n, print_term(numeral)), 0, n)
            if normalize(numeral, 1, record=False).status != Status.NORMAL_FORM:
                return failing(claim_id, "numeral %d = %s is not normal" % (n, print_term(numeral)), 0, n)
            if numeral in seen:
                return failing(claim_id, "numerals %d and %d are both %s"
                               % (seen[numeral], n, print_term(numeral)), 0, n)
            seen[numeral] = n
        return passing(claim_id, "%d closed normal distinct numerals" % (max_n + 1), 0, max_n)


    def check_successor(self, max_n, claim_id=None):

        numeral, successor = self.system.numeral, self.system.successor
        return self.check_law(claim_id or self._claim_id("successor"),
                              ((n, App(successor, numeral(n)), numeral(n + 1)) for n in range(max_n + 1)))


    def check_iterated_successor(self, max_n, claim_id=None):

        numeral, successor = self.system.numeral, self.system.successor
        return self.check_law(claim_id or self._claim_id("successor-iterate"),
                              ((n, iter_apply(successor, n, numeral(0)), numeral(n)) for n in range(max_n + 1)))


    def check_zero_test(self, max_n, claim_id=None):

        claim_id = claim_id or self._claim_id("zero-test")
        zero_test = self.system.zero_test
        if zero_test is None:
            return unknown(claim_id, "not applicable: %s has no zero test" % self.system.name,
                           informational=True)

        zoo = get_zoo()
        cases = [(0, App(zero_test, self.system.numeral(0)), zoo.term("T"))]
        cases += [(n, App(zero_test, self.system.numeral(n)), zoo.term("F")) for n in range(1, max_n + 1)]
        return self.check_law(claim_id, cases)


    def check_predecessor(self, max_n, claim_id=None):

        claim_id = claim_id or self._claim_id("predecessor")
        predecessor = self.system.predecessor
        if predecessor is None:
            return unknown(claim_id, "not applicable: %s has no predecessor" % self.system.name,
                           informational=True)

        numeral = self.system.numeral
        return self.check_law(claim_id, ((n, App(predecessor, numeral(n + 1)), numeral(n))
                                         for n in range(max_n)))


    def evaluate(self, max_n):

        return [self.check_numerals(max_n), self.check_successor(max_n), self.check_zero_test(max_n)]


def check_numeral_system(system, max_n, fuel=None):

    assert max_n >= 1, "max_n must be at least 1"
    return NumeralSystemEvaluator(system, fuel).evaluate(max_n)


def check_adequate(system, max_n, fuel=None):

    return NumeralSystemEvaluator(system, fuel).check_predecessor(max_n)
