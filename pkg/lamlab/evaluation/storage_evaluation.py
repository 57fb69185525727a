"""
Storage operators: for every θ β-equivalent to numeral(n), (O θ f) must head reduce to
(f τ_n) with one closed τ_n β-equivalent to numeral(n).
"""

import logging

from lamlab import config
from lamlab.errors import MissingComponentError, TypeCheckError, StarTranslationError
from lamlab.evaluation.report import passing, failing, unknown
from lamlab.sampling.theta import theta_variants
from lamlab.systemf.checker import check
from lamlab.systemf.reader import print_type
from lamlab.systemf.syntax import erase, star_witness
from lamlab.systemf.types import Arrow, neg, godel_star
from lamlab.terms.equivalence import beta_equiv
from lamlab.terms.reader import parse_term, print_term
from lamlab.terms.reduction import head_reduce
from lamlab.terms.syntax import App, Free, free_vars, is_closed
from lamlab.util import fresh_name
from lamlab.zoo.base import get_zoo


def storage_from_adequacy(system):
    r"""
    Builds Θ H with H = \h.\n.\f.Z n (f d0) (h (P n) (\x.f (S x))) from the system's
    successor, zero test, predecessor and numeral(0).
    """

    missing = [name for name, component in (("successor", system.successor),
                                            ("zero test", system.zero_test),
                                            ("predecessor", system.predecessor))
               if component is None]
    if missing:
        raise MissingComponentError("%s has no %s" % (system.name, ", ".join(missing)))

    env = {
        "Theta": get_zoo().term("Theta"),
        "S": system.successor,
        "Z": system.zero_test,
        "P": system.predecessor,
        "d0": system.numeral(0),
    }
    return parse_term(r"Theta (\h.\n.\f.Z n (f d0) (h (P n) (\x.f (S x))))", env, strict=True)


def extract_tau(operator, theta, f, fuel):
    """
    Head reduces (operator theta f). Returns (τ, trace) when the head normal form is
    exactly (f τ), otherwise (None, trace).
    """

    trace = head_reduce(App(App(operator, theta), Free(f)), fuel, record=False)
    final = trace.final
    if trace.terminated and isinstance(final, App) and final.fn == Free(f):
        return final.arg, trace
    return None, trace


class StorageEvaluator(object):


    def __init__(self, system, operator, fuel=None, variants_per_n=config.DEFAULT_VARIANTS, f_name="f"):

        self.system = system
        self.operator = operator
        self.fuel = fuel if fuel is not None else config.default_fuel()
        self.variants_per_n = variants_per_n
        self.f_name = f_name


    def check_n(self, n, claim_id):

        numeral = self.system.numeral(n)
        variants = theta_variants(self.system, n, self.variants_per_n, self.fuel)
        taken = set(free_vars(self.operator))
        for theta in variants:
            taken |= free_vars(theta)
        f = fresh_name(self.f_name, taken)

        tau, trace = extract_tau(self.operator, numeral, f, self.fuel)
        fuel = trace.fuel_used
        if not trace.terminated:
            return unknown(claim_id, "(O %s %s) has no head normal form within fuel"
                           % (print_term(numeral), f), fuel, n)
        if tau is None:
            return failing(claim_id, "(O %s %s) head reduces to %s, not to (%s tau)"
                           % (print_term(numeral), f, print_term(trace.final), f), fuel, n)
        if not is_closed(tau):
            return failing(claim_id, "tau_%d = %s is not closed" % (n, print_term(tau)), fuel, n)

        verdict = beta_equiv(tau, numeral, self.fuel)
        fuel += verdict.fuel_spent
        if verdict.is_distinct:
            return failing(claim_id, "tau_%d = %s is not equivalent to %s"
                           % (n, print_term(tau), print_term(numeral)), fuel, n)
        if verdict.is_unknown:
            return unknown(claim_id, "tau_%d = %s: no normal form within fuel" % (n, print_term(tau)), fuel, n)

        for theta in variants:
            if theta == numeral:
                continue
            other, trace = extract_tau(self.operator, theta, f, self.fuel)
            fuel += trace.fuel_used
            if not trace.terminated:
                return unknown(claim_id, "(O %s %s) has no head normal form within fuel"
                               % (print_term(theta), f), fuel, n)
            if other != tau:
                found = print_term(trace.final) if other is None else "(%s %s)" % (f, print_term(other))
                return failing(claim_id, "theta = %s gives %s but tau_%d = %s"
                               % (print_term(theta), found, n, print_term(tau)), fuel, n)

        if len(variants) < self.variants_per_n:
            return unknown(claim_id, "tau_%d = %s but only %d of %d theta variants verified"
                           % (n, print_term(tau), len(variants), self.variants_per_n), fuel, n)
        return passing(claim_id, "tau_%d = %s" % (n, print_term(tau)), fuel, n)


    def evaluate(self, max_n, claim_id="storage"):

        return [self.check_n(n, claim_id) for n in range(max_n + 1)]


def check_storage(system, operator, max_n, variants_per_n=config.DEFAULT_VARIANTS, fuel=None,
                  claim_id="storage", f_name="f"):

    return StorageEvaluator(system, operator, fuel, variants_per_n, f_name).evaluate(max_n, claim_id)


def check_typed_storage(system, operator_witness, max_n=config.DEFAULT_MAX_N, claim_id="typed-storage"):
    """
    The operator witness must check at D* -> ~~D, and for n <= max_n the starred
    numeral witness must check at D* and erase to numeral(n).
    """

    layer = system.typed_layer
    if layer is None:
        raise MissingComponentError("%s has no typed layer" % system.name)

    data_type = layer.data_type
    expected = Arrow(godel_star(data_type), neg(neg(data_type)))
    try:
        actual = check(None, operator_witness)
    except TypeCheckError as e:
        return failing(claim_id, "operator witness does not check: %s" % e)
    if actual != expected:
        return failing(claim_id, "operator has type %s, expected %s"
                       % (print_type(actual), print_type(expected)))

    starred_type = godel_star(data_type)
    for n in range(max_n + 1):
        try:
            witness = star_witness(layer.numeral_witness(n))
            numeral_type = check(None, witness)
        except (TypeCheckError, StarTranslationError) as e:
            return failing(claim_id, "numeral %d has no witness at %s: %s"
                           % (n, print_type(starred_type), e), n=n)
        if numeral_type != starred_type:
            return failing(claim_id, "numeral %d witness has type %s, expected %s"
                           % (n, print_type(numeral_type), print_type(starred_type)), n=n)
        if erase(witness) != system.numeral(n):
            logging.warning("Witness of numeral %d of %s erases to another term" % (n, system.name))
            return failing(claim_id, "numeral %d witness erases to %s"
                           % (n, print_term(erase(witness))), n=n)

    return passing(claim_id, "operator : %s; numerals 0..%d typed at %s"
                   % (print_type(actual), max_n, print_type(starred_type)), n=max_n)


def check_tau(system, operator, expected, max_n, fuel=None, claim_id="storage-tau"):
    """
    For the numeral itself, (O numeral(n) f) must head reduce to exactly (f expected(n)),
    the syntactic shape the operator is meant to build.
    """

    fuel = fuel if fuel is not None else config.default_fuel()
    f = fresh_name("f", free_vars(operator))
    used = 0
    for n in range(max_n + 1):
        tau, trace = extract_tau(operator, system.numeral(n), f, fuel)
        used += trace.fuel_used
        if not trace.terminated:
            return unknown(claim_id, "(O %s %s) has no head normal form within fuel"
                           % (print_term(system.numeral(n)), f), used, n)
        if tau != expected(n):
            found = print_term(trace.final) if tau is None else print_term(tau)
            return failing(claim_id, "n=%d gives %s, expected (%s %s)"
                           % (n, found, f, print_term(expected(n))), used, n)
    return passing(claim_id, "tau_%d = %s" % (max_n, print_term(expected(max_n))), used, max_n)
