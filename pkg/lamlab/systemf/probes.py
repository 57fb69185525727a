"""Runtime evidence for subject reduction and strong normalization of typed terms."""

import logging
import random

from lamlab import config
from lamlab.errors import TypeCheckError
from lamlab.evaluation.report import passing, failing, unknown
from lamlab.systemf.checker import check
from lamlab.systemf.reader import print_type, print_typed_term
from lamlab.systemf.reduction import typed_step
from lamlab.systemf.syntax import erase
from lamlab.terms.reader import print_term
from lamlab.terms.reduction import normalize_randomly, Status


def subject_reduction_probe(t, steps, ctx=None, claim_id="subject-reduction"):
    """
    Reduces the annotated term up to `steps` times and re-checks it after every
    step; the synthesized type must stay the same.
    """

    expected = check(ctx, t)
    current = t
    for step in range(1, steps + 1):
        following = typed_step(current)
        if following is None:
            return passing(claim_id, "type %s preserved; normal after %d steps"
                           % (print_type(expected), step - 1), step - 1)
        try:
            actual = check(ctx, following)
        except TypeCheckError as e:
            return failing(claim_id, "step %d of %s: %s" % (step, print_typed_term(t), e), step)
        if actual != expected:
            return failing(claim_id, "step %d of %s has type %s, expected %s"
                           % (step, print_typed_term(t), print_type(actual),
                              print_type(expected)), step)
        current = following

    return passing(claim_id, "type %s preserved over %d steps" % (print_type(expected), steps), steps)


def sn_probe(t, fuel, ctx=None, seed=config.SAMPLER_SEED, claim_id="strong-normalization"):
    """Normalizes the erasure of a checked term, contracting randomly chosen redexes."""

    check(ctx, t)
    trace = normalize_randomly(erase(t), fuel, random.Random(seed))
    if trace.status != Status.NORMAL_FORM:
        logging.warning("Erasure of %s did not normalize within %d steps" % (print_typed_term(t), fuel))
        return unknown(claim_id, "no normal form within fuel for %s" % print_term(erase(t)),
                       trace.fuel_used)
    return passing(claim_id, "normal form %s" % print_term(trace.final), trace.fuel_used)
