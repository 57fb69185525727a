from dataclasses import replace

from lamlab import config
from lamlab.errors import TypeCheckError
from lamlab.evaluation.report import passing, failing, merge_reports
from lamlab.models import ZooEntry
from lamlab.systemf.checker import check
from lamlab.systemf.probes import subject_reduction_probe, sn_probe
from lamlab.systemf.reader import print_type
from lamlab.systemf.syntax import erase
from lamlab.terms.reader import print_term


def check_witness(entry, term=None, claim_id=None):
    """
    A witness stands for the untyped judgment ⊢ term : claimed_type when it checks
    at the claimed type in the empty context and erases to the term.
    """

    claim_id = claim_id or "typing.%s" % entry.name
    term = term if term is not None else entry.term
    assert entry.witness is not None, "%s has no witness" % entry.name

    try:
        actual = check(None, entry.witness)
    except TypeCheckError as e:
        return failing(claim_id, "%s: %s" % (entry.name, e))
    if actual != entry.claimed_type:
        return failing(claim_id, "%s has type %s, claimed %s"
                       % (entry.name, print_type(actual), print_type(entry.claimed_type)))
    erased = erase(entry.witness)
    if erased != term:
        return failing(claim_id, "witness of %s erases to %s, not %s"
                       % (entry.name, print_term(erased), print_term(term)))
    return passing(claim_id, "%s : %s" % (entry.name, print_type(actual)))


def probe_subject_reduction(cases, claim_id, steps=config.SUBJECT_REDUCTION_STEPS):
    """:param cases: list of (typed term, context)"""

    return merge_reports(claim_id, [subject_reduction_probe(t, steps, ctx, claim_id) for t, ctx in cases])


def probe_strong_normalization(cases, claim_id, fuel=None):

    fuel = fuel if fuel is not None else config.default_fuel()
    return merge_reports(claim_id, [sn_probe(t, fuel, ctx, claim_id=claim_id) for t, ctx in cases])


def check_numeral_witnesses(system, max_n, claim_id=None):
    """Every numeral witness of the typed layer must check at the data type and erase to the numeral."""

    claim_id = claim_id or "%s.typing.numerals" % system.name
    layer = system.typed_layer
    reports = []
    for n in range(max_n + 1):
        entry = ZooEntry("numeral %d" % n, system.numeral(n), claimed_type=layer.data_type,
                         witness=layer.numeral_witness(n))
        report = check_witness(entry, claim_id=claim_id)
        reports.append(replace(report, n=n))
    return merge_reports(claim_id, reports)
