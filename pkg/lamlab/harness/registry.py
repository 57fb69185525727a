"""Claim registry: named, independently runnable checks grouped into suites."""

import logging
import multiprocessing
from collections import OrderedDict
from dataclasses import dataclass

from tqdm import tqdm

from lamlab import config
from lamlab.errors import LamlabError, UnknownSuiteError
from lamlab.evaluation.report import failing


SUITES = ["church", "bool", "system-d", "system-e", "theorem8", "tronci", "kernel"]


@dataclass(frozen=True)
class RunSettings:
    max_n: int = config.DEFAULT_MAX_N
    fuel: int = config.DEFAULT_FUEL
    theorem8_fuel: int = config.THEOREM8_FUEL
    variants: int = config.DEFAULT_VARIANTS
    as_printed: bool = False


@dataclass(frozen=True)
class ClaimRegistryEntry:
    """
    :param runner: function of a RunSettings returning a ClaimReport
    :param anchor: the law or construction the claim is about
    """
    claim_id: str
    description: str
    anchor: str
    runner: object
    suites: tuple


_REGISTRY = OrderedDict()


def claim(claim_id, suites, description, anchor=""):

    def register(runner):
        assert claim_id not in _REGISTRY, "Duplicate claim id: %s" % claim_id
        for suite in suites:
            assert suite in SUITES, "Unknown suite %s for %s" % (suite, claim_id)
        _REGISTRY[claim_id] = ClaimRegistryEntry(claim_id, description, anchor, runner, tuple(suites))
        return runner

    return register


def get_registry():

    # importing the claim definitions fills the registry
    import lamlab.harness.claims  # noqa: F401
    return _REGISTRY


def suite_claims(suite):
    """Claim ids of a suite in sorted order; "all" selects every claim."""

    registry = get_registry()
    if suite == "all":
        return sorted(registry)
    if suite not in SUITES:
        raise UnknownSuiteError("Unknown suite: %s (expected one of %s, all)" % (suite, ", ".join(SUITES)))
    return sorted(claim_id for claim_id, entry in registry.items() if suite in entry.suites)


def run_claim(claim_id, settings):

    entry = get_registry()[claim_id]
    try:
        report = entry.runner(settings)
    except LamlabError as e:
        logging.warning("Claim %s raised %s" % (claim_id, e))
        report = failing(claim_id, "%s: %s" % (type(e).__name__, e))
    return report.with_id(claim_id)


def _run_claim_job(job):

    claim_id, settings = job
    return run_claim(claim_id, settings)


def run_suite(suite, settings=None, threads=1, progress=False):
    """
    Runs every claim of the suite and returns the reports sorted by claim id,
    whatever order they completed in.
    """

    settings = settings if settings is not None else RunSettings()
    claim_ids = suite_claims(suite)
    jobs = [(claim_id, settings) for claim_id in claim_ids]

    if threads > 1:
        pool = multiprocessing.Pool(threads)
        try:
            reports = list(tqdm(pool.imap_unordered(_run_claim_job, jobs), total=len(jobs),
                                disable=not progress, desc=suite))
        finally:
            pool.close()
            pool.join()
    else:
        reports = [_run_claim_job(job) for job in tqdm(jobs, disable=not progress, desc=suite)]

    return sorted(reports, key=lambda report: report.claim_id)
