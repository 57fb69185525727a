import enum
from dataclasses import dataclass, replace


class ClaimStatus(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class ClaimReport:
    """
    Outcome of one checked claim.

    :param detail: for FAIL, the concrete counterexample (an input term and what it
                   reduced to); for PASS, the evidence found
    :param n: the largest n checked, or the n at which the check failed
    :param informational: informational reports never decide whether a suite passes
    """
    claim_id: str
    status: ClaimStatus
    detail: str = ""
    fuel_used: int = 0
    n: int = None
    informational: bool = False


    @property
    def passed(self):
        return self.status == ClaimStatus.PASS


    def with_id(self, claim_id):

        return replace(self, claim_id=claim_id)


    def to_line(self):

        line = "CLAIM %s %s n=%s fuel=%d" % (self.claim_id, self.status.value,
                                            "-" if self.n is None else self.n, self.fuel_used)
        if self.detail:
            line += " detail=%s" % self.detail.replace("\n", " ")
        return line


    def to_json(self):

        return {
            "claim_id": self.claim_id,
            "status": self.status.value,
            "n": self.n,
            "fuel": self.fuel_used,
            "detail": self.detail,
            "informational": self.informational,
        }


def passing(claim_id, detail="", fuel_used=0, n=None):

    return ClaimReport(claim_id, ClaimStatus.PASS, detail, fuel_used, n)


def failing(claim_id, detail, fuel_used=0, n=None):

    assert detail, "A failing report must carry its counterexample"
    return ClaimReport(claim_id, ClaimStatus.FAIL, detail, fuel_used, n)


def unknown(claim_id, detail, fuel_used=0, n=None, informational=False):

    return ClaimReport(claim_id, ClaimStatus.UNKNOWN, detail, fuel_used, n, informational)


def merge_reports(claim_id, reports):
    """
    Folds per-case reports into one: the first FAIL wins, then the first UNKNOWN;
    otherwise PASS with the detail of the last case.
    """

    assert len(reports) > 0, "Nothing to merge for %s" % claim_id
    fuel = sum(r.fuel_used for r in reports)
    for status in (ClaimStatus.FAIL, ClaimStatus.UNKNOWN):
        for r in reports:
            if r.status == status:
                return replace(r, claim_id=claim_id, fuel_used=fuel)

    checked = [r.n for r in reports if r.n is not None]
    return ClaimReport(claim_id, ClaimStatus.PASS, reports[-1].detail, fuel,
                       max(checked) if checked else None)


def suite_passed(reports):

    return all(r.passed or r.informational for r in reports)
