import enum
from dataclasses import dataclass

from lamlab.terms.reduction import head_reduce, normalize, Status
from lamlab.util import ensure_positive


class Verdict(enum.Enum):
    EQUAL = "Equal"
    DISTINCT = "Distinct"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class EquivVerdict:
    verdict: Verdict
    fuel_spent: int

    @property
    def is_equal(self):
        return self.verdict == Verdict.EQUAL

    @property
    def is_distinct(self):
        return self.verdict == Verdict.DISTINCT

    @property
    def is_unknown(self):
        return self.verdict == Verdict.UNKNOWN

    def __str__(self):
        if self.is_unknown:
            return "Unknown(%d)" % self.fuel_spent
        return self.verdict.value


def beta_equiv(t, u, fuel):
    """
    Normalizes both sides with the given budget each. Only two normal forms give a
    definitive answer.
    """

    ensure_positive(fuel)
    left = normalize(t, fuel, record=False)
    right = normalize(u, fuel, record=False)
    spent = left.fuel_used + right.fuel_used

    if left.status == Status.NORMAL_FORM and right.status == Status.NORMAL_FORM:
        if left.final == right.final:
            return EquivVerdict(Verdict.EQUAL, spent)
        return EquivVerdict(Verdict.DISTINCT, spent)
    return EquivVerdict(Verdict.UNKNOWN, spent)


def head_common_reduct(t, u, fuel):
    """Searches the two head-reduction chains, each cut at fuel, for a shared term."""

    ensure_positive(fuel)
    left = head_reduce(t, fuel)
    right = head_reduce(u, fuel)
    spent = left.fuel_used + right.fuel_used

    seen = set((left.initial,) + left.steps)
    for term in (right.initial,) + right.steps:
        if term in seen:
            return EquivVerdict(Verdict.EQUAL, spent)

    if left.status == Status.HEAD_NORMAL_FORM and right.status == Status.HEAD_NORMAL_FORM:
        return EquivVerdict(Verdict.DISTINCT, spent)
    return EquivVerdict(Verdict.UNKNOWN, spent)
