from lamlab.evaluation.numeral_evaluation import NumeralSystemEvaluator, check_numeral_system, \
    check_adequate
from lamlab.evaluation.report import ClaimStatus
from lamlab.terms.reader import parse_term
from lamlab.terms.syntax import Lam, Var
from lamlab.zoo.booleans import boolean_system
from lamlab.zoo.church import system_church
from lamlab.zoo.system_d import system_d
from lamlab.zoo.system_e import system_e


def statuses(reports):
    return dict((r.claim_id, r.status) for r in reports)


def statuses_report(reports, claim_id):
    return [r for r in reports if r.claim_id == claim_id][0]


def test_church_numerals_form_a_numeral_system():
    reports = check_numeral_system(system_church(), 10)
    assert [r.claim_id for r in reports] == ["church.numerals", "church.successor", "church.zero-test"]
    assert all(r.passed for r in reports)
    assert all(r.n == 10 for r in reports)


def test_system_e_forms_a_numeral_system():
    assert all(r.passed for r in check_numeral_system(system_e(), 10))


def test_sabotaged_zero_test_fails_at_one():
    system = system_church().replace(zero_test=parse_term(r"\n.\x.\y.x"))
    report = statuses_report(check_numeral_system(system, 10), "church.zero-test")
    assert report.status == ClaimStatus.FAIL
    assert report.n == 1


def test_sabotaged_successor_fails_with_a_counterexample():
    system = system_church().replace(successor=parse_term(r"\n.\f.f n"))
    report = statuses_report(check_numeral_system(system, 10), "church.successor")
    assert report.status == ClaimStatus.FAIL
    assert report.n == 0
    assert "normalizes to" in report.detail


def test_printed_successor_fails():
    reports = check_numeral_system(system_church(as_printed=True), 5)
    assert statuses(reports)["church.successor"] == ClaimStatus.FAIL


def test_duplicate_numerals_are_rejected():
    system = system_church().replace(numeral=lambda n: Lam(Var(0)))
    report = NumeralSystemEvaluator(system).check_numerals(3)
    assert report.status == ClaimStatus.FAIL
    assert report.n == 1


def test_predecessor_laws():
    assert check_adequate(system_church(), 10).passed
    assert check_adequate(system_e(), 10).passed
    assert check_adequate(system_church(as_printed=True), 10).status == ClaimStatus.FAIL
    assert check_adequate(system_e(as_printed=True), 10).status == ClaimStatus.FAIL


def test_missing_components_are_informational():
    report = check_adequate(system_d(), 10)
    assert report.status == ClaimStatus.UNKNOWN
    assert report.informational
    assert "not applicable" in report.detail

    zero_test = NumeralSystemEvaluator(boolean_system()).check_zero_test(1)
    assert zero_test.informational


def test_iterated_successor():
    assert NumeralSystemEvaluator(system_d()).check_iterated_successor(8).passed


def test_fuel_exhaustion_is_unknown():
    report = NumeralSystemEvaluator(system_e(), fuel=5).check_successor(3)
    assert report.status == ClaimStatus.UNKNOWN
    assert not report.informational