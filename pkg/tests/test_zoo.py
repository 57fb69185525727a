import importlib

import pytest

from lamlab.errors import UnknownSystemError
from lamlab.evaluation.witness_evaluation import check_witness
from lamlab.systemf.checker import check
from lamlab.systemf.syntax import erase, star_witness
from lamlab.systemf.types import Arrow, godel_star
from lamlab.terms.equivalence import beta_equiv
from lamlab.terms.reduction import normalize, Status
from lamlab.terms.syntax import App, is_closed, church_numeral
from lamlab.zoo import get_zoo, system_from_name, SYSTEM_NAMES, PRINTED_VARIANTS
from lamlab.zoo.booleans import boolean_system
from lamlab.zoo.church import church, church_ops, system_church
from lamlab.zoo.system_d import d, d_witness, system_d
from lamlab.zoo.system_e import e, e_witness, parity_parts, system_e, p_prime

FUEL = 100000


@pytest.fixture(scope="module")
def zoo():
    return get_zoo()


def equal(zoo, left, right):
    return beta_equiv(zoo.parse(left), zoo.parse(right), FUEL).is_equal


def test_every_entry_is_closed(zoo):
    for entry in zoo.entries.values():
        assert is_closed(entry.term), entry.name


def test_every_witness_checks_and_erases_to_its_term(zoo):
    for entry in zoo.entries.values():
        if entry.typed:
            assert check_witness(entry).passed, entry.name


def test_printed_variants_have_no_witness(zoo):
    for printed in PRINTED_VARIANTS.values():
        assert not zoo.entries[printed].typed


def test_tp_has_the_starred_implication_type(zoo):
    assert zoo.entries["TP"].claimed_type == godel_star(Arrow(zoo.type("Q"), zoo.type("P")))
    assert zoo.entries["tP"].claimed_type == godel_star(zoo.type("P"))


@pytest.mark.parametrize("left,right", [
    ("S 0", "1"),
    ("S 4", "5"),
    ("Z 0", "T"),
    ("Z 3", "F"),
    ("P 1", "0"),
    ("P 5", "4"),
    ("S_d d2", "d3"),
    ("Ze e0", "T"),
    ("Ze e3", "F"),
    ("Se e0", "e1"),
    ("Se e1", "e2"),
    ("Se e4", "e5"),
    ("Pe e1", "e0"),
    ("Pe e6", "e5"),
    ("Pe e7", "e6"),
    ("Pprime d0", "F"),
    ("Pprime d1", "T"),
])
def test_zoo_laws(zoo, left, right):
    assert equal(zoo, left, right)


@pytest.mark.parametrize("left,right", [
    ("S_printed 1", "2"),
    ("P_printed 2", "1"),
])
def test_printed_forms_break_the_laws(zoo, left, right):
    assert not equal(zoo, left, right)


def test_printed_predecessor_of_system_e_breaks_its_law(zoo):
    failures = [n for n in range(8) if not equal(zoo, "Pe_printed e%d" % (n + 1), "e%d" % n)]
    assert failures


def test_as_printed_swaps_only_the_printed_names(zoo):
    plain, printed = zoo.exposed(False), zoo.exposed(True)
    for name in plain:
        if name in PRINTED_VARIANTS:
            assert printed[name].term == zoo.term(PRINTED_VARIANTS[name])
        else:
            assert printed[name] is plain[name]


def test_generators_match_the_registered_numerals(zoo):
    for n in range(11):
        assert zoo.term("d%d" % n) == d(n)
        assert zoo.term("e%d" % n) == e(n)
        assert zoo.witness("d%d" % n) == d_witness(n)
        assert erase(e_witness(n)) == e(n)
    assert church(3) == church_numeral(3)


def test_parity_parts(zoo):
    assert parity_parts(1) == (zoo.term("F"), 0)
    assert parity_parts(2) == (zoo.term("T"), 0)
    assert parity_parts(7) == (zoo.term("F"), 3)
    with pytest.raises(AssertionError):
        parity_parts(0)


def test_numeral_witnesses_star_to_the_starred_data_type():
    for system in (system_church(), system_d(), system_e(), boolean_system()):
        layer = system.typed_layer
        for n in range(2):
            assert check(None, star_witness(layer.numeral_witness(n))) == godel_star(layer.data_type)


def test_system_e_witnesses_check_at_e(zoo):
    # d_k and the booleans are typed under /\X with x : B -> D -> X in scope
    for n in range(6):
        assert check(None, e_witness(n)) == zoo.type("E")
    for name in ["e1", "e2", "e3", "e4", "e5", "Se", "Sehat", "O_e"]:
        report = check_witness(zoo.entries[name])
        assert report.passed, report.detail


def test_church_ops(zoo):
    assert church_ops() == {"S": zoo.term("S"), "Z": zoo.term("Z"), "P": zoo.term("P")}
    printed = church_ops(as_printed=True)
    assert printed["S"] == zoo.term("S_printed")
    assert printed["P"] == zoo.term("P_printed")
    assert printed["Z"] == zoo.term("Z")


def test_numerals_are_normal():
    for system in (system_church(), system_d(), system_e()):
        for n in range(6):
            assert normalize(system.numeral(n), 1, record=False).status == Status.NORMAL_FORM


def test_systems():
    assert system_church().predecessor == get_zoo().term("P")
    assert system_church(as_printed=True).successor == get_zoo().term("S_printed")
    assert system_d().zero_test is None
    assert system_e().predecessor == get_zoo().term("Pe")
    assert system_e(as_printed=True).predecessor == get_zoo().term("Pe_printed")
    assert boolean_system().successor is None
    assert not p_prime().typed


def test_system_from_name():
    assert [system_from_name(name).name for name in SYSTEM_NAMES] == SYSTEM_NAMES
    with pytest.raises(UnknownSystemError):
        system_from_name("binary")


def test_zoo_is_built_once():
    assert get_zoo() is get_zoo()


def test_p_prime_applied(zoo):
    term = p_prime().term
    assert beta_equiv(App(term, d(0)), App(term, d(1)), FUEL).is_distinct


@pytest.mark.parametrize("module,text", [
    ("lamlab.zoo.system_d", r"d_n = \a.n"),
    ("lamlab.zoo.church", r"n = \x.\f.(f^n x)"),
    ("lamlab.zoo.system_e", r"<<u, v>> = \x.\y.x u v"),
])
def test_module_docs_keep_their_backslashes(module, text):
    assert text in importlib.import_module(module).__doc__
