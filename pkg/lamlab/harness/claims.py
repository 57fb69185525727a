"""
Every registered claim. A runner takes the RunSettings and returns one ClaimReport;
per-n checks are merged so that a failure keeps the n it happened at.
"""

from lamlab.errors import MissingComponentError
from lamlab.evaluation import properties
from lamlab.evaluation.numeral_evaluation import NumeralSystemEvaluator
from lamlab.evaluation.report import passing, failing, unknown, merge_reports
from lamlab.evaluation.storage_evaluation import check_storage, check_tau, check_typed_storage, \
    storage_from_adequacy
from lamlab.evaluation.witness_evaluation import check_witness, check_numeral_witnesses, \
    probe_subject_reduction, probe_strong_normalization
from lamlab.harness.registry import claim
from lamlab.sampling.theta import theta_variants
from lamlab.systemf.checker import Context
from lamlab.systemf.syntax import TypedVar, typed_apply, church_witness, star_witness
from lamlab.systemf.types import neg
from lamlab.terms.equivalence import beta_equiv, head_common_reduct
from lamlab.terms.reader import print_term
from lamlab.terms.syntax import App, Lam, Var, iter_apply
from lamlab.zoo import system_church, boolean_system, system_d, system_e, d, e, p_prime, \
    d_witness, e_witness, get_zoo
from lamlab.zoo.booleans import boolean, boolean_witness
from lamlab.zoo.system_e import parity_parts


def _typing_claim(suites, prefix, name, description):
    """Registers prefix.typing.name: the zoo witness of name checks and erases to the exposed term."""

    def run(settings):
        zoo = get_zoo()
        return check_witness(zoo.entries[name], zoo.exposed(settings.as_printed)[name].term)

    claim("%s.typing.%s" % (prefix, name), suites, description, "%s is typable" % name)(run)


def _probe_claims(suites, prefix, cases):
    """
    Registers prefix.subject-reduction and prefix.strong-normalization over the
    same cases, a function returning (typed term, context) pairs.
    """

    def run_subject_reduction(settings):
        return probe_subject_reduction(cases(), "%s.subject-reduction" % prefix)

    def run_strong_normalization(settings):
        return probe_strong_normalization(cases(), "%s.strong-normalization" % prefix, settings.fuel)

    claim("%s.subject-reduction" % prefix, suites,
          "typed reduction of the %s witnesses keeps their type" % prefix,
          "subject reduction")(run_subject_reduction)
    claim("%s.strong-normalization" % prefix, suites,
          "erasures of the %s witnesses normalize under random redex choice" % prefix,
          "strong normalization")(run_strong_normalization)


def _witnesses(*names):

    zoo = get_zoo()
    return [(zoo.witness(name), None) for name in names]


def _applied(name, *args):

    return typed_apply(get_zoo().witness(name), *args), None


def _stored(operator, numeral_witness, data_type):
    """(operator numeral* f) with f : ~data_type in the context."""

    zoo = get_zoo()
    ctx = Context([("f", neg(zoo.type(data_type)))])
    return typed_apply(zoo.witness(operator), star_witness(numeral_witness), TypedVar("f")), ctx


# church numerals

@claim("church.numerals", ["church"], "church numerals are closed, normal and distinct", "numeral system")
def church_numerals(settings):
    return NumeralSystemEvaluator(system_church(settings.as_printed), settings.fuel).check_numerals(settings.max_n)


@claim("church.successor", ["church"], "(S n) = n+1", "successor law")
def church_successor(settings):
    return NumeralSystemEvaluator(system_church(settings.as_printed), settings.fuel).check_successor(settings.max_n)


@claim("church.successor-iterate", ["church"], "(S^n 0) = n", "successor law")
def church_successor_iterate(settings):
    evaluator = NumeralSystemEvaluator(system_church(settings.as_printed), settings.fuel)
    return evaluator.check_iterated_successor(settings.max_n)


@claim("church.zero-test", ["church"], "(Z 0) = T and (Z n+1) = F", "zero test law")
def church_zero_test(settings):
    return NumeralSystemEvaluator(system_church(settings.as_printed), settings.fuel).check_zero_test(settings.max_n)


@claim("church.predecessor", ["church"], "(P n+1) = n", "adequacy")
def church_predecessor(settings):
    return NumeralSystemEvaluator(system_church(settings.as_printed), settings.fuel).check_predecessor(settings.max_n)


@claim("church.storage", ["church"], "O_N is a storage operator for church numerals", "storage operator")
def church_storage(settings):
    system = system_church(settings.as_printed)
    return merge_reports("church.storage", check_storage(system, system.storage, settings.max_n,
                                                         settings.variants, settings.fuel))


@claim("church.storage-tau", ["church"], "(O_N n f) reduces to (f (S^n 0))", "storage operator")
def church_storage_tau(settings):
    zoo = get_zoo()
    system = system_church(settings.as_printed)
    return check_tau(system, system.storage, lambda n: iter_apply(zoo.term("S"), n, system.numeral(0)),
                     settings.max_n, settings.fuel)


@claim("church.typing.numerals", ["church"], "every church numeral is typable at N", "typed numerals")
def church_typing_numerals(settings):
    return check_numeral_witnesses(system_church(settings.as_printed), settings.max_n)


@claim("church.typed-storage", ["church"], "O_N : N* -> ~~N and the numerals check at N*", "typed storage")
def church_typed_storage(settings):
    return check_typed_storage(system_church(settings.as_printed), get_zoo().witness("O_N"), settings.max_n)


for _name, _description in [("S", "S : N -> N"), ("Z", "Z : N -> B"), ("UP", "UP : NN -> NN"),
                            ("P", "P : N -> N"), ("J", "J : ~N -> ~N"), ("O_N", "O_N : N* -> ~~N")]:
    _typing_claim(["church"], "church", _name, _description)


def _church_cases():

    return _witnesses("S", "Z", "UP", "P", "J", "O_N") + [
        _applied("S", church_witness(2)),
        _applied("Z", church_witness(0)),
        _applied("Z", church_witness(1)),
        _applied("P", church_witness(2)),
        _stored("O_N", church_witness(2), "N"),
    ]


_probe_claims(["church"], "church", _church_cases)


# booleans

@claim("bool.numerals", ["bool"], "T and F are closed, normal and distinct", "data type")
def bool_numerals(settings):
    return NumeralSystemEvaluator(boolean_system(), settings.fuel).check_numerals(1)


for _name, _description in [("T", "T : B"), ("F", "F : B")]:
    _typing_claim(["church", "bool"], "bool", _name, _description)
_typing_claim(["bool"], "bool", "O_B", "O_B : B* -> ~~B")


@claim("bool.storage", ["bool"], "O_B is a storage operator for the booleans", "storage operator")
def bool_storage(settings):
    system = boolean_system()
    return merge_reports("bool.storage", check_storage(system, system.storage, 1, settings.variants, settings.fuel))


@claim("bool.storage-tau", ["bool"], "(O_B T f) reduces to (f T) and (O_B F f) to (f F)", "storage operator")
def bool_storage_tau(settings):
    system = boolean_system()
    return check_tau(system, system.storage, boolean, 1, settings.fuel)


@claim("bool.typed-storage", ["bool"], "O_B : B* -> ~~B and T, F check at B*", "typed storage")
def bool_typed_storage(settings):
    return check_typed_storage(boolean_system(), get_zoo().witness("O_B"), 1)


_probe_claims(["bool"], "bool", lambda: _witnesses("T", "F", "O_B") + [
    _stored("O_B", boolean_witness(0), "B"),
    _stored("O_B", boolean_witness(1), "B"),
])


# system d

@claim("system-d.numerals", ["system-d"], "d numerals are closed, normal and distinct", "numeral system")
def system_d_numerals(settings):
    return NumeralSystemEvaluator(system_d(), settings.fuel).check_numerals(settings.max_n)


@claim("system-d.successor", ["system-d"], "(S_d d_n) = d_n+1", "successor law")
def system_d_successor(settings):
    return NumeralSystemEvaluator(system_d(), settings.fuel).check_successor(settings.max_n)


@claim("system-d.successor-iterate", ["system-d"], "(S_d^n d_0) = d_n", "successor law")
def system_d_successor_iterate(settings):
    return NumeralSystemEvaluator(system_d(), settings.fuel).check_iterated_successor(settings.max_n)


@claim("system-d.zero-test", ["system-d"], "system d has no zero test", "numeral system")
def system_d_zero_test(settings):
    return NumeralSystemEvaluator(system_d(), settings.fuel).check_zero_test(settings.max_n)


@claim("system-d.storage", ["system-d"], "O_d is a storage operator for system d", "storage operator")
def system_d_storage(settings):
    system = system_d()
    return merge_reports("system-d.storage", check_storage(system, system.storage, settings.max_n,
                                                           settings.variants, settings.fuel))


@claim("system-d.storage-tau", ["system-d"], "(O_d d_n f) reduces to (f (S_d^n d_0))", "storage operator")
def system_d_storage_tau(settings):
    zoo = get_zoo()
    return check_tau(system_d(), zoo.term("O_d"), lambda n: iter_apply(zoo.term("S_d"), n, d(0)),
                     settings.max_n, settings.fuel)


@claim("system-d.typing.numerals", ["system-d"], "every d_n is typable at D", "typed numerals")
def system_d_typing_numerals(settings):
    return check_numeral_witnesses(system_d(), settings.max_n)


@claim("system-d.typed-storage", ["system-d"], "O_d : D* -> ~~D and the numerals check at D*", "typed storage")
def system_d_typed_storage(settings):
    return check_typed_storage(system_d(), get_zoo().witness("O_d"), settings.max_n)


for _name, _description in [("tP", "tP : P*"), ("TP", "TP : (Q -> P)*"), ("S_d", "S_d : D -> D"),
                            ("d0hat", "d0hat : ~~D"), ("S_dhat", "S_dhat : ~~D -> ~~D"),
                            ("O_d", "O_d : D* -> ~~D")]:
    _typing_claim(["system-d"], "system-d", _name, _description)


_probe_claims(["system-d"], "system-d", lambda: _witnesses("tP", "TP", "S_d", "d0hat", "S_dhat", "O_d") + [
    _applied("S_d", d_witness(3)),
    _applied("S_dhat", get_zoo().witness("d0hat")),
    _stored("O_d", d_witness(3), "D"),
])


# system e

_E_SUITES = ["system-e", "tronci"]


@claim("system-e.numerals", _E_SUITES, "e numerals are closed, normal and distinct", "numeral system")
def system_e_numerals(settings):
    return NumeralSystemEvaluator(system_e(settings.as_printed), settings.fuel).check_numerals(settings.max_n)


@claim("system-e.successor", _E_SUITES, "(Se e_n) = e_n+1", "successor law")
def system_e_successor(settings):
    return NumeralSystemEvaluator(system_e(settings.as_printed), settings.fuel).check_successor(settings.max_n)


@claim("system-e.successor-iterate", _E_SUITES, "(Se^n e_0) = e_n", "successor law")
def system_e_successor_iterate(settings):
    evaluator = NumeralSystemEvaluator(system_e(settings.as_printed), settings.fuel)
    return evaluator.check_iterated_successor(settings.max_n)


@claim("system-e.zero-test", _E_SUITES, "(Ze e_0) = T and (Ze e_n+1) = F", "zero test law")
def system_e_zero_test(settings):
    return NumeralSystemEvaluator(system_e(settings.as_printed), settings.fuel).check_zero_test(settings.max_n)


@claim("system-e.predecessor", _E_SUITES, "(Pe e_n+1) = e_n", "adequacy")
def system_e_predecessor(settings):
    return NumeralSystemEvaluator(system_e(settings.as_printed), settings.fuel).check_predecessor(settings.max_n)


@claim("system-e.parity", _E_SUITES, "e_n pairs the parity boolean with d_k", "numeral system")
def system_e_parity(settings):
    zoo = get_zoo()
    t, f = zoo.term("T"), zoo.term("F")
    cases = []
    for n in range(1, settings.max_n + 1):
        b, k = parity_parts(n)
        cases.append((n, e(n)(t, t), b))
        cases.append((n, e(n)(f, d(0)), d(k)))
    evaluator = NumeralSystemEvaluator(system_e(settings.as_printed), settings.fuel)
    return evaluator.check_law("system-e.parity", cases)


@claim("system-e.p-prime", _E_SUITES, "(Pprime d_0) = F and (Pprime d_1) = T", "no typed predecessor")
def system_e_p_prime(settings):
    zoo = get_zoo()
    term = p_prime().term
    evaluator = NumeralSystemEvaluator(system_e(settings.as_printed), settings.fuel)
    return evaluator.check_law("system-e.p-prime", [(0, App(term, d(0)), zoo.term("F")),
                                                    (1, App(term, d(1)), zoo.term("T"))])


@claim("system-e.p-prime-separates", _E_SUITES, "(Pprime d_0) and (Pprime d_1) are distinct",
       "no typed predecessor")
def system_e_p_prime_separates(settings):
    term = p_prime().term
    verdict = beta_equiv(App(term, d(0)), App(term, d(1)), settings.fuel)
    if verdict.is_distinct:
        return passing("system-e.p-prime-separates", "Pprime tells d_0 from d_1", verdict.fuel_spent)
    if verdict.is_unknown:
        return unknown("system-e.p-prime-separates", "no decision within fuel", verdict.fuel_spent)
    return failing("system-e.p-prime-separates", "(Pprime d_0) and (Pprime d_1) are equivalent",
                   verdict.fuel_spent)


@claim("system-e.storage", _E_SUITES, "O_e is a storage operator for system e", "storage operator")
def system_e_storage(settings):
    system = system_e(settings.as_printed)
    return merge_reports("system-e.storage", check_storage(system, system.storage, settings.max_n,
                                                           settings.variants, settings.fuel))


def _stored_e(n):
    """<<b, S_d^k d_0>> for e_n = <<b, d_k>>, and e_0 itself."""

    if n == 0:
        return e(0)
    b, k = parity_parts(n)
    stored = iter_apply(get_zoo().term("S_d"), k, d(0))
    return Lam(Lam(App(App(Var(1, "a"), b), stored), "b"), "a")


@claim("system-e.storage-tau", _E_SUITES, "(O_e e_n f) reduces to (f <<b, S_d^k d_0>>)", "storage operator")
def system_e_storage_tau(settings):
    return check_tau(system_e(settings.as_printed), get_zoo().term("O_e"), _stored_e, settings.max_n, settings.fuel)


@claim("system-e.typing.numerals", _E_SUITES, "every e_n is typable at E", "typed numerals")
def system_e_typing_numerals(settings):
    return check_numeral_witnesses(system_e(settings.as_printed), settings.max_n)


@claim("system-e.typed-storage", _E_SUITES, "O_e : E* -> ~~E and the numerals check at E*", "typed storage")
def system_e_typed_storage(settings):
    return check_typed_storage(system_e(settings.as_printed), get_zoo().witness("O_e"), settings.max_n)


for _name, _description in [("Ze", "Ze : E -> B"), ("Se", "Se : E -> E"), ("e0hat", "e0hat : ~~E"),
                            ("Sehat", "Sehat : B* -> D* -> ~~E"), ("O_e", "O_e : E* -> ~~E")]:
    _typing_claim(_E_SUITES, "system-e", _name, _description)


_probe_claims(_E_SUITES, "system-e", lambda: _witnesses("Ze", "Se", "e0hat", "Sehat", "O_e") + [
    _applied("Ze", e_witness(1)),
    _applied("Se", e_witness(2)),
    _applied("Se", e_witness(3)),
    _stored("O_e", e_witness(3), "E"),
])


@claim("tronci.no-typed-predecessor", ["tronci"],
       "Pe has no witness at E -> E; a typed one would make Pprime a typed zero test on d",
       "no typed predecessor")
def tronci_no_typed_predecessor(settings):
    if get_zoo().entries["Pe"].typed:
        return failing("tronci.no-typed-predecessor", "Pe carries a typing witness")
    return unknown("tronci.no-typed-predecessor",
                   "untypability of Pe is not decided here; only the absence of a witness is checked",
                   informational=True)


# storage operators built from a successor, a zero test and a predecessor

_THEOREM8_MAX_N = 8

# Pe is applied to unreduced arguments at every level of the fixpoint
_THEOREM8_E_MAX_N = 4


def _adequacy_storage(system, settings, claim_id, max_n=_THEOREM8_MAX_N):

    system_max_n = min(settings.max_n, max_n)
    operator = storage_from_adequacy(system)
    return merge_reports(claim_id, check_storage(system, operator, system_max_n, settings.variants,
                                                 settings.theorem8_fuel, claim_id))


@claim("theorem8.church", ["theorem8"], "Theta H is a storage operator for church numerals",
       "storage from adequacy")
def theorem8_church(settings):
    return _adequacy_storage(system_church(settings.as_printed), settings, "theorem8.church")


@claim("theorem8.church-tau", ["theorem8"], "(Theta H n f) reduces to (f (S^n 0))", "storage from adequacy")
def theorem8_church_tau(settings):
    system = system_church(settings.as_printed)
    return check_tau(system, storage_from_adequacy(system),
                     lambda n: iter_apply(system.successor, n, system.numeral(0)),
                     min(settings.max_n, _THEOREM8_MAX_N), settings.theorem8_fuel, "theorem8.church-tau")


@claim("theorem8.system-e", ["theorem8"], "Theta H is a storage operator for system e",
       "storage from adequacy")
def theorem8_system_e(settings):
    return _adequacy_storage(system_e(settings.as_printed), settings, "theorem8.system-e", _THEOREM8_E_MAX_N)


@claim("theorem8.zero-common-reduct", ["theorem8"], "(Z theta) and T have a common head reduct for theta ~ 0",
       "storage from adequacy")
def theorem8_zero_common_reduct(settings):
    reports = []
    for system in (system_church(settings.as_printed), system_e(settings.as_printed)):
        for theta in theta_variants(system, 0, settings.variants, settings.fuel):
            verdict = head_common_reduct(App(system.zero_test, theta), get_zoo().term("T"), settings.fuel)
            if verdict.is_equal:
                reports.append(passing("theorem8.zero-common-reduct", "", verdict.fuel_spent, 0))
            elif verdict.is_unknown:
                reports.append(unknown("theorem8.zero-common-reduct", "%s: no decision within fuel"
                                       % print_term(theta), verdict.fuel_spent, 0))
            else:
                reports.append(failing("theorem8.zero-common-reduct", "(Z %s) and T have no common head reduct"
                                       % print_term(theta), verdict.fuel_spent, 0))
    return merge_reports("theorem8.zero-common-reduct", reports)


@claim("theorem8.needs-adequacy", ["theorem8"], "system d has no zero test, so no Theta H can be built",
       "storage from adequacy")
def theorem8_needs_adequacy(settings):
    try:
        storage_from_adequacy(system_d())
    except MissingComponentError as e:
        return passing("theorem8.needs-adequacy", str(e))
    return failing("theorem8.needs-adequacy", "built Theta H for system d")


# kernel metatheory

@claim("kernel.confluence", ["kernel"], "all terminating strategies agree on the normal form", "confluence")
def kernel_confluence(settings):
    return properties.check_confluence()


@claim("kernel.head-substitution-stability", ["kernel"], "head steps commute with substitution",
       "head reduction")
def kernel_head_substitution_stability(settings):
    return properties.check_head_substitution_stability()


@claim("kernel.context-stability", ["kernel"], "common head reducts survive application", "head reduction")
def kernel_context_stability(settings):
    return properties.check_context_stability()


@claim("kernel.head-determinism", ["kernel"], "head reduction is a function", "head reduction")
def kernel_head_determinism(settings):
    return properties.check_determinism()


@claim("kernel.round-trip", ["kernel"], "printing then reading gives back every zoo term, witness and type",
       "surface syntax")
def kernel_round_trip(settings):
    return properties.check_round_trip()


@claim("kernel.star-homomorphism", ["kernel"], "star commutes with -> and forall", "star translation")
def kernel_star_homomorphism(settings):
    return properties.check_star_homomorphism()


@claim("kernel.substitution-lemma", ["kernel"], "typing survives instantiating a free type variable",
       "type substitution")
def kernel_substitution_lemma(settings):
    return properties.check_substitution_lemma()


@claim("kernel.erasure-coherence", ["kernel"], "every zoo witness checks and erases to its term", "typing")
def kernel_erasure_coherence(settings):
    return properties.check_erasure_coherence()
