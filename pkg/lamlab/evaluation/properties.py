"""Randomized checks of the kernel's metatheory on generated terms and types."""

import random

from lamlab import config
from lamlab.evaluation.report import passing, failing, merge_reports
from lamlab.evaluation.witness_evaluation import check_witness
from lamlab.sampling.terms import RandomTermSampler, RandomTypeSampler
from lamlab.systemf.checker import Context, check
from lamlab.systemf.reader import parse_type, print_type, parse_typed_term, print_typed_term
from lamlab.systemf.syntax import typed_type_subst
from lamlab.systemf.types import TFree, Arrow, Forall, BOTTOM, neg, godel_star, type_subst
from lamlab.terms.equivalence import head_common_reduct
from lamlab.terms.reader import parse_term, print_term
from lamlab.terms.reduction import head_step, head_reduce, normalize, normalize_randomly, Status
from lamlab.terms.syntax import substitute
from lamlab.zoo.base import get_zoo


# (context, typed term, type) judgments with the free type variable X in the context
OPEN_JUDGMENTS = [
    ("x : X, f : X -> X", "f (f (f x))", "X"),
    ("a : Q -> P, x : X, f : X -> X", "f (f x)", "X"),
    ("y : X, z : ~X", "z y", "bot"),
    ("n : N, x : X, g : X -> X", "n [X] x g", "X"),
    ("k : ~X", r"\v:X. k v", "~X"),
]

INSTANCES = ["N", "B", "D", "forall Y. Y -> Y"]


def check_confluence(count=500, max_size=10, fuel=2000, seed=config.PROPERTY_SEED,
                     claim_id="kernel.confluence"):
    """Leftmost-outermost and randomized normalization must agree wherever both terminate."""

    rng = random.Random(seed)
    compared = 0
    used = 0
    for t in RandomTermSampler(count, max_size, seed=seed).get_instances():
        leftmost = normalize(t, fuel, record=False)
        used += leftmost.fuel_used
        if leftmost.status != Status.NORMAL_FORM:
            continue
        randomized = normalize_randomly(t, fuel, rng)
        used += randomized.fuel_used
        if randomized.status != Status.NORMAL_FORM:
            continue
        compared += 1
        if leftmost.final != randomized.final:
            return failing(claim_id, "%s: leftmost gives %s, random order gives %s"
                           % (print_term(t), print_term(leftmost.final), print_term(randomized.final)), used)
    return passing(claim_id, "%d of %d terms normalized by both strategies to one normal form"
                   % (compared, count), used)


def check_head_substitution_stability(count=200, max_size=12, seed=config.PROPERTY_SEED,
                                      claim_id="kernel.head-substitution-stability"):
    """If t head-steps to t', then t[u/x] head reduces through t'[u/x]."""

    terms = RandomTermSampler(count * 10, max_size, free_names=("x", "y"), seed=seed).get_instances()
    closed = RandomTermSampler(count * 10, 6, seed=seed + 1).get_instances()

    cases = 0
    for t, u in zip(terms, closed):
        following = head_step(t)
        if following is None:
            continue
        cases += 1
        target = substitute(following, "x", u)
        trace = head_reduce(substitute(t, "x", u), 4)
        if target not in (trace.initial,) + trace.steps:
            return failing(claim_id, "t = %s, u = %s: head reduction of t[u/x] misses %s"
                           % (print_term(t), print_term(u), print_term(target)))
        if cases >= count:
            break
    return passing(claim_id, "%d cases with a head redex" % cases)


def check_context_stability(count=100, max_size=10, fuel=50, seed=config.PROPERTY_SEED,
                            claim_id="kernel.context-stability"):
    """Terms with a common head reduct keep one after being applied to the same closed terms."""

    rng = random.Random(seed)
    terms = RandomTermSampler(count * 10, max_size, seed=seed).get_instances()
    arguments = RandomTermSampler(count * 30, 6, seed=seed + 2).get_instances()

    cases = 0
    used = 0
    for u in terms:
        v = head_step(u)
        if v is None or not head_common_reduct(u, v, fuel).is_equal:
            continue
        ws = [arguments[rng.randrange(len(arguments))] for _ in range(rng.randint(1, 3))]
        verdict = head_common_reduct(u(*ws), v(*ws), 4 * fuel)
        used += verdict.fuel_spent
        if not verdict.is_equal:
            return failing(claim_id, "u = %s, v = %s applied to %s: %s"
                           % (print_term(u), print_term(v), ", ".join(print_term(w) for w in ws), verdict),
                           used)
        cases += 1
        if cases >= count:
            break
    return passing(claim_id, "%d pairs stayed joinable under application" % cases, used)


def check_determinism(count=200, max_size=10, fuel=20, seed=config.PROPERTY_SEED,
                      claim_id="kernel.head-determinism"):
    """A head trace with more fuel extends the trace with less."""

    for t in RandomTermSampler(count, max_size, seed=seed).get_instances():
        short = head_reduce(t, fuel)
        longer = head_reduce(t, 2 * fuel)
        if longer.steps[:len(short.steps)] != short.steps:
            return failing(claim_id, "head traces of %s diverge" % print_term(t))
    return passing(claim_id, "%d terms" % count)


def check_round_trip(claim_id="kernel.round-trip"):

    zoo = get_zoo()
    for entry in zoo.entries.values():
        text = print_term(entry.term)
        if parse_term(text) != entry.term:
            return failing(claim_id, "%s prints as %s which reads back differently" % (entry.name, text))
        if entry.witness is not None:
            typed_text = print_typed_term(entry.witness)
            if parse_typed_term(typed_text) != entry.witness:
                return failing(claim_id, "witness of %s prints as %s which reads back differently"
                               % (entry.name, typed_text))
    for name, (a, _) in zoo.types.items():
        if parse_type(print_type(a)) != a:
            return failing(claim_id, "type %s prints as %s which reads back differently"
                           % (name, print_type(a)))
    return passing(claim_id, "%d entries and %d types" % (len(zoo.entries), len(zoo.types)))


def check_star_homomorphism(count=200, max_size=8, seed=config.PROPERTY_SEED,
                            claim_id="kernel.star-homomorphism"):

    types = RandomTypeSampler(2 * count, max_size, seed=seed).get_instances()
    if godel_star(BOTTOM) != BOTTOM or godel_star(TFree("X")) != neg(TFree("X")):
        return failing(claim_id, "star is wrong on bot or on a variable")
    for a, b in zip(types[::2], types[1::2]):
        if godel_star(Arrow(a, b)) != Arrow(godel_star(a), godel_star(b)):
            return failing(claim_id, "star does not commute with -> on %s and %s" % (print_type(a), print_type(b)))
        if godel_star(Forall(a)) != Forall(godel_star(a)):
            return failing(claim_id, "star does not commute with forall on %s" % print_type(Forall(a)))
    return passing(claim_id, "%d pairs of random types" % count)


def _read_context(text, aliases):

    entries = []
    for part in text.split(","):
        name, type_text = part.split(":", 1)
        entries.append((name.strip(), parse_type(type_text, aliases)))
    return Context(entries)


def check_substitution_lemma(claim_id="kernel.substitution-lemma"):
    """Instantiating X in an open judgment by a closed type keeps it derivable."""

    zoo = get_zoo()
    aliases = zoo.aliases()
    reports = []
    for context_text, term_text, type_text in OPEN_JUDGMENTS:
        ctx = _read_context(context_text, aliases)
        t = parse_typed_term(term_text, aliases, {})
        a = parse_type(type_text, aliases)
        if check(ctx, t) != a:
            reports.append(failing(claim_id, "%s |- %s : %s does not check" % (context_text, term_text, type_text)))
            continue
        for instance_text in INSTANCES:
            g = parse_type(instance_text, aliases)
            actual = check(ctx.substitute_type("X", g), typed_type_subst(t, "X", g))
            if actual != type_subst(a, "X", g):
                reports.append(failing(claim_id, "%s |- %s : %s fails at X := %s"
                                       % (context_text, term_text, type_text, instance_text)))
                break
        else:
            reports.append(passing(claim_id, "%d judgments, %d instances each" % (len(OPEN_JUDGMENTS), len(INSTANCES))))
    return merge_reports(claim_id, reports)


def check_erasure_coherence(claim_id="kernel.erasure-coherence"):

    entries = [entry for entry in get_zoo().entries.values() if entry.witness is not None]
    return merge_reports(claim_id, [check_witness(entry, claim_id=claim_id) for entry in entries])
