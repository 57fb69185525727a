import logging

from lamlab import config
from lamlab.sampling.base import BaseSampler
from lamlab.terms.equivalence import beta_equiv
from lamlab.terms.reader import print_term
from lamlab.terms.syntax import Var, Lam, App, iter_apply


IDENTITY = Lam(Var(0, "z"), "z")


def identity_wrap(t, k=1):

    for _ in range(k):
        t = App(IDENTITY, t)
    return t


def redex_under_binder(t):
    r"""\x.b becomes \x.((\z.z) b); None for terms that are not abstractions."""

    if isinstance(t, Lam):
        return Lam(App(IDENTITY, t.body), t.hint)
    return None


class ThetaSampler(BaseSampler):
    """
    Terms β-equivalent to numeral(n), drawn in a fixed order: the numeral itself,
    head redexes from identity wraps, successor chains, a redex under the first
    binder, predecessor-of-successor, then combinations and deeper wraps. Every
    candidate is checked against the numeral before it is kept, so fewer than count
    variants come back when fuel is too small to confirm the candidates.
    """


    def __init__(self, system, n, count, fuel=config.DEFAULT_FUEL):

        self.system = system
        self.n = n
        self.count = count
        self.fuel = fuel
        super(ThetaSampler, self).__init__()


    def candidates(self):

        system, n = self.system, self.n
        base = system.numeral(n)
        successor = system.successor

        yield base
        yield identity_wrap(base)
        if successor is not None and n >= 1:
            yield App(successor, system.numeral(n - 1))
        under = redex_under_binder(base)
        if under is not None:
            yield under
        if successor is not None and system.predecessor is not None:
            yield App(system.predecessor, App(successor, base))
        yield identity_wrap(base, 2)
        if successor is not None:
            for j in range(2, n + 1):
                yield iter_apply(successor, j, system.numeral(n - j))
            if n >= 1:
                yield identity_wrap(App(successor, system.numeral(n - 1)))
                yield App(successor, identity_wrap(system.numeral(n - 1)))
        for k in range(3, self.count + 3):
            yield identity_wrap(base, k)


    def build_instances(self):

        base = self.system.numeral(self.n)
        variants = []
        for candidate in self.candidates():
            if len(variants) >= self.count:
                break
            verdict = beta_equiv(candidate, base, self.fuel)
            if verdict.is_equal:
                variants.append(candidate)
            else:
                logging.warning("Skipping theta candidate %s for n=%d of %s: %s"
                                % (print_term(candidate), self.n, self.system.name, verdict))
        if len(variants) < self.count:
            logging.warning("Only %d of %d theta variants verified for n=%d of %s"
                            % (len(variants), self.count, self.n, self.system.name))
        return variants


def theta_variants(system, n, count, fuel=config.DEFAULT_FUEL):

    return ThetaSampler(system, n, count, fuel).get_instances()
