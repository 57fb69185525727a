"""Head reduction, leftmost-outermost normalization and a randomized-redex strategy."""

import enum
from dataclasses import dataclass

from lamlab.terms.syntax import Lam, App, instantiate
from lamlab.util import ensure_positive


class Status(enum.Enum):
    HEAD_NORMAL_FORM = "HeadNormalForm"
    NORMAL_FORM = "NormalForm"
    FUEL_EXHAUSTED = "FuelExhausted"


@dataclass(frozen=True)
class ReductionTrace:
    """
    :param steps: every term after the initial one, in order; empty when the trace
                  was run without recording
    :param final: the last term reached
    """
    initial: object
    steps: tuple
    status: Status
    fuel_used: int
    final: object

    @property
    def terminated(self):
        return self.status != Status.FUEL_EXHAUSTED


def head_step(t):
    """Contracts the head redex of t, or returns None if t is in head normal form."""

    hints = []
    while isinstance(t, Lam):
        hints.append(t.hint)
        t = t.body

    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    if not isinstance(t, Lam) or not args:
        return None

    args.reverse()
    result = instantiate(t.body, args[0])
    for arg in args[1:]:
        result = App(result, arg)
    for hint in reversed(hints):
        result = Lam(result, hint)
    return result


def normal_step(t):
    """Contracts the leftmost-outermost redex of t, or returns None if t is normal."""

    if isinstance(t, Lam):
        body = normal_step(t.body)
        return None if body is None else Lam(body, t.hint)
    if isinstance(t, App):
        if isinstance(t.fn, Lam):
            return instantiate(t.fn.body, t.arg)
        fn = normal_step(t.fn)
        if fn is not None:
            return App(fn, t.arg)
        arg = normal_step(t.arg)
        if arg is not None:
            return App(t.fn, arg)
    return None


def _run(t, fuel, step, done_status, record):

    ensure_positive(fuel)
    steps = []
    current = t
    used = 0
    while True:
        following = step(current)
        if following is None:
            status = done_status
            break
        if used >= fuel:
            status = Status.FUEL_EXHAUSTED
            break
        current = following
        used += 1
        if record:
            steps.append(current)
    return ReductionTrace(t, tuple(steps), status, used, current)


def head_reduce(t, fuel, record=True):

    return _run(t, fuel, head_step, Status.HEAD_NORMAL_FORM, record)


def normalize(t, fuel, record=True):

    return _run(t, fuel, normal_step, Status.NORMAL_FORM, record)


def redex_paths(t):
    """Lists the positions of all redexes in t as tuples of 'body'/'fn'/'arg'."""

    paths = []
    stack = [(t, ())]
    while stack:
        current, path = stack.pop()
        if isinstance(current, Lam):
            stack.append((current.body, path + ("body",)))
        elif isinstance(current, App):
            if isinstance(current.fn, Lam):
                paths.append(path)
            stack.append((current.arg, path + ("arg",)))
            stack.append((current.fn, path + ("fn",)))
    return paths


def contract_at(t, path):

    if not path:
        assert isinstance(t, App) and isinstance(t.fn, Lam), "No redex at this position"
        return instantiate(t.fn.body, t.arg)
    head, rest = path[0], path[1:]
    if head == "body":
        return Lam(contract_at(t.body, rest), t.hint)
    if head == "fn":
        return App(contract_at(t.fn, rest), t.arg)
    return App(t.fn, contract_at(t.arg, rest))


def random_step(t, rng):
    """Contracts a redex chosen uniformly by rng (a random.Random), or returns None."""

    paths = redex_paths(t)
    if not paths:
        return None
    return contract_at(t, paths[rng.randrange(len(paths))])


def normalize_randomly(t, fuel, rng, record=False):

    return _run(t, fuel, lambda current: random_step(current, rng), Status.NORMAL_FORM, record)
