import numpy as np

from lamlab import config
from lamlab.sampling.base import BaseSampler
from lamlab.systemf.types import TVar, TFree, Arrow, Forall, BOTTOM
from lamlab.terms.syntax import Var, Free, Lam, App


_HINTS = "xyzuvw"


class RandomTermSampler(BaseSampler):
    """
    Random untyped terms of at most max_size nodes. With no free_names the terms are
    closed; otherwise leaves may also be one of the given free variables.
    """


    def __init__(self, count, max_size, free_names=(), seed=config.PROPERTY_SEED):

        assert max_size >= 2, "Terms need at least two nodes to be closed"
        self.count = count
        self.max_size = max_size
        self.free_names = tuple(free_names)
        self._np_rng = np.random.RandomState(seed)
        super(RandomTermSampler, self).__init__()


    def build_instances(self):

        return [self.random_term(self._np_rng.randint(2, self.max_size + 1))
                for _ in range(self.count)]


    def random_term(self, size, depth=0):

        if size <= 1:
            return self._leaf(depth)
        if size == 2 or self._np_rng.rand() < 0.35:
            return Lam(self.random_term(size - 1, depth + 1), _HINTS[depth % len(_HINTS)])
        left = self._np_rng.randint(1, size - 1)
        return App(self.random_term(left, depth), self.random_term(size - 1 - left, depth))


    def _leaf(self, depth):

        if depth > 0 and (not self.free_names or self._np_rng.rand() < 0.8):
            index = self._np_rng.randint(depth)
            return Var(index, _HINTS[(depth - 1 - index) % len(_HINTS)])
        if self.free_names:
            return Free(self.free_names[self._np_rng.randint(len(self.free_names))])
        return Lam(Var(0, "x"), "x")


class RandomTypeSampler(BaseSampler):


    def __init__(self, count, max_size, seed=config.PROPERTY_SEED):

        self.count = count
        self.max_size = max_size
        self._np_rng = np.random.RandomState(seed)
        super(RandomTypeSampler, self).__init__()


    def build_instances(self):

        return [self.random_type(self._np_rng.randint(1, self.max_size + 1)) for _ in range(self.count)]


    def random_type(self, size, depth=0):

        if size <= 1:
            roll = self._np_rng.randint(3)
            if roll == 0:
                return BOTTOM
            if roll == 1 and depth > 0:
                return TVar(self._np_rng.randint(depth), "X")
            return TFree("XYZ"[self._np_rng.randint(3)])
        if self._np_rng.rand() < 0.3:
            return Forall(self.random_type(size - 1, depth + 1), "X")
        left = self._np_rng.randint(1, size) if size > 2 else 1
        right = max(size - 1 - left, 1)
        return Arrow(self.random_type(left, depth), self.random_type(right, depth))
