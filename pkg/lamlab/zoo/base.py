"""
The zoo: every named term, type and typing witness, read from surface syntax in
dependency order. Later entries refer to earlier ones by name.
"""

import functools
import logging
from collections import OrderedDict

from lamlab.models import ZooEntry
from lamlab.systemf.reader import parse_type, parse_typed_term
from lamlab.terms.reader import parse_term


# Names whose printed variant replaces them when the zoo is viewed as printed.
PRINTED_VARIANTS = OrderedDict([
    ("S", "S_printed"),
    ("UP", "UP_printed"),
    ("P", "P_printed"),
    ("Pe", "Pe_printed"),
])


class Zoo(object):


    def __init__(self):

        self.entries = OrderedDict()
        self.types = OrderedDict()
        self._terms = {}
        self._witnesses = {}
        self._aliases = {}


    def add_type(self, name, source):

        a = parse_type(source, self._aliases)
        self.types[name] = (a, source)
        self._aliases[name] = a
        return a


    def add(self, name, source, anchor="", type_source=None, witness_source=None):

        assert name not in self.entries, "Duplicate zoo entry: %s" % name
        term = parse_term(source, self._terms, strict=True)

        claimed_type = witness = None
        if witness_source is not None:
            assert type_source is not None, "Witness of %s needs a claimed type" % name
            claimed_type = parse_type(type_source, self._aliases)
            witness = parse_typed_term(witness_source, self._aliases, self._witnesses)
            self._witnesses[name] = witness

        entry = ZooEntry(name, term, anchor, claimed_type, witness, source,
                         type_source or "", witness_source or "")
        self.entries[name] = entry
        self._terms[name] = term
        return entry


    def term(self, name):

        return self.entries[name].term


    def witness(self, name):

        return self.entries[name].witness


    def type(self, name):

        return self.types[name][0]


    def aliases(self):

        return dict(self._aliases)


    def parse(self, source):

        return parse_term(source, self._terms, strict=True)


    def parse_typed(self, source):

        return parse_typed_term(source, self._aliases, self._witnesses)


    def exposed(self, as_printed=False):
        """Entries by name; with as_printed the names S, UP, P, Pe show their printed forms."""

        view = OrderedDict(self.entries)
        if as_printed:
            for name, printed in PRINTED_VARIANTS.items():
                view[name] = self.entries[printed]
        return view


    def prelude(self, as_printed=False):

        return dict((name, entry.term) for name, entry in self.exposed(as_printed).items())


def register_common(zoo):

    zoo.add_type("B", "forall X. X -> X -> X")
    zoo.add_type("N", "forall X. X -> (X -> X) -> X")
    zoo.add_type("P", "forall X Y. ((X -> Y) -> X) -> X")
    zoo.add_type("Q", "P -> forall X. X")
    zoo.add_type("D", "(Q -> P) -> N")
    zoo.add_type("E", "forall X. (B -> D -> X) -> X -> X")
    zoo.add_type("NN", "forall Y. (N -> N -> Y) -> Y")

    zoo.add("T", r"\x.\y.x", "boolean true: first projection",
            "B", r"/\X. \x:X. \y:X. x")
    zoo.add("F", r"\x.\y.y", "boolean false: second projection",
            "B", r"/\X. \x:X. \y:X. y")
    zoo.add("TuringU", r"\x.\f.f (x x f)", "self-application half of the Turing fixpoint")
    zoo.add("Theta", "TuringU TuringU", "Turing fixpoint combinator: (Theta f) head reduces to (f (Theta f))")


@functools.lru_cache(maxsize=None)
def get_zoo():

    from lamlab.zoo.church import register as register_church
    from lamlab.zoo.system_d import register as register_system_d
    from lamlab.zoo.booleans import register as register_booleans
    from lamlab.zoo.system_e import register as register_system_e

    zoo = Zoo()
    register_common(zoo)
    register_church(zoo)
    register_system_d(zoo)
    register_booleans(zoo)
    register_system_e(zoo)
    logging.info("Built zoo with %d entries" % len(zoo.entries))
    return zoo
