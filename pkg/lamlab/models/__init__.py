from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class TypedLayer:
    """
    :param data_type: the type D of the numerals
    :param witnesses: name -> ZooEntry of every typed term the system relies on
    :param numeral_witness: n -> witness of numeral(n) at D, free of type applications
    """
    data_type: object
    witnesses: dict = field(default_factory=dict)
    numeral_witness: object = None


@dataclass(frozen=True)
class NumeralSystem:
    """
    A sequence of distinct closed normal terms with closed successor and zero-test
    terms. Absent components are None.
    """
    name: str
    numeral: object
    successor: object
    zero_test: object = None
    predecessor: object = None
    storage: object = None
    typed_layer: TypedLayer = None


    def replace(self, **changes):

        return replace(self, **changes)


@dataclass(frozen=True)
class ZooEntry:
    """
    A named term of the zoo.

    :param source: surface text the term was read from; it may use earlier names
    :param witness_source: surface text of the typed witness, if any
    """
    name: str
    term: object
    anchor: str = ""
    claimed_type: object = None
    witness: object = None
    source: str = ""
    type_source: str = ""
    witness_source: str = ""


    @property
    def typed(self):
        return self.witness is not None
