from lamlab.models import NumeralSystem, TypedLayer
from lamlab.zoo.base import get_zoo


def register(zoo):

    zoo.add("O_B", r"\n.n (\f.f T) (\f.f F)",
            "boolean storage operator: (O_B theta f) reduces to (f T) or (f F)",
            "B* -> ~~B", r"\n:B*. n [~B] (\f:~B. f T) (\f:~B. f F)")


def bool_storage():

    return get_zoo().entries["O_B"]


def boolean(n):
    """T for 0, F for 1: the two booleans, indexed so the storage checks can walk them."""

    assert n in (0, 1), "Only two booleans"
    return get_zoo().term("T" if n == 0 else "F")


def boolean_witness(n):

    assert n in (0, 1), "Only two booleans"
    return get_zoo().witness("T" if n == 0 else "F")


def boolean_system():
    """The booleans viewed as a two-element data type; they have no successor."""

    zoo = get_zoo()
    layer = TypedLayer(zoo.type("B"), dict((name, zoo.entries[name]) for name in ("T", "F", "O_B")),
                       boolean_witness)
    return NumeralSystem("bool", boolean, successor=None, storage=zoo.term("O_B"), typed_layer=layer)
