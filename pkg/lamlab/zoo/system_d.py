r"""
System d: numerals d_n = \a.n typed at D = (Q -> P) -> N, where P is Peirce's law
and Q = P -> forall X. X. Its storage operator O_d is typable at D* -> ~~D.
"""

from lamlab import config
from lamlab.models import NumeralSystem, TypedLayer
from lamlab.systemf.syntax import TypedLam, church_witness
from lamlab.systemf.types import Arrow
from lamlab.terms.syntax import Lam, church_numeral
from lamlab.zoo.base import get_zoo


def register(zoo):

    zoo.add("tP", r"\x.\y.x (\z.\a.z y) y", "inhabitant of the translated Peirce law P*",
            "P*", r"/\X Y. \x:(~X -> ~Y) -> ~X. \y:X. x (\z:~X. \a:Y. z y) y")
    zoo.add("TP", r"\a.tP", "constant tP, of type (Q -> P)*",
            "(Q -> P)*", r"\a:Q*. tP")

    for n in range(config.ZOO_NUMERALS + 1):
        zoo.add("d%d" % n, r"\a.%d" % n, "numeral %d of system d" % n,
                "D", r"\a:Q -> P. %d" % n)

    zoo.add("S_d", r"\n.\a.S (n a)", "system d successor: (S_d d_n) = d_n+1",
            "D -> D", r"\n:D. \a:Q -> P. S (n a)")
    zoo.add("d0hat", r"\f.f d0", "initial continuation of O_d",
            "~~D", r"\f:~D. f d0")
    zoo.add("S_dhat", r"\x.\y.x (\z.y (S_d z))", "continuation step of O_d",
            "~~D -> ~~D", r"\x:~~D. \y:~D. x (\z:D. y (S_d z))")
    zoo.add("O_d", r"\n.n TP d0hat S_dhat",
            "system d storage operator: (O_d theta f) reduces to (f (S_d^n d0))",
            "D* -> ~~D", r"\n:D*. n TP [~D] d0hat S_dhat")


def d(n):

    return Lam(church_numeral(n), "a")


def d_witness(n):

    zoo = get_zoo()
    return TypedLam("a", Arrow(zoo.type("Q"), zoo.type("P")), church_witness(n))


def system_d():

    zoo = get_zoo()
    names = ["tP", "TP", "S_d", "d0hat", "S_dhat", "O_d"] + ["d%d" % n for n in range(6)]
    layer = TypedLayer(zoo.type("D"), dict((name, zoo.entries[name]) for name in names), d_witness)

    return NumeralSystem("system-d", d,
                         successor=zoo.term("S_d"),
                         storage=zoo.term("O_d"),
                         typed_layer=layer)
