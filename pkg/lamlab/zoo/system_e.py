r"""
System e: e_0 = F, e_2k+1 = <<F, d_k>>, e_2k+2 = <<T, d_k>> with <<u, v>> = \x.\y.x u v,
typed at E = forall X. (B -> D -> X) -> X -> X. It has a typed successor, zero test and
storage operator; its predecessor Pe is untyped.
"""

from lamlab import config
from lamlab.models import NumeralSystem, TypedLayer
from lamlab.systemf.syntax import TypedVar, TypedLam, TypeLam, typed_apply, rename_type_binders
from lamlab.systemf.types import TFree, arrows
from lamlab.terms.syntax import Var, Lam, App
from lamlab.zoo.base import get_zoo
from lamlab.zoo.system_d import d, d_witness


def _pair_source(first, second):

    return r"\x.\y.x %s %s" % (first, second)


def _pair_witness_source(first, second):

    return r"/\X. \x:B -> D -> X. \y:X. x %s %s" % (first, second)


def _parts(n):
    """For n >= 1, the boolean name and the d index of e_n."""

    return ("F" if n % 2 == 1 else "T"), (n - 1) // 2


def register(zoo):

    zoo.add("e0", "F", "numeral 0 of system e",
            "E", r"/\X. \x:B -> D -> X. \y:X. y")
    for n in range(1, config.ZOO_NUMERALS + 1):
        b, k = _parts(n)
        zoo.add("e%d" % n, _pair_source(b, "d%d" % k), "numeral %d of system e" % n,
                "E", _pair_witness_source(b, "d%d" % k))

    zoo.add("Ze", r"\n.n (\x.\y.F) T", "system e zero test",
            "E -> B", r"\n:E. n [B] (\x:B. \y:D. F) T")
    zoo.add("Se", r"\n.Ze n e1 (n T T (\x.\y.x F (S_d (n F d0))) (\x.\y.x T (n F d0)))",
            "system e successor: (Se e_n) = e_n+1",
            "E -> E",
            r"\n:E. Ze n [E] e1 (n [B] (\x:B. \y:D. x) T [E] "
            r"(/\X. \x:B -> D -> X. \y:X. x F (S_d (n [D] (\x:B. \y:D. y) d0))) "
            r"(/\X. \x:B -> D -> X. \y:X. x T (n [D] (\x:B. \y:D. y) d0)))")
    zoo.add("e0hat", r"\f.f e0", "initial continuation of O_e",
            "~~E", r"\f:~E. f e0")
    zoo.add("Sehat", r"\x.\y.\z.O_B x (\u.O_d y (\v.z (\a.\b.a u v)))",
            "continuation step of O_e: stores the boolean, then the d component",
            "B* -> D* -> ~~E",
            r"\x:B*. \y:D*. \z:~E. O_B x (\u:B. O_d y (\v:D. z (/\X. \a:B -> D -> X. \b:X. a u v)))")
    zoo.add("O_e", r"\n.n Sehat e0hat",
            "system e storage operator: (O_e theta f) reduces to (f <<b, S_d^m d0>>)",
            "E* -> ~~E", r"\n:E*. n [~E] Sehat e0hat")

    zoo.add("Pe", r"\n.Ze n e0 (n T T (\x.\y.x F (n F d0)) (Z (n F d0 T) e0 (\x.\y.x T (\a.P (n F d0 a)))))",
            "untyped system e predecessor: (Pe e_n+1) = e_n")
    zoo.add("Pe_printed",
            r"\n.Ze n e0 (n T T (\x.\y.x F (n F d0)) (Z (n F d0 T) (\x.\y.x T (\a.P_printed (n F d0 a))) F))",
            "untyped system e predecessor as first published")
    zoo.add("Pprime", r"\n.Pe (\x.\y.x F n) T F",
            "(Pprime d0) = F and (Pprime d1) = T: a zero test on d, were Pe typable")


def e(n):

    zoo = get_zoo()
    if n == 0:
        return zoo.term("F")
    b, k = _parts(n)
    return Lam(Lam(App(App(Var(1, "x"), zoo.term(b)), d(k)), "y"), "x")


def e_witness(n):

    zoo = get_zoo()
    x = TFree("X")
    if n == 0:
        body = TypedVar("y")
    else:
        b, k = _parts(n)
        body = typed_apply(TypedVar("x"), rename_type_binders(zoo.witness(b), ["X"]),
                           rename_type_binders(d_witness(k), ["X"]))
    return TypeLam("X", TypedLam("x", arrows(zoo.type("B"), zoo.type("D"), x),
                                 TypedLam("y", x, body)))


def parity_parts(n):
    """(boolean term, k) such that e_n is <<boolean, d_k>>, for n >= 1."""

    assert n >= 1, "e_0 is not a pair"
    b, k = _parts(n)
    return get_zoo().term(b), k


def system_e(as_printed=False):

    zoo = get_zoo()
    exposed = zoo.exposed(as_printed)
    names = ["Ze", "Se", "e0hat", "Sehat", "O_e"] + ["e%d" % n for n in range(6)]
    layer = TypedLayer(zoo.type("E"), dict((name, zoo.entries[name]) for name in names), e_witness)

    return NumeralSystem("system-e", e,
                         successor=zoo.term("Se"),
                         zero_test=zoo.term("Ze"),
                         predecessor=exposed["Pe"].term,
                         storage=zoo.term("O_e"),
                         typed_layer=layer)


def p_prime():

    return get_zoo().entries["Pprime"]
