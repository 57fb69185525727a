r"""Church numerals n = \x.\f.(f^n x) with successor, zero test, predecessor and O_N."""

from lamlab.models import NumeralSystem, TypedLayer
from lamlab.systemf.syntax import church_witness
from lamlab.terms.syntax import church_numeral
from lamlab.zoo.base import get_zoo


def register(zoo):

    zoo.add("S", r"\n.\x.\f.f (n x f)", "church successor: (S n) = n+1",
            "N -> N", r"\n:N. /\X. \x:X. \f:X -> X. f (n [X] x f)")
    zoo.add("S_printed", r"\n.\x.\f.f (n f x)",
            "church successor with the iteration arguments in the order first published")
    zoo.add("Z", r"\n.n T (\x.F)", "church zero test",
            "N -> B", r"\n:N. n [B] T (\x:B. F)")

    # predecessor by iterating (a, b) -> (S a, a) from (0, 0) and taking the second component
    zoo.add("UP", r"\x.\p.p (S (x T)) (x T)", "church predecessor step on pairs",
            "NN -> NN", r"\x:NN. /\Y. \p:N -> N -> Y. p (S (x [N] (T [N]))) (x [N] (T [N]))")
    zoo.add("UP_printed", r"\x.\p.p (S_printed (x T)) (x F)",
            "church predecessor step as first published")
    zoo.add("P", r"\n.n (\p.p 0 0) UP F", "church predecessor: (P n+1) = n",
            "N -> N", r"\n:N. n [NN] (/\Y. \p:N -> N -> Y. p 0 0) UP [N] (F [N])")
    zoo.add("P_printed", r"\n.n UP_printed (\p.p 0 0) T", "church predecessor as first published")

    zoo.add("J", r"\x.\y.x (S y)", "continuation step of the church storage operator",
            "~N -> ~N", r"\x:~N. \y:N. x (S y)")
    zoo.add("O_N", r"\n.\f.n f J 0", "church storage operator: (O_N theta f) reduces to (f (S^n 0))",
            "N* -> ~~N", r"\n:N*. \f:~N. n [N] f J 0")


def church(n):

    return church_numeral(n)


def church_ops(as_printed=False):

    exposed = get_zoo().exposed(as_printed)
    return {"S": exposed["S"].term, "Z": exposed["Z"].term, "P": exposed["P"].term}


def system_church(as_printed=False):

    zoo = get_zoo()
    exposed = zoo.exposed(as_printed)
    witnesses = dict((name, zoo.entries[name]) for name in ("T", "F", "S", "Z", "UP", "P", "J", "O_N"))
    layer = TypedLayer(zoo.type("N"), witnesses, church_witness)

    return NumeralSystem("church", church,
                         successor=exposed["S"].term,
                         zero_test=exposed["Z"].term,
                         predecessor=exposed["P"].term,
                         storage=exposed["O_N"].term,
                         typed_layer=layer)
