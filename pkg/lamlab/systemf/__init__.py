from lamlab.systemf.types import Type, TVar, TFree, Bottom, Arrow, Forall, BOTTOM, neg, arrows, \
    forall, type_open, type_subst, free_type_vars, godel_star
from lamlab.systemf.syntax import TypedTerm, TypedVar, TypedLam, TypedApp, TypeLam, TypeApp, \
    typed_apply, church_witness, erase, star_witness, typed_type_subst, rename_type_binders
from lamlab.systemf.reader import parse_type, print_type, parse_typed_term, print_typed_term, \
    read_definitions, Definitions
from lamlab.systemf.checker import Context, check
