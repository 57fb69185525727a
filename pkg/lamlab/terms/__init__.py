from lamlab.terms.syntax import Term, Var, Free, Lam, App, lam, substitute, free_vars, \
    is_closed, alpha_eq, iter_apply, church_numeral, size, spine
from lamlab.terms.reader import parse_term, print_term, parse_definitions
from lamlab.terms.reduction import Status, ReductionTrace, head_step, head_reduce, normal_step, \
    normalize, random_step, normalize_randomly
from lamlab.terms.equivalence import Verdict, EquivVerdict, beta_equiv, head_common_reduct
