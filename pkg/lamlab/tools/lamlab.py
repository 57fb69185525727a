"""
lamlab: one-shot reduction, equivalence, type checking and the claim suites.

Exit codes:
    0  success (normal form reached, Equal, every check passed)
    1  a check failed, or Distinct
    2  unreadable input, unknown suite or system
    3  reduction ran out of fuel
    4  equivalence undecided within fuel (Unknown)
"""

import argparse
import json
import logging
import sys

from lamlab import config
from lamlab.data.zoo_file_builder import ZooFileBuilder, zoo_definitions
from lamlab.errors import LamlabError, ParseError, TypeCheckError, UnknownSuiteError
from lamlab.evaluation.report import suite_passed
from lamlab.harness.registry import RunSettings, SUITES, run_suite
from lamlab.systemf.checker import check
from lamlab.systemf.reader import parse_type, print_type, print_typed_term, read_definitions
from lamlab.systemf.syntax import erase
from lamlab.systemf.types import godel_star
from lamlab.terms.equivalence import beta_equiv
from lamlab.terms.reader import parse_term, print_term
from lamlab.terms.reduction import Status, head_reduce, normalize
from lamlab.zoo import get_zoo

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_FUEL_EXHAUSTED = 3
EXIT_UNKNOWN = 4


def load_definitions(args):
    """The definitions every expression is read against: the zoo, or the --prelude file."""

    if args.prelude is None:
        return zoo_definitions(get_zoo(), args.as_printed)
    with open(args.prelude) as f:
        return read_definitions(f.read())


def get_fuel(args):

    fuel = args.fuel if args.fuel is not None else config.default_fuel()
    if fuel < 1:
        raise ValueError("fuel must be positive")
    return fuel


def emit(args, record, line):

    if args.json:
        print(json.dumps(record))
    else:
        print(line)


def cmd_parse(args):

    env = load_definitions(args).terms if args.expand else None
    print(print_term(parse_term(args.expr, env)))
    return EXIT_OK


def cmd_reduce(args):

    t = parse_term(args.expr, load_definitions(args).terms)
    fuel = get_fuel(args)
    reducer = head_reduce if args.strategy == "head" else normalize
    trace = reducer(t, fuel)

    if args.json:
        print(json.dumps({
            "initial": print_term(trace.initial),
            "steps": [print_term(step) for step in trace.steps],
            "status": trace.status.value,
            "final": print_term(trace.final),
            "fuel": trace.fuel_used,
        }))
    else:
        print("0: %s" % print_term(trace.initial))
        for i, step in enumerate(trace.steps):
            print("%d: %s" % (i + 1, print_term(step)))
        print("%s after %d steps" % (trace.status.value, trace.fuel_used))

    return EXIT_FUEL_EXHAUSTED if trace.status == Status.FUEL_EXHAUSTED else EXIT_OK


def cmd_equiv(args):

    env = load_definitions(args).terms
    t, u = parse_term(args.left, env), parse_term(args.right, env)
    verdict = beta_equiv(t, u, get_fuel(args))
    emit(args, {"verdict": verdict.verdict.value, "fuel": verdict.fuel_spent}, str(verdict))

    if verdict.is_equal:
        return EXIT_OK
    if verdict.is_distinct:
        return EXIT_FAILURE
    return EXIT_UNKNOWN


def check_definitions(definitions, base):
    """
    Checks every tdef of the file: the synthesized type must be the claimed one and
    the erasure must equal the same-named def, if there is one. Returns (name, error) pairs,
    error None for passing definitions.
    """

    results = []
    for name, typed in definitions.typed.items():
        try:
            actual = check(None, typed.witness)
        except TypeCheckError as e:
            results.append((name, "line %d: %s" % (typed.line, e)))
            continue
        if actual != typed.claimed_type:
            results.append((name, "line %d: has type %s, claimed %s"
                            % (typed.line, print_type(actual), print_type(typed.claimed_type))))
            continue
        term = definitions.terms.get(name, base.terms.get(name))
        if term is not None and erase(typed.witness) != term:
            results.append((name, "line %d: erases to %s, not %s"
                            % (typed.line, print_term(erase(typed.witness)), print_term(term))))
            continue
        results.append((name, None))
    return results


def cmd_check(args):

    base = load_definitions(args)
    with open(args.file) as f:
        definitions = read_definitions(f.read(), base)

    exit_code = EXIT_OK
    for name, error in check_definitions(definitions, base):
        if error is None:
            typed = definitions.typed[name]
            emit(args, {"name": name, "status": "PASS", "type": print_type(typed.claimed_type)},
                 "PASS %s : %s" % (name, print_type(typed.claimed_type)))
        else:
            emit(args, {"name": name, "status": "FAIL", "detail": error}, "FAIL %s %s" % (name, error))
            exit_code = EXIT_FAILURE
    if not definitions.typed:
        logging.warning("%s has no tdef statements" % args.file)
    return exit_code


def cmd_star(args):

    a = parse_type(args.type, dict(load_definitions(args).types))
    print(print_type(godel_star(a)))
    return EXIT_OK


def cmd_zoo(args):

    zoo = get_zoo()
    exposed = zoo.exposed(args.as_printed)

    if args.zoo_command == "list":
        for name, entry in exposed.items():
            emit(args, {"name": name, "anchor": entry.anchor, "typed": entry.typed},
                 "%-12s %s" % (name, entry.anchor))

    elif args.zoo_command == "show":
        if args.name not in exposed:
            print("error: no zoo entry named %s" % args.name, file=sys.stderr)
            return EXIT_USAGE
        entry = exposed[args.name]
        record = {"name": args.name, "term": print_term(entry.term)}
        lines = ["%s = %s" % (args.name, print_term(entry.term))]
        if args.typed and entry.typed:
            record["type"] = print_type(entry.claimed_type)
            record["witness"] = print_typed_term(entry.witness)
            lines.append("%s : %s" % (args.name, print_type(entry.claimed_type)))
            lines.append("witness %s" % print_typed_term(entry.witness))
        emit(args, record, "\n".join(lines))

    elif args.zoo_command == "emit":
        for path in ZooFileBuilder(zoo).build().write(args.out):
            print(path)

    return EXIT_OK


def cmd_verify(args):

    settings = RunSettings(max_n=args.max_n,
                           fuel=get_fuel(args),
                           theorem8_fuel=max(config.THEOREM8_FUEL, get_fuel(args)),
                           variants=args.variants,
                           as_printed=args.as_printed)
    reports = run_suite(args.suite, settings, threads=args.threads, progress=args.progress)
    for report in reports:
        emit(args, report.to_json(), report.to_line())
    return EXIT_OK if suite_passed(reports) else EXIT_FAILURE


def build_parser():

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fuel", type=int, default=None,
                        help="Step budget (default: $%s or %d)." % (config.FUEL_ENV_VAR, config.DEFAULT_FUEL))
    common.add_argument("--as-printed", action="store_true",
                        help="Expose the printed forms of S, UP, P and Pe instead of the corrected ones.")
    common.add_argument("--json", action="store_true", help="One JSON object per record.")
    common.add_argument("--prelude", default=None,
                        help="Definition file whose names are inlined (default: the zoo).")
    common.add_argument("--verbose", action="store_true", help="Log at INFO level.")

    parser = argparse.ArgumentParser(prog="lamlab", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    p = subparsers.add_parser("parse", parents=[common], help="Print the canonical form of a term.")
    p.add_argument("expr")
    p.add_argument("--expand", action="store_true", help="Inline prelude names.")
    p.set_defaults(func=cmd_parse)

    p = subparsers.add_parser("reduce", parents=[common], help="Reduce a term, printing every step.")
    p.add_argument("expr")
    p.add_argument("--strategy", choices=["head", "normal"], default="normal")
    p.set_defaults(func=cmd_reduce)

    p = subparsers.add_parser("equiv", parents=[common], help="Decide beta-equivalence within fuel.")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_equiv)

    p = subparsers.add_parser("check", parents=[common], help="Type check every tdef of a file.")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = subparsers.add_parser("star", parents=[common], help="Print the star translation of a type.")
    p.add_argument("type")
    p.set_defaults(func=cmd_star)

    p = subparsers.add_parser("zoo", help="Inspect the named terms.")
    zoo_commands = p.add_subparsers(dest="zoo_command")
    zoo_commands.required = True
    zoo_commands.add_parser("list", parents=[common])
    show = zoo_commands.add_parser("show", parents=[common])
    show.add_argument("name")
    show.add_argument("--typed", action="store_true", help="Also print the claimed type and witness.")
    emit_files = zoo_commands.add_parser("emit", parents=[common])
    emit_files.add_argument("--out", required=True, help="Directory for zoo.lam and zoo.tlam.")
    p.set_defaults(func=cmd_zoo)

    p = subparsers.add_parser("verify", parents=[common], help="Run a claim suite.")
    p.add_argument("suite", help="One of %s or all." % ", ".join(SUITES))
    p.add_argument("--max-n", type=int, default=config.DEFAULT_MAX_N)
    p.add_argument("--variants", type=int, default=config.DEFAULT_VARIANTS,
                   help="Terms equivalent to each numeral fed to the storage operators.")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):

    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.verbose:
        logging.getLogger().setLevel(logging.INFO)

    try:
        return args.func(args)
    except (ParseError, UnknownSuiteError, ValueError, IOError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except LamlabError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_FAILURE


def console_main():

    sys.exit(main())


if __name__ == "__main__":
    console_main()
