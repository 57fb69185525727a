import argparse
import json

from flask import Flask, request

from lamlab import config
from lamlab.errors import ParseError, UnknownSuiteError
from lamlab.evaluation.report import suite_passed
from lamlab.harness.registry import RunSettings, run_suite
from lamlab.systemf.reader import parse_type, print_type
from lamlab.systemf.types import godel_star
from lamlab.terms.equivalence import beta_equiv
from lamlab.terms.reader import parse_term, print_term
from lamlab.terms.reduction import head_reduce, normalize
from lamlab.zoo import get_zoo

app = Flask(__name__)


def _request_json():

    data = request.data.decode("utf-8")
    return json.loads(data) if data else {}


def _fuel(body):

    fuel = int(body.get("fuel", config.default_fuel()))
    if fuel < 1:
        raise ValueError("fuel must be positive")
    return fuel


def _error(message, status=400):

    return json.dumps({"error": message}), status, {"Content-Type": "application/json"}


def _ok(record):

    return json.dumps(record, indent=2), 200, {"Content-Type": "application/json"}


@app.errorhandler(ParseError)
def parse_error(e):
    return _error("parse error: %s" % e)


@app.errorhandler(UnknownSuiteError)
def unknown_suite(e):
    return _error(str(e))


@app.errorhandler(ValueError)
def bad_value(e):
    return _error(str(e))


@app.errorhandler(KeyError)
def missing_field(e):
    return _error("missing field %s" % e)


@app.route("/")
def hello():
    return "lamlab %d zoo entries" % len(get_zoo().entries)


@app.route("/reduce", methods=['POST'])
def reduce():

    body = _request_json()
    env = get_zoo().prelude(body.get("as_printed", False))
    t = parse_term(body["expr"], env)
    reducer = head_reduce if body.get("strategy", "normal") == "head" else normalize
    trace = reducer(t, _fuel(body))

    return _ok({
        "steps": [print_term(step) for step in trace.steps],
        "status": trace.status.value,
        "final": print_term(trace.final),
        "fuel": trace.fuel_used,
    })


@app.route("/equiv", methods=['POST'])
def equiv():

    body = _request_json()
    env = get_zoo().prelude(body.get("as_printed", False))
    verdict = beta_equiv(parse_term(body["left"], env), parse_term(body["right"], env), _fuel(body))
    return _ok({"verdict": verdict.verdict.value, "fuel": verdict.fuel_spent})


@app.route("/star", methods=['POST'])
def star():

    body = _request_json()
    a = parse_type(body["type"], get_zoo().aliases())
    return _ok({"type": print_type(godel_star(a))})


@app.route("/verify", methods=['POST'])
def verify():

    body = _request_json()
    settings = RunSettings(max_n=int(body.get("max_n", config.DEFAULT_MAX_N)),
                           fuel=_fuel(body),
                           as_printed=bool(body.get("as_printed", False)))
    reports = run_suite(body.get("suite", "all"), settings)
    return _ok({"passed": suite_passed(reports), "claims": [report.to_json() for report in reports]})


if __name__ == "__main__":

    parser = argparse.ArgumentParser(description="HTTP front end of lamlab.")
    parser.add_argument("--port", type=int, default=5000, help="Port for the server.")
    args = parser.parse_args()

    # build the zoo before the first request
    get_zoo()
    app.run(host="0.0.0.0", port=args.port)
