import os


# Step budget shared by all oracles unless a caller passes its own.
DEFAULT_FUEL = 100000

# Fixpoint-based storage operators are only ever head reduced; they get a larger budget.
THEOREM8_FUEL = 10 ** 6

DEFAULT_MAX_N = 10

# Largest n for which d_n and e_n are registered as named zoo entries.
ZOO_NUMERALS = 10

DEFAULT_VARIANTS = 3

SUBJECT_REDUCTION_STEPS = 10

PROPERTY_SEED = 1234
SAMPLER_SEED = 28739

FUEL_ENV_VAR = "LAMLAB_FUEL"


def default_fuel():

    value = os.environ.get(FUEL_ENV_VAR)
    if value is None or value.strip() == "":
        return DEFAULT_FUEL

    fuel = int(value)
    if fuel < 1:
        raise ValueError("%s must be a positive integer, got %s" % (FUEL_ENV_VAR, value))
    return fuel
