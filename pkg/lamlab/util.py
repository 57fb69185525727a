def fresh_name(base, avoid):
    """Returns base, primed as often as needed to avoid every name in avoid."""

    name = base
    while name in avoid:
        name += "'"
    return name


def ensure_positive(fuel, what="fuel"):

    if fuel < 1:
        raise ValueError("%s must be at least 1, got %d" % (what, fuel))
    return fuel
