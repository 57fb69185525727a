from lamlab.errors import UnknownSystemError
from lamlab.zoo.base import Zoo, get_zoo, PRINTED_VARIANTS
from lamlab.zoo.church import church, church_ops, system_church
from lamlab.zoo.system_d import d, d_witness, system_d
from lamlab.zoo.booleans import bool_storage, boolean_system
from lamlab.zoo.system_e import e, e_witness, system_e, p_prime


SYSTEM_NAMES = ["church", "bool", "system-d", "system-e"]


def system_from_name(name, as_printed=False):

    if name == "church":
        return system_church(as_printed)
    elif name == "bool":
        return boolean_system()
    elif name == "system-d":
        return system_d()
    elif name == "system-e":
        return system_e(as_printed)
    raise UnknownSystemError("Unknown numeral system: %s" % name)
