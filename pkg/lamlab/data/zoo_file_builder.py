import logging
import os

from lamlab.systemf.reader import Definitions, TypedDefinition


class ZooFileBuilder(object):
    """Writes the zoo as definition files: zoo.lam (terms) and zoo.tlam (types, terms and witnesses)."""


    def __init__(self, zoo, include_printed=True):
        """
        :param zoo: the Zoo to write out.
        :param include_printed: Whether the printed variants (S_printed, ...) are
                written too. They never carry a witness.
        """

        self._zoo = zoo
        self._include_printed = include_printed
        self._untyped_lines = None
        self._typed_lines = None


    def get_untyped_text(self):

        assert self._untyped_lines is not None, "Call build() first!"
        return "\n".join(self._untyped_lines) + "\n"


    def get_typed_text(self):

        assert self._typed_lines is not None, "Call build() first!"
        return "\n".join(self._typed_lines) + "\n"


    def build(self):

        assert self._untyped_lines is None, "Call build() only once!"

        entries = [entry for entry in self._zoo.entries.values()
                   if self._include_printed or not entry.name.endswith("_printed")]

        untyped = ["# zoo terms; later definitions use earlier names"]
        for entry in entries:
            untyped.append(self.build_term_line(entry))

        typed = ["# zoo types, terms and typing witnesses"]
        for name, (_, source) in self._zoo.types.items():
            typed.append("type %s = %s" % (name, source))
        for entry in entries:
            typed.append(self.build_term_line(entry))
            if entry.typed:
                typed.append("tdef %s : %s = %s" % (entry.name, entry.type_source, entry.witness_source))

        self._untyped_lines = untyped
        self._typed_lines = typed

        return self


    def build_term_line(self, entry):

        line = "def %s = %s" % (entry.name, entry.source)
        if entry.anchor:
            line = "# %s\n%s" % (entry.anchor, line)
        return line


    def write(self, out_dir):

        if not os.path.exists(out_dir):
            os.makedirs(out_dir)

        paths = []
        for file_name, text in (("zoo.lam", self.get_untyped_text()), ("zoo.tlam", self.get_typed_text())):
            path = os.path.join(out_dir, file_name)
            with open(path, "w") as f:
                f.write(text)
            logging.info("Wrote %s" % path)
            paths.append(path)
        return paths


def zoo_definitions(zoo, as_printed=False):
    """The zoo as Definitions, the base every user definition file is read against."""

    exposed = zoo.exposed(as_printed)
    terms = [(name, entry.term) for name, entry in exposed.items()]
    typed = [(name, TypedDefinition(name, entry.claimed_type, entry.witness, 0))
             for name, entry in exposed.items() if entry.typed]
    types = [(name, a) for name, (a, _) in zoo.types.items()]
    return Definitions(terms, typed, types)
