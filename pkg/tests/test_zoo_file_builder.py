import os

import pytest

from lamlab.data.zoo_file_builder import ZooFileBuilder, zoo_definitions
from lamlab.systemf.reader import read_definitions
from lamlab.tools.lamlab import check_definitions
from lamlab.zoo import get_zoo


@pytest.fixture(scope="module")
def zoo():
    return get_zoo()


def test_build_is_required_and_runs_once(zoo):
    builder = ZooFileBuilder(zoo)
    with pytest.raises(AssertionError):
        builder.get_untyped_text()
    builder.build()
    with pytest.raises(AssertionError):
        builder.build()


def test_untyped_file_reads_back_to_the_zoo_terms(zoo):
    definitions = read_definitions(ZooFileBuilder(zoo).build().get_untyped_text())
    assert list(definitions.terms) == list(zoo.entries)
    for name, term in definitions.terms.items():
        assert term == zoo.term(name), name
    assert not definitions.typed


def test_anchors_become_comments(zoo):
    text = ZooFileBuilder(zoo).build().get_untyped_text()
    assert "# church successor: (S n) = n+1\ndef S = \\n.\\x.\\f.f (n x f)\n" in text


def test_printed_variants_can_be_left_out(zoo):
    text = ZooFileBuilder(zoo, include_printed=False).build().get_untyped_text()
    assert "def S_printed" not in text
    assert "def Pe_printed" not in text


def test_typed_file_checks(zoo):
    definitions = read_definitions(ZooFileBuilder(zoo).build().get_typed_text())
    assert list(definitions.types) == list(zoo.types)
    assert set(definitions.typed) == set(name for name, entry in zoo.entries.items() if entry.typed)
    results = check_definitions(definitions, zoo_definitions(zoo))
    assert [error for _, error in results if error is not None] == []


def test_write(zoo, tmp_path):
    paths = ZooFileBuilder(zoo).build().write(str(tmp_path / "out"))
    assert [os.path.basename(path) for path in paths] == ["zoo.lam", "zoo.tlam"]
    with open(paths[1]) as f:
        assert f.read().startswith("# zoo types, terms and typing witnesses\ntype B = ")


def test_zoo_definitions_follow_the_printed_view(zoo):
    plain, printed = zoo_definitions(zoo), zoo_definitions(zoo, as_printed=True)
    assert plain.terms["S"] == zoo.term("S")
    assert printed.terms["S"] == zoo.term("S_printed")
    assert "S" in plain.typed and "S" not in printed.typed
    assert printed.types == plain.types
