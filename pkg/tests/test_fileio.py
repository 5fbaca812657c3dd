import pytest

from hypersym import FileFormatError, cycle, generalized_power, single_edge
from hypersym.fileio import (
    format_coloring,
    format_hypergraph,
    format_layout,
    parse_coloring,
    parse_hypergraph,
    read_hypergraph,
    write_hypergraph,
)

from helpers import random_connected_hypergraph
import random


def test_round_trip_is_identity_on_canonical_files():
    rng = random.Random(60)
    for _ in range(25):
        g = random_connected_hypergraph(rng, rng.choice([2, 3, 4]), n_max=8)
        text = format_hypergraph(g)
        assert parse_hypergraph(text) == g
        assert format_hypergraph(parse_hypergraph(text)) == text


def test_read_write_files(tmp_path):
    g = cycle(5)
    target = tmp_path / "c5.hg"
    write_hypergraph(g, target)
    assert read_hypergraph(target) == g


def test_comments_and_blank_lines_accepted():
    text = "# a comment\n\nuniform 2\n# another\nvertices 3\n1 2\n\n2 3\n"
    g = parse_hypergraph(text)
    assert g.edges == ((1, 2), (2, 3))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(FileFormatError) as info:
        parse_hypergraph("uniform 2\nvertices 3\n1 2\n2 3 1\n")
    assert info.value.line == 4
    with pytest.raises(FileFormatError) as info:
        parse_hypergraph("uniform 2\nvertices 3\n1 x\n")
    assert info.value.line == 3
    with pytest.raises(FileFormatError) as info:
        parse_hypergraph("vertices 3\nuniform 2\n")
    assert info.value.line == 1
    with pytest.raises(FileFormatError) as info:
        parse_hypergraph("uniform 2\nvertices 3\n1 2\n2 1\n")
    assert info.value.line == 4
    with pytest.raises(FileFormatError) as info:
        parse_hypergraph("uniform 2\nvertices 3\n1 4\n")
    assert info.value.line == 3
    with pytest.raises(FileFormatError):
        parse_hypergraph("")


def test_header_validation():
    with pytest.raises(FileFormatError):
        parse_hypergraph("uniform 1\nvertices 3\n")
    with pytest.raises(FileFormatError):
        parse_hypergraph("uniform 3\nvertices 2\n")


def test_coloring_round_trip():
    text = "modulus 4\n1\n0\n3\n2\n"
    col = parse_coloring(text)
    assert col.modulus == 4
    assert col.values == (1, 0, 3, 2)
    assert format_coloring(col) == text


def test_coloring_errors():
    with pytest.raises(FileFormatError) as info:
        parse_coloring("modulus 4\n1\n4\n")
    assert info.value.line == 3
    with pytest.raises(FileFormatError):
        parse_coloring("modulus 4\n")
    with pytest.raises(FileFormatError):
        parse_coloring("")
    with pytest.raises(FileFormatError) as info:
        parse_coloring("modulus 4\n1\nx\n")
    assert info.value.line == 3


def test_layout_format_lists_blocks():
    _, layout = generalized_power(single_edge(2), 5, 2)
    text = format_layout(layout)
    assert "vertex 1: 1 2" in text
    assert "vertex 2: 3 4" in text
    assert "edge 1: 5" in text
    _, layout = generalized_power(single_edge(2), 4, 2)
    assert "edge" not in format_layout(layout)
