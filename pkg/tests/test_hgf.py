"""Tests for reading and writing HGF graph files."""

from pathlib import Path

import pytest

from helix_lab.core.errors import GraphFormatError, InvalidParameterError
from helix_lab.graphs import complete, cycle, helical, kneser, subdivide
from helix_lab.harness.hgf import (
    format_label,
    load_graph,
    parse_graph,
    parse_label,
    read_graph,
    serialize_graph,
    write_graph,
)

DATA_DIR = Path(__file__).parent / "test_data"


@pytest.mark.unit
class TestLabels:
    """Tests for label tokens."""

    def test_format(self):
        """Test set-tuple and text labels."""
        assert format_label(((1, 3), (4, 5, 6, 7))) == "({1,3},{4,5,6,7})"
        assert format_label("e0-1:2") == "e0-1:2"

    def test_parse(self):
        """Test the inverse of format_label."""
        assert parse_label("({1,3},{4,5,6,7})") == ((1, 3), (4, 5, 6, 7))
        assert parse_label("({2})") == ((2,),)
        assert parse_label("v0") == "v0"

    @pytest.mark.parametrize("token", ["({1},x)", "({1,2}", "(1,2)", "({a})"])
    def test_malformed(self, token):
        """Test malformed set-tuple labels."""
        with pytest.raises(ValueError):
            parse_label(token)


@pytest.mark.unit
class TestSerialize:
    """Tests for writing HGF text."""

    def test_complete_graph(self, triangle):
        """Test the exact text of K3."""
        assert serialize_graph(triangle) == "graph 3\nname K:3\ne 0 1\ne 0 2\ne 1 2\n"

    def test_labelled_family(self):
        """Test helical labels are written as set tuples."""
        text = serialize_graph(helical(3, 1, 2))
        lines = text.splitlines()
        assert lines[0] == "graph 9"
        assert lines[1] == "name H:3,1,2"
        assert lines[2] == "v 0 ({1},{2})"
        assert text.endswith("\n")

    def test_loops_flag(self, looped_vertex):
        """Test graphs with loops declare them in the header."""
        assert serialize_graph(looped_vertex) == "graph 1 loops\nname loop\ne 0 0\n"

    def test_unnamed(self, graph_factory):
        """Test the name line is optional."""
        assert serialize_graph(graph_factory(2, [(1, 0)])) == "graph 2\ne 0 1\n"

    @pytest.mark.parametrize(
        "g",
        [helical(3, 1, 2), kneser(5, 2), subdivide(complete(3), 2), cycle(7)],
    )
    def test_parse_inverts_serialize(self, g):
        """Test parse_graph(serialize_graph(g)) reproduces g."""
        assert parse_graph(serialize_graph(g)) == g


@pytest.mark.unit
class TestParse:
    """Tests for reading HGF text."""

    def test_pentagon_file(self):
        """Test comments, blank lines, labels and reversed edges."""
        g = read_graph(DATA_DIR / "pentagon.hgf")
        assert g.name == "C:5"
        assert g.same_adjacency(cycle(5))
        assert g.label(2) == "c"

    def test_looped_file(self):
        """Test a header with the loops flag."""
        g = read_graph(DATA_DIR / "looped_path.hgf")
        assert g.has_loop(2)
        assert not g.has_loop(0)
        assert g.edges() == [(0, 1), (1, 2), (2, 2)]

    def test_empty_graph(self):
        """Test a graph without vertices."""
        g = parse_graph("graph 0\n")
        assert g.order == 0

    @pytest.mark.parametrize(
        "text, line",
        [
            ("graph 3\ne 0 3\n", 2),
            ("graph 3\ne 1 1\n", 2),
            ("graph 3\ne 0 1\ne 1 0\n", 3),
            ("graph 3\nx 0\n", 2),
            ("graph x\n", 1),
            ("graph 3 simple\n", 1),
            ("# comment\nvertex 3\n", 2),
            ("graph 2\nv 0 a\nv 0 b\n", 3),
            ("graph 2\nv 2 a\n", 2),
            ("graph 2\nv 0 ({1},x)\n", 2),
            ("graph 1\nv 0 (x\n", 2),
            ("graph 2\nname a\nname b\n", 3),
            ("graph 2\ne 0\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        """Test malformed documents report the offending line."""
        with pytest.raises(GraphFormatError) as exc_info:
            parse_graph(text)
        assert exc_info.value.line_number == line
        assert exc_info.value.message.startswith(f"line {line}: ")
        assert exc_info.value.exit_status == 2

    def test_missing_header(self):
        """Test a document without a header."""
        with pytest.raises(GraphFormatError) as exc_info:
            parse_graph("# nothing here\n")
        assert exc_info.value.line_number is None

    def test_partial_labelling(self):
        """Test labels must cover every vertex or none."""
        with pytest.raises(GraphFormatError, match="vertex 1 has no label"):
            parse_graph("graph 2\nv 0 a\n")

    def test_duplicate_labels(self):
        """Test repeated labels are rejected by the graph model."""
        with pytest.raises(GraphFormatError):
            parse_graph("graph 2\nv 0 a\nv 1 a\n")


@pytest.mark.unit
class TestFiles:
    """Tests for file and descriptor loading."""

    def test_write_and_read(self, tmp_path, petersen_graph):
        """Test writing a graph to disk and reading it back."""
        path = tmp_path / "petersen.hgf"
        write_graph(petersen_graph, path)
        assert path.read_bytes().count(b"\r") == 0
        assert read_graph(path) == petersen_graph

    def test_load_graph(self, tmp_path, pentagon):
        """Test load_graph accepts files and descriptors."""
        path = tmp_path / "g.hgf"
        write_graph(pentagon, path)
        assert load_graph(str(path)) == pentagon
        assert load_graph("C:5") == pentagon
        assert load_graph("KG:5,2").order == 10

    def test_load_graph_rejects_unknown(self, tmp_path):
        """Test a missing file that is not a descriptor."""
        with pytest.raises(InvalidParameterError):
            load_graph(str(tmp_path / "missing.hgf"))
