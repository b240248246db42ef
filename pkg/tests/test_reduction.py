"""Tests for dominated-vertex elimination."""

import pytest

from helix_lab.core.errors import InvalidParameterError
from helix_lab.core.models.hom_models import VertexMap
from helix_lab.graphs import (
    build_family,
    complete,
    cycle,
    dominated_vertices,
    dominators,
    schrijver_helical,
    while_reduce,
)
from helix_lab.hom import hom_equivalent, is_homomorphism


@pytest.mark.unit
class TestDominators:
    """Tests for the domination relation."""

    def test_path(self, path3):
        """Test both ends of a path dominate each other."""
        alive = path3.all_vertices
        assert dominators(path3, 0, alive) == 0b100
        assert dominators(path3, 1, alive) == 0
        assert dominated_vertices(path3) == [0, 2]

    def test_no_domination(self, petersen_graph, k4):
        """Test graphs without dominated vertices."""
        assert dominated_vertices(petersen_graph) == []
        assert dominated_vertices(k4) == []
        assert dominated_vertices(cycle(9)) == []


@pytest.mark.unit
class TestWhileReduce:
    """Tests for the reduction and its trace."""

    def test_path(self, path3):
        """Test P3 folds its last vertex onto the first."""
        reduced, trace = while_reduce(path3)
        assert trace.removed == ((2, 0),)
        assert trace.survivors == (0, 1)
        assert trace.retraction == (0, 1, 0)
        assert reduced.order == 2
        assert reduced.edge_count == 1
        assert reduced.name == "R(path3)"

    def test_square(self, square):
        """Test C4 reduces to a single edge."""
        reduced, trace = while_reduce(square)
        assert list(trace.removed) == [(2, 0), (3, 1)]
        assert trace.removed_vertices() == [2, 3]
        assert trace.retraction == (0, 1, 0, 1)
        assert reduced.same_adjacency(complete(2))

    def test_irreducible(self, petersen_graph, k4):
        """Test graphs without dominated vertices are left alone."""
        for g in (petersen_graph, k4):
            reduced, trace = while_reduce(g)
            assert trace.removed == ()
            assert trace.survivors == tuple(range(g.order))
            assert reduced.same_adjacency(g)

    def test_retraction_is_homomorphism(self, square, path3):
        """Test the retraction maps the input onto the reduced graph."""
        for g in (square, path3):
            reduced, trace = while_reduce(g)
            position = {v: i for i, v in enumerate(trace.survivors)}
            assignment = tuple(position[image] for image in trace.retraction)
            f = VertexMap(source=g, target=reduced, assignment=assignment)
            assert is_homomorphism(f)

    def test_unnamed_graph(self, graph_factory):
        """Test the reduced graph of an unnamed input stays unnamed."""
        reduced, _ = while_reduce(graph_factory(3, [(0, 1), (1, 2)]))
        assert reduced.name is None

    def test_rejects_loops(self, looped_vertex):
        """Test graphs with loops are rejected."""
        with pytest.raises(InvalidParameterError):
            while_reduce(looped_vertex)


@pytest.mark.unit
class TestSchrijverHelicalReduction:
    """Tests for the reduction of SG(7,2,2)."""

    def test_recorded_removal(self):
        """Test ({1,3},{4,5,6,7}) is folded onto ({1,3},{2,4,5,6,7})."""
        g = schrijver_helical(7, 2, 2)
        _, trace = while_reduce(g)
        removed = g.index_of(((1, 3), (4, 5, 6, 7)))
        witnesses = [w for u, w in trace.removed if u == removed]
        assert len(witnesses) == 1
        assert g.label(witnesses[0]) == ((1, 3), (2, 4, 5, 6, 7))

    @pytest.mark.slow
    def test_equivalent_to_stable_helical(self):
        """Test SG(7,2,2) and SH(7,2,2) map to each other."""
        assert hom_equivalent(build_family("SGk:7,2,2"), build_family("SH:7,2,2"))
