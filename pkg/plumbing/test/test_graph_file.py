import os
import tempfile
from pathlib import Path

import pytest

from plumbing.data import GraphFile, load_graph
from plumbing.errors import GraphFileError
from plumbing.graph import INF, PlumbingGraph

DATA_PATH = Path(__file__).parent / "data"


def error_of(text):
    with pytest.raises(GraphFileError) as error:
        GraphFile.from_text(text)
    return error.value


def test_load(data_path=DATA_PATH):
    graph_file = GraphFile.from_path(data_path / "a4.yaml")
    assert graph_file.graph == PlumbingGraph.chain([-2] * 4)
    assert graph_file.source == str(data_path / "a4.yaml")
    assert graph_file.vertex_marks[1] == (2, 3)
    assert graph_file.vertex_marks[4] == (5, 3)

    assert load_graph(data_path / "a4_blowup.yaml").vertex(5).self_int == -1
    graph = load_graph(data_path / "inf_weight.json")
    assert graph.vertex(2).self_int is INF
    assert graph == PlumbingGraph.chain([-2, INF, -2])


def test_malformed(data_path=DATA_PATH):
    with pytest.raises(GraphFileError) as error:
        GraphFile.from_path(data_path / "malformed.yaml")
    assert (error.value.line, error.value.column) == (3, 33)
    assert "self_int must be an integer" in str(error.value)


def test_syntax_error():
    error = error_of("vertices: [{id: 1, self_int: -2}\n")
    assert error.line is not None

    assert error_of("").line is None
    assert error_of("[1, 2]\n").line == 1
    assert "id must be an integer" in str(error_of("vertices:\n  - {id: true, self_int: -2}\n"))


def test_schema_errors():
    assert "'vertices' must be a list" in str(error_of("vertices: 3\n"))
    assert "without 'self_int'" in str(error_of("vertices:\n  - {id: 1}\n"))
    assert "without 'id'" in str(error_of("vertices:\n  - {self_int: -2}\n"))
    assert "edge is a pair" in str(error_of("vertices:\n  - {id: 1, self_int: -2}\nedges:\n  - [1, 2, 3]\n"))

    negative = error_of("vertices:\n  - {id: 1, genus: -1, self_int: -2}\n")
    assert (negative.line, negative.column) == (2, 20)
    assert "negative genus" in str(negative)


def test_validation_errors():
    duplicate = error_of("vertices:\n  - {id: 1, self_int: -2}\n  - {id: 1, self_int: -3}\n")
    assert "Duplicate vertex id 1" in str(duplicate)
    assert (duplicate.line, duplicate.column) == (3, 10)

    text = "vertices:\n  - {id: 1, self_int: -2}\n  - {id: 2, self_int: -2}\nedges:\n  - [1, 2]\n  - [2, 7]\n"
    dangling = error_of(text)
    assert "unknown vertex 7" in str(dangling)
    assert (dangling.line, dangling.column) == (6, 5)

    loop = error_of("vertices:\n  - {id: 1, self_int: -2}\nedges:\n  - [1, 1]\n")
    assert (loop.line, loop.column) == (4, 5)

    disconnected = error_of("vertices:\n  - {id: 1, self_int: -2}\n  - {id: 2, self_int: -2}\n")
    assert "disconnected" in str(disconnected)
    assert disconnected.line == 2


def test_round_trip(data_path=DATA_PATH):
    graph = PlumbingGraph.build([(1, 2, -1), (2, 0, INF), (3, 0, -5)], [(1, 2), (1, 3)])
    text = GraphFile.to_text(graph)
    assert GraphFile.from_text(text).graph == graph
    assert text.startswith("vertices:\n- {id: 1, genus: 2, self_int: -1}\n")

    with tempfile.TemporaryDirectory() as tmpdirname:
        path = os.path.join(tmpdirname, "graph.yaml")
        with open(path, "w") as f:
            f.write(str(GraphFile.from_path(data_path / "star.yaml")))
        assert load_graph(path) == load_graph(data_path / "star.yaml")
