from ergm_geometry.datasets.dot import to_dot
from ergm_geometry.graphs.graph import Graph


def test_dot_structure(path3):
    dot = to_dot(path3, name="path")
    lines = dot.splitlines()
    assert lines[0] == 'graph "path" {'
    assert lines[-1] == "}"
    assert '  "a" -- "b" [index=0];' in lines
    assert '  "b" -- "c" [index=1];' in lines
    assert sum("degree=" in line for line in lines) == 3


def test_dot_shades_by_degree(path3):
    dot = to_dot(path3)
    assert '"b" [fillcolor="#08306b", fontcolor=white, degree=2]' in dot
    assert '"a" [fillcolor="#6baed6", fontcolor=black, degree=1]' in dot


def test_dot_quotes_labels():
    graph = Graph(2, [(0, 1)], labels=['say "hi"', "back\\slash"])
    dot = to_dot(graph)
    assert '"say \\"hi\\""' in dot
    assert '"back\\\\slash"' in dot


def test_dot_edgeless_graph():
    dot = to_dot(Graph(2, []))
    assert "--" not in dot
    assert "degree=0" in dot
