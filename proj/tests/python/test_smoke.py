import itertools

import numpy as np
import pytest

import rmcalign as ra


def worked_graph():
    # O=0, A=1, B=2, C=3 and their outer neighbours X=4, Y=5, Z=6.
    return ra.Graph([(0, 1), (0, 2), (0, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6)])


def test_worked_example_curvature_and_rows():
    g = worked_graph()
    assert [g.degree(v) for v in (1, 2, 3)] == [1, 4, 5]
    assert [ra.node_curvature(g, v) for v in (1, 2, 3)] == [-2, -20, -27]
    rows = ra.ricci_matrix(g, g.max_degree)
    assert rows.shape == (7, 5)
    assert rows[0].tolist() == [-27, -20, -2, 0, 0]
    assert ra.degree_matrix(g, 5)[0].tolist() == [1, 4, 5, 0, 0]


def test_forman_curvature_sums():
    edge, node = ra.forman_curvature(worked_graph())
    assert sum(node) == 2 * sum(edge)
    assert ra.edge_curvature(worked_graph(), 2, 3) == -7


def test_torus_report():
    report = ra.run_torus_experiment()
    assert [c["curvature"] for c in report["classes"]] == [-56, -40, -28]
    assert [c["size"] for c in report["classes"]] == [12, 12, 12]
    assert report["hole_to_hole"] == report["hole_nodes"] == 12
    torus = ra.build_torus()
    assert (torus.node_count, torus.edge_count) == (36, 90)
    assert ra.count_curvature_laplacian_violations(torus) == 0


def test_hungarian_matches_enumeration():
    rng = np.random.default_rng(0)
    for n in range(1, 7):
        cost = rng.integers(0, 10, size=(n, n)).astype(float)
        best = min(sum(cost[i, p[i]] for i in range(n)) for p in itertools.permutations(range(n)))
        assert ra.hungarian(cost).total_cost == pytest.approx(best)
    with pytest.raises(ValueError):
        ra.hungarian(np.zeros((2, 3)))


def test_line_graph_and_alignment():
    claw = ra.Graph([(0, 1), (0, 2), (0, 3)])
    lg, origin = ra.line_graph(claw)
    assert lg.node_count == 3 and lg.edge_count == 3
    assert origin == [(0, 1), (0, 2), (0, 3)]
    assert ra.edge_pair_count(claw) == 3

    rng = ra.Rng(5)
    g = ra.random_connected_graph(40, 0.1, rng)
    assignment = ra.align(g, g, ra.SignatureMode.ricci)
    assert ra.score_alignment(assignment) == (40, 100.0)
    with pytest.raises(ValueError):
        ra.align(g, claw)


def test_sampling_is_seeded():
    g = ra.preferential_attachment_graph(300, 2, ra.Rng(1))
    a = ra.random_walk_sample(g, 50, ra.Rng(9))
    b = ra.random_walk_sample(g, 50, ra.Rng(9))
    assert a == b and a.node_count == 50
    assert ra.delete_edges_randomly(g, 0.0, ra.Rng(2)) == g
    with pytest.raises(ValueError):
        ra.delete_edges_randomly(g, 2.0, ra.Rng(2))


def test_alignment_experiment(tmp_path):
    source = ra.preferential_attachment_graph(800, 2, ra.Rng(1))
    path = tmp_path / "net.graphml"
    ra.write_graphml(source, path)
    assert ra.load_graph(path).edge_count == source.edge_count

    config = ra.ExperimentConfig()
    config.input_path = path
    config.intermediate_sample_size = 200
    config.subgraph_size = 100
    config.rounds = 2
    config.deletion_probability = 0.0
    report = ra.run_ppi_experiment(config)
    assert [r.percentage for r in report.rounds] == [100.0, 100.0]
    assert report.to_string("csv").startswith("round,count,percentage\n1,100,100\n")
