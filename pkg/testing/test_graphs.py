#!/usr/bin/env python3
# test_graphs.py - Tests for partitioned graphs, the file format and LC
import sys
import os
import tempfile
import unittest

import numpy as np

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.errors import GraphError, InvalidVertexError, ParseError, ParseReason
from graphs import (
    PartitionedGraph,
    classify_edges,
    connectivity_warning,
    format_graph,
    gamma_t_rank,
    ghz_star,
    is_viable,
    linear_cluster,
    load_graph,
    local_complement,
    mirror_pair,
    parse_graph,
    perfect_matching,
    random_graph,
    random_viable_graph,
    single_edge,
    sub_matrices,
)
from linalg import transpose

PATH_TEXT = "pairs: 2\nsenders: 1 3\nedges: 1-2 2-3 3-4\n"
STAR_TEXT = "pairs: 2\nsenders: 1 2\nedges: 1-2 1-3 1-4\n"


class TestViability(unittest.TestCase):
    """The full-rank criterion on named families"""

    def test_star_is_not_viable(self):
        g = parse_graph(STAR_TEXT)
        self.assertEqual(gamma_t_rank(g), 1)
        self.assertFalse(is_viable(g))

    def test_path_is_viable(self):
        g = parse_graph(PATH_TEXT)
        self.assertEqual(sub_matrices(g).gamma_t.to_strings(), ["10", "11"])
        self.assertTrue(is_viable(g))

    def test_perfect_matching_viable_up_to_six_pairs(self):
        for n in range(1, 7):
            g = perfect_matching(n)
            self.assertTrue(is_viable(g), f"matching with n={n}")
            self.assertTrue(classify_edges(g).is_tanner_type())

    def test_linear_cluster_viable(self):
        for n in range(1, 6):
            self.assertTrue(is_viable(linear_cluster(n)), f"cluster with n={n}")

    def test_ghz_star_not_viable_beyond_one_pair(self):
        self.assertTrue(is_viable(ghz_star(1)))
        for n in range(2, 6):
            self.assertEqual(gamma_t_rank(ghz_star(n)), 1)

    def test_single_edge(self):
        g = single_edge()
        self.assertEqual(g.n, 1)
        self.assertTrue(is_viable(g))

    def test_random_viable_graph(self):
        rng = np.random.default_rng(5)
        for n in range(1, 5):
            self.assertTrue(is_viable(random_viable_graph(n, rng)))

    def test_random_graph_is_seeded(self):
        a = random_graph(3, np.random.default_rng(42))
        b = random_graph(3, np.random.default_rng(42))
        self.assertEqual(a, b)


class TestSubMatrices(unittest.TestCase):
    """Edge classes and the Γ_T, Γ_S, Γ_R blocks"""

    def test_star_edge_classes(self):
        counts = classify_edges(parse_graph(STAR_TEXT)).counts()
        self.assertEqual(counts, {"e_sr": 2, "e_s": 1, "e_r": 0})

    def test_symmetric_blocks(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            g = random_graph(int(rng.integers(1, 6)), rng)
            mats = sub_matrices(g)
            for block in (mats.gamma_s, mats.gamma_r):
                self.assertTrue(block.is_symmetric())
                self.assertFalse(np.diag(block.array).any())
            self.assertEqual(mats.gamma_s_lower ^ mats.gamma_s_upper, mats.gamma_s)
            self.assertEqual(mats.gamma_r_lower ^ mats.gamma_r_upper, mats.gamma_r)

    def test_edge_count_matches_blocks(self):
        rng = np.random.default_rng(10)
        for _ in range(30):
            g = random_graph(int(rng.integers(1, 6)), rng)
            mats = sub_matrices(g)
            total = (
                mats.gamma_t.array.sum()
                + mats.gamma_s_upper.array.sum()
                + mats.gamma_r_upper.array.sum()
            )
            self.assertEqual(int(total), len(g.edges))

    def test_upper_triangle_is_transposed_lower(self):
        rng = np.random.default_rng(14)
        for _ in range(30):
            g = random_graph(int(rng.integers(1, 6)), rng, p=0.6)
            mats = sub_matrices(g)
            self.assertEqual(transpose(mats.gamma_s_upper), mats.gamma_s_lower)
            self.assertEqual(transpose(mats.gamma_r_upper), mats.gamma_r_lower)
            self.assertFalse(np.tril(mats.gamma_s_upper.array).any())
            self.assertFalse(np.tril(mats.gamma_r_upper.array).any())

    def test_swap_roles_transposes_gamma_t(self):
        rng = np.random.default_rng(12)
        for _ in range(30):
            g = random_graph(int(rng.integers(1, 6)), rng)
            swapped = g.swap_roles()
            self.assertEqual(sub_matrices(swapped).gamma_t, transpose(sub_matrices(g).gamma_t))
            self.assertEqual(gamma_t_rank(swapped), gamma_t_rank(g))
            self.assertEqual(swapped.sender_labels(), g.receiver_labels())


class TestGraphModel(unittest.TestCase):
    """Construction, relabeling and queries"""

    def test_relabel_senders_first(self):
        g = parse_graph("pairs: 2\nsenders: 4 2\nedges: 1-2 2-3 3-4\n")
        self.assertEqual(g.labels, (2, 4, 1, 3))
        self.assertEqual(g.internal_label(2), 1)
        self.assertEqual(g.original_label(3), 1)
        self.assertEqual(g.sender_labels(), [2, 4])
        self.assertEqual(g.original_edges(), [(1, 2), (2, 3), (3, 4)])

    def test_neighbors_and_degree(self):
        g = ghz_star(2)
        self.assertEqual(g.neighbors(1), frozenset({2, 3, 4}))
        self.assertEqual(g.degree(4), 1)
        self.assertTrue(g.is_sender(2))
        self.assertFalse(g.is_sender(3))

    def test_invalid_vertex(self):
        g = single_edge()
        with self.assertRaises(InvalidVertexError):
            g.neighbors(3)
        with self.assertRaises(InvalidVertexError):
            g.internal_label(7)

    def test_from_edges_rejects_bad_input(self):
        with self.assertRaises(GraphError):
            PartitionedGraph.from_edges(2, [1, 3], [(1, 1)])
        with self.assertRaises(GraphError):
            PartitionedGraph.from_edges(2, [1, 3], [(1, 2), (2, 1)])
        with self.assertRaises(GraphError):
            PartitionedGraph.from_edges(2, [1, 1], [])
        with self.assertRaises(InvalidVertexError):
            PartitionedGraph.from_edges(2, [1, 3], [(1, 5)])

    def test_connectivity(self):
        self.assertTrue(linear_cluster(3).is_connected())
        self.assertFalse(perfect_matching(2).is_connected())
        with self.assertLogs("graphs.model", level="WARNING"):
            self.assertEqual(connectivity_warning(perfect_matching(2)), "graph is disconnected")
        self.assertIsNone(connectivity_warning(single_edge()))

    def test_mirror_pair_names(self):
        pair = mirror_pair(single_edge())
        self.assertEqual(pair.named_edges(), ["1′-2"])
        self.assertEqual(sub_matrices(pair.graph).gamma_t, sub_matrices(pair.original).gamma_t)
        self.assertEqual(list(pair.receivers), [2])


class TestLocalComplement(unittest.TestCase):
    """Local complementation on graphs"""

    def test_leaf_is_unchanged(self):
        g = parse_graph(PATH_TEXT)
        self.assertEqual(local_complement(g, g.internal_label(1)), g)

    def test_star_center_becomes_complete(self):
        g = ghz_star(2)
        complemented = local_complement(g, 1)
        self.assertEqual(len(complemented.edges), 6)
        self.assertEqual(gamma_t_rank(complemented), 1)

    def test_rank_invariance_and_involution(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            g = random_graph(int(rng.integers(1, 7)), rng, p=float(rng.uniform(0.2, 0.8)))
            r = gamma_t_rank(g)
            for v in g.vertices:
                complemented = local_complement(g, v)
                self.assertEqual(gamma_t_rank(complemented), r)
                self.assertEqual(local_complement(complemented, v), g)


    def test_blocks_change_only_inside_neighborhood(self):
        rng = np.random.default_rng(2025)
        for _ in range(60):
            g = random_graph(int(rng.integers(1, 6)), rng, p=float(rng.uniform(0.2, 0.8)))
            n = g.n
            before = sub_matrices(g)
            for v in g.vertices:
                hood = g.neighbors(v)
                after = sub_matrices(local_complement(g, v))
                changed_t = np.argwhere(before.gamma_t.array != after.gamma_t.array)
                for i, j in changed_t:
                    self.assertIn(i + 1, hood)
                    self.assertIn(n + j + 1, hood)
                changed_s = np.argwhere(before.gamma_s.array != after.gamma_s.array)
                for i, j in changed_s:
                    self.assertIn(i + 1, hood)
                    self.assertIn(j + 1, hood)
                changed_r = np.argwhere(before.gamma_r.array != after.gamma_r.array)
                for i, j in changed_r:
                    self.assertIn(n + i + 1, hood)
                    self.assertIn(n + j + 1, hood)
                self.assertNotIn(v, hood)


class TestGraphFile(unittest.TestCase):
    """Parsing and emitting the graph file format"""

    def test_comments_and_blank_lines(self):
        text = "# the 4-qubit cluster\npairs: 2  # n\n\nsenders: 3 1\nedges: 1-2 2-3 3-4\n"
        self.assertEqual(parse_graph(text), parse_graph(PATH_TEXT))

    def test_format_is_canonical(self):
        g = parse_graph("pairs: 2\nsenders: 3 1\nedges: 4-3 2-1 3-2\n")
        self.assertEqual(format_graph(g), PATH_TEXT)
        self.assertEqual(parse_graph(format_graph(g)), g)

    def test_format_without_edges(self):
        g = parse_graph("pairs: 1\nsenders: 2\nedges:\n")
        self.assertEqual(format_graph(g), "pairs: 1\nsenders: 2\nedges:\n")

    def test_load_graph(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "path.graph")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(PATH_TEXT)
            self.assertEqual(load_graph(path), parse_graph(PATH_TEXT))

    def test_missing_file(self):
        with self.assertRaises(OSError):
            load_graph(os.path.join(tempfile.gettempdir(), "no-such-graph-file.graph"))

    def assertParseFails(self, text, reason, line=None):
        with self.assertRaises(ParseError) as caught:
            parse_graph(text)
        self.assertEqual(caught.exception.reason, reason)
        if line is not None:
            self.assertEqual(caught.exception.line, line)

    def test_parse_errors(self):
        self.assertParseFails("pairs: 2\nedges: 1-2\nsenders: 1 3\n", ParseReason.SECTION_ORDER, 2)
        self.assertParseFails("pairs: 2\nsenders: 1\nedges:\n", ParseReason.SENDER_COUNT, 2)
        self.assertParseFails("pairs: 2\nsenders: 1 1\nedges:\n", ParseReason.SENDER_COUNT)
        self.assertParseFails("pairs: 2\nsenders: 1 5\nedges:\n", ParseReason.OUT_OF_RANGE)
        self.assertParseFails("pairs: 2\nsenders: 1 3\nedges: 1-1\n", ParseReason.SELF_LOOP, 3)
        self.assertParseFails("pairs: 2\nsenders: 1 3\nedges: 1-2 2-1\n", ParseReason.DUPLICATE_EDGE)
        self.assertParseFails("pairs: 2\nsenders: 1 3\nedges: 1-9\n", ParseReason.OUT_OF_RANGE)
        self.assertParseFails("pairs: 2\nsenders: 1 3\nedges: 1_2\n", ParseReason.MALFORMED)
        self.assertParseFails("pairs: 0\nsenders:\nedges:\n", ParseReason.MALFORMED, 1)
        self.assertParseFails("pairs: two\nsenders: 1\nedges:\n", ParseReason.MALFORMED, 1)
        self.assertParseFails("pairs: 1\nsenders: 1\n", ParseReason.MALFORMED)
        self.assertParseFails("nodes: 1\n", ParseReason.MALFORMED, 1)

    def test_ids_must_be_ascii_digits(self):
        self.assertParseFails("pairs: ²\nsenders: 1\nedges:\n", ParseReason.MALFORMED, 1)
        self.assertParseFails("pairs: 2\nsenders: ¹ 3\nedges:\n", ParseReason.MALFORMED, 2)
        self.assertParseFails("pairs: 2\nsenders: 1 3\nedges: ١-2\n", ParseReason.MALFORMED, 3)

    def test_load_graph_rejects_invalid_utf8(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "binary.graph")
            with open(path, "wb") as handle:
                handle.write(b"pairs: 1\nsenders: \xff\xfe\nedges:\n")
            with self.assertRaises(ParseError) as caught:
                load_graph(path)
            self.assertEqual(caught.exception.reason, ParseReason.MALFORMED)
            self.assertEqual(caught.exception.line, 2)

    def test_parse_error_is_graph_error(self):
        with self.assertRaises(GraphError):
            parse_graph("pairs: 1\nsenders: 1\nedges: 1-1\n")


if __name__ == '__main__':
    unittest.main()
