#!/usr/bin/env python3
# test_dense_coding.py - Tests for deterministic many-to-one dense coding
import sys
import os
import unittest

import numpy as np

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.errors import DimensionError, NotViableError, OracleError, SizeLimitError
from graphs import (
    classify_edges,
    ghz_star,
    is_viable,
    linear_cluster,
    parse_graph,
    perfect_matching,
    random_graph,
    random_viable_graph,
    sub_matrices,
)
from linalg import BitVector, transpose
from oracle import StateVector, inner
from protocols import (
    RECEIVER_SYNDROME_TRANSPOSED,
    Message,
    Syndrome,
    all_messages,
    decode,
    encode_oracle,
    encode_symbolic,
    find_collision,
    measure_syndrome,
    receiver_syndrome_matrix,
    roundtrip_exhaustive,
)

PATH = parse_graph("pairs: 2\nsenders: 1 3\nedges: 1-2 2-3 3-4\n")
STAR = parse_graph("pairs: 2\nsenders: 1 2\nedges: 1-2 1-3 1-4\n")


def mixed_viable_graphs(count=25, seed=31):
    """Viable graphs with n in 2..4 whose E_S and E_R are both nonempty"""
    rng = np.random.default_rng(seed)
    graphs = []
    while len(graphs) < count:
        g = random_viable_graph(int(rng.integers(2, 5)), rng, p=0.6)
        counts = classify_edges(g).counts()
        if counts["e_s"] and counts["e_r"]:
            graphs.append(g)
    return graphs


def non_viable_graphs(count=10, seed=37):
    rng = np.random.default_rng(seed)
    graphs = [STAR, ghz_star(3)]
    while len(graphs) < count:
        g = random_graph(int(rng.integers(2, 5)), rng, p=0.3)
        if not is_viable(g):
            graphs.append(g)
    return graphs


class TestConvention(unittest.TestCase):
    """The receiver syndrome uses Γ_Tᵀ, pinned on the 4-qubit path"""

    def test_path_gamma_t_is_not_symmetric(self):
        gamma_t = sub_matrices(PATH).gamma_t
        self.assertNotEqual(gamma_t, transpose(gamma_t))

    def test_oracle_fixes_transposed_form(self):
        m = Message.from_strings("01", "00")
        measured = measure_syndrome(PATH, encode_oracle(PATH, m))
        self.assertEqual(measured.a_prime.to_string(), "11")
        self.assertEqual(measured.b_prime.to_string(), "00")
        self.assertTrue(RECEIVER_SYNDROME_TRANSPOSED)
        self.assertEqual(encode_symbolic(PATH, m), measured)

    def test_receiver_syndrome_matrix(self):
        gamma_t = sub_matrices(PATH).gamma_t
        self.assertEqual(receiver_syndrome_matrix(gamma_t), transpose(gamma_t))


class TestEncodeDecode(unittest.TestCase):
    """Single-message traces"""

    def test_matching_identity_maps(self):
        g = perfect_matching(2)
        m = Message.from_strings("10", "01")
        s = encode_symbolic(g, m)
        self.assertEqual(str(s), "01,10")
        self.assertEqual(decode(g, s), m)

    def test_syndrome_outcome_layout(self):
        s = Syndrome(BitVector.from_string("01"), BitVector.from_string("10"))
        self.assertEqual(s.outcome.to_string(), "0110")
        self.assertEqual(Syndrome.from_outcome(s.outcome), s)

    def test_message_integer_layout(self):
        m = Message.from_int(0b1001, 2)
        self.assertEqual(str(m), "10,01")
        self.assertEqual(m.to_int(), 9)
        self.assertEqual(len(list(all_messages(2))), 16)

    def test_encoding_is_linear(self):
        rng = np.random.default_rng(17)
        for g in mixed_viable_graphs(count=5):
            for _ in range(10):
                m1 = Message.from_int(int(rng.integers(0, 1 << g.size)), g.n)
                m2 = Message.from_int(int(rng.integers(0, 1 << g.size)), g.n)
                self.assertEqual(
                    encode_symbolic(g, m1 ^ m2),
                    encode_symbolic(g, m1) ^ encode_symbolic(g, m2),
                )

    def test_receiver_edges_do_not_change_syndrome(self):
        rng = np.random.default_rng(29)
        for g in mixed_viable_graphs(count=8, seed=47):
            pairs = [(u, v) for u in g.receivers for v in g.receivers if u < v]
            extra = {p for p in pairs if rng.random() < 0.5}
            rewired = g.with_edges(set(g.edges) ^ extra)
            self.assertEqual(sub_matrices(rewired).gamma_t, sub_matrices(g).gamma_t)
            self.assertEqual(sub_matrices(rewired).gamma_s, sub_matrices(g).gamma_s)
            for m in all_messages(g.n):
                self.assertEqual(encode_symbolic(rewired, m), encode_symbolic(g, m))

    def test_decode_rejects_non_viable(self):
        s = encode_symbolic(STAR, Message.from_strings("10", "00"))
        with self.assertRaises(NotViableError) as caught:
            decode(STAR, s)
        self.assertEqual(caught.exception.rank, 1)
        self.assertEqual(caught.exception.n, 2)

    def test_message_length_mismatch(self):
        with self.assertRaises(DimensionError):
            encode_symbolic(PATH, Message.from_strings("1", "0"))
        with self.assertRaises(DimensionError):
            Message.from_strings("10", "1")

    def test_measure_requires_eigenstate(self):
        with self.assertRaises(OracleError):
            measure_syndrome(PATH, StateVector.basis(4, 0))


class TestRoundTrip(unittest.TestCase):
    """Exhaustive round trips and collisions"""

    def assertDeterministic(self, g):
        sweep = roundtrip_exhaustive(g)
        self.assertEqual(sweep.total, 1 << g.size)
        self.assertEqual(sweep.decoded_ok, sweep.total)
        self.assertTrue(sweep.bijective)
        self.assertIsNone(sweep.collision)

    def test_path(self):
        sweep = roundtrip_exhaustive(PATH)
        self.assertEqual((sweep.decoded_ok, sweep.total), (16, 16))
        self.assertTrue(sweep.bijective)

    def test_named_families(self):
        for n in range(1, 5):
            self.assertDeterministic(perfect_matching(n))
            self.assertDeterministic(linear_cluster(n))

    def test_random_viable_graphs_with_inner_edges(self):
        for g in mixed_viable_graphs():
            self.assertDeterministic(g)

    def test_non_viable_graphs_collide(self):
        for g in non_viable_graphs():
            first, second = find_collision(g)
            self.assertNotEqual(first, second)
            self.assertEqual(encode_symbolic(g, first), encode_symbolic(g, second))
            sweep = roundtrip_exhaustive(g)
            self.assertFalse(sweep.bijective)
            self.assertEqual(sweep.decoded_ok, 0)
            self.assertIsNotNone(sweep.collision)

    def test_viable_graph_has_no_collision(self):
        self.assertIsNone(find_collision(PATH))

    def test_size_caps(self):
        with self.assertRaises(SizeLimitError):
            roundtrip_exhaustive(perfect_matching(7))
        with self.assertRaises(SizeLimitError):
            roundtrip_exhaustive(perfect_matching(5), oracle=True)

    def test_sweep_report(self):
        report = roundtrip_exhaustive(STAR).to_dict()
        self.assertEqual(report["total"], 16)
        self.assertFalse(report["bijective"])
        self.assertEqual(len(report["collision"]), 2)


class TestOracleAgreement(unittest.TestCase):
    """Measured generator eigenvalues equal the symbolic syndrome"""

    def test_all_messages_on_small_graphs(self):
        graphs = [PATH, STAR, perfect_matching(2), linear_cluster(3), ghz_star(3)]
        graphs += mixed_viable_graphs(count=3, seed=41)
        graphs += non_viable_graphs(count=4, seed=43)
        for g in graphs:
            sweep = roundtrip_exhaustive(g, oracle=True)
            self.assertEqual(sweep.oracle_checked, sweep.total)
            self.assertEqual(sweep.oracle_agreements, sweep.total, sweep.mismatches)

    def test_encoded_states_are_orthogonal(self):
        for g in (PATH, perfect_matching(2), linear_cluster(3)):
            states = [encode_oracle(g, m) for m in all_messages(g.n)]
            for i, first in enumerate(states):
                self.assertAlmostEqual(abs(inner(first, first)), 1.0, delta=1e-10)
                for second in states[i + 1:]:
                    self.assertLess(abs(inner(first, second)), 1e-10)


if __name__ == '__main__':
    unittest.main()
