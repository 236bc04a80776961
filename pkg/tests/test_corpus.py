from django.test import SimpleTestCase
from sympy.combinatorics import Permutation, PermutationGroup

from classgraph_library.classes import g_classes, is_real_class
from classgraph_library.constants import DEFAULT_MAX_ORDER, ORACLE_MAX_ORDER, DeaconescuCases, HigmanCases
from classgraph_library.constructions import corpus
from classgraph_library.permgroup import center, intersection, is_solvable, normal_subgroups
from classgraph_library.structure import (
    all_elements_prime_order,
    deaconescu_classify,
    frobenius_decompose,
    higman_classify,
    is_cp_group,
    is_nilpotent,
    verify_frobenius,
)
from classgraph_library.theorems import audit_corpus, summarize


def partition(G, classes):
    return {frozenset(G.elements[m] for m in c.members) for c in classes}


def oracle_partition(G):
    degree = G.degree
    oracle = PermutationGroup([Permutation(list(g), size=degree) for g in G.generators])
    return {frozenset(tuple(p.array_form) for p in conjugates) for conjugates in oracle.conjugacy_classes()}


class CorpusTestCase(SimpleTestCase):
    """
    Properties checked on every nontrivial normal subgroup of every group in
    the default corpus.
    """

    @classmethod
    def setUpClass(cls):
        super(CorpusTestCase, cls).setUpClass()
        cls.groups = list(corpus(DEFAULT_MAX_ORDER))

    def pairs(self):
        for built, provenance in self.groups:
            for N in normal_subgroups(built.group):
                if not N.is_trivial():
                    yield built.group, N, provenance

    def test_audit_has_no_failures(self):
        summary = summarize(audit_corpus(self.groups, jobs=4))
        self.assertEqual(summary['failures'], [])
        self.assertEqual(summary['groups'], len(self.groups))

    def test_partitions_match_sympy(self):
        checked = 0
        for built, provenance in self.groups:
            G = built.group
            if G.order > ORACLE_MAX_ORDER:
                continue
            expected_classes = oracle_partition(G)
            self.assertEqual(partition(G, g_classes(G, G.whole())), expected_classes, provenance)
            for N in normal_subgroups(G):
                members = {G.elements[m] for m in N.members}
                expected_result = {c for c in expected_classes if c <= members}
                self.assertEqual(partition(G, g_classes(G, N)), expected_result, provenance)
            checked += 1
        self.assertEqual(checked, len(self.groups))

    def test_central_classes_are_the_central_part(self):
        for G, N, provenance in self.pairs():
            result = frozenset().union(*[c.members for c in g_classes(G, N) if c.size == 1])
            self.assertEqual(result, intersection(center(G), N).members, provenance)

    def test_g_classes_are_unions_of_n_classes(self):
        for G, N, provenance in self.pairs():
            H = N.as_group()
            n_classes = [frozenset(G.index_of(H.elements[m]) for m in c.members) for c in g_classes(H, H.whole())]
            for c in g_classes(G, N):
                touching = [part for part in n_classes if part & c.members]
                self.assertTrue(all(part <= c.members for part in touching), provenance)
                self.assertEqual(frozenset().union(*touching), c.members, provenance)

    def test_unique_odd_size_classes_are_real_involutions(self):
        for G, N, provenance in self.pairs():
            classes = g_classes(G, N)
            sizes = [c.size for c in classes]
            for c in classes:
                if c.size % 2 and sizes.count(c.size) == 1:
                    self.assertTrue(is_real_class(G, c), provenance)
                    self.assertLessEqual(c.rep_order, 2, provenance)

    def test_frobenius_decompositions_verify(self):
        found = 0
        for G, N, provenance in self.pairs():
            decomposition = frobenius_decompose(N.as_group())
            if decomposition is None:
                continue
            found += 1
            self.assertTrue(verify_frobenius(decomposition), provenance)
            self.assertTrue(is_nilpotent(decomposition.kernel.as_group()), provenance)
        self.assertGreater(found, 0)

    def test_prime_order_subgroups_match_a_known_shape(self):
        found = 0
        for G, N, provenance in self.pairs():
            H = N.as_group()
            if not all_elements_prime_order(H):
                continue
            found += 1
            result = deaconescu_classify(H)
            self.assertIn(result.case, DeaconescuCases.MATCHED, provenance)
            self.assertTrue(result.equalities_hold, provenance)
        self.assertGreater(found, 0)

    def test_solvable_cp_subgroups_match_a_known_shape(self):
        for G, N, provenance in self.pairs():
            H = N.as_group()
            if not is_cp_group(H) or not is_solvable(H):
                continue
            self.assertNotEqual(higman_classify(H).case, HigmanCases.UNMATCHED, provenance)
