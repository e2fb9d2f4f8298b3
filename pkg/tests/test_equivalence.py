import pytest

from schubertisom import (
    bruhat_leq,
    check_equivalence,
    element_from_word,
    interval,
    inversion_set,
    isom_class_bound,
    isom_classes,
    restriction_witness,
    submatrix,
    support,
    transport_interval,
    two_letter_leq,
)
from schubertisom.errors import NotFullySupportedError
from schubertisom.weyl import enumerate_elements, identity_element, multiply

from conftest import A2, A3, C3, D4, random_cartan, random_word, type_a


def words(A, *seqs):
    return [element_from_word(A, seq.split()) for seq in seqs]


def verify_witness(wit):
    """Independently re-check everything an EquivalenceWitness asserts."""
    w, wp, sigma = wit.source, wit.target, wit.sigma
    A, B = w.cartan, wp.cartan
    assert set(sigma) == support(w)
    assert set(sigma.values()) == support(wp)
    assert len(set(sigma.values())) == len(sigma)
    assert element_from_word(B, wit.target_word) == wp
    assert len(wit.target_word) == wp.length
    for s in sigma:
        for t in sigma:
            if s != t and two_letter_leq(A, s, t, w):
                assert A.entry(s, t) == B.entry(sigma[s], sigma[t])


class TestCheckEquivalence:
    def test_a3_c3_decreasing_word_differs(self):
        u = element_from_word(A3, ["s3", "s2", "s1"])
        v = element_from_word(C3, ["s3", "s2", "s1"])
        assert check_equivalence(u, v) is None

    def test_a3_c3_increasing_word_matches(self):
        u = element_from_word(A3, ["s1", "s2", "s3"])
        v = element_from_word(C3, ["s1", "s2", "s3"])
        wit = check_equivalence(u, v)
        assert wit is not None
        verify_witness(wit)

    def test_element_vs_inverse_differs(self):
        u = element_from_word(A3, ["s2", "s1", "s3"])
        v = element_from_word(A3, ["s1", "s3", "s2"])
        assert v == u.inverse()
        assert check_equivalence(u, v) is None

    def test_reflexive(self, rng):
        for _ in range(20):
            A = random_cartan(rng)
            w = element_from_word(A, random_word(rng, A))
            wit = check_equivalence(w, w)
            assert wit is not None
            verify_witness(wit)

    def test_length_mismatch(self):
        u = element_from_word(A3, ["s1"])
        v = element_from_word(A3, ["s1", "s2"])
        assert check_equivalence(u, v) is None

    def test_witnesses_are_sound(self, rng):
        found = 0
        while found < 25:
            A = random_cartan(rng, max_rank=3)
            B = random_cartan(rng, max_rank=3)
            u = element_from_word(A, random_word(rng, A, 6))
            v = element_from_word(B, random_word(rng, B, 6))
            wit = check_equivalence(u, v)
            if wit is not None:
                verify_witness(wit)
                found += 1

    def test_symmetric(self, rng):
        for _ in range(40):
            A = random_cartan(rng, max_rank=3)
            B = random_cartan(rng, max_rank=3)
            u = element_from_word(A, random_word(rng, A, 6))
            v = element_from_word(B, random_word(rng, B, 6))
            assert (check_equivalence(u, v) is None) == (
                check_equivalence(v, u) is None
            )

    def test_transitive(self, rng):
        for _ in range(25):
            A = random_cartan(rng, max_rank=3)
            triple = [
                element_from_word(A, random_word(rng, A, 6)) for _ in range(3)
            ]
            u, v, x = triple
            if (
                check_equivalence(u, v) is not None
                and check_equivalence(v, x) is not None
            ):
                assert check_equivalence(u, x) is not None

    def test_support_graph_necessary(self, rng):
        """Equivalence needs matching multisets of constrained entry profiles."""
        for _ in range(30):
            A = random_cartan(rng, max_rank=3)
            B = random_cartan(rng, max_rank=3)
            u = element_from_word(A, random_word(rng, A, 6))
            v = element_from_word(B, random_word(rng, B, 6))
            wit = check_equivalence(u, v)
            if wit is None:
                continue
            sigma = wit.sigma
            for s in sigma:
                for t in sigma:
                    if s != t and two_letter_leq(A, s, t, u):
                        assert two_letter_leq(B, sigma[s], sigma[t], v)


class TestTransportInterval:
    def test_identity_witness(self):
        w = element_from_word(A3, ["s2", "s1", "s3", "s2"])
        wit = check_equivalence(w, w)
        mapping = transport_interval(wit)
        if all(wit.sigma[s] == s for s in wit.sigma):
            assert all(v == mapping[v] for v in mapping)

    def test_a3_c3_cube(self):
        u = element_from_word(A3, ["s1", "s2", "s3"])
        v = element_from_word(C3, ["s1", "s2", "s3"])
        mapping = transport_interval(check_equivalence(u, v))
        assert len(mapping) == 8
        assert mapping[identity_element(A3)] == identity_element(C3)
        assert mapping[u] == v

    def test_preserves_length(self, rng):
        found = 0
        while found < 10:
            A = random_cartan(rng, max_rank=3)
            B = random_cartan(rng, max_rank=3)
            u = element_from_word(A, random_word(rng, A, 5))
            v = element_from_word(B, random_word(rng, B, 5))
            wit = check_equivalence(u, v)
            if wit is None:
                continue
            mapping = transport_interval(wit)
            assert all(x.length == y.length for x, y in mapping.items())
            found += 1

    def test_transports_inversions(self, rng):
        """sigma extended linearly to root coordinates maps I(v) onto I(v')."""
        found = 0
        while found < 10:
            A = random_cartan(rng, max_rank=3)
            B = random_cartan(rng, max_rank=3)
            u = element_from_word(A, random_word(rng, A, 5))
            v = element_from_word(B, random_word(rng, B, 5))
            wit = check_equivalence(u, v)
            if wit is None or support(u) != set(A.labels):
                continue
            src_index = {s: i for i, s in enumerate(A.labels)}
            dst_index = {s: i for i, s in enumerate(B.labels)}

            def push(root):
                out = [0] * len(B.labels)
                for s, i in src_index.items():
                    out[dst_index[wit.sigma[s]]] = root[i]
                return tuple(out)

            mapping = transport_interval(wit)
            for x, y in mapping.items():
                assert {push(r) for r in inversion_set(x)} == set(
                    inversion_set(y)
                )
            found += 1


class TestIsomClasses:
    def test_a2_four_classes(self):
        classes = isom_classes(A2, 3)
        as_words = [
            [x.canonical_word for x in members] for members in classes
        ]
        assert as_words == [
            [()],
            [("s1",), ("s2",)],
            [("s1", "s2"), ("s2", "s1")],
            [("s1", "s2", "s1")],
        ]

    def test_a3_fourteen_classes(self):
        classes = isom_classes(A3, 6)
        assert len(classes) == 14
        by_words = {
            frozenset(x.canonical_word for x in members) for members in classes
        }
        W = lambda *seqs: frozenset(tuple(s.split()) for s in seqs)
        expected = {
            W(""),
            W("s1", "s2", "s3"),
            W("s1 s3"),
            W("s1 s2", "s2 s1", "s2 s3", "s3 s2"),
            W("s1 s2 s1", "s2 s3 s2"),
            W("s1 s3 s2"),
            W("s2 s1 s3"),
            W("s1 s2 s3", "s3 s2 s1"),
            W("s1 s2 s3 s2", "s3 s2 s1 s2"),
            W("s2 s1 s2 s3", "s2 s3 s2 s1"),
            W("s2 s1 s3 s2"),
            W("s2 s1 s2 s3 s2", "s2 s3 s2 s1 s2"),
            W("s3 s2 s1 s2 s3"),
            W("s3 s2 s1 s3 s2 s3"),
        }
        fixed = {
            frozenset(
                tuple(element_from_word(A3, word).canonical_word)
                for word in group
            )
            for group in expected
        }
        assert by_words == fixed

    def test_classes_partition(self, rng):
        for _ in range(5):
            A = random_cartan(rng, max_rank=3)
            classes = isom_classes(A, 4)
            flat = [w for members in classes for w in members]
            assert len(flat) == len(set(flat)) == len(enumerate_elements(A, 4))
            for members in classes:
                for w in members[1:]:
                    assert check_equivalence(members[0], w) is not None
            for i, a in enumerate(classes):
                for b in classes[i + 1 :]:
                    assert check_equivalence(a[0], b[0]) is None


class TestIsomClassBound:
    def test_a3_longest(self):
        w0 = element_from_word(A3, ["s3", "s2", "s1", "s3", "s2", "s3"])
        assert isom_class_bound(A3, w0) == 2

    def test_c3_uses_graph(self):
        w = element_from_word(C3, ["s1", "s2", "s3"])
        assert isom_class_bound(C3, w) == 2

    def test_d4_star(self):
        w = element_from_word(D4, ["s1", "s2", "s3", "s4"])
        assert isom_class_bound(D4, w) == 6

    def test_not_fully_supported(self):
        with pytest.raises(NotFullySupportedError):
            isom_class_bound(A3, element_from_word(A3, ["s1", "s2"]))

    def test_bounds_class_sizes(self):
        for A in (A2, A3, C3):
            cap = 4 if len(A) == 3 else 6
            for members in isom_classes(A, cap):
                w = members[0]
                if support(w) != set(A.labels):
                    continue
                full = [x for x in members if support(x) == set(A.labels)]
                assert len(full) <= isom_class_bound(A, w)


class TestRestrictionWitness:
    def test_every_element(self, rng):
        for _ in range(20):
            A = random_cartan(rng)
            w = element_from_word(A, random_word(rng, A))
            if w.is_identity():
                continue
            wit = restriction_witness(w)
            assert wit is not None
            verify_witness(wit)
            assert set(wit.target.cartan.labels) == support(w)

    def test_restricted_matrix(self):
        w = element_from_word(A3, ["s1", "s2", "s1"])
        wit = restriction_witness(w)
        assert wit.target.cartan == submatrix(A3, ["s1", "s2"])
