import pytest

from schubertisom import (
    CohomologyOracle,
    check_equivalence,
    element_from_word,
    export_oracle,
    export_oracle_with_map,
    reconstruct,
    recover_cartan,
    reduced_words,
    validate_cartan,
)
from schubertisom.errors import MalformedOracleError
from schubertisom.reconstruct import (
    descent_set,
    reduced_word_sets,
    support_closure,
)

from conftest import A2, A3, random_cartan, random_word

from test_cohomology import hirzebruch


def _inverse_naming(naming):
    return {bid: v for v, bid in naming.items()}


class TestRecoverCartan:
    @pytest.mark.parametrize("n", range(6))
    def test_hirzebruch(self, n):
        w = element_from_word(hirzebruch(n), ["s1", "s2"])
        oracle, naming = export_oracle_with_map(w, seed=n)
        cartan, free = recover_cartan(oracle)
        z1 = naming[element_from_word(hirzebruch(n), ["s1"])]
        z2 = naming[element_from_word(hirzebruch(n), ["s2"])]
        assert cartan.entry(z1, z1) == 2
        assert cartan.entry(z1, z2) == (-n if n else 0)
        assert cartan.entry(z2, z1) == (-1 if n else 0)
        if n:
            assert free == {(z2, z1)}
        else:
            assert free == frozenset()

    def test_commuting_pair_zero(self):
        w = element_from_word(A3, ["s1", "s3"])
        oracle, naming = export_oracle_with_map(w)
        cartan, free = recover_cartan(oracle)
        z1 = naming[element_from_word(A3, ["s1"])]
        z3 = naming[element_from_word(A3, ["s3"])]
        assert cartan.entry(z1, z3) == 0
        assert cartan.entry(z3, z1) == 0
        assert free == frozenset()

    def test_one_sided_free_entry(self):
        w = element_from_word(A3, ["s2", "s1"])
        oracle, naming = export_oracle_with_map(w)
        cartan, free = recover_cartan(oracle)
        z1 = naming[element_from_word(A3, ["s1"])]
        z2 = naming[element_from_word(A3, ["s2"])]
        assert cartan.entry(z2, z1) == -1  # forced by the square of zeta_1
        assert cartan.entry(z1, z2) == -1  # free choice, fixed at -1
        assert free == {(z1, z2)}

    def test_invalid_matrix_rejected(self):
        oracle = export_oracle(
            element_from_word(hirzebruch(2), ["s1", "s2"]), seed=1
        )
        products = dict(oracle.products)
        g = next(
            gid for (gid, bid) in products if gid == bid and products[(gid, bid)]
        )
        products[(g, g)] = tuple((vid, -c) for vid, c in products[(g, g)])
        bad = CohomologyOracle(oracle.basis, oracle.generators, products)
        with pytest.raises(MalformedOracleError):
            recover_cartan(bad)


class TestAbstractCombinatorics:
    def test_unit_has_no_descents(self):
        oracle = export_oracle(element_from_word(A2, ["s1", "s2"]))
        assert descent_set(oracle, oracle.unit_id) == frozenset()

    def test_a2_top_descent(self):
        w = element_from_word(A2, ["s1", "s2"])
        oracle, naming = export_oracle_with_map(w)
        z2 = naming[element_from_word(A2, ["s2"])]
        assert descent_set(oracle, oracle.top_id) == {z2}

    def test_longest_element_all_descents(self):
        w0 = element_from_word(A3, ["s3", "s2", "s1", "s3", "s2", "s3"])
        oracle = export_oracle(w0)
        assert descent_set(oracle, oracle.top_id) == frozenset(oracle.generators)

    def test_unknown_id(self):
        oracle = export_oracle(element_from_word(A2, ["s1"]))
        with pytest.raises(MalformedOracleError):
            descent_set(oracle, "nope")

    def test_descents_match_concrete(self, rng):
        for _ in range(15):
            A = random_cartan(rng, max_rank=3)
            w = element_from_word(A, random_word(rng, A, 6))
            oracle, naming = export_oracle_with_map(w)
            gen_of = {
                s: naming[element_from_word(A, [s])]
                for s in set(w.canonical_word)
            }
            for v, bid in naming.items():
                expected = {gen_of[s] for s in v.right_descents()}
                assert descent_set(oracle, bid) == expected

    def test_closure_of_all_generators(self):
        oracle = export_oracle(element_from_word(A2, ["s1", "s2", "s1"]))
        assert support_closure(oracle, set(oracle.generators)) == {
            oracle.unit_id
        }

    def test_word_sets_match_concrete(self, rng):
        for _ in range(10):
            A = random_cartan(rng, max_rank=3)
            w = element_from_word(A, random_word(rng, A, 5))
            oracle, naming = export_oracle_with_map(w)
            gen_of = {
                s: naming[element_from_word(A, [s])]
                for s in set(w.canonical_word)
            }
            words = reduced_word_sets(oracle)
            for v, bid in naming.items():
                expected = {
                    tuple(gen_of[s] for s in word) for word in reduced_words(v)
                }
                assert words[bid] == expected

    def test_unit_word(self):
        oracle = export_oracle(element_from_word(A2, ["s1"]))
        assert reduced_word_sets(oracle)[oracle.unit_id] == {()}

    def test_a2_braid_words(self):
        oracle = export_oracle(element_from_word(A2, ["s1", "s2", "s1"]))
        assert len(reduced_word_sets(oracle)[oracle.top_id]) == 2

    def test_commuting_words(self):
        oracle = export_oracle(element_from_word(A3, ["s1", "s3"]))
        assert len(reduced_word_sets(oracle)[oracle.top_id]) == 2


class TestReconstruct:
    def test_hirzebruch_two(self):
        w = element_from_word(hirzebruch(2), ["s1", "s2"])
        rp = reconstruct(export_oracle(w, seed=4))
        flat = sorted(c for row in rp.cartan.entries for c in row)
        assert flat == [-2, -1, 2, 2]
        assert len(rp.word) == 2

    def test_projective_line(self):
        A1 = validate_cartan([[2]], ["s1"])
        w = element_from_word(A1, ["s1"])
        rp = reconstruct(export_oracle(w))
        assert rp.cartan.entries == ((2,),)
        assert len(rp.word) == 1
        assert rp.free_entries == frozenset()

    def test_round_trip_equivalence(self, rng):
        for _ in range(20):
            A = random_cartan(rng, max_rank=3)
            w = element_from_word(A, random_word(rng, A, 6))
            if w.is_identity():
                continue
            rp = reconstruct(export_oracle(w, seed=rng.randrange(10**6)))
            w_prime = element_from_word(rp.cartan, rp.word)
            assert w_prime.length == w.length
            assert check_equivalence(w, w_prime) is not None

    def test_non_free_entries_agree(self, rng):
        """Every entry the oracle forces equals the source entry under naming."""
        for _ in range(15):
            A = random_cartan(rng, max_rank=3)
            w = element_from_word(A, random_word(rng, A, 6))
            if w.is_identity():
                continue
            oracle, naming = export_oracle_with_map(w, seed=11)
            cartan, free = recover_cartan(oracle)
            gen_of = {
                s: naming[element_from_word(A, [s])]
                for s in set(w.canonical_word)
            }
            for s, zs in gen_of.items():
                for t, zt in gen_of.items():
                    if s != t and (zs, zt) not in free:
                        assert cartan.entry(zs, zt) == A.entry(s, t)

    def test_json_shape(self):
        w = element_from_word(A2, ["s1", "s2"])
        data = reconstruct(export_oracle(w, seed=9)).to_json()
        assert set(data) == {"cartan", "word", "free_entries"}
        assert data["cartan"]["matrix"][0][0] == 2
