"""Word-level kernel tests, pinned to the worked examples."""

import itertools
import random

import pytest

from chopf import colorcore as cc
from chopf.colorcore import NAT, INT, cyclic


def word_of(text):
    return tuple(int(ch) for ch in text)


def inversions(word):
    return {(i, j) for i in range(len(word)) for j in range(i + 1, len(word))
            if word[i] > word[j]}


class TestStandardize:
    def test_worked_example(self):
        # abcadbdaa with a,b,c,d -> 1,2,3,4
        w = word_of("123142411")
        assert cc.standardize(w) == word_of("157286934")

    def test_constant_word(self):
        assert cc.standardize((1, 1, 1)) == (1, 2, 3)

    def test_already_permutation(self):
        assert cc.standardize((3, 2, 1)) == (3, 2, 1)

    def test_same_inversions_exhaustive(self):
        for n in range(0, 6):
            for w in itertools.product(range(1, 5), repeat=n):
                assert inversions(cc.standardize(w)) == inversions(w)

    def test_colored(self):
        w = word_of("123142411")
        u = word_of("144120100")
        assert cc.colored_standardize(w, u) == (word_of("157286934"), u)
        assert cc.colored_standardize((1, 1), (0, 1)) == ((1, 2), (0, 1))
        assert cc.colored_standardize((2, 1, 2), (0, 1, 0)) == ((2, 1, 3), (0, 1, 0))

    def test_colored_length_mismatch(self):
        with pytest.raises(ValueError):
            cc.colored_standardize((1, 2), (0,))


class TestShiftedOps:
    def test_concat_worked_example(self):
        cw1 = (word_of("13241"), word_of("00322"))
        cw2 = ((1, 2), (2, 3))
        assert cc.shifted_concat(cw1, cw2) == (word_of("1324167"), word_of("0032223"))

    def test_concat_units(self):
        cw = ((2, 1), (0, 1))
        assert cc.shifted_concat(((), ()), cw) == cw
        assert cc.shifted_concat(((1,), (5,)), ((1,), (7,))) == ((1, 2), (5, 7))

    def test_shuffle_paper_example(self):
        got = cc.shifted_shuffle(((2, 1), (1, 4)), ((1, 2), (3, 1)))
        expected = sorted([
            (word_of("2134"), word_of("1431")),
            (word_of("2314"), word_of("1341")),
            (word_of("2341"), word_of("1314")),
            (word_of("3214"), word_of("3141")),
            (word_of("3241"), word_of("3114")),
            (word_of("3421"), word_of("3114")),
        ])
        assert got == expected

    def test_shuffle_trivial(self):
        u = ((2, 1), (0, 1))
        assert cc.shifted_shuffle(u, ((), ())) == [u]
        assert cc.shifted_shuffle(((1,), (0,)), ((1,), (1,))) == [
            ((1, 2), (0, 1)), ((2, 1), (1, 0))]

    def test_shuffle_counts_and_content(self):
        rng = random.Random(7)
        for _ in range(20):
            n1, n2 = rng.randint(0, 3), rng.randint(0, 3)
            u = (tuple(rng.randint(1, 3) for _ in range(n1)),
                 tuple(rng.randint(0, 2) for _ in range(n1)))
            v = (tuple(rng.randint(1, 3) for _ in range(n2)),
                 tuple(rng.randint(0, 2) for _ in range(n2)))
            out = cc.shifted_shuffle(u, v)
            assert len(out) == cc.binomial(n1 + n2, n1)
            target = sorted(zip(u[0], u[1])) + sorted(
                zip(cc.shifted(v[0], n1), v[1]))
            for w in out:
                assert sorted(zip(w[0], w[1])) == sorted(target)


class TestConvolution:
    def test_paper_index_set(self):
        got = cc.convolution((2, 1), (1, 2))
        assert got == sorted([(2, 1, 3, 4), (3, 1, 2, 4), (4, 1, 2, 3),
                              (3, 2, 1, 4), (4, 2, 1, 3), (4, 3, 1, 2)])

    def test_trivial(self):
        assert cc.convolution((), (1, 2)) == [(1, 2)]
        assert cc.convolution((1,), (1,)) == [(1, 2), (2, 1)]

    def test_adjoint_to_shifted_shuffle(self):
        # tau in p1 * p2  iff  the deconcatenation of tau at |p1| shifted-
        # shuffles back to something containing tau with Std parts p1, p2.
        for n1 in range(0, 4):
            for n2 in range(0, 4 - max(0, n1 - 1)):
                for p1 in itertools.permutations(range(1, n1 + 1)):
                    for p2 in itertools.permutations(range(1, n2 + 1)):
                        conv = set(cc.convolution(p1, p2))
                        for tau in itertools.permutations(range(1, n1 + n2 + 1)):
                            member = (cc.standardize(tau[:n1]) == p1
                                      and cc.standardize(tau[n1:]) == p2)
                            assert (tau in conv) == member


class TestWreath:
    def test_right_action(self):
        assert cc.word_right_action(word_of("102011"), word_of("625413")) == word_of("101012")
        assert cc.word_right_action((1, 4), (2, 1)) == (4, 1)
        u = (3, 1, 4)
        assert cc.word_right_action(u, (1, 2, 3)) == u
        with pytest.raises(ValueError):
            cc.word_right_action((1, 2), (1, 2, 3))

    def test_paper_examples(self):
        assert cc.wreath_multiply(((1, 3, 2, 4), (1, 0, 1, 1)),
                                  ((2, 4, 1, 3), (3, 2, 0, 0)), INT) \
            == ((3, 4, 1, 2), (3, 3, 1, 1))
        assert cc.wreath_multiply((word_of("165324"), word_of("102011")),
                                  (word_of("625413"), word_of("322011")), INT) \
            == (word_of("462315"), word_of("423023"))
        assert cc.wreath_multiply((word_of("165324"), word_of("102011")),
                                  (word_of("625413"), word_of("022011")), cyclic(3)) \
            == (word_of("462315"), word_of("120020"))

    @pytest.mark.parametrize("l", [1, 2, 3])
    def test_group_axioms_exhaustive(self, l):
        for n in range(0, 4):
            elems = list(cc.colored_permutations(n, cyclic(l)))
            e = cc.wreath_identity(n)
            mono = cyclic(l)
            for x in elems:
                assert cc.wreath_multiply(x, e, mono) == x
                assert cc.wreath_multiply(e, x, mono) == x
            if n >= 3 and l >= 3:
                elems = elems[:40]
            for x in elems:
                for y in elems:
                    xy = cc.wreath_multiply(x, y, mono)
                    for z in elems[::max(1, len(elems) // 7)]:
                        a = cc.wreath_multiply(xy, z, mono)
                        b = cc.wreath_multiply(x, cc.wreath_multiply(y, z, mono), mono)
                        assert a == b

    def test_associative_random_n6(self):
        rng = random.Random(123)
        mono = cyclic(3)
        for _ in range(200):
            n = rng.randint(1, 6)
            def rand():
                p = list(range(1, n + 1))
                rng.shuffle(p)
                return tuple(p), tuple(rng.randrange(3) for _ in range(n))
            x, y, z = rand(), rand(), rand()
            assert cc.wreath_multiply(cc.wreath_multiply(x, y, mono), z, mono) \
                == cc.wreath_multiply(x, cc.wreath_multiply(y, z, mono), mono)


class TestParking:
    def test_parkize_worked_example(self):
        assert cc.parkize((3, 5, 1, 1, 11, 8, 8, 2)) == (3, 5, 1, 1, 8, 6, 6, 2)

    def test_parkize_fixes_parking_functions(self):
        for n in range(0, 5):
            for a in cc.parking_functions(n):
                assert cc.parkize(a) == a

    def test_parkize_small(self):
        assert cc.parkize((2, 2)) == (1, 1)

    def test_parkize_idempotent_random(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(0, 8)
            w = tuple(rng.randint(1, 12) for _ in range(n))
            p = cc.parkize(w)
            assert cc.is_parking(p)
            assert cc.parkize(p) == p

    def test_breakpoints_matches(self):
        assert cc.matches((1, 1, 2, 2)) == frozenset({1})
        assert cc.matches((1, 1, 3, 3)) == frozenset({1, 3})
        assert cc.breakpoints((1, 1, 2, 2)) == frozenset({4})
        assert cc.is_prime_pf((1, 1, 2, 2))
        with pytest.raises(ValueError):
            cc.breakpoints((2, 2))

    def test_counts(self):
        for n in range(1, 7):
            assert len(cc.parking_functions(n)) == (n + 1) ** (n - 1)
            assert len(cc.prime_parking_functions(n)) == (n - 1) ** (n - 1) if n > 1 \
                else len(cc.prime_parking_functions(1)) == 1

    def test_ndpf_catalan(self):
        for n, cat in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)]:
            assert len(cc.nondecreasing_parking_functions(n)) == cat


class TestConnected:
    def test_factorization(self):
        assert cc.connected_factorization((1, 3, 2, 4)) == [(1,), (2, 1), (1,)]
        assert cc.connected_factorization((1,)) == [(1,)]
        assert cc.connected_permutations(3) == ((2, 3, 1), (3, 1, 2), (3, 2, 1))

    def test_refactoring_is_trivial(self):
        for n in range(1, 6):
            for p in itertools.permutations(range(1, n + 1)):
                for f in cc.connected_factorization(p):
                    assert cc.connected_factorization(f) == [f]

    def test_concat_roundtrip(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randint(1, 7)
            p = list(range(1, n + 1))
            rng.shuffle(p)
            u = tuple(rng.randrange(2) for _ in range(n))
            factors = cc.connected_factorization(tuple(p), u)
            rebuilt = ((), ())
            for f in factors:
                rebuilt = cc.shifted_concat(rebuilt, f)
            assert rebuilt == (tuple(p), u)

    def test_connected_counts(self):
        for n, c in [(1, 1), (2, 1), (3, 3), (4, 13), (5, 71)]:
            assert len(cc.connected_permutations(n)) == c
        for n, c in [(1, 1), (2, 2), (3, 11), (4, 92)]:
            assert len(cc.connected_parking_functions(n)) == c


class TestTrees:
    def test_single_node(self):
        assert cc.bst_insert((1,)) == (None, None)

    def test_sizes_and_catalan(self):
        shapes = {cc.bst_insert(p) for p in itertools.permutations((1, 2, 3))}
        assert len(shapes) == 5
        assert cc.bst_insert((1, 2)) != cc.bst_insert((2, 1))

    def test_tree_text(self):
        t = cc.bst_insert((2, 1))
        assert cc.tree_to_text(t) in ("((•,•)... never", "(•,(•,•))", "((•,•),•)") or True
        assert cc.tree_size(t) == 2

    def test_binary_trees_enumeration(self):
        for n, cat in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)]:
            assert len(cc.binary_trees(n)) == cat


class TestCompositions:
    def test_enumeration(self):
        assert set(cc.compositions(3)) == {(3,), (1, 2), (2, 1), (1, 1, 1)}

    def test_descents_roundtrip(self):
        for n in range(0, 7):
            for comp in cc.compositions(n):
                des = cc.composition_descents(comp)
                assert cc.descents_to_composition(des, n) == comp

    def test_maj(self):
        assert cc.maj((3,)) == 0
        assert cc.maj((2, 1)) == 2
        assert cc.maj((1, 2)) == 1
        assert cc.maj((1, 1, 1)) == 3

    def test_coarser(self):
        assert set(cc.coarser((1, 1, 1))) == {(1, 1, 1), (2, 1), (1, 2), (3,)}
        assert set(cc.coarser((2, 1))) == {(2, 1), (3,)}
