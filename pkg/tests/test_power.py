import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import inv, membership, random_cyclically_reduced, random_reduced, reduce_word, word_power

from britton import slp
from britton.alphabet import Alphabet
from britton.errors import AlphabetMismatch
from britton.free_group import free_reduce
from britton.naive import explicit_power
from britton.power import NO_SOLUTION, PowerSolver, compressed_power
from britton.slp import EMPTY, CompositionSystem, concat_nodes, doubling_grammar, power_node, word_node

AB = Alphabet(["a", "b"])


def test_examples():
    assert compressed_power([1, 2], doubling_grammar(20)).z == 2**20
    assert compressed_power("a", CompositionSystem(AB, EMPTY)).z == 0
    target = CompositionSystem.from_word(AB, [1, 2, 2, 2, 2, 2, -1])
    assert compressed_power("a b a^-1", target).z == 5
    assert compressed_power("a b", CompositionSystem.from_word(AB, [2, 1])) == NO_SOLUTION
    assert str(compressed_power("a b", doubling_grammar(3))) == "z=8"
    assert str(NO_SOLUTION) == "none"


def test_small_examples_by_brute_force():
    for n in range(9):
        g = doubling_grammar(n)
        assert compressed_power([1, 2], g).z == membership([1, 2], g.expand()) == 2**n
    ba = [2, 1]
    assert all(free_reduce(word_power([1, 2], z)) != ba for z in range(-8, 9))


def test_trivial_w():
    assert compressed_power([1, -1], CompositionSystem.from_word(AB, [1])) == NO_SOLUTION
    assert compressed_power([], CompositionSystem.from_word(AB, [2, -2])).z == 0


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        compressed_power([1], doubling_grammar(2), alphabet=Alphabet(["x"]))
    with pytest.raises(AlphabetMismatch):
        compressed_power([3], doubling_grammar(2))


def test_exactness_flag():
    g = doubling_grammar(30)
    assert compressed_power([1, 2], g).exact is False
    assert compressed_power([1, 2], doubling_grammar(4)).exact is True


@given(seed=st.integers(0, 2**32), z=st.integers(-40, 40))
def test_soundness_and_distortion(seed, z):
    rng = random.Random(seed)
    p = random_reduced(rng, 2, rng.randint(0, 4))
    s = random_cyclically_reduced(rng, 2, rng.randint(1, 4))
    w = p + s + inv(p)
    noise = random_reduced(rng, 2, rng.randint(0, 3))
    target = concat_nodes([word_node(p), word_node(noise), word_node(inv(noise)),
                           power_node(word_node(s), z), word_node(inv(p))])
    answer = compressed_power(w, CompositionSystem(AB, target))
    assert answer.z == z == membership(w, slp.expand_node(target).tolist())
    nf = reduce_word(slp.expand_node(target).tolist())
    assert reduce_word(word_power(w, answer.z)) == nf
    if reduce_word(w):
        assert abs(answer.z) <= len(nf)


@given(seed=st.integers(0, 2**32))
def test_negatives_agree_with_enumeration(seed):
    rng = random.Random(seed)
    w = random_reduced(rng, 2, rng.randint(1, 4))
    u = random_reduced(rng, 2, rng.randint(0, 12))
    got = compressed_power(w, CompositionSystem.from_word(AB, u)).z
    assert got == membership(w, u) == explicit_power(w, u)


@given(seed=st.integers(0, 2**32), z=st.integers(-(2**60), 2**60))
def test_uniqueness_across_bases(seed, z):
    rng = random.Random(seed)
    s = random_cyclically_reduced(rng, 2, rng.randint(1, 5))
    answers = set()
    for base_seed in (1, 2, 3):
        slp.seed_fingerprints(base_seed)
        target = CompositionSystem(AB, power_node(word_node(s), z))
        answers.add(compressed_power(s, target).z)
    assert answers == {z}


def test_sign_survives_fingerprint_collision():
    # a^q and a^-q share a fingerprint whenever base^q == 1; q = (MOD-1)/2
    # hits that for every quadratic-residue base
    q = (slp.MOD - 1) // 2
    for base_seed in range(1, 6):
        slp.seed_fingerprints(base_seed)
        for z in (q, -q):
            target = CompositionSystem(AB, power_node(word_node([1]), z))
            assert compressed_power([1], target).z == z


def test_solver_reuse():
    solver = PowerSolver([1, 2, 2, -1])
    assert solver.prefix == [1] and solver.core == [2, 2]
    for z in (-3, 0, 7):
        assert solver.solve(power_node(word_node([1, 2, 2, -1]), z)).z == z
    assert not solver.trivial
