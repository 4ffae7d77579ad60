import pytest

from midlayer.bitcube import parse_bits, parse_sequence
from midlayer.construct import (
    ConstructionError,
    assemble_two_factor,
    base_state,
    build,
    canonical_cycle,
    cycle_spectrum,
    fsl_sets,
    split_state,
    state_for_prefix,
)


def bits(text):
    return parse_bits(text)[0]


def seq(text):
    return parse_sequence(text)


def test_base_state():
    s = base_state()
    assert s.n == 1
    assert s.families == {1: ((bits("10"), bits("11"), bits("01")),)}
    assert s.alpha_prefix == ()


def test_base_state_fsl():
    F, S, L = fsl_sets(base_state(), 1)
    assert (F, S, L) == ({bits("10")}, {bits("11")}, {bits("01")})


def test_canonical_cycle():
    assert canonical_cycle([3, 1, 5, 4]) == (1, 3, 4, 5)
    assert canonical_cycle([4, 5, 1, 3]) == (1, 3, 4, 5)
    assert canonical_cycle([2, 6, 9]) == (2, 6, 9)


def test_assemble_level_one_six_cycle():
    tf = assemble_two_factor(base_state(), ())
    expected = tuple(
        bits(t) for t in ("100", "110", "010", "011", "001", "101")
    )
    assert tf.cycles == (expected,)
    assert tf.n == 1 and tf.alphas == ((),)


def test_split_level_one():
    s = base_state()
    tf = assemble_two_factor(s, ())
    s2 = split_state(s, tf, ())
    arc = tuple(
        bits(t)
        for t in ("1100", "1101", "0101", "0111", "0011", "1011", "1001")
    )
    short = tuple(bits(t) for t in ("1010", "1110", "0110"))
    top = tuple(bits(t) for t in ("1011", "1111", "0111"))
    assert s2.families == {2: (arc, short), 3: (top,)}
    assert s2.alpha_prefix == ((),)


def test_split_rejects_mismatched_two_factor():
    s = base_state()
    tf = assemble_two_factor(s, ())
    wrong = tf.__class__(tf.n, ((), (0,)), tf.cycles)
    with pytest.raises(ConstructionError):
        split_state(s, wrong, ())


def test_level_two_fsl_example():
    s2 = state_for_prefix(((),))
    F, _, _ = fsl_sets(s2, 2)
    assert F == {bits("1010"), bits("1100")}


def test_build_spectra_examples():
    assert cycle_lengths("") == {6: 1}
    assert cycle_lengths(",0") == {20: 1}
    assert cycle_lengths(",1") == {10: 2}
    assert cycle_lengths(",0,00,000") == {36: 1, 72: 1, 144: 1}


def cycle_lengths(text):
    tf = build(seq(text))
    out = {}
    for c in tf.cycles:
        out[len(c)] = out.get(len(c), 0) + 1
    return out


def test_cycle_spectrum_matches_assembly():
    for text in ("", ",0", ",1", ",1,10", ",0,01,101"):
        s = seq(text)
        state = state_for_prefix(s[:-1])
        assert cycle_spectrum(state, s[-1]) == cycle_lengths(text)


def test_build_validates_sequence():
    with pytest.raises(ValueError):
        build(())
    with pytest.raises(ValueError):
        build(((0,),))
    with pytest.raises(ValueError):
        build(seq(",0"), k_cap=1)


def test_k_cap_equivalence():
    for text in (",1,01", ",0,11"):
        s = seq(text)
        assert build(s).cycles == build(s, k_cap=2 * len(s)).cycles


def test_build_is_deterministic():
    s = seq(",1,10,011")
    assert build(s) == build(s)


def test_vertex_counts_per_level():
    from math import comb

    for text in ("", ",1", ",0,10"):
        tf = build(seq(text))
        n = tf.n
        total = sum(len(c) for c in tf.cycles)
        assert total == comb(2 * n + 1, n) + comb(2 * n + 1, n + 1)


def test_cycles_are_canonical_and_sorted():
    tf = build(seq(",1,11"))
    firsts = [c[0] for c in tf.cycles]
    assert firsts == sorted(firsts)
    for c in tf.cycles:
        assert c[0] == min(c)
        assert c[1] < c[-1]


def test_state_families_sorted_by_first_vertex():
    s = state_for_prefix(((), (1,)))
    for fam in s.families.values():
        firsts = [p[0] for p in fam]
        assert firsts == sorted(firsts)


def test_alpha_length_check():
    with pytest.raises(ConstructionError):
        cycle_spectrum(base_state(), (0,))
