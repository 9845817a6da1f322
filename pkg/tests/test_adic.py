import pytest
from hypothesis import assume, given, strategies as st

from conftest import ep_seqs
from morseadic import (
    ALT_01,
    ALT_10,
    MINUS_ONE,
    ZERO,
    BoundExceeded,
    EpSeq,
    MaxPoint,
    MinPoint,
    add_integer,
    differentiate,
    flip,
    morse_predecessor,
    morse_successor,
    phi,
    step_parity,
    theta,
)
from morseadic.adic import (
    Ordering,
    OrbitClass,
    classify_orbit,
    compare,
    f_inv,
    f_map,
    phi_prefix,
    skew_step,
    skew_unstep,
    successor_prefix,
)

MORSE_TABLE = (1, 3, 7, 2, 5, 15, 4, 6, 9, 11, 31, 10, 13, 8, 12, 14)


def _int_less(a: int, b: int) -> bool:
    # order comparator on nonnegative integers: decide at the highest
    # disagreeing bit by the next bit's value
    if a == b:
        return False
    j = (a ^ b).bit_length() - 1
    shared = (a >> (j + 1)) & 1
    return (a >> j) & 1 == shared


class TestCompare:
    def test_reflexive(self):
        x = EpSeq.from_integer(9)
        assert compare(x, x) is Ordering.EQUAL

    def test_successor_chain_is_increasing(self):
        pts = [EpSeq.from_integer(0)]
        for _ in range(15):
            pts.append(morse_successor(pts[-1]))
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                assert compare(pts[i], pts[j]) is Ordering.LESS
                assert compare(pts[j], pts[i]) is Ordering.GREATER

    def test_non_cofinal_points_incomparable(self):
        assert compare(ZERO, MINUS_ONE) is Ordering.INCOMPARABLE

    @given(ep_seqs())
    def test_flip_incomparable(self, x):
        assert compare(x, flip(x)) is Ordering.INCOMPARABLE

    def test_matches_integer_comparator(self):
        for a in range(64):
            for b in range(64):
                expected = Ordering.LESS if _int_less(a, b) else (
                    Ordering.EQUAL if a == b else Ordering.GREATER)
                got = compare(EpSeq.from_integer(a), EpSeq.from_integer(b))
                assert got is expected, (a, b)


class TestSuccessor:
    @pytest.mark.parametrize("n", range(16))
    def test_integer_table(self, n):
        assert morse_successor(EpSeq.from_integer(n)) == \
            EpSeq.from_integer(MORSE_TABLE[n])

    def test_undefined_on_alternating_points(self):
        with pytest.raises(MaxPoint):
            morse_successor(ALT_01)
        with pytest.raises(MaxPoint):
            morse_successor(ALT_10)

    def test_extension(self):
        assert morse_successor(ALT_01, extend_at_max=True) == MINUS_ONE
        assert morse_successor(ALT_10, extend_at_max=True) == ZERO

    @given(ep_seqs())
    def test_image_is_strictly_greater(self, x):
        assume(not x.is_max())
        assert compare(x, morse_successor(x)) is Ordering.LESS

    def test_image_is_least_upper_neighbor(self):
        from morseadic.arith import morse_int

        # exhaustive minimality on an integer grid
        for n in range(1024):
            succ = None
            for k in range(4096):
                if _int_less(n, k) and (succ is None or _int_less(k, succ)):
                    succ = k
            assert succ == morse_int(n)


class TestPredecessor:
    def test_undefined_on_constant_points(self):
        with pytest.raises(MinPoint):
            morse_predecessor(ZERO)
        with pytest.raises(MinPoint):
            morse_predecessor(MINUS_ONE)

    def test_extension(self):
        assert morse_predecessor(ZERO, extend_at_min=True) == ALT_10
        assert morse_predecessor(MINUS_ONE, extend_at_min=True) == ALT_01

    @given(ep_seqs())
    def test_inverse_of_successor(self, x):
        assume(not x.is_max())
        assert morse_predecessor(morse_successor(x)) == x

    @given(ep_seqs())
    def test_successor_of_predecessor(self, y):
        assume(not y.is_min())
        assert morse_successor(morse_predecessor(y)) == y

    def test_extension_round_trip(self):
        y = morse_predecessor(ZERO, extend_at_min=True)
        assert morse_successor(y, extend_at_max=True) == ZERO


class TestCocycles:
    def test_leading_run_parity(self):
        assert phi(EpSeq.from_integer(1)) == 0
        assert phi(EpSeq.from_integer(7)) == 0
        assert phi(ZERO) == 1
        assert phi(MINUS_ONE) == 1
        assert phi(EpSeq.from_integer(3)) == 1

    def test_step_parity_differs_from_plain_run_parity(self):
        # the step at 7 is odd (7 -> 6) though 7 has an odd leading run
        seven = EpSeq.from_integer(7)
        assert phi(seven) == 0
        assert step_parity(seven) == 1

    @given(ep_seqs())
    def test_step_parity_is_step_size_parity(self, x):
        assume(not x.is_max())
        assert step_parity(x) == theta(x) % 2

    @given(ep_seqs())
    def test_step_parity_via_difference(self, x):
        assume(not x.is_max())
        y = morse_successor(x)
        assert (y.to_rational() - x.to_rational()) % 2 == step_parity(x)


class TestSkewRoute:
    @given(ep_seqs())
    def test_pair_map_round_trip(self, x):
        assert f_inv(f_map(x)) == x

    @given(ep_seqs())
    def test_successor_through_skew_product(self, x):
        assume(not x.is_max())
        assert f_inv(skew_step(f_map(x))) == morse_successor(x)

    @given(ep_seqs())
    def test_inverse_route(self, x):
        assume(not x.is_min())
        assert f_inv(skew_unstep(f_map(x))) == morse_predecessor(x)

    @given(ep_seqs())
    def test_diff_intertwines_with_odometer(self, x):
        assume(not x.is_max())
        assert differentiate(morse_successor(x)) == \
            add_integer(differentiate(x), 1)


class TestFlipEquivariance:
    @given(ep_seqs())
    def test_successor_commutes_with_flip(self, x):
        assume(not x.is_max())
        assert morse_successor(flip(x)) == flip(morse_successor(x))


class TestOrbitClassification:
    @pytest.mark.parametrize("lit,cls", [
        ("(0)", OrbitClass.POS_SEMIORBIT_ZEROS),
        ("(1)", OrbitClass.POS_SEMIORBIT_ONES),
        ("(01)", OrbitClass.NEG_SEMIORBIT_01),
        ("(10)", OrbitClass.NEG_SEMIORBIT_10),
        ("110100(10)", OrbitClass.NEG_SEMIORBIT_10),
        ("1101(0)", OrbitClass.POS_SEMIORBIT_ZEROS),
        ("0010(1)", OrbitClass.POS_SEMIORBIT_ONES),
        ("(0011)", OrbitClass.GENERIC),
        ("0(0011)", OrbitClass.GENERIC),
    ])
    def test_known_classes(self, lit, cls):
        assert classify_orbit(EpSeq.parse(lit)) is cls

    def test_integer_six_reaches_zero(self):
        assert classify_orbit(EpSeq.from_integer(6)) is \
            OrbitClass.POS_SEMIORBIT_ZEROS

    def test_unresolvable_period_raises(self):
        with pytest.raises(BoundExceeded):
            classify_orbit(EpSeq.parse("(001)"))

    def test_far_integer_needs_larger_bound(self):
        x = EpSeq.from_integer(100)
        with pytest.raises(BoundExceeded):
            classify_orbit(x)
        assert classify_orbit(x, bound=256) is OrbitClass.POS_SEMIORBIT_ZEROS

    def test_class_values_are_stable_strings(self):
        assert OrbitClass.GENERIC.value == "Generic"
        assert OrbitClass.POS_SEMIORBIT_ZEROS.value == "PosSemiorbitOfZeros"
        assert OrbitClass.NEG_SEMIORBIT_01.value == "NegSemiorbitOf01"


class TestPrefixMaps:
    def test_alternating_prefixes_undetermined(self):
        for m in range(2, 10):
            alt0 = sum(1 << i for i in range(1, m, 2))
            alt1 = sum(1 << i for i in range(0, m, 2))
            assert successor_prefix(alt0, m) is None
            assert successor_prefix(alt1, m) is None

    def test_determined_prefixes_match_full_map(self):
        m = 8
        completions = [((0,), ()), ((1,), ()), ((0, 1), ()), ((1, 1, 0), ())]
        for bits in range(1 << m):
            image = successor_prefix(bits, m)
            if image is None:
                continue
            for per, _ in completions:
                x = EpSeq(tuple((bits >> i) & 1 for i in range(m)), per)
                y = morse_successor(x)
                got = sum(y.digit(i) << i for i in range(m))
                assert got == image, (bits, per)

    def test_phi_prefix_agrees_with_phi(self):
        for bits in range(1 << 8):
            p = phi_prefix(bits, 8)
            x = EpSeq(tuple((bits >> i) & 1 for i in range(8)), (0,))
            if p is None:
                assert all((bits >> i) & 1 for i in range(8))
            else:
                assert p == phi(x)
