from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmcodes.errors import ConstructionFailure, InfeasibleParameters, InvalidArgument, UncorrectableError
from rmcodes.kendall import (
    GW2CodeSpec,
    RhoCodeSpec,
    c1_decode,
    c1_diagnose,
    c1_encode,
    c2_build,
    c2_decode,
    c2_encode,
    c3_build,
    c3_codebook,
    c3_decode,
    c3_encode,
    c3_encode_digits,
    c4_build,
    c4_decode,
    c4_encode,
    c4_find_params,
    c5_decode,
    c5_greedy,
    gray_map,
    gray_unmap,
    gw_syndrome,
    hamming_code,
    min_lee_weight,
    repetition_code,
    rho,
    rho_code_build,
)
from rmcodes.kendall.bch_lattice import l1_error_patterns
from rmcodes.kendall.field import FieldContext, is_irreducible, rref_mod_p, smallest_irreducible
from rmcodes.kendall.gray_embed import bit_image
from rmcodes.oracle import check_systematic, exhaustive_decode_test, min_distance
from rmcodes.perm import (
    adjacent_swap,
    all_perms,
    ball_enumerate,
    identity,
    info_part,
    kendall_distance,
    l1_distance,
    phi,
    phi_inverse,
    project_values,
)


def info_perms(k):
    return st.permutations(list(range(1, k + 1))).map(tuple)


class TestRho:
    def test_redundancy_values(self):
        assert rho((4, 1, 3, 2), 1, 5) == 1
        assert rho((4, 1, 3, 2), 2, 5) == 1
        assert rho((4, 3, 1, 2), 2, 5) == 4

    @pytest.mark.parametrize("k, m", [(3, 3), (4, 5), (5, 5), (6, 7), (7, 7), (10, 11), (12, 13)])
    def test_modulus_choice(self, k, m):
        assert RhoCodeSpec(k).m == m

    def test_bad_specs(self):
        with pytest.raises(InvalidArgument):
            RhoCodeSpec(8)  # neither 8 nor 9 is prime
        with pytest.raises(InvalidArgument):
            RhoCodeSpec(2)
        with pytest.raises(InvalidArgument):
            RhoCodeSpec(4, m=7)

    @pytest.mark.parametrize(
        "k, info, word",
        [(4, (4, 1, 3, 2), (4, 1, 3, 5, 6, 2)), (4, (4, 3, 1, 2), (4, 6, 3, 5, 1, 2)), (3, (1, 2, 3), (1, 2, 4, 5, 3))],
    )
    def test_encode_examples(self, k, info, word):
        assert c1_encode(info, RhoCodeSpec(k)) == word

    def test_worked_decoding_example(self):
        diag = c1_diagnose((4, 3, 1, 5, 6, 2), RhoCodeSpec(4))
        assert diag.received_info == (4, 3, 1, 2)
        assert diag.reencoded == (4, 6, 3, 5, 1, 2)
        assert diag.received_digits == (1, 1)
        assert diag.reencoded_digits == (2, 4)
        assert diag.position == 2
        assert diag.decoded == (4, 1, 3, 2)

    @pytest.mark.parametrize("g", [(4, 1, 3, 5, 6, 2), (4, 1, 3, 6, 5, 2)])
    def test_decode_near_codeword(self, g):
        assert c1_decode(g, RhoCodeSpec(4)) == (4, 1, 3, 2)

    def test_wrong_length(self):
        with pytest.raises(InvalidArgument):
            c1_decode((1, 2, 3, 4, 5), RhoCodeSpec(4))

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_case1_congruences(self, k):
        # swapping info positions i, i+1 moves the two redundancy digits by
        # 2*delta and 8*i*delta (mod m), delta = h(i) - h(i+1)
        spec = RhoCodeSpec(k)
        m = spec.m
        seen = set()
        for h in all_perms(k):
            before = phi(c1_encode(h, spec))[k:]
            for i in range(1, k):
                delta = h[i - 1] - h[i]
                after = phi(c1_encode(adjacent_swap(h, i), spec))[k:]
                assert (after[0] - before[0]) % m == 2 * delta % m
                assert (after[1] - before[1]) % m == 8 * i * delta % m
                seen.add((i, delta))
        assert seen == {(i, dl) for i in range(1, k) for dl in range(-(k - 1), k) if dl}

    def test_non_equivalent_to_golomb_welch(self):
        spec = RhoCodeSpec(3)
        f, g = (1, 4, 3, 2, 5), (2, 3, 4, 1, 5)
        assert c1_encode(info_part(f, 3), spec) == f
        assert c1_encode(info_part(g, 3), spec) == g
        assert phi(f) == (0, 0, 1, 2, 0)
        assert phi(g) == (0, 1, 1, 1, 0)
        assert l1_distance(phi(f), phi(g)) == 2

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_r2_build_equals_c1(self, k):
        spec = RhoCodeSpec(k, 2)
        cb = rho_code_build(spec)
        assert cb.construction_id == "c1"
        assert set(cb.codewords) == {c1_encode(h, spec) for h in all_perms(k)}
        assert cb.d_claimed == 3

    def test_generalized_records_measured_distance(self):
        cb = rho_code_build(RhoCodeSpec(4, 4))
        assert cb.construction_id == "rho"
        assert cb.params["d_source"] == "measured"
        assert cb.d_claimed == min_distance(cb) == 4

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_decoder_complete(self, k):
        spec = RhoCodeSpec(k)
        cb = rho_code_build(spec)
        report = exhaustive_decode_test(cb, lambda g: c1_decode(g, spec), 1)
        assert report.decode_trials == len(cb) * (k + 2)
        assert not report.decode_failures

    @settings(max_examples=50)
    @given(st.sampled_from([7, 10, 12]).flatmap(lambda k: st.tuples(st.just(k), info_perms(k))), st.data())
    def test_single_error_large_k(self, kh, data):
        k, h = kh
        spec = RhoCodeSpec(k)
        f = c1_encode(h, spec)
        i = data.draw(st.integers(1, k + 1))
        assert c1_decode(adjacent_swap(f, i), spec) == h

    def test_two_info_swaps_detected(self):
        spec = RhoCodeSpec(4)
        f = c1_encode((4, 1, 3, 2), spec)
        outcomes = set()
        for i, j in [(1, 3), (1, 4), (3, 1), (4, 3)]:
            g = adjacent_swap(adjacent_swap(f, i), j)
            try:
                outcomes.add(c1_decode(g, spec) == (4, 1, 3, 2))
            except UncorrectableError:
                outcomes.add("uncorrectable")
        assert "uncorrectable" in outcomes


class TestGolombWelch:
    def test_syndrome(self):
        assert gw_syndrome((0, 0, 0), 2) == 0
        assert gw_syndrome((1, 0, 2), 2) == 0
        assert gw_syndrome((1, 0, 3), 2) == 3

    @pytest.mark.parametrize(
        "info, word", [((1, 2), (1, 2, 3, 4)), ((2, 1), (2, 4, 1, 3))]
    )
    def test_encode(self, info, word):
        assert c2_encode(info, GW2CodeSpec(2)) == word

    @pytest.mark.parametrize("g, info", [((2, 4, 1, 3), (2, 1)), ((4, 2, 1, 3), (2, 1)), ((1, 2, 3, 4), (1, 2))])
    def test_decode(self, g, info):
        assert c2_decode(g, GW2CodeSpec(2)) == info

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_codebook(self, k):
        spec = GW2CodeSpec(k)
        cb = c2_build(spec)
        assert check_systematic(cb)
        assert min_distance(cb) >= 3
        for c in cb:
            x = phi(c)[1:]
            assert sum(i * xi for i, xi in enumerate(x, start=1)) % (2 * k + 3) == 0
        assert not exhaustive_decode_test(cb, lambda g: c2_decode(g, spec), 1).decode_failures


class TestField:
    def test_irreducible_choice(self):
        assert smallest_irreducible(5, 2) == (2, 0, 1)
        assert smallest_irreducible(2, 3) == (1, 1, 0, 1)
        assert not is_irreducible((1, 0, 1), 2)

    def test_gf25_against_hand_arithmetic(self):
        # (a + b x)(c + d x) with x^2 = -2
        ctx = FieldContext.default(5, 2)
        for u, v in product(range(25), repeat=2):
            a, b = u % 5, u // 5
            c, d = v % 5, v // 5
            want = ((a * c - 2 * b * d) % 5) + 5 * ((a * d + b * c) % 5)
            assert ctx.mul(u, v) == want

    def test_multiplicative_group_cyclic(self):
        ctx = FieldContext.default(5, 2)
        orders = set()
        for a in range(1, 25):
            e = 1
            while ctx.pow(a, e) != 1:
                e += 1
            orders.add(e)
        assert max(orders) == 24

    def test_rref(self):
        rows, pivots = rref_mod_p([[1, 2, 3], [2, 4, 0]], 5)
        assert pivots == [0, 2]
        assert rows == [[1, 2, 0], [0, 0, 1]]
        # dependent rows collapse
        rows, pivots = rref_mod_p([[1, 2, 3], [2, 4, 1]], 5)
        assert rows == [[1, 2, 3]] and pivots == [0]

    def test_rref_priority(self):
        rows, pivots = rref_mod_p([[1, 2, 3], [2, 4, 0]], 5, [2, 1, 0])
        assert pivots == [2, 1]
        assert [r[2] for r in rows] == [1, 0] and [r[1] for r in rows] == [0, 1]


def independent_rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank, col, ncols = 0, 0, len(rows[0])
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


@pytest.fixture(scope="module")
def c3_small():
    return c3_build(5, 2, 1, 9)


class TestBchLattice:
    def test_parameters(self, c3_small):
        spec = c3_small
        assert spec.context.modulus_poly == (2, 0, 1)
        assert spec.k == 6 and spec.redundancy == 3 and spec.length == 10
        assert sorted(spec.alphas) == list(range(1, 10))
        assert independent_rank_mod_p(spec.H_expanded, 5) == spec.redundancy <= 3

    def test_parity_check_matches_hand_field(self, c3_small):
        # rows: alpha^0 (=1) and alpha^1, each split into its two base-5 digits
        alphas = c3_small.alphas
        expected = [
            [1] * 9,
            [0] * 9,
            [a % 5 for a in alphas],
            [a // 5 for a in alphas],
        ]
        assert [list(r) for r in c3_small.H_expanded] == expected

    def test_long_code(self):
        spec = c3_build(5, 2, 1, 24)
        assert spec.redundancy <= 3
        assert spec.k == 21

    @pytest.mark.parametrize(
        "args",
        [(3, 2, 1, 8), (4, 2, 1, 9), (5, 2, 2, 24), (5, 2, 1, 4), (5, 2, 1, 25), (7, 2, 1, 7)],
    )
    def test_invalid(self, args):
        with pytest.raises(InvalidArgument):
            c3_build(*args)

    def test_identity(self, c3_small):
        assert c3_encode(identity(7), c3_small) == identity(10)

    @settings(max_examples=60)
    @given(info_perms(7))
    def test_codeword_in_lattice(self, c3_small, h):
        c = c3_encode(h, c3_small)
        x = phi(c)[1:]
        for row in c3_small.H_expanded:
            assert sum(a * b for a, b in zip(row, x)) % 5 == 0
        assert project_values(c, range(1, 8)) == h

    def test_min_lee_weight(self, c3_small):
        assert min_lee_weight(c3_small) >= 4

    def test_min_lee_weight_against_syndrome_scan(self, c3_small):
        # every integer vector of lee weight <= 3 over Z_5^9 with zero syndrome must be zero
        spec = c3_small
        for e in l1_error_patterns(9, 3):
            if any(e):
                x = [v % 5 for v in e]
                assert any(sum(a * b for a, b in zip(row, x)) % 5 for row in spec.H_expanded)

    def test_l1_patterns(self):
        pats = list(l1_error_patterns(4, 2))
        assert len(pats) == len(set(pats)) == 1 + 8 + 4 * 2 + 6 * 4
        assert all(sum(map(abs, p)) <= 2 for p in pats)

    def test_encode_digits_rejects(self, c3_small):
        with pytest.raises(InvalidArgument):
            c3_encode_digits([0] * 5, c3_small)

    @settings(max_examples=30, deadline=None)
    @given(info_perms(7), st.data())
    def test_single_error_decode(self, c3_small, h, data):
        c = c3_encode(h, c3_small)
        i = data.draw(st.integers(1, 9))
        assert c3_decode(c, c3_small) == h
        assert c3_decode(adjacent_swap(c, i), c3_small) == h

    def test_codebook_distance(self, c3_small):
        cb = c3_codebook(c3_small)
        assert len(cb) == 5040 and check_systematic(cb)
        assert min_distance(cb) >= 4


class TestGray:
    def test_sequence(self):
        assert [gray_map(v, 2) for v in range(4)] == [(0, 0), (0, 1), (1, 1), (1, 0)]
        assert gray_map(0, 0) == ()
        with pytest.raises(InvalidArgument):
            gray_map(4, 2)

    @pytest.mark.parametrize("m", range(0, 9))
    def test_contraction_and_inverse(self, m):
        codes = [gray_map(v, m) for v in range(2**m)]
        assert len(set(codes)) == 2**m
        for a in range(2**m):
            assert gray_unmap(codes[a]) == a
            if a:
                assert sum(x != y for x, y in zip(codes[a], codes[a - 1])) == 1
        # adjacency plus the triangle inequality gives d_H <= |a-b|; check directly on a grid
        for a in range(0, 2**m, max(1, 2**m // 64)):
            for b in range(2**m):
                assert sum(x != y for x, y in zip(codes[a], codes[b])) <= abs(a - b)


def parity_ok(bits, code):
    """Check u P = checks with P read row-wise, computed without the encoder."""
    k = code.k_bits
    rows = code.parity[code.shorten_count:]
    for j in range(code.r):
        if sum(bits[i] * rows[i][j] for i in range(k)) % 2 != bits[k + j]:
            return False
    return True


class TestBinaryCodes:
    @pytest.mark.parametrize("r", [2, 3, 4])
    def test_hamming_distance(self, r):
        code = hamming_code(r)
        assert code.n_bits == 2**r - 1 and code.k_bits == 2**r - 1 - r
        words = [code.encode(u) for u in product((0, 1), repeat=code.k_bits)]
        assert min(sum(w) for w in words if any(w)) == 3

    def test_hamming_corrects_one(self):
        code = hamming_code(3).shortened(1)
        for u in product((0, 1), repeat=3):
            w = code.encode(u)
            assert code.decode(w) == u
            for i in range(len(w)):
                e = list(w)
                e[i] ^= 1
                assert code.decode(e) == u

    def test_repetition(self):
        code = repetition_code(5)
        assert code.encode((1,)) == (1,) * 5
        assert code.decode((1, 0, 1, 0, 1)) == (1,)


@pytest.fixture(scope="module")
def c4_spec():
    return c4_find_params(hamming_code(4))


class TestGrayEmbed:
    def test_find_params(self, c4_spec):
        assert (c4_spec.n, c4_spec.k) == (7, 5)
        assert (c4_spec.binary.n_bits, c4_spec.binary.k_bits) == (12, 8)
        assert sum(c4_spec.width(i) for i in range(1, 6)) == 8
        assert sum(c4_spec.width(i) for i in range(6, 8)) == 4

    def test_hamming3_needs_shortening(self):
        # info-width partial sums are 0, 1, 3, 5, ... so 4 bits never fit exactly
        spec = c4_find_params(hamming_code(3))
        assert spec.binary.shorten_count > 0
        assert sum(spec.width(i) for i in range(1, spec.k + 1)) == spec.binary.k_bits

    def test_repetition_infeasible(self):
        with pytest.raises(InfeasibleParameters):
            c4_find_params(repetition_code(3))

    def test_identity(self, c4_spec):
        assert c4_encode(identity(5), c4_spec) == identity(7)

    def test_bit_image_in_code(self, c4_spec):
        c = c4_encode((2, 1, 3, 4, 5), c4_spec)
        assert info_part(c, 5) == (2, 1, 3, 4, 5)
        assert parity_ok(bit_image(c, c4_spec), c4_spec.binary)

    def test_codebook(self, c4_spec):
        cb = c4_build(c4_spec)
        assert len(cb) == 120 and check_systematic(cb)
        assert min_distance(cb) >= 3
        images = {c: bit_image(c, c4_spec) for c in cb}
        assert all(parity_ok(b, c4_spec.binary) for b in images.values())
        for f, g in combinations(cb.codewords, 2):
            d_h = sum(x != y for x, y in zip(images[f], images[g]))
            assert kendall_distance(f, g) >= d_h

    def test_decoder_complete(self, c4_spec):
        cb = c4_build(c4_spec)
        assert not exhaustive_decode_test(cb, lambda g: c4_decode(g, c4_spec), 1).decode_failures

    def test_overflow_clamped(self, c4_spec):
        # digit 7 has width 2 but radix 7; a value of 6 exceeds 2^2 - 1
        g = phi_inverse((0, 0, 0, 0, 0, 0, 6))
        assert bit_image(g, c4_spec, clamp=True)[-2:] == gray_map(3, 2)
        c4_decode(g, c4_spec)


class TestGreedy:
    def test_perfect_code(self):
        cb = c5_greedy(3, 2, 3)
        assert cb.codewords == ((1, 2, 3), (3, 2, 1))

    @pytest.mark.parametrize("n, k, d", [(5, 3, 3), (6, 3, 4), (5, 2, 4), (6, 4, 3)])
    def test_succeeds(self, n, k, d):
        cb = c5_greedy(n, k, d)
        assert check_systematic(cb)
        assert min_distance(cb) >= d

    def test_failure(self):
        with pytest.raises(ConstructionFailure):
            c5_greedy(3, 2, 4)

    def test_invalid(self):
        with pytest.raises(InvalidArgument):
            c5_greedy(3, 3, 1)

    def test_deterministic(self):
        assert c5_greedy(5, 3, 3).codewords == c5_greedy(5, 3, 3).codewords

    def test_nearest_decoder(self):
        cb = c5_greedy(5, 3, 3)
        for c in cb:
            for g in ball_enumerate(c, 1):
                assert c5_decode(g, cb) == info_part(c, 3)
