#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "egk/ideal_ring.hpp"

using namespace egk;

namespace {

FieldElement rand_fe(const FieldParams& fp, std::mt19937_64& rng) {
    return FieldElement{rng() & fp.mask().lo, rng() & fp.mask().hi};
}

RingElement rand_re(const FieldParams& fp, int n, std::mt19937_64& rng) {
    RingElement v(static_cast<size_t>(n));
    for (auto& e : v) e = rand_fe(fp, rng);
    return v;
}

RingElement unit(int n) {
    RingElement v(static_cast<size_t>(n));
    v[0].set_bit(0);
    return v;
}

int ext_rank(const FieldParams& fp, MatrixExt a) {
    int rank = 0;
    for (int c = 0; c < a.cols && rank < a.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < a.rows; ++r)
            if (!a.at(r, c).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        for (int cc = 0; cc < a.cols; ++cc) std::swap(a.at(rank, cc), a.at(piv, cc));
        FieldElement inv = field_inv(fp, a.at(rank, c));
        for (int cc = 0; cc < a.cols; ++cc) a.at(rank, cc) = field_mul(fp, inv, a.at(rank, cc));
        for (int r = 0; r < a.rows; ++r) {
            if (r == rank || a.at(r, c).is_zero()) continue;
            FieldElement f = a.at(r, c);
            for (int cc = 0; cc < a.cols; ++cc)
                a.at(r, cc) ^= field_mul(fp, f, a.at(rank, cc));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("default moduli are the smallest irreducibles") {
    // low words confirmed against a separate big-integer implementation of
    // the same search
    const std::pair<int, uint64_t> expected[] = {
        {86, 0x65}, {99, 0x4b}, {116, 0x17}, {590, 0x15b}, {830, 0x1c7}, {1130, 0x1cb},
    };
    for (auto [n, low] : expected) {
        RingParams rp = make_ring(n);
        REQUIRE(rp.n == n);
        std::vector<uint64_t> want(size_t(n) / 64 + 1, 0);
        want[0] = low;
        want[size_t(n) / 64] |= uint64_t(1) << (n % 64);
        REQUIRE(rp.modulus == want);
    }
}

TEST_CASE("explicit modulus is validated") {
    CHECK_THROWS_AS(make_ring(2, {0b101}), std::invalid_argument);   // (X+1)^2
    CHECK_THROWS_AS(make_ring(3, {0b111}), std::invalid_argument);   // degree 2, not 3
    CHECK_NOTHROW(make_ring(2, {0b111}));
    CHECK_NOTHROW(make_ring(3, {0b1011}));
}

TEST_CASE("hand-checked product in a tiny ring") {
    FieldParams fp(3);
    RingParams rp = make_ring(2, {0b111});
    FieldElement one;
    one.set_bit(0);
    RingElement u{one, FieldElement{}};
    RingElement v{FieldElement{}, one};
    REQUIRE(ring_mul(fp, rp, u, v) == v);
    // X * X = X^2 = X + 1 mod X^2 + X + 1
    REQUIRE(ring_mul(fp, rp, v, v) == (RingElement{one, one}));
}

TEST_CASE("ring axioms on random elements") {
    FieldParams fp(13);
    RingParams rp = make_ring(8);
    std::mt19937_64 rng(0x51d31u);
    for (int trial = 0; trial < 40; ++trial) {
        RingElement a = rand_re(fp, 8, rng);
        RingElement b = rand_re(fp, 8, rng);
        RingElement c = rand_re(fp, 8, rng);
        REQUIRE(ring_mul(fp, rp, a, unit(8)) == a);
        REQUIRE(ring_mul(fp, rp, a, b) == ring_mul(fp, rp, b, a));
        REQUIRE(ring_mul(fp, rp, a, ring_mul(fp, rp, b, c)) ==
                ring_mul(fp, rp, ring_mul(fp, rp, a, b), c));
        REQUIRE(ring_mul(fp, rp, a, vec_add(b, c)) ==
                vec_add(ring_mul(fp, rp, a, b), ring_mul(fp, rp, a, c)));
    }
    CHECK_THROWS_AS(ring_mul(fp, rp, rand_re(fp, 7, rng), rand_re(fp, 8, rng)),
                    std::invalid_argument);
}

TEST_CASE("ideal matrix matches the ring product") {
    FieldParams fp(13);
    RingParams rp = make_ring(8);
    std::mt19937_64 rng(0x51d32u);
    REQUIRE(ideal_matrix(fp, rp, unit(8)) == me_identity(8));
    RingElement zero(8);
    MatrixExt zm = ideal_matrix(fp, rp, zero);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) REQUIRE(zm.at(i, j).is_zero());
    for (int trial = 0; trial < 25; ++trial) {
        RingElement u = rand_re(fp, 8, rng);
        RingElement v = rand_re(fp, 8, rng);
        RingElement prod = ring_mul(fp, rp, u, v);
        REQUIRE(vec_mul_ext(fp, u, ideal_matrix(fp, rp, v)) == prod);
        REQUIRE(vec_mul_ext(fp, v, ideal_matrix(fp, rp, u)) == prod);
    }
}

TEST_CASE("nonzero ideal matrices are invertible for prime degree") {
    FieldParams fp(11);
    RingParams rp = make_ring(7);
    std::mt19937_64 rng(0x51d33u);
    for (int trial = 0; trial < 15; ++trial) {
        RingElement v = rand_re(fp, 7, rng);
        bool zero = true;
        for (const auto& e : v) zero = zero && e.is_zero();
        if (zero) continue;
        REQUIRE(ext_rank(fp, ideal_matrix(fp, rp, v)) == 7);
    }
}

TEST_CASE("ring-by-matrix product") {
    FieldParams fp(13);
    RingParams rp = make_ring(6);
    std::mt19937_64 rng(0x51d34u);
    for (int trial = 0; trial < 20; ++trial) {
        RingElement z = rand_re(fp, 6, rng);
        MatrixExt mat(6, 4);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 4; ++j) mat.at(i, j) = rand_fe(fp, rng);
        MatrixExt out = vec_ring_mat_mul(fp, rp, z, mat);
        REQUIRE(vec_ring_mat_mul(fp, rp, unit(6), mat) == mat);
        for (int j = 0; j < 4; ++j) {
            RingElement col(6), want(6);
            for (int i = 0; i < 6; ++i) col[size_t(i)] = mat.at(i, j);
            want = ring_mul(fp, rp, z, col);
            for (int i = 0; i < 6; ++i) REQUIRE(out.at(i, j) == want[size_t(i)]);
        }
    }
    MatrixExt bad(5, 4);
    CHECK_THROWS_AS(vec_ring_mat_mul(fp, rp, rand_re(fp, 6, rng), bad), std::invalid_argument);
}

TEST_CASE("fold and unfold") {
    FieldParams fp(13);
    std::mt19937_64 rng(0x51d35u);
    VectorExt v(12);
    for (auto& e : v) e = rand_fe(fp, rng);
    MatrixExt m2 = fold(v, 2);
    REQUIRE(m2.rows == 2);
    REQUIRE(m2.cols == 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 2; ++i) REQUIRE(m2.at(i, j) == v[size_t(2 * j + i)]);
    REQUIRE(unfold(m2) == v);
    MatrixExt m1 = fold(v, 1);
    REQUIRE(m1.rows == 1);
    REQUIRE(unfold(m1) == v);
    REQUIRE(unfold(fold(v, 12)) == v);
    CHECK_THROWS_AS(fold(v, 5), std::invalid_argument);

    VectorExt four(4);
    for (int i = 0; i < 4; ++i) four[size_t(i)].set_bit(unsigned(i));
    MatrixExt f = fold(four, 2);
    REQUIRE(f.at(0, 0) == four[0]);
    REQUIRE(f.at(1, 0) == four[1]);
    REQUIRE(f.at(0, 1) == four[2]);
    REQUIRE(f.at(1, 1) == four[3]);
}
