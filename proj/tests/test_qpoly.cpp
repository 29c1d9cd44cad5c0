#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "egk/qpoly.hpp"

using namespace egk;

namespace {

FieldElement rand_fe(const FieldParams& fp, std::mt19937_64& rng) {
    return FieldElement{rng() & fp.mask().lo, rng() & fp.mask().hi};
}

LinearizedPoly rand_poly(const FieldParams& fp, std::mt19937_64& rng, int max_deg) {
    LinearizedPoly f(size_t(rng() % size_t(max_deg + 1)) + 1);
    for (auto& c : f) c = rand_fe(fp, rng);
    qp_trim(f);
    return f;
}

LinearizedPoly rand_poly_deg(const FieldParams& fp, std::mt19937_64& rng, int deg) {
    LinearizedPoly f(size_t(deg) + 1);
    for (auto& c : f) c = rand_fe(fp, rng);
    while (f[size_t(deg)].is_zero()) f[size_t(deg)] = rand_fe(fp, rng);
    return f;
}

const LinearizedPoly kIdentity{FieldElement{1, 0}};

}  // namespace

TEST_CASE("degree, trim, add") {
    CHECK(qp_deg(LinearizedPoly{}) == -1);
    CHECK(qp_deg(LinearizedPoly{FieldElement{}, FieldElement{}}) == -1);
    CHECK(qp_deg(kIdentity) == 0);
    LinearizedPoly f{FieldElement{3, 0}, FieldElement{}, FieldElement{1, 0}};
    CHECK(qp_deg(f) == 2);
    CHECK(qp_add(f, f).empty());
    LinearizedPoly g = qp_monomial(FieldElement{1, 0}, 2);
    LinearizedPoly s = qp_add(f, g);
    CHECK(qp_deg(s) == 0);  // degree collapse after cancellation
}

TEST_CASE("evaluation is the linearized map") {
    FieldParams fp(5);
    std::mt19937_64 rng(0xe4a1ull);
    for (int trial = 0; trial < 100; ++trial) {
        FieldElement a = rand_fe(fp, rng), b = rand_fe(fp, rng);
        LinearizedPoly f = rand_poly(fp, rng, 6);
        CHECK(qp_eval(fp, kIdentity, a) == a);
        CHECK(qp_eval(fp, f, FieldElement{}).is_zero());
        CHECK(qp_eval(fp, f, a ^ b) == (qp_eval(fp, f, a) ^ qp_eval(fp, f, b)));
    }
}

TEST_CASE("symbolic product") {
    FieldParams fp(5);
    std::mt19937_64 rng(0x5e11ull);
    LinearizedPoly frob = qp_monomial(FieldElement{1, 0}, 1);
    LinearizedPoly frob2 = sym_mul(fp, frob, frob);
    CHECK(frob2 == qp_monomial(FieldElement{1, 0}, 2));
    for (int trial = 0; trial < 100; ++trial) {
        LinearizedPoly f = rand_poly(fp, rng, 5), g = rand_poly(fp, rng, 5);
        CHECK(sym_mul(fp, f, kIdentity) == f);
        CHECK(sym_mul(fp, kIdentity, f) == f);
        CHECK(sym_mul(fp, f, LinearizedPoly{}).empty());
        LinearizedPoly fg = sym_mul(fp, f, g);
        for (int i = 0; i < 20; ++i) {
            FieldElement beta = rand_fe(fp, rng);
            CHECK(qp_eval(fp, fg, beta) == qp_eval(fp, f, qp_eval(fp, g, beta)));
        }
        LinearizedPoly h = rand_poly(fp, rng, 4);
        CHECK(sym_mul(fp, sym_mul(fp, f, g), h) == sym_mul(fp, f, sym_mul(fp, g, h)));
    }
}

TEST_CASE("reduction mod x^[m] - x") {
    FieldParams fp(5);
    std::mt19937_64 rng(0x0f01ull);
    for (int trial = 0; trial < 100; ++trial) {
        LinearizedPoly f = rand_poly(fp, rng, 12);
        LinearizedPoly r = reduce_mod_xm(fp, f);
        CHECK(qp_deg(r) < fp.m);
        for (int i = 0; i < 30; ++i) {
            FieldElement beta = rand_fe(fp, rng);
            CHECK(qp_eval(fp, r, beta) == qp_eval(fp, f, beta));
        }
    }
}

TEST_CASE("right symbolic division") {
    FieldParams fp(5);
    std::mt19937_64 rng(0x4d1ull);
    for (int trial = 0; trial < 200; ++trial) {
        LinearizedPoly a = rand_poly(fp, rng, 8), b = rand_poly(fp, rng, 5);
        if (qp_deg(b) < 0) continue;
        QuotRem qr = rdiv(fp, a, b);
        CHECK(qp_deg(qr.r) < qp_deg(b));
        CHECK(qp_add(sym_mul(fp, qr.q, b), qr.r) == a);
        QuotRem self = rdiv(fp, b, b);
        CHECK(self.q == kIdentity);
        CHECK(self.r.empty());
        if (qp_deg(a) < qp_deg(b)) {
            QuotRem low = rdiv(fp, a, b);
            CHECK(low.q.empty());
            CHECK(low.r == a);
        }
    }
    CHECK_THROWS_AS((void)rdiv(fp, kIdentity, LinearizedPoly{}), std::domain_error);
}

TEST_CASE("left symbolic division") {
    std::mt19937_64 rng(0x1d1ull);
    for (int m : {5, 53}) {
        CAPTURE(m);
        FieldParams fp(m);
        for (int trial = 0; trial < (m == 5 ? 200 : 50); ++trial) {
            LinearizedPoly b = rand_poly(fp, rng, 5), c = rand_poly(fp, rng, 5);
            if (qp_deg(b) < 0) continue;
            // construct-then-divide
            LinearizedPoly a = sym_mul(fp, b, c);
            QuotRem qr = ldiv(fp, a, b);
            CHECK(qr.q == c);
            CHECK(qr.r.empty());
            // reconstruction on unrelated input
            LinearizedPoly d = rand_poly(fp, rng, 8);
            QuotRem qr2 = ldiv(fp, d, b);
            CHECK(qp_deg(qr2.r) < qp_deg(b));
            CHECK(qp_add(sym_mul(fp, b, qr2.q), qr2.r) == d);
            QuotRem self = ldiv(fp, b, b);
            CHECK(self.q == kIdentity);
            CHECK(self.r.empty());
        }
        CHECK_THROWS_AS((void)ldiv(fp, kIdentity, LinearizedPoly{}), std::domain_error);
    }
}

TEST_CASE("euclidean chain with stopping condition") {
    FieldParams fp(5);
    std::mt19937_64 rng(0x1eeaull);
    // d_stop above deg a: no iteration, initialization returned
    LinearizedPoly a0 = rand_poly_deg(fp, rng, 3), b0 = rand_poly_deg(fp, rng, 2);
    LeeaResult init = leea(fp, a0, b0, 4);
    CHECK(init.r == a0);
    CHECK(init.u.empty());
    CHECK(init.v == kIdentity);
    for (int trial = 0; trial < 200; ++trial) {
        int da = 2 + int(rng() % 7);
        int db = 1 + int(rng() % da);
        LinearizedPoly a = rand_poly_deg(fp, rng, da);
        LinearizedPoly b = rand_poly_deg(fp, rng, db);
        int d_stop = 1 + int(rng() % (da + 1));
        LeeaResult res = leea(fp, a, b, d_stop);
        CHECK(qp_deg(res.r) < d_stop);
        CHECK(qp_add(qp_add(sym_mul(fp, res.u, b), sym_mul(fp, res.v, a)), res.r).empty());
        // divisible case: remainder hits zero no later than deg b
        LinearizedPoly prod = sym_mul(fp, b, a);
        LeeaResult div = leea(fp, prod, b, 1);
        CHECK(qp_add(qp_add(sym_mul(fp, div.u, b), sym_mul(fp, div.v, prod)), div.r).empty());
    }
    CHECK_THROWS_AS((void)leea(fp, a0, b0, 0), std::invalid_argument);
}

TEST_CASE("q transform round trips") {
    for (int m : {5, 53}) {
        CAPTURE(m);
        FieldParams fp(m);
        NormalBasis nb = find_normal_basis(fp);
        std::mt19937_64 rng(0x7a45ull + uint64_t(m));
        CHECK(q_transform(fp, LinearizedPoly{}, nb).empty());
        CHECK(inverse_q_transform(fp, LinearizedPoly{}, nb).empty());
        LinearizedPoly idt = q_transform(fp, kIdentity, nb);
        idt.resize(size_t(m));
        for (int j = 0; j < m; ++j) CHECK(idt[size_t(j)] == nb.conj[size_t(j)]);
        for (int trial = 0; trial < 100; ++trial) {
            LinearizedPoly f = rand_poly(fp, rng, m - 1);
            CHECK(inverse_q_transform(fp, q_transform(fp, f, nb), nb) == f);
            CHECK(q_transform(fp, inverse_q_transform(fp, f, nb), nb) == f);
        }
    }
}

TEST_CASE("fast symbolic product matches the naive product") {
    for (int m : {5, 53}) {
        CAPTURE(m);
        FieldParams fp(m);
        NormalBasis nb = find_normal_basis(fp);
        std::mt19937_64 rng(0xfa57ull + uint64_t(m));
        for (int trial = 0; trial < 100; ++trial) {
            LinearizedPoly f = rand_poly(fp, rng, m - 1);
            LinearizedPoly g = rand_poly(fp, rng, m - 1);
            CHECK(fast_sym_mul(fp, f, g, nb) == reduce_mod_xm(fp, sym_mul(fp, f, g)));
            CHECK(fast_sym_mul(fp, f, kIdentity, nb) == f);
            CHECK(fast_sym_mul(fp, LinearizedPoly{}, g, nb).empty());
        }
    }
}

TEST_CASE("multipoint evaluation matches single evaluation") {
    for (int m : {5, 53}) {
        CAPTURE(m);
        FieldParams fp(m);
        NormalBasis nb = find_normal_basis(fp);
        std::mt19937_64 rng(0x34a1ull);
        for (int trial = 0; trial < 100; ++trial) {
            LinearizedPoly f = rand_poly(fp, rng, m - 1);
            std::vector<FieldElement> pts(1 + rng() % 8);
            for (auto& p : pts) p = rand_fe(fp, rng);
            std::vector<FieldElement> out = multipoint_eval(fp, f, pts, nb);
            REQUIRE(out.size() == pts.size());
            for (size_t i = 0; i < pts.size(); ++i)
                CHECK(out[i] == qp_eval(fp, f, pts[i]));
        }
        // zero polynomial, and conjugate points reproduce the transform
        std::vector<FieldElement> conj(nb.conj.begin(), nb.conj.end());
        for (FieldElement e : multipoint_eval(fp, LinearizedPoly{}, conj, nb))
            CHECK(e.is_zero());
        LinearizedPoly f = rand_poly(fp, rng, m - 1);
        std::vector<FieldElement> ev = multipoint_eval(fp, f, conj, nb);
        LinearizedPoly tf = q_transform(fp, f, nb);
        tf.resize(size_t(m));
        for (int j = 0; j < m; ++j) CHECK(ev[size_t(j)] == tf[size_t(j)]);
    }
}
